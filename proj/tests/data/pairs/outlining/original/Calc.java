public class Calc {
    static int compute(int a, int b) {
        int total = a + b;
        return total * 2;
    }
}
