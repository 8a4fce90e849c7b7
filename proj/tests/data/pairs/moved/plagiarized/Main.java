public class Main {
    public static void main(String[] args) {
        int x = Helper.twice(21);
        System.out.println(x);
    }
}

class Helper {
    static int twice(int v) {
        return v * 2;
    }
}
