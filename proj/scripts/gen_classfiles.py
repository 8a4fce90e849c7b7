#!/usr/bin/env python3
"""Writes the binary class-file fixtures under tests/data/classfiles/ and
their expected dump-tokens listings (lam mode, no inlining).

The expected listings come from the assembler's own record of what it
emitted, mapped through the family table below. They do not depend on the
C++ decoder. Pass --verify to load and run the classes on a JVM
(java on PATH or $JAVA).
"""

import argparse
import os
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

from jasm import (ACC_ABSTRACT, ACC_BRIDGE, ACC_INTERFACE, ACC_PUBLIC, ACC_STATIC,
                  ACC_SUPER, ACC_SYNTHETIC, ClassBuilder, Code)

FAMILY_BY_NAME = {}


def _families(family, names):
    for n in names.split():
        FAMILY_BY_NAME[n] = family


_families("CONST", "aconst_null iconst_m1 iconst_0 iconst_1 iconst_2 iconst_3 iconst_4 iconst_5 "
          "lconst_0 lconst_1 fconst_0 fconst_1 fconst_2 dconst_0 dconst_1 bipush sipush ldc ldc_w ldc2_w")
_families("LOAD", " ".join(f"{t}load {t}load_0 {t}load_1 {t}load_2 {t}load_3" for t in "ilfda"))
_families("STORE", " ".join(f"{t}store {t}store_0 {t}store_1 {t}store_2 {t}store_3" for t in "ilfda"))
_families("ARRAY_LOAD", "iaload laload faload daload aaload baload caload saload arraylength")
_families("ARRAY_STORE", "iastore lastore fastore dastore aastore bastore castore sastore")
_families("STACK", "pop pop2 dup dup_x1 dup_x2 dup2 dup2_x1 dup2_x2 swap")
_families("ARITH", " ".join(f"{t}{o}" for o in ("add", "sub", "mul", "div", "rem", "neg") for t in "ilfd")
          + " ishl lshl ishr lshr iushr lushr iand land ior lor ixor lxor iinc")
_families("CONV", "i2l i2f i2d l2i l2f l2d f2i f2l f2d d2i d2l d2f i2b i2c i2s")
_families("CMP", "lcmp fcmpl fcmpg dcmpl dcmpg")
_families("BRANCH", "ifeq ifne iflt ifge ifgt ifle if_icmpeq if_icmpne if_icmplt if_icmpge if_icmpgt "
          "if_icmple if_acmpeq if_acmpne ifnull ifnonnull jsr ret jsr_w")
_families("SWITCH", "tableswitch lookupswitch")
_families("RETURN", "ireturn lreturn freturn dreturn areturn return")
_families("FIELD_GET", "getstatic getfield")
_families("FIELD_PUT", "putstatic putfield")
_families("INVOKE", "invokevirtual invokespecial invokestatic invokeinterface invokedynamic")
_families("NEW", "new")
_families("NEWARRAY", "newarray anewarray multianewarray")
_families("CAST", "checkcast")
_families("INSTANCEOF", "instanceof")
_families("THROW", "athrow")
_families("MONITOR", "monitorenter monitorexit")
DROPPED = {"nop", "goto", "goto_w"}


def quote(text):
    out = ['"']
    for ch in text:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append("\\u%04x" % ord(ch))
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def literal(kind, value):
    if kind in ("int", "long"):
        return str(value)
    if kind == "float":
        return str(np.float32(value))
    if kind == "double":
        return repr(float(value))
    if kind == "string":
        return quote(value)
    return value  # class


def annotation(opname, operand):
    if opname.startswith("invoke") or opname in ("getstatic", "putstatic", "getfield", "putfield"):
        owner, name, desc = operand
        return f"{owner}.{name}:{desc}" if opname.startswith("invoke") else f"{owner}.{name}"
    if opname in ("ldc", "ldc_w", "ldc2_w"):
        return literal(*operand)
    if opname in ("new", "anewarray", "checkcast", "instanceof", "multianewarray", "newarray"):
        return operand
    return None


def expected_dump(classes):
    rows = []
    for cb in classes:
        for name, desc, listing in cb.listing:
            key = f"{cb.name}.{name}:{desc}"
            for offset, opname, operand in listing or []:
                if opname in DROPPED:
                    continue
                ann = annotation(opname, operand)
                token = FAMILY_BY_NAME[opname] + (f":{ann}" if ann is not None else "")
                rows.append(((cb.name, name, desc), key, offset, token))
    # Sorted by method key, then in bytecode order within a method.
    rows.sort(key=lambda r: r[0])
    return "".join(f"{key}\t{offset}\t{token}\n" for _, key, offset, token in rows)


def init(cb, super_name="java/lang/Object"):
    c = Code(1, 1)
    c("aload_0")("invokespecial", (super_name, "<init>", "()V"))("return")
    cb.method("<init>", "()V", ACC_PUBLIC, c)



# -- programs -------------------------------------------------------------

def empty_program():
    a = ClassBuilder("A", access=ACC_SUPER)
    init(a)
    return [a], None


def interface_program():
    i = ClassBuilder("I", access=ACC_INTERFACE | ACC_ABSTRACT, major=52)
    i.method("f", "()V", ACC_PUBLIC | ACC_ABSTRACT)
    return [i], None


def literals_program():
    r = ClassBuilder("Ret")
    init(r)
    c = Code(1, 1)
    c("iconst_0")("ireturn")
    r.method("f", "()I", 0, c)
    c = Code(1, 0)
    c("ldc", ("string", "x"))("areturn")
    r.method("s", "()Ljava/lang/String;", ACC_STATIC, c)
    c = Code(6, 0)
    c("ldc", ("float", 1.5))("f2d")
    c("ldc2_w", ("double", 0.1))("dadd")
    c("ldc2_w", ("long", 123456789012))("l2d")("dadd")
    c("ldc2_w", ("double", 1e20))("dadd")
    c("ldc", ("float", -0.25))("f2d")("dadd")
    c("dreturn")
    r.method("mix", "()D", ACC_STATIC, c)
    c = Code(4, 0)
    c("ldc", ("int", 100000))("sipush", 1000)("iadd")("bipush", -5)("iadd")("iconst_m1")("iadd")
    c("ldc_w", ("int", -2147483648))("iadd")("ireturn")
    r.method("ints", "()I", ACC_STATIC, c)
    c = Code(1, 0)
    c("ldc", ("string", "tab\there \"q\" \\ é \u0000 \U0001F600 中"))("areturn")
    r.method("escapes", "()Ljava/lang/String;", ACC_STATIC, c)
    c = Code(1, 0)
    c("ldc", ("class", "Ret"))("areturn")
    r.method("self", "()Ljava/lang/Class;", ACC_STATIC, c)
    c = Code(3, 1)
    out = ("java/lang/System", "out", "Ljava/io/PrintStream;")
    c("getstatic", out)("invokestatic", ("Ret", "mix", "()D"))
    c("invokevirtual", ("java/io/PrintStream", "println", "(D)V"))
    c("getstatic", out)("invokestatic", ("Ret", "ints", "()I"))
    c("invokevirtual", ("java/io/PrintStream", "println", "(I)V"))
    c("getstatic", out)("invokestatic", ("Ret", "s", "()Ljava/lang/String;"))
    c("invokevirtual", ("java/io/PrintStream", "println", "(Ljava/lang/String;)V"))
    c("return")
    r.method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC, c)
    return [r], "Ret"


def shapes_program():
    shape = ClassBuilder("Shape", access=ACC_PUBLIC | ACC_SUPER | ACC_ABSTRACT)
    init(shape)
    shape.method("area", "()D", ACC_PUBLIC | ACC_ABSTRACT)
    c = Code(3, 1)
    sb = "java/lang/StringBuilder"
    c("new", sb)("dup")("invokespecial", (sb, "<init>", "()V"))
    c("ldc", ("string", "area="))("invokevirtual", (sb, "append", f"(Ljava/lang/String;)L{sb};"))
    c("aload_0")("invokevirtual", ("Shape", "area", "()D"))
    c("invokevirtual", (sb, "append", f"(D)L{sb};"))
    c("invokevirtual", (sb, "toString", "()Ljava/lang/String;"))("areturn")
    shape.method("describe", "()Ljava/lang/String;", ACC_PUBLIC, c)

    circle = ClassBuilder("Circle", super_name="Shape")
    circle.field("r", "D")
    c = Code(3, 3)
    c("aload_0")("invokespecial", ("Shape", "<init>", "()V"))
    c("aload_0")("dload_1")("putfield", ("Circle", "r", "D"))("return")
    circle.method("<init>", "(D)V", ACC_PUBLIC, c)
    c = Code(4, 1)
    c("ldc2_w", ("double", 3.14159))("aload_0")("getfield", ("Circle", "r", "D"))("dmul")
    c("aload_0")("getfield", ("Circle", "r", "D"))("dmul")("dreturn")
    circle.method("area", "()D", ACC_PUBLIC, c)

    square = ClassBuilder("Square", super_name="Shape")
    square.field("side", "D")
    c = Code(3, 3)
    c("aload_0")("invokespecial", ("Shape", "<init>", "()V"))
    c("aload_0")("dload_1")("putfield", ("Square", "side", "D"))("return")
    square.method("<init>", "(D)V", ACC_PUBLIC, c)
    c = Code(4, 1)
    c("aload_0")("getfield", ("Square", "side", "D"))
    c("aload_0")("getfield", ("Square", "side", "D"))("dmul")("dreturn")
    square.method("area", "()D", ACC_PUBLIC, c)

    main = ClassBuilder("Main")
    init(main)
    c = Code(4, 2)
    out = ("java/lang/System", "out", "Ljava/io/PrintStream;")
    for cls, v in (("Circle", 2.0), ("Square", 3.0)):
        c("new", cls)("dup")("ldc2_w", ("double", v))("invokespecial", (cls, "<init>", "(D)V"))("astore_1")
        c("getstatic", out)("aload_1")("invokevirtual", ("Shape", "describe", "()Ljava/lang/String;"))
        c("invokevirtual", ("java/io/PrintStream", "println", "(Ljava/lang/String;)V"))
    c("return")
    main.method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC, c)
    return [shape, circle, square, main], "Main"


def control_program():
    # Major 49: branchy code without StackMapTable frames.
    k = ClassBuilder("demo/Control", major=49)
    init(k)

    c = Code(2, 1)
    c("iload_0")("tableswitch", ("DEF", 0, ["C0", "C1", "C2"]))
    c.label("C0")("iconst_1")("ireturn")
    c.label("C1")("iconst_2")("ireturn")
    c.label("C2")("iconst_3")("ireturn")
    c.label("DEF")("iload_0")("lookupswitch", ("NONE", [(1000, "K3"), (10, "K1"), (100, "K2")]))
    c.label("K1")("bipush", 10)("ireturn")
    c.label("K2")("bipush", 100)("ireturn")
    c.label("K3")("sipush", 1000)("ireturn")
    c.label("NONE")("iconst_m1")("ireturn")
    k.method("classify", "(I)I", ACC_STATIC, c)

    c = Code(2, 3)
    c("nop")("iconst_0")("istore_1")("iconst_0")("istore_2")("goto", "COND")
    c.label("BODY")("iload_1")("iload_2")("iadd")("istore_1")("iinc", (2, 1))
    c.label("COND")("iload_2")("iload_0")("if_icmplt", "BODY")
    c("goto_w", "END")("nop")
    c.label("END")("iload_1")("ireturn")
    k.method("loop", "(I)I", ACC_STATIC, c)

    c = Code(2, 301)
    c("sipush", 7)("dup")("istore", 3)("istore", 300, True)("iinc", (300, 1000), True)
    c("iload", 300, True)("iload", 3)("iadd")("ireturn")
    k.method("wideLocals", "()I", ACC_STATIC, c)

    c = Code(4, 2)
    c("iconst_3")("newarray", "int")("astore_0")
    c("aload_0")("iconst_0")("bipush", 7)("iastore")
    c("aload_0")("arraylength")("anewarray", "java/lang/String")("astore_1")
    c("aload_1")("iconst_0")("ldc", ("string", "s"))("aastore")
    c("iconst_2")("iconst_3")("multianewarray", ("[[I", 2))("pop")
    c("aload_0")("iconst_0")("iaload")("i2l")("l2i")("i2b")("pop")
    c("aload_1")("areturn")
    k.method("arrays", "()[Ljava/lang/Object;", ACC_STATIC, c)

    c = Code(1, 1)
    c("aload_0")("instanceof", "java/lang/String")("ifeq", "NO")
    c("aload_0")("checkcast", "java/lang/String")("areturn")
    c.label("NO")("aload_0")("ifnonnull", "NN")("aconst_null")("areturn")
    c.label("NN")("ldc", ("string", "none"))("areturn")
    k.method("cast", "(Ljava/lang/Object;)Ljava/lang/String;", ACC_STATIC, c)

    c = Code(2, 2)
    c("aload_0")("dup")("astore_1")("monitorenter")("aload_1")("monitorexit")("return")
    k.method("sync", "(Ljava/lang/Object;)V", ACC_STATIC, c)

    c = Code(3, 0)
    ise = "java/lang/IllegalStateException"
    c("new", ise)("dup")("ldc", ("string", "boom"))
    c("invokespecial", (ise, "<init>", "(Ljava/lang/String;)V"))("athrow")
    k.method("fail", "()V", ACC_STATIC, c)

    c = Code(4, 4)
    c("lload_0")("lload_2")("lcmp")("ifge", "GE")("lload_2")("lreturn")
    c.label("GE")("lload_0")("lreturn")
    k.method("max", "(JJ)J", ACC_STATIC, c)

    c = Code(5, 1)
    out = ("java/lang/System", "out", "Ljava/io/PrintStream;")
    ps = "java/io/PrintStream"
    for arg, name in ((2, "classify"), (100, "classify"), (5, "classify")):
        c("getstatic", out)("bipush", arg)("invokestatic", ("demo/Control", name, "(I)I"))
        c("invokevirtual", (ps, "println", "(I)V"))
    c("getstatic", out)("bipush", 10)("invokestatic", ("demo/Control", "loop", "(I)I"))
    c("invokevirtual", (ps, "println", "(I)V"))
    c("getstatic", out)("invokestatic", ("demo/Control", "wideLocals", "()I"))
    c("invokevirtual", (ps, "println", "(I)V"))
    c("getstatic", out)("invokestatic", ("demo/Control", "arrays", "()[Ljava/lang/Object;"))
    c("arraylength")("invokevirtual", (ps, "println", "(I)V"))
    c("getstatic", out)("ldc", ("string", "str"))
    c("invokestatic", ("demo/Control", "cast", "(Ljava/lang/Object;)Ljava/lang/String;"))
    c("invokevirtual", (ps, "println", "(Ljava/lang/String;)V"))
    c("ldc", ("string", "lock"))("invokestatic", ("demo/Control", "sync", "(Ljava/lang/Object;)V"))
    c("getstatic", out)("lconst_1")("ldc2_w", ("long", 5))
    c("invokestatic", ("demo/Control", "max", "(JJ)J"))("invokevirtual", (ps, "println", "(J)V"))
    c("return")
    k.method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC, c)
    return [k], "demo.Control"


def bridge_program():
    box = ClassBuilder("Box", interfaces=["java/lang/Comparable"])
    box.field("v", "I")
    c = Code(2, 2)
    c("aload_0")("invokespecial", ("java/lang/Object", "<init>", "()V"))
    c("aload_0")("iload_1")("putfield", ("Box", "v", "I"))("return")
    box.method("<init>", "(I)V", ACC_PUBLIC, c)
    c = Code(2, 2)
    c("aload_0")("getfield", ("Box", "v", "I"))("aload_1")("getfield", ("Box", "v", "I"))("isub")("ireturn")
    box.method("compareTo", "(LBox;)I", ACC_PUBLIC, c)
    c = Code(2, 2)
    c("aload_0")("aload_1")("checkcast", "Box")("invokevirtual", ("Box", "compareTo", "(LBox;)I"))("ireturn")
    box.method("compareTo", "(Ljava/lang/Object;)I", ACC_PUBLIC | ACC_BRIDGE | ACC_SYNTHETIC, c)

    main = ClassBuilder("Main")
    init(main)
    c = Code(5, 1)
    c("getstatic", ("java/lang/System", "out", "Ljava/io/PrintStream;"))
    c("new", "Box")("dup")("iconst_3")("invokespecial", ("Box", "<init>", "(I)V"))
    c("new", "Box")("dup")("iconst_1")("invokespecial", ("Box", "<init>", "(I)V"))
    c("invokeinterface", ("java/lang/Comparable", "compareTo", "(Ljava/lang/Object;)I", 2))
    c("invokevirtual", ("java/io/PrintStream", "println", "(I)V"))("return")
    main.method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC, c)
    return [box, main], "Main"


PROGRAMS = {
    "empty": (empty_program, None),
    "interface": (interface_program, None),
    "literals": (literals_program,
                 "1.0000000012345678E20\n-2147382654\nx\n"),
    "shapes": (shapes_program, "area=12.56636\narea=9.0\n"),
    "control": (control_program, "3\n100\n-1\n45\n1014\n3\nstr\n5\n"),
    "bridge": (bridge_program, "2\n"),
}


def write_program(root, name, builder):
    classes, main = builder()
    target = root / name
    if target.exists():
        shutil.rmtree(target)
    for cb in classes:
        path = target / (cb.name + ".class")
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(cb.bytes())
    (root / f"{name}.lam.tokens").write_text(expected_dump(classes), encoding="utf-8", newline="\n")
    return classes, main


PROBES = {
    # Programs without a main class are loaded through a throwaway probe.
    "empty": lambda: _probe([("new", "A"), ("dup",), ("invokespecial", ("A", "<init>", "()V")), ("pop",)]),
    "interface": lambda: _probe([("ldc", ("class", "I")),
                                 ("invokevirtual", ("java/lang/Class", "isInterface", "()Z")), ("pop",)]),
}


def _probe(steps):
    p = ClassBuilder("Probe")
    c = Code(3, 1)
    for step in steps:
        c(*step)
    c("getstatic", ("java/lang/System", "out", "Ljava/io/PrintStream;"))
    c("ldc", ("string", "ok"))("invokevirtual", ("java/io/PrintStream", "println", "(Ljava/lang/String;)V"))
    c("return")
    p.method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC, c)
    return p


def verify(root, name, main, expected):
    java = os.environ.get("JAVA", "java")
    with tempfile.TemporaryDirectory() as tmp:
        shutil.copytree(root / name, tmp, dirs_exist_ok=True)
        if main is None:
            Path(tmp, "Probe.class").write_bytes(PROBES[name]().bytes())
            main, expected = "Probe", "ok\n"
        res = subprocess.run([java, "-Xverify:all", "-cp", tmp, main], capture_output=True, text=True)
    if res.returncode != 0 or res.stdout != expected:
        sys.exit(f"{name}: JVM check failed\nstdout={res.stdout!r}\nstderr={res.stderr}")
    print(f"{name}: verified on JVM")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests/data/classfiles"))
    ap.add_argument("--verify", action="store_true")
    args = ap.parse_args()
    root = Path(args.out)
    root.mkdir(parents=True, exist_ok=True)
    for name, (builder, expected) in PROGRAMS.items():
        _, main_class = write_program(root, name, builder)
        if args.verify:
            verify(root, name, main_class, expected)


if __name__ == "__main__":
    main()
