"""Minimal JVM class file assembler used to produce the committed binary
test fixtures under tests/data/classfiles/.

Besides the class bytes it records, per instruction, the offset, opcode
name and the readable operand it was given. gen_classfiles.py turns that
listing into the expected dump-tokens output, independently of the C++
decoder.
"""

import struct

OPCODES = """nop aconst_null iconst_m1 iconst_0 iconst_1 iconst_2 iconst_3 iconst_4 iconst_5 lconst_0 lconst_1 fconst_0 fconst_1 fconst_2 dconst_0 dconst_1
bipush sipush ldc ldc_w ldc2_w iload lload fload dload aload iload_0 iload_1 iload_2 iload_3 lload_0 lload_1
lload_2 lload_3 fload_0 fload_1 fload_2 fload_3 dload_0 dload_1 dload_2 dload_3 aload_0 aload_1 aload_2 aload_3 iaload laload
faload daload aaload baload caload saload istore lstore fstore dstore astore istore_0 istore_1 istore_2 istore_3 lstore_0
lstore_1 lstore_2 lstore_3 fstore_0 fstore_1 fstore_2 fstore_3 dstore_0 dstore_1 dstore_2 dstore_3 astore_0 astore_1 astore_2 astore_3 iastore
lastore fastore dastore aastore bastore castore sastore pop pop2 dup dup_x1 dup_x2 dup2 dup2_x1 dup2_x2 swap
iadd ladd fadd dadd isub lsub fsub dsub imul lmul fmul dmul idiv ldiv fdiv ddiv
irem lrem frem drem ineg lneg fneg dneg ishl lshl ishr lshr iushr lushr iand land
ior lor ixor lxor iinc i2l i2f i2d l2i l2f l2d f2i f2l f2d d2i d2l
d2f i2b i2c i2s lcmp fcmpl fcmpg dcmpl dcmpg ifeq ifne iflt ifge ifgt ifle if_icmpeq
if_icmpne if_icmplt if_icmpge if_icmpgt if_icmple if_acmpeq if_acmpne goto jsr ret tableswitch lookupswitch ireturn lreturn freturn dreturn
areturn return getstatic putstatic getfield putfield invokevirtual invokespecial invokestatic invokeinterface invokedynamic new newarray anewarray arraylength athrow
checkcast instanceof monitorenter monitorexit wide multianewarray ifnull ifnonnull goto_w jsr_w""".split()
OP = {name: code for code, name in enumerate(OPCODES)}

ACC_PUBLIC = 0x0001
ACC_STATIC = 0x0008
ACC_FINAL = 0x0010
ACC_SUPER = 0x0020
ACC_BRIDGE = 0x0040
ACC_INTERFACE = 0x0200
ACC_ABSTRACT = 0x0400
ACC_SYNTHETIC = 0x1000

ATYPE = {"boolean": 4, "char": 5, "float": 6, "double": 7, "byte": 8, "short": 9, "int": 10, "long": 11}


def modified_utf8(text):
    out = bytearray()
    for ch in text:
        cp = ord(ch)
        units = [cp] if cp < 0x10000 else [0xD800 + ((cp - 0x10000) >> 10), 0xDC00 + ((cp - 0x10000) & 0x3FF)]
        for u in units:
            if u != 0 and u < 0x80:
                out.append(u)
            elif u < 0x800:
                out += bytes([0xC0 | (u >> 6), 0x80 | (u & 0x3F)])
            else:
                out += bytes([0xE0 | (u >> 12), 0x80 | ((u >> 6) & 0x3F), 0x80 | (u & 0x3F)])
    return bytes(out)


class Pool:
    def __init__(self):
        self.entries = []  # (key, bytes)
        self.index = {}
        self.next = 1

    def _add(self, key, payload, wide=False):
        if key in self.index:
            return self.index[key]
        idx = self.next
        self.index[key] = idx
        self.entries.append(payload)
        self.next += 2 if wide else 1
        return idx

    def utf8(self, s):
        b = modified_utf8(s)
        return self._add(("utf8", s), b"\x01" + struct.pack(">H", len(b)) + b)

    def cls(self, name):
        return self._add(("class", name), b"\x07" + struct.pack(">H", self.utf8(name)))

    def string(self, s):
        return self._add(("string", s), b"\x08" + struct.pack(">H", self.utf8(s)))

    def integer(self, v):
        return self._add(("int", v), b"\x03" + struct.pack(">i", v))

    def float(self, v):
        return self._add(("float", v), b"\x04" + struct.pack(">f", v))

    def long(self, v):
        return self._add(("long", v), b"\x05" + struct.pack(">q", v), wide=True)

    def double(self, v):
        return self._add(("double", v), b"\x06" + struct.pack(">d", v), wide=True)

    def nat(self, name, desc):
        return self._add(("nat", name, desc), b"\x0c" + struct.pack(">HH", self.utf8(name), self.utf8(desc)))

    def ref(self, tag, owner, name, desc):
        key = ("ref", tag, owner, name, desc)
        return self._add(key, bytes([tag]) + struct.pack(">HH", self.cls(owner), self.nat(name, desc)))

    def bytes(self):
        return struct.pack(">H", self.next) + b"".join(self.entries)


class Label:
    def __init__(self, name):
        self.name = name


class Code:
    """Instruction list. Operands are symbolic; see ClassBuilder.assemble_code."""

    def __init__(self, max_stack, max_locals):
        self.max_stack = max_stack
        self.max_locals = max_locals
        self.items = []  # ("label", name) or ("insn", opname, operand, wide)

    def label(self, name):
        self.items.append(("label", name))
        return self

    def __call__(self, opname, operand=None, wide=False):
        assert opname in OP, opname
        self.items.append(("insn", opname, operand, wide))
        return self


class ClassBuilder:
    def __init__(self, name, super_name="java/lang/Object", interfaces=(), access=ACC_PUBLIC | ACC_SUPER, major=52):
        self.name = name
        self.super_name = super_name
        self.interfaces = list(interfaces)
        self.access = access
        self.major = major
        self.pool = Pool()
        self.fields = []
        self.methods = []  # (access, name, desc, code or None)
        self.listing = []  # (name, desc, [(offset, opname, readable operand)])

    def field(self, name, desc, access=0):
        self.fields.append((access, name, desc))

    def method(self, name, desc, access=ACC_PUBLIC, code=None):
        self.methods.append((access, name, desc, code))

    # -- code assembly ---------------------------------------------------
    def _insn_size(self, opname, operand, wide, offset):
        op = OP[opname]
        if wide:
            return 6 if opname == "iinc" else 4
        if opname in ("tableswitch", "lookupswitch"):
            pad = (4 - (offset + 1) % 4) % 4
            if opname == "tableswitch":
                _default, _low, targets = operand
                return 1 + pad + 12 + 4 * len(targets)
            _default, pairs = operand
            return 1 + pad + 8 + 8 * len(pairs)
        fixed = {
            "bipush": 2, "sipush": 3, "ldc": 2, "ldc_w": 3, "ldc2_w": 3,
            "iinc": 3, "goto_w": 5, "jsr_w": 5, "invokeinterface": 5, "invokedynamic": 5,
            "newarray": 2, "multianewarray": 4,
        }
        if opname in fixed:
            return fixed[opname]
        if opname in ("iload", "lload", "fload", "dload", "aload",
                      "istore", "lstore", "fstore", "dstore", "astore", "ret"):
            return 2
        if 0x99 <= op <= 0xA8 or opname in ("ifnull", "ifnonnull"):
            return 3
        if opname in ("getstatic", "putstatic", "getfield", "putfield", "invokevirtual",
                      "invokespecial", "invokestatic", "new", "anewarray", "checkcast", "instanceof"):
            return 3
        return 1

    def _constant(self, operand):
        kind, value = operand
        return {"int": self.pool.integer, "float": self.pool.float, "long": self.pool.long,
                "double": self.pool.double, "string": self.pool.string, "class": self.pool.cls}[kind](value)

    def assemble_code(self, code):
        offsets = {}
        layout = []
        pos = 0
        for item in code.items:
            if item[0] == "label":
                offsets[item[1]] = pos
                continue
            _, opname, operand, wide = item
            layout.append((pos, opname, operand, wide))
            pos += self._insn_size(opname, operand, wide, pos)
        out = bytearray()
        listing = []
        for pos, opname, operand, wide in layout:
            assert len(out) == pos
            if wide:
                out.append(OP["wide"])
            out.append(OP[opname])
            readable = operand
            if opname in ("bipush",):
                out += struct.pack(">b", operand)
            elif opname == "sipush":
                out += struct.pack(">h", operand)
            elif opname == "ldc":
                idx = self._constant(operand)
                assert idx < 256
                out.append(idx)
            elif opname in ("ldc_w", "ldc2_w"):
                out += struct.pack(">H", self._constant(operand))
            elif opname in ("iload", "lload", "fload", "dload", "aload",
                            "istore", "lstore", "fstore", "dstore", "astore", "ret"):
                out += struct.pack(">H" if wide else ">B", operand)
            elif opname == "iinc":
                slot, delta = operand
                out += struct.pack(">Hh" if wide else ">Bb", slot, delta)
            elif opname in ("getstatic", "putstatic", "getfield", "putfield"):
                out += struct.pack(">H", self.pool.ref(9, *operand))
            elif opname in ("invokevirtual", "invokespecial", "invokestatic"):
                out += struct.pack(">H", self.pool.ref(10, *operand))
            elif opname == "invokeinterface":
                owner, name, desc, count = operand
                out += struct.pack(">HBB", self.pool.ref(11, owner, name, desc), count, 0)
                readable = (owner, name, desc)
            elif opname in ("new", "anewarray", "checkcast", "instanceof"):
                out += struct.pack(">H", self.pool.cls(operand))
            elif opname == "multianewarray":
                cls, dims = operand
                out += struct.pack(">HB", self.pool.cls(cls), dims)
                readable = cls
            elif opname == "newarray":
                out.append(ATYPE[operand])
            elif opname in ("goto_w", "jsr_w"):
                out += struct.pack(">i", offsets[operand] - pos)
            elif opname == "tableswitch":
                default, low, targets = operand
                while (len(out)) % 4 != 0:
                    out.append(0)
                out += struct.pack(">iii", offsets[default] - pos, low, low + len(targets) - 1)
                for t in targets:
                    out += struct.pack(">i", offsets[t] - pos)
            elif opname == "lookupswitch":
                default, pairs = operand
                while (len(out)) % 4 != 0:
                    out.append(0)
                out += struct.pack(">ii", offsets[default] - pos, len(pairs))
                for key, t in sorted(pairs):
                    out += struct.pack(">ii", key, offsets[t] - pos)
            elif 0x99 <= OP[opname] <= 0xA8 or opname in ("ifnull", "ifnonnull"):
                out += struct.pack(">h", offsets[operand] - pos)
            else:
                assert operand is None, (opname, operand)
            listing.append((pos, opname, readable))
        return bytes(out), listing

    # -- serialization ----------------------------------------------------
    def _attribute(self, name, payload):
        return struct.pack(">HI", self.pool.utf8(name), len(payload)) + payload

    def bytes(self):
        body = bytearray()
        this_idx = self.pool.cls(self.name)
        super_idx = self.pool.cls(self.super_name) if self.super_name else 0
        iface_idx = [self.pool.cls(i) for i in self.interfaces]
        fields = bytearray()
        for access, name, desc in self.fields:
            fields += struct.pack(">HHHH", access, self.pool.utf8(name), self.pool.utf8(desc), 0)
        methods = bytearray()
        for access, name, desc, code in self.methods:
            attrs = []
            if code is not None:
                code_bytes, listing = self.assemble_code(code)
                self.listing.append((name, desc, listing))
                # A LineNumberTable exercises nested-attribute skipping.
                lnt = self._attribute("LineNumberTable", struct.pack(">HHH", 1, 0, 1))
                payload = struct.pack(">HHI", code.max_stack, code.max_locals, len(code_bytes))
                payload += code_bytes + struct.pack(">H", 0) + struct.pack(">H", 1) + lnt
                attrs.append(self._attribute("Code", payload))
            else:
                self.listing.append((name, desc, None))
            if access & ACC_SYNTHETIC:
                attrs.append(self._attribute("Synthetic", b""))
            methods += struct.pack(">HHHH", access, self.pool.utf8(name), self.pool.utf8(desc), len(attrs))
            methods += b"".join(attrs)
        source = self._attribute("SourceFile", struct.pack(">H", self.pool.utf8(self.name.split("/")[-1] + ".java")))
        body += struct.pack(">HHH", self.access, this_idx, super_idx)
        body += struct.pack(">H", len(iface_idx)) + b"".join(struct.pack(">H", i) for i in iface_idx)
        body += struct.pack(">H", len(self.fields)) + fields
        body += struct.pack(">H", len(self.methods)) + methods
        body += struct.pack(">H", 1) + source
        head = struct.pack(">IHH", 0xCAFEBABE, 0, self.major)
        return head + self.pool.bytes() + bytes(body)
