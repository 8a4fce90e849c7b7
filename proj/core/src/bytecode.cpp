#include "lowdup/bytecode.hpp"

#include <array>
#include <string>

#include "lowdup/error.hpp"

namespace lowdup {
namespace {

constexpr std::array<std::string_view, 0xca> kOpcodeNames = {
    "nop", "aconst_null", "iconst_m1", "iconst_0", "iconst_1", "iconst_2",
    "iconst_3", "iconst_4", "iconst_5", "lconst_0", "lconst_1", "fconst_0",
    "fconst_1", "fconst_2", "dconst_0", "dconst_1", "bipush", "sipush",
    "ldc", "ldc_w", "ldc2_w", "iload", "lload", "fload",
    "dload", "aload", "iload_0", "iload_1", "iload_2", "iload_3",
    "lload_0", "lload_1", "lload_2", "lload_3", "fload_0", "fload_1",
    "fload_2", "fload_3", "dload_0", "dload_1", "dload_2", "dload_3",
    "aload_0", "aload_1", "aload_2", "aload_3", "iaload", "laload",
    "faload", "daload", "aaload", "baload", "caload", "saload",
    "istore", "lstore", "fstore", "dstore", "astore", "istore_0",
    "istore_1", "istore_2", "istore_3", "lstore_0", "lstore_1", "lstore_2",
    "lstore_3", "fstore_0", "fstore_1", "fstore_2", "fstore_3", "dstore_0",
    "dstore_1", "dstore_2", "dstore_3", "astore_0", "astore_1", "astore_2",
    "astore_3", "iastore", "lastore", "fastore", "dastore", "aastore",
    "bastore", "castore", "sastore", "pop", "pop2", "dup",
    "dup_x1", "dup_x2", "dup2", "dup2_x1", "dup2_x2", "swap",
    "iadd", "ladd", "fadd", "dadd", "isub", "lsub",
    "fsub", "dsub", "imul", "lmul", "fmul", "dmul",
    "idiv", "ldiv", "fdiv", "ddiv", "irem", "lrem",
    "frem", "drem", "ineg", "lneg", "fneg", "dneg",
    "ishl", "lshl", "ishr", "lshr", "iushr", "lushr",
    "iand", "land", "ior", "lor", "ixor", "lxor",
    "iinc", "i2l", "i2f", "i2d", "l2i", "l2f",
    "l2d", "f2i", "f2l", "f2d", "d2i", "d2l",
    "d2f", "i2b", "i2c", "i2s", "lcmp", "fcmpl",
    "fcmpg", "dcmpl", "dcmpg", "ifeq", "ifne", "iflt",
    "ifge", "ifgt", "ifle", "if_icmpeq", "if_icmpne", "if_icmplt",
    "if_icmpge", "if_icmpgt", "if_icmple", "if_acmpeq", "if_acmpne", "goto",
    "jsr", "ret", "tableswitch", "lookupswitch", "ireturn", "lreturn",
    "freturn", "dreturn", "areturn", "return", "getstatic", "putstatic",
    "getfield", "putfield", "invokevirtual", "invokespecial", "invokestatic", "invokeinterface",
    "invokedynamic", "new", "newarray", "anewarray", "arraylength", "athrow",
    "checkcast", "instanceof", "monitorenter", "monitorexit", "wide", "multianewarray",
    "ifnull", "ifnonnull", "goto_w", "jsr_w",
};

class CodeReader {
 public:
  explicit CodeReader(std::span<const std::uint8_t> code) : code_(code) {}

  std::size_t position() const { return pos_; }
  bool done() const { return pos_ >= code_.size(); }

  std::uint8_t u1() {
    need(1);
    return code_[pos_++];
  }
  std::int64_t s1() { return static_cast<std::int8_t>(u1()); }
  std::uint16_t u2() {
    need(2);
    const auto v = static_cast<std::uint16_t>((code_[pos_] << 8) | code_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  std::int64_t s2() { return static_cast<std::int16_t>(u2()); }
  std::int64_t s4() {
    need(4);
    const std::uint32_t v = (std::uint32_t{code_[pos_]} << 24) |
                            (std::uint32_t{code_[pos_ + 1]} << 16) |
                            (std::uint32_t{code_[pos_ + 2]} << 8) |
                            std::uint32_t{code_[pos_ + 3]};
    pos_ += 4;
    return static_cast<std::int32_t>(v);
  }
  void align4() {
    while (pos_ % 4 != 0) u1();
  }
  void need(std::size_t n) const {
    if (n > code_.size() - pos_) {
      throw Error(ErrorKind::TruncatedCode,
                  "operand bytes run past the end of code at offset " +
                      std::to_string(pos_));
    }
  }

 private:
  std::span<const std::uint8_t> code_;
  std::size_t pos_ = 0;
};

bool is_local_slot_op(std::uint8_t opcode) {
  return (opcode >= 0x15 && opcode <= 0x19) || (opcode >= 0x36 && opcode <= 0x3a) ||
         opcode == 0xa9;
}

[[noreturn]] void bad_opcode(std::uint8_t opcode, std::size_t offset, const char* why) {
  throw Error(ErrorKind::BadOpcode, std::string(why) + " 0x" +
                                        "0123456789abcdef"[opcode >> 4] +
                                        "0123456789abcdef"[opcode & 0xf] +
                                        " at offset " + std::to_string(offset));
}

void decode_operands(CodeReader& in, Instruction& insn) {
  auto& ops = insn.operands;
  const std::uint8_t opc = insn.opcode;
  if (is_local_slot_op(opc)) {
    ops.push_back(insn.wide ? in.u2() : in.u1());
    return;
  }
  switch (opc) {
    case 0x10: ops.push_back(in.s1()); return;                // bipush
    case 0x11: ops.push_back(in.s2()); return;                // sipush
    case 0x12: ops.push_back(in.u1()); return;                // ldc
    case 0x13: case 0x14: ops.push_back(in.u2()); return;     // ldc_w, ldc2_w
    case 0x84:                                                // iinc
      if (insn.wide) {
        ops.push_back(in.u2());
        ops.push_back(in.s2());
      } else {
        ops.push_back(in.u1());
        ops.push_back(in.s1());
      }
      return;
    case 0xc8: case 0xc9: ops.push_back(in.s4()); return;     // goto_w, jsr_w
    case 0xaa: {                                              // tableswitch
      in.align4();
      const std::int64_t def = in.s4();
      const std::int64_t low = in.s4();
      const std::int64_t high = in.s4();
      if (high < low) bad_opcode(opc, insn.offset, "tableswitch high < low for");
      const std::uint64_t count = static_cast<std::uint64_t>(high - low) + 1;
      in.need(count * 4);
      ops = {def, low, high};
      ops.reserve(3 + count);
      for (std::uint64_t i = 0; i < count; ++i) ops.push_back(in.s4());
      return;
    }
    case 0xab: {                                              // lookupswitch
      in.align4();
      const std::int64_t def = in.s4();
      const std::int64_t npairs = in.s4();
      if (npairs < 0) bad_opcode(opc, insn.offset, "negative lookupswitch size for");
      in.need(static_cast<std::uint64_t>(npairs) * 8);
      ops = {def, npairs};
      ops.reserve(2 + 2 * static_cast<std::size_t>(npairs));
      for (std::int64_t i = 0; i < npairs; ++i) {
        ops.push_back(in.s4());
        ops.push_back(in.s4());
      }
      return;
    }
    case 0xb2: case 0xb3: case 0xb4: case 0xb5:               // field access
    case 0xb6: case 0xb7: case 0xb8:                          // invoke
    case 0xbb: case 0xbd: case 0xc0: case 0xc1:               // new, anewarray, casts
      ops.push_back(in.u2());
      return;
    case 0xb9:                                                // invokeinterface
      ops.push_back(in.u2());
      ops.push_back(in.u1());
      in.u1();
      return;
    case 0xba:                                                // invokedynamic
      ops.push_back(in.u2());
      in.u2();
      return;
    case 0xbc: ops.push_back(in.u1()); return;                // newarray
    case 0xc5:                                                // multianewarray
      ops.push_back(in.u2());
      ops.push_back(in.u1());
      return;
    default:
      break;
  }
  if ((opc >= 0x99 && opc <= 0xa8) || opc == 0xc6 || opc == 0xc7) {
    ops.push_back(in.s2());  // 16-bit branch
  }
}

}  // namespace

std::string_view opcode_name(std::uint8_t opcode) {
  return is_valid_opcode(opcode) ? kOpcodeNames[opcode] : std::string_view("<invalid>");
}

bool is_valid_opcode(std::uint8_t opcode) { return opcode <= op::kLastValid; }

std::vector<Instruction> decode_bytecode(std::span<const std::uint8_t> code) {
  std::vector<Instruction> out;
  CodeReader in(code);
  while (!in.done()) {
    Instruction insn;
    insn.offset = static_cast<std::uint32_t>(in.position());
    insn.opcode = in.u1();
    if (!is_valid_opcode(insn.opcode)) bad_opcode(insn.opcode, insn.offset, "invalid opcode");
    if (insn.opcode == op::kWide) {
      insn.wide = true;
      insn.opcode = in.u1();
      if (!is_local_slot_op(insn.opcode) && insn.opcode != 0x84) {
        bad_opcode(insn.opcode, insn.offset, "wide prefix cannot modify");
      }
    }
    decode_operands(in, insn);
    out.push_back(std::move(insn));
  }
  return out;
}

}  // namespace lowdup
