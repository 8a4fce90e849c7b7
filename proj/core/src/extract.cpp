#include "lowdup/extract.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <system_error>

#include "lowdup/error.hpp"

namespace lowdup {
namespace {

template <typename T>
std::string shortest_decimal(T value) {
  if (std::isnan(value)) return "NaN";
  if (std::isinf(value)) return value < 0 ? "-Infinity" : "Infinity";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "?";
  std::string text(buf, end);
  // Keep floating literals distinct from integer ones ("2.0", not "2").
  if (text.find_first_of(".e") == std::string::npos) text += ".0";
  return text;
}

std::string literal_text(const ConstantPool& pool, std::uint16_t index) {
  const PoolEntry& e = pool.at(index);
  switch (e.tag) {
    case PoolTag::Integer:
    case PoolTag::Long:
      return std::to_string(e.integer);
    case PoolTag::Float:
      return shortest_decimal(e.float_value);
    case PoolTag::Double:
      return shortest_decimal(e.double_value);
    case PoolTag::String:
      return quote_literal(pool.utf8(e.first));
    case PoolTag::Class:
      return pool.utf8(e.first);
    case PoolTag::MethodType:
      return pool.utf8(e.first);
    case PoolTag::MethodHandle: {
      const MemberRef ref = pool.member_ref(e.first);
      return ref.owner + "." + ref.name + ":" + ref.descriptor;
    }
    case PoolTag::Dynamic: {
      const PoolEntry& nat = pool.at(e.second, PoolTag::NameAndType);
      return pool.utf8(nat.first) + ":" + pool.utf8(nat.second);
    }
    default:
      throw Error(ErrorKind::MalformedPool,
                  "ldc operand " + std::to_string(index) + " is not a loadable constant");
  }
}

std::string primitive_array_type(std::int64_t atype, std::uint32_t offset) {
  switch (atype) {
    case 4: return "boolean";
    case 5: return "char";
    case 6: return "float";
    case 7: return "double";
    case 8: return "byte";
    case 9: return "short";
    case 10: return "int";
    case 11: return "long";
    default:
      throw Error(ErrorKind::BadOpcode, "newarray with bad element type " +
                                            std::to_string(atype) + " at offset " +
                                            std::to_string(offset));
  }
}

std::uint16_t pool_index(const Instruction& insn) {
  return static_cast<std::uint16_t>(insn.operands.at(0));
}

}  // namespace

std::optional<Family> generalize(const Instruction& insn) {
  const std::uint8_t o = insn.opcode;
  if (o == op::kNop || o == op::kGoto || o == op::kGotoW) return std::nullopt;
  if (o <= 0x14) return Family::Const;                    // aconst_null .. ldc2_w
  if (o <= 0x2d) return Family::Load;                     // iload .. aload_3
  if (o <= 0x35) return Family::ArrayLoad;                // iaload .. saload
  if (o <= 0x4e) return Family::Store;                    // istore .. astore_3
  if (o <= 0x56) return Family::ArrayStore;               // iastore .. sastore
  if (o <= 0x5f) return Family::Stack;                    // pop .. swap
  if (o <= 0x84) return Family::Arith;                    // iadd .. lxor, iinc
  if (o <= 0x93) return Family::Conv;                     // i2l .. i2s
  if (o <= 0x98) return Family::Cmp;                      // lcmp .. dcmpg
  if (o <= 0xa9) return Family::Branch;                   // ifeq .. if_acmpne, jsr, ret
  if (o <= 0xab) return Family::Switch;
  if (o <= 0xb1) return Family::Return;
  if (o == 0xb2 || o == 0xb4) return Family::FieldGet;
  if (o == 0xb3 || o == 0xb5) return Family::FieldPut;
  if (o <= 0xba) return Family::Invoke;
  switch (o) {
    case 0xbb: return Family::New;
    case 0xbc: case 0xbd: case 0xc5: return Family::NewArray;
    case 0xbe: return Family::ArrayLoad;                  // arraylength
    case 0xbf: return Family::Throw;
    case 0xc0: return Family::Cast;
    case 0xc1: return Family::InstanceOf;
    case 0xc2: case 0xc3: return Family::Monitor;
    case 0xc6: case 0xc7: case 0xc9: return Family::Branch;  // ifnull, ifnonnull, jsr_w
    default:
      break;
  }
  throw Error(ErrorKind::BadOpcode, "no family for opcode " + std::to_string(o));
}

std::optional<std::string> interpret(const Instruction& insn, const ConstantPool& pool) {
  switch (insn.opcode) {
    case op::kLdc:
    case op::kLdcW:
    case op::kLdc2W:
      return literal_text(pool, pool_index(insn));
    case 0xb2: case 0xb3: case 0xb4: case 0xb5: {
      const MemberRef ref = pool.member_ref(pool_index(insn));
      return ref.owner + "." + ref.name;
    }
    case 0xb6: case 0xb7: case 0xb8: case 0xb9: {
      const MemberRef ref = pool.member_ref(pool_index(insn));
      return ref.owner + "." + ref.name + ":" + ref.descriptor;
    }
    case op::kInvokeDynamic: {
      const PoolEntry& indy = pool.at(pool_index(insn), PoolTag::InvokeDynamic);
      const PoolEntry& nat = pool.at(indy.second, PoolTag::NameAndType);
      return pool.utf8(nat.first) + ":" + pool.utf8(nat.second);
    }
    case 0xbb: case 0xbd: case 0xc0: case 0xc1: case 0xc5:
      return pool.class_name(pool_index(insn));
    case op::kNewArray:
      return primitive_array_type(insn.operands.at(0), insn.offset);
    default:
      return std::nullopt;
  }
}

std::string quote_literal(std::string_view text) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('"');
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          out += "\\u00";
          out.push_back(kHex[c >> 4]);
          out.push_back(kHex[c & 0xf]);
        } else {
          out.push_back(ch);
        }
    }
  }
  out.push_back('"');
  return out;
}

TokenSequence extract_method_tokens(const RawMethod& method, const RawClass& owner) {
  TokenSequence seq;
  seq.source_method = MethodKey{owner.name, method.name, method.descriptor};
  if (method.tokens) {
    seq.tokens = *method.tokens;
    return seq;
  }
  if (method.is_abstract || !method.code) return seq;

  auto origin = std::make_shared<const MethodKey>(seq.source_method);
  for (const Instruction& insn : decode_bytecode(*method.code)) {
    const auto family = generalize(insn);
    if (!family) continue;
    Token token;
    token.family = *family;
    token.annotation = interpret(insn, owner.pool);
    token.origin = Origin{origin, insn.offset};
    seq.tokens.push_back(std::move(token));
  }
  return seq;
}

MethodTable extract_program(const ProgramModel& program, bool include_synthetic) {
  MethodTable table;
  for (const auto& [key, record] : program.methods_view()) {
    const RawMethod& method = program.method(record);
    const RawClass& owner = program.owner_of(record);
    try {
      table.sequences.emplace(key, extract_method_tokens(method, owner).tokens);
    } catch (const Error& e) {
      throw e.with_context(key.str());
    }
    if (method.is_abstract) table.abstract_set.insert(key);
    if (!include_synthetic && method.is_synthetic()) table.excluded.insert(key);
  }
  return table;
}

}  // namespace lowdup
