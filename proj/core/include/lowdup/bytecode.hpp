#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lowdup {

/// One decoded JVM instruction. `operands` holds the immediate operands in
/// encoding order (pool indices, local slots, signed branch offsets, switch
/// tables as [default, low, high, targets...] or
/// [default, npairs, key, target, ...]).
struct Instruction {
  std::uint8_t opcode = 0;
  bool wide = false;
  std::uint32_t offset = 0;
  std::vector<std::int64_t> operands;
};

namespace op {
inline constexpr std::uint8_t kNop = 0x00;
inline constexpr std::uint8_t kLdc = 0x12;
inline constexpr std::uint8_t kLdcW = 0x13;
inline constexpr std::uint8_t kLdc2W = 0x14;
inline constexpr std::uint8_t kGoto = 0xa7;
inline constexpr std::uint8_t kTableSwitch = 0xaa;
inline constexpr std::uint8_t kLookupSwitch = 0xab;
inline constexpr std::uint8_t kInvokeDynamic = 0xba;
inline constexpr std::uint8_t kNewArray = 0xbc;
inline constexpr std::uint8_t kWide = 0xc4;
inline constexpr std::uint8_t kGotoW = 0xc8;
inline constexpr std::uint8_t kLastValid = 0xc9;
}  // namespace op

/// Mnemonic from the JVM instruction set ("iconst_0", "invokevirtual"), or
/// "<invalid>" for unassigned opcodes.
std::string_view opcode_name(std::uint8_t opcode);

bool is_valid_opcode(std::uint8_t opcode);

/// Linear decode of a Code attribute body, including wide forms and
/// tableswitch/lookupswitch padding. Offsets are strictly increasing.
/// Throws BadOpcode or TruncatedCode.
std::vector<Instruction> decode_bytecode(std::span<const std::uint8_t> code);

}  // namespace lowdup
