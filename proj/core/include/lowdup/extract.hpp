#pragma once

#include <optional>
#include <string>

#include "lowdup/bytecode.hpp"
#include "lowdup/classfile.hpp"
#include "lowdup/program.hpp"
#include "lowdup/token.hpp"

namespace lowdup {

/// Instruction generalization: maps every valid opcode onto one family of
/// the closed vocabulary. Returns nullopt for the dropped instructions
/// (nop, goto, goto_w), which never become tokens.
std::optional<Family> generalize(const Instruction& insn);

/// Instruction interpretation: a readable operand annotation.
///
///   invoke*            -> "Owner.name:descriptor"
///   invokedynamic      -> "name:descriptor"
///   field access       -> "Owner.name"
///   ldc / ldc_w / ldc2_w -> literal text (42, 2.5, "hi") or class name
///   new, anewarray, checkcast, instanceof, multianewarray -> class name
///   newarray           -> primitive element type ("int")
///
/// Everything else, including local slots and branch offsets, gets no
/// annotation.
std::optional<std::string> interpret(const Instruction& insn, const ConstantPool& pool);

/// Renders a string literal as a quoted, escaped annotation.
std::string quote_literal(std::string_view text);

/// Decode, generalize and interpret one method. Abstract methods yield an
/// empty sequence; fixture methods return their stored tokens.
TokenSequence extract_method_tokens(const RawMethod& method, const RawClass& owner);

/// Base method table of a program: one entry per method, abstract methods
/// empty and recorded in abstract_set. With `include_synthetic` false,
/// synthetic and bridge methods are marked excluded.
MethodTable extract_program(const ProgramModel& program, bool include_synthetic = true);

}  // namespace lowdup
