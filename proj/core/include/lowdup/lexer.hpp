#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lowdup {

enum class LexKind { Keyword, Identifier, Number, String, Char, Operator, Delimiter };

std::string_view to_string(LexKind kind);

struct LexToken {
  LexKind kind = LexKind::Identifier;
  std::string text;
  std::size_t offset = 0;  // byte offset in the (BOM-stripped) input
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const LexToken& other) const {
    return kind == other.kind && text == other.text;
  }
};

/// Reserved words recognized as keywords, in alphabetical order.
std::span<const std::string_view> keywords();

/// Lexes C-family (Java-flavoured) source. Comments and whitespace are
/// dropped; delimiters and operators are kept; string, text-block and char
/// literals are single tokens. A leading UTF-8 BOM is skipped. Throws
/// UnterminatedString or UnterminatedComment with line:column.
std::vector<LexToken> lex_source(std::string_view text);

}  // namespace lowdup
