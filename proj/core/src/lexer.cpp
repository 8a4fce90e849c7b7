#include "lowdup/lexer.hpp"

#include <algorithm>
#include <array>

#include "lowdup/error.hpp"

namespace lowdup {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",
    "catch",    "char",       "class",     "const",     "continue", "default",
    "do",       "double",     "else",      "enum",      "extends",  "false",
    "final",    "finally",    "float",     "for",       "goto",     "if",
    "implements", "import",   "instanceof", "int",      "interface", "long",
    "native",   "new",        "null",      "package",   "private",  "protected",
    "public",   "return",     "short",     "static",    "strictfp", "super",
    "switch",   "synchronized", "this",    "throw",     "throws",   "transient",
    "true",     "try",        "void",      "volatile",  "while",
};

// Longest first so that greedy matching picks ">>>=" over ">>".
constexpr std::array<std::string_view, 39> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "->", "::", "++", "--", "&&", "||",
    "==",   "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "%=", "&=",
    "|=",   "^=",  "<<",  ">>",  "=",  "<",  ">",  "!",  "~",  "?",
    ":",    "+",   "-",   "*",   "/",  "&",  "|",  "^",  "%",
};

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}
bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : src_(text) {}

  std::vector<LexToken> run() {
    std::vector<LexToken> out;
    while (skip_trivia()) {
      const std::size_t start = pos_;
      const std::size_t line = line_;
      const std::size_t col = col_;
      const LexKind kind = scan();
      out.push_back(LexToken{kind, std::string(src_.substr(start, pos_ - start)), start, line, col});
    }
    return out;
  }

 private:
  unsigned char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? static_cast<unsigned char>(src_[pos_ + ahead]) : 0;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }
  std::string where(std::size_t line, std::size_t col) const {
    return std::to_string(line) + ":" + std::to_string(col);
  }

  // Skips whitespace and comments; false at end of input.
  bool skip_trivia() {
    while (!at_end()) {
      if (is_space(peek())) {
        advance();
      } else if (peek() == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (peek() == '/' && peek(1) == '*') {
        const std::size_t line = line_;
        const std::size_t col = col_;
        advance(2);
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end()) {
            throw Error(ErrorKind::UnterminatedComment, "comment opened at " + where(line, col));
          }
          advance();
        }
        advance(2);
      } else {
        return true;
      }
    }
    return false;
  }

  LexKind scan() {
    const unsigned char c = peek();
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_ident_part(peek())) advance();
      const std::string_view word = src_.substr(start, pos_ - start);
      return std::binary_search(kKeywords.begin(), kKeywords.end(), word) ? LexKind::Keyword
                                                                          : LexKind::Identifier;
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
      scan_number();
      return LexKind::Number;
    }
    if (c == '"') {
      if (peek(1) == '"' && peek(2) == '"') {
        scan_text_block();
      } else {
        scan_quoted('"');
      }
      return LexKind::String;
    }
    if (c == '\'') {
      scan_quoted('\'');
      return LexKind::Char;
    }
    if (c == '.' && peek(1) == '.' && peek(2) == '.') {
      advance(3);
      return LexKind::Delimiter;
    }
    if (std::string_view("(){}[];,.@").find(static_cast<char>(c)) != std::string_view::npos) {
      advance();
      return LexKind::Delimiter;
    }
    for (const std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        advance(op.size());
        return LexKind::Operator;
      }
    }
    advance();  // any other byte stands alone
    return LexKind::Operator;
  }

  void scan_number() {
    bool hex = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      hex = true;
      advance(2);
    }
    bool seen_dot = false;
    bool seen_exp = false;
    while (!at_end()) {
      const unsigned char c = peek();
      const bool exp_mark = hex ? (c == 'p' || c == 'P') : (c == 'e' || c == 'E');
      if (exp_mark && !seen_exp) {
        seen_exp = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
      } else if (c == '.' && !seen_dot && !seen_exp && peek(1) != '.') {
        seen_dot = true;
        advance();
      } else if (is_ident_part(c) && c < 0x80) {
        advance();  // digits, underscores, hex digits, type suffixes
      } else {
        break;
      }
    }
  }

  void scan_quoted(char quote) {
    const std::size_t line = line_;
    const std::size_t col = col_;
    advance();
    while (true) {
      if (at_end() || peek() == '\n') {
        throw Error(ErrorKind::UnterminatedString,
                    std::string(quote == '"' ? "string" : "char") + " literal opened at " +
                        where(line, col));
      }
      if (peek() == '\\') {
        advance();
        if (at_end() || peek() == '\n') continue;  // reported on the next turn
        advance();
        continue;
      }
      if (peek() == static_cast<unsigned char>(quote)) {
        advance();
        return;
      }
      advance();
    }
  }

  void scan_text_block() {
    const std::size_t line = line_;
    const std::size_t col = col_;
    advance(3);
    while (!(peek() == '"' && peek(1) == '"' && peek(2) == '"')) {
      if (at_end()) {
        throw Error(ErrorKind::UnterminatedString, "text block opened at " + where(line, col));
      }
      if (peek() == '\\') advance();
      advance();
    }
    advance(3);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::string_view to_string(LexKind kind) {
  switch (kind) {
    case LexKind::Keyword: return "keyword";
    case LexKind::Identifier: return "identifier";
    case LexKind::Number: return "number";
    case LexKind::String: return "string";
    case LexKind::Char: return "char";
    case LexKind::Operator: return "operator";
    case LexKind::Delimiter: return "delimiter";
  }
  return "?";
}

std::span<const std::string_view> keywords() { return kKeywords; }

std::vector<LexToken> lex_source(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  return Lexer(text).run();
}

}  // namespace lowdup
