#include "lowdup/token.hpp"

#include <algorithm>

namespace lowdup {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Const: return "CONST";
    case Family::Load: return "LOAD";
    case Family::Store: return "STORE";
    case Family::ArrayLoad: return "ARRAY_LOAD";
    case Family::ArrayStore: return "ARRAY_STORE";
    case Family::Arith: return "ARITH";
    case Family::Conv: return "CONV";
    case Family::Cmp: return "CMP";
    case Family::Branch: return "BRANCH";
    case Family::Switch: return "SWITCH";
    case Family::Invoke: return "INVOKE";
    case Family::FieldGet: return "FIELD_GET";
    case Family::FieldPut: return "FIELD_PUT";
    case Family::New: return "NEW";
    case Family::NewArray: return "NEWARRAY";
    case Family::Cast: return "CAST";
    case Family::InstanceOf: return "INSTANCEOF";
    case Family::Throw: return "THROW";
    case Family::Return: return "RETURN";
    case Family::Monitor: return "MONITOR";
    case Family::Stack: return "STACK";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  const auto it = std::find_if(kAllFamilies.begin(), kAllFamilies.end(),
                               [&](Family f) { return to_string(f) == name; });
  if (it == kAllFamilies.end()) return std::nullopt;
  return *it;
}

std::string MethodKey::str() const {
  std::string out;
  out.reserve(owner.size() + name.size() + descriptor.size() + 2);
  out.append(owner).append(".").append(name).append(":").append(descriptor);
  return out;
}

std::optional<MethodKey> parse_method_key(std::string_view text) {
  const std::size_t dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0) return std::nullopt;
  const std::size_t colon = text.find(':', dot + 1);
  if (colon == std::string_view::npos || colon == dot + 1) return std::nullopt;
  return MethodKey{std::string(text.substr(0, dot)),
                   std::string(text.substr(dot + 1, colon - dot - 1)),
                   std::string(text.substr(colon + 1))};
}

std::string format_token(const Token& token) {
  std::string out(to_string(token.family));
  if (token.annotation) out.append(":").append(*token.annotation);
  return out;
}

std::optional<Token> parse_token(std::string_view text) {
  const std::size_t colon = text.find(':');
  const auto family = family_from_name(text.substr(0, colon));
  if (!family) return std::nullopt;
  Token token;
  token.family = *family;
  if (colon != std::string_view::npos) {
    token.annotation = std::string(text.substr(colon + 1));
  }
  return token;
}

std::size_t MethodTable::total_tokens() const {
  std::size_t total = 0;
  for (const auto& [key, tokens] : sequences) {
    if (!excluded.contains(key)) total += tokens.size();
  }
  return total;
}

}  // namespace lowdup
