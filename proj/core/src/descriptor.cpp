#include "lowdup/descriptor.hpp"

namespace lowdup {
namespace {

constexpr std::size_t kMaxArrayDimensions = 255;

// Consumes one field type starting at `pos`; returns the end position or
// npos when malformed.
std::size_t scan_field_type(std::string_view text, std::size_t pos) {
  std::size_t dims = 0;
  while (pos < text.size() && text[pos] == '[') {
    ++pos;
    if (++dims > kMaxArrayDimensions) return std::string_view::npos;
  }
  if (pos >= text.size()) return std::string_view::npos;
  switch (text[pos]) {
    case 'B': case 'C': case 'D': case 'F':
    case 'I': case 'J': case 'S': case 'Z':
      return pos + 1;
    case 'L': {
      const std::size_t semi = text.find(';', pos + 1);
      if (semi == std::string_view::npos || semi == pos + 1) {
        return std::string_view::npos;
      }
      const std::string_view name = text.substr(pos + 1, semi - pos - 1);
      if (name.find_first_of(".[") != std::string_view::npos) {
        return std::string_view::npos;
      }
      return semi + 1;
    }
    default:
      return std::string_view::npos;
  }
}

}  // namespace

std::optional<MethodDescriptor> parse_method_descriptor(std::string_view text) {
  if (text.empty() || text.front() != '(') return std::nullopt;
  MethodDescriptor out;
  std::size_t pos = 1;
  while (pos < text.size() && text[pos] != ')') {
    const std::size_t end = scan_field_type(text, pos);
    if (end == std::string_view::npos) return std::nullopt;
    out.parameters.emplace_back(text.substr(pos, end - pos));
    pos = end;
  }
  if (pos >= text.size()) return std::nullopt;
  ++pos;  // ')'
  if (pos < text.size() && text[pos] == 'V') {
    if (pos + 1 != text.size()) return std::nullopt;
    out.return_type = "V";
    return out;
  }
  const std::size_t end = scan_field_type(text, pos);
  if (end == std::string_view::npos || end != text.size()) return std::nullopt;
  out.return_type = std::string(text.substr(pos));
  return out;
}

bool is_field_descriptor(std::string_view text) {
  return !text.empty() && scan_field_type(text, 0) == text.size();
}

}  // namespace lowdup
