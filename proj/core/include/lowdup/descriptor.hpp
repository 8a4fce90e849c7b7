#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lowdup {

/// A method descriptor split into its field-type components, e.g.
/// "(ILjava/lang/String;)V" -> parameters {"I", "Ljava/lang/String;"},
/// return_type "V".
struct MethodDescriptor {
  std::vector<std::string> parameters;
  std::string return_type;

  bool operator==(const MethodDescriptor&) const = default;
};

/// Returns nullopt when `text` does not follow the JVM method descriptor
/// grammar.
std::optional<MethodDescriptor> parse_method_descriptor(std::string_view text);

bool is_field_descriptor(std::string_view text);

}  // namespace lowdup
