#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lowdup {

/// Closed vocabulary of generalized instruction families. Operand widths and
/// type-specialized variants (iload/aload_3/fload, iadd/lxor, ...) collapse
/// into one family each. There are deliberately no delimiter families.
enum class Family : std::uint8_t {
  Const,
  Load,
  Store,
  ArrayLoad,
  ArrayStore,
  Arith,
  Conv,
  Cmp,
  Branch,
  Switch,
  Invoke,
  FieldGet,
  FieldPut,
  New,
  NewArray,
  Cast,
  InstanceOf,
  Throw,
  Return,
  Monitor,
  Stack,
};

inline constexpr std::array<Family, 21> kAllFamilies = {
    Family::Const,    Family::Load,     Family::Store,      Family::ArrayLoad,
    Family::ArrayStore, Family::Arith,  Family::Conv,       Family::Cmp,
    Family::Branch,   Family::Switch,   Family::Invoke,     Family::FieldGet,
    Family::FieldPut, Family::New,      Family::NewArray,   Family::Cast,
    Family::InstanceOf, Family::Throw,  Family::Return,     Family::Monitor,
    Family::Stack,
};

std::string_view to_string(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// (owner, name, descriptor) identity of a method. Owners are JVM internal
/// names ("java/lang/Object").
struct MethodKey {
  std::string owner;
  std::string name;
  std::string descriptor;

  auto operator<=>(const MethodKey&) const = default;
  bool operator==(const MethodKey&) const = default;

  /// "owner.name:descriptor"
  std::string str() const;
};

/// Inverse of MethodKey::str(); nullopt if the text has no '.' or ':'.
std::optional<MethodKey> parse_method_key(std::string_view text);

struct Origin {
  std::shared_ptr<const MethodKey> method;
  std::uint32_t offset = 0;
};

/// One generalized instruction. Equality and ordering look at
/// (family, annotation) only; the origin is provenance.
struct Token {
  Family family = Family::Const;
  std::optional<std::string> annotation;
  Origin origin;

  bool operator==(const Token& other) const {
    return family == other.family && annotation == other.annotation;
  }
  std::strong_ordering operator<=>(const Token& other) const {
    if (auto c = family <=> other.family; c != 0) return c;
    return annotation <=> other.annotation;
  }
};

/// "MNEMONIC" or "MNEMONIC:annotation".
std::string format_token(const Token& token);

/// Splits at the first ':'; nullopt if the mnemonic is outside the
/// vocabulary.
std::optional<Token> parse_token(std::string_view text);

struct TokenSequence {
  MethodKey source_method;
  std::vector<Token> tokens;
};

/// Per-method token sequences of one program, plus bookkeeping for
/// abstract-method linearization.
struct MethodTable {
  std::map<MethodKey, std::vector<Token>> sequences;
  std::set<MethodKey> abstract_set;
  std::set<MethodKey> linearized_set;
  /// Methods left out of comparison (synthetic/bridge when excluded); they
  /// remain valid inlining targets.
  std::set<MethodKey> excluded;

  std::size_t total_tokens() const;
};

}  // namespace lowdup
