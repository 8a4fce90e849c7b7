#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lowdup/token.hpp"

namespace lowdup {

inline constexpr std::uint16_t kMinMajorVersion = 45;
inline constexpr std::uint16_t kMaxMajorVersion = 61;

enum class PoolTag : std::uint8_t {
  Utf8 = 1,
  Integer = 3,
  Float = 4,
  Long = 5,
  Double = 6,
  Class = 7,
  String = 8,
  FieldRef = 9,
  MethodRef = 10,
  InterfaceMethodRef = 11,
  NameAndType = 12,
  MethodHandle = 15,
  MethodType = 16,
  Dynamic = 17,
  InvokeDynamic = 18,
  Module = 19,
  Package = 20,
};

struct PoolEntry {
  PoolTag tag = PoolTag::Utf8;
  std::string text;          // Utf8, decoded to standard UTF-8
  std::int64_t integer = 0;  // Integer, Long
  float float_value = 0.0f;
  double double_value = 0.0;
  std::uint16_t first = 0;   // primary cross-index
  std::uint16_t second = 0;  // NameAndType descriptor / ref name_and_type
  std::uint8_t ref_kind = 0; // MethodHandle
};

/// Resolved field or method reference.
struct MemberRef {
  std::string owner;
  std::string name;
  std::string descriptor;
};

/// Constant pool with 1-based indices. Slot 0 and the slot following a Long
/// or Double are unusable; reading them is a MalformedPool error.
class ConstantPool {
 public:
  ConstantPool() = default;
  explicit ConstantPool(std::vector<std::optional<PoolEntry>> slots);

  std::size_t slot_count() const { return slots_.size(); }

  /// Throws MalformedPool if `index` is out of range, unusable, or (when
  /// given) not tagged `expected`.
  const PoolEntry& at(std::uint16_t index) const;
  const PoolEntry& at(std::uint16_t index, PoolTag expected) const;

  const std::string& utf8(std::uint16_t index) const;
  const std::string& class_name(std::uint16_t index) const;
  /// Field, method, or interface-method reference.
  MemberRef member_ref(std::uint16_t index) const;

 private:
  std::vector<std::optional<PoolEntry>> slots_;
};

enum class ClassKind { Class, AbstractClass, Interface };

std::string_view to_string(ClassKind kind);

inline constexpr std::uint16_t kAccBridge = 0x0040;
inline constexpr std::uint16_t kAccNative = 0x0100;
inline constexpr std::uint16_t kAccInterface = 0x0200;
inline constexpr std::uint16_t kAccAbstract = 0x0400;
inline constexpr std::uint16_t kAccSynthetic = 0x1000;

struct RawMethod {
  std::string name;
  std::string descriptor;
  std::uint16_t access_flags = 0;
  bool is_abstract = false;
  /// Raw bytecode; absent exactly when the method is abstract.
  std::optional<std::vector<std::uint8_t>> code;
  /// Pre-extracted tokens (fixtures only). Extraction is bypassed when set.
  std::optional<std::vector<Token>> tokens;

  bool is_synthetic() const {
    return (access_flags & (kAccSynthetic | kAccBridge)) != 0;
  }
  bool operator==(const RawMethod& other) const;
};

struct RawClass {
  std::string name;
  ClassKind kind = ClassKind::Class;
  std::optional<std::string> super_name;
  std::vector<std::string> interface_names;
  std::vector<RawMethod> methods;
  ConstantPool pool;
  std::uint16_t major_version = 0;

  bool operator==(const RawClass& other) const;
};

/// Parses one complete class file image.
///
/// Interprets the constant pool, access flags, this/super/interfaces and
/// method Code attributes; every other attribute is skipped. Never reads
/// past the input: malformed data always surfaces as lowdup::Error
/// (BadMagic, TruncatedFile, UnsupportedVersion, MalformedPool,
/// MalformedClass).
RawClass parse_class_file(std::span<const std::uint8_t> bytes);

}  // namespace lowdup
