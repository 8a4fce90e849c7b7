#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lowdup/classfile.hpp"
#include "lowdup/token.hpp"

namespace lowdup {

struct MethodRecord {
  std::size_t class_index = 0;
  std::size_t method_index = 0;
};

/// One submission: a resolved set of classes. Immutable once assembled.
class ProgramModel {
 public:
  ProgramModel() = default;

  /// Classes in declaration order.
  const std::vector<RawClass>& classes() const { return classes_; }
  /// Referenced supertypes that are not part of the program.
  const std::set<std::string>& externals() const { return externals_; }
  const std::map<MethodKey, MethodRecord>& methods_view() const { return methods_; }

  const RawClass* find_class(const std::string& name) const;
  const RawMethod* find_method(const MethodKey& key) const;
  const RawClass& owner_of(const MethodRecord& record) const {
    return classes_[record.class_index];
  }
  const RawMethod& method(const MethodRecord& record) const {
    return classes_[record.class_index].methods[record.method_index];
  }

  bool operator==(const ProgramModel& other) const;

 private:
  friend ProgramModel assemble_program(std::vector<RawClass> classes);

  std::vector<RawClass> classes_;
  std::map<std::string, std::size_t> index_;
  std::set<std::string> externals_;
  std::map<MethodKey, MethodRecord> methods_;
};

/// Resolves hierarchy references and indexes every method. Throws
/// DuplicateClass for repeated class names (and for repeated method
/// signatures within a class).
ProgramModel assemble_program(std::vector<RawClass> classes);

}  // namespace lowdup
