#include "lowdup/program.hpp"

#include "lowdup/error.hpp"

namespace lowdup {

const RawClass* ProgramModel::find_class(const std::string& name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? nullptr : &classes_[it->second];
}

const RawMethod* ProgramModel::find_method(const MethodKey& key) const {
  const auto it = methods_.find(key);
  return it == methods_.end() ? nullptr : &method(it->second);
}

bool ProgramModel::operator==(const ProgramModel& other) const {
  return classes_ == other.classes_ && externals_ == other.externals_;
}

ProgramModel assemble_program(std::vector<RawClass> classes) {
  ProgramModel program;
  program.classes_ = std::move(classes);
  for (std::size_t c = 0; c < program.classes_.size(); ++c) {
    const RawClass& cls = program.classes_[c];
    if (!program.index_.emplace(cls.name, c).second) {
      throw Error(ErrorKind::DuplicateClass, "class " + cls.name + " declared twice");
    }
    for (std::size_t m = 0; m < cls.methods.size(); ++m) {
      const RawMethod& method = cls.methods[m];
      MethodKey key{cls.name, method.name, method.descriptor};
      if (!program.methods_.emplace(std::move(key), MethodRecord{c, m}).second) {
        throw Error(ErrorKind::DuplicateClass,
                    "method " + cls.name + "." + method.name + method.descriptor +
                        " declared twice");
      }
    }
  }
  for (const RawClass& cls : program.classes_) {
    auto note = [&](const std::string& name) {
      if (!program.index_.contains(name)) program.externals_.insert(name);
    };
    if (cls.super_name) note(*cls.super_name);
    for (const auto& iface : cls.interface_names) note(iface);
  }
  return program;
}

}  // namespace lowdup
