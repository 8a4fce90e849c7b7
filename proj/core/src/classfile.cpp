#include "lowdup/classfile.hpp"

#include <algorithm>
#include <cstring>

#include "lowdup/descriptor.hpp"
#include "lowdup/error.hpp"

namespace lowdup {
namespace {

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  std::uint8_t u1() {
    need(1);
    return bytes_[pos_++];
  }
  std::uint16_t u2() {
    need(2);
    const auto v = static_cast<std::uint16_t>((bytes_[pos_] << 8) | bytes_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  std::uint32_t u4() {
    need(4);
    const std::uint32_t v = (std::uint32_t{bytes_[pos_]} << 24) |
                            (std::uint32_t{bytes_[pos_ + 1]} << 16) |
                            (std::uint32_t{bytes_[pos_ + 2]} << 8) |
                            std::uint32_t{bytes_[pos_ + 3]};
    pos_ += 4;
    return v;
  }
  std::span<const std::uint8_t> take(std::size_t n) {
    need(n);
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  void skip(std::size_t n) { take(n); }

 private:
  void need(std::size_t n) const {
    if (n > remaining()) {
      throw Error(ErrorKind::TruncatedFile,
                  "need " + std::to_string(n) + " bytes at offset " +
                      std::to_string(pos_) + ", " + std::to_string(remaining()) +
                      " left");
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Class files store "modified UTF-8": NUL as C0 80 and supplementary
// characters as surrogate pairs. Decode into standard UTF-8.
std::string decode_modified_utf8(std::span<const std::uint8_t> in) {
  std::vector<std::uint32_t> units;
  units.reserve(in.size());
  std::size_t i = 0;
  auto bad = [] {
    return Error(ErrorKind::MalformedPool, "invalid modified UTF-8 sequence");
  };
  while (i < in.size()) {
    const std::uint8_t b = in[i];
    if (b == 0 || b >= 0xF0) throw bad();
    if (b < 0x80) {
      units.push_back(b);
      i += 1;
    } else if ((b & 0xE0) == 0xC0) {
      if (i + 1 >= in.size() || (in[i + 1] & 0xC0) != 0x80) throw bad();
      units.push_back(((b & 0x1Fu) << 6) | (in[i + 1] & 0x3Fu));
      i += 2;
    } else if ((b & 0xF0) == 0xE0) {
      if (i + 2 >= in.size() || (in[i + 1] & 0xC0) != 0x80 ||
          (in[i + 2] & 0xC0) != 0x80) {
        throw bad();
      }
      units.push_back(((b & 0x0Fu) << 12) | ((in[i + 1] & 0x3Fu) << 6) |
                      (in[i + 2] & 0x3Fu));
      i += 3;
    } else {
      throw bad();
    }
  }
  std::string out;
  out.reserve(in.size());
  for (std::size_t k = 0; k < units.size(); ++k) {
    const std::uint32_t u = units[k];
    if (u >= 0xD800 && u <= 0xDBFF && k + 1 < units.size() &&
        units[k + 1] >= 0xDC00 && units[k + 1] <= 0xDFFF) {
      append_utf8(out, 0x10000 + ((u - 0xD800) << 10) + (units[k + 1] - 0xDC00));
      ++k;
    } else if (u >= 0xD800 && u <= 0xDFFF) {
      append_utf8(out, 0xFFFD);  // lone surrogate
    } else {
      append_utf8(out, u);
    }
  }
  return out;
}

template <typename T>
T bit_cast_from(std::uint64_t raw) {
  T value;
  if constexpr (sizeof(T) == 4) {
    const auto narrow = static_cast<std::uint32_t>(raw);
    std::memcpy(&value, &narrow, sizeof value);
  } else {
    std::memcpy(&value, &raw, sizeof value);
  }
  return value;
}

ConstantPool read_pool(Reader& in) {
  const std::uint16_t count = in.u2();
  if (count == 0) throw Error(ErrorKind::MalformedPool, "constant pool count is 0");
  std::vector<std::optional<PoolEntry>> slots(count);
  for (std::uint16_t i = 1; i < count; ++i) {
    PoolEntry e;
    const std::uint8_t tag = in.u1();
    switch (tag) {
      case 1: {
        e.tag = PoolTag::Utf8;
        const std::uint16_t len = in.u2();
        e.text = decode_modified_utf8(in.take(len));
        break;
      }
      case 3:
        e.tag = PoolTag::Integer;
        e.integer = static_cast<std::int32_t>(in.u4());
        break;
      case 4:
        e.tag = PoolTag::Float;
        e.float_value = bit_cast_from<float>(in.u4());
        break;
      case 5:
      case 6: {
        const std::uint64_t hi = in.u4();
        const std::uint64_t raw = (hi << 32) | in.u4();
        if (tag == 5) {
          e.tag = PoolTag::Long;
          e.integer = static_cast<std::int64_t>(raw);
        } else {
          e.tag = PoolTag::Double;
          e.double_value = bit_cast_from<double>(raw);
        }
        if (i + 1 >= count) {
          throw Error(ErrorKind::MalformedPool,
                      "8-byte constant at index " + std::to_string(i) +
                          " overruns the pool");
        }
        slots[i] = std::move(e);
        ++i;  // the following slot is unusable
        continue;
      }
      case 7: case 8: case 16: case 19: case 20:
        e.tag = static_cast<PoolTag>(tag);
        e.first = in.u2();
        break;
      case 9: case 10: case 11: case 12: case 17: case 18:
        e.tag = static_cast<PoolTag>(tag);
        e.first = in.u2();
        e.second = in.u2();
        break;
      case 15:
        e.tag = PoolTag::MethodHandle;
        e.ref_kind = in.u1();
        e.first = in.u2();
        break;
      default:
        throw Error(ErrorKind::MalformedPool,
                    "bad tag " + std::to_string(tag) + " at index " + std::to_string(i));
    }
    slots[i] = std::move(e);
  }
  return ConstantPool(std::move(slots));
}

// Every cross-index must resolve to an entry of the expected tag.
void validate_pool(const ConstantPool& pool) {
  for (std::size_t i = 1; i < pool.slot_count(); ++i) {
    const auto idx = static_cast<std::uint16_t>(i);
    const PoolEntry* e = nullptr;
    try {
      e = &pool.at(idx);
    } catch (const Error&) {
      continue;  // second half of a Long/Double
    }
    switch (e->tag) {
      case PoolTag::Class:
      case PoolTag::String:
      case PoolTag::MethodType:
      case PoolTag::Module:
      case PoolTag::Package:
        pool.at(e->first, PoolTag::Utf8);
        break;
      case PoolTag::FieldRef:
      case PoolTag::MethodRef:
      case PoolTag::InterfaceMethodRef:
        pool.at(e->first, PoolTag::Class);
        pool.at(e->second, PoolTag::NameAndType);
        break;
      case PoolTag::NameAndType:
        pool.at(e->first, PoolTag::Utf8);
        pool.at(e->second, PoolTag::Utf8);
        break;
      case PoolTag::Dynamic:
      case PoolTag::InvokeDynamic:
        pool.at(e->second, PoolTag::NameAndType);
        break;
      case PoolTag::MethodHandle: {
        if (e->ref_kind < 1 || e->ref_kind > 9) {
          throw Error(ErrorKind::MalformedPool,
                      "bad method handle kind at index " + std::to_string(i));
        }
        const PoolTag t = pool.at(e->first).tag;
        const bool ok = (e->ref_kind <= 4) ? t == PoolTag::FieldRef
                                           : (t == PoolTag::MethodRef ||
                                              t == PoolTag::InterfaceMethodRef);
        if (!ok) {
          throw Error(ErrorKind::MalformedPool,
                      "method handle at index " + std::to_string(i) +
                          " references the wrong kind of entry");
        }
        break;
      }
      default:
        break;
    }
  }
}

void skip_attributes(Reader& in) {
  const std::uint16_t count = in.u2();
  for (std::uint16_t i = 0; i < count; ++i) {
    in.u2();
    in.skip(in.u4());
  }
}

std::vector<std::uint8_t> read_code_attribute(Reader& in, std::uint32_t length) {
  const std::size_t start = in.position();
  in.u2();  // max_stack
  in.u2();  // max_locals
  const std::uint32_t code_length = in.u4();
  const auto code = in.take(code_length);
  const std::uint16_t handlers = in.u2();
  in.skip(std::size_t{handlers} * 8);
  skip_attributes(in);
  if (in.position() - start != length) {
    throw Error(ErrorKind::MalformedClass, "Code attribute length mismatch");
  }
  return {code.begin(), code.end()};
}

}  // namespace

ConstantPool::ConstantPool(std::vector<std::optional<PoolEntry>> slots)
    : slots_(std::move(slots)) {}

const PoolEntry& ConstantPool::at(std::uint16_t index) const {
  if (index == 0 || index >= slots_.size() || !slots_[index]) {
    throw Error(ErrorKind::MalformedPool,
                "dangling constant pool index " + std::to_string(index));
  }
  return *slots_[index];
}

const PoolEntry& ConstantPool::at(std::uint16_t index, PoolTag expected) const {
  const PoolEntry& e = at(index);
  if (e.tag != expected) {
    throw Error(ErrorKind::MalformedPool,
                "constant pool index " + std::to_string(index) + " has tag " +
                    std::to_string(static_cast<int>(e.tag)) + ", expected " +
                    std::to_string(static_cast<int>(expected)));
  }
  return e;
}

const std::string& ConstantPool::utf8(std::uint16_t index) const {
  return at(index, PoolTag::Utf8).text;
}

const std::string& ConstantPool::class_name(std::uint16_t index) const {
  return utf8(at(index, PoolTag::Class).first);
}

MemberRef ConstantPool::member_ref(std::uint16_t index) const {
  const PoolEntry& e = at(index);
  if (e.tag != PoolTag::FieldRef && e.tag != PoolTag::MethodRef &&
      e.tag != PoolTag::InterfaceMethodRef) {
    throw Error(ErrorKind::MalformedPool,
                "constant pool index " + std::to_string(index) + " is not a member reference");
  }
  const PoolEntry& nat = at(e.second, PoolTag::NameAndType);
  return {class_name(e.first), utf8(nat.first), utf8(nat.second)};
}

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Class: return "class";
    case ClassKind::AbstractClass: return "abstract";
    case ClassKind::Interface: return "interface";
  }
  return "?";
}

bool RawMethod::operator==(const RawMethod& other) const {
  return name == other.name && descriptor == other.descriptor &&
         access_flags == other.access_flags && is_abstract == other.is_abstract &&
         code == other.code && tokens == other.tokens;
}

bool RawClass::operator==(const RawClass& other) const {
  return name == other.name && kind == other.kind && super_name == other.super_name &&
         interface_names == other.interface_names && methods == other.methods;
}

RawClass parse_class_file(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kMagic[4] = {0xCA, 0xFE, 0xBA, 0xBE};
  if (bytes.empty()) throw Error(ErrorKind::TruncatedFile, "empty input");
  const std::size_t probe = std::min<std::size_t>(4, bytes.size());
  if (std::memcmp(bytes.data(), kMagic, probe) != 0) {
    throw Error(ErrorKind::BadMagic, "not a class file (expected 0xCAFEBABE)");
  }
  Reader in(bytes);
  in.u4();
  in.u2();  // minor
  const std::uint16_t major = in.u2();
  if (major < kMinMajorVersion || major > kMaxMajorVersion) {
    throw Error(ErrorKind::UnsupportedVersion,
                "major version " + std::to_string(major) + " outside " +
                    std::to_string(kMinMajorVersion) + "-" +
                    std::to_string(kMaxMajorVersion));
  }

  RawClass out;
  out.major_version = major;
  out.pool = read_pool(in);
  validate_pool(out.pool);
  const ConstantPool& pool = out.pool;

  const std::uint16_t access = in.u2();
  out.name = pool.class_name(in.u2());
  if (out.name.empty()) throw Error(ErrorKind::MalformedClass, "empty class name");
  if (access & kAccInterface) {
    out.kind = ClassKind::Interface;
  } else if (access & kAccAbstract) {
    out.kind = ClassKind::AbstractClass;
  } else {
    out.kind = ClassKind::Class;
  }
  if (const std::uint16_t super = in.u2(); super != 0) {
    out.super_name = pool.class_name(super);
  }
  const std::uint16_t n_interfaces = in.u2();
  for (std::uint16_t i = 0; i < n_interfaces; ++i) {
    out.interface_names.push_back(pool.class_name(in.u2()));
  }

  const std::uint16_t n_fields = in.u2();
  for (std::uint16_t i = 0; i < n_fields; ++i) {
    in.u2();
    pool.utf8(in.u2());
    pool.utf8(in.u2());
    skip_attributes(in);
  }

  const std::uint16_t n_methods = in.u2();
  for (std::uint16_t i = 0; i < n_methods; ++i) {
    RawMethod m;
    m.access_flags = in.u2();
    m.name = pool.utf8(in.u2());
    m.descriptor = pool.utf8(in.u2());
    if (m.name.empty() || !parse_method_descriptor(m.descriptor)) {
      throw Error(ErrorKind::MalformedClass,
                  "bad method signature '" + m.name + m.descriptor + "' in " + out.name);
    }
    const std::uint16_t n_attrs = in.u2();
    for (std::uint16_t a = 0; a < n_attrs; ++a) {
      const std::string& attr_name = pool.utf8(in.u2());
      const std::uint32_t length = in.u4();
      if (attr_name == "Code") {
        if (m.code) {
          throw Error(ErrorKind::MalformedClass,
                      "duplicate Code attribute in " + out.name + "." + m.name);
        }
        m.code = read_code_attribute(in, length);
      } else {
        in.skip(length);
      }
    }
    m.is_abstract = (m.access_flags & kAccAbstract) != 0;
    if (m.is_abstract && m.code) {
      throw Error(ErrorKind::MalformedClass,
                  "abstract method " + out.name + "." + m.name + " has code");
    }
    if (!m.is_abstract && !m.code) {
      if ((m.access_flags & kAccNative) == 0) {
        throw Error(ErrorKind::MalformedClass,
                    "method " + out.name + "." + m.name + " has no Code attribute");
      }
      m.code.emplace();  // native: empty body
    }
    if (out.kind == ClassKind::Interface && !m.is_abstract) {
      throw Error(ErrorKind::UnsupportedVersion,
                  "interface " + out.name + " declares code-bearing method " + m.name +
                      m.descriptor + " (default/static interface methods unsupported)");
    }
    out.methods.push_back(std::move(m));
  }
  skip_attributes(in);
  if (in.remaining() != 0) {
    throw Error(ErrorKind::MalformedClass,
                std::to_string(in.remaining()) + " trailing bytes after class " + out.name);
  }
  return out;
}

}  // namespace lowdup
