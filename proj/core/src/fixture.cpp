#include "lowdup/fixture.hpp"

#include <json.hpp>
#include <memory>

#include "lowdup/descriptor.hpp"
#include "lowdup/error.hpp"

namespace lowdup {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::FixtureSyntax, where + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

ClassKind parse_kind(const json& obj, const std::string& where) {
  const std::string kind = require_string(obj, "kind", where);
  if (kind == "class") return ClassKind::Class;
  if (kind == "abstract") return ClassKind::AbstractClass;
  if (kind == "interface") return ClassKind::Interface;
  throw Error(ErrorKind::UnknownKind, where + ".kind: \"" + kind + "\"");
}

RawMethod parse_method(const json& node, const RawClass& cls, const std::string& where) {
  if (!node.is_object()) fail(where, "expected an object");
  RawMethod m;
  m.name = require_string(node, "name", where);
  m.descriptor = require_string(node, "descriptor", where);
  if (m.name.empty()) fail(where + ".name", "empty method name");
  if (!parse_method_descriptor(m.descriptor)) {
    fail(where + ".descriptor", "malformed descriptor \"" + m.descriptor + "\"");
  }
  if (const auto it = node.find("abstract"); it != node.end()) {
    if (!it->is_boolean()) fail(where + ".abstract", "expected a boolean");
    m.is_abstract = it->get<bool>();
  }
  if (cls.kind == ClassKind::Interface && !m.is_abstract) {
    fail(where, "interface methods must be abstract");
  }
  if (m.is_abstract) {
    m.access_flags = kAccAbstract;
  } else {
    m.code.emplace();
  }
  auto origin = std::make_shared<const MethodKey>(MethodKey{cls.name, m.name, m.descriptor});
  std::vector<Token> tokens;
  if (const auto it = node.find("tokens"); it != node.end()) {
    if (!it->is_array()) fail(where + ".tokens", "expected an array");
    for (std::size_t t = 0; t < it->size(); ++t) {
      const json& tok = (*it)[t];
      const std::string at = where + ".tokens[" + std::to_string(t) + "]";
      if (!tok.is_string()) fail(at, "expected a string");
      auto parsed = parse_token(tok.get<std::string>());
      if (!parsed) fail(at, "unknown mnemonic in \"" + tok.get<std::string>() + "\"");
      parsed->origin = Origin{origin, static_cast<std::uint32_t>(t)};
      tokens.push_back(std::move(*parsed));
    }
  }
  if (m.is_abstract && !tokens.empty()) {
    fail(where + ".tokens", "abstract methods must have \"tokens\": []");
  }
  m.tokens = std::move(tokens);
  return m;
}

RawClass parse_class(const json& node, const std::string& where) {
  if (!node.is_object()) fail(where, "expected an object");
  RawClass cls;
  cls.name = require_string(node, "name", where);
  if (cls.name.empty()) fail(where + ".name", "empty class name");
  cls.kind = parse_kind(node, where);
  if (const auto it = node.find("extends"); it != node.end() && !it->is_null()) {
    if (!it->is_string()) fail(where + ".extends", "expected a string or null");
    cls.super_name = it->get<std::string>();
  }
  if (const auto it = node.find("implements"); it != node.end()) {
    if (!it->is_array()) fail(where + ".implements", "expected an array");
    for (const json& iface : *it) {
      if (!iface.is_string()) fail(where + ".implements", "expected strings");
      cls.interface_names.push_back(iface.get<std::string>());
    }
  }
  if (const auto it = node.find("methods"); it != node.end()) {
    if (!it->is_array()) fail(where + ".methods", "expected an array");
    for (std::size_t m = 0; m < it->size(); ++m) {
      cls.methods.push_back(
          parse_method((*it)[m], cls, where + ".methods[" + std::to_string(m) + "]"));
    }
  }
  return cls;
}

}  // namespace

ProgramModel load_fixture(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::FixtureSyntax,
                line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) fail("$", "expected a JSON object");
  const json& classes = require(doc, "classes", "$");
  if (!classes.is_array()) fail("$.classes", "expected an array");
  std::vector<RawClass> raw;
  raw.reserve(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    raw.push_back(parse_class(classes[c], "$.classes[" + std::to_string(c) + "]"));
  }
  return assemble_program(std::move(raw));
}

std::string emit_fixture(const ProgramModel& program) {
  json classes = json::array();
  for (const RawClass& cls : program.classes()) {
    json methods = json::array();
    for (const RawMethod& m : cls.methods) {
      json tokens = json::array();
      if (m.tokens) {
        for (const Token& t : *m.tokens) tokens.push_back(format_token(t));
      }
      methods.push_back({{"name", m.name},
                         {"descriptor", m.descriptor},
                         {"abstract", m.is_abstract},
                         {"tokens", std::move(tokens)}});
    }
    json node = {{"name", cls.name},
                 {"kind", std::string(to_string(cls.kind))},
                 {"extends", cls.super_name ? json(*cls.super_name) : json(nullptr)},
                 {"implements", cls.interface_names},
                 {"methods", std::move(methods)}};
    classes.push_back(std::move(node));
  }
  json doc = {{"classes", std::move(classes)}};
  return doc.dump(2) + "\n";
}

}  // namespace lowdup
