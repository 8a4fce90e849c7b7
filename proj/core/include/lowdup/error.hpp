#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lowdup {

enum class ErrorKind {
  // class file ingestion
  BadMagic,
  TruncatedFile,
  UnsupportedVersion,
  MalformedPool,
  MalformedClass,
  // bytecode decoding
  BadOpcode,
  TruncatedCode,
  // fixtures and program assembly
  FixtureSyntax,
  DuplicateClass,
  UnknownKind,
  // hierarchy
  CyclicHierarchy,
  // lexical baseline
  UnterminatedString,
  UnterminatedComment,
  // command-line inputs
  InputNotFound,
  MixedInputKinds,
  InputModeMismatch,
  FewerThanTwoSubmissions,
};

std::string_view to_string(ErrorKind kind);

/// Structured error raised by every parsing and analysis stage. The message
/// carries position or file context where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

  /// Same kind, with `context` prepended to the detail.
  Error with_context(const std::string& context) const {
    return Error(kind_, context + ": " + detail_);
  }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace lowdup
