#include "lowdup/error.hpp"

namespace lowdup {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::TruncatedFile: return "TruncatedFile";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::MalformedPool: return "MalformedPool";
    case ErrorKind::MalformedClass: return "MalformedClass";
    case ErrorKind::BadOpcode: return "BadOpcode";
    case ErrorKind::TruncatedCode: return "TruncatedCode";
    case ErrorKind::FixtureSyntax: return "FixtureSyntax";
    case ErrorKind::DuplicateClass: return "DuplicateClass";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::CyclicHierarchy: return "CyclicHierarchy";
    case ErrorKind::UnterminatedString: return "UnterminatedString";
    case ErrorKind::UnterminatedComment: return "UnterminatedComment";
    case ErrorKind::InputNotFound: return "InputNotFound";
    case ErrorKind::MixedInputKinds: return "MixedInputKinds";
    case ErrorKind::InputModeMismatch: return "InputModeMismatch";
    case ErrorKind::FewerThanTwoSubmissions: return "FewerThanTwoSubmissions";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(message) {}

}  // namespace lowdup
