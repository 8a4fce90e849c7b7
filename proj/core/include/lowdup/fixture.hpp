#pragma once

#include <string>
#include <string_view>

#include "lowdup/program.hpp"

namespace lowdup {

/// Loads a textual fixture: one JSON document
///
///   {"classes": [{"name": "A", "kind": "class"|"abstract"|"interface",
///                 "extends": "B"|null, "implements": ["I"],
///                 "methods": [{"name": "f", "descriptor": "()V",
///                              "abstract": false,
///                              "tokens": ["LOAD", "INVOKE:A.g:()V"]}]}]}
///
/// Method tokens are taken verbatim; extraction is bypassed. Errors:
/// FixtureSyntax (with line/column or a JSON path), UnknownKind,
/// DuplicateClass.
ProgramModel load_fixture(std::string_view text);

/// Serializes a program in the fixture format. Methods without
/// pre-extracted tokens are written with an empty token list.
std::string emit_fixture(const ProgramModel& program);

}  // namespace lowdup
