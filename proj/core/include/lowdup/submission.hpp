#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lowdup/lexer.hpp"
#include "lowdup/program.hpp"
#include "lowdup/similarity.hpp"

namespace lowdup {

enum class InputKind { ClassFile, Fixture, Source };

/// Classifies a file by extension: ".class", ".json"/".fixture", anything
/// else is source text.
InputKind classify_input(const std::filesystem::path& file);

/// One loaded submission. Low-level modes fill `program`; SLT fills
/// `lexemes` (all source files of the submission, concatenated in path
/// order).
struct Submission {
  std::string label;
  std::filesystem::path path;
  ProgramModel program;
  std::vector<LexToken> lexemes;
};

/// Loads a directory, a class file, a fixture or a source file for `mode`.
///
/// Low-level modes read class files or fixtures (never both:
/// MixedInputKinds) and ignore source files; SLT reads only source files.
/// A submission with nothing usable for the mode is an InputModeMismatch;
/// a missing path is InputNotFound. Parse errors carry the file path.
Submission load_submission(const std::filesystem::path& path, Mode mode);

std::vector<unsigned char> read_binary_file(const std::filesystem::path& file);
std::string read_text_file(const std::filesystem::path& file);

}  // namespace lowdup
