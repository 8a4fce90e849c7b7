#include "lowdup/submission.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "lowdup/classfile.hpp"
#include "lowdup/error.hpp"
#include "lowdup/fixture.hpp"

namespace lowdup {
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kSourceExtensions = {
    ".java", ".c", ".cc", ".cpp", ".cxx", ".h", ".hpp", ".cs", ".kt", ".scala", ".js", ".ts",
};

bool is_source_extension(const fs::path& file) {
  const std::string ext = file.extension().string();
  return std::find(kSourceExtensions.begin(), kSourceExtensions.end(), ext) !=
         kSourceExtensions.end();
}

std::vector<fs::path> list_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

template <typename Fn>
auto with_file_context(const fs::path& file, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw e.with_context(file.string());
  }
}

}  // namespace

InputKind classify_input(const fs::path& file) {
  const std::string ext = file.extension().string();
  if (ext == ".class") return InputKind::ClassFile;
  if (ext == ".json" || ext == ".fixture") return InputKind::Fixture;
  return InputKind::Source;
}

std::vector<unsigned char> read_binary_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::InputNotFound, "cannot open " + file.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::InputNotFound, "cannot open " + file.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Submission load_submission(const fs::path& path, Mode mode) {
  if (!fs::exists(path)) throw Error(ErrorKind::InputNotFound, path.string() + " does not exist");

  Submission sub;
  sub.path = path;
  sub.label = path.filename().empty() ? path.parent_path().filename().string()
                                      : path.filename().string();

  std::vector<fs::path> class_files;
  std::vector<fs::path> fixtures;
  std::vector<fs::path> sources;
  auto sort_file = [&](const fs::path& file, bool explicit_file) {
    switch (classify_input(file)) {
      case InputKind::ClassFile: class_files.push_back(file); break;
      case InputKind::Fixture: fixtures.push_back(file); break;
      case InputKind::Source:
        if (explicit_file || is_source_extension(file)) sources.push_back(file);
        break;
    }
  };
  if (fs::is_directory(path)) {
    for (const auto& file : list_files(path)) sort_file(file, false);
  } else {
    sort_file(path, true);
  }

  if (mode == Mode::SLT) {
    if (sources.empty()) {
      throw Error(ErrorKind::InputModeMismatch,
                  path.string() + ": SLT mode needs source files, found none");
    }
    for (const auto& file : sources) {
      auto lexed = with_file_context(file, [&] { return lex_source(read_text_file(file)); });
      sub.lexemes.insert(sub.lexemes.end(), std::make_move_iterator(lexed.begin()),
                         std::make_move_iterator(lexed.end()));
    }
    return sub;
  }

  if (!class_files.empty() && !fixtures.empty()) {
    throw Error(ErrorKind::MixedInputKinds,
                path.string() + " mixes class files and fixtures");
  }
  if (class_files.empty() && fixtures.empty()) {
    throw Error(ErrorKind::InputModeMismatch,
                path.string() + ": low-level modes need class files or fixtures" +
                    (sources.empty() ? std::string(", found none")
                                     : std::string(" (source files must be compiled first)")));
  }

  std::vector<RawClass> classes;
  for (const auto& file : class_files) {
    classes.push_back(with_file_context(file, [&] {
      const auto bytes = read_binary_file(file);
      return parse_class_file(bytes);
    }));
  }
  for (const auto& file : fixtures) {
    ProgramModel part = with_file_context(file, [&] { return load_fixture(read_text_file(file)); });
    classes.insert(classes.end(), part.classes().begin(), part.classes().end());
  }
  sub.program = with_file_context(path, [&] { return assemble_program(std::move(classes)); });
  return sub;
}

}  // namespace lowdup
