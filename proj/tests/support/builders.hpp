#pragma once

#include <lowdup/error.hpp>
#include <lowdup/token.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace build {

inline std::vector<lowdup::Token> tokens(std::initializer_list<const char*> texts) {
  std::vector<lowdup::Token> out;
  for (const char* t : texts) {
    auto tok = lowdup::parse_token(t);
    if (!tok) throw std::invalid_argument(std::string("bad token ") + t);
    out.push_back(*tok);
  }
  return out;
}

inline std::vector<std::string> texts(const std::vector<lowdup::Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(lowdup::format_token(t));
  return out;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("lowdup-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& rel, const std::string& content) const {
    const auto file = path_ / rel;
    std::filesystem::create_directories(file.parent_path());
    std::ofstream(file, std::ios::binary) << content;
    return file;
  }

 private:
  std::filesystem::path path_;
};

template <typename F>
lowdup::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const lowdup::Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected lowdup::Error");
}

}  // namespace build
