#include <doctest.h>

#include <lowdup/error.hpp>
#include <lowdup/lexer.hpp>
#include <lowdup/slt.hpp>
#include <lowdup/submission.hpp>

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <regex>

#include "builders.hpp"
#include "test_paths.hpp"

using namespace lowdup;

namespace {

std::vector<std::pair<LexKind, std::string>> lexed(std::string_view text) {
  std::vector<std::pair<LexKind, std::string>> out;
  for (const auto& t : lex_source(text)) out.emplace_back(t.kind, t.text);
  return out;
}

std::vector<std::string> texts(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : lex_source(text)) out.push_back(t.text);
  return out;
}

std::string error_message(std::string_view text) {
  try {
    lex_source(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

// Gaps between lexemes hold only whitespace and comments.
bool gap_is_layout(std::string_view gap) {
  std::size_t i = 0;
  while (i < gap.size()) {
    if (std::isspace(static_cast<unsigned char>(gap[i]))) {
      ++i;
    } else if (gap.substr(i, 2) == "//") {
      const auto nl = gap.find('\n', i);
      i = nl == std::string_view::npos ? gap.size() : nl + 1;
    } else if (gap.substr(i, 2) == "/*") {
      const auto end = gap.find("*/", i + 2);
      if (end == std::string_view::npos) return false;
      i = end + 2;
    } else {
      return false;
    }
  }
  return true;
}

void check_lossless(std::string_view source) {
  const auto toks = lex_source(source);
  std::size_t pos = 0;
  for (const auto& t : toks) {
    REQUIRE(t.offset >= pos);
    CHECK(gap_is_layout(source.substr(pos, t.offset - pos)));
    CHECK(source.substr(t.offset, t.text.size()) == t.text);
    pos = t.offset + t.text.size();
  }
  CHECK(gap_is_layout(source.substr(pos)));
}

std::string rename_identifier(const std::string& source, const std::string& from, const std::string& to) {
  return std::regex_replace(source, std::regex("\\b" + from + "\\b"), to);
}

}  // namespace

TEST_SUITE("lexer") {
  TEST_CASE("worked examples") {
    using K = LexKind;
    CHECK(lexed("a = b;") == std::vector<std::pair<K, std::string>>{
                                 {K::Identifier, "a"}, {K::Operator, "="}, {K::Identifier, "b"}, {K::Delimiter, ";"}});
    CHECK(lex_source("").empty());
    CHECK(lexed("/*x*/ f()") == std::vector<std::pair<K, std::string>>{
                                    {K::Identifier, "f"}, {K::Delimiter, "("}, {K::Delimiter, ")"}});
  }

  TEST_CASE("keyword list is sorted, unique and recognized") {
    const auto kw = keywords();
    CHECK(std::is_sorted(kw.begin(), kw.end()));
    CHECK(std::adjacent_find(kw.begin(), kw.end()) == kw.end());
    for (std::string_view k : {"class", "int", "return", "true", "null", "while", "interface"}) {
      CHECK(std::binary_search(kw.begin(), kw.end(), k));
      const auto toks = lex_source(k);
      REQUIRE(toks.size() == 1);
      CHECK(toks[0].kind == LexKind::Keyword);
    }
    CHECK(lex_source("classy")[0].kind == LexKind::Identifier);
    CHECK(lex_source("_x$1")[0].kind == LexKind::Identifier);
  }

  TEST_CASE("operators take the longest match") {
    CHECK(texts("a>>>=b") == std::vector<std::string>{"a", ">>>=", "b"});
    CHECK(texts("x->y::z") == std::vector<std::string>{"x", "->", "y", "::", "z"});
    CHECK(texts("i+++j") == std::vector<std::string>{"i", "++", "+", "j"});
    CHECK(texts("f(String... a)") == std::vector<std::string>{"f", "(", "String", "...", "a", ")"});
    CHECK(texts("a.b") == std::vector<std::string>{"a", ".", "b"});
    CHECK(lex_source("@")[0].kind == LexKind::Delimiter);
    CHECK(lex_source("...")[0].kind == LexKind::Delimiter);
    CHECK(lex_source("!=")[0].kind == LexKind::Operator);
  }

  TEST_CASE("numbers are single tokens") {
    for (const char* n : {"0", "42", "0xFF_FFL", "0b1010", "1_000", "3.14", ".5", "1e10", "3.5e-2", "2f", "1E10d", "077"}) {
      CAPTURE(n);
      const auto toks = lex_source(n);
      REQUIRE(toks.size() == 1);
      CHECK(toks[0].kind == LexKind::Number);
      CHECK(toks[0].text == n);
    }
  }

  TEST_CASE("string, char and text block literals") {
    const auto s = lex_source(R"(x = "a \"b\" \\";)");
    REQUIRE(s.size() == 4);
    CHECK(s[2].kind == LexKind::String);
    CHECK(s[2].text == R"("a \"b\" \\")");
    const auto c = lex_source(R"('\'' 'x' 'A')");
    REQUIRE(c.size() == 3);
    for (const auto& t : c) CHECK(t.kind == LexKind::Char);
    const std::string block = "s = \"\"\"\n  hi \"there\"\n  \\\"\"\" more\n  \"\"\";";
    const auto b = lex_source(block);
    REQUIRE(b.size() == 4);
    CHECK(b[2].kind == LexKind::String);
    CHECK(b[2].text == block.substr(4, block.size() - 5));
  }

  TEST_CASE("positions and BOM") {
    const auto toks = lex_source("\xEF\xBB\xBFint x;\n  y = 1;");
    REQUIRE(toks.size() == 7);
    CHECK(toks[0].text == "int");
    CHECK(toks[0].offset == 0);
    CHECK(toks[3].line == 2);
    CHECK(toks[3].column == 3);
  }

  TEST_CASE("unterminated literals and comments") {
    for (const char* bad : {"\"abc", "x = \"abc\ny\";", "'a", "'", "\"\"\"\nnever closed"}) {
      CAPTURE(bad);
      CHECK(build::error_kind([&] { lex_source(bad); }) == ErrorKind::UnterminatedString);
    }
    CHECK(build::error_kind([] { lex_source("a /* b"); }) == ErrorKind::UnterminatedComment);
    CHECK(error_message("x\n  /* open").find("2:3") != std::string::npos);
    CHECK_NOTHROW(lex_source("a // no newline at end"));
  }

  TEST_CASE("lexing is lossless modulo layout") {
    check_lossless(read_text_file(testdata::path("sources/Kitchen.java")));
    for (const char* rel : {"pairs/outlining/original/Calc.java", "pairs/outlining/plagiarized/Calc.java",
                            "pairs/moved/plagiarized/Main.java"}) {
      check_lossless(read_text_file(testdata::path(rel)));
    }
  }

  TEST_CASE("random token soup is lossless or a structured error") {
    const std::vector<std::string> pieces = {"a", "b1", "class", " ", "\n", "\t", "(", ")", "{", "}", ";", ",", ".",
                                             "+", "=", ">>", ">>>=", "->", "1", "0x1F", "2.5e3", "\"s\"", "'c'",
                                             "//c\n", "/*c*/", "@", "...", "?", ":", "\"", "'", "/*", "/", "*", "#"};
    std::mt19937 rng(3);
    for (int round = 0; round < 3000; ++round) {
      std::string src;
      for (std::size_t k = rng() % 30; k > 0; --k) src += pieces[rng() % pieces.size()];
      try {
        check_lossless(src);
      } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::UnterminatedString || e.kind() == ErrorKind::UnterminatedComment));
      }
    }
  }

  TEST_CASE("statement-bearing sources contain delimiters") {
    for (const char* src : {"x = 1;", "return;", "f(a)", "{ }", "int[] a;"}) {
      const auto toks = lex_source(src);
      CHECK(std::any_of(toks.begin(), toks.end(), [](const LexToken& t) { return t.kind == LexKind::Delimiter; }));
    }
  }
}

TEST_SUITE("slt") {
  TEST_CASE("identical sources") {
    const std::string src = read_text_file(testdata::path("sources/Kitchen.java"));
    const auto r = slt_compare(src, src);
    CHECK(r.mode == Mode::SLT);
    CHECK(r.similarity == 1.0);
    CHECK(r.imt == 0);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].matched == lex_source(src).size());
  }

  TEST_CASE("one-token overlap is below the threshold") {
    const auto r = slt_compare("alpha", "alpha beta");
    CHECK(r.matched_total == 0);
    CompareOptions one;
    one.min_match = 1;
    CHECK(slt_compare("alpha", "alpha beta", one).matched_total == 1);
  }

  TEST_CASE("whole streams and the min baseline") {
    const auto r = slt_compare("a = b;", "a = b; c = d;");
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.involved == 4);
    CHECK(r.matched_total == 4);
    CHECK(r.similarity == 1.0);
    CHECK(r.pairs[0].tiles.size() == 1);
  }

  TEST_CASE("lex errors propagate") {
    CHECK(build::error_kind([] { slt_compare("\"open", "x"); }) == ErrorKind::UnterminatedString);
  }

  TEST_CASE("swap symmetry") {
    const std::string a = read_text_file(testdata::path("pairs/outlining/original/Calc.java"));
    const std::string b = read_text_file(testdata::path("pairs/outlining/plagiarized/Calc.java"));
    const auto ab = slt_compare(a, b);
    const auto ba = slt_compare(b, a);
    CHECK(ab.matched_total == ba.matched_total);
    CHECK(ab.similarity == ba.similarity);
    std::mt19937 rng(17);
    const std::vector<std::string> words = {"a", "b", "=", ";", "(", ")", "x", "+", "1"};
    for (int round = 0; round < 1000; ++round) {
      std::string s, t;
      for (std::size_t k = rng() % 16; k > 0; --k) s += words[rng() % words.size()] + " ";
      for (std::size_t k = rng() % 16; k > 0; --k) t += words[rng() % words.size()] + " ";
      CHECK(slt_compare(s, t).matched_total == slt_compare(t, s).matched_total);
    }
  }

  TEST_CASE("renaming an identifier never lengthens the longest common run") {
    const std::vector<std::string> sources = {
        read_text_file(testdata::path("sources/Kitchen.java")),
        read_text_file(testdata::path("pairs/outlining/original/Calc.java")),
        read_text_file(testdata::path("pairs/outlining/plagiarized/Calc.java")),
        read_text_file(testdata::path("pairs/moved/original/Main.java")),
        read_text_file(testdata::path("pairs/moved/plagiarized/Main.java"))};
    auto longest = [](const ComparisonReport& r) {
      std::size_t n = 0;
      for (const auto& t : r.pairs.at(0).tiles) n = std::max(n, t.length);
      return n;
    };
    std::size_t increased = 0;
    for (const auto& a : sources) {
      for (const auto& b : sources) {
        const auto base = slt_compare(a, b);
        std::set<std::string> idents;
        for (const auto& t : lex_source(b)) {
          if (t.kind == LexKind::Identifier) idents.insert(t.text);
        }
        for (const auto& id : idents) {
          const auto renamed = slt_compare(a, rename_identifier(b, id, "zz_" + id));
          CAPTURE(id);
          CHECK(longest(renamed) <= longest(base));
          if (renamed.matched_total > base.matched_total) ++increased;
        }
      }
    }
    MESSAGE("renames that raised the greedy total: " << increased);
  }

  TEST_CASE("greedy tiling can gain matches from a rename") {
    // "x y" is tiled first and blocks both "y +" and "y y"; renaming x frees them.
    const std::string a = "x y + y y";
    const std::string b = "y + x y y";
    CHECK(slt_compare(a, b).matched_total == 2);
    CHECK(slt_compare(a, rename_identifier(b, "x", "z")).matched_total == 4);
  }

  TEST_CASE("identifier abstraction ignores renames") {
    const std::string a = "int total = a + b; return total;";
    const std::string b = "int sum = x + y; return sum;";
    CHECK(slt_compare(a, b).similarity < 1.0);
    SltOptions abstract_ids;
    abstract_ids.abstract_identifiers = true;
    CHECK(slt_compare(a, b, {}, abstract_ids).similarity == 1.0);
  }

  TEST_CASE("outlined helper lowers the lexical score") {
    const std::string a = read_text_file(testdata::path("pairs/outlining/original/Calc.java"));
    const std::string b = read_text_file(testdata::path("pairs/outlining/plagiarized/Calc.java"));
    CHECK(slt_compare(a, b).similarity < 1.0);
  }

  TEST_CASE("moving a method to another class") {
    const auto orig = testdata::path("pairs/moved/original");
    const auto plag = testdata::path("pairs/moved/plagiarized");
    const auto la = compare_programs(load_submission(orig, Mode::LA).program, load_submission(plag, Mode::LA).program, Mode::LA);
    CHECK(la.imt == 0);
    CHECK(la.similarity == 1.0);
    const auto slt = slt_compare_tokens(load_submission(orig, Mode::SLT).lexemes, load_submission(plag, Mode::SLT).lexemes);
    CHECK(slt.imt <= la.imt);
    CHECK(slt.involved == load_submission(orig, Mode::SLT).lexemes.size());
  }
}
