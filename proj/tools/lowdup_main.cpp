// lowdup: low-level plagiarism detection for compiled JVM programs.
//
//   lowdup compare <A> <B>     compare two submissions
//   lowdup corpus <dir>        compare every pair of submission directories
//   lowdup dump-tokens <path>  print the processed token sequences
//
// Exit status: 0 success, 1 usage error, 2 input error.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>

#include "lowdup/error.hpp"
#include "lowdup/runner.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

bool use_color() {
  return std::getenv("LOWDUP_NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
}

struct CliText {
  std::string mode = "la";
  std::string involved = "min";
  std::string format = "text";
};

void add_common_options(CLI::App& cmd, lowdup::RunConfig& config, CliText& text) {
  cmd.add_option("--mode", text.mode, "Scenario: la, lam (no abstract linearization), slt")
      ->check(CLI::IsMember({"la", "lam", "slt"}, CLI::ignore_case));
  cmd.add_option("--min-match", config.min_match, "RKGST minimum tile length")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--pairing-threshold", config.pairing_threshold,
                 "Minimum signature similarity for method pairing")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--involved", text.involved, "Involved-token baseline: min, max, mean")
      ->check(CLI::IsMember({"min", "max", "mean"}, CLI::ignore_case));
  cmd.add_option("--format", text.format, "Output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case));
  cmd.add_flag("--verbose", config.verbose, "Include per-pair and tile detail");
  cmd.add_option("--jobs", config.jobs, "Parallel comparisons")->check(CLI::PositiveNumber);
  cmd.add_flag("!--exclude-synthetic", config.include_synthetic,
               "Leave synthetic and bridge methods out of comparison");
  cmd.add_flag("--slt-abstract-identifiers", config.slt_abstract_identifiers,
               "SLT: treat all identifiers as one token");
}

void apply_text_options(const CliText& text, lowdup::RunConfig& config) {
  static const std::map<std::string, lowdup::Mode> kModes = {
      {"la", lowdup::Mode::LA}, {"lam", lowdup::Mode::LA_M}, {"slt", lowdup::Mode::SLT}};
  static const std::map<std::string, lowdup::InvolvedBaseline> kBaselines = {
      {"min", lowdup::InvolvedBaseline::Min},
      {"max", lowdup::InvolvedBaseline::Max},
      {"mean", lowdup::InvolvedBaseline::Mean}};
  static const std::map<std::string, lowdup::OutputFormat> kFormats = {
      {"text", lowdup::OutputFormat::Text},
      {"json", lowdup::OutputFormat::Json},
      {"csv", lowdup::OutputFormat::Csv}};
  config.mode = kModes.at(text.mode);
  config.involved = kBaselines.at(text.involved);
  config.output_format = kFormats.at(text.format);
}

void emit_compare(const lowdup::RunConfig& config, const std::string& a, const std::string& b,
                  const lowdup::ComparisonReport& report) {
  switch (config.output_format) {
    case lowdup::OutputFormat::Json:
      std::cout << lowdup::report_to_json(report, config.verbose);
      break;
    case lowdup::OutputFormat::Csv:
      std::cout << lowdup::csv_header() << lowdup::csv_row(a, b, report);
      break;
    case lowdup::OutputFormat::Text:
      std::cout << lowdup::report_to_text(a, b, report, config.verbose, use_color());
      break;
  }
}

void emit_corpus(const lowdup::RunConfig& config, const lowdup::CorpusResult& result) {
  switch (config.output_format) {
    case lowdup::OutputFormat::Json:
      std::cout << lowdup::corpus_to_json(result, config.verbose);
      break;
    case lowdup::OutputFormat::Csv:
      std::cout << lowdup::corpus_to_csv(result);
      break;
    case lowdup::OutputFormat::Text:
      std::cout << lowdup::corpus_to_text(result, config.verbose, use_color());
      if (config.verbose) {
        std::cerr << result.pairs.size() << " pairs in " << result.elapsed_seconds << " s\n";
      }
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-level plagiarism detection for compiled JVM programs"};
  app.require_subcommand(1);

  lowdup::RunConfig config;
  CliText text;
  std::string path_a;
  std::string path_b;
  std::string corpus_dir;
  std::string dump_path;
  bool no_inline = false;

  auto* compare = app.add_subcommand("compare", "Compare two submissions");
  compare->add_option("A", path_a, "First submission")->required();
  compare->add_option("B", path_b, "Second submission")->required();
  add_common_options(*compare, config, text);

  auto* corpus = app.add_subcommand("corpus", "Compare all pairs of submission directories");
  corpus->add_option("dir", corpus_dir, "Directory of submission directories")->required();
  add_common_options(*corpus, config, text);

  auto* dump = app.add_subcommand("dump-tokens", "Print processed token sequences");
  dump->add_option("path", dump_path, "Submission")->required();
  dump->add_flag("--no-inline", no_inline, "Show sequences before invocation inlining");
  add_common_options(*dump, config, text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    apply_text_options(text, config);
    config.validate();
    if (compare->parsed()) {
      const auto report = lowdup::run_compare(config, path_a, path_b);
      emit_compare(config, path_a, path_b, report);
    } else if (corpus->parsed()) {
      emit_corpus(config, lowdup::run_corpus(config, corpus_dir));
    } else if (dump->parsed()) {
      std::cout << lowdup::dump_tokens(config, dump_path, !no_inline);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "lowdup: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lowdup::Error& e) {
    std::cerr << "lowdup: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "lowdup: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
