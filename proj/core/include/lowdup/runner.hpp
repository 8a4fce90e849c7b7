#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lowdup/linearize.hpp"
#include "lowdup/report.hpp"
#include "lowdup/similarity.hpp"
#include "lowdup/slt.hpp"
#include "lowdup/submission.hpp"

namespace lowdup {

struct RunConfig {
  Mode mode = Mode::LA;
  std::size_t min_match = 2;
  double pairing_threshold = 0.5;
  InvolvedBaseline involved = InvolvedBaseline::Min;
  bool include_synthetic = true;
  bool slt_abstract_identifiers = false;
  OutputFormat output_format = OutputFormat::Text;
  bool verbose = false;
  std::size_t jobs = 1;
  LinearizeOptions linearize;

  /// Throws std::invalid_argument when min_match < 1 or the pairing
  /// threshold is outside [0, 1].
  void validate() const;
  CompareOptions compare_options() const;
};

/// A submission after the per-mode pipeline: a processed method table for
/// LA / LA_M, or the lexeme stream for SLT.
struct PreparedSubmission {
  std::string label;
  Mode mode = Mode::LA;
  MethodTable table;
  std::vector<LexToken> lexemes;
};

PreparedSubmission prepare_submission(const RunConfig& config, const Submission& submission);

ComparisonReport compare_prepared(const RunConfig& config, const PreparedSubmission& a,
                                  const PreparedSubmission& b);

/// Loads, processes and compares two submissions under `config.mode`.
ComparisonReport run_compare(const RunConfig& config, const std::filesystem::path& a,
                             const std::filesystem::path& b);

struct PairResult {
  std::string a;
  std::string b;
  ComparisonReport report;
};

struct CorpusResult {
  RunConfig config;
  /// All unordered submission pairs, in name order.
  std::vector<PairResult> pairs;
  /// Indices into `pairs`, by similarity descending, ties by pair names.
  std::vector<std::size_t> ranking;
  double elapsed_seconds = 0.0;
};

/// All-pairs comparison of the submission subdirectories of `dir`, using up
/// to `config.jobs` threads. Results do not depend on scheduling. Throws
/// FewerThanTwoSubmissions.
CorpusResult run_corpus(const RunConfig& config, const std::filesystem::path& dir);

/// Token listing of one submission after the pipeline for `config.mode`
/// (with `inline_calls` false, before invocation inlining). One line per
/// token: "Owner.method:descriptor\toffset\tMNEMONIC[:annotation]". SLT
/// lists lexemes as "label\tline:column\tkind:text".
std::string dump_tokens(const RunConfig& config, const std::filesystem::path& path,
                        bool inline_calls = true);

std::string dump_method_table(const MethodTable& table);

std::string corpus_to_json(const CorpusResult& result, bool verbose);
std::string corpus_to_csv(const CorpusResult& result);
std::string corpus_to_text(const CorpusResult& result, bool verbose, bool color);

}  // namespace lowdup
