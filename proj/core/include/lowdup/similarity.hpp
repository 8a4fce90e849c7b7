#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "lowdup/linearize.hpp"
#include "lowdup/program.hpp"
#include "lowdup/rkgst.hpp"
#include "lowdup/token.hpp"

namespace lowdup {

/// Comparison scenario: low-level with abstract method linearization (LA),
/// low-level without it (LA_M), and the lexical-token baseline (SLT).
enum class Mode { LA, LA_M, SLT };

std::string_view to_string(Mode mode);

/// Which program's token count serves as the "involved tokens" baseline.
enum class InvolvedBaseline { Min, Max, Mean };

std::string_view to_string(InvolvedBaseline baseline);

struct MethodPair {
  MethodKey key_a;
  MethodKey key_b;
  double sig_score = 0.0;
  std::vector<Tile> tiles;
  std::size_t matched = 0;
};

struct ComparisonReport {
  Mode mode = Mode::LA;
  std::vector<MethodPair> pairs;
  std::size_t matched_total = 0;
  std::size_t involved = 0;
  std::size_t mt = 0;
  std::int64_t imt = 0;
  double similarity = 0.0;
};

struct CompareOptions {
  std::size_t min_match = 2;
  double pairing_threshold = 0.5;
  InvolvedBaseline involved = InvolvedBaseline::Min;
};

/// Inverse number of mismatched tokens.
constexpr std::int64_t imt(std::size_t mt) { return -static_cast<std::int64_t>(mt); }

std::size_t involved_tokens(std::size_t total_a, std::size_t total_b,
                            InvolvedBaseline baseline);

/// Fills mt, imt and similarity from matched_total and involved.
void finalize_metrics(ComparisonReport& report);

/// Greedy maximum-similarity pairing: all cross pairs sorted by signature
/// similarity (descending; ties go to the more similar owner class names, then key
/// order), accepted while both ends are unused and the score reaches `threshold`.
/// Excluded methods never pair.
/// Returned pairs carry no tiles yet.
std::vector<MethodPair> pair_methods(const MethodTable& a, const MethodTable& b,
                                     double threshold = 0.5);

/// Extraction plus the per-mode linearization: LA runs abstract method
/// linearization then invocation inlining; LA_M only inlining.
MethodTable prepare_method_table(const ProgramModel& program, Mode mode,
                                 bool include_synthetic = true,
                                 const LinearizeOptions& options = {});

/// Pairs methods, tiles every pair and aggregates the metrics. The result
/// does not depend on argument order beyond the a/b labels.
ComparisonReport compare_tables(const MethodTable& a, const MethodTable& b, Mode mode,
                                const CompareOptions& options = {});

/// prepare_method_table on both programs, then compare_tables. Mode must
/// be LA or LA_M.
ComparisonReport compare_programs(const ProgramModel& a, const ProgramModel& b, Mode mode,
                                  const CompareOptions& options = {},
                                  const LinearizeOptions& linearize = {});

}  // namespace lowdup
