#include "lowdup/similarity.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "lowdup/extract.hpp"

namespace lowdup {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::LA: return "LA";
    case Mode::LA_M: return "LA_M";
    case Mode::SLT: return "SLT";
  }
  return "?";
}

std::string_view to_string(InvolvedBaseline baseline) {
  switch (baseline) {
    case InvolvedBaseline::Min: return "min";
    case InvolvedBaseline::Max: return "max";
    case InvolvedBaseline::Mean: return "mean";
  }
  return "?";
}

std::size_t involved_tokens(std::size_t total_a, std::size_t total_b,
                            InvolvedBaseline baseline) {
  switch (baseline) {
    case InvolvedBaseline::Min: return std::min(total_a, total_b);
    case InvolvedBaseline::Max: return std::max(total_a, total_b);
    case InvolvedBaseline::Mean: return (total_a + total_b) / 2;
  }
  return 0;
}

void finalize_metrics(ComparisonReport& report) {
  if (report.matched_total > report.involved) {
    throw std::logic_error("matched tokens exceed involved tokens");
  }
  report.mt = report.involved - report.matched_total;
  report.imt = imt(report.mt);
  report.similarity = report.involved == 0
                          ? 0.0
                          : static_cast<double>(report.matched_total) /
                                static_cast<double>(report.involved);
}

std::vector<MethodPair> pair_methods(const MethodTable& a, const MethodTable& b,
                                     double threshold) {
  struct Candidate {
    double score;
    double owner_score;
    const MethodKey* ka;
    const MethodKey* kb;
  };
  std::vector<Candidate> candidates;
  for (const auto& [ka, sa] : a.sequences) {
    if (a.excluded.contains(ka)) continue;
    for (const auto& [kb, sb] : b.sequences) {
      if (b.excluded.contains(kb)) continue;
      const double score = signature_similarity(ka.name, ka.descriptor, kb.name, kb.descriptor);
      if (score >= threshold) {
        candidates.push_back({score, name_similarity(ka.owner, kb.owner), &ka, &kb});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    if (x.score != y.score) return x.score > y.score;
    // Equal signatures: prefer the like-named class before falling back to key order.
    if (x.owner_score != y.owner_score) return x.owner_score > y.owner_score;
    return std::tie(*x.ka, *x.kb) < std::tie(*y.ka, *y.kb);
  });
  std::set<const MethodKey*> used_a;
  std::set<const MethodKey*> used_b;
  std::vector<MethodPair> pairs;
  for (const Candidate& c : candidates) {
    if (used_a.contains(c.ka) || used_b.contains(c.kb)) continue;
    used_a.insert(c.ka);
    used_b.insert(c.kb);
    pairs.push_back(MethodPair{*c.ka, *c.kb, c.score, {}, 0});
  }
  return pairs;
}

MethodTable prepare_method_table(const ProgramModel& program, Mode mode,
                                 bool include_synthetic, const LinearizeOptions& options) {
  if (mode == Mode::SLT) {
    throw std::invalid_argument("SLT compares source text, not method tables");
  }
  MethodTable table = extract_program(program, include_synthetic);
  if (mode == Mode::LA) table = linearize_abstract(program, std::move(table), options);
  return inline_all(table, program, options);
}

namespace {

ComparisonReport compare_directed(const MethodTable& a, const MethodTable& b, Mode mode,
                                  const CompareOptions& options) {
  ComparisonReport report;
  report.mode = mode;
  report.pairs = pair_methods(a, b, options.pairing_threshold);
  TokenInterner interner;
  for (MethodPair& pair : report.pairs) {
    const auto ia = interner.ids(a.sequences.at(pair.key_a));
    const auto ib = interner.ids(b.sequences.at(pair.key_b));
    pair.tiles = rkgst(ia, ib, options.min_match);
    pair.matched = matched_tokens(pair.tiles);
    report.matched_total += pair.matched;
  }
  report.involved = involved_tokens(a.total_tokens(), b.total_tokens(), options.involved);
  finalize_metrics(report);
  return report;
}

}  // namespace

ComparisonReport compare_tables(const MethodTable& a, const MethodTable& b, Mode mode,
                                const CompareOptions& options) {
  // Tie-breaking inside pairing and tiling depends on which side is "a";
  // always compute in a canonical direction so that swapping the inputs
  // only swaps labels.
  if (std::tie(b.sequences, b.excluded) < std::tie(a.sequences, a.excluded)) {
    ComparisonReport report = compare_directed(b, a, mode, options);
    for (MethodPair& pair : report.pairs) {
      std::swap(pair.key_a, pair.key_b);
      for (Tile& t : pair.tiles) std::swap(t.start_a, t.start_b);
    }
    return report;
  }
  return compare_directed(a, b, mode, options);
}

ComparisonReport compare_programs(const ProgramModel& a, const ProgramModel& b, Mode mode,
                                  const CompareOptions& options,
                                  const LinearizeOptions& linearize) {
  return compare_tables(prepare_method_table(a, mode, true, linearize),
                        prepare_method_table(b, mode, true, linearize), mode, options);
}

}  // namespace lowdup
