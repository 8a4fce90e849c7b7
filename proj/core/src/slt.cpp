#include "lowdup/slt.hpp"

#include <map>
#include <string>
#include <utility>

namespace lowdup {
namespace {

// Ids follow the sorted order of distinct (kind, text) keys, so comparing
// id streams compares token content.
class LexInterner {
 public:
  LexInterner(const std::vector<LexToken>& a, const std::vector<LexToken>& b,
              bool abstract_identifiers)
      : abstract_(abstract_identifiers) {
    for (const LexToken& t : a) ids_.emplace(key(t), 0);
    for (const LexToken& t : b) ids_.emplace(key(t), 0);
    std::uint32_t next = 0;
    for (auto& [k, id] : ids_) id = next++;
  }

  std::vector<std::uint32_t> ids(const std::vector<LexToken>& tokens) const {
    std::vector<std::uint32_t> out;
    out.reserve(tokens.size());
    for (const LexToken& t : tokens) out.push_back(ids_.at(key(t)));
    return out;
  }

 private:
  std::pair<LexKind, std::string> key(const LexToken& t) const {
    if (abstract_ && t.kind == LexKind::Identifier) return {t.kind, std::string()};
    return {t.kind, t.text};
  }

  bool abstract_;
  std::map<std::pair<LexKind, std::string>, std::uint32_t> ids_;
};

}  // namespace

ComparisonReport slt_compare_tokens(const std::vector<LexToken>& a,
                                    const std::vector<LexToken>& b,
                                    const CompareOptions& options, const SltOptions& slt) {
  const LexInterner interner(a, b, slt.abstract_identifiers);
  const auto ia = interner.ids(a);
  const auto ib = interner.ids(b);

  ComparisonReport report;
  report.mode = Mode::SLT;
  MethodPair pair;
  pair.key_a = MethodKey{"<source>", "<stream>", ""};
  pair.key_b = pair.key_a;
  pair.sig_score = 1.0;
  // Orient by stream content so that swapping the inputs only swaps labels.
  if (ib < ia) {
    pair.tiles = rkgst(ib, ia, options.min_match);
    for (Tile& t : pair.tiles) std::swap(t.start_a, t.start_b);
  } else {
    pair.tiles = rkgst(ia, ib, options.min_match);
  }
  pair.matched = matched_tokens(pair.tiles);
  report.matched_total = pair.matched;
  report.pairs.push_back(std::move(pair));
  report.involved = involved_tokens(a.size(), b.size(), options.involved);
  finalize_metrics(report);
  return report;
}

ComparisonReport slt_compare(std::string_view source_a, std::string_view source_b,
                             const CompareOptions& options, const SltOptions& slt) {
  return slt_compare_tokens(lex_source(source_a), lex_source(source_b), options, slt);
}

}  // namespace lowdup
