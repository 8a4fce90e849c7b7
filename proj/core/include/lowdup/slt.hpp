#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lowdup/lexer.hpp"
#include "lowdup/similarity.hpp"

namespace lowdup {

struct SltOptions {
  /// Map every identifier to one symbol (sensitivity studies only; the
  /// baseline compares raw lexemes).
  bool abstract_identifiers = false;
};

/// Lexical baseline: both sources lexed and tiled as one whole stream each.
/// The report carries exactly one pair covering the full streams.
ComparisonReport slt_compare(std::string_view source_a, std::string_view source_b,
                             const CompareOptions& options = {},
                             const SltOptions& slt = {});

/// Same comparison over already-lexed streams.
ComparisonReport slt_compare_tokens(const std::vector<LexToken>& a,
                                    const std::vector<LexToken>& b,
                                    const CompareOptions& options = {},
                                    const SltOptions& slt = {});

}  // namespace lowdup
