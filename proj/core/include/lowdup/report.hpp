#pragma once

#include <string>
#include <string_view>

#include "lowdup/similarity.hpp"

namespace lowdup {

enum class OutputFormat { Text, Json, Csv };

/// Shortest decimal text that round-trips the double ("1", "0.75").
std::string format_double(double value);

/// JSON object mirroring ComparisonReport field for field. Tiles are
/// included only when `verbose`. Output is stable: serialize, parse and
/// serialize again gives identical bytes.
std::string report_to_json(const ComparisonReport& report, bool verbose = false);
ComparisonReport report_from_json(std::string_view text);

/// "a,b,mode,matched,involved,mt,imt,similarity"
std::string csv_header();
std::string csv_row(std::string_view label_a, std::string_view label_b,
                    const ComparisonReport& report);

/// Human-readable summary; per-pair and tile detail when `verbose`.
std::string report_to_text(std::string_view label_a, std::string_view label_b,
                           const ComparisonReport& report, bool verbose, bool color);

}  // namespace lowdup
