#include "lowdup/report.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

#include "lowdup/error.hpp"

namespace lowdup {
namespace {

using nlohmann::json;

Mode mode_from_string(const std::string& text) {
  if (text == "LA") return Mode::LA;
  if (text == "LA_M") return Mode::LA_M;
  if (text == "SLT") return Mode::SLT;
  throw std::invalid_argument("unknown mode \"" + text + "\"");
}

MethodKey key_from_string(const std::string& text) {
  auto key = parse_method_key(text);
  if (!key) throw std::invalid_argument("bad method key \"" + text + "\"");
  return *key;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string report_to_json(const ComparisonReport& report, bool verbose) {
  json pairs = json::array();
  for (const MethodPair& p : report.pairs) {
    json node = {{"key_a", p.key_a.str()},
                 {"key_b", p.key_b.str()},
                 {"sig_score", p.sig_score},
                 {"matched", p.matched}};
    if (verbose) {
      json tiles = json::array();
      for (const Tile& t : p.tiles) tiles.push_back({t.start_a, t.start_b, t.length});
      node["tiles"] = std::move(tiles);
    }
    pairs.push_back(std::move(node));
  }
  const json doc = {{"mode", std::string(to_string(report.mode))},
                    {"pairs", std::move(pairs)},
                    {"matched_total", report.matched_total},
                    {"involved", report.involved},
                    {"mt", report.mt},
                    {"imt", report.imt},
                    {"similarity", report.similarity}};
  return doc.dump(2) + "\n";
}

ComparisonReport report_from_json(std::string_view text) {
  const json doc = json::parse(text.begin(), text.end());
  ComparisonReport report;
  report.mode = mode_from_string(doc.at("mode").get<std::string>());
  for (const json& node : doc.at("pairs")) {
    MethodPair p;
    p.key_a = key_from_string(node.at("key_a").get<std::string>());
    p.key_b = key_from_string(node.at("key_b").get<std::string>());
    p.sig_score = node.at("sig_score").get<double>();
    p.matched = node.at("matched").get<std::size_t>();
    if (const auto it = node.find("tiles"); it != node.end()) {
      for (const json& t : *it) {
        p.tiles.push_back(Tile{t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(),
                               t.at(2).get<std::size_t>()});
      }
    }
    report.pairs.push_back(std::move(p));
  }
  report.matched_total = doc.at("matched_total").get<std::size_t>();
  report.involved = doc.at("involved").get<std::size_t>();
  report.mt = doc.at("mt").get<std::size_t>();
  report.imt = doc.at("imt").get<std::int64_t>();
  report.similarity = doc.at("similarity").get<double>();
  return report;
}

std::string csv_header() { return "a,b,mode,matched,involved,mt,imt,similarity\n"; }

std::string csv_row(std::string_view label_a, std::string_view label_b,
                    const ComparisonReport& report) {
  std::ostringstream out;
  out << csv_field(label_a) << ',' << csv_field(label_b) << ',' << to_string(report.mode)
      << ',' << report.matched_total << ',' << report.involved << ',' << report.mt << ','
      << report.imt << ',' << format_double(report.similarity) << '\n';
  return out.str();
}

std::string report_to_text(std::string_view label_a, std::string_view label_b,
                           const ComparisonReport& report, bool verbose, bool color) {
  const char* bold = color ? "\x1b[1m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  std::ostringstream out;
  out << bold << label_a << " vs " << label_b << reset << " [" << to_string(report.mode)
      << "]  similarity=" << format_double(report.similarity)
      << "  matched=" << report.matched_total << "  involved=" << report.involved
      << "  MT=" << report.mt << "  IMT=" << report.imt << '\n';
  if (!verbose) return out.str();
  for (const MethodPair& p : report.pairs) {
    out << "  " << p.key_a.str() << " <-> " << p.key_b.str()
        << "  sig=" << format_double(p.sig_score) << "  matched=" << p.matched << '\n';
    for (const Tile& t : p.tiles) {
      out << "    tile a@" << t.start_a << " b@" << t.start_b << " len=" << t.length << '\n';
    }
  }
  return out.str();
}

}  // namespace lowdup
