#include <algorithm>
#include <map>

#include "lowdup/descriptor.hpp"
#include "lowdup/linearize.hpp"

namespace lowdup {
namespace {

std::size_t lcs_length(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Parameter types plus the return type; the return type is tagged so it
// never matches a parameter of the same type.
std::map<std::string, std::size_t> type_multiset(const MethodDescriptor& d) {
  std::map<std::string, std::size_t> out;
  for (const auto& p : d.parameters) ++out[p];
  ++out["->" + d.return_type];
  return out;
}

double descriptor_similarity(const std::string& a, const std::string& b) {
  if (a == b) return 1.0;
  const auto da = parse_method_descriptor(a);
  const auto db = parse_method_descriptor(b);
  if (!da || !db) return 0.0;
  const auto ma = type_multiset(*da);
  const auto mb = type_multiset(*db);
  std::size_t common = 0;
  for (const auto& [type, count] : ma) {
    if (const auto it = mb.find(type); it != mb.end()) common += std::min(count, it->second);
  }
  const std::size_t total = da->parameters.size() + db->parameters.size() + 2;
  return 2.0 * static_cast<double>(common) / static_cast<double>(total);
}

}  // namespace

double name_similarity(const std::string& a, const std::string& b) {
  if (a == b) return 1.0;
  const std::size_t total = a.size() + b.size();
  return total == 0 ? 1.0 : 2.0 * static_cast<double>(lcs_length(a, b)) / static_cast<double>(total);
}

double signature_similarity(const std::string& name_a, const std::string& descriptor_a,
                            const std::string& name_b, const std::string& descriptor_b) {
  return 0.5 * name_similarity(name_a, name_b) +
         0.5 * descriptor_similarity(descriptor_a, descriptor_b);
}

}  // namespace lowdup
