#include "lowdup/rkgst.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lowdup {
namespace {

constexpr std::uint64_t kBase = 1'048'583;

// Prefix hashes with natural 64-bit wraparound; window hash of [i, i+len)
// is prefix[i+len] - prefix[i] * power[len].
class RollingHash {
 public:
  void reset(std::span<const std::uint32_t> symbols) {
    prefix_.assign(symbols.size() + 1, 0);
    power_.assign(symbols.size() + 1, 1);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      prefix_[i + 1] = prefix_[i] * kBase + (std::uint64_t{symbols[i]} + 1);
      power_[i + 1] = power_[i] * kBase;
    }
  }

  std::uint64_t window(std::size_t start, std::size_t length) const {
    return prefix_[start + length] - prefix_[start] * power_[length];
  }

 private:
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> power_;
};

// Buffers are kept between calls; one tiler per thread.
class Tiler {
 public:
  void reset(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    a_ = a;
    b_ = b;
    hash_a_.reset(a);
    hash_b_.reset(b);
    marked_a_.assign(a.size(), 0);
    marked_b_.assign(b.size(), 0);
    run_a_.assign(a.size() + 1, 0);
    run_b_.assign(b.size() + 1, 0);
  }

  std::vector<Tile> run(std::size_t min_match) {
    std::vector<Tile> tiles;
    std::size_t upper = std::min(a_.size(), b_.size());
    while (true) {
      upper = std::min({upper, free_runs(marked_a_, run_a_), free_runs(marked_b_, run_b_)});
      if (upper < min_match || !collect(min_match, /*first_only=*/true)) break;
      // Largest length with a common unmarked window; existence is monotone
      // in the length, so binary search.
      std::size_t lo = min_match;
      std::size_t hi = upper;
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (collect(mid, true)) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      const std::size_t length = lo;
      upper = length;
      collect(length, false);
      std::sort(found_.begin(), found_.end());
      for (const auto& [i, j] : found_) {
        if (occluded(i, j, length)) continue;
        std::fill_n(marked_a_.begin() + static_cast<std::ptrdiff_t>(i), length, 1);
        std::fill_n(marked_b_.begin() + static_cast<std::ptrdiff_t>(j), length, 1);
        tiles.push_back(Tile{i, j, length});
      }
    }
    return tiles;
  }

 private:
  // run[i] = number of consecutive unmarked symbols starting at i; returns
  // the longest run.
  static std::size_t free_runs(const std::vector<std::uint8_t>& marked,
                               std::vector<std::size_t>& run) {
    std::size_t longest = 0;
    run[marked.size()] = 0;
    for (std::size_t i = marked.size(); i-- > 0;) {
      run[i] = marked[i] ? 0 : run[i + 1] + 1;
      longest = std::max(longest, run[i]);
    }
    return longest;
  }

  bool occluded(std::size_t i, std::size_t j, std::size_t length) const {
    for (std::size_t k = 0; k < length; ++k) {
      if (marked_a_[i + k] || marked_b_[j + k]) return true;
    }
    return false;
  }

  bool equal_windows(std::size_t i, std::size_t j, std::size_t length) const {
    return std::equal(a_.begin() + static_cast<std::ptrdiff_t>(i),
                      a_.begin() + static_cast<std::ptrdiff_t>(i + length),
                      b_.begin() + static_cast<std::ptrdiff_t>(j));
  }

  // Fills found_ with verified (i, j) pairs of fully unmarked equal windows
  // of `length`; with `first_only`, stops at the first one. Returns whether
  // any exists.
  bool collect(std::size_t length, bool first_only) {
    found_.clear();
    windows_.clear();
    for (std::size_t i = 0; i + length <= a_.size(); ++i) {
      if (run_a_[i] >= length) windows_.emplace_back(hash_a_.window(i, length), i);
    }
    if (windows_.empty()) return false;
    std::sort(windows_.begin(), windows_.end());
    for (std::size_t j = 0; j + length <= b_.size(); ++j) {
      if (run_b_[j] < length) continue;
      const std::uint64_t h = hash_b_.window(j, length);
      auto it = std::lower_bound(windows_.begin(), windows_.end(),
                                 std::pair<std::uint64_t, std::size_t>{h, 0});
      for (; it != windows_.end() && it->first == h; ++it) {
        if (!equal_windows(it->second, j, length)) continue;  // hash collision
        found_.emplace_back(it->second, j);
        if (first_only) return true;
      }
    }
    return !found_.empty();
  }

  std::span<const std::uint32_t> a_;
  std::span<const std::uint32_t> b_;
  RollingHash hash_a_;
  RollingHash hash_b_;
  std::vector<std::uint8_t> marked_a_;
  std::vector<std::uint8_t> marked_b_;
  std::vector<std::size_t> run_a_;
  std::vector<std::size_t> run_b_;
  std::vector<std::pair<std::uint64_t, std::size_t>> windows_;
  std::vector<std::pair<std::size_t, std::size_t>> found_;
};

}  // namespace

std::vector<Tile> rkgst(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                        std::size_t min_match) {
  if (min_match == 0) throw std::invalid_argument("rkgst: min_match must be >= 1");
  if (a.empty() || b.empty()) return {};
  thread_local Tiler tiler;
  tiler.reset(a, b);
  return tiler.run(min_match);
}

std::size_t matched_tokens(std::span<const Tile> tiles) {
  std::size_t total = 0;
  for (const Tile& t : tiles) total += t.length;
  return total;
}

std::uint32_t TokenInterner::id(const Token& token) {
  const auto next = static_cast<std::uint32_t>(ids_.size());
  return ids_.try_emplace(token, next).first->second;
}

std::vector<std::uint32_t> TokenInterner::ids(std::span<const Token> tokens) {
  std::vector<std::uint32_t> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(id(t));
  return out;
}

std::vector<Tile> rkgst(std::span<const Token> a, std::span<const Token> b,
                        std::size_t min_match) {
  TokenInterner interner;
  const auto ia = interner.ids(a);
  const auto ib = interner.ids(b);
  return rkgst(ia, ib, min_match);
}

}  // namespace lowdup
