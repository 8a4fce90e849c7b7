#pragma once

// Reference implementations used to check the library: plain greedy string
// tiling without hashing, and helpers for building test inputs.

#include <lowdup/rkgst.hpp>

#include <cstdint>
#include <vector>

namespace oracle {

// Greedy tiling by exhaustive search: find the longest common run of
// unmarked symbols, then mark every run of that length in (i, j) order that
// is still fully unmarked. Repeat until the longest run is below min_match.
// Calls on_tile(i, j, length) for each tile in marking order.
template <typename OnTile>
void greedy_tiling_each(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::size_t min_match, OnTile&& on_tile) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::uint32_t* pa = a.data();
  const std::uint32_t* pb = b.data();
  // Not a char type, so stores to the marks cannot alias the sizes.
  thread_local std::vector<std::uint16_t> ma;
  thread_local std::vector<std::uint16_t> mb;
  ma.assign(na, 0);
  mb.assign(nb, 0);
  auto run_at = [&](std::size_t i, std::size_t j) {
    std::size_t k = 0;
    while (i + k < na && j + k < nb && !ma[i + k] && !mb[j + k] && pa[i + k] == pb[j + k]) ++k;
    return k;
  };
  while (true) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) best = std::max(best, run_at(i, j));
    if (best == 0 || best < min_match) break;
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        if (run_at(i, j) < best) continue;
        for (std::size_t k = 0; k < best; ++k) ma[i + k] = mb[j + k] = 1;
        on_tile(i, j, best);
      }
    }
  }
}

inline std::vector<lowdup::Tile> greedy_tiling(const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b,
                                               std::size_t min_match) {
  std::vector<lowdup::Tile> tiles;
  greedy_tiling_each(a, b, min_match,
                     [&](std::size_t i, std::size_t j, std::size_t len) { tiles.push_back({i, j, len}); });
  return tiles;
}

// Same greedy tiling, tracking only the matched count. Each pass fills
// run[i][j], the length of the common unmarked run starting at (i, j), from
// the back; marking then rechecks occlusion cell by cell.
inline std::size_t greedy_matched(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                  std::size_t min_match) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t stride = nb + 1;
  thread_local std::vector<std::uint32_t> run;
  thread_local std::vector<std::uint16_t> ma;
  thread_local std::vector<std::uint16_t> mb;
  run.assign((na + 1) * stride, 0);
  ma.assign(na, 0);
  mb.assign(nb, 0);
  std::size_t matched = 0;
  while (true) {
    std::size_t best = 0;
    for (std::size_t i = na; i-- > 0;) {
      for (std::size_t j = nb; j-- > 0;) {
        const bool open = !ma[i] && !mb[j] && a[i] == b[j];
        const std::uint32_t r = open ? run[(i + 1) * stride + j + 1] + 1 : 0;
        run[i * stride + j] = r;
        best = std::max<std::size_t>(best, r);
      }
    }
    if (best == 0 || best < min_match) break;
    for (std::size_t i = 0; i + best <= na; ++i) {
      for (std::size_t j = 0; j + best <= nb; ++j) {
        if (run[i * stride + j] < best) continue;
        bool free = true;
        for (std::size_t k = 0; k < best && free; ++k) free = !ma[i + k] && !mb[j + k];
        if (!free) continue;
        for (std::size_t k = 0; k < best; ++k) ma[i + k] = mb[j + k] = 1;
        matched += best;
      }
    }
  }
  return matched;
}

inline std::size_t matched(const std::vector<lowdup::Tile>& tiles) {
  std::size_t n = 0;
  for (const auto& t : tiles) n += t.length;
  return n;
}

}  // namespace oracle
