#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lowdup/token.hpp"

namespace lowdup {

/// A maximal matched run: a[start_a, start_a+length) == b[start_b, start_b+length).
struct Tile {
  std::size_t start_a = 0;
  std::size_t start_b = 0;
  std::size_t length = 0;

  auto operator<=>(const Tile&) const = default;
};

/// Greedy string tiling with Karp-Rabin acceleration (RKGST).
///
/// Repeatedly takes the longest common substring of still-unmarked symbols
/// with length >= min_match and marks it as a tile. Equal-length candidates
/// are taken in ascending (start_a, start_b) order, skipping any that
/// overlap a tile already marked. Rolling hashes only nominate candidates;
/// every candidate is verified symbol by symbol.
///
/// Tiles are returned in marking order. Requires min_match >= 1.
std::vector<Tile> rkgst(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                        std::size_t min_match);

std::size_t matched_tokens(std::span<const Tile> tiles);

/// Maps tokens (by family and annotation) to dense symbol ids so that
/// sequences from two programs can be tiled.
class TokenInterner {
 public:
  std::uint32_t id(const Token& token);
  std::vector<std::uint32_t> ids(std::span<const Token> tokens);

 private:
  std::map<Token, std::uint32_t> ids_;
};

/// Convenience overload interning both sequences.
std::vector<Tile> rkgst(std::span<const Token> a, std::span<const Token> b,
                        std::size_t min_match);

}  // namespace lowdup
