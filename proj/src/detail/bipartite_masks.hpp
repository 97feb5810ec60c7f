#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cycram/errors.hpp"
#include "cycram/graph.hpp"

namespace cycram::detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask low_bits(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

/// Two vertex sides of at most 64 vertices each, with cross-side
/// neighborhoods as bitmasks over the opposite side's local indices.
struct BipartiteMasks {
  std::array<std::vector<Vertex>, 2> side;
  std::array<std::vector<Mask>, 2> nbr;

  static BipartiteMasks build(const Graph& g, std::array<std::vector<Vertex>, 2> sides) {
    BipartiteMasks bm;
    for (int i = 0; i < 2; ++i) {
      if (sides[i].size() > 64) {
        throw CapExceeded("exact subset search supports at most 64 vertices per side, got " +
                          std::to_string(sides[i].size()));
      }
    }
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < 2; ++i) {
      for (std::size_t k = 0; k < sides[i].size(); ++k) {
        index[sides[i][k]] = static_cast<int>(k);
        owner[sides[i][k]] = i;
      }
    }
    for (int i = 0; i < 2; ++i) {
      bm.nbr[i].assign(sides[i].size(), 0);
      for (std::size_t k = 0; k < sides[i].size(); ++k) {
        for (Vertex y : g.neighbors(sides[i][k])) {
          if (owner[y] == 1 - i) bm.nbr[i][k] |= Mask{1} << index[y];
        }
      }
    }
    bm.side = std::move(sides);
    return bm;
  }

  static BipartiteMasks from_labels(const Graph& g) {
    return build(g, {g.part_members(0), g.part_members(1)});
  }

  int size(int i) const { return static_cast<int>(side[i].size()); }

  Mask neighborhood(int i, Mask set) const {
    Mask out = 0;
    for (Mask m = set; m; m &= m - 1) out |= nbr[i][std::countr_zero(m)];
    return out;
  }

  std::vector<Vertex> to_vertices(int i, Mask m) const {
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(side[i][std::countr_zero(m)]);
    return out;
  }
};

/// Calls fn(set, neighborhood) for every subset of `pool` of exactly `size`
/// bits, in lexicographic order of member indices; stops when fn returns false.
/// Returns false iff stopped early.
template <class Fn>
bool for_each_subset(const BipartiteMasks& bm, int side, Mask pool, int size, Fn&& fn) {
  const int n = bm.size(side);
  auto dfs = [&](auto&& self, int from, int left, Mask set, Mask nbr) -> bool {
    if (left == 0) return fn(set, nbr);
    for (int v = from; v < n; ++v) {
      const Mask bit = Mask{1} << v;
      if (!(pool & bit)) continue;
      if (popcount(pool & ~low_bits(v)) < left) return true;
      if (!self(self, v + 1, left - 1, set | bit, nbr | bm.nbr[side][v])) return false;
    }
    return true;
  };
  return dfs(dfs, 0, size, 0, 0);
}

}  // namespace cycram::detail
