#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ordfor/category.hpp"

namespace ordfor {
namespace oracle {

// Reference implementations that deliberately avoid the production code
// paths: the definitional checker works from the raw order axioms, and the
// two generators below approach forest enumeration from different angles.
// Cross-checks between all of these live in the test suites.

// Checks (size, covers) against the raw definitions only: close the covers
// to a relation, demand a partial order compatible with the rank order,
// demand Hasse-minimality of the given covers, and test lower-set
// contiguity directly on the closure.
inline bool raw_accepts(int size, const std::vector<Cover>& covers) {
  for (const auto& [a, b] : covers)
    if (a < 0 || b < 0 || a >= size || b >= size) return false;

  // Reflexive-transitive closure by fixpoint, no rank-order shortcut.
  std::vector<std::vector<char>> leq(size, std::vector<char>(size, 0));
  for (int x = 0; x < size; ++x) leq[x][x] = 1;
  for (const auto& [a, b] : covers) leq[a][b] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        if (leq[x][y])
          for (int z = 0; z < size; ++z)
            if (leq[y][z] && !leq[x][z]) {
              leq[x][z] = 1;
              changed = true;
            }
  }

  // Antisymmetry, then compatibility with the total order.
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) return false;
      if (leq[x][y] && x > y) return false;
    }

  // The covers must be exactly the Hasse pairs of the closure.
  for (const auto& [a, b] : covers) {
    if (a == b) return false;
    for (int z = 0; z < size; ++z)
      if (z != a && z != b && leq[a][z] && leq[z][b]) return false;
  }
  int hasse = 0;
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (x == y || !leq[x][y]) continue;
      bool direct = true;
      for (int z = 0; z < size; ++z)
        if (z != x && z != y && leq[x][z] && leq[z][y]) direct = false;
      if (direct) ++hasse;
    }
  std::vector<Cover> dedup = covers;
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  if ((int)dedup.size() != (int)covers.size()) return false;
  if (hasse != (int)covers.size()) return false;

  // Interval condition on every principal lower set.
  for (int x = 0; x < size; ++x) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        if (!leq[a][x] || !leq[b][x] || a > b) continue;
        for (int c = a; c <= b; ++c)
          if (!leq[c][x]) return false;
      }
  }
  return true;
}

// Exhaustive sweep over every cover subset of a given size. Feasible up to
// size 7 (2^21 subsets); the acceptance suite runs it there.
inline std::vector<OrderedForest> forests_by_cover_subsets(int size) {
  std::vector<Cover> all;
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b) all.emplace_back(a, b);
  std::vector<OrderedForest> out;
  for (unsigned long mask = 0; mask < (1ul << all.size()); ++mask) {
    std::vector<Cover> covers;
    for (size_t i = 0; i < all.size(); ++i)
      if (mask & (1ul << i)) covers.push_back(all[i]);
    if (raw_accepts(size, covers))
      out.push_back(OrderedForest::validate(size, covers));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Faster generator used where the subset sweep is out of reach: assign each
// rank an optional parent above it and keep what the full validator
// accepts. The test suite proves it equal to the subset sweep on small
// sizes before it is trusted further up.
inline std::vector<OrderedForest> forests_by_parent_arrays(int size) {
  std::vector<OrderedForest> out;
  if (size == 0) {
    out.push_back(OrderedForest::validate(0, {}));
    return out;
  }
  std::vector<int> parent(size, -1);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == size) {
      std::vector<Cover> covers;
      for (int r = 0; r < size; ++r)
        if (parent[r] >= 0) covers.emplace_back(r, parent[r]);
      try {
        out.push_back(OrderedForest::validate(size, std::move(covers)));
      } catch (const Error&) {
      }
      return;
    }
    for (int p = -1; p < size; ++p) {
      if (p != -1 && p <= x) continue;
      parent[x] = p;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline const std::vector<OrderedForest>& all_forests(int size) {
  static std::map<int, std::vector<OrderedForest>> memo;
  auto it = memo.find(size);
  if (it != memo.end()) return it->second;
  return memo.emplace(size, forests_by_parent_arrays(size)).first->second;
}

// Brute-force hom-set: filter every forest of every size up to the stated
// bound (plus optional slack to probe the bound itself) by stratum counts
// and reducedness.
inline std::vector<ForestMorphism> hom_by_enumeration(int m, int n,
                                                      int size_slack = 0) {
  std::vector<ForestMorphism> out;
  int bound = hom_size_bound(m, n) + size_slack;
  for (int s = 1; s <= bound; ++s) {
    for (const OrderedForest& f : all_forests(s)) {
      ForestMorphism mor = ForestMorphism::from_forest(f);
      if (mor.dom() == m && mor.cod() == n && mor.reduced())
        out.push_back(mor);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
}  // namespace ordfor
