#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ordfor/morphism.hpp"

namespace ordfor {

// The height-zero forest [n] as the identity of [n].
inline ForestMorphism identity(int n) {
  if (n < 0) fail(Err::MalformedInput, "identity of a negative ordinal");
  return ForestMorphism::from_forest(OrderedForest::validate(n + 1, {}));
}

// Reduced composition: graft, then contract to normal form.
inline ForestMorphism compose(const ForestMorphism& f,
                              const ForestMorphism& g) {
  return reduce(raw_graft(f, g).h);
}

struct HomSet {
  int dom = 0, cod = 0;
  std::vector<ForestMorphism> morphisms;  // sorted, duplicate-free
};

namespace detail {

// Trees are built bottom-up in post-order: children blocks first, root last.
struct PlainTree {
  int size;
  std::vector<Cover> covers;  // root is rank size-1
};

inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(parts, 1);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == parts - 1) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= left - (parts - 1 - idx); ++v) {
      cur[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  if (total >= parts) rec(rec, 0, total);
  return out;
}

inline PlainTree hang(const std::vector<PlainTree>& children) {
  PlainTree t;
  t.size = 1;
  for (const auto& c : children) t.size += c.size;
  int offset = 0;
  for (const auto& c : children) {
    for (const auto& [a, b] : c.covers)
      t.covers.emplace_back(a + offset, b + offset);
    t.covers.emplace_back(offset + c.size - 1, t.size - 1);
    offset += c.size;
  }
  return t;
}

// Subtrees hanging below some vertex: their roots are internal vertices of
// the ambient tree, so they must branch (>= 2 children) unless they are bare
// leaves.
inline const std::vector<PlainTree>& branching_subtrees(int leaves) {
  static std::map<int, std::vector<PlainTree>> memo;
  auto it = memo.find(leaves);
  if (it != memo.end()) return it->second;
  std::vector<PlainTree> out;
  if (leaves == 1) {
    out.push_back(PlainTree{1, {}});
  } else {
    for (int k = 2; k <= leaves; ++k) {
      for (const auto& comp : compositions(leaves, k)) {
        std::vector<std::vector<PlainTree>> pools;
        for (int part : comp) pools.push_back(branching_subtrees(part));
        std::vector<PlainTree> pick(k, PlainTree{});
        auto rec = [&](auto&& self, int idx) -> void {
          if (idx == k) {
            out.push_back(hang(pick));
            return;
          }
          for (const auto& cand : pools[idx]) {
            pick[idx] = cand;
            self(self, idx + 1);
          }
        };
        rec(rec, 0);
      }
    }
  }
  return memo.emplace(leaves, std::move(out)).first->second;
}

// Reduced ordered trees with a given number of leaves. The root is exempt
// from the branching requirement; with one leaf the tree may also be the
// bare point whose root is the leaf itself.
inline const std::vector<PlainTree>& reduced_trees(int leaves) {
  static std::map<int, std::vector<PlainTree>> memo;
  auto it = memo.find(leaves);
  if (it != memo.end()) return it->second;
  std::vector<PlainTree> out;
  if (leaves == 1) out.push_back(PlainTree{1, {}});
  for (int k = 1; k <= leaves; ++k) {
    for (const auto& comp : compositions(leaves, k)) {
      std::vector<std::vector<PlainTree>> pools;
      for (int part : comp) pools.push_back(branching_subtrees(part));
      std::vector<PlainTree> pick(k, PlainTree{});
      auto rec = [&](auto&& self, int idx) -> void {
        if (idx == k) {
          out.push_back(hang(pick));
          return;
        }
        for (const auto& cand : pools[idx]) {
          pick[idx] = cand;
          self(self, idx + 1);
        }
      };
      rec(rec, 0);
    }
  }
  return memo.emplace(leaves, std::move(out)).first->second;
}

}  // namespace detail

// Every reduced morphism [m] -> [n]: distribute the n+1 minima over the m+1
// trees (an ordered composition into nonempty blocks) and pick a reduced
// tree shape per block.
inline HomSet enumerate_hom(int m, int n) {
  if (m < 0 || n < 0) fail(Err::MalformedInput, "negative hom object");
  HomSet hs;
  hs.dom = m;
  hs.cod = n;
  if (m > n) return hs;
  for (const auto& comp : detail::compositions(n + 1, m + 1)) {
    std::vector<OrderedForest> parts(m + 1,
                                     OrderedForest::validate(1, {}));
    auto rec = [&](auto&& self, int idx) -> void {
      if (idx == m + 1) {
        hs.morphisms.push_back(
            ForestMorphism::from_forest(ordinal_sum(parts)));
        return;
      }
      for (const auto& t : detail::reduced_trees(comp[idx])) {
        parts[idx] = OrderedForest::validate(t.size, t.covers);
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(hs.morphisms.begin(), hs.morphisms.end());
  return hs;
}

// Size every element of Hom([m],[n]) must respect: one root per tree, one
// vertex per minimum, and at most n-m internal vertices since each branches.
inline int hom_size_bound(int m, int n) {
  return (m + 1) + (n + 1) + std::max(0, n - m);
}

struct AxiomReport {
  bool pass = true;
  long units_checked = 0;
  long triples_checked = 0;
  std::vector<std::string> failures;
};

// Unit laws over objects [0..unit_max], associativity over all composable
// triples with objects in [0..assoc_max]. Failures are reported, not thrown.
inline AxiomReport check_category_axioms(int unit_max, int assoc_max) {
  AxiomReport rep;
  std::map<std::pair<int, int>, HomSet> homs;
  int top = std::max(unit_max, assoc_max);
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b) homs[{a, b}] = enumerate_hom(a, b);

  for (int m = 0; m <= unit_max; ++m) {
    for (int n = 0; n <= unit_max; ++n) {
      for (const ForestMorphism& f : homs[{m, n}].morphisms) {
        ++rep.units_checked;
        if (!(compose(f, identity(m)) == f))
          rep.failures.push_back("right unit fails at " + f.forest().repr());
        if (!(compose(identity(n), f) == f))
          rep.failures.push_back("left unit fails at " + f.forest().repr());
      }
    }
  }
  for (int r = 0; r <= assoc_max; ++r)
    for (int l = r; l <= assoc_max; ++l)
      for (int m = l; m <= assoc_max; ++m)
        for (int n = m; n <= assoc_max; ++n)
          for (const ForestMorphism& F : homs[{m, n}].morphisms)
            for (const ForestMorphism& G : homs[{l, m}].morphisms)
              for (const ForestMorphism& K : homs[{r, l}].morphisms) {
                ++rep.triples_checked;
                if (!(compose(compose(F, G), K) == compose(F, compose(G, K))))
                  rep.failures.push_back(
                      "associativity fails at " + F.forest().repr() + " ; " +
                      G.forest().repr() + " ; " + K.forest().repr());
              }
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace ordfor
