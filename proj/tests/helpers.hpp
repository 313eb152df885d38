#pragma once

#include <optional>
#include <vector>

#include "ordfor/forest.hpp"
#include "ordfor/morphism.hpp"

namespace testutil {

inline ordfor::OrderedForest mk(int size, std::vector<ordfor::Cover> covers) {
  return ordfor::OrderedForest::validate(size, std::move(covers));
}

inline ordfor::ForestMorphism mor(int size, std::vector<ordfor::Cover> covers) {
  return ordfor::ForestMorphism::from_forest(mk(size, std::move(covers)));
}

template <class F>
std::optional<ordfor::Err> error_kind(F&& fn) {
  try {
    fn();
  } catch (const ordfor::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// Component-wise post-order traversal, children visited in rank order.
inline std::vector<int> postorder(const ordfor::OrderedForest& f) {
  std::vector<int> out;
  auto rec = [&](auto&& self, int x) -> void {
    for (int c : f.covers_below(x)) self(self, c);
    out.push_back(x);
  };
  for (int r : f.maxima()) rec(rec, r);
  return out;
}

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace testutil
