#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ordfor/forest.hpp"

namespace ordfor {

// A boundary-labelled ordered forest viewed as a morphism [m] -> [n]:
// [m] is identified with the maxima and [n] with the minima, both in rank
// order. Those identifications are order-isomorphisms onto the strata, so
// they carry no data of their own; equality of morphisms is equality of the
// underlying rank-canonical forests.
class ForestMorphism {
public:
  static ForestMorphism from_forest(OrderedForest f) {
    if (f.size() == 0)
      fail(Err::MalformedInput, "an empty forest has no boundary strata");
    ForestMorphism m;
    m.maxima_ = f.maxima();
    m.minima_ = f.minima();
    m.dom_ = (int)m.maxima_.size() - 1;
    m.cod_ = (int)m.minima_.size() - 1;
    m.forest_ = std::move(f);
    m.reduced_ = unary_vertices_of(m.forest_).empty();
    return m;
  }

  const OrderedForest& forest() const { return forest_; }
  int dom() const { return dom_; }
  int cod() const { return cod_; }
  bool reduced() const { return reduced_; }

  // iota^+ / iota^-: the i-th boundary element in rank order.
  int max_label(int i) const { return maxima_.at(i); }
  int min_label(int j) const { return minima_.at(j); }
  const std::vector<int>& maxima() const { return maxima_; }
  const std::vector<int>& minima() const { return minima_; }

  friend bool operator==(const ForestMorphism& a, const ForestMorphism& b) {
    return a.forest_ == b.forest_;
  }
  friend bool operator<(const ForestMorphism& a, const ForestMorphism& b) {
    return a.forest_ < b.forest_;
  }

  static std::vector<int> unary_vertices_of(const OrderedForest& f) {
    std::vector<int> out;
    for (int v = 0; v < f.size(); ++v) {
      if (f.is_minimal(v) || f.is_maximal(v)) continue;
      if (f.covers_below(v).size() == 1 && f.covers_above(v).size() == 1)
        out.push_back(v);
    }
    return out;
  }

private:
  ForestMorphism() = default;
  OrderedForest forest_;
  std::vector<int> maxima_, minima_;
  int dom_ = 0, cod_ = 0;
  bool reduced_ = false;
};

// Cospan-level isomorphism. Total orders are rigid, so two labelled forests
// are isomorphic exactly when their canonical forms coincide; the explicit
// bijection search backing this shortcut lives in the test suite.
inline bool is_isomorphic(const ForestMorphism& a, const ForestMorphism& b) {
  return a == b;
}

inline std::vector<int> unary_vertices(const OrderedForest& f) {
  return ForestMorphism::unary_vertices_of(f);
}

// Result of grafting F over G: H together with the rank maps into it and the
// collapse H -> G sending each inserted tree back to the minimum it replaced.
struct GraftResult {
  ForestMorphism h;
  std::vector<int> j_f;       // F -> H, injective
  std::vector<int> j_g;       // G -> H, j_g(y_i) = j_f(x_i)
  std::vector<int> collapse;  // H -> G
};

// Replaces the i-th minimum of G by the i-th maximal tree of F. The rank
// layout interleaves the blocks of G \ min(G) with the inserted tree blocks
// at the positions of the replaced minima.
inline GraftResult raw_graft(const ForestMorphism& f,
                             const ForestMorphism& g) {
  if (f.dom() != g.cod())
    fail(Err::BoundaryMismatch,
         "dom " + std::to_string(f.dom()) + " vs cod " +
             std::to_string(g.cod()));
  const OrderedForest& F = f.forest();
  const OrderedForest& G = g.forest();
  TreeDecomposition dec = decompose(F);

  std::vector<int> min_index(G.size(), -1);
  for (size_t i = 0; i < g.minima().size(); ++i) min_index[g.minima()[i]] = (int)i;

  std::vector<int> j_f(F.size(), -1), j_g(G.size(), -1), collapse;
  int pos = 0;
  for (int z = 0; z < G.size(); ++z) {
    if (int i = min_index[z]; i >= 0) {
      const TreeComponent& t = dec.components[i];
      for (int u = t.lo; u <= t.hi; ++u) {
        j_f[u] = pos++;
        collapse.push_back(z);
      }
      j_g[z] = j_f[t.root];
    } else {
      j_g[z] = pos++;
      collapse.push_back(z);
    }
  }

  std::vector<Cover> covers;
  for (const auto& [a, b] : F.covers()) covers.emplace_back(j_f[a], j_f[b]);
  for (const auto& [a, b] : G.covers()) covers.emplace_back(j_g[a], j_g[b]);

  GraftResult res{ForestMorphism::from_forest(
                      OrderedForest::validate(pos, std::move(covers))),
                  std::move(j_f), std::move(j_g), std::move(collapse)};
  if (res.h.dom() != g.dom() || res.h.cod() != f.cod())
    throw std::logic_error("graft boundary strata do not match");
  return res;
}

// Boundary-compatible cocones out of the span F <- [m] -> G into Q: pairs
// (phi, psi) of forest maps agreeing on the shared boundary, with everything
// of G strictly total-order-below a replaced minimum mapped weakly below the
// corresponding inserted tree.
inline bool is_boundary_cocone(const ForestMorphism& f,
                               const ForestMorphism& g,
                               const std::vector<int>& phi,
                               const std::vector<int>& psi,
                               const OrderedForest& q) {
  auto valid_map = [&q](const OrderedForest& src, const std::vector<int>& h) {
    if ((int)h.size() != src.size()) return false;
    for (int x = 0; x < src.size(); ++x) {
      if (h[x] < 0 || h[x] >= q.size()) return false;
      if (x > 0 && h[x - 1] > h[x]) return false;
    }
    for (const auto& [a, b] : src.covers())
      if (!q.leq(h[a], h[b])) return false;
    return true;
  };
  if (!valid_map(f.forest(), phi) || !valid_map(g.forest(), psi)) return false;
  TreeDecomposition dec = decompose(f.forest());
  int m = f.dom();
  for (int i = 0; i <= m; ++i)
    if (phi[f.max_label(i)] != psi[g.min_label(i)]) return false;
  for (int i = 0; i <= m; ++i) {
    int y = g.min_label(i);
    if (y == 0) continue;
    // Both maps are weakly rank-monotone, so the extremes suffice.
    if (psi[y - 1] > phi[dec.components[i].lo]) return false;
  }
  return true;
}

inline std::vector<std::pair<std::vector<int>, std::vector<int>>>
boundary_cocones(const ForestMorphism& f, const ForestMorphism& g,
                 const OrderedForest& q) {
  if (f.dom() != g.cod())
    fail(Err::BoundaryMismatch, "cocone over a non-composable pair");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  auto fs = forest_maps(f.forest(), q);
  auto gs = forest_maps(g.forest(), q);
  for (const auto& phi : fs)
    for (const auto& psi : gs)
      if (is_boundary_cocone(f, g, phi, psi, q)) out.emplace_back(phi, psi);
  return out;
}

// The unique mediating map H -> Q through which a boundary-compatible cocone
// factors: phi on the inserted trees, psi on the kept part of G.
inline std::vector<int> factor_cocone(const GraftResult& res,
                                      const ForestMorphism& f,
                                      const ForestMorphism& g,
                                      const std::vector<int>& phi,
                                      const std::vector<int>& psi,
                                      const OrderedForest& q) {
  if (!is_boundary_cocone(f, g, phi, psi, q))
    fail(Err::NotACocone, "pair is not a boundary-compatible cocone");
  const OrderedForest& H = res.h.forest();
  std::vector<int> u(H.size(), -1);
  for (int a = 0; a < f.forest().size(); ++a) u[res.j_f[a]] = phi[a];
  for (int z = 0; z < g.forest().size(); ++z) {
    if (u[res.j_g[z]] == -1)
      u[res.j_g[z]] = psi[z];
    else if (u[res.j_g[z]] != psi[z])
      fail(Err::NotACocone, "maps disagree on an identified boundary point");
  }
  for (int x = 1; x < H.size(); ++x)
    if (u[x - 1] > u[x])
      throw std::logic_error("mediating map is not rank-monotone");
  for (const auto& [a, b] : H.covers())
    if (!q.leq(u[a], u[b]))
      throw std::logic_error("mediating map breaks the partial order");
  return u;
}

// Removes a unary internal vertex, splicing its two covers into one.
inline OrderedForest contract(const OrderedForest& f, int v) {
  if (v < 0 || v >= f.size())
    fail(Err::RankOutOfBounds, "contract rank " + std::to_string(v), v);
  if (f.is_minimal(v) || f.is_maximal(v) || f.covers_below(v).size() != 1 ||
      f.covers_above(v).size() != 1)
    fail(Err::NotUnary, "rank " + std::to_string(v) + " is not unary", v);
  int u = f.covers_below(v)[0];
  int w = f.covers_above(v)[0];
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  std::vector<Cover> covers;
  for (const auto& [a, b] : f.covers()) {
    if (a == v || b == v) continue;
    covers.emplace_back(shift(a), shift(b));
  }
  covers.emplace_back(shift(u), shift(w));
  try {
    return OrderedForest::validate(f.size() - 1, std::move(covers));
  } catch (const Error& e) {
    if (e.kind() == Err::IntervalViolation)
      fail(Err::IntervalViolationAfterContraction, e.what(), e.witness());
    throw;
  }
}

// Iterated contraction to the reduced normal form. Order-independence of the
// result is what confluence_check certifies.
inline OrderedForest reduce(const OrderedForest& f) {
  OrderedForest cur = f;
  for (;;) {
    std::vector<int> un = unary_vertices(cur);
    if (un.empty()) return cur;
    cur = contract(cur, un.front());
  }
}

inline ForestMorphism reduce(const ForestMorphism& f) {
  return ForestMorphism::from_forest(reduce(f.forest()));
}

namespace detail {
inline const std::set<OrderedForest>& normal_forms(
    const OrderedForest& f, std::map<OrderedForest, std::set<OrderedForest>>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  std::set<OrderedForest> nf;
  std::vector<int> un = unary_vertices(f);
  if (un.empty()) {
    nf.insert(f);
  } else {
    for (int v : un) {
      const auto& sub = normal_forms(contract(f, v), memo);
      nf.insert(sub.begin(), sub.end());
    }
  }
  return memo.emplace(f, std::move(nf)).first->second;
}
}  // namespace detail

// Explores every maximal contraction sequence and reports whether they all
// end in the same normal form.
inline bool confluence_check(const OrderedForest& f) {
  std::map<OrderedForest, std::set<OrderedForest>> memo;
  const auto& nf = detail::normal_forms(f, memo);
  return nf.size() == 1 && *nf.begin() == reduce(f);
}

}  // namespace ordfor
