#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "ordfor/category.hpp"

namespace ordfor {

// An order-preserving surjection [n] ->> [m], stored by its value list.
class Surjection {
public:
  Surjection(int n, int m, std::vector<int> values)
      : n_(n), m_(m), values_(std::move(values)) {
    if (n_ < 0 || m_ < 0 || (int)values_.size() != n_ + 1)
      fail(Err::MalformedInput, "surjection value list has wrong length");
    if (values_.front() != 0 || values_.back() != m_)
      fail(Err::MalformedInput, "surjection is not onto");
    for (int j = 0; j < n_; ++j) {
      int step = values_[j + 1] - values_[j];
      if (step < 0 || step > 1)
        fail(Err::MalformedInput, "surjection values must step by 0 or 1");
    }
  }

  static Surjection id(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return Surjection(n, n, std::move(v));
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int operator()(int j) const { return values_.at(j); }
  const std::vector<int>& values() const { return values_; }

  // Fiber over i, always a nonempty rank interval.
  RankRange fiber(int i) const {
    RankRange r{n_ + 1, -1};
    for (int j = 0; j <= n_; ++j)
      if (values_[j] == i) {
        r.lo = std::min(r.lo, j);
        r.hi = std::max(r.hi, j);
      }
    return r;
  }

  friend bool operator==(const Surjection& a, const Surjection& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.values_ == b.values_;
  }
  friend bool operator<(const Surjection& a, const Surjection& b) {
    return std::tie(a.n_, a.m_, a.values_) < std::tie(b.n_, b.m_, b.values_);
  }

  std::string repr() const {
    std::string s = "[" + std::to_string(n_) + "]->>[" + std::to_string(m_) + "](";
    for (int j = 0; j <= n_; ++j) {
      if (j) s += ",";
      s += std::to_string(values_[j]);
    }
    return s + ")";
  }

private:
  int n_, m_;
  std::vector<int> values_;
};

// tau after sigma, defined when sigma lands in tau's source.
inline Surjection compose_surjections(const Surjection& sigma,
                                      const Surjection& tau) {
  if (sigma.m() != tau.n())
    fail(Err::IndexMismatch, "surjections do not compose");
  std::vector<int> v(sigma.n() + 1);
  for (int j = 0; j <= sigma.n(); ++j) v[j] = tau(sigma(j));
  return Surjection(sigma.n(), tau.m(), std::move(v));
}

inline std::vector<Surjection> enumerate_surjections(int n, int m) {
  std::vector<Surjection> out;
  if (m > n || n < 0 || m < 0) return out;
  for (const auto& comp : detail::compositions(n + 1, m + 1)) {
    std::vector<int> v;
    for (int i = 0; i <= m; ++i) v.insert(v.end(), comp[i], i);
    out.emplace_back(n, m, std::move(v));
  }
  return out;
}

// The shadow of a morphism: each minimum goes to the index of the unique
// root above it.
inline Surjection sigma_of(const ForestMorphism& f) {
  const OrderedForest& F = f.forest();
  std::vector<int> v(f.cod() + 1, -1);
  for (int j = 0; j <= f.cod(); ++j) {
    for (int i = 0; i <= f.dom(); ++i) {
      if (F.leq(f.min_label(j), f.max_label(i))) {
        v[j] = i;
        break;
      }
    }
    if (v[j] < 0)
      throw std::logic_error("minimum lies below no maximal element");
  }
  return Surjection(f.cod(), f.dom(), std::move(v));
}

// Restriction to the union of the strata, with the induced orders.
inline ForestMorphism height_one_subposet(const ForestMorphism& f) {
  const OrderedForest& F = f.forest();
  std::vector<int> keep;
  for (int x = 0; x < F.size(); ++x)
    if (F.is_minimal(x) || F.is_maximal(x)) keep.push_back(x);
  ForestMorphism out =
      ForestMorphism::from_forest(induced_subforest(F, keep));
  if (out.dom() != f.dom() || out.cod() != f.cod())
    throw std::logic_error("stratum restriction changed the boundary");
  return out;
}

// Height-one realization of a surjection: one root-plus-leaves tree per
// fiber. A singleton fiber still yields a root with one leaf below it, so
// dom and cod strata never meet.
inline ForestMorphism forest_of(const Surjection& sigma) {
  std::vector<OrderedForest> trees;
  for (int i = 0; i <= sigma.m(); ++i) {
    int leaves = sigma.fiber(i).length();
    std::vector<Cover> covers;
    for (int k = 0; k < leaves; ++k) covers.emplace_back(k, leaves);
    trees.push_back(OrderedForest::validate(leaves + 1, std::move(covers)));
  }
  ForestMorphism out = ForestMorphism::from_forest(ordinal_sum(trees));
  if (out.dom() != sigma.m() || out.cod() != sigma.n())
    throw std::logic_error("height-one realization has wrong boundary");
  return out;
}

// Every component is a root with at least one leaf strictly below it. These
// are the canonical representatives that biject with surjections.
inline bool is_strict_height_one(const OrderedForest& f) {
  for (int x = 0; x < f.size(); ++x) {
    bool mn = f.is_minimal(x), mx = f.is_maximal(x);
    if (mn == mx) return false;  // either internal or an isolated point
  }
  return f.size() > 0;
}

// An injection [m] -> [n] under the duality with surjections; m = -1 (empty
// value list) is the empty source.
struct Injection {
  int m = -1, n = -1;
  std::vector<int> values;  // strictly increasing, length m+1, entries in 0..n

  Injection(int m_, int n_, std::vector<int> v) : m(m_), n(n_), values(std::move(v)) {
    if ((int)values.size() != m + 1)
      fail(Err::MalformedInput, "injection value list has wrong length");
    for (size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0 || values[i] > n)
        fail(Err::MalformedInput, "injection value out of range");
      if (i > 0 && values[i - 1] >= values[i])
        fail(Err::MalformedInput, "injection values must strictly increase");
    }
  }

  friend bool operator==(const Injection&, const Injection&) = default;
};

inline Injection compose_injections(const Injection& outer,
                                    const Injection& inner) {
  if (inner.n != outer.m)
    fail(Err::IndexMismatch, "injections do not compose");
  std::vector<int> v;
  for (int x : inner.values) v.push_back(outer.values.at(x));
  return Injection(inner.m, outer.n, std::move(v));
}

// Cut-position duality: a surjection [n] ->> [m] is determined by the m gap
// positions where its value steps, i.e. the maxima of all fibers but the
// last.
inline Injection duality(const Surjection& sigma) {
  std::vector<int> cuts;
  for (int j = 0; j < sigma.n(); ++j)
    if (sigma(j) != sigma(j + 1)) cuts.push_back(j);
  return Injection(sigma.m() - 1, sigma.n() - 1, std::move(cuts));
}

inline Surjection surjection_from_cuts(int n, const Injection& cuts) {
  std::vector<int> v(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    v[j] = v[j - 1];
    for (int c : cuts.values)
      if (c == j - 1) ++v[j];
  }
  return Surjection(n, (int)cuts.values.size(), std::move(v));
}

struct PiReport {
  bool pass = true;
  long identities_checked = 0;
  long pairs_checked = 0;
  long fullness_checked = 0;
  long bijection_checked = 0;
  std::vector<std::string> failures;
};

// Functor laws, fullness, and the height-one bijection over objects
// [0..max_object], exhaustively from the enumerated hom-sets.
inline PiReport check_pi_functor(int max_object) {
  PiReport rep;
  auto note = [&rep](const std::string& s) { rep.failures.push_back(s); };

  std::map<std::pair<int, int>, HomSet> homs;
  for (int a = 0; a <= max_object; ++a)
    for (int b = 0; b <= max_object; ++b) homs[{a, b}] = enumerate_hom(a, b);

  for (int k = 0; k <= max_object; ++k) {
    ++rep.identities_checked;
    if (!(sigma_of(identity(k)) == Surjection::id(k)))
      note("identity shadow fails at [" + std::to_string(k) + "]");
  }

  for (int l = 0; l <= max_object; ++l)
    for (int m = l; m <= max_object; ++m)
      for (int n = m; n <= max_object; ++n)
        for (const ForestMorphism& F : homs[{m, n}].morphisms)
          for (const ForestMorphism& G : homs[{l, m}].morphisms) {
            ++rep.pairs_checked;
            Surjection lhs = sigma_of(compose(F, G));
            Surjection rhs =
                compose_surjections(sigma_of(F), sigma_of(G));
            if (!(lhs == rhs))
              note("shadow of composite fails at " + F.forest().repr() +
                   " ; " + G.forest().repr());
          }

  for (int m = 0; m <= max_object; ++m)
    for (int n = 0; n <= max_object; ++n)
      for (const Surjection& s : enumerate_surjections(n, m)) {
        ++rep.fullness_checked;
        ForestMorphism rep_f = forest_of(s);
        bool hit = false;
        for (const ForestMorphism& f : homs[{m, n}].morphisms)
          if (f == rep_f) hit = true;
        if (!hit || !(sigma_of(rep_f) == s))
          note("fullness fails at " + s.repr());
      }

  for (int m = 0; m <= max_object; ++m)
    for (int n = 0; n <= max_object; ++n) {
      std::vector<ForestMorphism> reps;
      for (const ForestMorphism& f : homs[{m, n}].morphisms)
        if (is_strict_height_one(f.forest())) reps.push_back(f);
      auto surs = enumerate_surjections(n, m);
      if (reps.size() != surs.size())
        note("height-one representative count mismatch at ([" +
             std::to_string(m) + "],[" + std::to_string(n) + "])");
      for (const ForestMorphism& f : reps) {
        ++rep.bijection_checked;
        if (!(forest_of(sigma_of(f)) == f))
          note("round-trip F != F_{sigma_F} at " + f.forest().repr());
      }
      for (const Surjection& s : surs) {
        ++rep.bijection_checked;
        if (!(sigma_of(forest_of(s)) == s))
          note("round-trip sigma != sigma_{F_sigma} at " + s.repr());
      }
    }

  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace ordfor
