#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ordfor/error.hpp"

namespace ordfor {

// Elements ARE their ranks in the total order: the total order is rigid, so
// storing a forest in rank-canonical form makes isomorphism of labelled
// objects plain structural equality. A cover is a Hasse pair
// (child rank, parent rank) with child < parent.
using Cover = std::pair<int, int>;

struct RankRange {
  int lo = 0;
  int hi = -1;  // inclusive; hi < lo encodes the empty range
  int length() const { return hi - lo + 1; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  friend bool operator==(const RankRange&, const RankRange&) = default;
};

// A finite poset with a compatible total order in which every principal
// lower set is a contiguous block of ranks. Immutable once validated.
class OrderedForest {
public:
  // Checks the axioms in order: rank bounds, cover orientation (child <
  // parent), Hasse irredundancy, and contiguity of every lower set.
  static OrderedForest validate(int size, std::vector<Cover> covers) {
    if (size < 0) fail(Err::MalformedInput, "negative size");
    for (const auto& [a, b] : covers) {
      if (a < 0 || a >= size)
        fail(Err::RankOutOfBounds, "cover child " + std::to_string(a), a);
      if (b < 0 || b >= size)
        fail(Err::RankOutOfBounds, "cover parent " + std::to_string(b), b);
      if (a >= b)
        fail(Err::CoverOrderViolation,
             "cover (" + std::to_string(a) + "," + std::to_string(b) +
                 ") does not go up in rank",
             a);
    }
    std::sort(covers.begin(), covers.end());
    if (std::adjacent_find(covers.begin(), covers.end()) != covers.end())
      fail(Err::RedundantCover, "duplicate cover");

    OrderedForest f;
    f.size_ = size;
    f.covers_ = std::move(covers);
    f.build_adjacency();

    // A cover is redundant when its endpoints stay connected without it.
    for (size_t i = 0; i < f.covers_.size(); ++i) {
      if (f.reaches_avoiding(f.covers_[i].first, f.covers_[i].second, i))
        fail(Err::RedundantCover,
             "cover (" + std::to_string(f.covers_[i].first) + "," +
                 std::to_string(f.covers_[i].second) +
                 ") follows from the others",
             f.covers_[i].first);
    }

    f.build_closure();

    for (int x = 0; x < size; ++x) {
      int lo = x, count = 0;
      for (int y = 0; y <= x; ++y) {
        if (f.leq(y, x)) {
          lo = std::min(lo, y);
          ++count;
        }
      }
      if (count != x - lo + 1)
        fail(Err::IntervalViolation,
             "lower set of " + std::to_string(x) + " is not contiguous", x);
    }
    return f;
  }

  int size() const { return size_; }
  const std::vector<Cover>& covers() const { return covers_; }

  // Reflexive partial order: x <= y.
  bool leq(int x, int y) const {
    return leq_[static_cast<size_t>(x) * size_ + y] != 0;
  }

  RankRange lower_set(int x) const {
    check_rank(x);
    int lo = x;
    for (int y = 0; y <= x; ++y)
      if (leq(y, x)) {
        lo = y;
        break;
      }
    return RankRange{lo, x};
  }

  std::vector<int> upper_set(int x) const {
    check_rank(x);
    std::vector<int> up;
    for (int y = x; y < size_; ++y)
      if (leq(x, y)) up.push_back(y);
    return up;
  }

  std::vector<int> minima() const {
    std::vector<int> out;
    for (int x = 0; x < size_; ++x)
      if (below_[x].empty()) out.push_back(x);
    return out;
  }

  std::vector<int> maxima() const {
    std::vector<int> out;
    for (int x = 0; x < size_; ++x)
      if (above_[x].empty()) out.push_back(x);
    return out;
  }

  bool is_minimal(int x) const { return below_[x].empty(); }
  bool is_maximal(int x) const { return above_[x].empty(); }

  // Hasse neighbours, in increasing rank order.
  const std::vector<int>& covers_below(int x) const { return below_[x]; }
  const std::vector<int>& covers_above(int x) const { return above_[x]; }

  // Maximum chain length counted in edges; 0 on discrete forests.
  int height() const {
    std::vector<int> len(size_, 0);
    int best = 0;
    for (int x = 0; x < size_; ++x) {
      for (int c : below_[x]) len[x] = std::max(len[x], len[c] + 1);
      best = std::max(best, len[x]);
    }
    return best;
  }

  friend bool operator==(const OrderedForest& a, const OrderedForest& b) {
    return a.size_ == b.size_ && a.covers_ == b.covers_;
  }
  friend bool operator<(const OrderedForest& a, const OrderedForest& b) {
    return std::tie(a.size_, a.covers_) < std::tie(b.size_, b.covers_);
  }

  std::string repr() const {
    std::string s = "size=" + std::to_string(size_) + " covers=[";
    for (size_t i = 0; i < covers_.size(); ++i) {
      if (i) s += ",";
      s += "(" + std::to_string(covers_[i].first) + "," +
           std::to_string(covers_[i].second) + ")";
    }
    return s + "]";
  }

private:
  OrderedForest() = default;

  void check_rank(int x) const {
    if (x < 0 || x >= size_)
      fail(Err::RankOutOfBounds, "rank " + std::to_string(x), x);
  }

  void build_adjacency() {
    below_.assign(size_, {});
    above_.assign(size_, {});
    for (const auto& [a, b] : covers_) {
      below_[b].push_back(a);
      above_[a].push_back(b);
    }
  }

  void build_closure() {
    leq_.assign(static_cast<size_t>(size_) * size_, 0);
    // Covers only point up in rank, so one increasing pass closes them.
    for (int y = 0; y < size_; ++y) {
      leq_[static_cast<size_t>(y) * size_ + y] = 1;
      for (int c : below_[y])
        for (int x = 0; x <= c; ++x)
          if (leq(x, c)) leq_[static_cast<size_t>(x) * size_ + y] = 1;
    }
  }

  bool reaches_avoiding(int from, int to, size_t skip) const {
    std::vector<int> stack{from};
    std::vector<char> seen(size_, 0);
    seen[from] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (size_t i = 0; i < covers_.size(); ++i) {
        if (i == skip || covers_[i].first != x) continue;
        int p = covers_[i].second;
        if (p == to) return true;
        if (!seen[p]) {
          seen[p] = 1;
          stack.push_back(p);
        }
      }
    }
    return false;
  }

  int size_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> below_, above_;
  std::vector<unsigned char> leq_;
};

struct TreeComponent {
  int root;
  int lo, hi;  // rank interval, inclusive
  friend bool operator==(const TreeComponent&, const TreeComponent&) = default;
};

struct TreeDecomposition {
  std::vector<TreeComponent> components;
};

// Splits a forest at its maximal elements: component i is the lower set of
// the i-th root. The intervals tile 0..size-1 in order.
inline TreeDecomposition decompose(const OrderedForest& f) {
  TreeDecomposition d;
  int expect = 0;
  for (int m : f.maxima()) {
    RankRange r = f.lower_set(m);
    if (r.lo != expect || r.hi != m)
      throw std::logic_error("decomposition intervals do not tile the forest");
    d.components.push_back(TreeComponent{m, r.lo, r.hi});
    expect = m + 1;
  }
  if (expect != f.size())
    throw std::logic_error("decomposition does not cover the forest");
  return d;
}

// Concatenation with rank offsets; the inverse of decompose.
inline OrderedForest ordinal_sum(const std::vector<OrderedForest>& parts) {
  int total = 0;
  std::vector<Cover> covers;
  for (const auto& p : parts) {
    for (const auto& [a, b] : p.covers())
      covers.emplace_back(a + total, b + total);
    total += p.size();
  }
  return OrderedForest::validate(total, std::move(covers));
}

// Extracts the sub-forest on a set of ranks (given increasing) with the
// induced partial order, re-ranked to 0..k-1.
inline OrderedForest induced_subforest(const OrderedForest& f,
                                       const std::vector<int>& ranks) {
  std::vector<int> newrank(f.size(), -1);
  for (size_t i = 0; i < ranks.size(); ++i) newrank[ranks[i]] = (int)i;
  std::vector<Cover> covers;
  for (size_t i = 0; i < ranks.size(); ++i) {
    for (size_t j = i + 1; j < ranks.size(); ++j) {
      if (!f.leq(ranks[i], ranks[j])) continue;
      // Hasse pair of the induced order: nothing selected strictly between.
      bool direct = true;
      for (int mid : ranks) {
        if (mid == ranks[i] || mid == ranks[j]) continue;
        if (f.leq(ranks[i], mid) && f.leq(mid, ranks[j])) {
          direct = false;
          break;
        }
      }
      if (direct) covers.emplace_back((int)i, (int)j);
    }
  }
  return OrderedForest::validate((int)ranks.size(), std::move(covers));
}

// All maps F -> Q preserving both the total order (weak monotonicity of
// ranks) and the partial order (covers land in comparable pairs).
inline std::vector<std::vector<int>> forest_maps(const OrderedForest& f,
                                                 const OrderedForest& q) {
  std::vector<std::vector<int>> out;
  if (f.size() == 0) {
    out.push_back({});
    return out;
  }
  if (q.size() == 0) return out;
  std::vector<int> img(f.size(), 0);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == f.size()) {
      out.push_back(img);
      return;
    }
    int start = x == 0 ? 0 : img[x - 1];
    for (int v = start; v < q.size(); ++v) {
      img[x] = v;
      bool ok = true;
      for (int c : f.covers_below(x))
        if (!q.leq(img[c], v)) {
          ok = false;
          break;
        }
      if (ok) self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace ordfor
