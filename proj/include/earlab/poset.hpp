#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "earlab/error.hpp"

namespace earlab {

/// A chain stored as canonical element indices, listed bottom to top.
struct Chain {
  std::vector<int> elements;
  bool saturated = false;

  friend bool operator==(const Chain&, const Chain&) = default;
};

struct BuildOptions {
  /// Require rank(hi) == rank(lo) + 1 for every cover.
  bool graded = false;
};

/// Finite poset over opaque string identifiers.
///
/// Elements receive a canonical index at build time (their input position);
/// every ordering in the library is expressed through that index. Instances
/// are immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Builds from an explicit order matrix (leq[i*n+j] != 0 iff i <= j) and
  /// rank function. Covers are recovered by transitive reduction. `origin`
  /// maps each element to its index in a parent poset (empty when none).
  static Poset from_order(std::vector<std::string> names, std::vector<std::uint8_t> leq,
                          std::vector<int> ranks, std::vector<int> origin = {},
                          std::vector<int> original_ranks = {}) {
    return make(std::move(names), std::move(leq), std::move(ranks), std::move(origin),
                std::move(original_ranks), nullptr);
  }

  /// As from_order, but with the cover pairs already known (skips the reduction).
  static Poset from_order_and_covers(std::vector<std::string> names, std::vector<std::uint8_t> leq,
                                     std::vector<int> ranks,
                                     const std::vector<std::pair<int, int>>& covers) {
    return make(std::move(names), std::move(leq), std::move(ranks), {}, {}, &covers);
  }

 private:
  static Poset make(std::vector<std::string> names, std::vector<std::uint8_t> leq,
                    std::vector<int> ranks, std::vector<int> origin,
                    std::vector<int> original_ranks,
                    const std::vector<std::pair<int, int>>* covers) {
    Poset p;
    const int n = static_cast<int>(names.size());
    p.names_ = std::move(names);
    p.leq_ = std::move(leq);
    p.rank_ = std::move(ranks);
    p.origin_ = std::move(origin);
    p.original_rank_ = original_ranks.empty() ? p.rank_ : std::move(original_ranks);
    for (int i = 0; i < n; ++i) {
      if (!p.index_.emplace(p.names_[i], i).second)
        throw Error(ErrorKind::Inconsistent, "duplicate element '" + p.names_[i] + "'");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && p.less(i, j) && p.rank_[i] >= p.rank_[j])
          throw Error(ErrorKind::NotGraded, "rank function not strictly increasing on " +
                                                p.names_[i] + " < " + p.names_[j]);
    p.finish(covers);
    return p;
  }

 public:
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int require_index(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) throw Error(ErrorKind::UnknownElement, "unknown element '" + name + "'");
    return *idx;
  }

  bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x) * size() + y] != 0; }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  bool covers(int lo, int hi) const {
    const auto& up = up_[lo];
    return std::binary_search(up.begin(), up.end(), hi);
  }

  int rank(int x) const { return rank_.at(x); }
  int original_rank(int x) const { return original_rank_.at(x); }
  int max_rank() const { return max_rank_; }
  int min_rank() const { return min_rank_; }
  /// Index of this element in the poset it was derived from, or -1.
  int origin(int x) const { return origin_.empty() ? -1 : origin_.at(x); }
  bool graded() const { return graded_; }

  std::optional<int> bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }

  const std::vector<int>& up_covers(int x) const { return up_.at(x); }
  const std::vector<int>& down_covers(int x) const { return down_.at(x); }

  /// Cover pairs sorted by (lo, hi) index.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
      for (int y : up_[x]) out.emplace_back(x, y);
    return out;
  }

  /// Elements of rank k, in index order.
  std::vector<int> elements_of_rank(int k) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
      if (rank_[x] == k) out.push_back(x);
    return out;
  }

  /// Elements sorted by (rank, index); a linear extension.
  const std::vector<int>& linear_extension() const { return linear_; }

  const std::vector<std::uint8_t>& order_matrix() const { return leq_; }
  const std::vector<int>& ranks() const { return rank_; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.rank_ == b.rank_ && a.up_ == b.up_;
  }

 private:
  void finish(const std::vector<std::pair<int, int>>* covers) {
    const int n = size();
    up_.assign(n, {});
    down_.assign(n, {});
    if (covers) {
      for (auto [lo, hi] : *covers) {
        up_[lo].push_back(hi);
        down_[hi].push_back(lo);
      }
      for (auto& v : up_) std::sort(v.begin(), v.end());
      for (auto& v : down_) std::sort(v.begin(), v.end());
    } else {
      for (int x = 0; x < n; ++x) {
        // y covers x iff no element of the up-set of x lies strictly below y.
        std::vector<int> upset;
        for (int y = 0; y < n; ++y)
          if (less(x, y)) upset.push_back(y);
        for (int y : upset) {
          bool cover = true;
          for (int z : upset)
            if (less(z, y)) {
              cover = false;
              break;
            }
          if (cover) {
            up_[x].push_back(y);
            down_[y].push_back(x);
          }
        }
      }
      for (auto& v : down_) std::sort(v.begin(), v.end());
    }
    graded_ = true;
    for (int x = 0; x < n; ++x)
      for (int y : up_[x])
        if (rank_[y] != rank_[x] + 1) graded_ = false;
    max_rank_ = n == 0 ? 0 : *std::max_element(rank_.begin(), rank_.end());
    min_rank_ = n == 0 ? 0 : *std::min_element(rank_.begin(), rank_.end());
    bottom_.reset();
    top_.reset();
    for (int x = 0; x < n && !bottom_; ++x) {
      bool all = true;
      for (int y = 0; y < n && all; ++y) all = leq(x, y);
      if (all) bottom_ = x;
    }
    for (int x = 0; x < n && !top_; ++x) {
      bool all = true;
      for (int y = 0; y < n && all; ++y) all = leq(y, x);
      if (all) top_ = x;
    }
    linear_.resize(n);
    for (int i = 0; i < n; ++i) linear_[i] = i;
    std::stable_sort(linear_.begin(), linear_.end(),
                     [&](int a, int b) { return rank_[a] < rank_[b]; });
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> rank_;
  std::vector<int> original_rank_;
  std::vector<int> origin_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<int> linear_;
  std::optional<int> bottom_;
  std::optional<int> top_;
  int max_rank_ = 0;
  int min_rank_ = 0;
  bool graded_ = false;
};

/// Builds a poset from a generating relation. Redundant pairs are removed by
/// transitive reduction; ranks follow the longest-chain-from-a-minimal-element
/// convention, so a bottom element has rank 0.
inline Poset build_poset(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         BuildOptions options = {}) {
  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i)
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorKind::Inconsistent, "duplicate element '" + elements[i] + "'");

  std::vector<std::vector<int>> succ(n);
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end())
      throw Error(ErrorKind::DanglingCover, "cover (" + lo + ", " + hi + ") names an unknown element");
    if (a->second == b->second) throw Error(ErrorKind::CycleDetected, "self-loop on '" + lo + "'");
    succ[a->second].push_back(b->second);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : succ[x]) ++indeg[y];
  std::vector<int> topo;
  std::vector<int> ready;
  for (int x = n - 1; x >= 0; --x)
    if (indeg[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    int x = ready.back();
    ready.pop_back();
    topo.push_back(x);
    for (int y : succ[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  if (static_cast<int>(topo.size()) != n) {
    for (int x = 0; x < n; ++x)
      if (indeg[x] > 0) throw Error(ErrorKind::CycleDetected, "cycle through '" + elements[x] + "'");
  }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    leq[static_cast<std::size_t>(x) * n + x] = 1;
    for (int y : succ[x])
      for (int z = 0; z < n; ++z)
        if (leq[static_cast<std::size_t>(y) * n + z]) leq[static_cast<std::size_t>(x) * n + z] = 1;
  }

  std::vector<int> rank(n, 0);
  for (int x : topo)
    for (int y : succ[x]) rank[y] = std::max(rank[y], rank[x] + 1);

  Poset p = Poset::from_order(elements, std::move(leq), std::move(rank));
  if (options.graded && !p.graded()) {
    for (auto [lo, hi] : p.cover_pairs())
      if (p.rank(hi) != p.rank(lo) + 1)
        throw Error(ErrorKind::NotGraded,
                    "cover (" + p.name(lo) + ", " + p.name(hi) + ") skips a rank");
  }
  return p;
}

/// Induced subposet on `keep` (any order); ranks supplied per kept element.
inline Poset induced_subposet(const Poset& p, const std::vector<int>& keep,
                              const std::vector<int>& new_ranks) {
  const int m = static_cast<int>(keep.size());
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  std::vector<int> original;
  names.reserve(m);
  for (int i = 0; i < m; ++i) {
    names.push_back(p.name(keep[i]));
    original.push_back(p.original_rank(keep[i]));
    for (int j = 0; j < m; ++j) leq[static_cast<std::size_t>(i) * m + j] = p.leq(keep[i], keep[j]);
  }
  return Poset::from_order(std::move(names), std::move(leq), new_ranks, keep, std::move(original));
}

/// Möbius function by the defining recursion, memoized over the interval [x, y].
inline long long mobius(const Poset& p, int x, int y) {
  if (!p.leq(x, y))
    throw Error(ErrorKind::NotComparable, p.name(x) + " is not below " + p.name(y));
  if (x == y) return 1;
  std::map<int, long long> mu;
  for (int z : p.linear_extension()) {
    if (!p.leq(x, z) || !p.leq(z, y)) continue;
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long sum = 0;
    for (auto& [w, v] : mu)
      if (p.less(w, z)) sum += v;
    mu[z] = -sum;
  }
  return mu.at(y);
}

/// All Möbius values, computed once; mu(x, y) is 0 when x is not below y.
class MobiusTable {
 public:
  explicit MobiusTable(const Poset& p) : n_(p.size()), mu_(static_cast<std::size_t>(n_) * n_, 0) {
    const auto& order = p.linear_extension();
    for (int x = 0; x < n_; ++x) {
      at(x, x) = 1;
      for (int z : order) {
        if (z == x || !p.leq(x, z)) continue;
        long long sum = 0;
        for (int w : order) {
          if (w == z) break;
          if (p.leq(x, w) && p.less(w, z)) sum += at(x, w);
        }
        at(x, z) = -sum;
      }
    }
  }

  long long operator()(int x, int y) const { return mu_[static_cast<std::size_t>(x) * n_ + y]; }

 private:
  long long& at(int x, int y) { return mu_[static_cast<std::size_t>(x) * n_ + y]; }
  int n_;
  std::vector<long long> mu_;
};

/// Rank-selected subposet P_S. Ranks are renumbered 1..|S| in increasing order
/// of S; the original ranks stay available through original_rank().
inline Poset rank_select(const Poset& p, const std::set<int>& ranks) {
  if (ranks.empty()) throw Error(ErrorKind::EmptySelection, "empty rank selection");
  if (!p.graded()) throw Error(ErrorKind::NotGraded, "rank selection needs a graded poset");
  int lo = p.min_rank() + (p.bottom() ? 1 : 0);
  int hi = p.max_rank() - (p.top() ? 1 : 0);
  for (int s : ranks)
    if (s < lo || s > hi)
      throw Error(ErrorKind::RangeError, "rank " + std::to_string(s) + " outside the proper range");
  std::vector<int> keep;
  std::vector<int> new_rank;
  int pos = 1;
  for (int s : ranks) {
    for (int x : p.elements_of_rank(s)) {
      keep.push_back(x);
      new_rank.push_back(pos);
    }
    ++pos;
  }
  if (keep.empty()) throw Error(ErrorKind::EmptySelection, "no elements at the selected ranks");
  return induced_subposet(p, keep, new_rank);
}

/// The poset with its bottom and top (when present) removed; ranks unchanged.
inline Poset proper_part(const Poset& p) {
  std::vector<int> keep;
  std::vector<int> ranks;
  for (int x = 0; x < p.size(); ++x) {
    if (p.bottom() == x || p.top() == x) continue;
    keep.push_back(x);
    ranks.push_back(p.rank(x));
  }
  return induced_subposet(p, keep, ranks);
}

/// [x, y] as a poset with bounds x and y; ranks shifted so x has rank 0.
inline Poset closed_interval(const Poset& p, int x, int y) {
  if (!p.leq(x, y))
    throw Error(ErrorKind::NotComparable, p.name(x) + " is not below " + p.name(y));
  std::vector<int> keep;
  std::vector<int> ranks;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) {
      keep.push_back(z);
      ranks.push_back(p.rank(z) - p.rank(x));
    }
  return induced_subposet(p, keep, ranks);
}

/// Saturated chains from x to y, in lexicographic order of element indices.
inline std::vector<Chain> saturated_chains(const Poset& p, int x, int y) {
  std::vector<Chain> out;
  if (!p.leq(x, y)) return out;
  std::vector<int> stack{x};
  auto dfs = [&](auto&& self, int cur) -> void {
    if (cur == y) {
      out.push_back(Chain{stack, true});
      return;
    }
    for (int nxt : p.up_covers(cur)) {
      if (!p.leq(nxt, y)) continue;
      stack.push_back(nxt);
      self(self, nxt);
      stack.pop_back();
    }
  };
  dfs(dfs, x);
  return out;
}

/// All maximal chains, in lexicographic order of element indices.
inline std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<Chain> out;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int cur) -> void {
    stack.push_back(cur);
    if (p.up_covers(cur).empty()) {
      out.push_back(Chain{stack, true});
    } else {
      for (int nxt : p.up_covers(cur)) self(self, nxt);
    }
    stack.pop_back();
  };
  for (int x = 0; x < p.size(); ++x)
    if (p.down_covers(x).empty()) dfs(dfs, x);
  return out;
}

/// Number of maximal chains without listing them (dynamic programming over covers).
inline long long count_maximal_chains(const Poset& p) {
  std::vector<long long> ways(p.size(), 0);
  long long total = 0;
  for (int x : p.linear_extension()) {
    if (p.down_covers(x).empty()) ways[x] = 1;
    for (int y : p.up_covers(x)) ways[y] += ways[x];
    if (p.up_covers(x).empty()) total += ways[x];
  }
  return total;
}

}  // namespace earlab
