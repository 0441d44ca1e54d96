#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "earlab/error.hpp"
#include "earlab/poset.hpp"

namespace earlab {

/// Bounded poset with precomputed join and meet tables.
class Lattice {
 public:
  Lattice() = default;

  /// Join/meet are recomputed from the order; throws NotALattice when some
  /// pair lacks a least upper or greatest lower bound.
  static Lattice from_poset(Poset p) {
    if (!p.bottom() || !p.top()) throw Error(ErrorKind::NotALattice, "lattice needs a bottom and a top");
    Lattice l;
    const int n = p.size();
    l.join_.assign(static_cast<std::size_t>(n) * n, -1);
    l.meet_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        int j = bound(p, x, y, true);
        int m = bound(p, x, y, false);
        if (j < 0 || m < 0)
          throw Error(ErrorKind::NotALattice, p.name(x) + " and " + p.name(y) + " lack a " +
                                                  (j < 0 ? "join" : "meet"));
        l.join_[static_cast<std::size_t>(x) * n + y] = l.join_[static_cast<std::size_t>(y) * n + x] = j;
        l.meet_[static_cast<std::size_t>(x) * n + y] = l.meet_[static_cast<std::size_t>(y) * n + x] = m;
      }
    l.poset_ = std::move(p);
    return l;
  }

  /// Trusts caller-supplied tables (used by families with closed-form operations).
  static Lattice from_tables(Poset p, std::vector<int> join, std::vector<int> meet) {
    Lattice l;
    l.poset_ = std::move(p);
    l.join_ = std::move(join);
    l.meet_ = std::move(meet);
    return l;
  }

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  int join(int x, int y) const { return join_[static_cast<std::size_t>(x) * size() + y]; }
  int meet(int x, int y) const { return meet_[static_cast<std::size_t>(x) * size() + y]; }
  int bottom() const { return *poset_.bottom(); }
  int top() const { return *poset_.top(); }
  int rank() const { return poset_.rank(top()) - poset_.rank(bottom()); }

  std::vector<int> atoms() const { return poset_.up_covers(bottom()); }

 private:
  static int bound(const Poset& p, int x, int y, bool upper) {
    const int n = p.size();
    int best = -1;
    for (int z = 0; z < n; ++z) {
      bool ok = upper ? (p.leq(x, z) && p.leq(y, z)) : (p.leq(z, x) && p.leq(z, y));
      if (!ok) continue;
      if (best < 0 || (upper ? p.rank(z) < p.rank(best) : p.rank(z) > p.rank(best))) best = z;
    }
    if (best < 0) return -1;
    for (int z = 0; z < n; ++z) {
      bool ok = upper ? (p.leq(x, z) && p.leq(y, z)) : (p.leq(z, x) && p.leq(z, y));
      if (ok && !(upper ? p.leq(best, z) : p.leq(z, best))) return -1;
    }
    return best;
  }

  Poset poset_;
  std::vector<int> join_;
  std::vector<int> meet_;
};

/// A saturated maximal chain, 0̂ first. Supplied by families or by the caller;
/// labeling.hpp verifies it.
struct MChain {
  std::vector<int> elements;
};

inline std::string subset_name(std::uint32_t mask, int r) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < r; ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

/// Subsets of [r] under inclusion, indexed by (size, lexicographic contents).
inline Lattice boolean_lattice(int r) {
  if (r < 1) throw Error(ErrorKind::BadParams, "boolean lattice needs rank >= 1");
  if (r > 16) throw Error(ErrorKind::SizeLimit, "boolean lattice rank above 16");
  const int n = 1 << r;
  std::vector<std::uint32_t> masks(n);
  for (int i = 0; i < n; ++i) masks[i] = static_cast<std::uint32_t>(i);
  auto members = [r](std::uint32_t m) {
    std::vector<int> v;
    for (int i = 0; i < r; ++i)
      if (m >> i & 1) v.push_back(i);
    return v;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return members(a) < members(b);
  });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[masks[i]] = i;
  std::vector<std::string> names;
  std::vector<int> ranks;
  for (auto m : masks) {
    names.push_back(subset_name(m, r));
    ranks.push_back(__builtin_popcount(m));
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> join(static_cast<std::size_t>(n) * n), meet(static_cast<std::size_t>(n) * n);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto a = masks[i], b = masks[j];
      leq[static_cast<std::size_t>(i) * n + j] = (a & ~b) == 0;
      join[static_cast<std::size_t>(i) * n + j] = pos[a | b];
      meet[static_cast<std::size_t>(i) * n + j] = pos[a & b];
      if ((a & ~b) == 0 && __builtin_popcount(b) == __builtin_popcount(a) + 1) covers.emplace_back(i, j);
    }
  Poset p = Poset::from_order_and_covers(std::move(names), std::move(leq), std::move(ranks), covers);
  return Lattice::from_tables(std::move(p), std::move(join), std::move(meet));
}

/// ∅ ⊂ {1} ⊂ {1,2} ⊂ ... ⊂ [r].
inline MChain boolean_mchain(const Lattice& l) {
  MChain c;
  std::uint32_t mask = 0;
  int r = l.rank();
  c.elements.push_back(l.poset().require_index(subset_name(0, r)));
  for (int i = 0; i < r; ++i) {
    mask |= 1u << i;
    c.elements.push_back(l.poset().require_index(subset_name(mask, r)));
  }
  return c;
}

namespace detail {

/// Block id per point (restricted growth string).
using Partition = std::vector<int>;

inline std::string partition_name(const Partition& p) {
  int blocks = *std::max_element(p.begin(), p.end()) + 1;
  std::string s;
  for (int b = 0; b < blocks; ++b) {
    if (b) s += "|";
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] == b) s += std::to_string(i + 1);
  }
  return s;
}

inline Partition normalize(const std::vector<int>& labels) {
  Partition out(labels.size());
  std::vector<int> seen_label;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find(seen_label.begin(), seen_label.end(), labels[i]);
    if (it == seen_label.end()) {
      seen_label.push_back(labels[i]);
      out[i] = static_cast<int>(seen_label.size()) - 1;
    } else {
      out[i] = static_cast<int>(it - seen_label.begin());
    }
  }
  return out;
}

inline bool refines(const Partition& a, const Partition& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j] && b[i] != b[j]) return false;
  return true;
}

}  // namespace detail

/// Set partitions of [n] ordered by refinement; rank = n - (number of blocks).
/// Element names list blocks by least element, e.g. "13|2".
inline Lattice partition_lattice(int n) {
  if (n < 2) throw Error(ErrorKind::BadParams, "partition lattice needs n >= 2");
  if (n > 8) throw Error(ErrorKind::SizeLimit, "partition lattice limited to n <= 8");
  std::vector<detail::Partition> parts;
  detail::Partition cur(n, 0);
  auto gen = [&](auto&& self, int i, int maxb) -> void {
    if (i == n) {
      parts.push_back(cur);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      cur[i] = b;
      self(self, i + 1, std::max(maxb, b));
    }
  };
  cur[0] = 0;
  gen(gen, 1, 0);
  auto blocks = [](const detail::Partition& p) { return *std::max_element(p.begin(), p.end()) + 1; };
  std::stable_sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
    if (blocks(a) != blocks(b)) return blocks(a) > blocks(b);
    return detail::partition_name(a) < detail::partition_name(b);
  });
  const int m = static_cast<int>(parts.size());
  std::vector<std::string> names;
  std::vector<int> ranks;
  std::map<detail::Partition, int> index;
  for (int i = 0; i < m; ++i) {
    names.push_back(detail::partition_name(parts[i]));
    ranks.push_back(n - blocks(parts[i]));
    index.emplace(parts[i], i);
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  std::vector<int> join(static_cast<std::size_t>(m) * m), meet(static_cast<std::size_t>(m) * m);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto& a = parts[i];
      const auto& b = parts[j];
      bool le = detail::refines(a, b);
      leq[static_cast<std::size_t>(i) * m + j] = le;
      if (le && ranks[j] == ranks[i] + 1) covers.emplace_back(i, j);
      // meet: common refinement
      std::vector<int> pair_label(n);
      for (int k = 0; k < n; ++k) pair_label[k] = a[k] * n + b[k];
      meet[static_cast<std::size_t>(i) * m + j] = index.at(detail::normalize(pair_label));
      // join: connected components of the union of block relations
      std::vector<int> comp(n);
      for (int k = 0; k < n; ++k) comp[k] = k;
      auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
      };
      std::vector<int> first_a(n, -1), first_b(n, -1);
      for (int k = 0; k < n; ++k) {
        if (first_a[a[k]] < 0) first_a[a[k]] = k;
        else comp[find(k)] = find(first_a[a[k]]);
        if (first_b[b[k]] < 0) first_b[b[k]] = k;
        else comp[find(k)] = find(first_b[b[k]]);
      }
      for (int k = 0; k < n; ++k) comp[k] = find(k);
      join[static_cast<std::size_t>(i) * m + j] = index.at(detail::normalize(comp));
    }
  Poset p = Poset::from_order_and_covers(std::move(names), std::move(leq), std::move(ranks), covers);
  return Lattice::from_tables(std::move(p), std::move(join), std::move(meet));
}

/// 1|2|...|n < 12|3|...|n < 123|4|... < 12...n.
inline MChain partition_mchain(const Lattice& l, int n) {
  MChain c;
  for (int k = 1; k <= n; ++k) {
    detail::Partition p(n);
    for (int i = 0; i < n; ++i) p[i] = i < k ? 0 : i - k + 1;
    c.elements.push_back(l.poset().require_index(detail::partition_name(p)));
  }
  return c;
}

/// Rank-n chain 0 < 1 < ... < n as a lattice.
inline Lattice chain_lattice(int n) {
  std::vector<std::string> names;
  std::vector<int> ranks;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  std::vector<std::pair<int, int>> covers;
  std::vector<int> join(static_cast<std::size_t>(n + 1) * (n + 1)), meet(join.size());
  for (int i = 0; i <= n; ++i) {
    names.push_back(std::to_string(i));
    ranks.push_back(i);
    if (i < n) covers.emplace_back(i, i + 1);
    for (int j = 0; j <= n; ++j) {
      leq[static_cast<std::size_t>(i) * (n + 1) + j] = i <= j;
      join[static_cast<std::size_t>(i) * (n + 1) + j] = std::max(i, j);
      meet[static_cast<std::size_t>(i) * (n + 1) + j] = std::min(i, j);
    }
  }
  Poset p = Poset::from_order_and_covers(std::move(names), std::move(leq), std::move(ranks), covers);
  return Lattice::from_tables(std::move(p), std::move(join), std::move(meet));
}

/// Ranks by longest chain from a minimal element within an order matrix.
inline std::vector<int> longest_chain_ranks(const std::vector<std::uint8_t>& leq, int n) {
  std::vector<int> height(n, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  // sort by size of down-set: a linear extension
  std::vector<int> down(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) down[i] += leq[static_cast<std::size_t>(j) * n + i];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return down[a] < down[b]; });
  for (int y : order)
    for (int x = 0; x < n; ++x)
      if (x != y && leq[static_cast<std::size_t>(x) * n + y]) height[y] = std::max(height[y], height[x] + 1);
  return height;
}

/// Smallest subset containing the chains, 0̂ and 1̂ that is closed under join
/// and meet, with the induced order. origin() maps back into l.
inline Lattice sublattice_generated(const Lattice& l, const std::vector<std::vector<int>>& chains) {
  std::vector<char> in(l.size(), 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (x < 0 || x >= l.size()) throw Error(ErrorKind::UnknownElement, "chain element outside lattice");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(l.bottom());
  add(l.top());
  for (const auto& c : chains)
    for (int x : c) add(x);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(l.join(members[i], members[j]));
      add(l.meet(members[i], members[j]));
    }
  std::sort(members.begin(), members.end());
  const int m = static_cast<int>(members.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[static_cast<std::size_t>(i) * m + j] = l.poset().leq(members[i], members[j]);
  Poset sub = induced_subposet(l.poset(), members, longest_chain_ranks(leq, m));
  std::vector<int> local(l.size(), -1);
  for (int i = 0; i < m; ++i) local[members[i]] = i;
  std::vector<int> join(static_cast<std::size_t>(m) * m), meet(join.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      join[static_cast<std::size_t>(i) * m + j] = local[l.join(members[i], members[j])];
      meet[static_cast<std::size_t>(i) * m + j] = local[l.meet(members[i], members[j])];
    }
  return Lattice::from_tables(std::move(sub), std::move(join), std::move(meet));
}

/// Brute force over all triples: x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z).
inline bool is_distributive(const Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

}  // namespace earlab
