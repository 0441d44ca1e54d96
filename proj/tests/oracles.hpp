#pragma once

// Brute-force reference computations. Each one avoids the library routine it
// is compared against: chains come from the strict order (not covers), h from
// Horner expansion, μ from chain counting, weak order from switch BFS.

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "earlab/earlab.hpp"

namespace oracle {

using earlab::Face;
using earlab::Poset;
using earlab::SimplicialComplex;

/// Every chain (including empty) of the elements in `keep`, strictly increasing.
inline std::vector<std::vector<int>> all_chains(const Poset& p, const std::vector<int>& keep) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    for (std::size_t i = from; i < keep.size(); ++i) {
      int x = keep[i];
      if (!cur.empty() && !p.less(cur.back(), x)) continue;
      cur.push_back(x);
      out.push_back(cur);
      rec(0);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::vector<int> interior(const Poset& p) {
  std::vector<int> keep;
  for (int x = 0; x < p.size(); ++x)
    if (x != p.bottom() && x != p.top()) keep.push_back(x);
  return keep;
}

/// f_i = number of chains with i elements in the proper part.
inline std::vector<long long> chain_f_vector(const Poset& p) {
  std::vector<long long> f;
  for (auto& c : all_chains(p, interior(p))) {
    if (f.size() <= c.size()) f.resize(c.size() + 1, 0);
    ++f[c.size()];
  }
  return f;
}

/// f-vector of a complex by expanding every facet into subsets.
inline std::vector<long long> complex_f_vector(const SimplicialComplex& c) {
  std::set<Face> faces;
  for (auto& f : c.facets())
    for (std::uint32_t m = 0; m < (1u << f.size()); ++m) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (m >> i & 1u) sub.push_back(f[i]);
      faces.insert(sub);
    }
  std::vector<long long> out;
  for (auto& f : faces) {
    if (out.size() <= f.size()) out.resize(f.size() + 1, 0);
    ++out[f.size()];
  }
  return out;
}

/// h from f by Horner: Σ h_k t^(d−k) = Σ f_i (t−1)^(d−i).
inline std::vector<long long> h_from_f(const std::vector<long long>& f) {
  std::vector<long long> poly{f[0]};  // highest degree first
  for (std::size_t i = 1; i < f.size(); ++i) {
    std::vector<long long> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] -= poly[k];
    }
    next.back() += f[i];
    poly = std::move(next);
  }
  return poly;
}

/// μ(x, y) by Philip Hall: alternating count of chains from x to y.
inline long long hall_mobius(const Poset& p, int x, int y) {
  if (x == y) return 1;
  if (!p.less(x, y)) return 0;
  std::vector<int> mid;
  for (int z = 0; z < p.size(); ++z)
    if (p.less(x, z) && p.less(z, y)) mid.push_back(z);
  long long mu = 0;
  for (auto& c : all_chains(p, mid)) mu += (c.size() % 2 == 0) ? -1 : 1;
  return mu;
}

/// Number of maximal chains of p whose label word has exactly i descents.
inline std::vector<long long> descent_counts(const Poset& p, const earlab::EdgeLabeling& lambda) {
  std::vector<long long> out;
  for (auto& c : earlab::maximal_chains(p)) {
    auto w = lambda.word(c.elements);
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) ++d;
    if (out.size() <= d) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

/// Weak order by switches: τ ≥ σ iff τ is reachable from σ by swapping
/// adjacent ascents into descents.
inline bool weak_leq_bfs(const std::vector<int>& sigma, const std::vector<int>& tau) {
  std::set<std::vector<int>> seen{sigma};
  std::queue<std::vector<int>> q;
  q.push(sigma);
  while (!q.empty()) {
    auto w = q.front();
    q.pop();
    if (w == tau) return true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] < w[i + 1]) {
        auto v = w;
        std::swap(v[i], v[i + 1]);
        if (seen.insert(v).second) q.push(v);
      }
  }
  return false;
}

inline std::vector<std::vector<int>> permutations_with_descents(const std::set<int>& s, int m) {
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    std::set<int> d;
    for (int i = 0; i + 1 < m; ++i)
      if (w[i] > w[i + 1]) d.insert(i + 1);
    if (d == s) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Dominance by exhaustive backtracking over injections D_T → D_S.
inline bool dominates_brute(const std::set<int>& s, const std::set<int>& t, int m) {
  auto ds = permutations_with_descents(s, m);
  auto dt = permutations_with_descents(t, m);
  if (dt.size() > ds.size()) return false;
  std::vector<char> used(ds.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == dt.size()) return true;
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (!used[j] && weak_leq_bfs(dt[i], ds[j])) {
        used[j] = 1;
        if (rec(i + 1)) return true;
        used[j] = 0;
      }
    return false;
  };
  return rec(0);
}

/// Number of chains in the poset meeting exactly the interior ranks in S
/// (bit k-1 = rank k above the bottom).
inline std::vector<long long> flag_f(const Poset& p) {
  int base = p.bottom() ? p.rank(*p.bottom()) : p.min_rank() - 1;
  int top = p.top() ? p.rank(*p.top()) - 1 : p.max_rank();
  int n = top - base;
  std::vector<long long> f(std::size_t{1} << n, 0);
  std::vector<int> keep;
  for (int x = 0; x < p.size(); ++x)
    if (p.rank(x) > base && p.rank(x) <= top) keep.push_back(x);
  for (auto& c : all_chains(p, keep)) {
    std::uint32_t mask = 0;
    for (int x : c) mask |= 1u << (p.rank(x) - base - 1);
    ++f[mask];
  }
  return f;
}

/// Join by definition: the unique minimal upper bound.
inline int join_by_bounds(const Poset& p, int x, int y) {
  std::vector<int> ub;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(y, z)) ub.push_back(z);
  for (int z : ub) {
    bool least = true;
    for (int w : ub) least = least && p.leq(z, w);
    if (least) return z;
  }
  return -1;
}

inline int meet_by_bounds(const Poset& p, int x, int y) {
  std::vector<int> lb;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(z, x) && p.leq(z, y)) lb.push_back(z);
  for (int z : lb) {
    bool greatest = true;
    for (int w : lb) greatest = greatest && p.leq(w, z);
    if (greatest) return z;
  }
  return -1;
}

/// Shelling by definition: each later facet meets the earlier ones in a
/// pure nonempty (d−2)-dimensional complex.
inline bool is_shelling_by_definition(const SimplicialComplex& c, const std::vector<int>& order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    const Face& fj = c.facets()[order[j]];
    std::vector<Face> meets;
    for (std::size_t i = 0; i < j; ++i) {
      Face m;
      const Face& fi = c.facets()[order[i]];
      std::set_intersection(fi.begin(), fi.end(), fj.begin(), fj.end(), std::back_inserter(m));
      meets.push_back(m);
    }
    // maximal intersections must all have size |F_j| - 1
    for (auto& m : meets) {
      bool maximal = true;
      for (auto& o : meets)
        if (o.size() > m.size() && std::includes(o.begin(), o.end(), m.begin(), m.end())) maximal = false;
      if (maximal && m.size() + 1 != fj.size()) return false;
    }
  }
  return true;
}

/// Restriction face by definition: vertices v of F_j with F_j − v inside an
/// earlier facet.
inline std::vector<Face> restriction_faces(const SimplicialComplex& c, const std::vector<int>& order) {
  std::vector<Face> out;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Face& fj = c.facets()[order[j]];
    Face r;
    for (int v : fj) {
      Face rest;
      for (int u : fj)
        if (u != v) rest.push_back(u);
      for (std::size_t i = 0; i < j; ++i) {
        const Face& fi = c.facets()[order[i]];
        if (std::includes(fi.begin(), fi.end(), rest.begin(), rest.end())) {
          r.push_back(v);
          break;
        }
      }
    }
    out.push_back(r);
  }
  return out;
}

/// Number of nbc-bases counted from scratch: independent r-subsets that
/// contain no circuit-minus-its-least-element, circuits found by rank.
inline long long nbc_count(const earlab::Matroid& m) {
  const int n = m.ground_size();
  auto rank = [&](std::uint32_t s) {
    int best = 0;
    for (auto b : m.bases()) best = std::max(best, std::popcount(b & s));
    return best;
  };
  std::vector<std::uint32_t> circuits;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (rank(s) == std::popcount(s)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i)
      if (s >> i & 1u) minimal = rank(s & ~(1u << i)) == std::popcount(s) - 1;
    if (minimal) circuits.push_back(s);
  }
  long long count = 0;
  for (auto b : m.bases()) {
    bool ok = true;
    for (auto c : circuits) {
      std::uint32_t broken = c & (c - 1);  // drop the least element
      if ((b & broken) == broken) ok = false;
    }
    count += ok;
  }
  return count;
}

}  // namespace oracle
