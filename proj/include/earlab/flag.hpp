#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "earlab/complex.hpp"
#include "earlab/error.hpp"
#include "earlab/labeling.hpp"
#include "earlab/matching.hpp"
#include "earlab/parallel.hpp"
#include "earlab/poset.hpp"

namespace earlab {

/// Subset of [n] as a bitmask: bit i-1 stands for i.
using RankSet = std::uint32_t;

inline RankSet rank_set(const std::set<int>& s) {
  RankSet m = 0;
  for (int i : s) m |= RankSet{1} << (i - 1);
  return m;
}

inline std::set<int> members(RankSet m) {
  std::set<int> out;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1u) out.insert(i);
  return out;
}

inline std::string set_string(RankSet m) {
  std::string out = "{";
  bool first = true;
  for (int i : members(m)) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

struct FlagVector {
  enum class Kind { F, H };
  Kind kind = Kind::F;
  int n = 0;                       ///< entries are indexed by subsets of [n]
  std::vector<long long> values;   ///< values[mask]

  long long operator[](RankSet s) const { return values.at(s); }
  long long at(const std::set<int>& s) const { return values.at(rank_set(s)); }
  long long total() const { return std::accumulate(values.begin(), values.end(), 0LL); }

  /// h_i = Σ_{|S|=i} h_S.
  std::vector<long long> by_size() const {
    std::vector<long long> out(n + 1, 0);
    for (RankSet s = 0; s < values.size(); ++s) out[std::popcount(s)] += values[s];
    return out;
  }
};

inline FlagVector flag_h_from_f(const FlagVector& f) {
  FlagVector h{FlagVector::Kind::H, f.n, std::vector<long long>(f.values.size(), 0)};
  for (RankSet s = 0; s < f.values.size(); ++s)
    for (RankSet t = s;; t = (t - 1) & s) {
      h.values[s] += (std::popcount(s & ~t) % 2 ? -1 : 1) * f.values[t];
      if (t == 0) break;
    }
  return h;
}

inline FlagVector flag_f_from_h(const FlagVector& h) {
  FlagVector f{FlagVector::Kind::F, h.n, std::vector<long long>(h.values.size(), 0)};
  for (RankSet s = 0; s < h.values.size(); ++s)
    for (RankSet t = s;; t = (t - 1) & s) {
      f.values[s] += h.values[t];
      if (t == 0) break;
    }
  return f;
}

namespace detail {

/// Rank offset and number of interior ranks: bounded posets use ranks
/// strictly between 0̂ and 1̂; unbounded ones use their own ranks 1..max.
inline std::pair<int, int> flag_frame(const Poset& p) {
  if (!p.graded()) throw Error(ErrorKind::NotGraded, "flag vectors need a graded poset");
  int base = p.bottom() ? p.rank(*p.bottom()) : p.min_rank() - 1;
  int top = p.top() ? p.rank(*p.top()) - 1 : p.max_rank();
  int n = std::max(0, top - base);
  if (n > 20) throw Error(ErrorKind::SizeLimit, "too many ranks for a flag vector");
  return {base, n};
}

}  // namespace detail

/// f_S = number of chains meeting exactly the ranks in S, by dynamic programming.
inline FlagVector flag_f(const Poset& p) {
  auto [base, n] = detail::flag_frame(p);
  FlagVector f{FlagVector::Kind::F, n, std::vector<long long>(std::size_t{1} << n, 0)};
  std::vector<std::vector<int>> level(n + 1);
  for (int x = 0; x < p.size(); ++x) {
    int k = p.rank(x) - base;
    if (k >= 1 && k <= n) level[k].push_back(x);
  }
  parallel_for(f.values.size(), [&](std::size_t s) {
    if (s == 0) {
      f.values[0] = 1;
      return;
    }
    std::vector<long long> count(p.size(), 0);
    int prev = -1;
    for (int k : members(static_cast<RankSet>(s))) {
      for (int y : level[k]) {
        if (prev < 0) {
          count[y] = 1;
          continue;
        }
        long long c = 0;
        for (int x : level[prev])
          if (p.less(x, y)) c += count[x];
        count[y] = c;
      }
      prev = k;
    }
    long long total = 0;
    for (int y : level[prev]) total += count[y];
    f.values[s] = total;
  });
  return f;
}

struct FlagPair {
  FlagVector f, h;
};

/// Flag f by chain counting, flag h by inclusion–exclusion; the inverse
/// transform is checked to round-trip.
inline FlagPair flag_f_and_h(const Poset& p) {
  FlagPair out{flag_f(p), {}};
  out.h = flag_h_from_f(out.f);
  if (flag_f_from_h(out.h).values != out.f.values)
    throw Error(ErrorKind::Inconsistent, "flag f/h round trip failed");
  return out;
}

/// Histogram of descent sets of the label words of maximal chains.
inline FlagVector flag_h_from_descents(const Poset& p, const EdgeLabeling& lambda) {
  auto rep = verify_el(p, lambda);
  if (!rep.ok) throw Error(ErrorKind::LabelingInvalid, "labeling is not EL: " + rep.reason);
  auto [base, n] = detail::flag_frame(p);
  FlagVector h{FlagVector::Kind::H, n, std::vector<long long>(std::size_t{1} << n, 0)};
  for (auto& c : maximal_chains(p)) ++h.values[rank_set(descent_set(lambda.word(c.elements)))];
  return h;
}

// ---------------------------------------------------------------------------
// g-vectors and M-vectors

struct GMCheck {
  std::vector<long long> g;
  bool m_vector = true;
  std::optional<int> witness;  ///< first index i with g_i outside its Macaulay bound
};

/// Upper bound for the next entry after a in position i (a^<i>).
inline long long macaulay_bound(long long a, int i) {
  if (i == 0) return a == 0 ? 0 : -1;  // -1 stands for "no bound"
  long long out = 0;
  for (int k = i; k >= 1 && a > 0; --k) {
    long long top = k;
    while (binomial(top + 1, k) <= a) ++top;
    a -= binomial(top, k);
    out += binomial(top + 1, k + 1);
  }
  return out;
}

/// Checks an explicit sequence (g_0, g_1, ...) for the M-vector property.
inline GMCheck m_vector_check(const std::vector<long long>& g) {
  GMCheck out;
  out.g = g;
  if (g.empty()) return out;
  if (g[0] != 1) {
    out.m_vector = false;
    out.witness = 0;
    return out;
  }
  for (std::size_t i = 1; i < g.size(); ++i) {
    long long bound = macaulay_bound(g[i - 1], static_cast<int>(i) - 1);
    if (g[i] < 0 || (bound >= 0 && g[i] > bound)) {
      out.m_vector = false;
      out.witness = static_cast<int>(i);
      return out;
    }
  }
  return out;
}

/// g = (h_0, h_1 − h_0, ..., h_⌊d/2⌋ − h_⌊d/2⌋−1), then the M-vector test.
inline GMCheck g_and_m_check(const std::vector<long long>& h) {
  std::vector<long long> g;
  const int d = static_cast<int>(h.size()) - 1;
  for (int i = 0; i <= d / 2; ++i) g.push_back(i == 0 ? h[0] : h[i] - h[i - 1]);
  return m_vector_check(g);
}

// ---------------------------------------------------------------------------
// Permutations and the weak order

struct Permutation {
  std::vector<int> word;  ///< values 1..m

  int size() const { return static_cast<int>(word.size()); }
  std::set<int> descents() const { return descent_set(word); }
  RankSet descent_mask() const { return rank_set(descents()); }

  /// Value pairs (a, b), a < b, with b written before a.
  std::set<std::pair<int, int>> inversions() const {
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (word[i] > word[j]) out.emplace(word[j], word[i]);
    return out;
  }

  /// Inversion set packed into a bitmask over value pairs (m <= 11).
  std::uint64_t inversion_mask() const {
    const int m = size();
    std::vector<int> pos(m + 1);
    for (int i = 0; i < m; ++i) pos[word[i]] = i;
    std::uint64_t out = 0;
    int bit = 0;
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b, ++bit)
        if (pos[b] < pos[a]) out |= std::uint64_t{1} << bit;
    return out;
  }

  std::string str() const {
    std::string s;
    for (int v : word) s += std::to_string(v) + (v >= 10 ? " " : "");
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

inline bool is_permutation_word(const std::vector<int>& w) {
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) return false;
  return true;
}

/// σ <=_w τ iff inv(σ) ⊆ inv(τ).
inline bool weak_leq(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw Error(ErrorKind::LengthMismatch, "permutations differ in length");
  if (!is_permutation_word(sigma.word) || !is_permutation_word(tau.word))
    throw Error(ErrorKind::BadParams, "word is not a permutation");
  auto a = sigma.inversions(), b = tau.inversions();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  do out.push_back({w});
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// D_S in lexicographic order.
inline std::vector<Permutation> descent_class(RankSet s, int m) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(m))
    if (p.descent_mask() == s) out.push_back(std::move(p));
  return out;
}

struct Dominance {
  bool dominates = false;
  std::vector<std::pair<Permutation, Permutation>> injection;  ///< τ ↦ φ(τ)
};

namespace detail {

struct DescentClasses {
  int m = 0;
  std::vector<std::vector<Permutation>> perms;
  std::vector<std::vector<std::uint64_t>> inv;

  explicit DescentClasses(int m_) : m(m_), perms(std::size_t{1} << std::max(0, m_ - 1)), inv(perms.size()) {
    for (auto& p : all_permutations(m)) {
      RankSet d = p.descent_mask();
      inv[d].push_back(p.inversion_mask());
      perms[d].push_back(std::move(p));
    }
  }
};

inline Dominance dominates_with(const DescentClasses& dc, RankSet s, RankSet t) {
  Dominance out;
  const auto& dt = dc.perms[t];
  const auto& ds = dc.perms[s];
  if (dt.size() > ds.size()) return out;
  std::vector<std::vector<int>> adj(dt.size());
  for (std::size_t i = 0; i < dt.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j)
      if ((dc.inv[t][i] & ~dc.inv[s][j]) == 0) adj[i].push_back(static_cast<int>(j));
  BipartiteMatching bm(static_cast<int>(dt.size()), static_cast<int>(ds.size()), std::move(adj));
  if (!bm.saturates_left()) return out;
  out.dominates = true;
  for (std::size_t i = 0; i < dt.size(); ++i) out.injection.emplace_back(dt[i], ds[bm.mate_of_left(static_cast<int>(i))]);
  return out;
}

}  // namespace detail

/// S dominates T when some injection φ: D_T → D_S has τ <=_w φ(τ); decided
/// by maximum matching.
inline Dominance dominates(const std::set<int>& s, const std::set<int>& t, int m, int cap = 8) {
  if (m > cap) throw Error(ErrorKind::SizeLimit, "m = " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  if (m < 1) throw Error(ErrorKind::BadParams, "m must be positive");
  for (const auto* x : {&s, &t})
    for (int i : *x)
      if (i < 1 || i >= m) throw Error(ErrorKind::RangeError, "subset must lie in [m-1]");
  detail::DescentClasses dc(m);
  return detail::dominates_with(dc, rank_set(s), rank_set(t));
}

/// i ∈ [n] with exactly one of i, i+1 in S.
inline std::set<int> w_set(const std::set<int>& s, int n) {
  std::set<int> out;
  for (int i = 1; i <= n; ++i)
    if (s.count(i) != s.count(i + 1)) out.insert(i);
  return out;
}

// ---------------------------------------------------------------------------
// Inequality suites

enum class InequalityMode { FacePoset, Geometric, Audit };

inline std::string to_string(InequalityMode m) {
  switch (m) {
    case InequalityMode::FacePoset: return "face-poset";
    case InequalityMode::Geometric: return "geometric";
    case InequalityMode::Audit: return "audit";
  }
  return "?";
}

struct InequalityEntry {
  RankSet s = 0, t = 0;
  long long h_s = 0, h_t = 0;
  bool holds = true;
  std::vector<std::pair<Permutation, Permutation>> injection;
};

struct InequalityReport {
  InequalityMode mode = InequalityMode::Audit;
  int m = 0;                            ///< permutations of [m], subsets of [m-1]
  FlagVector h;
  std::vector<InequalityEntry> pairs;   ///< every dominating pair S != T
  int violations = 0;
  bool passed() const { return mode == InequalityMode::Audit || violations == 0; }
};

/// h_T <= h_S for every pair S != T where S dominates T.
inline InequalityReport verify_flag_inequalities(const Poset& p, InequalityMode mode, int cap = 8) {
  InequalityReport rep;
  rep.mode = mode;
  rep.h = flag_f_and_h(p).h;
  rep.m = rep.h.n + 1;
  if (rep.m > cap) throw Error(ErrorKind::SizeLimit, "m = " + std::to_string(rep.m) + " exceeds cap " + std::to_string(cap));
  detail::DescentClasses dc(rep.m);
  const std::size_t k = rep.h.values.size();
  std::vector<std::optional<InequalityEntry>> slots(k * k);
  parallel_for(k * k, [&](std::size_t idx) {
    RankSet s = static_cast<RankSet>(idx / k), t = static_cast<RankSet>(idx % k);
    if (s == t) return;
    auto dom = detail::dominates_with(dc, s, t);
    if (!dom.dominates) return;
    InequalityEntry e;
    e.s = s;
    e.t = t;
    e.h_s = rep.h[s];
    e.h_t = rep.h[t];
    e.holds = e.h_t <= e.h_s;
    e.injection = std::move(dom.injection);
    slots[idx] = std::move(e);
  });
  for (auto& e : slots)
    if (e) {
      if (!e->holds) ++rep.violations;
      rep.pairs.push_back(std::move(*e));
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Face-poset identities

/// Faces of a pure complex strictly below facet size (ranks 1..D−1): the
/// poset whose flag vector the face-poset inequalities speak about.
inline Poset face_poset_below_facets(const SimplicialComplex& k) {
  if (!k.is_pure() || k.is_void()) throw Error(ErrorKind::NotPure, "need a pure nonempty complex");
  const int d = k.dim() + 1;
  if (d < 2) throw Error(ErrorKind::EmptySelection, "no faces below the facets");
  std::set<int> ranks;
  for (int i = 1; i < d; ++i) ranks.insert(i);
  return rank_select(face_poset(k, true), ranks);
}

/// f_S of the face poset from the f-vector of K (fK[i] = faces with i
/// vertices): with S = a_1 > ... > a_m, b_1 = fK[a_1], b_i = b_{i-1} C(a_{i-1}, a_i).
inline long long flag_f_from_complex_fvector(const std::vector<long long>& fK, const std::set<int>& s) {
  if (s.empty()) return 1;
  long long b = 0;
  int prev = -1;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    int a = *it;
    if (a < 1 || a >= static_cast<int>(fK.size())) throw Error(ErrorKind::RangeError, "rank outside the f-vector");
    b = prev < 0 ? fK[a] : b * binomial(prev, a);
    prev = a;
  }
  return b;
}

/// Coefficients a_0..a_{d+1} with h_S − h_T = Σ a_i h_i(K) for every
/// d-dimensional K, flag vectors taken on face-poset ranks [d].
inline std::vector<long long> face_poset_h_coefficients(const std::set<int>& s, const std::set<int>& t, int d) {
  const int D = d + 1;  // vertices per facet
  std::vector<long long> a(D + 1, 0);
  for (int i = 0; i <= D; ++i) {
    std::vector<long long> fK(D + 1, 0);
    for (int j = 0; j <= D; ++j) fK[j] = binomial(D - i, j - i);
    auto flag_h = [&](const std::set<int>& u) {
      long long v = 0;
      RankSet um = rank_set(u);
      for (RankSet sub = um;; sub = (sub - 1) & um) {
        long long f = sub == 0 ? fK[0] : flag_f_from_complex_fvector(fK, members(sub));
        v += (std::popcount(um & ~sub) % 2 ? -1 : 1) * f;
        if (sub == 0) break;
      }
      return v;
    };
    a[i] = flag_h(s) - flag_h(t);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Ball reciprocity

struct ReciprocityReport {
  bool holds = true;
  int colors = 0;
  FlagVector h;             ///< flag h of the ear
  FlagVector interior_f;    ///< f'_S: faces outside the boundary, by color set
  std::vector<long long> rhs;  ///< Σ_{S ⊆ [d]−U} (−1)^{d−|S|−|U|} f'_S, per U
  std::optional<FlagVector> shelling_h;  ///< color sets of restriction faces
  std::optional<RankSet> witness;
};

/// For a ball or sphere whose vertices carry colors 1..d, one per color on
/// each facet: Σ_S h_S Π_{i∈S} ν_i = Σ_S f'_S Π_{i∉S} (ν_i − 1), compared
/// coefficientwise; with a shelling, flag h is also matched against the
/// color sets of the restriction faces.
inline ReciprocityReport ball_flag_reciprocity(const SimplicialComplex& c, const std::vector<int>& color, int d,
                                               const std::optional<std::vector<int>>& shelling = std::nullopt,
                                               const SimplicialComplex* ambient = nullptr) {
  try {
    certify_sphere_or_ball(c, shelling, ambient);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotBall, std::string("ear is not certified: ") + e.what());
  }
  if (static_cast<int>(color.size()) != c.vertex_count())
    throw Error(ErrorKind::BadParams, "one color per vertex required");
  auto mask_of_face = [&](const Face& f) {
    RankSet m = 0;
    for (int v : f) {
      int col = color[v];
      if (col < 1 || col > d) throw Error(ErrorKind::RangeError, "color outside [d]");
      m |= RankSet{1} << (col - 1);
    }
    if (std::popcount(m) != static_cast<int>(f.size())) throw Error(ErrorKind::BadParams, "face repeats a color");
    return m;
  };
  ReciprocityReport rep;
  rep.colors = d;
  const std::size_t k = std::size_t{1} << d;
  FlagVector f{FlagVector::Kind::F, d, std::vector<long long>(k, 0)};
  rep.interior_f = f;
  SimplicialComplex bd = boundary_complex(c);
  for (auto& face : c.faces()) {
    RankSet m = mask_of_face(face);
    ++f.values[m];
    if (bd.is_void() || !bd.contains(face)) ++rep.interior_f.values[m];
  }
  rep.h = flag_h_from_f(f);
  rep.rhs.assign(k, 0);
  const RankSet all = static_cast<RankSet>(k - 1);
  for (RankSet u = 0; u < k; ++u) {
    RankSet rest = all & ~u;
    for (RankSet s = rest;; s = (s - 1) & rest) {
      int sign = (d - std::popcount(s) - std::popcount(u)) % 2 ? -1 : 1;
      rep.rhs[u] += sign * rep.interior_f.values[s];
      if (s == 0) break;
    }
    if (rep.rhs[u] != rep.h.values[u] && !rep.witness) {
      rep.holds = false;
      rep.witness = u;
    }
  }
  if (shelling) {
    auto sh = verify_shelling(c, *shelling);
    FlagVector hs{FlagVector::Kind::H, d, std::vector<long long>(k, 0)};
    for (auto& r : sh.restrictions) ++hs.values[mask_of_face(r)];
    if (hs.values != rep.h.values) {
      rep.holds = false;
      if (!rep.witness)
        for (RankSet u = 0; u < k; ++u)
          if (hs.values[u] != rep.h.values[u]) {
            rep.witness = u;
            break;
          }
    }
    rep.shelling_h = std::move(hs);
  }
  return rep;
}

}  // namespace earlab
