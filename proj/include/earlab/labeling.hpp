#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "earlab/complex.hpp"
#include "earlab/error.hpp"
#include "earlab/lattice.hpp"
#include "earlab/poset.hpp"

namespace earlab {

/// Integer labels on the cover pairs of one poset.
class EdgeLabeling {
 public:
  static constexpr int kUnset = INT_MIN;

  EdgeLabeling() = default;
  explicit EdgeLabeling(int n) : n_(n), labels_(static_cast<std::size_t>(n) * n, kUnset) {}

  int size() const { return n_; }
  void set(int lo, int hi, int value) { labels_.at(static_cast<std::size_t>(lo) * n_ + hi) = value; }
  bool has(int lo, int hi) const { return labels_.at(static_cast<std::size_t>(lo) * n_ + hi) != kUnset; }
  int operator()(int lo, int hi) const {
    int v = labels_.at(static_cast<std::size_t>(lo) * n_ + hi);
    if (v == kUnset) throw Error(ErrorKind::LabelingInvalid, "edge has no label");
    return v;
  }

  /// Labels read along consecutive elements of a saturated chain.
  std::vector<int> word(const std::vector<int>& chain) const {
    std::vector<int> w;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) w.push_back((*this)(chain[i], chain[i + 1]));
    return w;
  }

  bool total_on(const Poset& p) const {
    if (n_ != p.size()) return false;
    for (auto [lo, hi] : p.cover_pairs())
      if (!has(lo, hi)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<int> labels_;
};

/// {i : a_i > a_{i+1}}, positions 1-based.
inline std::set<int> descent_set(const std::vector<int>& word) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

struct LabelWord {
  std::vector<int> word;
  std::set<int> descents() const { return descent_set(word); }
};

inline bool weakly_increasing(const std::vector<int>& w) { return std::is_sorted(w.begin(), w.end()); }

inline bool strictly_decreasing(const std::vector<int>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] <= w[i + 1]) return false;
  return true;
}

struct ElReport {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;  ///< violating interval [x, y]
  std::string reason;
};

/// Every interval must have exactly one weakly increasing saturated chain,
/// and its word must be strictly lexicographically first. Equal words on
/// distinct chains count as a failure.
inline ElReport verify_el(const Poset& p, const EdgeLabeling& lambda) {
  ElReport rep;
  if (!p.graded() || !p.bottom() || !p.top()) {
    rep.ok = false;
    rep.reason = "poset must be graded with bounds";
    return rep;
  }
  if (!lambda.total_on(p)) {
    rep.ok = false;
    rep.reason = "labeling is not total on the Hasse diagram";
    return rep;
  }
  for (int x : p.linear_extension())
    for (int y : p.linear_extension()) {
      if (!p.less(x, y)) continue;
      auto chains = saturated_chains(p, x, y);
      std::vector<std::vector<int>> words;
      for (auto& c : chains) words.push_back(lambda.word(c.elements));
      std::size_t inc = words.size();
      int inc_count = 0;
      for (std::size_t i = 0; i < words.size(); ++i)
        if (weakly_increasing(words[i])) {
          ++inc_count;
          inc = i;
        }
      auto fail = [&](std::string why) {
        rep.ok = false;
        rep.witness = std::make_pair(x, y);
        rep.reason = "[" + p.name(x) + ", " + p.name(y) + "]: " + std::move(why);
        return rep;
      };
      if (inc_count != 1)
        return fail(std::to_string(inc_count) + " weakly increasing chains");
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (i == inc) continue;
        if (words[i] == words[inc]) return fail("two chains share the increasing word");
        if (words[i] < words[inc]) return fail("increasing chain is not lexicographically first");
      }
    }
  return rep;
}

/// Labels drawn from [r], no label repeated along any maximal chain.
inline bool verify_sr(const Poset& p, const EdgeLabeling& lambda) {
  if (!p.bottom() || !p.top() || !lambda.total_on(p)) return false;
  const int r = p.rank(*p.top()) - p.rank(*p.bottom());
  for (auto& c : maximal_chains(p)) {
    auto w = lambda.word(c.elements);
    std::set<int> seen;
    for (int a : w) {
      if (a < 1 || a > r || !seen.insert(a).second) return false;
    }
  }
  return true;
}

struct IncreasingDecreasing {
  Chain increasing;
  std::vector<Chain> decreasing;
};

/// The unique weakly increasing chain of [x, y] and every strictly decreasing
/// one; the decreasing count is cross-checked against |μ(x, y)|.
inline IncreasingDecreasing increasing_and_decreasing_chains(const Poset& p, const EdgeLabeling& lambda,
                                                             int x, int y) {
  if (!p.leq(x, y)) throw Error(ErrorKind::NotComparable, p.name(x) + " is not below " + p.name(y));
  IncreasingDecreasing out;
  int inc_count = 0;
  for (auto& c : saturated_chains(p, x, y)) {
    auto w = lambda.word(c.elements);
    if (weakly_increasing(w)) {
      out.increasing = c;
      ++inc_count;
    }
    if (strictly_decreasing(w)) out.decreasing.push_back(c);
  }
  if (inc_count != 1)
    throw Error(ErrorKind::LabelingInvalid, "interval [" + p.name(x) + ", " + p.name(y) + "] has " +
                                                std::to_string(inc_count) + " increasing chains");
  long long mu = mobius(p, x, y);
  if (static_cast<long long>(out.decreasing.size()) != (mu < 0 ? -mu : mu))
    throw Error(ErrorKind::MobiusMismatch, "interval [" + p.name(x) + ", " + p.name(y) + "]: " +
                                               std::to_string(out.decreasing.size()) +
                                               " decreasing chains but mu = " + std::to_string(mu));
  return out;
}

/// Maximal chains sorted by label word; ties keep maximal_chains order.
inline std::vector<Chain> chains_in_label_order(const Poset& p, const EdgeLabeling& lambda) {
  auto chains = maximal_chains(p);
  std::vector<std::pair<std::vector<int>, Chain>> keyed;
  for (auto& c : chains) keyed.emplace_back(lambda.word(c.elements), c);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Chain> out;
  for (auto& [w, c] : keyed) out.push_back(std::move(c));
  return out;
}

struct LexShelling {
  SimplicialComplex complex;    ///< order complex of the proper part, facets in lex order
  std::vector<Chain> chains;    ///< maximal chains of p (bounds included), lex order
  ShellingOrder shelling;
};

/// Lexicographic order of maximal chains, certified as a shelling of the
/// order complex of the proper part.
inline LexShelling lex_shelling(const Poset& p, const EdgeLabeling& lambda) {
  LexShelling out;
  out.chains = chains_in_label_order(p, lambda);
  Poset proper = proper_part(p);
  std::vector<int> to_proper(p.size(), -1);
  for (int i = 0; i < proper.size(); ++i) to_proper[proper.origin(i)] = i;
  std::vector<Face> facets;
  for (auto& c : out.chains) {
    Face f;
    for (int x : c.elements)
      if (to_proper[x] >= 0) f.push_back(to_proper[x]);
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  out.complex = SimplicialComplex(proper.names(), facets);
  std::vector<int> order(out.complex.facet_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  out.shelling = verify_shelling(out.complex, order);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice-specific labelings

/// Atomic and semimodular (rank submodular), checked over all pairs.
inline bool is_geometric(const Lattice& l) {
  const Poset& p = l.poset();
  if (!p.graded()) return false;
  auto atoms = l.atoms();
  for (int x = 0; x < l.size(); ++x) {
    int j = l.bottom();
    for (int a : atoms)
      if (p.leq(a, x)) j = l.join(j, a);
    if (j != x) return false;
  }
  for (int x = 0; x < l.size(); ++x)
    for (int y = x + 1; y < l.size(); ++y)
      if (p.rank(x) + p.rank(y) < p.rank(l.join(x, y)) + p.rank(l.meet(x, y))) return false;
  return true;
}

/// λ(x, y) = min{i : x ∨ a_i = y} for the given atom order (1-based positions).
inline EdgeLabeling minimal_labeling(const Lattice& l, const std::vector<int>& atom_order) {
  if (!is_geometric(l)) throw Error(ErrorKind::NotGeometric, "lattice is not atomic and semimodular");
  auto atoms = l.atoms();
  std::vector<int> sorted_order = atom_order, sorted_atoms = atoms;
  std::sort(sorted_order.begin(), sorted_order.end());
  std::sort(sorted_atoms.begin(), sorted_atoms.end());
  if (sorted_order != sorted_atoms) throw Error(ErrorKind::BadParams, "atom order must list every atom once");
  const Poset& p = l.poset();
  EdgeLabeling lambda(p.size());
  for (auto [x, y] : p.cover_pairs()) {
    for (std::size_t i = 0; i < atom_order.size(); ++i)
      if (l.join(x, atom_order[i]) == y) {
        lambda.set(x, y, static_cast<int>(i) + 1);
        break;
      }
  }
  auto rep = verify_el(p, lambda);
  if (!rep.ok) throw Error(ErrorKind::LabelingInvalid, "minimal labeling failed EL: " + rep.reason);
  return lambda;
}

/// Atoms in index order.
inline std::vector<int> default_atom_order(const Lattice& l) { return l.atoms(); }

/// Saturated chain from 0̂ to 1̂ whose pairwise generated sublattices (with
/// every maximal chain, hence with every chain) are distributive.
inline void verify_mchain(const Lattice& l, const MChain& m) {
  const Poset& p = l.poset();
  const auto& c = m.elements;
  if (c.empty() || c.front() != l.bottom() || c.back() != l.top())
    throw Error(ErrorKind::NotMChain, "M-chain must run from bottom to top");
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!p.covers(c[i], c[i + 1])) throw Error(ErrorKind::NotMChain, "M-chain is not saturated");
  for (auto& d : maximal_chains(p)) {
    Lattice sub = sublattice_generated(l, {c, d.elements});
    if (!is_distributive(sub)) {
      std::string desc;
      for (int x : d.elements) desc += (desc.empty() ? "" : " < ") + p.name(x);
      throw Error(ErrorKind::NotMChain, "sublattice with chain " + desc + " is not distributive");
    }
  }
}

/// λ(x, y) = min{i : y <= x ∨ z_i} over the M-chain z_0 < ... < z_r, then
/// verified as an S_r-labeling.
inline EdgeLabeling derive_sn_labeling(const Lattice& l, const MChain& m) {
  verify_mchain(l, m);
  const Poset& p = l.poset();
  EdgeLabeling lambda(p.size());
  for (auto [x, y] : p.cover_pairs()) {
    for (std::size_t i = 0; i < m.elements.size(); ++i)
      if (p.leq(y, l.join(x, m.elements[i]))) {
        lambda.set(x, y, static_cast<int>(i));
        break;
      }
  }
  auto rep = verify_el(p, lambda);
  if (!rep.ok) throw Error(ErrorKind::LabelingInvalid, "derived labeling is not EL: " + rep.reason);
  if (!verify_sr(p, lambda)) throw Error(ErrorKind::LabelingInvalid, "derived labeling is not an S_r-labeling");
  return lambda;
}

/// Standard labeling of B_r: the element added along each cover.
inline EdgeLabeling boolean_labeling(const Lattice& b) { return derive_sn_labeling(b, boolean_mchain(b)); }

/// First pair x < y with μ(x, y) = 0, if any.
inline std::optional<std::pair<int, int>> zero_mobius_interval(const Poset& p) {
  MobiusTable mu(p);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.less(x, y) && mu(x, y) == 0) return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace earlab
