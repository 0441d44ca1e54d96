#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "earlab/error.hpp"
#include "earlab/lattice.hpp"
#include "earlab/poset.hpp"

namespace earlab {

using AtomSet = std::uint32_t;

inline std::vector<int> atoms_of(AtomSet s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

inline AtomSet mask_of(const std::vector<int>& atoms) {
  AtomSet m = 0;
  for (int a : atoms) m |= AtomSet{1} << a;
  return m;
}

/// Lexicographic comparison of the sorted atom sequences.
inline bool lex_less(AtomSet a, AtomSet b) { return atoms_of(a) < atoms_of(b); }

/// Matroid on an ordered ground set, stored by its list of bases.
class Matroid {
 public:
  static constexpr int kMaxGround = 24;

  Matroid() = default;

  /// Validates equal basis sizes and the exchange axiom.
  static Matroid from_bases(std::vector<std::string> ground, std::vector<AtomSet> bases) {
    Matroid m;
    m.init_ground(std::move(ground));
    if (bases.empty()) throw Error(ErrorKind::Inconsistent, "matroid needs at least one basis");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const AtomSet all = m.full();
    m.rank_ = std::popcount(bases.front());
    for (AtomSet b : bases) {
      if (b & ~all) throw Error(ErrorKind::Inconsistent, "basis uses an atom outside the ground set");
      if (std::popcount(b) != m.rank_) throw Error(ErrorKind::ExchangeAxiomFailed, "bases differ in size");
    }
    m.bases_ = std::move(bases);
    for (AtomSet b1 : m.bases_)
      for (AtomSet b2 : m.bases_)
        for (int x : atoms_of(b1 & ~b2)) {
          bool ok = false;
          for (int y : atoms_of(b2 & ~b1))
            if (m.is_basis((b1 & ~(AtomSet{1} << x)) | (AtomSet{1} << y))) {
              ok = true;
              break;
            }
          if (!ok)
            throw Error(ErrorKind::ExchangeAxiomFailed,
                        "no exchange for " + m.set_name(b1) + " - " + m.ground_[x] + " into " + m.set_name(b2));
        }
    return m;
  }

  /// Independent sets are those containing no listed circuit.
  static Matroid from_circuits(std::vector<std::string> ground, const std::vector<AtomSet>& circuits) {
    const int n = static_cast<int>(ground.size());
    check_size(n);
    for (AtomSet c : circuits) {
      if (c == 0 || (c >> n) != 0) throw Error(ErrorKind::Inconsistent, "circuit is empty or uses an unknown atom");
      for (AtomSet d : circuits)
        if (c != d && (d & ~c) == 0) throw Error(ErrorKind::Inconsistent, "circuits are not an antichain");
    }
    return from_independence(std::move(ground), [&](AtomSet s) {
      for (AtomSet c : circuits)
        if ((c & ~s) == 0) return false;
      return true;
    });
  }

  /// Cycle matroid: edges are atoms named "1".."E", independent sets are forests.
  static Matroid from_graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> ground;
    for (std::size_t i = 0; i < edges.size(); ++i) ground.push_back(std::to_string(i + 1));
    for (auto [u, v] : edges)
      if (u < 0 || v < 0 || u >= vertices || v >= vertices)
        throw Error(ErrorKind::Inconsistent, "edge endpoint out of range");
    return from_independence(std::move(ground), [&](AtomSet s) {
      std::vector<int> parent(vertices);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (int e : atoms_of(s)) {
        int a = find(edges[e].first), b = find(edges[e].second);
        if (a == b) return false;
        parent[a] = b;
      }
      return true;
    });
  }

  int ground_size() const { return static_cast<int>(ground_.size()); }
  const std::vector<std::string>& ground() const { return ground_; }
  const std::string& name(int atom) const { return ground_.at(atom); }
  std::optional<int> atom_index(const std::string& name) const {
    auto it = std::find(ground_.begin(), ground_.end(), name);
    if (it == ground_.end()) return std::nullopt;
    return static_cast<int>(it - ground_.begin());
  }
  int rank() const { return rank_; }
  const std::vector<AtomSet>& bases() const { return bases_; }
  AtomSet full() const { return ground_.empty() ? 0 : (~AtomSet{0} >> (32 - ground_.size())); }

  bool is_basis(AtomSet b) const { return std::binary_search(bases_.begin(), bases_.end(), b); }
  bool is_independent(AtomSet s) const {
    for (AtomSet b : bases_)
      if ((s & ~b) == 0) return true;
    return false;
  }
  int rank_of(AtomSet s) const {
    int best = 0;
    for (AtomSet b : bases_) best = std::max(best, std::popcount(s & b));
    return best;
  }
  AtomSet closure(AtomSet s) const {
    const int r = rank_of(s);
    AtomSet out = s;
    for (int e = 0; e < ground_size(); ++e)
      if (rank_of(s | (AtomSet{1} << e)) == r) out |= AtomSet{1} << e;
    return out;
  }

  /// Minimal dependent sets, in lexicographic order.
  std::vector<AtomSet> circuits() const {
    std::vector<AtomSet> out;
    for (AtomSet s = 1; s <= full() && s != 0; ++s) {
      if (is_independent(s)) continue;
      bool minimal = true;
      for (int e : atoms_of(s))
        if (!is_independent(s & ~(AtomSet{1} << e))) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(s);
      if (s == full()) break;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  /// No loops and no parallel pairs.
  bool is_simple() const {
    for (AtomSet c : circuits())
      if (std::popcount(c) <= 2) return false;
    return true;
  }

  std::string set_name(AtomSet s) const {
    std::string out = "{";
    bool first = true;
    for (int a : atoms_of(s)) {
      if (!first) out += ",";
      out += ground_[a];
      first = false;
    }
    return out + "}";
  }

 private:
  static void check_size(int n) {
    if (n > kMaxGround) throw Error(ErrorKind::SizeLimit, "ground set larger than " + std::to_string(kMaxGround));
  }

  void init_ground(std::vector<std::string> ground) {
    check_size(static_cast<int>(ground.size()));
    auto sorted = ground;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::Inconsistent, "duplicate atom in ground set");
    ground_ = std::move(ground);
  }

  template <class Indep>
  static Matroid from_independence(std::vector<std::string> ground, Indep indep) {
    const int n = static_cast<int>(ground.size());
    check_size(n);
    std::vector<AtomSet> bases;
    const AtomSet all = n == 0 ? 0 : (~AtomSet{0} >> (32 - n));
    int best = -1;
    for (AtomSet s = 0;; ++s) {
      if (indep(s)) {
        int k = std::popcount(s);
        if (k > best) {
          best = k;
          bases.clear();
        }
        if (k == best) bases.push_back(s);
      }
      if (s == all) break;
    }
    // maximal independent sets must all be of maximum size
    for (AtomSet s = 0;; ++s) {
      if (indep(s) && std::popcount(s) < best) {
        bool maximal = true;
        for (int e = 0; e < n && maximal; ++e)
          if (!(s >> e & 1u) && indep(s | (AtomSet{1} << e))) maximal = false;
        if (maximal) throw Error(ErrorKind::Inconsistent, "maximal independent sets differ in size");
      }
      if (s == all) break;
    }
    return from_bases(std::move(ground), std::move(bases));
  }

  std::vector<std::string> ground_;
  std::vector<AtomSet> bases_;
  int rank_ = 0;
};

/// {C − min(C) : C a circuit}.
inline std::vector<AtomSet> broken_circuits(const Matroid& m) {
  std::vector<AtomSet> out;
  for (AtomSet c : m.circuits()) out.push_back(c & (c - 1));
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Bases containing no broken circuit, in lexicographic order.
inline std::vector<AtomSet> nbc_bases(const Matroid& m) {
  auto bc = broken_circuits(m);
  std::vector<AtomSet> out;
  for (AtomSet b : m.bases()) {
    bool ok = true;
    for (AtomSet c : bc)
      if ((c & ~b) == 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

struct RankClosure {
  int rank;
  AtomSet closure;
};

inline RankClosure rank_and_closure(const Matroid& m, AtomSet a) {
  if (a & ~m.full()) throw Error(ErrorKind::RangeError, "set is not inside the ground set");
  return {m.rank_of(a), m.closure(a)};
}

/// Flats ordered by inclusion, indexed by (rank, lexicographic atoms).
inline Lattice lattice_of_flats(const Matroid& m) {
  if (!m.is_simple()) throw Error(ErrorKind::NotSimple, "matroid has a loop or a parallel pair");
  std::vector<AtomSet> flats{m.closure(0)};
  for (std::size_t i = 0; i < flats.size(); ++i)
    for (int e = 0; e < m.ground_size(); ++e) {
      if (flats[i] >> e & 1u) continue;
      AtomSet f = m.closure(flats[i] | (AtomSet{1} << e));
      if (std::find(flats.begin(), flats.end(), f) == flats.end()) flats.push_back(f);
    }
  std::stable_sort(flats.begin(), flats.end(), [&](AtomSet a, AtomSet b) {
    int ra = m.rank_of(a), rb = m.rank_of(b);
    if (ra != rb) return ra < rb;
    return lex_less(a, b);
  });
  const int n = static_cast<int>(flats.size());
  std::vector<std::string> names;
  std::vector<int> ranks;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    names.push_back(m.set_name(flats[i]));
    ranks.push_back(m.rank_of(flats[i]));
    for (int j = 0; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = (flats[i] & ~flats[j]) == 0;
  }
  std::map<AtomSet, int> pos;
  for (int i = 0; i < n; ++i) pos[flats[i]] = i;
  std::vector<int> join(static_cast<std::size_t>(n) * n), meet(join.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      join[static_cast<std::size_t>(i) * n + j] = pos.at(m.closure(flats[i] | flats[j]));
      meet[static_cast<std::size_t>(i) * n + j] = pos.at(flats[i] & flats[j]);
    }
  return Lattice::from_tables(Poset::from_order(std::move(names), std::move(leq), std::move(ranks)),
                              std::move(join), std::move(meet));
}

/// Lattice element of each atom's flat, in ground order.
inline std::vector<int> atom_flats(const Lattice& flats, const Matroid& m) {
  std::vector<int> out;
  for (int a = 0; a < m.ground_size(); ++a)
    out.push_back(flats.poset().require_index(m.set_name(m.closure(AtomSet{1} << a))));
  return out;
}

/// Simple matroid whose lattice of flats is the given geometric lattice;
/// ground = atoms in the given order, independence = rank of join equals size.
inline Matroid matroid_of_geometric_lattice(const Lattice& l, const std::vector<int>& atom_order) {
  std::vector<std::string> ground;
  for (int a : atom_order) ground.push_back(l.poset().name(a));
  const int n = static_cast<int>(atom_order.size());
  const int r = l.rank();
  std::vector<AtomSet> bases;
  const AtomSet all = n == 0 ? 0 : (~AtomSet{0} >> (32 - n));
  for (AtomSet s = 0;; ++s) {
    if (std::popcount(s) == r) {
      int j = l.bottom();
      for (int a : atoms_of(s)) j = l.join(j, atom_order[a]);
      if (j == l.top()) bases.push_back(s);
    }
    if (s == all) break;
  }
  return Matroid::from_bases(std::move(ground), std::move(bases));
}

}  // namespace earlab
