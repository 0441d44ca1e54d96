#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "earlab/complex.hpp"
#include "earlab/error.hpp"
#include "earlab/flag.hpp"
#include "earlab/labeling.hpp"
#include "earlab/lattice.hpp"
#include "earlab/matroid.hpp"
#include "earlab/parallel.hpp"
#include "earlab/poset.hpp"

namespace earlab {

/// An embedding of B_r into the ambient poset: element[mask] is the image of
/// the subset of positions {k : bit k-1 of mask}. Permutation π of [r] names
/// the chain through element[{π(1)}], element[{π(1), π(2)}], ...
struct BooleanFrame {
  int r = 0;
  std::vector<int> element;
  std::vector<std::string> position_labels;  ///< what position k stands for
  std::string description;
};

struct Provenance {
  int frame = 0;              ///< 1-based: decreasing chain, nbc-basis or shelling step
  int word_index = 0;         ///< 1-based index of σ in D_S (lex order)
  std::vector<int> sigma;     ///< σ in frame positions
};

struct Ear {
  Provenance provenance;
  std::vector<Face> chains;              ///< facets in shelling order (reverse lex of words)
  std::vector<std::vector<int>> words;   ///< frame permutation of each chain
  SimplicialComplex complex;
  std::vector<Face> ambient;             ///< all S-chains of the frame block C(σ)

  std::vector<int> shelling() const {
    std::vector<int> out(chains.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
  }
  SimplicialComplex ambient_complex() const { return SimplicialComplex(complex.vertices(), ambient); }
};

struct EarDecomposition {
  std::string construction;
  int r = 0;                    ///< rank of the frames
  std::set<int> ranks;          ///< S
  Poset poset;                  ///< the rank-selected poset whose order complex is decomposed
  SimplicialComplex complex;
  std::vector<BooleanFrame> frames;
  std::vector<Ear> ears;
  std::vector<Provenance> dropped;  ///< blocks that contributed no new chain
  std::vector<std::string> notes;

  std::size_t chain_count() const {
    std::size_t n = 0;
    for (auto& e : ears) n += e.chains.size();
    return n;
  }
};

namespace detail {

/// Elements of P at ranks in S (relative to rank of the bottom, or 0),
/// ranks renumbered 1..|S|. No range check; origin maps back to P.
inline Poset select_ranks(const Poset& p, const std::set<int>& s) {
  if (s.empty()) throw Error(ErrorKind::EmptySelection, "empty rank selection");
  const int base = p.bottom() ? p.rank(*p.bottom()) : 0;
  std::vector<int> keep, ranks;
  int pos = 1;
  for (int k : s) {
    for (int x : p.elements_of_rank(base + k)) {
      keep.push_back(x);
      ranks.push_back(pos);
    }
    ++pos;
  }
  if (keep.empty()) throw Error(ErrorKind::EmptySelection, "no elements at the selected ranks");
  return induced_subposet(p, keep, ranks);
}

/// Chains of C(σ): permutations agreeing with σ on prefix sets at every rank
/// outside S, i.e. σ with each block between consecutive non-S ranks permuted.
inline std::vector<std::vector<int>> block_permutations(const std::vector<int>& sigma, const std::set<int>& s) {
  const int r = static_cast<int>(sigma.size());
  std::vector<std::pair<int, int>> blocks;  // [lo, hi) in 0-based positions
  int prev = 0;
  for (int k = 1; k <= r; ++k)
    if (!s.count(k)) {
      if (k - prev > 1) blocks.emplace_back(prev, k);
      prev = k;
    }
  std::vector<std::vector<int>> out;
  std::vector<int> w = sigma;
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      out.push_back(w);
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(w.begin() + lo, w.begin() + hi);
    do self(self, b + 1);
    while (std::next_permutation(w.begin() + lo, w.begin() + hi));
  };
  rec(rec, 0);
  return out;
}

inline Face chain_of(const BooleanFrame& f, const std::vector<int>& pi, const std::set<int>& s,
                     const std::vector<int>& q_of_p) {
  Face out;
  std::uint32_t mask = 0;
  for (int n = 1; n <= static_cast<int>(pi.size()); ++n) {
    mask |= std::uint32_t{1} << (pi[n - 1] - 1);
    if (s.count(n)) {
      int q = q_of_p.at(f.element.at(mask));
      if (q < 0) throw Error(ErrorKind::Inconsistent, "frame element outside the selected ranks");
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The shared engine: frames in order, D_S words in lex order within each
/// frame; an ear is the set of S-chains of C(σ) not claimed by earlier blocks,
/// shelled in reverse lexicographic order of frame words.
inline EarDecomposition run_frames(std::string construction, const Poset& p, int r, const std::set<int>& s,
                                   std::vector<BooleanFrame> frames) {
  EarDecomposition out;
  out.construction = std::move(construction);
  out.r = r;
  out.ranks = s;
  for (int k : s)
    if (k < 1 || k > r) throw Error(ErrorKind::RangeError, "rank " + std::to_string(k) + " outside [1, r]");
  out.poset = select_ranks(p, s);
  out.complex = order_complex(out.poset);
  std::vector<int> q_of_p(p.size(), -1);
  for (int i = 0; i < out.poset.size(); ++i) q_of_p[out.poset.origin(i)] = i;

  RankSet smask = 0;
  for (int k : s)
    if (k < r) smask |= RankSet{1} << (k - 1);
  std::vector<Permutation> words = descent_class(smask, r);
  std::set<Face> claimed;
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      Provenance prov{static_cast<int>(fi) + 1, static_cast<int>(wi) + 1, words[wi].word};
      std::map<std::vector<int>, Face, std::greater<>> fresh;  // reverse lex by word
      std::set<Face> block;
      for (auto& pi : block_permutations(words[wi].word, s)) {
        Face c = chain_of(frames[fi], pi, s, q_of_p);
        block.insert(c);
        if (!claimed.count(c)) fresh.emplace(pi, std::move(c));
      }
      std::set<Face> seen;
      Ear ear;
      ear.provenance = prov;
      for (auto& [pi, c] : fresh)
        if (seen.insert(c).second) {
          ear.words.push_back(pi);
          ear.chains.push_back(c);
        }
      claimed.insert(block.begin(), block.end());
      if (ear.chains.empty()) {
        out.dropped.push_back(prov);
        continue;
      }
      ear.ambient.assign(block.begin(), block.end());
      ear.complex = SimplicialComplex(out.poset.names(), ear.chains);
      out.ears.push_back(std::move(ear));
    }
  }
  out.frames = std::move(frames);
  return out;
}

inline std::vector<std::string> numbered_labels(int r) {
  std::vector<std::string> out;
  for (int k = 1; k <= r; ++k) out.push_back(std::to_string(k));
  return out;
}

inline std::set<int> full_range(int r) {
  std::set<int> s;
  for (int k = 1; k < r; ++k) s.insert(k);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Supersolvable lattices

/// Throws NonzeroMobiusViolated on the first interval with μ = 0.
inline void require_nonzero_mobius(const Poset& p) {
  if (auto bad = zero_mobius_interval(p))
    throw Error(ErrorKind::NonzeroMobiusViolated,
                "mu(" + p.name(bad->first) + ", " + p.name(bad->second) + ") = 0");
}

/// One Boolean frame per strictly decreasing maximal chain: the sublattice
/// generated with the M-chain (the increasing chain of λ), walked by labels.
/// Decreasing chains all carry the word r...1; ties keep element-index order.
inline std::vector<BooleanFrame> supersolvable_frames(const Lattice& l, const EdgeLabeling& lambda) {
  const Poset& p = l.poset();
  auto rep = verify_el(p, lambda);
  if (!rep.ok) throw Error(ErrorKind::LabelingInvalid, "labeling is not EL: " + rep.reason);
  if (!verify_sr(p, lambda)) throw Error(ErrorKind::LabelingInvalid, "labeling is not an S_r-labeling");
  require_nonzero_mobius(p);
  const int r = l.rank();
  if (r > 16) throw Error(ErrorKind::SizeLimit, "rank too large for Boolean frames");
  auto id = increasing_and_decreasing_chains(p, lambda, l.bottom(), l.top());
  std::vector<BooleanFrame> frames;
  for (std::size_t i = 0; i < id.decreasing.size(); ++i) {
    Lattice sub = sublattice_generated(l, {id.increasing.elements, id.decreasing[i].elements});
    std::vector<bool> in_sub(p.size(), false);
    for (int x = 0; x < sub.size(); ++x) in_sub[sub.poset().origin(x)] = true;
    BooleanFrame f;
    f.r = r;
    f.position_labels = detail::numbered_labels(r);
    f.element.assign(std::size_t{1} << r, -1);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
      int x = l.bottom();
      for (int k = 1; k <= r; ++k) {
        if (!(mask >> (k - 1) & 1u)) continue;
        int next = -1;
        for (int y : p.up_covers(x))
          if (in_sub[y] && lambda(x, y) == k) {
            next = y;
            break;
          }
        if (next < 0) throw Error(ErrorKind::Inconsistent, "generated sublattice is not Boolean under the labeling");
        x = next;
      }
      f.element[mask] = x;
    }
    std::string desc;
    for (int x : id.decreasing[i].elements) desc += (desc.empty() ? "" : " < ") + p.name(x);
    f.description = "decreasing chain " + desc;
    frames.push_back(std::move(f));
  }
  return frames;
}

inline EarDecomposition decompose_rank_selected_supersolvable(const Lattice& l, const EdgeLabeling& lambda,
                                                              const std::set<int>& s) {
  rank_select(l.poset(), s);  // range validation
  return detail::run_frames("rank-supersolvable", l.poset(), l.rank(), s, supersolvable_frames(l, lambda));
}

inline EarDecomposition decompose_supersolvable(const Lattice& l, const EdgeLabeling& lambda) {
  auto s = detail::full_range(l.rank());
  if (s.empty()) throw Error(ErrorKind::EmptySelection, "lattice of rank < 2 has an empty proper part");
  return detail::run_frames("supersolvable", l.poset(), l.rank(), s, supersolvable_frames(l, lambda));
}

// ---------------------------------------------------------------------------
// Rank-selected Boolean lattice

inline EarDecomposition decompose_rank_selected_boolean(int r, const std::set<int>& s) {
  Lattice b = boolean_lattice(r);
  rank_select(b.poset(), s);
  BooleanFrame f;
  f.r = r;
  f.position_labels = detail::numbered_labels(r);
  f.element.resize(std::size_t{1} << r);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask)
    f.element[mask] = b.poset().require_index(subset_name(mask, r));
  f.description = "identity";
  return detail::run_frames("rank-boolean", b.poset(), r, s, {std::move(f)});
}

/// σ^c for an S-chain of B_r given as subset masks (one per rank of S,
/// increasing): gaps are filled with increasing labels, then
/// σ^c = u(λ(0,a_1−1)) v(λ(a_1−1,b_1+1)) u(λ(b_1+1,a_2−1)) ... u(λ(b_ℓ+1,r)).
inline std::vector<int> sigma_word(const std::vector<std::uint32_t>& chain, const std::set<int>& s, int r) {
  if (chain.size() != s.size()) throw Error(ErrorKind::LengthMismatch, "one element per selected rank");
  std::map<int, std::uint32_t> at{{0, 0u}, {r, (r >= 32 ? ~0u : ((1u << r) - 1))}};
  {
    auto it = s.begin();
    for (auto m : chain) at[*it++] = m;
  }
  std::vector<int> w(r + 1, 0);  // w[n] = label of the step into rank n
  for (auto it = at.begin(); std::next(it) != at.end(); ++it) {
    auto nx = std::next(it);
    std::uint32_t lo = it->second, hi = nx->second;
    if ((lo & ~hi) != 0 || std::popcount(hi & ~lo) != nx->first - it->first)
      throw Error(ErrorKind::BadParams, "not a chain of B_r at the stated ranks");
    int n = it->first;
    for (int k = 1; k <= r; ++k)
      if ((hi & ~lo) >> (k - 1) & 1u) w[++n] = k;
  }
  auto labels = [&](int i, int j) {
    std::vector<int> v;
    for (int n = i + 1; n <= j; ++n) v.push_back(w[n]);
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::pair<int, int>> beta;
  for (int k : s) {
    if (!beta.empty() && beta.back().second == k - 1)
      beta.back().second = k;
    else
      beta.emplace_back(k, k);
  }
  std::vector<int> out;
  int cur = 0;
  for (auto [a, b] : beta) {
    auto u = labels(cur, a - 1);
    out.insert(out.end(), u.begin(), u.end());
    auto v = labels(a - 1, b + 1);
    out.insert(out.end(), v.rbegin(), v.rend());
    cur = b + 1;
  }
  auto u = labels(cur, r);
  out.insert(out.end(), u.begin(), u.end());
  return out;
}

// ---------------------------------------------------------------------------
// Face posets of shellable complexes

struct FacePosetOptions {
  bool allow_top_rank = false;  ///< experiment hook: skip the top-rank guard
};

/// One frame per shelling step: the face poset of F_i ≅ B_d, positions given
/// by an order φ of the vertices of F_i with r(F_i) last (index order inside
/// each group). S ⊆ [d−1] selects face sizes.
inline EarDecomposition decompose_face_poset(const SimplicialComplex& k, const std::vector<int>& shelling,
                                             const std::set<int>& s, FacePosetOptions opts = {}) {
  if (!k.is_pure() || k.is_void() || k.dim() < 0) throw Error(ErrorKind::NotPure, "need a pure nonempty complex");
  const int d = k.dim() + 1;
  if (s.empty()) throw Error(ErrorKind::EmptySelection, "empty rank selection");
  for (int x : s) {
    if (x == d && !opts.allow_top_rank)
      throw Error(ErrorKind::TopRankSelected, "rank " + std::to_string(d) + " (the facets) may not be selected");
    if (x < 1 || x > d) throw Error(ErrorKind::RangeError, "rank " + std::to_string(x) + " outside [1, d]");
  }
  ShellingOrder sh = verify_shelling(k, shelling);
  Poset p = face_poset(k, true);
  std::vector<BooleanFrame> frames;
  for (std::size_t step = 0; step < sh.order.size(); ++step) {
    const Face& facet = k.facets()[sh.order[step]];
    const Face& restr = sh.restrictions[step];
    std::vector<int> phi;  // phi[k-1] = vertex at position k
    for (int v : facet)
      if (!std::binary_search(restr.begin(), restr.end(), v)) phi.push_back(v);
    for (int v : restr) phi.push_back(v);
    BooleanFrame f;
    f.r = d;
    for (int v : phi) f.position_labels.push_back(k.vertices()[v]);
    f.element.resize(std::size_t{1} << d);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
      Face face;
      for (int j = 0; j < d; ++j)
        if (mask >> j & 1u) face.push_back(phi[j]);
      std::sort(face.begin(), face.end());
      f.element[mask] = p.require_index(k.face_name(face));
    }
    f.description = "facet " + k.face_name(facet) + ", restriction " + k.face_name(restr);
    frames.push_back(std::move(f));
  }
  auto out = detail::run_frames("face-poset", p, d, s, std::move(frames));
  if (s.count(d)) out.notes.push_back("top rank selected: construction run outside its hypotheses");
  return out;
}

// ---------------------------------------------------------------------------
// Geometric lattices

/// One frame per nbc-basis (lex order) B = {b_1 < ... < b_r}: position k is
/// the atom b_k and element[mask] is the join of those atoms. Frame words are
/// order-isomorphic to the basis labeling ν.
inline std::vector<BooleanFrame> geometric_frames(const Lattice& l, const std::vector<int>& atom_order) {
  if (!is_geometric(l)) throw Error(ErrorKind::NotGeometric, "lattice is not atomic and semimodular");
  Matroid m = matroid_of_geometric_lattice(l, atom_order);
  const int r = l.rank();
  std::vector<BooleanFrame> frames;
  for (AtomSet basis : nbc_bases(m)) {
    auto atoms = atoms_of(basis);
    BooleanFrame f;
    f.r = r;
    for (int a : atoms) f.position_labels.push_back(std::to_string(a + 1));
    f.element.resize(std::size_t{1} << r);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
      int x = l.bottom();
      for (int k = 0; k < r; ++k)
        if (mask >> k & 1u) x = l.join(x, atom_order[atoms[k]]);
      f.element[mask] = x;
    }
    f.description = "nbc-basis " + m.set_name(basis);
    frames.push_back(std::move(f));
  }
  return frames;
}

inline EarDecomposition decompose_geometric(const Lattice& l, const std::vector<int>& atom_order,
                                            const std::optional<std::set<int>>& s = std::nullopt) {
  std::set<int> sel = s ? *s : detail::full_range(l.rank());
  if (sel.empty()) throw Error(ErrorKind::EmptySelection, "lattice of rank < 2 has an empty proper part");
  rank_select(l.poset(), sel);
  return detail::run_frames(s ? "geometric-rank-selected" : "geometric", l.poset(), l.rank(), sel,
                            geometric_frames(l, atom_order));
}

// ---------------------------------------------------------------------------
// Verification

struct AxiomVerdict {
  bool pass = true;
  std::vector<std::string> witnesses;
  void fail(std::string w) {
    pass = false;
    if (witnesses.size() < 8) witnesses.push_back(std::move(w));
  }
};

struct EarCertificate {
  bool certified = false;
  std::string kind;  ///< "SPHERE", "BALL" or empty
  std::vector<std::string> criteria;
  std::string failure;
};

struct CedReport {
  AxiomVerdict axioms[4];
  std::vector<EarCertificate> ears;
  bool passed() const { return axioms[0].pass && axioms[1].pass && axioms[2].pass && axioms[3].pass; }
};

/// Minimal description of an ear for verification.
struct EarView {
  SimplicialComplex complex;
  std::vector<int> shelling;
  std::optional<SimplicialComplex> ambient;
};

/// Axioms: (i) the ears cover Δ; (ii) the first ear is a sphere and every ear
/// is a full-dimensional subcomplex of its ambient sphere (proper after the
/// first); (iii) later ears are balls through their shellings; (iv) each ear
/// meets the union of the earlier ones exactly in its boundary.
inline CedReport verify_ced(const SimplicialComplex& delta, const std::vector<EarView>& ears,
                            CertifyOptions opts = {}) {
  CedReport rep;
  rep.ears.resize(ears.size());
  auto& ax1 = rep.axioms[0];
  auto& ax2 = rep.axioms[1];
  auto& ax3 = rep.axioms[2];
  auto& ax4 = rep.axioms[3];
  if (ears.empty()) {
    ax1.fail("no ears");
    ax2.fail("no first ear");
    return rep;
  }
  for (auto& e : ears)
    if (e.complex.vertices() != delta.vertices())
      throw Error(ErrorKind::BadParams, "ears must share the vertex list of the decomposed complex");

  // (i)
  std::set<Face> covered;
  for (std::size_t i = 0; i < ears.size(); ++i)
    for (auto& f : ears[i].complex.facets()) {
      if (!delta.contains(f)) ax1.fail("ear " + std::to_string(i + 1) + " facet " + delta.face_name(f) + " is not a face");
      covered.insert(f);
    }
  for (auto& f : delta.facets())
    if (!covered.count(f)) ax1.fail("facet " + delta.face_name(f) + " lies in no ear");

  // (ii), (iii): certificates are independent per ear
  std::vector<std::string> ii(ears.size()), iii(ears.size());
  parallel_for(ears.size(), [&](std::size_t i) {
    const auto& e = ears[i];
    auto& cert = rep.ears[i];
    if (e.complex.is_void() || !e.complex.is_pure() || e.complex.dim() != delta.dim()) {
      ii[i] = "ear " + std::to_string(i + 1) + " is not pure of full dimension";
      cert.failure = ii[i];
      return;
    }
    if (i > 0) {
      if (!e.ambient) {
        ii[i] = "ear " + std::to_string(i + 1) + " declares no ambient sphere";
      } else {
        try {
          auto amb = certify_sphere_or_ball(*e.ambient, std::nullopt, nullptr, opts);
          if (amb.kind != Certificate::Kind::Sphere) throw Error(ErrorKind::NotCertified, "ambient is a ball");
          if (e.ambient->dim() != e.complex.dim()) throw Error(ErrorKind::NotCertified, "dimension differs from ambient");
          if (!facets_within(e.complex, *e.ambient)) throw Error(ErrorKind::NotCertified, "not inside the ambient");
          if (e.complex.facet_count() >= e.ambient->facet_count())
            throw Error(ErrorKind::NotCertified, "not a proper subcomplex of the ambient");
        } catch (const Error& err) {
          ii[i] = "ear " + std::to_string(i + 1) + ": " + err.what();
        }
      }
    }
    try {
      auto c = certify_sphere_or_ball(e.complex, e.shelling, (i > 0 && e.ambient) ? &*e.ambient : nullptr, opts);
      cert.certified = true;
      cert.kind = to_string(c.kind);
      cert.criteria = c.criteria;
      if (i == 0 && c.kind != Certificate::Kind::Sphere) ii[i] = "first ear is not a sphere";
      if (i > 0 && c.kind != Certificate::Kind::Ball) iii[i] = "ear " + std::to_string(i + 1) + " is not a ball";
    } catch (const Error& err) {
      cert.failure = err.what();
      (i == 0 ? ii[i] : iii[i]) = "ear " + std::to_string(i + 1) + ": " + err.what();
    }
  });
  for (std::size_t i = 0; i < ears.size(); ++i) {
    if (!ii[i].empty()) ax2.fail(ii[i]);
    if (!iii[i].empty()) ax3.fail(iii[i]);
  }

  // (iv)
  std::set<Face> previous;
  for (std::size_t i = 0; i < ears.size(); ++i) {
    auto faces = ears[i].complex.faces();
    if (i > 0) {
      SimplicialComplex bd = boundary_complex(ears[i].complex);
      std::set<Face> bfaces = bd.is_void() ? std::set<Face>{} : bd.faces();
      for (auto& f : faces) {
        if (f.empty()) continue;
        bool old = previous.count(f) > 0;
        bool on_boundary = bfaces.count(f) > 0;
        if (old != on_boundary)
          ax4.fail("ear " + std::to_string(i + 1) + " face " + delta.face_name(f) +
                   (old ? " meets earlier ears off the boundary" : " on the boundary but not in earlier ears"));
      }
    }
    previous.insert(faces.begin(), faces.end());
  }
  return rep;
}

inline std::vector<EarView> ear_views(const EarDecomposition& d) {
  std::vector<EarView> out;
  for (auto& e : d.ears) out.push_back({e.complex, e.shelling(), e.ambient_complex()});
  return out;
}

inline CedReport verify_ced(const EarDecomposition& d, CertifyOptions opts = {}) {
  return verify_ced(d.complex, ear_views(d), opts);
}

/// For every chain and every ascent π(m) < π(m+1) at m ∈ S, the chain of the
/// switched word must lie in the same ear. With `ascents = false` the same
/// test is run on descents instead (no such closure is expected there).
inline std::vector<std::string> switch_closure_violations(const EarDecomposition& d, bool ascents = true) {
  std::vector<std::string> out;
  std::vector<int> q_of_p;
  for (std::size_t ei = 0; ei < d.ears.size(); ++ei) {
    const Ear& e = d.ears[ei];
    const BooleanFrame& f = d.frames.at(e.provenance.frame - 1);
    if (q_of_p.empty()) {
      int n = 0;
      for (int i = 0; i < d.poset.size(); ++i) n = std::max(n, d.poset.origin(i) + 1);
      for (int x : f.element) n = std::max(n, x + 1);
      q_of_p.assign(n, -1);
      for (int i = 0; i < d.poset.size(); ++i) q_of_p[d.poset.origin(i)] = i;
    }
    std::set<Face> members(e.chains.begin(), e.chains.end());
    for (auto& pi : e.words)
      for (int m : d.ranks) {
        if (m >= d.r) continue;
        bool asc = pi[m - 1] < pi[m];
        if (asc != ascents) continue;
        auto sw = pi;
        std::swap(sw[m - 1], sw[m]);
        if (static_cast<int>(q_of_p.size()) < static_cast<int>(f.element.size())) q_of_p.resize(f.element.size(), -1);
        Face c = detail::chain_of(f, sw, d.ranks, q_of_p);
        if (!members.count(c)) {
          std::string w;
          for (int v : pi) w += std::to_string(v);
          out.push_back("ear " + std::to_string(ei + 1) + " word " + w + " position " + std::to_string(m));
        }
      }
  }
  return out;
}

/// Thm 2.7-style checks on an h-vector of a (d−1)-dimensional complex:
/// h_i <= h_{d−i} and h_i <= h_{i+1} for i < d/2. Returns failing descriptions.
inline std::vector<std::string> h_inequality_failures(const std::vector<long long>& h) {
  std::vector<std::string> out;
  const int d = static_cast<int>(h.size()) - 1;
  for (int i = 0; 2 * i < d; ++i) {
    if (h[i] > h[d - i]) out.push_back("h_" + std::to_string(i) + " > h_" + std::to_string(d - i));
    if (h[i] > h[i + 1]) out.push_back("h_" + std::to_string(i) + " > h_" + std::to_string(i + 1));
  }
  return out;
}

/// Colors of the decomposed complex's vertices: their selected rank 1..|S|.
inline std::vector<int> rank_colors(const EarDecomposition& d) {
  std::vector<int> out(d.poset.size());
  for (int i = 0; i < d.poset.size(); ++i) out[i] = d.poset.rank(i);
  return out;
}

}  // namespace earlab
