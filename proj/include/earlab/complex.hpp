#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "earlab/error.hpp"
#include "earlab/homology.hpp"
#include "earlab/parallel.hpp"
#include "earlab/poset.hpp"

namespace earlab {

/// A face is a sorted list of vertex indices.
using Face = std::vector<int>;

inline bool is_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_minus(const Face& f, int v) {
  Face out;
  out.reserve(f.size());
  for (int x : f)
    if (x != v) out.push_back(x);
  return out;
}

/// Finite abstract simplicial complex given by its facets.
///
/// A complex with no facets is the void complex (no faces at all); the
/// complex whose only face is the empty set has the single facet {}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Faces in `generators` that lie inside another generator are dropped;
  /// surviving facets keep their first-occurrence order.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> generators)
      : vertices_(std::move(vertices)) {
    for (auto& g : generators) {
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      for (int v : g)
        if (v < 0 || v >= static_cast<int>(vertices_.size()))
          throw Error(ErrorKind::Inconsistent, "facet references vertex " + std::to_string(v));
    }
    std::vector<std::size_t> order(generators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return generators[a].size() > generators[b].size();
    });
    std::vector<char> keep(generators.size(), 0);
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
      bool covered = false;
      for (std::size_t j : kept)
        if (is_subset(generators[i], generators[j])) {
          covered = true;
          break;
        }
      if (!covered) {
        keep[i] = 1;
        kept.push_back(i);
      }
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (keep[i]) facets_.push_back(std::move(generators[i]));
  }

  static SimplicialComplex empty_face(std::vector<std::string> vertices = {}) {
    return SimplicialComplex(std::move(vertices), {Face{}});
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool is_void() const { return facets_.empty(); }

  /// Dimension; -1 for {{}} and -2 for the void complex.
  int dim() const {
    int d = -2;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  bool is_pure() const {
    for (const auto& f : facets_)
      if (f.size() != facets_.front().size()) return false;
    return true;
  }

  bool contains(const Face& face) const {
    for (const auto& f : facets_)
      if (is_subset(face, f)) return true;
    return false;
  }

  /// Every face, including the empty face for a non-void complex.
  std::set<Face> faces() const {
    std::set<Face> out;
    for (const auto& f : facets_) {
      const std::size_t k = f.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Face g;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) g.push_back(f[i]);
        out.insert(std::move(g));
      }
    }
    return out;
  }

  std::vector<std::vector<Face>> faces_by_size() const {
    std::vector<std::vector<Face>> out(std::max(dim() + 2, 0));
    for (auto& f : faces()) out[f.size()].push_back(f);
    return out;
  }

  std::optional<int> vertex_index(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
      if (vertices_[i] == name) return i;
    return std::nullopt;
  }

  std::string face_name(const Face& f) const {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += ",";
      s += vertices_.at(f[i]);
    }
    return s + "}";
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Face> facets_;
};

/// Same vertex names and same facet set (order of facets ignored).
inline bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices() != b.vertices()) return false;
  std::set<Face> fa(a.facets().begin(), a.facets().end());
  std::set<Face> fb(b.facets().begin(), b.facets().end());
  return fa == fb;
}

inline SimplicialComplex link(const SimplicialComplex& c, const Face& face) {
  std::vector<Face> gens;
  for (const auto& f : c.facets())
    if (is_subset(face, f)) {
      Face g;
      std::set_difference(f.begin(), f.end(), face.begin(), face.end(), std::back_inserter(g));
      gens.push_back(std::move(g));
    }
  return SimplicialComplex(c.vertices(), std::move(gens));
}

/// Faces not containing v.
inline SimplicialComplex deletion(const SimplicialComplex& c, int v) {
  std::vector<Face> gens;
  for (const auto& f : c.facets()) gens.push_back(face_minus(f, v));
  return SimplicialComplex(c.vertices(), std::move(gens));
}

/// Faces with at most k+1 vertices.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  std::vector<Face> gens;
  for (auto& f : c.faces())
    if (static_cast<int>(f.size()) <= k + 1) gens.push_back(f);
  return SimplicialComplex(c.vertices(), std::move(gens));
}

/// Subcomplex generated by the listed facets (indices into c.facets()).
inline SimplicialComplex subcomplex(const SimplicialComplex& c, const std::vector<int>& facet_ids) {
  std::vector<Face> gens;
  for (int i : facet_ids) gens.push_back(c.facets().at(i));
  return SimplicialComplex(c.vertices(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Order complexes and face posets

/// Faces are the chains of p. Bounds are not removed here; see proper_part().
inline SimplicialComplex order_complex(const Poset& p) {
  if (p.size() == 0) return SimplicialComplex::empty_face();
  std::vector<Face> gens;
  for (auto& ch : maximal_chains(p)) {
    Face f = ch.elements;
    std::sort(f.begin(), f.end());
    gens.push_back(std::move(f));
  }
  return SimplicialComplex(p.names(), std::move(gens));
}

/// Poset of faces under inclusion, rank = number of vertices. Faces are
/// indexed by (size, lexicographic vertex list); names are "{a,b}".
inline Poset face_poset(const SimplicialComplex& c, bool include_empty) {
  std::vector<Face> faces;
  for (auto& f : c.faces())
    if (include_empty || !f.empty()) faces.push_back(f);
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Face& a, const Face& b) { return a.size() < b.size(); });
  const int n = static_cast<int>(faces.size());
  std::map<Face, int> index;
  std::vector<std::string> names;
  std::vector<int> ranks;
  for (int i = 0; i < n; ++i) {
    index.emplace(faces[i], i);
    names.push_back(c.face_name(faces[i]));
    ranks.push_back(static_cast<int>(faces[i].size()));
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (faces[i].size() <= faces[j].size() && is_subset(faces[i], faces[j]))
        leq[static_cast<std::size_t>(i) * n + j] = 1;
  std::vector<std::pair<int, int>> covers;
  for (int j = 0; j < n; ++j)
    for (int v : faces[j]) {
      auto it = index.find(face_minus(faces[j], v));
      if (it != index.end()) covers.emplace_back(it->second, j);
    }
  return Poset::from_order_and_covers(std::move(names), std::move(leq), std::move(ranks), covers);
}

// ---------------------------------------------------------------------------
// f- and h-vectors

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct FHVectors {
  std::vector<long long> f;  ///< f[i] = number of faces with i vertices; f[0] = 1
  std::vector<long long> h;
  long long reduced_euler = 0;
};

/// h is read off sum f_i (x-1)^(d-i) = sum h_i x^(d-i); the top entry is
/// checked against the reduced Euler characteristic.
inline FHVectors f_h_vectors(const SimplicialComplex& c) {
  if (!c.is_pure()) throw Error(ErrorKind::NotPure, "f/h-vectors need a pure complex");
  if (c.is_void()) return {};
  const int d = c.dim() + 1;
  FHVectors out;
  out.f.assign(d + 1, 0);
  for (auto& face : c.faces()) ++out.f[face.size()];
  out.h.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i)
      out.h[k] += ((k - i) % 2 ? -1 : 1) * binomial(d - i, k - i) * out.f[i];
  for (int i = 0; i <= d; ++i) out.reduced_euler += ((i - 1) % 2 ? -1 : 1) * out.f[i];
  long long expect = ((d + 1) % 2 ? -1 : 1) * out.reduced_euler;
  if (out.h[d] != expect)
    throw Error(ErrorKind::Inconsistent, "h_d disagrees with the reduced Euler characteristic");
  return out;
}

// ---------------------------------------------------------------------------
// Shellings

struct ShellingOrder {
  std::vector<int> order;         ///< facet indices in shelling order
  std::vector<Face> restrictions; ///< restriction face of order[k]
};

/// Checks the pairwise criterion: for i < j there is k < j with
/// F_i ∩ F_j ⊆ F_k ∩ F_j and |F_k \ F_j| = 1. Equivalently F_j \ F_i must meet
/// the set of vertices v with F_j - v inside an earlier facet, and that set is
/// the restriction face.
inline ShellingOrder verify_shelling(const SimplicialComplex& c, const std::vector<int>& order) {
  if (!c.is_pure()) throw Error(ErrorKind::NotPure, "shellings are defined for pure complexes");
  const std::size_t t = c.facet_count();
  if (order.size() != t) throw Error(ErrorKind::BadParams, "order is not a permutation of the facets");
  std::vector<char> seen(t, 0);
  for (int i : order) {
    if (i < 0 || static_cast<std::size_t>(i) >= t || seen[i])
      throw Error(ErrorKind::BadParams, "order is not a permutation of the facets");
    seen[i] = 1;
  }
  ShellingOrder out;
  out.order = order;
  out.restrictions.resize(t);
  for (std::size_t j = 1; j < t; ++j) {
    const Face& fj = c.facets()[order[j]];
    Face restriction;
    for (int v : fj) {
      Face ridge = face_minus(fj, v);
      for (std::size_t k = 0; k < j; ++k)
        if (is_subset(ridge, c.facets()[order[k]])) {
          restriction.push_back(v);
          break;
        }
    }
    for (std::size_t i = 0; i < j; ++i) {
      const Face& fi = c.facets()[order[i]];
      bool ok = false;
      for (int v : restriction)
        if (!std::binary_search(fi.begin(), fi.end(), v)) {
          ok = true;
          break;
        }
      if (!ok)
        throw NotShellingError(i, j, "facets " + c.face_name(fi) + " (position " + std::to_string(i) +
                                         ") and " + c.face_name(fj) + " (position " +
                                         std::to_string(j) + ") violate the shelling condition");
    }
    out.restrictions[j] = std::move(restriction);
  }
  return out;
}

/// h_i = number of facets whose restriction face has i vertices.
inline std::vector<long long> h_from_shelling(const SimplicialComplex& c, const ShellingOrder& s) {
  const int d = c.dim() + 1;
  std::vector<long long> h(std::max(d + 1, 1), 0);
  for (auto& r : s.restrictions) ++h.at(r.size());
  return h;
}

/// Exhaustive backtracking search; gives up (nullopt) above `max_facets`.
inline std::optional<std::vector<int>> search_shelling(const SimplicialComplex& c,
                                                       std::size_t max_facets = 14) {
  if (!c.is_pure() || c.facet_count() > max_facets) return std::nullopt;
  const std::size_t t = c.facet_count();
  std::vector<int> order;
  std::vector<char> used(t, 0);
  auto extends = [&](int j) {
    if (order.empty()) return true;
    const Face& fj = c.facets()[j];
    Face restriction;
    for (int v : fj) {
      Face ridge = face_minus(fj, v);
      for (int k : order)
        if (is_subset(ridge, c.facets()[k])) {
          restriction.push_back(v);
          break;
        }
    }
    for (int i : order) {
      const Face& fi = c.facets()[i];
      bool ok = false;
      for (int v : restriction)
        if (!std::binary_search(fi.begin(), fi.end(), v)) ok = true;
      if (!ok) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self) -> bool {
    if (order.size() == t) return true;
    for (std::size_t j = 0; j < t; ++j) {
      if (used[j] || !extends(static_cast<int>(j))) continue;
      used[j] = 1;
      order.push_back(static_cast<int>(j));
      if (self(self)) return true;
      order.pop_back();
      used[j] = 0;
    }
    return false;
  };
  if (dfs(dfs)) return order;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Boundary and homology

/// Complex generated by the ridges lying in exactly one facet. A closed
/// pseudomanifold yields the void complex.
inline SimplicialComplex boundary_complex(const SimplicialComplex& c) {
  if (!c.is_pure()) throw Error(ErrorKind::NotPure, "boundary needs a pure complex");
  std::map<Face, int> incidence;
  for (const auto& f : c.facets())
    for (int v : f) ++incidence[face_minus(f, v)];
  std::vector<Face> gens;
  for (auto& [ridge, count] : incidence)
    if (count == 1) gens.push_back(ridge);
  return SimplicialComplex(c.vertices(), std::move(gens));
}

/// Reduced Betti numbers over the rationals, including degree -1.
struct ReducedHomology {
  int dim = -2;
  std::vector<long long> betti;  ///< betti[k + 1] = rank of reduced H_k, k = -1..dim

  long long at(int k) const {
    if (k + 1 < 0 || k + 1 >= static_cast<int>(betti.size())) return 0;
    return betti[k + 1];
  }
  bool acyclic() const {
    for (long long b : betti)
      if (b != 0) return false;
    return true;
  }
};

inline ReducedHomology reduced_homology(const SimplicialComplex& c, std::size_t max_facets = 5000) {
  ReducedHomology out;
  out.dim = c.dim();
  if (c.is_void()) return out;
  if (c.facet_count() > max_facets)
    throw Error(ErrorKind::SizeLimit, "homology facet cap exceeded (" +
                                          std::to_string(c.facet_count()) + " facets)");
  auto by_size = c.faces_by_size();
  const int top = static_cast<int>(by_size.size()) - 1;
  // rank of the boundary map from faces of size s to faces of size s - 1
  std::vector<long long> rank(top + 2, 0);
  for (int s = 1; s <= top; ++s) {
    std::map<Face, int> lower;
    for (std::size_t i = 0; i < by_size[s - 1].size(); ++i) lower.emplace(by_size[s - 1][i], static_cast<int>(i));
    std::vector<SparseRow> rows;
    rows.reserve(by_size[s].size());
    for (const auto& f : by_size[s]) {
      SparseRow row;
      for (std::size_t j = 0; j < f.size(); ++j)
        row[lower.at(face_minus(f, f[j]))] = (j % 2 ? -1 : 1);
      rows.push_back(std::move(row));
    }
    rank[s] = rational_rank(rows);
  }
  out.betti.assign(top + 1, 0);
  for (int s = 0; s <= top; ++s)
    out.betti[s] = static_cast<long long>(by_size[s].size()) - rank[s] - rank[s + 1];
  return out;
}

/// Reduced Betti numbers in degrees 0..dim.
inline std::vector<long long> homology_ranks(const SimplicialComplex& c, std::size_t max_facets = 5000) {
  auto h = reduced_homology(c, max_facets);
  if (h.betti.size() <= 1) return {};
  return std::vector<long long>(h.betti.begin() + 1, h.betti.end());
}

struct CMReport {
  bool cm = false;
  bool two_cm = false;
  std::string witness;  ///< first failing face or vertex, empty when both hold
};

namespace detail {

inline std::optional<Face> cm_failure(const SimplicialComplex& c, std::size_t max_facets) {
  if (c.is_void()) return std::nullopt;
  std::vector<Face> faces;
  for (auto& f : c.faces()) faces.push_back(f);
  std::vector<char> bad(faces.size(), 0);
  parallel_for(faces.size(), [&](std::size_t i) {
    SimplicialComplex lk = link(c, faces[i]);
    const int d = lk.dim();
    if (d <= 0) return;  // only H_{-1} is constrained, and a nonempty link kills it
    auto h = reduced_homology(lk, max_facets);
    for (int k = -1; k < d; ++k)
      if (h.at(k) != 0) {
        bad[i] = 1;
        return;
      }
  });
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (bad[i]) return faces[i];
  return std::nullopt;
}

}  // namespace detail

inline bool is_cm(const SimplicialComplex& c, std::size_t max_facets = 5000) {
  return !detail::cm_failure(c, max_facets).has_value();
}

/// Cohen–Macaulay via vanishing link homology below the top degree (every
/// face, the empty face included); 2-CM adds that deleting any vertex keeps
/// the dimension and the CM property.
inline CMReport is_cm_and_2cm(const SimplicialComplex& c, std::size_t max_facets = 5000) {
  CMReport out;
  if (auto bad = detail::cm_failure(c, max_facets)) {
    out.witness = "link of face " + c.face_name(*bad);
    return out;
  }
  out.cm = true;
  std::set<int> used;
  for (const auto& f : c.facets()) used.insert(f.begin(), f.end());
  for (int v : used) {
    SimplicialComplex del = deletion(c, v);
    if (del.dim() != c.dim() || !is_cm(del, max_facets)) {
      out.witness = "deletion of vertex " + c.vertices()[v];
      return out;
    }
  }
  out.two_cm = true;
  return out;
}

// ---------------------------------------------------------------------------
// Sphere and ball certificates

struct Certificate {
  enum class Kind { Sphere, Ball };
  Kind kind = Kind::Sphere;
  int dim = -1;
  std::vector<std::string> criteria;
  ReducedHomology homology;
  std::optional<ShellingOrder> shelling;
  std::vector<std::string> assumptions;
};

inline std::string to_string(Certificate::Kind k) { return k == Certificate::Kind::Sphere ? "SPHERE" : "BALL"; }

struct CertifyOptions {
  std::size_t search_limit = 14;  ///< facet count below which a shelling is searched for
  std::size_t max_facets = 5000;  ///< homology cap
};

namespace detail {

/// Maps faces of `c` into the vertex numbering of `target` by vertex name.
inline std::optional<std::vector<int>> vertex_map(const SimplicialComplex& c,
                                                  const SimplicialComplex& target) {
  std::vector<int> map(c.vertex_count(), -1);
  if (c.vertices() == target.vertices()) {
    for (int i = 0; i < c.vertex_count(); ++i) map[i] = i;
    return map;
  }
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < target.vertex_count(); ++i) idx.emplace(target.vertices()[i], i);
  for (int i = 0; i < c.vertex_count(); ++i) {
    auto it = idx.find(c.vertices()[i]);
    if (it != idx.end()) map[i] = it->second;
  }
  return map;
}

inline Face translate(const Face& f, const std::vector<int>& map) {
  Face out;
  for (int v : f) out.push_back(map[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// True when every facet of `part` is a facet of `whole` (matched by vertex name).
inline bool facets_within(const SimplicialComplex& part, const SimplicialComplex& whole) {
  auto map = detail::vertex_map(part, whole);
  std::set<Face> wf(whole.facets().begin(), whole.facets().end());
  for (const auto& f : part.facets()) {
    for (int v : f)
      if ((*map)[v] < 0) return false;
    if (!wf.count(detail::translate(f, *map))) return false;
  }
  return true;
}

/// SPHERE: closed pseudomanifold with the homology of a sphere (dimension 0:
/// exactly two points; dimension -1: the complex {{}}).
/// BALL: certified shelling, acyclic, boundary certified SPHERE, and either a
/// full-dimensional proper subcomplex of a certified sphere (Danaraj–Klee) or,
/// with no ambient sphere, a shellable pseudomanifold with nonempty boundary.
inline Certificate certify_sphere_or_ball(const SimplicialComplex& c,
                                          const std::optional<std::vector<int>>& shelling = std::nullopt,
                                          const SimplicialComplex* ambient = nullptr,
                                          CertifyOptions opts = {}) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::NotCertified, why); };
  if (c.is_void()) fail("void complex");
  if (!c.is_pure()) fail("not pure");
  Certificate cert;
  cert.dim = c.dim();
  if (cert.dim == -1) {
    cert.kind = Certificate::Kind::Sphere;
    cert.criteria.push_back("empty-face complex is the (-1)-sphere");
    cert.homology = reduced_homology(c, opts.max_facets);
    return cert;
  }
  std::map<Face, int> incidence;
  for (const auto& f : c.facets())
    for (int v : f) ++incidence[face_minus(f, v)];
  bool closed = true;
  for (auto& [ridge, count] : incidence) {
    if (count > 2) fail("ridge " + c.face_name(ridge) + " lies in more than two facets");
    if (count != 2) closed = false;
  }
  cert.homology = reduced_homology(c, opts.max_facets);

  if (closed) {
    cert.kind = Certificate::Kind::Sphere;
    if (cert.dim == 0) {
      if (c.facet_count() != 2) fail("0-sphere must have exactly two points");
      cert.criteria.push_back("two points");
      return cert;
    }
    cert.criteria.push_back("closed pseudomanifold");
    for (int k = -1; k < cert.dim; ++k)
      if (cert.homology.at(k) != 0) fail("reduced homology nonzero in degree " + std::to_string(k));
    if (cert.homology.at(cert.dim) != 1) fail("top reduced homology is not rank 1");
    cert.criteria.push_back("sphere homology");
    cert.criteria.push_back("empty boundary");
    return cert;
  }

  cert.kind = Certificate::Kind::Ball;
  if (cert.dim == 0) {
    if (c.facet_count() != 1) fail("0-ball must be a single point");
    cert.criteria.push_back("single point");
    cert.shelling = verify_shelling(c, {0});
    return cert;
  }
  std::optional<std::vector<int>> order = shelling;
  if (!order) {
    order = search_shelling(c, opts.search_limit);
    if (!order) fail("no shelling supplied and none found within the search limit");
    cert.criteria.push_back("shelling found by search");
  }
  try {
    cert.shelling = verify_shelling(c, *order);
  } catch (const Error& e) {
    fail(std::string("shelling rejected: ") + e.what());
  }
  cert.criteria.push_back("certified shelling");
  if (!cert.homology.acyclic()) fail("reduced homology is not zero");
  cert.criteria.push_back("acyclic");
  SimplicialComplex bd = boundary_complex(c);
  try {
    auto bc = certify_sphere_or_ball(bd, std::nullopt, nullptr, opts);
    if (bc.kind != Certificate::Kind::Sphere) fail("boundary is not a sphere");
  } catch (const Error& e) {
    fail(std::string("boundary not certified: ") + e.what());
  }
  cert.criteria.push_back("boundary certified SPHERE");
  if (ambient) {
    Certificate amb;
    try {
      amb = certify_sphere_or_ball(*ambient, std::nullopt, nullptr, opts);
    } catch (const Error& e) {
      fail(std::string("ambient not certified: ") + e.what());
    }
    if (amb.kind != Certificate::Kind::Sphere) fail("ambient is not a sphere");
    if (ambient->dim() != c.dim()) fail("not full-dimensional in the ambient sphere");
    if (!facets_within(c, *ambient)) fail("not a subcomplex of the ambient sphere");
    if (c.facet_count() >= ambient->facet_count()) fail("not a proper subcomplex of the ambient sphere");
    cert.criteria.push_back("Danaraj-Klee: shellable full-dimensional proper subcomplex of a sphere");
    cert.assumptions.push_back("ambient sphere taken as polytopal (combinatorial check only)");
  } else {
    cert.criteria.push_back("shellable pseudomanifold with nonempty boundary");
  }
  return cert;
}

}  // namespace earlab
