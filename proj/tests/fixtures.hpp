#pragma once

#include <string>
#include <utility>
#include <vector>

#include "earlab/earlab.hpp"

namespace fx {

using earlab::Face;
using earlab::Matroid;
using earlab::SimplicialComplex;

inline std::vector<std::string> numbered(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

inline SimplicialComplex simplex(int n) {
  Face f;
  for (int i = 0; i < n; ++i) f.push_back(i);
  return SimplicialComplex(numbered(n), {f});
}

inline SimplicialComplex cycle(int n) {
  std::vector<Face> f;
  for (int i = 0; i < n; ++i) {
    Face e{i, (i + 1) % n};
    std::sort(e.begin(), e.end());
    f.push_back(e);
  }
  return SimplicialComplex(numbered(n), f);
}

inline SimplicialComplex triangle() { return simplex(3); }
inline SimplicialComplex two_triangles() { return SimplicialComplex(numbered(4), {{0, 1, 2}, {1, 2, 3}}); }
inline SimplicialComplex bowtie() { return SimplicialComplex(numbered(5), {{0, 1, 2}, {2, 3, 4}}); }
inline SimplicialComplex hexagon() { return cycle(6); }
inline SimplicialComplex path(int edges) {
  std::vector<Face> f;
  for (int i = 0; i < edges; ++i) f.push_back({i, i + 1});
  return SimplicialComplex(numbered(edges + 1), f);
}
inline SimplicialComplex tetra_boundary() {
  return SimplicialComplex(numbered(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}
inline SimplicialComplex fan() { return SimplicialComplex(numbered(5), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}); }

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

/// Shellable, pure, desk-scale.
inline std::vector<NamedComplex> shellable_complexes() {
  return {{"triangle", triangle()},   {"two-triangles", two_triangles()},
          {"hexagon", hexagon()},     {"path3", path(3)},                 {"tetra-boundary", tetra_boundary()},
          {"simplex3", simplex(4)},   {"fan", fan()}};
}

inline Matroid uniform(int k, int n) {
  std::vector<earlab::AtomSet> bases;
  for (earlab::AtomSet s = 0; s < (earlab::AtomSet{1} << n); ++s)
    if (std::popcount(s) == k) bases.push_back(s);
  return Matroid::from_bases(numbered(n), bases);
}

/// Two triangles glued along an edge: 4 vertices, 5 edges.
inline Matroid two_triangle_graph() { return Matroid::from_graph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}}); }
inline Matroid k4() { return Matroid::from_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

inline std::vector<NamedMatroid> matroids() {
  return {{"U23", uniform(2, 3)}, {"U24", uniform(2, 4)}, {"U34", uniform(3, 4)}, {"two-triangle", two_triangle_graph()}};
}

inline earlab::EdgeLabeling partition_labeling(const earlab::Lattice& l, int n) {
  return earlab::derive_sn_labeling(l, earlab::partition_mchain(l, n));
}

}  // namespace fx

#define EXPECT_ERROR_KIND(stmt, k)                                  \
  do {                                                              \
    try {                                                           \
      stmt;                                                         \
      ADD_FAILURE() << "expected " << earlab::to_string(k);         \
    } catch (const earlab::Error& e) {                              \
      EXPECT_EQ(earlab::to_string(e.kind()), earlab::to_string(k)); \
    }                                                               \
  } while (0)
