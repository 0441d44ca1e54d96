#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace earlab;

namespace {

// six-vertex real projective plane
SimplicialComplex rp2() {
  return SimplicialComplex(fx::numbered(6), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                             {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

}  // namespace

TEST(Complex, FacetsAreMaximalAndSorted) {
  SimplicialComplex c(fx::numbered(4), {{2, 1, 0}, {0, 1}, {3}});
  ASSERT_EQ(c.facet_count(), 2u);
  EXPECT_EQ(c.facets()[0], (Face{0, 1, 2}));
  EXPECT_FALSE(c.is_pure());
  EXPECT_ERROR_KIND(SimplicialComplex(fx::numbered(2), {{0, 5}}), ErrorKind::Inconsistent);
  EXPECT_ERROR_KIND(f_h_vectors(c), ErrorKind::NotPure);
}

TEST(Complex, FHVectorsMatchOracle) {
  for (auto& [name, c] : fx::shellable_complexes()) {
    auto fh = f_h_vectors(c);
    EXPECT_EQ(fh.f, oracle::complex_f_vector(c)) << name;
    EXPECT_EQ(fh.h, oracle::h_from_f(fh.f)) << name;
  }
  EXPECT_EQ(f_h_vectors(fx::hexagon()).h, (std::vector<long long>{1, 4, 1}));
  EXPECT_EQ(f_h_vectors(fx::two_triangles()).h, (std::vector<long long>{1, 1, 0, 0}));
  EXPECT_EQ(f_h_vectors(fx::tetra_boundary()).h, (std::vector<long long>{1, 1, 1, 1}));
}

TEST(Complex, ShellingRestrictionsMatchDefinition) {
  for (auto& [name, c] : fx::shellable_complexes()) {
    auto order = search_shelling(c);
    ASSERT_TRUE(order) << name;
    EXPECT_TRUE(oracle::is_shelling_by_definition(c, *order)) << name;
    auto sh = verify_shelling(c, *order);
    EXPECT_EQ(sh.restrictions, oracle::restriction_faces(c, *order)) << name;
    EXPECT_EQ(h_from_shelling(c, sh), f_h_vectors(c).h) << name;
  }
}

TEST(Complex, NonShellingsAreRejected) {
  EXPECT_FALSE(search_shelling(fx::bowtie()).has_value());
  EXPECT_FALSE(oracle::is_shelling_by_definition(fx::bowtie(), {0, 1}));
  EXPECT_ERROR_KIND(verify_shelling(fx::bowtie(), {0, 1}), ErrorKind::NotShelling);
  // path 1-2-3-4 listed with the two ends first
  EXPECT_ERROR_KIND(verify_shelling(fx::path(3), {0, 2, 1}), ErrorKind::NotShelling);
  EXPECT_FALSE(oracle::is_shelling_by_definition(fx::path(3), {0, 2, 1}));
  EXPECT_ERROR_KIND(verify_shelling(fx::path(3), {0, 0, 1}), ErrorKind::BadParams);
}

TEST(Complex, ReducedHomology) {
  EXPECT_EQ(reduced_homology(fx::hexagon()).at(1), 1);
  EXPECT_EQ(reduced_homology(fx::hexagon()).at(0), 0);
  EXPECT_EQ(reduced_homology(fx::tetra_boundary()).at(2), 1);
  EXPECT_TRUE(reduced_homology(fx::two_triangles()).acyclic());
  EXPECT_TRUE(reduced_homology(rp2()).acyclic());  // rationally
  SimplicialComplex two_points(fx::numbered(2), {{0}, {1}});
  EXPECT_EQ(reduced_homology(two_points).at(0), 1);
  auto pi4 = order_complex(proper_part(partition_lattice(4).poset()));
  EXPECT_EQ(homology_ranks(pi4), (std::vector<long long>{0, 6}));
}

TEST(Complex, HomologyEulerCharacteristic) {
  for (auto& [name, c] : fx::shellable_complexes()) {
    auto fh = f_h_vectors(c);
    auto h = reduced_homology(c);
    long long alt = 0;
    for (int k = -1; k <= c.dim(); ++k) alt += (k % 2 ? -1 : 1) * h.at(k);
    EXPECT_EQ(alt, fh.reduced_euler) << name;
  }
}

TEST(Complex, BoundaryComplex) {
  auto b = boundary_complex(fx::two_triangles());
  EXPECT_EQ(b.facet_count(), 4u);
  EXPECT_TRUE(boundary_complex(fx::tetra_boundary()).is_void());
  auto pb = boundary_complex(fx::path(3));
  EXPECT_EQ(pb.facets(), (std::vector<Face>{{0}, {3}}));
}

TEST(Complex, LinkDeletionSkeleton) {
  auto t = fx::tetra_boundary();
  EXPECT_EQ(link(t, {0}).facet_count(), 3u);
  EXPECT_EQ(deletion(t, 0).facet_count(), 1u);
  EXPECT_EQ(skeleton(t, 1).facet_count(), 6u);
}

TEST(Complex, CohenMacaulay) {
  auto two = is_cm_and_2cm(fx::two_triangles());
  EXPECT_TRUE(two.cm);
  EXPECT_FALSE(two.two_cm);
  EXPECT_FALSE(is_cm(fx::bowtie()));
  auto sphere = is_cm_and_2cm(fx::tetra_boundary());
  EXPECT_TRUE(sphere.cm && sphere.two_cm);
  EXPECT_TRUE(is_cm(rp2()));  // over Q
  EXPECT_TRUE(is_cm_and_2cm(fx::hexagon()).two_cm);
}

TEST(Complex, SphereAndBallCertificates) {
  auto tri = certify_sphere_or_ball(fx::triangle());
  EXPECT_EQ(tri.kind, Certificate::Kind::Ball);
  EXPECT_EQ(certify_sphere_or_ball(fx::hexagon()).kind, Certificate::Kind::Sphere);
  EXPECT_EQ(certify_sphere_or_ball(fx::tetra_boundary()).kind, Certificate::Kind::Sphere);
  EXPECT_EQ(certify_sphere_or_ball(fx::path(3), std::vector<int>{0, 1, 2}).kind, Certificate::Kind::Ball);
  EXPECT_ERROR_KIND(certify_sphere_or_ball(fx::bowtie()), ErrorKind::NotCertified);
  EXPECT_ERROR_KIND(certify_sphere_or_ball(rp2()), ErrorKind::NotCertified);
  // a ball inside an ambient sphere: one facet of the tetrahedron boundary removed
  SimplicialComplex three(fx::numbered(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  auto tb = fx::tetra_boundary();
  auto c = certify_sphere_or_ball(three, std::vector<int>{0, 1, 2}, &tb);
  EXPECT_EQ(c.kind, Certificate::Kind::Ball);
}

TEST(Complex, FacePosetRanksAreFaceSizes) {
  auto p = face_poset(fx::two_triangles(), true);
  EXPECT_EQ(p.size(), 1 + 4 + 5 + 2);
  EXPECT_EQ(p.rank(*p.bottom()), 0);
  for (int x = 0; x < p.size(); ++x) EXPECT_LE(p.rank(x), 3);
  auto q = face_poset(fx::two_triangles(), false);
  EXPECT_EQ(q.size(), 11);
  EXPECT_FALSE(q.bottom().has_value());
}

TEST(Complex, OrderComplexOfFacePosetIsSubdivision) {
  // barycentric subdivision keeps homology
  auto sd = order_complex(face_poset(fx::hexagon(), false));
  EXPECT_EQ(sd.facet_count(), 12u);
  EXPECT_EQ(reduced_homology(sd).at(1), 1);
}
