#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace earlab;

TEST(Lattice, JoinAndMeetMatchBoundsByDefinition) {
  for (auto l : {boolean_lattice(3), boolean_lattice(4), partition_lattice(4), lattice_of_flats(fx::k4())}) {
    const Poset& p = l.poset();
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) {
        ASSERT_EQ(l.join(x, y), oracle::join_by_bounds(p, x, y));
        ASSERT_EQ(l.meet(x, y), oracle::meet_by_bounds(p, x, y));
      }
  }
}

TEST(Lattice, FromPosetRecomputesTables) {
  auto b = boolean_lattice(3);
  auto again = Lattice::from_poset(b.poset());
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) EXPECT_EQ(again.join(x, y), b.join(x, y));
}

TEST(Lattice, RejectsNonLattices) {
  // two incomparable tops
  Poset v = build_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  EXPECT_ERROR_KIND(Lattice::from_poset(v), ErrorKind::NotALattice);
  // bowtie: a, b both below c and d
  Poset bow = build_poset({"0", "a", "b", "c", "d", "1"},
                          {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
  EXPECT_ERROR_KIND(Lattice::from_poset(bow), ErrorKind::NotALattice);
}

TEST(Lattice, FamilySizes) {
  EXPECT_EQ(boolean_lattice(4).size(), 16);
  EXPECT_EQ(partition_lattice(3).size(), 5);
  EXPECT_EQ(partition_lattice(4).size(), 15);
  EXPECT_EQ(partition_lattice(5).size(), 52);
  EXPECT_EQ(chain_lattice(3).size(), 4);
  EXPECT_EQ(boolean_lattice(4).rank(), 4);
  EXPECT_EQ(partition_lattice(5).rank(), 4);
  EXPECT_ERROR_KIND(boolean_lattice(0), ErrorKind::BadParams);
  EXPECT_ERROR_KIND(partition_lattice(9), ErrorKind::SizeLimit);
}

TEST(Lattice, Distributivity) {
  EXPECT_TRUE(is_distributive(boolean_lattice(3)));
  EXPECT_TRUE(is_distributive(chain_lattice(4)));
  EXPECT_FALSE(is_distributive(partition_lattice(3)));
}

TEST(Lattice, SublatticeOfTwoMaximalChainsInPi4) {
  auto l = partition_lattice(4);
  auto m = partition_mchain(l, 4);
  auto lambda = fx::partition_labeling(l, 4);
  auto id = increasing_and_decreasing_chains(l.poset(), lambda, l.bottom(), l.top());
  ASSERT_EQ(id.decreasing.size(), 6u);
  for (auto& d : id.decreasing) {
    Lattice sub = sublattice_generated(l, {m.elements, d.elements});
    EXPECT_EQ(sub.size(), 8);
    EXPECT_TRUE(is_distributive(sub));
  }
}
