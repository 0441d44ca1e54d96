#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "earlab/io.hpp"
#include "fixtures.hpp"

using namespace earlab;

namespace {

std::vector<std::pair<std::string, std::string>> named_covers(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [lo, hi] : p.cover_pairs()) out.emplace_back(p.name(lo), p.name(hi));
  std::sort(out.begin(), out.end());
  return out;
}

std::string temp_path(const char* name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Io, PosetRoundTripKeepsIndexing) {
  auto p = partition_lattice(4);
  auto l = fx::partition_labeling(p, 4);
  auto m = partition_mchain(p, 4);
  Json j = lattice_to_json(p, &l, &m);
  auto in = poset_from_json(j);
  EXPECT_EQ(in.poset.names(), p.poset().names());
  EXPECT_EQ(named_covers(in.poset), named_covers(p.poset()));
  ASSERT_TRUE(in.labels.has_value());
  for (auto [lo, hi] : p.poset().cover_pairs()) EXPECT_EQ((*in.labels)(lo, hi), l(lo, hi));
  ASSERT_TRUE(in.mchain.has_value());
  EXPECT_EQ(in.mchain->elements, m.elements);
  EXPECT_EQ(poset_to_json(in.poset, &*in.labels).dump(), poset_to_json(p.poset(), &l).dump());
}

TEST(Io, PosetSchemaErrors) {
  EXPECT_ERROR_KIND(poset_from_json(Json::parse(R"({"covers": []})")), ErrorKind::Schema);
  EXPECT_ERROR_KIND(poset_from_json(Json::parse(R"({"elements": ["a","b"], "covers": [["a"]]})")), ErrorKind::Schema);
  EXPECT_ERROR_KIND(poset_from_json(Json::parse(R"({"elements": ["a","b"], "covers": [["a","b"]], "labels": [["a","b"]]})")),
                    ErrorKind::Schema);
  EXPECT_ERROR_KIND(
      poset_from_json(Json::parse(R"({"elements": ["a","b"], "covers": [["a","b"]], "labels": [["a","b","x"]]})")),
      ErrorKind::Schema);
  EXPECT_ERROR_KIND(poset_from_json(Json::parse(R"({"elements": ["a","b"], "covers": [["a","c"]]})")),
                    ErrorKind::DanglingCover);
  EXPECT_ERROR_KIND(poset_from_json(Json::parse(R"({"elements": ["a","b","c"], "covers": [["a","b"],["b","c"]], "labels": [["a","c",1]]})")),
                    ErrorKind::Schema);
  EXPECT_ERROR_KIND(poset_from_json(Json::parse(R"({"elements": 3, "covers": []})")), ErrorKind::Schema);
}

TEST(Io, MatroidRoundTrip) {
  for (auto& [name, m] : fx::matroids()) {
    auto back = matroid_from_json(matroid_to_json(m));
    EXPECT_EQ(back.ground(), m.ground()) << name;
    EXPECT_EQ(back.bases(), m.bases()) << name;
  }
  auto g = matroid_from_json(Json::parse(R"({"graph": {"vertices": 4, "edges": [[0,1],[1,2],[0,2],[1,3],[2,3]]}})"));
  EXPECT_EQ(g.bases(), fx::two_triangle_graph().bases());
  auto c = matroid_from_json(Json::parse(R"({"ground": ["a","b","c"], "circuits": [["a","b","c"]]})"));
  EXPECT_EQ(c.rank(), 2);
  EXPECT_ERROR_KIND(matroid_from_json(Json::parse(R"({"ground": ["a"]})")), ErrorKind::Schema);
  EXPECT_ERROR_KIND(matroid_from_json(Json::parse(R"({"ground": ["a"], "bases": [["z"]]})")), ErrorKind::Schema);
}

TEST(Io, ComplexRoundTrip) {
  for (auto& [name, k] : fx::shellable_complexes()) {
    auto back = complex_from_json(complex_to_json(k));
    EXPECT_EQ(back.vertices(), k.vertices()) << name;
    EXPECT_EQ(back.facets(), k.facets()) << name;
  }
  auto k = complex_from_json(Json::parse(R"({"vertices": ["1","2","3"], "facets": [[3,1],[2,3]]})"));
  EXPECT_EQ(k.facet_count(), 2u);
  EXPECT_ERROR_KIND(complex_from_json(Json::parse(R"({"vertices": ["1"]})")), ErrorKind::Schema);
  EXPECT_ERROR_KIND(complex_from_json(Json::parse(R"({"vertices": ["1"], "facets": [["2"]]})")), ErrorKind::Schema);
}

TEST(Io, Files) {
  auto path = temp_path("earlab_io.json");
  Json j = complex_to_json(fx::fan());
  write_json_file(path, j);
  EXPECT_EQ(read_json_file(path), j);
  {
    std::ofstream bad(path);
    bad << "{ not json";
  }
  EXPECT_ERROR_KIND(read_json_file(path), ErrorKind::Schema);
  std::remove(path.c_str());
  EXPECT_ERROR_KIND(read_json_file(path), ErrorKind::Schema);
}

TEST(Io, Digest) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  Json a = Json::parse(R"({"x": 1, "y": 2})");
  Json b = Json::parse(R"({"y": 2, "x": 1})");
  EXPECT_EQ(digest(a), digest(Json::parse(a.dump())));
  EXPECT_NE(digest(a), digest(b));  // ordered: key order is part of the bytes
}

TEST(Io, DecompositionReport) {
  auto d = decompose_rank_selected_boolean(4, {1, 3});
  auto j = decomposition_to_json(d, verify_ced(d));
  EXPECT_EQ(j["construction"], d.construction);
  EXPECT_EQ(j["ranks"], Json::array({1, 3}));
  EXPECT_EQ(j["h"], Json::array({1, 6, 5}));
  EXPECT_EQ(j["ear_count"], 5);
  ASSERT_EQ(j["ears"].size(), 5u);
  EXPECT_EQ(j["ears"][0]["index"], 1);
  EXPECT_TRUE(j["ears"][0].contains("restrictions"));
  EXPECT_EQ(j["ears"][0]["certificate"]["kind"], "SPHERE");
  EXPECT_EQ(j["ears"][1]["certificate"]["kind"], "BALL");
  EXPECT_TRUE(j["verification"]["passed"].get<bool>());
  EXPECT_EQ(j["verification"]["axioms"].size(), 4u);
}
