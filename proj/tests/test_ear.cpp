#include <gtest/gtest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace earlab;

namespace {

std::vector<long long> h_of(const EarDecomposition& d) { return f_h_vectors(d.complex).h; }

EarDecomposition pi4() {
  auto p = partition_lattice(4);
  return decompose_supersolvable(p, fx::partition_labeling(p, 4));
}

std::string word_string(const std::vector<int>& w) {
  std::string s;
  for (int v : w) s += std::to_string(v);
  return s;
}

}  // namespace

TEST(Ear, SupersolvableExamples) {
  auto b3 = boolean_lattice(3);
  auto d = decompose_supersolvable(b3, boolean_labeling(b3));
  EXPECT_EQ(d.ears.size(), 1u);
  EXPECT_EQ(h_of(d), (std::vector<long long>{1, 4, 1}));

  auto p3 = partition_lattice(3);
  auto e = decompose_supersolvable(p3, fx::partition_labeling(p3, 3));
  ASSERT_EQ(e.ears.size(), 2u);
  EXPECT_EQ(e.ears[0].chains.size(), 2u);  // 0-sphere
  EXPECT_EQ(e.ears[1].chains.size(), 1u);  // a point

  auto f = pi4();
  EXPECT_EQ(f.ears.size(), 6u);
  EXPECT_EQ(h_of(f), (std::vector<long long>{1, 11, 6}));
  EXPECT_EQ(f.chain_count(), 18u);
  EXPECT_TRUE(verify_ced(f).passed());
}

TEST(Ear, SupersolvableEarCountIsMobius) {
  for (int n : {3, 4, 5}) {
    auto p = partition_lattice(n);
    auto d = decompose_supersolvable(p, fx::partition_labeling(p, n));
    EXPECT_EQ(static_cast<long long>(d.ears.size()), std::llabs(mobius(p.poset(), p.bottom(), p.top()))) << n;
  }
}

TEST(Ear, SupersolvablePreconditions) {
  auto c = chain_lattice(2);
  EXPECT_ERROR_KIND(decompose_supersolvable(c, derive_sn_labeling(c, {{0, 1, 2}})), ErrorKind::NonzeroMobiusViolated);
  auto p = partition_lattice(4);
  auto l = fx::partition_labeling(p, 4);
  l.set(p.bottom(), p.poset().require_index("12|3|4"), 3);
  EXPECT_ERROR_KIND(decompose_supersolvable(p, l), ErrorKind::LabelingInvalid);
  EXPECT_ERROR_KIND(decompose_rank_selected_supersolvable(p, fx::partition_labeling(p, 4), {3}), ErrorKind::RangeError);
}

TEST(Ear, RankSelectedBooleanExamples) {
  auto d = decompose_rank_selected_boolean(4, {1, 3});
  EXPECT_EQ(d.ears.size(), 5u);
  EXPECT_EQ(h_of(d), (std::vector<long long>{1, 6, 5}));
  EXPECT_TRUE(verify_ced(d).passed());

  auto e = decompose_rank_selected_boolean(3, {1});
  ASSERT_EQ(e.ears.size(), 2u);
  EXPECT_EQ(e.ears[0].provenance.sigma, (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(e.ears[1].provenance.sigma, (std::vector<int>{3, 1, 2}));
  EXPECT_ERROR_KIND(decompose_rank_selected_boolean(3, {}), ErrorKind::EmptySelection);
  EXPECT_ERROR_KIND(decompose_rank_selected_boolean(3, {3}), ErrorKind::RangeError);
}

TEST(Ear, RankSelectedBooleanEarCountIsDescentClassSize) {
  for (int r : {3, 4, 5})
    for (auto& s : corpus::nonempty_subsets(r - 1)) {
      auto d = decompose_rank_selected_boolean(r, s);
      EXPECT_EQ(d.ears.size(), descent_class(rank_set(s), r).size());
    }
}

TEST(Ear, SigmaWordNamesTheEar) {
  for (int r : {3, 4, 5})
    for (auto& s : corpus::nonempty_subsets(r - 1)) {
      auto d = decompose_rank_selected_boolean(r, s);
      std::map<int, std::uint32_t> mask_of;
      const auto& f = d.frames.at(0);
      for (std::uint32_t m = 0; m < f.element.size(); ++m) mask_of[f.element[m]] = m;
      for (auto& ear : d.ears)
        for (auto& chain : ear.chains) {
          std::vector<std::uint32_t> masks;
          for (int q : chain) masks.push_back(mask_of.at(d.poset.origin(q)));
          ASSERT_EQ(sigma_word(masks, s, r), ear.provenance.sigma) << r << " " << corpus::ranks_name(s);
        }
    }
  // a singleton interval gives a two-letter decreasing run: 1,3 ⊂ [4] with chain {2} ⊂ {1,2,4}
  EXPECT_EQ(sigma_word({0b0010, 0b1011}, {1, 3}, 4), (std::vector<int>{2, 1, 4, 3}));
  EXPECT_ERROR_KIND(sigma_word({0b0011}, {1}, 3), ErrorKind::BadParams);
}

TEST(Ear, RankSelectedSupersolvable) {
  auto p = partition_lattice(4);
  auto l = fx::partition_labeling(p, 4);
  auto d = decompose_rank_selected_supersolvable(p, l, {1});
  EXPECT_EQ(d.poset.size(), 6);
  EXPECT_EQ(h_of(d), (std::vector<long long>{1, 5}));
  EXPECT_EQ(d.ears.size(), 5u);
  EXPECT_TRUE(verify_ced(d).passed());
  for (auto& s : corpus::nonempty_subsets(2)) {
    auto e = decompose_rank_selected_supersolvable(p, l, s);
    EXPECT_EQ(static_cast<long long>(e.ears.size()), h_of(e).back()) << corpus::ranks_name(s);
  }
}

TEST(Ear, FacePosetExamples) {
  auto two = fx::two_triangles();
  auto d = decompose_face_poset(two, {0, 1}, {1, 2});
  auto fh = f_h_vectors(d.complex);
  EXPECT_EQ(fh.f, (std::vector<long long>{1, 9, 10}));
  EXPECT_EQ(fh.h, (std::vector<long long>{1, 7, 2}));
  EXPECT_TRUE(verify_ced(d).passed());

  auto e = decompose_face_poset(two, {0, 1}, {2});
  EXPECT_EQ(e.complex.facet_count(), 5u);
  EXPECT_TRUE(verify_ced(e).passed());
}

TEST(Ear, FacePosetTopRankGuard) {
  auto tri = fx::triangle();
  EXPECT_ERROR_KIND(decompose_face_poset(tri, {0}, {2, 3}), ErrorKind::TopRankSelected);
  EXPECT_ERROR_KIND(decompose_face_poset(tri, {0}, {3}), ErrorKind::TopRankSelected);
  EXPECT_ERROR_KIND(decompose_face_poset(tri, {0}, {4}), ErrorKind::RangeError);
  EXPECT_ERROR_KIND(decompose_face_poset(fx::bowtie(), {0, 1}, {1}), ErrorKind::NotShelling);
  // outside the hypotheses the construction still runs when asked to
  auto d = decompose_face_poset(tri, {0}, {2, 3}, {true});
  EXPECT_FALSE(d.notes.empty());
  EXPECT_FALSE(is_cm_and_2cm(d.complex).two_cm);
}

TEST(Ear, FacePosetNewChainsContainTheRestriction) {
  for (auto& [name, k] : fx::shellable_complexes()) {
    const int dd = k.dim() + 1;
    if (dd < 2) continue;
    auto order = *search_shelling(k);
    auto sh = verify_shelling(k, order);
    for (auto& s : corpus::nonempty_subsets(dd - 1)) {
      auto d = decompose_face_poset(k, order, s);
      const int top = *s.rbegin();
      for (std::size_t i = 0; i < d.frames.size(); ++i) {
        std::set<Face> own;
        for (auto& ear : d.ears)
          if (ear.provenance.frame == static_cast<int>(i) + 1) own.insert(ear.chains.begin(), ear.chains.end());
        std::set<std::string> restr;
        for (int v : sh.restrictions[i]) restr.insert(k.vertices()[v]);
        std::vector<int> pi(dd);
        std::iota(pi.begin(), pi.end(), 1);
        do {
          std::set<std::string> top_face;
          for (int n = 0; n < top; ++n) top_face.insert(d.frames[i].position_labels[pi[n] - 1]);
          bool contains = std::includes(top_face.begin(), top_face.end(), restr.begin(), restr.end());
          std::vector<int> q_of_p(face_poset(k, true).size(), -1);
          for (int x = 0; x < d.poset.size(); ++x) q_of_p[d.poset.origin(x)] = x;
          Face c = detail::chain_of(d.frames[i], pi, s, q_of_p);
          ASSERT_EQ(own.count(c) > 0, contains) << name << " frame " << i + 1 << " " << word_string(pi);
        } while (std::next_permutation(pi.begin(), pi.end()));
      }
    }
  }
}

TEST(Ear, GeometricExamples) {
  auto u23 = lattice_of_flats(fx::uniform(2, 3));
  auto d = decompose_geometric(u23, default_atom_order(u23));
  EXPECT_EQ(d.ears.size(), 2u);
  EXPECT_TRUE(verify_ced(d).passed());

  auto tt = lattice_of_flats(fx::two_triangle_graph());
  auto e = decompose_geometric(tt, default_atom_order(tt), std::set<int>{1});
  EXPECT_EQ(static_cast<long long>(e.ears.size()), h_of(e)[1]);
  EXPECT_EQ(e.ears.size(), 4u);
  EXPECT_ERROR_KIND(decompose_geometric(chain_lattice(2), {1}), ErrorKind::NotGeometric);
}

TEST(Ear, GeometricEarCountIsNbcCount) {
  for (auto& [name, m] : fx::matroids()) {
    auto l = lattice_of_flats(m);
    auto d = decompose_geometric(l, default_atom_order(l));
    EXPECT_EQ(static_cast<long long>(d.ears.size()), oracle::nbc_count(m)) << name;
  }
}

TEST(Ear, GeometricEarsAreWhereFrameAndMinimalLabelsAgree) {
  for (auto& [name, m] : fx::matroids()) {
    auto l = lattice_of_flats(m);
    auto atoms = default_atom_order(l);
    auto lambda = minimal_labeling(l, atoms);
    auto d = decompose_geometric(l, atoms);
    const int r = l.rank();
    std::vector<int> q_of_p(l.size(), -1);
    for (int x = 0; x < d.poset.size(); ++x) q_of_p[d.poset.origin(x)] = x;
    for (std::size_t i = 0; i < d.frames.size(); ++i) {
      std::set<Face> own;
      for (auto& ear : d.ears)
        if (ear.provenance.frame == static_cast<int>(i) + 1) own.insert(ear.chains.begin(), ear.chains.end());
      std::vector<int> pi(r);
      std::iota(pi.begin(), pi.end(), 1);
      do {
        std::vector<int> full{l.bottom()};
        std::uint32_t mask = 0;
        for (int n = 0; n < r; ++n) {
          mask |= 1u << (pi[n] - 1);
          full.push_back(d.frames[i].element[mask]);
        }
        std::vector<int> nu;
        for (int v : pi) nu.push_back(std::stoi(d.frames[i].position_labels[v - 1]));
        bool agree = nu == lambda.word(full);
        Face c = detail::chain_of(d.frames[i], pi, d.ranks, q_of_p);
        ASSERT_EQ(own.count(c) > 0, agree) << name << " frame " << i + 1 << " " << word_string(pi);
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
  }
}

TEST(Ear, CorpusSatisfiesAxiomsAndInequalities) {
  for (auto& c : corpus::decompositions()) {
    auto d = c.build();
    auto rep = verify_ced(d);
    EXPECT_TRUE(rep.passed()) << c.name;
    for (int i = 0; i < 4; ++i)
      for (auto& w : rep.axioms[i].witnesses) ADD_FAILURE() << c.name << " axiom " << i + 1 << ": " << w;
    auto h = h_of(d);
    EXPECT_TRUE(h_inequality_failures(h).empty()) << c.name;
    EXPECT_TRUE(g_and_m_check(h).m_vector) << c.name;
    EXPECT_EQ(d.chain_count(), d.complex.facet_count()) << c.name;
  }
}

TEST(Ear, CorpusSwitchClosure) {
  for (auto& c : corpus::decompositions()) {
    auto d = c.build();
    auto v = switch_closure_violations(d);
    EXPECT_TRUE(v.empty()) << c.name << ": " << (v.empty() ? "" : v.front());
  }
  EXPECT_FALSE(switch_closure_violations(pi4(), false).empty());
}

TEST(Ear, CorpusBallReciprocity) {
  for (auto& c : corpus::decompositions()) {
    auto d = c.build();
    auto colors = rank_colors(d);
    const int k = static_cast<int>(d.ranks.size());
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
      auto amb = d.ears[i].ambient_complex();
      auto r = ball_flag_reciprocity(d.ears[i].complex, colors, k, d.ears[i].shelling(), i ? &amb : nullptr);
      EXPECT_TRUE(r.holds) << c.name << " ear " << i + 1;
    }
  }
}

TEST(Ear, EarsPartitionTheFacets) {
  auto d = pi4();
  std::set<Face> seen;
  for (auto& e : d.ears)
    for (auto& c : e.chains) EXPECT_TRUE(seen.insert(c).second);
  std::set<Face> facets(d.complex.facets().begin(), d.complex.facets().end());
  EXPECT_EQ(seen, facets);
}

TEST(Ear, FakeDecompositionFailsBoundaryAxiom) {
  // square 1-2-3-4 plus a path 1-5-3-6 whose interior passes through 3
  std::vector<std::string> v = fx::numbered(6);
  SimplicialComplex delta(v, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 4}, {2, 5}});
  SimplicialComplex square(v, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  SimplicialComplex path(v, {{0, 4}, {2, 4}, {2, 5}});
  SimplicialComplex ring(v, {{0, 4}, {2, 4}, {2, 5}, {0, 5}});
  auto rep = verify_ced(delta, {{square, {0, 1, 2, 3}, std::nullopt}, {path, {0, 1, 2}, ring}});
  EXPECT_TRUE(rep.axioms[0].pass);
  EXPECT_FALSE(rep.axioms[3].pass);
  ASSERT_FALSE(rep.axioms[3].witnesses.empty());
  EXPECT_NE(rep.axioms[3].witnesses.front().find("{3}"), std::string::npos) << rep.axioms[3].witnesses.front();
  EXPECT_FALSE(rep.passed());
}

TEST(Ear, FakeDecompositionFailsCoverAndSphereAxioms) {
  auto d = pi4();
  auto views = ear_views(d);
  views.pop_back();
  auto rep = verify_ced(d.complex, views);
  EXPECT_FALSE(rep.axioms[0].pass);
  // a first ear that is a ball, not a sphere
  auto r2 = verify_ced(d.complex, {views[1]});
  EXPECT_FALSE(r2.axioms[1].pass);
}

TEST(Ear, ReportsAreDeterministic) {
  auto a = decomposition_to_json(pi4(), verify_ced(pi4()));
  auto b = decomposition_to_json(pi4(), verify_ced(pi4()));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(digest(a), digest(b));
}
