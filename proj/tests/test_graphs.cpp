#include <gtest/gtest.h>

#include <set>

#include "metacyc/graphs.hpp"
#include "metacyc/verify.hpp"
#include "oracle.hpp"

using namespace metacyc;
using oracle::expect_kind;

namespace {

std::vector<GroupElement> non_identity(const Group& G) {
  auto all = G.elements();
  all.erase(all.begin());
  return all;
}

GroupElement random_element(const Group& G) { return {oracle::uniform(0, G.M() - 1), oracle::uniform(0, G.n() - 1)}; }

GroupGraph d8_cayley() {
  const auto G = make_group(4, 2, 3);
  const std::vector<GroupElement> S{{0, 1}, {0, 3}, {1, 0}};
  return cayley_graph(G, S);
}

}  // namespace

TEST(Permutation, Basics) {
  const Permutation p({1, 2, 0, 3});
  EXPECT_EQ(p.order(), 3u);
  EXPECT_EQ(p.then(p.inverse()), Permutation::identity(4));
  EXPECT_EQ(p.pow(3), Permutation::identity(4));
  EXPECT_EQ(p.then(p), p.pow(2));
  EXPECT_EQ(p.cycles(), (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3}}));
  const Permutation q({3, 2, 1, 0});
  EXPECT_EQ(p.then(q)(0), q(p(0)));
  expect_kind([] { Permutation({0, 0, 1}); }, ErrorKind::InvalidArgument);
}

TEST(SimpleGraph, NormalizesEdges) {
  const SimpleGraph g(4, {{1, 0}, {0, 1}, {2, 3}});
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.is_connected());
  expect_kind([] { SimpleGraph(3, {{1, 1}}); }, ErrorKind::InvalidArgument);
}

TEST(CayleyGraph, Examples) {
  const auto gg = d8_cayley();
  EXPECT_EQ(gg.graph.vertex_count(), 8u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(gg.graph.degree(v), 3u);
  EXPECT_TRUE(gg.graph.is_connected());

  const auto G = make_group(4, 2, 3);
  const auto k8 = cayley_graph(G, non_identity(G));
  EXPECT_EQ(k8.graph.edges().size(), 28u);

  const auto empty = cayley_graph(G, std::vector<GroupElement>{});
  EXPECT_EQ(empty.graph.vertex_count(), 8u);
  EXPECT_TRUE(empty.graph.edges().empty());

  expect_kind([&] { cayley_graph(G, std::vector<GroupElement>{{0, 0}}); }, ErrorKind::InvalidArgument);
  expect_kind([&] { cayley_graph(G, std::vector<GroupElement>{{0, 1}}); }, ErrorKind::NotClosed);
}

TEST(CayleyGraph, AdjacencyByMultiplication) {
  const auto G = make_group(16, 4, 5);
  const auto S = symmetrize(G, std::vector<GroupElement>{{0, 1}, {1, 3}});
  const auto gg = cayley_graph(G, S);
  const std::set<GroupElement> Sset(S.begin(), S.end());
  for (auto x : G.elements())
    for (auto y : G.elements())
      ASSERT_EQ(gg.graph.has_edge(gg.space.vertex_of(x), gg.space.vertex_of(y)),
                Sset.count(G.multiply(x, G.inverse(y))) > 0);
}

TEST(CosetGraph, Examples) {
  const auto G = make_group(4, 2, 3);
  const std::vector<GroupElement> S{{0, 1}, {0, 3}, {1, 0}};
  const auto trivial = coset_graph(G, std::vector<GroupElement>{{0, 0}}, S);
  EXPECT_EQ(trivial.graph, d8_cayley().graph);

  const auto H = make_group(16, 4, 5);
  const std::vector<GroupElement> stab{{0, 0}, {2, 8}};
  const auto C = double_coset_closure(H, stab, std::vector<GroupElement>{{0, 1}, {1, 0}});
  const auto gg = coset_graph(H, stab, C);
  EXPECT_EQ(gg.graph.vertex_count(), 32u);
  EXPECT_TRUE(gg.graph.is_connected());
  for (auto g : H.elements()) EXPECT_TRUE(gg.graph.is_automorphism(action_permutation(gg.space, g)));
  // transitive: orbit of vertex 0 is everything
  std::set<Vertex> orbit;
  for (auto g : H.elements()) orbit.insert(action_permutation(gg.space, g)(0));
  EXPECT_EQ(orbit.size(), 32u);

  expect_kind([&] { coset_graph(H, std::vector<GroupElement>{{0, 0}, {0, 1}}, C); }, ErrorKind::NotSubgroup);
  expect_kind([&] { coset_graph(H, stab, std::vector<GroupElement>{{0, 1}, {0, 15}}); }, ErrorKind::NotClosed);
  expect_kind([&] { coset_graph(H, stab, std::vector<GroupElement>{{2, 8}}); }, ErrorKind::ConstraintViolation);
}

TEST(ActionPermutation, Examples) {
  const auto gg = d8_cayley();
  const auto& G = gg.space.group;
  EXPECT_TRUE(action_permutation(gg.space, G.identity()).is_identity());
  for (auto g : non_identity(G)) {
    const auto p = action_permutation(gg.space, g);
    for (Vertex v = 0; v < 8; ++v) EXPECT_NE(p(v), v);
  }
}

TEST(ActionPermutation, Homomorphism) {
  const auto G = make_group(16, 4, 5);
  const std::vector<GroupElement> stab{{0, 0}, {2, 8}};
  const auto space = make_coset_space(G, make_subgroup(G, stab));
  for (int k = 0; k < 50; ++k) {
    auto g = random_element(G), h = random_element(G);
    ASSERT_EQ(action_permutation(space, g).then(action_permutation(space, h)),
              action_permutation(space, G.multiply(g, h)));
  }
}

TEST(ActionKernel, EqualsCoreOfStabilizer) {
  for (const auto& p : oracle::split_family(64, false)) {
    if (!is_power_of_two(p.n * p.m)) continue;
    const Group G(p);
    std::set<std::vector<GroupElement>> seen;
    for (auto h : G.elements()) {
      auto Hs = G.cyclic_subgroup(h);
      std::sort(Hs.begin(), Hs.end());
      if (!seen.insert(Hs).second) continue;
      std::vector<GroupElement> core;
      for (auto x : Hs) {
        bool all = true;
        for (auto g : G.elements()) {
          auto c = G.conjugate(x, g);
          all = all && std::binary_search(Hs.begin(), Hs.end(), c);
        }
        if (all) core.push_back(x);
      }
      const auto space = make_coset_space(G, make_subgroup(G, Hs));
      ASSERT_EQ(action_kernel(space), core) << p.n << "," << p.m << "," << p.r;
      ASSERT_EQ(is_faithful(space), core.size() == 1);
    }
  }
}

TEST(SemiregularOrbits, Examples) {
  EXPECT_FALSE(semiregular_orbits(Permutation::identity(4), 2).semiregular);
  const auto gg = d8_cayley();
  const auto rep = semiregular_orbits(action_permutation(gg.space, gg.space.group.a()));
  EXPECT_TRUE(rep.semiregular);
  ASSERT_EQ(rep.orbits.size(), 2u);
  EXPECT_EQ(rep.orbits[0].size(), 4u);
  EXPECT_EQ(rep.orbits[1].size(), 4u);
  EXPECT_FALSE(semiregular_orbits(Permutation({1, 0, 3, 4, 2})).semiregular);
}

TEST(CheckCertificate, Examples) {
  const auto gg = d8_cayley();
  const auto& G = gg.space.group;
  MetacircCertificate cert{action_permutation(gg.space, G.a()), action_permutation(gg.space, G.b()), 2, 4};
  EXPECT_TRUE(check_certificate(gg.graph, cert));

  auto no_tau = cert;
  no_tau.tau = Permutation::identity(8);
  const auto c2 = check_certificate(gg.graph, no_tau);
  EXPECT_FALSE(c2);
  EXPECT_FALSE(c2.failure.empty());

  auto bad_sigma = cert;
  bad_sigma.sigma = Permutation({1, 0, 2, 3, 4, 5, 6, 7});
  EXPECT_FALSE(check_certificate(gg.graph, bad_sigma));
}

TEST(Sylow2, Examples) {
  const auto s = sylow2_of_metacyclic({12, 2, 5});
  EXPECT_EQ(s.presentation.n, 4u);
  EXPECT_EQ(s.presentation.m, 2u);
  EXPECT_EQ(s.presentation.r, 1u);
  EXPECT_EQ(s.a_image, (GroupElement{0, 3}));
  EXPECT_EQ(s.b_image, (GroupElement{1, 0}));

  const auto same = sylow2_of_metacyclic({16, 4, 5});
  EXPECT_EQ(same.presentation.n, 16u);
  EXPECT_EQ(same.presentation.m, 4u);
  EXPECT_EQ(same.presentation.r, 5u);

  const auto odd = sylow2_of_metacyclic({9, 3, 4});
  EXPECT_EQ(odd.presentation.n * odd.presentation.m, 1u);
}

TEST(Sylow2, ImagesGenerateASubgroupOfTheRightShape) {
  for (const auto& p : oracle::split_family(96, false)) {
    const Group G(p);
    const auto s = sylow2_of_metacyclic(p);
    const std::vector<GroupElement> gens{s.a_image, s.b_image};
    const auto P = closure(G, gens);
    const u64 two_part = u64{1} << v2(G.order());
    ASSERT_EQ(P.size(), two_part) << p.n << "," << p.m << "," << p.r;
    ASSERT_EQ(G.element_order(s.a_image), s.presentation.n);
    ASSERT_EQ(G.conjugate(s.a_image, s.b_image), G.power(s.a_image, s.presentation.r));
  }
}

TEST(FindCertificate, RegularCase) {
  const auto gg = d8_cayley();
  const auto cert = find_certificate_2power(gg);
  EXPECT_EQ(cert.sigma, action_permutation(gg.space, gg.space.group.a()));
  EXPECT_EQ(cert.tau, action_permutation(gg.space, gg.space.group.b()));
  EXPECT_EQ(cert.m, 2u);
  EXPECT_EQ(cert.n, 4u);
  EXPECT_TRUE(check_certificate(gg.graph, cert));
}

TEST(FindCertificate, CosetCase) {
  const auto G = make_group(16, 4, 5);
  const std::vector<GroupElement> stab{{0, 0}, {2, 8}};
  const auto C = double_coset_closure(G, stab, std::vector<GroupElement>{{0, 1}, {1, 0}});
  const auto gg = coset_graph(G, stab, C);
  const auto cert = find_certificate_2power(gg);
  EXPECT_EQ(cert.sigma, action_permutation(gg.space, G.a()));
  EXPECT_EQ(cert.tau, action_permutation(gg.space, {1, 4}));
  EXPECT_TRUE(check_certificate(gg.graph, cert));
  EXPECT_TRUE(semiregular_orbits(cert.sigma).semiregular);
}

TEST(FindCertificate, Rejections) {
  // non-cyclic center: any nontrivial stabilizer contains a central involution
  const auto G = make_group(4, 4, 3);
  const std::vector<GroupElement> stab{{0, 0}, {2, 0}};
  const auto C = double_coset_closure(G, stab, std::vector<GroupElement>{{0, 1}, {1, 0}});
  const auto gg = coset_graph(G, stab, C);
  expect_kind([&] { find_certificate_2power(gg); }, ErrorKind::NotFaithful);

  const auto S3 = make_group(3, 2, 2);
  const auto tri = cayley_graph(S3, std::vector<GroupElement>{{0, 1}, {0, 2}, {1, 0}});
  expect_kind([&] { find_certificate_2power(tri); }, ErrorKind::NotTwoPower);
}

TEST(FindCertificate, SampledInstances) {
  const auto instances = thm62_instances(64);
  ASSERT_GT(instances.size(), 50u);
  for (const auto& inst : instances) {
    const Group G(inst.group);
    const auto gg = coset_graph(G, inst.stabilizer, inst.connection);
    ASSERT_TRUE(gg.graph.is_connected());
    const auto cert = find_certificate_2power(gg);
    ASSERT_TRUE(check_certificate(gg.graph, cert)) << check_certificate(gg.graph, cert).failure;
  }
}
