#include <gtest/gtest.h>

#include <array>
#include <set>

#include "metacyc/group.hpp"
#include "oracle.hpp"

using namespace metacyc;
using oracle::expect_kind;

namespace {

GroupElement random_element(const Group& G) { return {oracle::uniform(0, G.M() - 1), oracle::uniform(0, G.n() - 1)}; }

std::vector<GroupElement> elems(std::initializer_list<std::pair<u64, u64>> xs) {
  std::vector<GroupElement> out;
  for (auto [i, j] : xs) out.push_back({i, j});
  return out;
}

}  // namespace

TEST(MakeGroup, Examples) {
  const auto d8 = make_group(4, 2, 3);
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_FALSE(d8.is_abelian());
  EXPECT_EQ(make_group(8, 2, 3).twist_order(), 2u);
  expect_kind([] { make_group(8, 2, 2); }, ErrorKind::NotAUnit);
  expect_kind([] { make_group(8, 3, 3); }, ErrorKind::TwistOrderMismatch);
  expect_kind([] { make_group(8, 2, 1, 3); }, ErrorKind::FoldNotCentral);
  EXPECT_TRUE(make_group(7, 3, 1).is_abelian());
}

TEST(MakeGroup, NonSplitFold) {
  // Q8 = <a, b | a^4, b^2 = a^2, a^b = a^3>
  const auto q8 = make_group(4, 2, 2, 3);
  EXPECT_FALSE(q8.is_split());
  EXPECT_EQ(q8.multiply({1, 0}, {1, 0}), (GroupElement{0, 2}));
  EXPECT_EQ(q8.element_order({1, 0}), 4u);
}

TEST(Multiply, Examples) {
  const auto G = make_group(4, 2, 3);
  EXPECT_EQ(G.multiply({0, 1}, {1, 0}), (GroupElement{1, 3}));
  EXPECT_EQ(G.multiply({1, 1}, {1, 1}), (GroupElement{0, 0}));
  for (auto g : G.elements()) EXPECT_EQ(G.multiply(G.identity(), g), g);
  expect_kind([&] { G.multiply({2, 0}, {0, 0}); }, ErrorKind::ForeignElement);
}

TEST(Inverse, Examples) {
  const auto G = make_group(4, 2, 3);
  EXPECT_EQ(G.inverse({0, 1}), (GroupElement{0, 3}));
  EXPECT_EQ(G.inverse({0, 0}), (GroupElement{0, 0}));
  EXPECT_EQ(G.inverse({1, 1}), (GroupElement{1, 1}));
}

TEST(Power, Examples) {
  EXPECT_EQ(make_group(8, 2, 3).power_closed({1, 1}, 2), (GroupElement{0, 4}));
  EXPECT_EQ(make_group(8, 2, 3).power_closed({1, 1}, 0), (GroupElement{0, 0}));
  EXPECT_EQ(make_group(16, 4, 5).power_closed({1, 12}, 2), (GroupElement{2, 8}));
  EXPECT_EQ(make_group(8, 2, 3).power_binomial({1, 1}, 2), (GroupElement{0, 4}));
  EXPECT_EQ(make_group(4, 2, 3).power_binomial({1, 0}, 2), (GroupElement{0, 0}));
  EXPECT_EQ(make_group(16, 4, 5).power_binomial({1, 1}, 4), (GroupElement{0, 12}));
  expect_kind([] { make_group(4, 2, 3).power_binomial({1, 0}, 1); }, ErrorKind::InvalidArgument);
}

TEST(ElementOrder, Examples) {
  EXPECT_EQ(make_group(8, 2, 3).element_order({0, 0}), 1u);
  EXPECT_EQ(make_group(8, 2, 3).element_order({1, 1}), 4u);
  EXPECT_EQ(make_group(4, 2, 3).element_order({1, 1}), 2u);
}

TEST(Commutator, Examples) {
  const auto G = make_group(4, 2, 3);
  EXPECT_EQ(G.commutator({0, 1}, {1, 0}), (GroupElement{0, 2}));
  for (auto g : G.elements()) {
    EXPECT_EQ(G.commutator(g, g), G.identity());
    EXPECT_EQ(G.commutator(g, G.identity()), G.identity());
  }
}

TEST(BracketIter, Examples) {
  const auto G = make_group(16, 4, 5);
  EXPECT_EQ(G.bracket_iter({0, 1}, {1, 0}, 1), G.commutator({0, 1}, {1, 0}));
  EXPECT_EQ(G.bracket_iter({0, 1}, {1, 0}, 2), (GroupElement{0, 0}));
  // a^4 is central
  for (u64 s = 1; s <= 5; ++s) EXPECT_EQ(G.bracket_iter({0, 4}, {1, 3}, s), G.identity());
}

TEST(BracketIter, PowerOfTwistMinusOne) {
  for (const auto& p : oracle::split_family(128, true)) {
    const Group G(p);
    u64 expect = 1 % p.n;
    for (u64 s = 1; s <= 6; ++s) {
      expect = (expect * ((p.r + p.n - 1) % p.n)) % p.n;
      ASSERT_EQ(G.bracket_iter(G.a(), G.b(), s), (GroupElement{0, expect})) << p.n << "," << p.m << "," << p.r;
    }
  }
}

TEST(XuIdentity, Examples) {
  EXPECT_TRUE(make_group(8, 2, 3).verify_xu_identity({1, 1}, {1, 0}, 2));
  const auto ab = make_group(6, 4, 1);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(ab.verify_xu_identity(random_element(ab), random_element(ab), 5));
  const auto G = make_group(16, 4, 5);
  for (int k = 0; k < 50; ++k)
    EXPECT_TRUE(G.verify_xu_identity(random_element(G), random_element(G), oracle::uniform(2, 8)));
}

TEST(XuIdentity, AllPairsSmallGroups) {
  for (const auto& p : oracle::split_family(64, false)) {
    const Group G(p);
    const auto all = G.elements();
    for (auto x : all)
      for (auto y : all)
        for (u64 l = 2; l <= 8; ++l) ASSERT_TRUE(G.verify_xu_identity(x, y, l)) << p.n << "," << p.m << "," << p.r;
  }
}

TEST(CyclicSubgroup, Examples) {
  EXPECT_EQ(make_group(4, 2, 3).cyclic_subgroup({0, 0}), elems({{0, 0}}));
  EXPECT_EQ(make_group(4, 2, 3).cyclic_subgroup({0, 1}), elems({{0, 0}, {0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(make_group(8, 2, 3).cyclic_subgroup({1, 1}).size(), 4u);
}

TEST(Admissibility, Examples) {
  const auto G = make_group(8, 2, 3);
  EXPECT_FALSE(G.meets_a_trivially({1, 1}));
  EXPECT_TRUE(G.meets_a_trivially({1, 2}));
  EXPECT_TRUE(G.meets_a_trivially({0, 0}));
  EXPECT_TRUE(G.is_admissible_order(0, 0));
  EXPECT_FALSE(G.is_admissible_order(1, 1));
  EXPECT_TRUE(G.is_admissible_order(1, 2));
  EXPECT_FALSE(G.is_admissible_congruence(1, 1));
  EXPECT_TRUE(G.is_admissible_congruence(1, 2));
  EXPECT_TRUE(make_group(4, 4, 3).is_admissible_congruence(2, 2));
  expect_kind([] { make_group(4, 2, 2, 3).is_admissible_order(1, 0); }, ErrorKind::NotSplit);
}

TEST(Center, Examples) {
  const auto d8 = center(make_group(4, 2, 3));
  EXPECT_EQ(d8.elements, elems({{0, 0}, {0, 2}}));
  EXPECT_TRUE(d8.cyclic);
  const auto z = center(make_group(4, 4, 3));
  EXPECT_EQ(z.elements, elems({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  EXPECT_FALSE(z.cyclic);
  const auto ab = make_group(5, 3, 1);
  EXPECT_EQ(center(ab).size(), 15u);
  expect_kind([] { center(make_group(64, 128, 1), 4096); }, ErrorKind::CapExceeded);
}

TEST(OmegaS, Examples) {
  const auto G = make_group(4, 4, 3);
  EXPECT_EQ(omega_s(G, 0).elements, elems({{0, 0}}));
  EXPECT_EQ(omega_s(G, 1).elements, elems({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  EXPECT_EQ(omega_s(G, 2).size(), 16u);
  expect_kind([] { omega_s(make_group(6, 2, 5), 1); }, ErrorKind::NotPrimePower);
}

TEST(DerivedSubgroup, Examples) {
  EXPECT_EQ(derived_subgroup(make_group(9, 3, 1)).size(), 1u);
  EXPECT_EQ(derived_subgroup(make_group(4, 2, 3)).elements, elems({{0, 0}, {0, 2}}));
  EXPECT_EQ(derived_subgroup(make_group(16, 4, 5)).elements, elems({{0, 0}, {0, 4}, {0, 8}, {0, 12}}));
}

TEST(GroupProperty, DerivedInsideA) {
  for (const auto& p : oracle::split_family(96, false))
    for (auto g : derived_subgroup(Group(p)).elements) ASSERT_EQ(g.i, 0u);
}

TEST(GroupProperty, MultiplyMatchesNaive) {
  for (const auto& p : oracle::split_family(128, false)) {
    const Group G(p);
    const auto ref = oracle::naive(G);
    for (int k = 0; k < 30; ++k) {
      auto x = random_element(G), y = random_element(G);
      ASSERT_EQ(G.multiply(x, y), ref.mul(x, y));
    }
  }
}

TEST(GroupProperty, AssociativeExhaustive) {
  for (const auto& p : oracle::split_family(48, false)) {
    const Group G(p);
    const auto all = G.elements();
    for (auto x : all)
      for (auto y : all)
        for (auto z : all)
          ASSERT_EQ(G.multiply(G.multiply(x, y), z), G.multiply(x, G.multiply(y, z)));
  }
}

TEST(GroupProperty, InverseAndIdentity) {
  for (const auto& p : oracle::split_family(200, false)) {
    const Group G(p);
    for (int k = 0; k < 10; ++k) {
      auto g = random_element(G);
      ASSERT_EQ(G.multiply(g, G.inverse(g)), G.identity());
      ASSERT_EQ(G.multiply(G.inverse(g), g), G.identity());
      ASSERT_EQ(G.multiply(g, G.identity()), g);
    }
  }
}

TEST(GroupProperty, PowersAgreeWithIteration) {
  for (const auto& p : oracle::split_family(64, false)) {
    const Group G(p);
    const auto ref = oracle::naive(G);
    for (auto g : G.elements()) {
      auto acc = g;
      for (u64 k = 2; k <= G.order(); ++k) {
        acc = ref.mul(acc, g);
        ASSERT_EQ(G.power_closed(g, k), acc);
        ASSERT_EQ(G.power_binomial(g, k), acc);
      }
    }
  }
}

TEST(GroupProperty, NonSplitPowersAgree) {
  // generalized quaternion and a few other non-split folds
  for (auto [n, M, E, r] : std::vector<std::array<u64, 4>>{{8, 2, 4, 7}, {16, 2, 8, 15}, {4, 4, 2, 3}, {9, 3, 3, 4}}) {
    const auto G = make_group(n, M, E, r);
    const auto ref = oracle::naive(G);
    for (auto g : G.elements()) {
      ASSERT_EQ(G.element_order(g), ref.order(g));
      for (u64 k = 0; k <= G.order(); ++k) ASSERT_EQ(G.power_closed(g, k), ref.pow(g, k));
      for (u64 k = 2; k <= G.order(); ++k) ASSERT_EQ(G.power_binomial(g, k), ref.pow(g, k));
    }
  }
}

TEST(GroupProperty, AdmissibilityTripleAgreement) {
  for (const auto& p : oracle::split_family(120, true)) {
    const Group G(p);
    const auto ref = oracle::naive(G);
    for (auto g : G.elements()) {
      bool trivial_meet = true;
      for (auto h : ref.cyclic(g))
        if (h.i == 0 && h.j != 0) trivial_meet = false;
      ASSERT_EQ(G.meets_a_trivially(g), trivial_meet);
      ASSERT_EQ(G.is_admissible_order(g.i, g.j), trivial_meet);
      ASSERT_EQ(G.is_admissible_congruence(g.i, g.j), trivial_meet);
    }
  }
}

TEST(GroupProperty, CenterMatchesCommutingTest) {
  for (const auto& p : oracle::split_family(72, false)) {
    const Group G(p);
    const auto ref = oracle::naive(G);
    std::vector<GroupElement> z;
    for (auto x : G.elements()) {
      bool central = true;
      for (auto y : G.elements()) central = central && ref.mul(x, y) == ref.mul(y, x);
      if (central) z.push_back(x);
    }
    ASSERT_EQ(center(G).elements, z);
  }
}

TEST(SplitPresentations, EnumerationMatchesDirectSearch) {
  const auto lib = split_presentations(100);
  const auto ref = oracle::split_family(100, false);
  std::set<std::array<u64, 3>> a, b;
  for (auto p : lib) a.insert({p.n, p.m, p.r % p.n});
  for (auto p : ref) b.insert({p.n, p.m, p.r % p.n});
  EXPECT_EQ(a, b);
}
