#include <gtest/gtest.h>

#include <vector>

#include "gcover/catalog.hpp"
#include "gcover/constructors.hpp"
#include "gcover/group_spec.hpp"
#include "gcover/subgroup_lattice.hpp"
#include "oracles.hpp"

using namespace gcover;

namespace {

std::vector<GroupTable> small_catalog_groups(std::size_t max_order) {
  std::vector<GroupTable> out;
  for (const auto& e : catalog_list()) {
    auto g = parse_group_spec(e.spec);
    if (g.order() <= max_order) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Closure, Examples) {
  auto v4 = build_elementary_abelian(2, 2);
  EXPECT_TRUE(closure(v4, {}).is_trivial());

  auto d8 = build_dihedral(8);
  auto x2 = closure(d8, {d8.mul(1, 1)});
  EXPECT_EQ(x2.size(), 2u);
  EXPECT_TRUE(x2.contains(2));

  auto q8 = build_generalized_quaternion(8);
  auto a = closure(q8, {1});
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(a.members().elements(), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(closure(q8, {1, 4}).size(), 8u);
  EXPECT_THROW(closure(q8, {8}), PreconditionError);
}

TEST(AllSubgroups, Counts) {
  EXPECT_EQ(all_subgroups(build_elementary_abelian(2, 2)).size(), 5u);
  EXPECT_EQ(all_subgroups(build_generalized_quaternion(8)).size(), 6u);
  EXPECT_EQ(all_subgroups(build_symmetric(3)).size(), 6u);
  EXPECT_EQ(all_subgroups(build_symmetric(4)).size(), 30u);
  EXPECT_EQ(all_subgroups(build_alternating(5)).size(), 59u);
  // 1 + 31 + 155 + 155 + 31 + 1 subgroups of C2^5.
  EXPECT_EQ(all_subgroups(build_elementary_abelian(2, 5)).size(), 374u);
}

TEST(AllSubgroups, A4HasNoSubgroupOfOrderSix) {
  auto l = all_subgroups(build_alternating(4));
  EXPECT_TRUE(subgroups_of_order(l, 6).empty());
  EXPECT_EQ(subgroups_of_order(l, 4).size(), 1u);
  EXPECT_EQ(l.size(), 10u);
}

TEST(AllSubgroups, TrivialGroup) {
  auto l = all_subgroups(build_cyclic(1));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_TRUE(l.maximal_indices().empty());
  EXPECT_EQ(frattini(l).size(), 1u);
}

TEST(Lattice, MaximalSubgroups) {
  auto v4 = build_elementary_abelian(2, 2);
  auto m = maximal_subgroups(all_subgroups(v4));
  ASSERT_EQ(m.size(), 3u);
  for (const auto& h : m) EXPECT_EQ(h.size(), 2u);

  auto c6 = build_cyclic(6);
  auto mc6 = maximal_subgroups(all_subgroups(c6));
  ASSERT_EQ(mc6.size(), 2u);
  EXPECT_EQ(mc6[0].size(), 2u);
  EXPECT_EQ(mc6[1].size(), 3u);
  EXPECT_EQ(proper_subgroups(all_subgroups(c6)).size(), 3u);
}

TEST(Lattice, QuaternionOrderFourSubgroups) {
  for (std::size_t m = 3; m <= 6; ++m) {
    auto q = build_generalized_quaternion(std::size_t{1} << m);
    auto fours = subgroups_of_order(all_subgroups(q), 4);
    EXPECT_EQ(fours.size(), (std::size_t{1} << (m - 2)) + 1) << "m = " << m;
    for (const auto& h : fours) EXPECT_TRUE(is_cyclic_subgroup(h));
  }
}

TEST(Normality, Examples) {
  auto c12 = build_cyclic(12);
  auto lc = all_subgroups(c12);
  for (const auto& h : lc.subgroups()) EXPECT_TRUE(is_normal(c12, h));

  auto s3 = build_symmetric(3);
  auto l = all_subgroups(s3);
  auto twos = subgroups_of_order(l, 2);
  ASSERT_EQ(twos.size(), 3u);
  for (const auto& h : twos) EXPECT_FALSE(is_normal(s3, h));
  EXPECT_EQ(normal_subgroups(l).size(), 3u);

  auto q8 = build_generalized_quaternion(8);
  EXPECT_EQ(normal_subgroups(all_subgroups(q8)).size(), 6u);
}

TEST(Normality, LatticeFlagsMatchFullConjugationScan) {
  for (const auto& g : small_catalog_groups(32)) {
    auto l = all_subgroups(g);
    for (std::size_t i = 0; i < l.size(); ++i) EXPECT_EQ(l.is_normal(i), is_normal(g, l[i])) << g.spec();
  }
}

TEST(SetOperations, Examples) {
  auto q8 = build_generalized_quaternion(8);
  auto l = all_subgroups(q8);
  auto m = maximal_subgroups(l);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(intersect(m[0], m[0]), m[0]);
  auto z = intersect(m[0], m[1]);
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(z.members(), center(q8));
  EXPECT_EQ(index(q8, z), 4u);
  EXPECT_TRUE(is_subset(z, m[2]));
  EXPECT_FALSE(is_subset(m[0], m[1]));

  auto other = build_generalized_quaternion(8);
  EXPECT_THROW(intersect(m[0], trivial_subgroup(other)), ParentMismatch);
  EXPECT_THROW(index(other, z), ParentMismatch);
}

TEST(Frattini, Examples) {
  EXPECT_TRUE(frattini(all_subgroups(build_elementary_abelian(2, 2))).is_trivial());
  auto q8 = build_generalized_quaternion(8);
  EXPECT_EQ(frattini(all_subgroups(q8)).members(), center(q8));
  EXPECT_EQ(min_generators_2group(q8), 2u);
  EXPECT_EQ(min_generators_2group(build_cyclic(8)), 1u);
  EXPECT_EQ(min_generators_2group(build_elementary_abelian(2, 4)), 4u);
  EXPECT_EQ(min_generators_2group(build_dihedral(16)), 2u);
  EXPECT_THROW(min_generators_2group(build_cyclic(6)), PreconditionError);
}

TEST(SubgroupTable, InducedGroup) {
  auto s4 = build_symmetric(4);
  auto l = all_subgroups(s4);
  auto a4 = subgroups_of_order(l, 12);
  ASSERT_EQ(a4.size(), 1u);
  auto t = subgroup_table(a4.front());
  EXPECT_EQ(t.order(), 12u);
  EXPECT_EQ(all_subgroups(t).size(), 10u);
}

// Exhaustive-subset oracle agrees with the join enumeration for every catalog group of order <= 16.
TEST(LatticeProperty, MatchesSubsetOracle) {
  for (const auto& g : small_catalog_groups(16)) {
    auto l = all_subgroups(g);
    auto expected = oracle::subgroups_by_subset_scan(g);
    ASSERT_EQ(l.size(), expected.size()) << g.spec();
    for (std::size_t i = 0; i < l.size(); ++i) EXPECT_EQ(l[i].members(), expected[i]) << g.spec() << " #" << i;
  }
}

TEST(LatticeProperty, InvariantsUpToOrder64) {
  for (const auto& g : small_catalog_groups(64)) {
    SCOPED_TRACE(g.spec());
    auto l = all_subgroups(g);
    auto again = all_subgroups(g);
    ASSERT_EQ(l.size(), again.size());
    EXPECT_EQ(l[0].size(), 1u);
    EXPECT_EQ(l[l.size() - 1].size(), g.order());
    for (std::size_t i = 0; i < l.size(); ++i) {
      const auto& h = l[i];
      EXPECT_EQ(h.members(), again[i].members());
      EXPECT_TRUE(h.contains(0));
      EXPECT_EQ(g.order() % h.size(), 0u);
      if (i) {
        EXPECT_TRUE(canonical_less(l[i - 1], h));
      }
      // Closed under product and inverse.
      bool closed = true;
      h.members().for_each([&](std::size_t a) {
        closed = closed && h.contains(g.inv(a));
        h.members().for_each([&](std::size_t b) { closed = closed && h.contains(g.mul(a, b)); });
      });
      EXPECT_TRUE(closed) << "#" << i;
      // Every proper subgroup sits under some maximal one.
      if (h.is_proper()) {
        bool under = false;
        for (std::size_t m : l.maximal_indices()) under = under || h.members().is_subset_of(l[m].members());
        EXPECT_TRUE(under) << "#" << i;
      }
      if (l.is_maximal(i)) {
        for (std::size_t j = 0; j < l.size(); ++j)
          if (j != i && l[j].is_proper()) {
            EXPECT_FALSE(h.members().is_subset_of(l[j].members()) && l[j].size() > h.size());
          }
      }
    }
    EXPECT_TRUE(is_normal(g, frattini(l)));
  }
}
