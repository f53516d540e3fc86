#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "gcover/catalog.hpp"
#include "gcover/constructors.hpp"
#include "gcover/cover.hpp"
#include "gcover/group_spec.hpp"
#include "oracles.hpp"

using namespace gcover;

namespace {

std::vector<GroupTable> catalog_groups(std::size_t max_order) {
  std::vector<GroupTable> out;
  for (const auto& e : catalog_list()) {
    auto g = parse_group_spec(e.spec);
    if (g.order() <= max_order) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(IsCover, Examples) {
  auto v4 = build_elementary_abelian(2, 2);
  auto lv = all_subgroups(v4);
  EXPECT_TRUE(is_cover(v4, maximal_subgroups(lv)));
  EXPECT_FALSE(is_cover(v4, {lv[1], lv[2]}));

  auto q8 = build_generalized_quaternion(8);
  auto l = all_subgroups(q8);
  auto m = maximal_subgroups(l);
  EXPECT_TRUE(is_cover(q8, m));
  EXPECT_FALSE(is_cover(q8, {m[0], m[1], intersect(m[0], m[1])}));
  EXPECT_THROW(is_cover(v4, m), ParentMismatch);
}

TEST(Irredundant, Examples) {
  auto q8 = build_generalized_quaternion(8);
  auto l = all_subgroups(q8);
  auto m = maximal_subgroups(l);
  EXPECT_TRUE(is_irredundant_triple(m[0], m[1], m[2]));
  EXPECT_FALSE(is_irredundant_triple(m[0], m[1], intersect(m[0], m[1])));

  auto e8 = build_elementary_abelian(2, 3);
  auto le = all_subgroups(e8);
  auto twos = subgroups_of_order(le, 2);
  // Three order-2 subgroups are irredundant but cover only 4 of 8 elements.
  EXPECT_TRUE(is_irredundant_triple(twos[0], twos[1], twos[2]));
  EXPECT_FALSE(is_cover(e8, {twos[0], twos[1], twos[2]}));
}

TEST(ThreeCovers, Counts) {
  auto v4 = build_elementary_abelian(2, 2);
  EXPECT_EQ(enumerate_three_covers(v4, all_subgroups(v4)).size(), 1u);
  auto e8 = build_elementary_abelian(2, 3);
  EXPECT_EQ(enumerate_three_covers(e8, all_subgroups(e8)).size(), 7u);
  auto c6 = build_cyclic(6);
  EXPECT_TRUE(enumerate_three_covers(c6, all_subgroups(c6)).empty());
}

TEST(ThreeCovers, BothMethods) {
  struct Case {
    const char* spec;
    std::size_t c3;
  };
  for (const Case& c : {Case{"E(2,4)", 35}, Case{"D10", 0}, Case{"D12", 1}, Case{"Q8", 1}, Case{"S4", 0},
                        Case{"C2^2 x C3", 1}}) {
    auto g = parse_group_spec(c.spec);
    auto l = all_subgroups(g);
    EXPECT_EQ(c3(g, l, C3Method::Enumeration), c.c3) << c.spec;
    EXPECT_EQ(c3(g, l, C3Method::QuotientCount), c.c3) << c.spec;
  }
}

TEST(ThreeCovers, OrderedByIndex) {
  auto e16 = build_elementary_abelian(2, 4);
  auto covers = enumerate_three_covers(e16, all_subgroups(e16));
  for (std::size_t i = 0; i < covers.size(); ++i) {
    EXPECT_LT(covers[i].indices[0], covers[i].indices[1]);
    EXPECT_LT(covers[i].indices[1], covers[i].indices[2]);
    if (i) {
      EXPECT_LT(covers[i - 1].indices, covers[i].indices);
    }
  }
}

TEST(Sigma, Values) {
  struct Case {
    const char* spec;
    std::size_t sigma;
  };
  for (const Case& c : {Case{"C2 x C2", 3}, Case{"D8", 3}, Case{"Q8", 3}, Case{"E(3,2)", 4}, Case{"S3", 4},
                        Case{"A4", 5}, Case{"E(5,2)", 6}, Case{"D10", 6}, Case{"SD(5,4,2)", 6}, Case{"S4", 4}}) {
    auto g = parse_group_spec(c.spec);
    auto l = all_subgroups(g);
    auto r = sigma(g, l);
    ASSERT_TRUE(r.finite()) << c.spec;
    EXPECT_EQ(r.value, c.sigma) << c.spec;
    EXPECT_EQ(r.witness.size(), c.sigma);
    EXPECT_TRUE(is_cover(g, r.witness)) << c.spec;
    for (std::size_t i : r.witness_indices) EXPECT_TRUE(l.is_maximal(i));
  }
}

TEST(Sigma, CyclicAndCap) {
  auto c12 = build_cyclic(12);
  auto r = sigma(c12, all_subgroups(c12));
  EXPECT_EQ(r.status, SigmaResult::Status::NoCover);
  EXPECT_EQ(r.to_string(), "no-cover");
  EXPECT_TRUE(r.witness.empty());
  auto c1 = build_cyclic(1);
  EXPECT_EQ(sigma(c1, all_subgroups(c1)).to_string(), "no-cover");

  auto s3 = build_symmetric(3);
  auto capped = sigma(s3, all_subgroups(s3), 3);
  EXPECT_EQ(capped.status, SigmaResult::Status::ExceedsCap);
  EXPECT_EQ(capped.to_string(), "exceeds-cap");

  // sigma(A5) = 10; D14 has sigma 8 (one more than the prime 7).
  auto a5 = build_alternating(5);
  EXPECT_EQ(sigma(a5, all_subgroups(a5)).to_string(), "10");
  auto d14 = build_dihedral(14);
  EXPECT_EQ(sigma(d14, all_subgroups(d14)).to_string(), "8");
  auto d26 = build_dihedral(26);
  EXPECT_EQ(sigma(d26, all_subgroups(d26)).to_string(), "exceeds-cap");
}

TEST(Sigma, WitnessIsLexicographicallyLeast) {
  auto v4 = build_elementary_abelian(2, 2);
  auto l = all_subgroups(v4);
  auto r = sigma(v4, l);
  EXPECT_EQ(r.witness_indices, (std::vector<std::size_t>{1, 2, 3}));
  auto e8 = build_elementary_abelian(2, 3);
  auto le = all_subgroups(e8);
  auto re = sigma(e8, le);
  ASSERT_EQ(re.value, 3u);
  const auto maxes = le.maximal_indices();
  // The least triple of maximals that covers.
  std::vector<std::size_t> best;
  for (std::size_t a = 0; a < maxes.size() && best.empty(); ++a)
    for (std::size_t b = a + 1; b < maxes.size() && best.empty(); ++b)
      for (std::size_t c = b + 1; c < maxes.size() && best.empty(); ++c)
        if (is_cover(e8, {le[maxes[a]], le[maxes[b]], le[maxes[c]]})) best = {maxes[a], maxes[b], maxes[c]};
  EXPECT_EQ(re.witness_indices, best);
}

TEST(SigmaProperty, MaximalSearchMatchesAllSubgroupOracle) {
  for (const auto& g : catalog_groups(16)) {
    auto l = all_subgroups(g);
    auto r = sigma(g, l);
    auto expected = oracle::sigma_over_all_subgroups(g, oracle::subgroups_by_subset_scan(g), kDefaultSigmaCap);
    if (expected) {
      ASSERT_TRUE(r.finite()) << g.spec();
      EXPECT_EQ(r.value, *expected) << g.spec();
    } else {
      EXPECT_EQ(r.status, SigmaResult::Status::NoCover) << g.spec();
    }
  }
}

TEST(ThreeCoverProperty, MatchesOracle) {
  for (const auto& g : catalog_groups(16)) {
    auto l = all_subgroups(g);
    EXPECT_EQ(c3(g, l), oracle::three_covers(g, oracle::subgroups_by_subset_scan(g))) << g.spec();
  }
}

TEST(TripleCensus, Examples) {
  auto q8 = build_generalized_quaternion(8);
  auto lq = all_subgroups(q8);
  auto b = any_three_irredundant_cover(q8, lq);
  EXPECT_TRUE(b.holds);
  auto c = any_three_distinct_cover(q8, lq);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.counterexample.has_value());
  const auto& t = *c.counterexample;
  std::size_t maximal = 0;
  for (std::size_t i : t.indices) maximal += lq.is_maximal(i);
  EXPECT_EQ(maximal, 2u);
  EXPECT_EQ(t.members[0].members(), center(q8));

  auto v4 = build_elementary_abelian(2, 2);
  auto lv = all_subgroups(v4);
  EXPECT_TRUE(any_three_irredundant_cover(v4, lv).holds);
  EXPECT_TRUE(any_three_distinct_cover(v4, lv).holds);

  auto e8 = build_elementary_abelian(2, 3);
  auto be = any_three_irredundant_cover(e8, all_subgroups(e8));
  EXPECT_FALSE(be.holds);
  EXPECT_TRUE(be.counterexample.has_value());

  auto c4 = build_cyclic(4);
  auto cc = any_three_distinct_cover(c4, all_subgroups(c4));
  EXPECT_FALSE(cc.holds);
  EXPECT_FALSE(cc.any_candidate);
}

TEST(UniqueCover, Examples) {
  auto check = [](const GroupTable& g, bool expected) {
    auto d = unique_three_cover_equivalence(g, all_subgroups(g));
    EXPECT_EQ(d.unique_cover, expected) << g.spec();
    EXPECT_EQ(d.unique_klein_quotient, expected) << g.spec();
    EXPECT_EQ(d.klein_without_e8, expected) << g.spec();
    EXPECT_TRUE(d.consistent());
  };
  check(build_generalized_quaternion(8), true);
  check(build_elementary_abelian(2, 3), false);
  check(build_dihedral(12), true);
  check(build_symmetric(4), false);
  check(build_cyclic(8), false);
}

TEST(CorollaryE, Examples) {
  auto q8 = build_generalized_quaternion(8);
  auto r = corollary_e_check({q8, build_cyclic(3)});
  EXPECT_TRUE(r.prediction);
  EXPECT_TRUE(r.actual);
  auto cyc = corollary_e_check({build_cyclic(8), build_cyclic(3)});
  EXPECT_FALSE(cyc.prediction);
  EXPECT_FALSE(cyc.actual);
  auto odd = corollary_e_check({build_elementary_abelian(3, 2)});
  EXPECT_FALSE(odd.prediction);
  EXPECT_FALSE(odd.actual);
  auto e8 = corollary_e_check({build_elementary_abelian(2, 3), build_cyclic(5)});
  EXPECT_FALSE(e8.prediction);
  EXPECT_FALSE(e8.actual);
  EXPECT_TRUE(e8.agrees());

  EXPECT_THROW(corollary_e_check({build_cyclic(2), build_cyclic(4)}), PreconditionError);
  EXPECT_THROW(corollary_e_check({build_symmetric(3)}), PreconditionError);
  EXPECT_THROW(corollary_e_check({}), PreconditionError);
}

TEST(Hamiltonian, Detection) {
  auto q8 = build_generalized_quaternion(8);
  EXPECT_TRUE(is_hamiltonian(q8, all_subgroups(q8)));
  auto q8c3 = build_direct_product(q8, build_cyclic(3));
  EXPECT_TRUE(is_hamiltonian(q8c3, all_subgroups(q8c3)));
  auto q8c4 = build_direct_product(q8, build_cyclic(4));
  EXPECT_FALSE(is_hamiltonian(q8c4, all_subgroups(q8c4)));
  auto d8 = build_dihedral(8);
  EXPECT_FALSE(is_hamiltonian(d8, all_subgroups(d8)));
  auto v4 = build_elementary_abelian(2, 2);
  EXPECT_FALSE(is_hamiltonian(v4, all_subgroups(v4)));
  EXPECT_EQ(sylow_2_elements(q8c3).size(), 8u);
}

// Every 3-cover over the catalog is irredundant and its common intersection is a normal
// subgroup containing all squares, with Klein four quotient.
TEST(CoverStructureProperty, IntersectionIsKleinKernel) {
  for (const auto& g : catalog_groups(64)) {
    auto l = all_subgroups(g);
    const auto kernels = klein_kernels(g, l);
    for (const auto& t : enumerate_three_covers(g, l)) {
      SCOPED_TRACE(g.spec());
      EXPECT_TRUE(is_cover(g, {t.members[0], t.members[1], t.members[2]}));
      EXPECT_TRUE(is_irredundant_triple(t.members[0], t.members[1], t.members[2]));
      auto h = intersect(intersect(t.members[0], t.members[1]), t.members[2]);
      ASSERT_TRUE(is_normal(g, h));
      for (std::size_t x = 0; x < g.order(); ++x) EXPECT_TRUE(h.contains(g.mul(x, x)));
      EXPECT_TRUE(is_klein_four(quotient(g, h).quotient));
      EXPECT_EQ(index(g, h), 4u);
      const std::size_t pos = l.index_of(h);
      ASSERT_LT(pos, l.size());
      EXPECT_NE(std::find(kernels.begin(), kernels.end(), pos), kernels.end());
    }
  }
}

TEST(SigmaProperty, NeverOneTwoOrSeven) {
  for (const auto& g : catalog_groups(64)) {
    auto r = sigma(g, all_subgroups(g));
    if (!r.finite()) continue;
    EXPECT_NE(r.value, 1u) << g.spec();
    EXPECT_NE(r.value, 2u) << g.spec();
    EXPECT_NE(r.value, 7u) << g.spec();
    EXPECT_GE(r.value, 3u) << g.spec();
  }
}
