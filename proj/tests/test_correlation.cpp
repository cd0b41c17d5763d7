#include <gtest/gtest.h>

#include "isecode/correlation.hpp"

using namespace isecode;

TEST(CheckCorrelation, Examples) {
  const SpaceParams params(3, 2);
  const auto full = Family::full(params);
  const auto c = check_correlation(full, full, SymbolSet{1}, SymbolSet{2});
  EXPECT_EQ(c.lhs, 81);
  EXPECT_EQ(c.slack(), 0);

  const SpaceParams one(3, 1);
  const auto base = check_correlation(Family::from_text(one, {"1"}), Family::full(one), SymbolSet{1}, SymbolSet{2});
  EXPECT_EQ(base.lhs, 3);
  EXPECT_EQ(base.rhs, 3);
  EXPECT_EQ(base.slack(), 0);

  const auto none = check_correlation(Family::empty(params), full, SymbolSet{1}, SymbolSet{2});
  EXPECT_EQ(none.slack(), 0);
}

TEST(CheckCorrelation, RejectsIncompleteFamiliesWithAWitness) {
  const SpaceParams params(2, 2);
  try {
    check_correlation(Family::from_text(params, {"21"}), Family::full(params), SymbolSet{1}, SymbolSet{2});
    FAIL() << "expected refusal";
  } catch (const Refusal& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("21"), std::string::npos);
    EXPECT_NE(msg.find("11"), std::string::npos);
    EXPECT_NE(msg.find("position 1"), std::string::npos);
  }
  EXPECT_THROW(check_correlation(Family::full(params), Family::full(params), SymbolSet{1}, SymbolSet{1}),
               ParameterError);
}

TEST(RandomCompleteFamily, ExtremesAndDeterminism) {
  const SpaceParams params(3, 3);
  EXPECT_TRUE(random_complete_family(params, SymbolSet{1}, Rational(0), 1).is_empty());
  EXPECT_EQ(random_complete_family(params, SymbolSet{1}, Rational(1), 1), Family::full(params));
  const auto a = random_complete_family(params, SymbolSet{2}, Rational(1, 8), 77);
  const auto b = random_complete_family(params, SymbolSet{2}, Rational(1, 8), 77);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(is_P_complete(a, SymbolSet{2}));
}

TEST(ExhaustiveCorrelation, BaseCaseHolds) {
  for (unsigned s = 2; s <= 3; ++s)
    for (const auto& [p, q] : disjoint_pairs(s)) {
      const auto checks = exhaustive_correlation(s, p, q);
      ASSERT_FALSE(checks.empty());
      for (const auto& c : checks) ASSERT_GE(c.slack(), 0);
    }
  // s = 2, P = {1}, Q = {2}: up-sets and down-sets of one bit, 3 × 3 pairs.
  EXPECT_EQ(exhaustive_correlation(2, SymbolSet{1}, SymbolSet{2}).size(), 9u);
}

TEST(ExhaustiveCorrelation, DisjointPairsHaveSlackEqualToLhs) {
  for (const auto& c : exhaustive_correlation(3, SymbolSet{1}, SymbolSet{2}))
    if (c.rhs == 0) {
      ASSERT_EQ(c.slack(), c.lhs);
    }
}

TEST(SliceIdentity, Examples) {
  const SpaceParams params(3, 2);
  const auto one = closure_P(Family::from_text(params, {"21"}), SymbolSet{1});
  const auto rep = slice_identity_check(one, Family::full(params), SymbolSet{1}, SymbolSet{2});
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.f_sizes, (std::vector<std::uint64_t>{3, 0, 0}));

  const auto full = slice_identity_check(Family::full(params), Family::full(params), SymbolSet{1}, SymbolSet{2});
  EXPECT_TRUE(full.ok());
  EXPECT_EQ(full.f_sizes, (std::vector<std::uint64_t>{3, 3, 3}));
}

TEST(SliceIdentity, HoldsOnSeededCampaigns) {
  for (unsigned n = 2; n <= 4; ++n) {
    const SpaceParams params(3, n);
    for (const auto& [p, q] : disjoint_pairs(3)) {
      const auto rep = correlation_campaign(params, p, q, 100);
      ASSERT_EQ(rep.violations(), 0u) << "n=" << n << " P=" << to_string(p) << " Q=" << to_string(q);
      ASSERT_GE(rep.min_slack(), 0);
    }
  }
}

TEST(Campaign, ParallelRunMatchesSerial) {
  const SpaceParams params(3, 3);
  const auto a = correlation_campaign(params, SymbolSet{1}, SymbolSet{2, 3}, 60, 5, 1);
  const auto b = correlation_campaign(params, SymbolSet{1}, SymbolSet{2, 3}, 60, 5, 4);
  ASSERT_EQ(a.trials.size(), b.trials.size());
  for (std::size_t k = 0; k < a.trials.size(); ++k) {
    EXPECT_EQ(a.trials[k].seed, b.trials[k].seed);
    EXPECT_EQ(a.trials[k].check.lhs, b.trials[k].check.lhs);
    EXPECT_EQ(a.trials[k].check.rhs, b.trials[k].check.rhs);
  }
}

TEST(Campaign, DisjointPairEnumeration) {
  EXPECT_EQ(disjoint_pairs(2).size(), 2u);
  EXPECT_EQ(disjoint_pairs(3).size(), 12u);
}
