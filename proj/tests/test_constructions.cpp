#include <gtest/gtest.h>

#include <cmath>

#include "isecode/constructions.hpp"
#include "oracle.hpp"

using namespace isecode;

TEST(ConstructK, Examples) {
  const auto k = construct_K(4, {1, 2, 3}, {4}, 1, 1);
  EXPECT_EQ(k.size(), 4u);
  EXPECT_EQ(density(k), Rational(1, 4));
  const auto single = construct_K(2, {1}, {2}, 1, 1);
  EXPECT_EQ(single, Family::from_text(SpaceParams(2, 2), {"12"}));
}

TEST(ConstructK, ThresholdAboveBlockGivesEmptyFamily) {
  EXPECT_TRUE(k_threshold_unreachable({1}, {2, 3}, 2, 1));
  EXPECT_TRUE(construct_K(3, {1}, {2, 3}, 2, 1).is_empty());
}

TEST(ConstructK, DisjointBlocksAreIntersectingAndBelowAQuarter) {
  for (unsigned n = 2; n <= 10; ++n)
    for (unsigned n1 = 1; n1 < n; ++n1)
      for (unsigned n2 = 1; n1 + n2 <= n; ++n2)
        for (unsigned t1 = 1; t1 <= std::min(n1, 3u); ++t1)
          for (unsigned t2 = 1; t2 <= std::min(n2, 3u); ++t2) {
            std::vector<unsigned> x1, x2;
            for (unsigned j = 1; j <= n1; ++j) x1.push_back(j);
            for (unsigned j = n1 + 1; j <= n1 + n2; ++j) x2.push_back(j);
            const auto k = construct_K(n, x1, x2, t1, t2);
            ASSERT_TRUE(is_t_intersecting(k, {t1, t2}));
            ASSERT_LE(density(k), Rational(1, 4));
            ASSERT_EQ(density(k), k_density_disjoint(n1, n2, t1, t2));
          }
}

TEST(ConstructK, OddBlocksCoveringGroundSetGiveExactlyAQuarter) {
  for (unsigned n1 = 1; n1 <= 9; n1 += 2)
    for (unsigned n2 = 1; n1 + n2 <= 12; n2 += 2) {
      std::vector<unsigned> x1, x2;
      for (unsigned j = 1; j <= n1; ++j) x1.push_back(j);
      for (unsigned j = n1 + 1; j <= n1 + n2; ++j) x2.push_back(j);
      ASSERT_EQ(density(construct_K(n1 + n2, x1, x2, 1, 1)), Rational(1, 4));
    }
}

TEST(ConstructK, LargeBlocksApproachAQuarter) {
  const auto d = k_density_disjoint(100, 100, 2, 2);
  EXPECT_GE(d, Rational(1, 5));
  EXPECT_LE(d, Rational(1, 4));
}

TEST(ConstructL, Examples) {
  const auto single = construct_L(3, 3, {1}, 1);
  EXPECT_EQ(single.size(), 9u);
  EXPECT_EQ(density(single), Rational(1, 3));
  // Frozen from enumerating all 27 words and counting those with >= 2 ones.
  std::size_t brute = 0;
  for (const auto& y : oracle::all_words(3, 3)) brute += std::count(y.begin(), y.end(), 1) >= 2;
  EXPECT_EQ(brute, 7u);
  const auto majority = construct_L(3, 3, {1, 2, 3}, 1);
  EXPECT_EQ(majority.size(), 7u);
  EXPECT_TRUE(is_t_intersecting(majority, {1, 0, 0}));
}

TEST(ConstructL, IsSingleSymbolIntersectingAndComplete) {
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned xs = 1; xs <= n; ++xs)
      for (unsigned t = 1; t <= xs; ++t) {
        std::vector<unsigned> x;
        for (unsigned j = 1; j <= xs; ++j) x.push_back(j);
        const auto l = construct_L(n, 3, x, t);
        ASSERT_TRUE(is_t_intersecting(l, {t, 0, 0}));
        ASSERT_TRUE(is_P_complete(l, SymbolSet{1}));
        ASSERT_EQ(density(l), l_density(3, xs, t));
      }
}

TEST(ConstructL, WideBlocksFallUnderTheConcentrationBound) {
  // |X| = n = 20, s = 3, ε = 2/3 - 1/2.
  const double eps = 2.0 / 3.0 - 0.5;
  const double bound = std::exp(-2.0 * eps * eps * 20 / 9.0);
  EXPECT_LT(to_double(l_density(3, 20, 1)), bound);
}

TEST(ConstructFtr, Examples) {
  EXPECT_EQ(construct_Ftr(3, 2, 0), SetFamily::from_sets(3, {{1, 2}, {1, 2, 3}}));
  EXPECT_EQ(construct_Ftr(3, 1, 1).size(), 4u);
  for (unsigned t = 0; t <= 4; ++t) {
    const auto f = construct_Ftr(5, t, 0);
    const std::uint64_t prefix = (std::uint64_t{1} << t) - 1;
    EXPECT_EQ(f, SetFamily::from_predicate(5, [&](std::uint64_t a) { return (a & prefix) == prefix; }));
  }
  EXPECT_THROW(construct_Ftr(3, 2, 1), ParameterError);
}

TEST(ConstructFtr, UpwardClosedAndTIntersecting) {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned t = 1; t <= n; ++t)
      for (unsigned r = 0; t + 2 * r <= n; ++r) {
        const auto f = construct_Ftr(n, t, r);
        ASSERT_TRUE(f.is_upward_closed());
        // As binary words, t-intersecting in symbol 1.
        ASSERT_TRUE(is_t_intersecting(lift(f, 1, 2), {t, 0}));
      }
}

TEST(Lift, Examples) {
  const auto star = SetFamily::from_sets(2, {{1}, {1, 2}});
  const auto l = lift(star, 1, 3);
  EXPECT_EQ(l.size(), 3u);
  EXPECT_EQ(l, Family::from_predicate(SpaceParams(3, 2), [](std::span<const Symbol> y) { return y[0] == 1; }));
  EXPECT_EQ(lift(construct_Ftr(2, 2, 0), 2, 3), Family::from_text(SpaceParams(3, 2), {"22"}));
  EXPECT_THROW(lift(SetFamily::from_sets(2, {{1}}), 1, 3), ParameterError);
}

TEST(Lift, IsCompleteAndProjectsBack) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned t = 0; t <= n; ++t)
      for (unsigned r = 0; t + 2 * r <= n; ++r)
        for (unsigned s = 2; s <= 4; ++s)
          for (Symbol i = 1; i <= s; ++i) {
            if (std::pow(s, n) > 5000) continue;
            const auto f = construct_Ftr(n, t, r);
            const auto l = lift(f, i, s);
            ASSERT_TRUE(is_P_complete(l, SymbolSet{i}));
            ASSERT_EQ(project(l, i), f);
            ASSERT_EQ(density(l), mu_p(f, Rational(1, s)));
          }
}

TEST(ConstructProduct, Examples) {
  const auto a = construct_product(3, 3, {1, 1, 0});
  EXPECT_EQ(a.family, Family::from_predicate(SpaceParams(3, 3), [](std::span<const Symbol> y) {
              return y[0] == 1 && y[1] == 2;
            }));
  EXPECT_EQ(density(a.family), Rational(1, 9));

  const auto b = construct_product(5, 3, {3, 0, 0});
  EXPECT_EQ(b.family.size(), 11u);
  EXPECT_EQ(density(b.family), Rational(11, 243));
  EXPECT_EQ(b.partition.block(0).size(), 5u);

  EXPECT_EQ(construct_product(4, 3, {0, 0, 0}).family, Family::full(SpaceParams(3, 4)));
}

TEST(ConstructProduct, RefusesWhenCapacityFails) {
  try {
    construct_product(2, 3, {3, 0, 0});
    FAIL() << "expected refusal";
  } catch (const Refusal& e) {
    EXPECT_NE(std::string(e.what()).find("deficit 3"), std::string::npos);
  }
  EXPECT_THROW(construct_product(4, 2, {1, 1}), Refusal);
}

TEST(ConstructProduct, DensityEqualsTheProductOfWindowMeasures) {
  for (unsigned s = 3; s <= 4; ++s)
    for (unsigned n = 1; n <= (s == 3 ? 7u : 5u); ++n)
      for (unsigned a = 0; a <= n; ++a)
        for (unsigned b = 0; a + b <= n; ++b)
          for (unsigned c = 0; a + b + c <= n; ++c) {
            TVector t(std::vector<unsigned>(s, 0));
            t.t[0] = a;
            t.t[1] = b;
            t.t[2] = c;
            if (capacity_needed(s, t) > n) continue;
            const auto pc = construct_product(n, s, t);
            ASSERT_EQ(density(pc.family), bound_thm7(n, s, t).density) << n << ' ' << to_string(t);
            ASSERT_TRUE(is_t_intersecting(pc.family, t)) << n << ' ' << to_string(t);
          }
}
