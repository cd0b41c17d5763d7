#include <gtest/gtest.h>

#include "isecode/constructions.hpp"
#include "isecode/extremal_search.hpp"
#include "isecode/measures.hpp"
#include "oracle.hpp"

using namespace isecode;

namespace {

std::vector<TVector> all_demands(unsigned s, unsigned n) {
  std::vector<TVector> out;
  std::vector<unsigned> t(s, 0);
  while (true) {
    if (TVector(t).sum() <= n) out.emplace_back(t);
    std::size_t k = 0;
    while (k < s && ++t[k] > n) t[k++] = 0;
    if (k == s) break;
  }
  return out;
}

std::vector<int> as_ints(const TVector& t) { return {t.t.begin(), t.t.end()}; }

}  // namespace

TEST(CompatGraph, Examples) {
  EXPECT_EQ(build_compat_graph(5, 3, {3, 0, 0}).vertex_count(), 51u);
  const auto full = build_compat_graph(3, 3, {0, 0, 0});
  EXPECT_EQ(full.vertex_count(), 27u);
  EXPECT_EQ(full.edge_count(), 27u * 26 / 2);
  EXPECT_EQ(build_compat_graph(2, 3, {1, 0, 0}).vertex_count(), 5u);
}

TEST(CompatGraph, VerticesAndEdgesFollowThePairCondition) {
  const SpaceParams params(3, 3);
  const TVector t{1, 1, 0};
  const auto g = build_compat_graph(3, 3, t);
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    const auto y = decode(g.word(a), params);
    ASSERT_TRUE(satisfies(y, y, t));
    for (std::size_t b = 0; b < g.vertex_count(); ++b)
      if (a != b) {
        ASSERT_EQ(g.adjacent(a, b), satisfies(y, decode(g.word(b), params), t));
      }
  }
}

TEST(MaxFamily, Examples) {
  EXPECT_EQ(max_family(2, 3, {1, 0, 0}).max_size, 3u);
  EXPECT_EQ(max_family(4, 2, {1, 1}).max_size, 4u);
  EXPECT_EQ(max_family(5, 3, {3, 0, 0}).max_size, 11u);
  EXPECT_EQ(max_family(3, 3, {0, 0, 0}).max_size, 27u);
}

TEST(MaxFamily, EmptyGraphGivesEmptyWitness) {
  const auto r = max_family(2, 3, {3, 0, 0});
  EXPECT_EQ(r.max_size, 0u);
  EXPECT_TRUE(r.witness.is_empty());
}

TEST(MaxFamily, MatchesBronKerboschOracleAndWitnessesAreValid) {
  for (unsigned s = 2; s <= 3; ++s)
    for (unsigned n = 1; n <= (s == 2 ? 5u : 3u); ++n)
      for (const auto& t : all_demands(s, n)) {
        const auto r = max_family(n, s, t);
        ASSERT_EQ(static_cast<int>(r.max_size), oracle::max_family(int(s), int(n), as_ints(t)))
            << "s=" << s << " n=" << n << " t=" << to_string(t);
        ASSERT_EQ(r.witness.size(), r.max_size);
        ASSERT_TRUE(is_t_intersecting(r.witness, t));
        ASSERT_FALSE(r.lower_bound_only);
      }
}

TEST(MaxFamily, ThreadCountDoesNotChangeTheResult) {
  for (const auto& [n, t] : std::vector<std::pair<unsigned, TVector>>{
           {5, {3, 0, 0}}, {4, {1, 1, 0}}, {5, {1, 1, 1}}, {4, {2, 0, 1}}}) {
    const auto one = max_family(n, 3, t, {.threads = 1});
    for (unsigned threads : {2u, 3u, 8u}) {
      const auto many = max_family(n, 3, t, {.threads = threads});
      ASSERT_EQ(many.max_size, one.max_size);
      ASSERT_EQ(many.witness, one.witness);
      ASSERT_EQ(many.nodes_explored, one.nodes_explored);
    }
  }
}

TEST(MaxFamily, ZeroTimeoutIsFlaggedAsLowerBound) {
  const auto r = max_family(6, 3, {1, 1, 0}, {.threads = 1, .timeout = std::chrono::milliseconds(0)});
  EXPECT_TRUE(r.lower_bound_only);
  EXPECT_TRUE(is_t_intersecting(r.witness, {1, 1, 0}));
  EXPECT_THROW(p_oracle(6, 3, {1, 1, 0}, {.threads = 1, .timeout = std::chrono::milliseconds(0)}), SearchTimeout);
}

TEST(MaxFamily, SeedWordRestrictsTheSearch) {
  const SpaceParams params(3, 2);
  // (1,1) is a vertex; every maximum family for t=(1,0,0), n=2 can contain it.
  const auto r = max_family(2, 3, {1, 0, 0}, {.seed_word = encode(parse_word("11", params))});
  EXPECT_TRUE(r.restricted);
  EXPECT_EQ(r.max_size, 3u);
  EXPECT_TRUE(r.witness.contains(parse_word("11", params)));
  // A non-vertex seed leaves nothing.
  EXPECT_EQ(max_family(2, 3, {1, 0, 0}, {.seed_word = encode(parse_word("22", params))}).max_size, 0u);
}

TEST(POracle, Examples) {
  EXPECT_EQ(p_oracle(2, 3, {1, 0, 0}), Rational(1, 3));
  EXPECT_EQ(p_oracle(3, 3, {0, 0, 0}), 1);
  EXPECT_EQ(p_oracle(3, 3, {1, 1, 0}), Rational(1, 9));
}

TEST(BestK, Examples) {
  const auto k = best_K(4, 1, 1);
  EXPECT_EQ(k.size, 4);
  EXPECT_EQ(k.x1, 3u);
  EXPECT_EQ(k.x2, 1u);
  for (unsigned t1 = 1; t1 <= 4; ++t1)
    for (unsigned t2 = 1; t2 <= 4; ++t2) {
      EXPECT_EQ(best_K(t1 + t2, t1, t2).size, 1);
      EXPECT_EQ(best_K(t1 + t2 + 1, t1, t2).size, 2);
    }
  EXPECT_THROW(best_K(15, 1, 1), ParameterError);
}

TEST(BestK, SizesMatchMaterialisedConstructions) {
  for (unsigned n = 2; n <= 9; ++n)
    for (unsigned t1 = 1; t1 <= 3; ++t1)
      for (unsigned t2 = 1; t1 + t2 <= n && t2 <= 3; ++t2) {
        const auto k = best_K(n, t1, t2);
        std::vector<unsigned> x1, x2;
        for (unsigned j = 1; j <= k.x1; ++j) x1.push_back(j);
        for (unsigned j = k.x1 + 1; j <= k.x1 + k.x2; ++j) x2.push_back(j);
        ASSERT_EQ(BigInt{construct_K(n, x1, x2, t1, t2).size()}, k.size);
      }
}

TEST(MaxFamily, NeverExceedsTheFixedCoordinateBound) {
  for (unsigned s = 2; s <= 3; ++s)
    for (unsigned n = 1; n <= 4; ++n)
      for (const auto& t : all_demands(s, n)) {
        if (std::any_of(t.t.begin(), t.t.end(), [&](unsigned x) { return x >= s; })) continue;
        ASSERT_EQ(BigInt{max_family(n, s, t).max_size}, bound_thm4(n, s, t));
      }
}
