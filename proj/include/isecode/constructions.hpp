#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "isecode/family.hpp"
#include "isecode/measures.hpp"

namespace isecode {

// Pairwise disjoint blocks X_1, ..., X_k of 1-based positions in [n].
class Partition {
public:
  Partition(unsigned n, std::vector<std::vector<unsigned>> blocks) : n_(n), blocks_(std::move(blocks)) {
    std::vector<bool> used(n + 1, false);
    for (const auto& block : blocks_)
      for (auto j : block) {
        if (j < 1 || j > n) throw ParameterError("block position " + std::to_string(j) + " outside [1, n]");
        if (used[j]) throw ParameterError("blocks overlap at position " + std::to_string(j));
        used[j] = true;
      }
  }

  unsigned n() const noexcept { return n_; }
  const std::vector<std::vector<unsigned>>& blocks() const noexcept { return blocks_; }
  const std::vector<unsigned>& block(std::size_t i) const { return blocks_.at(i); }

private:
  unsigned n_;
  std::vector<std::vector<unsigned>> blocks_;
};

namespace detail {
inline void require_positions(unsigned n, const std::vector<unsigned>& xs) {
  for (auto j : xs)
    if (j < 1 || j > n) throw ParameterError("position " + std::to_string(j) + " outside [1, n]");
  auto sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParameterError("repeated position in block");
}

// count >= (m + t) / 2 with exact comparison, i.e. 2·count >= m + t.
inline bool meets_majority(unsigned count, std::size_t m, unsigned t) { return 2ULL * count >= m + t; }
inline unsigned majority_threshold(std::size_t m, unsigned t) {
  return static_cast<unsigned>((m + t + 1) / 2);
}
}  // namespace detail

// True when t_i > |X_i| for some block, so K is empty.
inline bool k_threshold_unreachable(const std::vector<unsigned>& x1, const std::vector<unsigned>& x2,
                                    unsigned t1, unsigned t2) {
  return t1 > x1.size() || t2 > x2.size();
}

// K(X1, X2, t): binary words with at least (|X_i| + t_i)/2 positions of X_i
// carrying symbol i, for i = 1, 2.
inline Family construct_K(unsigned n, const std::vector<unsigned>& x1, const std::vector<unsigned>& x2,
                          unsigned t1, unsigned t2) {
  detail::require_positions(n, x1);
  detail::require_positions(n, x2);
  if (t1 < 1 || t2 < 1) throw ParameterError("K needs t1, t2 >= 1");
  const SpaceParams params(2, n);
  return Family::from_predicate(params, [&](std::span<const Symbol> y) {
    unsigned c1 = 0, c2 = 0;
    for (auto j : x1) c1 += y[j - 1] == 1;
    for (auto j : x2) c2 += y[j - 1] == 2;
    return detail::meets_majority(c1, x1.size(), t1) && detail::meets_majority(c2, x2.size(), t2);
  });
}

// Exact density of K for disjoint blocks of sizes n1, n2, from binomial tails;
// the ambient n does not matter.
inline Rational k_density_disjoint(unsigned n1, unsigned n2, unsigned t1, unsigned t2) {
  const Rational half{1, 2};
  return binomial_upper_tail(n1, detail::majority_threshold(n1, t1), half) *
         binomial_upper_tail(n2, detail::majority_threshold(n2, t2), half);
}

// L(X): words with at least (|X| + t)/2 positions of X carrying symbol 1.
inline Family construct_L(unsigned n, unsigned s, const std::vector<unsigned>& x, unsigned t) {
  detail::require_positions(n, x);
  if (t < 1 || t > x.size()) throw ParameterError("L needs 1 <= t <= |X|");
  const SpaceParams params(s, n);
  return Family::from_predicate(params, [&](std::span<const Symbol> y) {
    unsigned c = 0;
    for (auto j : x) c += y[j - 1] == 1;
    return detail::meets_majority(c, x.size(), t);
  });
}

// Exact density of L(X) without materialising it.
inline Rational l_density(unsigned s, std::size_t x_size, unsigned t) {
  return binomial_upper_tail(static_cast<unsigned>(x_size),
                             detail::majority_threshold(x_size, t), Rational{1, s});
}

// F_{t,r} = {A ⊆ [n] : |A ∩ [t+2r]| >= t+r}.
inline SetFamily construct_Ftr(unsigned n, unsigned t, unsigned r) {
  if (t + 2 * r > n)
    throw ParameterError("window t+2r = " + std::to_string(t + 2 * r) + " exceeds n = " + std::to_string(n));
  const std::uint64_t window = (std::uint64_t{1} << (t + 2 * r)) - 1;
  return SetFamily::from_predicate(
      n, [&](std::uint64_t a) { return static_cast<unsigned>(std::popcount(a & window)) >= t + r; });
}

// Words w with {j : w_j = i} ∈ S. Requires S upward-closed so that the
// result is {i}-complete.
inline Family lift(const SetFamily& sets, Symbol i, unsigned s) {
  if (!sets.is_upward_closed()) throw ParameterError("lift needs an upward-closed set family");
  const SpaceParams params(s, sets.n());
  if (i < 1 || i > s) throw ParameterError("lift symbol outside [1, s]");
  return Family::from_predicate(params, [&](std::span<const Symbol> y) {
    std::uint64_t mask = 0;
    for (unsigned j = 0; j < y.size(); ++j)
      if (y[j] == i) mask |= std::uint64_t{1} << j;
    return sets.contains(mask);
  });
}

struct ProductConstruction {
  Partition partition;
  std::vector<WSelection> selections;  // one per symbol; block i hosts F_{t_i, r_i}
  Family family;
};

// Block product: consecutive blocks |X_i| = t_i + 2r_i for i < s, X_s takes the
// rest; a word belongs when, for every i, at least t_i + r_i of the first
// t_i + 2r_i positions of X_i carry symbol i.
inline ProductConstruction construct_product(unsigned n, unsigned s, const TVector& t) {
  if (s < 3) throw Refusal("product construction needs s >= 3");
  detail::require_t_size(t, s);
  const unsigned need = capacity_needed(s, t);
  if (need > n)
    throw Refusal("capacity condition fails: windows need " + std::to_string(need) + " positions, n = " +
                  std::to_string(n) + " (deficit " + std::to_string(need - n) + ")");
  const SpaceParams params(s, n);

  std::vector<WSelection> selections;
  std::vector<std::vector<unsigned>> blocks(s);
  unsigned next = 1;
  for (unsigned i = 0; i < s; ++i) {
    selections.push_back(w(n, t[i], Rational{1, s}));
    const unsigned len = i + 1 < s ? selections.back().window() : n + 1 - next;
    for (unsigned k = 0; k < len; ++k) blocks[i].push_back(next++);
  }
  Partition partition(n, blocks);

  auto family = Family::from_predicate(params, [&](std::span<const Symbol> y) {
    for (unsigned i = 0; i < s; ++i) {
      const auto& sel = selections[i];
      const auto& block = partition.block(i);
      unsigned hits = 0;
      for (unsigned k = 0; k < sel.window(); ++k) hits += y[block[k] - 1] == i + 1;
      if (hits < sel.t + sel.r) return false;
    }
    return true;
  });
  return ProductConstruction{std::move(partition), std::move(selections), std::move(family)};
}

}  // namespace isecode
