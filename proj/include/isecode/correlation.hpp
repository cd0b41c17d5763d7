#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "isecode/family.hpp"

namespace isecode {

// |F|·|G| against s^n·|F∩G| for a P-complete F and a Q-complete G.
struct CorrelationCheck {
  unsigned s = 0;
  unsigned n = 0;
  SymbolSet p;
  SymbolSet q;
  std::int64_t lhs = 0;  // |F|·|G|
  std::int64_t rhs = 0;  // s^n·|F∩G|
  std::int64_t slack() const noexcept { return lhs - rhs; }
};

namespace detail {
inline void require_complete(const Family& f, const SymbolSet& p, const char* name) {
  if (auto v = find_completeness_violation(f, p)) {
    const auto& params = f.params();
    throw Refusal(std::string(name) + " is not " + to_string(p) + "-complete: " + name + " contains " +
                  to_text(decode(v->x, params)) + " but not " + to_text(decode(v->y, params)) +
                  " (changed at position " + std::to_string(v->position) + ")");
  }
}
inline void require_disjoint_pair(const SymbolSet& p, const SymbolSet& q, unsigned s) {
  require_proper(p, s);
  require_proper(q, s);
  if (!p.disjoint(q)) throw ParameterError("P and Q must be disjoint");
}
}  // namespace detail

inline CorrelationCheck check_correlation(const Family& f, const Family& g, const SymbolSet& p,
                                          const SymbolSet& q) {
  detail::require_same_space(f, g);
  const auto& params = f.params();
  detail::require_disjoint_pair(p, q, params.s());
  detail::require_complete(f, p, "F");
  detail::require_complete(g, q, "G");
  CorrelationCheck c;
  c.s = params.s();
  c.n = params.n();
  c.p = p;
  c.q = q;
  c.lhs = static_cast<std::int64_t>(f.size()) * static_cast<std::int64_t>(g.size());
  c.rhs = static_cast<std::int64_t>(params.word_count()) *
          static_cast<std::int64_t>(f.bits().intersection_count(g.bits()));
  return c;
}

// Each word kept independently with probability rho, then closed under P.
inline Family random_complete_family(const SpaceParams& params, const SymbolSet& p, const Rational& rho,
                                     std::uint64_t seed) {
  if (rho < 0 || rho > 1) throw ParameterError("seed density outside [0, 1]");
  const BigInt num_big = boost::multiprecision::numerator(rho);
  const BigInt den_big = boost::multiprecision::denominator(rho);
  if (den_big > std::numeric_limits<std::uint64_t>::max()) throw ParameterError("seed density denominator too large");
  const auto num = num_big.convert_to<std::uint64_t>();
  const auto den = den_big.convert_to<std::uint64_t>();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, den - 1);
  DenseBits bits(params.word_count());
  for (WordIndex idx = 0; idx < params.word_count(); ++idx)
    if (dist(rng) < num) bits.set(idx);
  return closure_P(Family(params, std::move(bits)), p);
}

// n = 1: every P-complete F ⊆ [s] against every Q-complete G ⊆ [s].
inline std::vector<CorrelationCheck> exhaustive_correlation(unsigned s, const SymbolSet& p, const SymbolSet& q) {
  if (s > 16) throw ParameterError("exhaustive n = 1 enumeration needs s <= 16");
  const SpaceParams params(s, 1);
  detail::require_disjoint_pair(p, q, s);
  std::vector<Family> fs, gs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    DenseBits bits(s);
    for (unsigned k = 0; k < s; ++k)
      if ((mask >> k) & 1U) bits.set(k);
    Family fam(params, std::move(bits));
    if (is_P_complete(fam, p)) fs.push_back(fam);
    if (is_P_complete(fam, q)) gs.push_back(fam);
  }
  std::vector<CorrelationCheck> out;
  for (const auto& f : fs)
    for (const auto& g : gs) out.push_back(check_correlation(f, g, p, q));
  return out;
}

// The slice facts used in the induction step, checked on real data.
struct SliceReport {
  std::vector<std::uint64_t> f_sizes;  // f_i = |F_i|
  std::vector<std::uint64_t> g_sizes;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

inline SliceReport slice_identity_check(const Family& f, const Family& g, const SymbolSet& p, const SymbolSet& q) {
  detail::require_same_space(f, g);
  const auto& params = f.params();
  if (params.n() < 2) throw ParameterError("slice check needs n >= 2");
  detail::require_disjoint_pair(p, q, params.s());
  detail::require_complete(f, p, "F");
  detail::require_complete(g, q, "G");

  SliceReport rep;
  for (Symbol i = 1; i <= params.s(); ++i) {
    rep.f_sizes.push_back(slice(f, i).size());
    rep.g_sizes.push_back(slice(g, i).size());
  }
  // Common value over symbols outside the set; -1 if that value is not common.
  auto common = [&](const std::vector<std::uint64_t>& sizes, const SymbolSet& set, const char* name) {
    std::optional<std::uint64_t> value;
    for (Symbol i = 1; i <= params.s(); ++i) {
      if (set.contains(i)) continue;
      if (!value) value = sizes[i - 1];
      else if (*value != sizes[i - 1])
        rep.violations.push_back(std::string(name) + "-slices outside " + to_string(set) + " differ: " + name +
                                 "_" + std::to_string(i) + " = " + std::to_string(sizes[i - 1]) + " vs " +
                                 std::to_string(*value));
    }
    // Slices outside the set sit below every other slice.
    for (Symbol i = 1; i <= params.s(); ++i)
      if (set.contains(i) && value && sizes[i - 1] < *value)
        rep.violations.push_back(std::string(name) + "_" + std::to_string(i) + " = " + std::to_string(sizes[i - 1]) +
                                 " is below the common value " + std::to_string(*value));
    return value.value_or(0);
  };
  const auto fc = static_cast<std::int64_t>(common(rep.f_sizes, p, "f"));
  const auto gc = static_cast<std::int64_t>(common(rep.g_sizes, q, "g"));
  for (Symbol i = 1; i <= params.s(); ++i) {
    const auto df = static_cast<std::int64_t>(rep.f_sizes[i - 1]) - fc;
    const auto dg = static_cast<std::int64_t>(rep.g_sizes[i - 1]) - gc;
    if (df * dg != 0)
      rep.violations.push_back("(f_" + std::to_string(i) + " - f)(g_" + std::to_string(i) + " - g) = " +
                               std::to_string(df * dg) + " != 0");
  }
  return rep;
}

// Seeded trial campaign. Trial k uses seed base_seed + k and seed density
// 1/8, 1/4, 1/2 in rotation.
struct Trial {
  std::uint64_t seed = 0;
  Rational rho;
  CorrelationCheck check;
  bool slices_ok = true;
};

struct CampaignReport {
  unsigned s = 0;
  unsigned n = 0;
  SymbolSet p;
  SymbolSet q;
  std::vector<Trial> trials;  // sorted by seed
  std::int64_t min_slack() const {
    std::int64_t m = std::numeric_limits<std::int64_t>::max();
    for (const auto& tr : trials) m = std::min(m, tr.check.slack());
    return m;
  }
  std::size_t violations() const {
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const Trial& tr) {
      return tr.check.slack() < 0 || !tr.slices_ok;
    }));
  }
};

inline constexpr std::uint64_t kDefaultSeedBase = 20'240'601;

inline const std::vector<Rational>& default_seed_densities() {
  static const std::vector<Rational> rhos{Rational{1, 8}, Rational{1, 4}, Rational{1, 2}};
  return rhos;
}

// The G family of a trial is drawn from a stream decorrelated from F's.
inline std::uint64_t partner_seed(std::uint64_t seed) { return seed ^ 0x9E3779B97F4A7C15ULL; }

inline CampaignReport correlation_campaign(const SpaceParams& params, const SymbolSet& p, const SymbolSet& q,
                                           std::size_t trials, std::uint64_t base_seed = kDefaultSeedBase,
                                           unsigned threads = 1) {
  detail::require_disjoint_pair(p, q, params.s());
  CampaignReport rep;
  rep.s = params.s();
  rep.n = params.n();
  rep.p = p;
  rep.q = q;
  rep.trials.resize(trials);
  const auto& rhos = default_seed_densities();
  auto run = [&](std::size_t k) {
    Trial& tr = rep.trials[k];
    tr.seed = base_seed + k;
    tr.rho = rhos[k % rhos.size()];
    const auto f = random_complete_family(params, p, tr.rho, tr.seed);
    const auto g = random_complete_family(params, q, tr.rho, partner_seed(tr.seed));
    tr.check = check_correlation(f, g, p, q);
    if (params.n() >= 2) tr.slices_ok = slice_identity_check(f, g, p, q).ok();
  };
  if (threads <= 1) {
    for (std::size_t k = 0; k < trials; ++k) run(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < trials; k += threads) run(k);
      });
    for (auto& th : pool) th.join();
  }
  return rep;
}

// Ordered pairs (P, Q) of disjoint nonempty proper subsets of [s].
inline std::vector<std::pair<SymbolSet, SymbolSet>> disjoint_pairs(unsigned s) {
  std::vector<std::pair<SymbolSet, SymbolSet>> out;
  const std::uint64_t full = (std::uint64_t{1} << s) - 1;
  for (std::uint64_t a = 1; a < full; ++a)
    for (std::uint64_t b = 1; b < full; ++b)
      if ((a & b) == 0) out.emplace_back(SymbolSet::from_mask(a), SymbolSet::from_mask(b));
  return out;
}

}  // namespace isecode
