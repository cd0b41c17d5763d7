#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "isecode/family.hpp"
#include "isecode/rational.hpp"
#include "isecode/word_space.hpp"

namespace isecode {

namespace detail {
inline void require_probability(const Rational& p) {
  if (p < 0 || p > 1) throw ParameterError("p = " + to_string(p) + " outside [0, 1]");
}
}  // namespace detail

// P(Bin(m, p) >= k), exact.
inline Rational binomial_upper_tail(unsigned m, unsigned k, const Rational& p) {
  detail::require_probability(p);
  Rational sum{0};
  const Rational q = 1 - p;
  for (unsigned j = k; j <= m; ++j) sum += Rational{binomial(m, j)} * rpow(p, j) * rpow(q, m - j);
  return sum;
}

// μ_p(S) = Σ_{A∈S} p^|A| (1-p)^{n-|A|}.
inline Rational mu_p(const SetFamily& family, const Rational& p) {
  detail::require_probability(p);
  std::vector<std::uint64_t> by_size(family.n() + 1, 0);
  family.bits().for_each([&](std::size_t a) { ++by_size[std::popcount(static_cast<std::uint64_t>(a))]; });
  Rational sum{0};
  const Rational q = 1 - p;
  for (unsigned k = 0; k <= family.n(); ++k)
    if (by_size[k]) sum += Rational{BigInt{by_size[k]}} * rpow(p, k) * rpow(q, family.n() - k);
  return sum;
}

// μ_p of the window-threshold family {A : |A ∩ [t+2r]| >= t+r}; coordinates
// outside the window carry total weight 1 and drop out.
inline Rational mu_p_window(unsigned t, unsigned r, const Rational& p) {
  return binomial_upper_tail(t + 2 * r, t + r, p);
}

inline unsigned r_star(unsigned n, unsigned t) {
  if (n < t) throw ParameterError("r* needs n >= t");
  return (n - t) / 2;
}

struct WSelection {
  unsigned t = 0;
  Rational p;
  unsigned r = 0;
  unsigned r_star = 0;
  Rational value;

  unsigned window() const noexcept { return t + 2 * r; }
};

// Maximum μ_p-measure of a t-intersecting family on [n], as the piecewise
// choice of window F_{t,r}. On an interval boundary the smaller r wins.
// t = 0 gives 1 and t = 1 gives p (the star {A ∋ 1}).
inline WSelection w(unsigned n, unsigned t, const Rational& p) {
  if (p <= 0 || p > Rational{1, 2}) throw ParameterError("w(n,t,p) needs p in (0, 1/2], got " + to_string(p));
  WSelection sel;
  sel.t = t;
  sel.p = p;
  sel.r_star = r_star(n, t);
  if (t <= 1) {
    sel.r = 0;
    sel.value = t == 0 ? Rational{1} : p;
    return sel;
  }
  bool chosen = false;
  for (unsigned r = 0; r < sel.r_star; ++r) {
    const Rational lo{r, t + 2 * r - 1};
    const Rational hi{r + 1, t + 2 * r + 1};
    if (lo <= p && p <= hi) {
      sel.r = r;
      chosen = true;
      break;
    }
  }
  if (!chosen) {
    // Every p in (0, 1/2] falls in some interval or in this tail branch.
    sel.r = sel.r_star;
  }
  sel.value = mu_p_window(t, sel.r, p);
  return sel;
}

// Smallest window m with t + 2r <= m for the r selected by w(·, t, 1/s):
// t + 2·max(0, ⌈(t-s+1)/(s-2)⌉).
inline unsigned eq9_window(unsigned t, unsigned s) {
  if (s < 3) throw ParameterError("window formula needs s >= 3");
  const long long num = static_cast<long long>(t) - static_cast<long long>(s) + 1;
  const long long den = static_cast<long long>(s) - 2;
  long long ceil = num >= 0 ? (num + den - 1) / den : -((-num) / den);
  if (ceil < 0) ceil = 0;
  return t + 2 * static_cast<unsigned>(ceil);
}

// s^{n - Σt}, asserted only when every t_i < s.
inline BigInt bound_thm4(unsigned n, unsigned s, const TVector& t) {
  detail::require_t_size(t, s);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= s)
      throw Refusal("fixed-coordinate bound needs every t_i < s (t_" + std::to_string(i + 1) + " = " +
                    std::to_string(t[i]) + ")");
  if (t.sum() > n) throw Refusal("sum of t exceeds n");
  return ipow(BigInt{s}, n - t.sum());
}

struct ProductBound {
  Rational density;  // Π_i w(n, t_i, 1/s)
  BigInt words;      // s^n · density
  std::vector<WSelection> factors;
};

inline unsigned capacity_needed(unsigned s, const TVector& t) {
  unsigned need = 0;
  for (std::size_t i = 0; i < t.size(); ++i) need += eq9_window(t[i], s);
  return need;
}

inline ProductBound bound_thm7(unsigned n, unsigned s, const TVector& t) {
  if (s < 3) throw Refusal("product formula needs s >= 3");
  detail::require_t_size(t, s);
  const unsigned need = capacity_needed(s, t);
  if (need > n)
    throw Refusal("capacity condition fails: windows need " + std::to_string(need) + " positions, n = " +
                  std::to_string(n) + " (deficit " + std::to_string(need - n) + ")");
  ProductBound out;
  out.density = 1;
  const Rational p{1, s};
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.factors.push_back(w(n, t[i], p));
    out.density *= out.factors.back().value;
  }
  const Rational words = out.density * Rational{ipow(BigInt{s}, n)};
  if (boost::multiprecision::denominator(words) != 1) throw std::logic_error("s^n · product is not integral");
  out.words = boost::multiprecision::numerator(words);
  return out;
}

}  // namespace isecode
