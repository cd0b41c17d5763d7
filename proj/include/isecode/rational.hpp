#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "isecode/errors.hpp"

namespace isecode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Rational rpow(const Rational& base, unsigned exp) {
  Rational r{1};
  Rational b = base;
  while (exp) {
    if (exp & 1U) r *= b;
    b *= b;
    exp >>= 1U;
  }
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Machine formats always carry the slash: "3/1", "0/1".
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational{BigInt{std::string(text)}};
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw ParameterError("zero denominator in rational '" + std::string(text) + "'");
    return Rational{num, den};
  } catch (const std::runtime_error&) {
    throw ParameterError("malformed rational '" + std::string(text) + "'");
  }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace isecode
