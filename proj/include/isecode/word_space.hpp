#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isecode/errors.hpp"

namespace isecode {

using Symbol = std::uint32_t;
using WordIndex = std::uint64_t;

inline constexpr std::uint64_t kDefaultDenseCap = std::uint64_t{1} << 26;

// Upper limit on s^n for dense storage. ISECODE_DENSE_CAP may lower it.
inline std::uint64_t dense_cap() {
  if (const char* env = std::getenv("ISECODE_DENSE_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::uint64_t>(v, kDefaultDenseCap);
  }
  return kDefaultDenseCap;
}

class SpaceParams {
public:
  SpaceParams(unsigned s, unsigned n) : s_(s), n_(n) {
    if (s < 2) throw ParameterError("alphabet size s must be >= 2");
    if (n < 1) throw ParameterError("word length n must be >= 1");
    const auto cap = dense_cap();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (total > cap / s) throw Refusal("s^n = " + std::to_string(s) + "^" + std::to_string(n) +
                                         " exceeds the dense cap " + std::to_string(cap));
      total *= s;
    }
    word_count_ = total;
  }

  unsigned s() const noexcept { return s_; }
  unsigned n() const noexcept { return n_; }
  std::uint64_t word_count() const noexcept { return word_count_; }
  // s^i, the index stride of position i (0-based).
  std::uint64_t stride(unsigned pos) const noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < pos; ++i) r *= s_;
    return r;
  }

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;

private:
  unsigned s_;
  unsigned n_;
  std::uint64_t word_count_ = 0;
};

// The per-symbol demand (t_1, ..., t_s).
struct TVector {
  std::vector<unsigned> t;

  TVector() = default;
  explicit TVector(std::vector<unsigned> v) : t(std::move(v)) {}
  TVector(std::initializer_list<unsigned> v) : t(v) {}

  static TVector zeros(unsigned s) { return TVector(std::vector<unsigned>(s, 0)); }

  std::size_t size() const noexcept { return t.size(); }
  unsigned operator[](std::size_t i) const { return t[i]; }
  unsigned sum() const { return std::accumulate(t.begin(), t.end(), 0U); }
  bool all_zero() const {
    return std::all_of(t.begin(), t.end(), [](unsigned x) { return x == 0; });
  }
  // t_l for symbol l (1-based).
  unsigned demand(Symbol l) const { return t.at(l - 1); }

  friend bool operator==(const TVector&, const TVector&) = default;
};

inline std::string to_string(const TVector& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out;
}

// Subset of the alphabet, stored as a bitmask over symbols 1..s (s <= 64).
class SymbolSet {
public:
  SymbolSet() = default;
  SymbolSet(std::initializer_list<Symbol> members) {
    for (auto m : members) insert(m);
  }
  static SymbolSet from_mask(std::uint64_t mask) {
    SymbolSet r;
    r.mask_ = mask;
    return r;
  }
  // {lo, ..., hi}
  static SymbolSet range(Symbol lo, Symbol hi) {
    SymbolSet r;
    for (Symbol x = lo; x <= hi; ++x) r.insert(x);
    return r;
  }
  static SymbolSet all(unsigned s) { return range(1, s); }

  void insert(Symbol x) {
    if (x < 1 || x > 64) throw ParameterError("symbol out of range for SymbolSet: " + std::to_string(x));
    mask_ |= std::uint64_t{1} << (x - 1);
  }
  bool contains(Symbol x) const noexcept { return x >= 1 && x <= 64 && ((mask_ >> (x - 1)) & 1U); }
  bool empty() const noexcept { return mask_ == 0; }
  unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }
  std::uint64_t mask() const noexcept { return mask_; }
  bool disjoint(const SymbolSet& o) const noexcept { return (mask_ & o.mask_) == 0; }

  // Nonempty, proper subset of [s].
  bool is_proper_in(unsigned s) const noexcept {
    return !empty() && s <= 64 && (mask_ >> s) == 0 && size() < s;
  }

  std::vector<Symbol> members() const {
    std::vector<Symbol> out;
    for (Symbol x = 1; x <= 64; ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

private:
  std::uint64_t mask_ = 0;
};

inline std::string to_string(const SymbolSet& p) {
  std::string out = "{";
  bool first = true;
  for (auto x : p.members()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

inline void require_proper(const SymbolSet& p, unsigned s) {
  if (!p.is_proper_in(s))
    throw ParameterError("symbol set " + to_string(p) + " must be a nonempty proper subset of [" +
                         std::to_string(s) + "]");
}

class Word {
public:
  Word(const SpaceParams& params, std::vector<Symbol> symbols) : params_(params), symbols_(std::move(symbols)) {
    if (symbols_.size() != params_.n())
      throw ParameterError("word length " + std::to_string(symbols_.size()) + " != n = " +
                           std::to_string(params_.n()));
    for (auto x : symbols_)
      if (x < 1 || x > params_.s()) throw ParameterError("symbol " + std::to_string(x) + " outside [1, s]");
  }

  const SpaceParams& params() const noexcept { return params_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  // 1-based position access.
  Symbol at(unsigned pos) const { return symbols_.at(pos - 1); }
  unsigned size() const noexcept { return static_cast<unsigned>(symbols_.size()); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.params_ == b.params_ && a.symbols_ == b.symbols_;
  }

private:
  SpaceParams params_;
  std::vector<Symbol> symbols_;
};

// Agreement vector; 0 marks a disagreeing position.
struct MeetWord {
  std::vector<Symbol> entries;
  friend bool operator==(const MeetWord&, const MeetWord&) = default;
};

// counts[l-1] = number of meet coordinates equal to l.
struct IntersectionProfile {
  std::vector<unsigned> counts;
  unsigned operator[](Symbol l) const { return counts.at(l - 1); }
  friend bool operator==(const IntersectionProfile&, const IntersectionProfile&) = default;
};

namespace detail {
inline void require_same_space(const Word& y, const Word& z) {
  if (!(y.params() == z.params())) throw ParameterError("words come from different spaces");
}
inline void require_t_size(const TVector& t, unsigned s) {
  if (t.size() != s)
    throw ParameterError("t-vector has " + std::to_string(t.size()) + " entries, expected s = " +
                         std::to_string(s));
}
}  // namespace detail

inline MeetWord meet(const Word& y, const Word& z) {
  detail::require_same_space(y, z);
  MeetWord w;
  w.entries.resize(y.size());
  for (unsigned i = 0; i < y.size(); ++i)
    w.entries[i] = y.symbols()[i] == z.symbols()[i] ? y.symbols()[i] : 0;
  return w;
}

inline IntersectionProfile profile(const Word& y, const Word& z) {
  const auto w = meet(y, z);
  IntersectionProfile p;
  p.counts.assign(y.params().s(), 0);
  for (auto e : w.entries)
    if (e) ++p.counts[e - 1];
  return p;
}

inline bool dominates(const IntersectionProfile& p, const TVector& t) {
  for (std::size_t l = 0; l < t.size(); ++l)
    if (p.counts[l] < t[l]) return false;
  return true;
}

inline bool satisfies(const Word& y, const Word& z, const TVector& t) {
  detail::require_t_size(t, y.params().s());
  return dominates(profile(y, z), t);
}

// x <_P y: every coordinate where x carries a symbol of P is kept in y.
inline bool leq_P(const Word& x, const Word& y, const SymbolSet& p) {
  detail::require_same_space(x, y);
  require_proper(p, x.params().s());
  for (unsigned i = 0; i < x.size(); ++i) {
    const auto xi = x.symbols()[i];
    if (xi != y.symbols()[i] && p.contains(xi)) return false;
  }
  return true;
}

// Little-endian: position 1 is the least significant base-s digit.
inline WordIndex encode(const Word& w) {
  WordIndex idx = 0;
  for (unsigned i = w.size(); i-- > 0;) idx = idx * w.params().s() + (w.symbols()[i] - 1);
  return idx;
}

inline Word decode(WordIndex idx, const SpaceParams& params) {
  if (idx >= params.word_count())
    throw ParameterError("word index " + std::to_string(idx) + " out of range [0, " +
                         std::to_string(params.word_count()) + ")");
  std::vector<Symbol> symbols(params.n());
  for (unsigned i = 0; i < params.n(); ++i) {
    symbols[i] = static_cast<Symbol>(idx % params.s()) + 1;
    idx /= params.s();
  }
  return Word(params, std::move(symbols));
}

// Digit-string exchange form, e.g. "1231"; only for s <= 9.
inline std::string to_text(const Word& w) {
  if (w.params().s() > 9) throw ParameterError("digit-string form requires s <= 9");
  std::string out;
  out.reserve(w.size());
  for (auto x : w.symbols()) out += static_cast<char>('0' + x);
  return out;
}

inline Word parse_word(std::string_view text, const SpaceParams& params) {
  if (params.s() > 9) throw ParameterError("digit-string form requires s <= 9");
  if (text.size() != params.n())
    throw ParameterError("word '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                         ", expected " + std::to_string(params.n()));
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > static_cast<char>('0' + params.s()))
      throw ParameterError("word '" + std::string(text) + "' has a symbol outside [1, " +
                           std::to_string(params.s()) + "]");
    symbols.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(params, std::move(symbols));
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  if (w.params().s() <= 9) return os << to_text(w);
  os << '(';
  for (unsigned i = 0; i < w.size(); ++i) os << (i ? "," : "") << w.symbols()[i];
  return os << ')';
}

// Per-symbol position masks of a word, bit j-1 set when y_j = l. Used by the
// hot loops (n <= 64 always holds under the dense cap).
inline std::vector<std::uint64_t> position_masks(WordIndex idx, const SpaceParams& params) {
  std::vector<std::uint64_t> masks(params.s(), 0);
  for (unsigned j = 0; j < params.n(); ++j) {
    masks[idx % params.s()] |= std::uint64_t{1} << j;
    idx /= params.s();
  }
  return masks;
}

}  // namespace isecode
