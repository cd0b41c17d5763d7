#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "isecode/bits.hpp"
#include "isecode/rational.hpp"
#include "isecode/word_space.hpp"

namespace isecode {

// Dense family F ⊆ [s]^n: one membership bit per word index.
class Family {
public:
  explicit Family(const SpaceParams& params) : params_(params), bits_(params.word_count()) {}
  Family(const SpaceParams& params, DenseBits bits) : params_(params), bits_(std::move(bits)) {
    if (bits_.size() != params_.word_count()) throw ParameterError("membership bitset has the wrong length");
    size_ = bits_.count();
  }

  static Family empty(const SpaceParams& params) { return Family(params); }
  static Family full(const SpaceParams& params) { return Family(params, DenseBits(params.word_count(), true)); }

  static Family from_indices(const SpaceParams& params, std::span<const WordIndex> indices) {
    DenseBits bits(params.word_count());
    for (auto idx : indices) {
      if (idx >= params.word_count()) throw ParameterError("word index out of range");
      bits.set(idx);
    }
    return Family(params, std::move(bits));
  }
  static Family from_words(const SpaceParams& params, std::span<const Word> words) {
    DenseBits bits(params.word_count());
    for (const auto& w : words) {
      if (!(w.params() == params)) throw ParameterError("word from a different space");
      bits.set(encode(w));
    }
    return Family(params, std::move(bits));
  }
  // Words given in digit-string form.
  static Family from_text(const SpaceParams& params, std::initializer_list<std::string_view> words) {
    DenseBits bits(params.word_count());
    for (auto w : words) bits.set(encode(parse_word(w, params)));
    return Family(params, std::move(bits));
  }
  // Membership decided by `pred(symbols)` over 1-based symbol vectors.
  static Family from_predicate(const SpaceParams& params,
                               const std::function<bool(std::span<const Symbol>)>& pred) {
    DenseBits bits(params.word_count());
    std::vector<Symbol> digits(params.n(), 1);
    for (WordIndex idx = 0; idx < params.word_count(); ++idx) {
      if (pred(digits)) bits.set(idx);
      for (unsigned j = 0; j < params.n(); ++j) {
        if (++digits[j] <= params.s()) break;
        digits[j] = 1;
      }
    }
    return Family(params, std::move(bits));
  }

  const SpaceParams& params() const noexcept { return params_; }
  const DenseBits& bits() const noexcept { return bits_; }
  std::uint64_t size() const noexcept { return size_; }
  bool is_empty() const noexcept { return size_ == 0; }

  bool contains(WordIndex idx) const { return idx < bits_.size() && bits_.test(idx); }
  bool contains(const Word& w) const { return w.params() == params_ && bits_.test(encode(w)); }

  std::vector<WordIndex> members() const {
    std::vector<WordIndex> out;
    out.reserve(size_);
    bits_.for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(const Family& o) const { return params_ == o.params_ && bits_.is_subset_of(o.bits_); }

  friend bool operator==(const Family& a, const Family& b) {
    return a.params_ == b.params_ && a.bits_ == b.bits_;
  }

private:
  SpaceParams params_;
  DenseBits bits_;
  std::uint64_t size_ = 0;
};

// Family of subsets of [n]; subset A is stored at index Σ_{j∈A} 2^{j-1}.
class SetFamily {
public:
  explicit SetFamily(unsigned n) : n_(n), bits_(checked_size(n)) {}
  SetFamily(unsigned n, DenseBits bits) : n_(n), bits_(std::move(bits)) {
    if (bits_.size() != checked_size(n)) throw ParameterError("set-family bitset has the wrong length");
    size_ = bits_.count();
  }

  static SetFamily all(unsigned n) { return SetFamily(n, DenseBits(checked_size(n), true)); }
  static SetFamily from_predicate(unsigned n, const std::function<bool(std::uint64_t)>& pred) {
    DenseBits bits(checked_size(n));
    for (std::uint64_t a = 0; a < bits.size(); ++a)
      if (pred(a)) bits.set(a);
    return SetFamily(n, std::move(bits));
  }
  // Sets given as lists of 1-based elements.
  static SetFamily from_sets(unsigned n, std::initializer_list<std::initializer_list<unsigned>> sets) {
    DenseBits bits(checked_size(n));
    for (const auto& set : sets) {
      std::uint64_t mask = 0;
      for (auto j : set) {
        if (j < 1 || j > n) throw ParameterError("set element outside [1, n]");
        mask |= std::uint64_t{1} << (j - 1);
      }
      bits.set(mask);
    }
    return SetFamily(n, std::move(bits));
  }

  unsigned n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  const DenseBits& bits() const noexcept { return bits_; }
  bool contains(std::uint64_t mask) const { return mask < bits_.size() && bits_.test(mask); }

  bool is_upward_closed() const {
    for (std::uint64_t a = 0; a < bits_.size(); ++a) {
      if (!bits_.test(a)) continue;
      for (unsigned j = 0; j < n_; ++j)
        if (!bits_.test(a | (std::uint64_t{1} << j))) return false;
    }
    return true;
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

private:
  static std::uint64_t checked_size(unsigned n) {
    if (n > 63 || (std::uint64_t{1} << n) > dense_cap())
      throw Refusal("2^" + std::to_string(n) + " exceeds the dense cap");
    return std::uint64_t{1} << n;
  }

  unsigned n_;
  DenseBits bits_;
  std::uint64_t size_ = 0;
};

namespace detail {
inline void require_same_space(const Family& a, const Family& b) {
  if (!(a.params() == b.params())) throw ParameterError("families come from different spaces");
}
}  // namespace detail

inline Family intersect(const Family& a, const Family& b) {
  detail::require_same_space(a, b);
  return Family(a.params(), a.bits() & b.bits());
}
inline Family unite(const Family& a, const Family& b) {
  detail::require_same_space(a, b);
  return Family(a.params(), a.bits() | b.bits());
}
inline Family complement(const Family& a) {
  DenseBits bits = a.bits();
  bits.flip();
  return Family(a.params(), std::move(bits));
}

// Exact |F| / s^n.
inline Rational density(const Family& f) {
  return Rational{BigInt{f.size()}, BigInt{f.params().word_count()}};
}

// Pairwise demand check over all ordered pairs, self-pairs included.
inline bool is_t_intersecting(const Family& f, const TVector& t) {
  const auto& params = f.params();
  detail::require_t_size(t, params.s());
  if (t.all_zero() || f.is_empty()) return true;
  const unsigned s = params.s();

  std::vector<unsigned> active;  // symbols with positive demand
  for (unsigned l = 0; l < s; ++l)
    if (t[l] > 0) active.push_back(l);

  const auto members = f.members();
  std::vector<std::uint64_t> masks(members.size() * active.size());
  for (std::size_t m = 0; m < members.size(); ++m) {
    auto pm = position_masks(members[m], params);
    for (std::size_t a = 0; a < active.size(); ++a) {
      masks[m * active.size() + a] = pm[active[a]];
      if (static_cast<unsigned>(std::popcount(pm[active[a]])) < t[active[a]]) return false;
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      for (std::size_t a = 0; a < active.size(); ++a)
        if (static_cast<unsigned>(std::popcount(masks[i * active.size() + a] & masks[j * active.size() + a])) <
            t[active[a]])
          return false;
  return true;
}

namespace detail {
// Calls fn(base, stride) for every group of s indices that differ only at `pos`.
template <typename Fn>
void for_each_position_group(const SpaceParams& params, unsigned pos, Fn&& fn) {
  const std::uint64_t stride = params.stride(pos);
  const std::uint64_t span = stride * params.s();
  for (std::uint64_t block = 0; block < params.word_count(); block += span)
    for (std::uint64_t off = 0; off < stride; ++off) fn(block + off, stride);
}
}  // namespace detail

// F(P): the least P-complete superset of F. Per-position saturation sweeps:
// a member whose symbol at position i lies outside P pulls in all s variants
// at position i. Repeats until a full sweep adds nothing.
inline Family closure_P(const Family& f, const SymbolSet& p) {
  const auto& params = f.params();
  require_proper(p, params.s());
  const unsigned s = params.s();
  DenseBits bits = f.bits();
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned pos = 0; pos < params.n(); ++pos) {
      detail::for_each_position_group(params, pos, [&](std::uint64_t base, std::uint64_t stride) {
        bool spawn = false;
        for (unsigned k = 0; k < s && !spawn; ++k)
          spawn = !p.contains(k + 1) && bits.test(base + k * stride);
        if (!spawn) return;
        for (unsigned k = 0; k < s; ++k) {
          const auto idx = base + k * stride;
          if (!bits.test(idx)) {
            bits.set(idx);
            changed = true;
          }
        }
      });
    }
  }
  return Family(params, std::move(bits));
}

// A single-coordinate witness that F is not P-complete: x ∈ F, y ∉ F,
// x <_P y, differing only at `position` (1-based).
struct CompletenessViolation {
  WordIndex x;
  WordIndex y;
  unsigned position;
};

// Any violation of P-completeness implies one at a single coordinate, since
// <_P steps between words factor into one-position changes.
inline std::optional<CompletenessViolation> find_completeness_violation(const Family& f, const SymbolSet& p) {
  const auto& params = f.params();
  require_proper(p, params.s());
  std::optional<CompletenessViolation> found;
  for (unsigned pos = 0; pos < params.n() && !found; ++pos) {
    detail::for_each_position_group(params, pos, [&](std::uint64_t base, std::uint64_t stride) {
      if (found) return;
      for (unsigned k = 0; k < params.s(); ++k) {
        if (p.contains(k + 1) || !f.bits().test(base + k * stride)) continue;
        for (unsigned m = 0; m < params.s(); ++m)
          if (!f.bits().test(base + m * stride)) {
            found = CompletenessViolation{base + k * stride, base + m * stride, pos + 1};
            return;
          }
      }
    });
  }
  return found;
}

inline bool is_P_complete(const Family& f, const SymbolSet& p) { return !find_completeness_violation(f, p); }

// P_i(F): the position sets {j : y_j = i} realised by members y.
inline SetFamily project(const Family& f, Symbol i) {
  const auto& params = f.params();
  if (i < 1 || i > params.s()) throw ParameterError("projection symbol outside [1, s]");
  DenseBits bits(std::uint64_t{1} << params.n());
  std::vector<Symbol> digits(params.n());
  f.bits().for_each([&](std::size_t idx) {
    std::uint64_t mask = 0;
    auto rest = static_cast<WordIndex>(idx);
    for (unsigned j = 0; j < params.n(); ++j) {
      if (rest % params.s() == i - 1) mask |= std::uint64_t{1} << j;
      rest /= params.s();
    }
    bits.set(mask);
  });
  return SetFamily(params.n(), std::move(bits));
}

// F_i = {x ∈ [s]^{n-1} : (x, i) ∈ F}, slicing on the last position. With the
// little-endian index this is a contiguous range of s^{n-1} bits.
inline Family slice(const Family& f, Symbol i) {
  const auto& params = f.params();
  if (params.n() < 2) throw ParameterError("slice requires n >= 2");
  if (i < 1 || i > params.s()) throw ParameterError("slice symbol outside [1, s]");
  SpaceParams sub(params.s(), params.n() - 1);
  DenseBits bits(sub.word_count());
  const std::uint64_t offset = (i - 1) * sub.word_count();
  for (std::uint64_t k = 0; k < sub.word_count(); ++k)
    if (f.bits().test(offset + k)) bits.set(k);
  return Family(sub, std::move(bits));
}

}  // namespace isecode
