#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace isecode {

// Fixed-length dense bitset backed by 64-bit blocks. Bits past size() are
// always zero so popcount and equality can work block-wise.
class DenseBits {
public:
  using block_type = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  DenseBits() = default;
  explicit DenseBits(std::size_t size, bool value = false)
      : size_(size), blocks_((size + kBlockBits - 1) / kBlockBits, value ? ~block_type{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  bool test(std::size_t i) const noexcept {
    return (blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1U;
  }
  void set(std::size_t i) noexcept { blocks_[i / kBlockBits] |= block_type{1} << (i % kBlockBits); }
  void reset(std::size_t i) noexcept { blocks_[i / kBlockBits] &= ~(block_type{1} << (i % kBlockBits)); }
  void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }
  bool none() const noexcept {
    for (auto b : blocks_)
      if (b) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  // First set bit at or after `from`, or size() when there is none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t bi = from / kBlockBits;
    block_type b = blocks_[bi] & (~block_type{0} << (from % kBlockBits));
    while (true) {
      if (b) return bi * kBlockBits + static_cast<std::size_t>(std::countr_zero(b));
      if (++bi == blocks_.size()) return size_;
      b = blocks_[bi];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      block_type b = blocks_[bi];
      while (b) {
        fn(bi * kBlockBits + static_cast<std::size_t>(std::countr_zero(b)));
        b &= b - 1;
      }
    }
  }

  DenseBits& operator&=(const DenseBits& o) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
    return *this;
  }
  DenseBits& operator|=(const DenseBits& o) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    return *this;
  }
  // this &= ~o
  DenseBits& subtract(const DenseBits& o) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
    return *this;
  }
  void flip() noexcept {
    for (auto& b : blocks_) b = ~b;
    trim();
  }
  bool is_subset_of(const DenseBits& o) const noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
  }
  std::size_t intersection_count(const DenseBits& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(blocks_[i] & o.blocks_[i]));
    return c;
  }

  const std::vector<block_type>& blocks() const noexcept { return blocks_; }
  std::vector<block_type>& blocks() noexcept { return blocks_; }

  friend bool operator==(const DenseBits&, const DenseBits&) = default;

private:
  void trim() noexcept {
    if (size_ % kBlockBits && !blocks_.empty())
      blocks_.back() &= (block_type{1} << (size_ % kBlockBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<block_type> blocks_;
};

inline DenseBits operator&(DenseBits a, const DenseBits& b) { return a &= b; }
inline DenseBits operator|(DenseBits a, const DenseBits& b) { return a |= b; }

}  // namespace isecode
