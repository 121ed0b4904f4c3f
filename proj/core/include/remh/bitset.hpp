#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace remh {

// Fixed-width dynamic bitset used for adjacency rows and vertex sets.
// Width is chosen at construction; binary operations require equal widths.
// Bits beyond the width are kept zero at all times.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {
    assert(bits >= 0);
  }

  int size() const { return bits_; }

  bool test(int i) const {
    assert(0 <= i && i < bits_);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(0 <= i && i < bits_);
    w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(0 <= i && i < bits_);
    w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }
  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t{0};
    mask_tail();
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // First set bit at position >= from, or -1.
  int next(int from = 0) const {
    if (from >= bits_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
      if (++wi == w_.size()) return -1;
      w = w_[wi];
    }
  }

  bool intersects(const Bitset& o) const {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  // Set difference: this &= ~o.
  Bitset& subtract(const Bitset& o) {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  Bitset complemented() const {
    Bitset r(*this);
    for (auto& w : r.w_) w = ~w;
    r.mask_tail();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  bool operator==(const Bitset& o) const = default;

  // Calls f(i) for every set bit, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(static_cast<int>(wi * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

private:
  void mask_tail() {
    if (bits_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (bits_ & 63));
    if (bits_ == 0 && !w_.empty()) w_.back() = 0;
  }

  int bits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace remh
