#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace propp {

// Dense membership over [0, size). Only what the set routines need.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), w_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return i < size_ && (w_[i >> 6] >> (i & 63)) & 1; }

  // *this |= (src << shift), truncated to size().
  void or_shifted(const Bits& src, std::size_t shift) {
    const std::size_t ws = shift >> 6, bs = shift & 63;
    const std::size_t n = w_.size();
    for (std::size_t i = 0; i < src.w_.size() && i + ws < n; ++i) {
      std::uint64_t v = src.w_[i];
      if (!v) continue;
      w_[i + ws] |= v << bs;
      if (bs && i + ws + 1 < n) w_[i + ws + 1] |= v >> (64 - bs);
    }
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto v : w_) c += std::popcount(v);
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t v = w_[i];
      while (v) {
        f(i * 64 + std::countr_zero(v));
        v &= v - 1;
      }
    }
  }

 private:
  void trim() {
    if (size_ & 63) w_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace propp
