#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tfold {

/// Fixed-size bitset over point indices.
class PointMask {
 public:
  PointMask() = default;
  explicit PointMask(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// |this ∩ other|; both masks must have the same size.
  std::size_t intersection_count(const PointMask& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return c;
  }

  /// True when every bit of this is set in other.
  bool is_subset_of(const PointMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  PointMask complement() const;
  PointMask& operator|=(const PointMask& other);

  /// Set bit positions in increasing order.
  std::vector<std::uint32_t> indices() const;

  friend bool operator==(const PointMask&, const PointMask&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tfold
