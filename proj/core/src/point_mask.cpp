#include "tfold/point_mask.hpp"

namespace tfold {

PointMask PointMask::complement() const {
  PointMask r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  if (size_ % 64 != 0 && !r.words_.empty()) {
    r.words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
  return r;
}

PointMask& PointMask::operator|=(const PointMask& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<std::uint32_t> PointMask::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace tfold
