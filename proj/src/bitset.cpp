#include "agroup/bitset.hpp"

#include <bit>
#include <cassert>

#include "agroup/simd/bitset_kernels.hpp"

namespace agroup {

std::size_t Bitset::count() const {
  return simd::active_kernels().popcount(words_.data(), words_.size());
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  assert(size_ == other.size_);
  return simd::active_kernels().and_popcount(words_.data(), other.words_.data(), words_.size());
}

bool Bitset::is_subset_of(const Bitset& other) const {
  assert(size_ == other.size_);
  return simd::active_kernels().is_subset(words_.data(), other.words_.data(), words_.size());
}

Bitset& Bitset::operator|=(const Bitset& other) {
  assert(size_ == other.size_);
  simd::active_kernels().or_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  assert(size_ == other.size_);
  simd::active_kernels().and_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

bool operator==(const Bitset& l, const Bitset& r) {
  return l.size_ == r.size_ &&
         simd::active_kernels().equal(l.words_.data(), r.words_.data(), l.words_.size());
}

std::vector<std::uint32_t> Bitset::to_ids() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Bitset::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace agroup
