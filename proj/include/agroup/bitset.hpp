#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace agroup {

/// Fixed-size membership mask over dense element ids.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  /// Sets bit i and reports whether it was previously clear.
  bool insert(std::size_t i) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    std::uint64_t& w = words_[i >> 6];
    const bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }

  std::size_t count() const;
  std::size_t intersection_count(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;
  Bitset& operator|=(const Bitset& other);
  Bitset& operator&=(const Bitset& other);

  std::vector<std::uint32_t> to_ids() const;
  std::size_t hash() const;

  friend bool operator==(const Bitset& l, const Bitset& r);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace agroup
