#ifndef STRATTR_SRC_BITSET_HPP
#define STRATTR_SRC_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace strattr::detail {

// Fixed-width bitset with the allocation-free word loops the hitting-set
// search needs in its inner loop.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t bits() const noexcept { return bits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }
  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// popcount(this & ~mask)
  std::size_t count_without(const Bitset& mask) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~mask.words_[i]));
    }
    return c;
  }
  /// (this & ~mask) intersects other
  bool intersects_without(const Bitset& mask, const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~mask.words_[i] & other.words_[i]) return true;
    }
    return false;
  }
  /// this |= (src & ~mask)
  void or_without(const Bitset& src, const Bitset& mask) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= src.words_[i] & ~mask.words_[i];
  }

  /// Set bits of (this & ~mask), ascending.
  template <typename F>
  void for_each_without(const Bitset& mask, F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i] & ~mask.words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        f(i * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  /// Highest set bit, or bits() if empty.
  std::size_t highest() const noexcept {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    }
    return bits_;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace strattr::detail

#endif  // STRATTR_SRC_BITSET_HPP
