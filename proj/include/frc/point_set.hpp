#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace frc {

// Fixed-universe bitset over point indices 0..size-1, packed into 64-bit words.
class PointSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PointSet() = default;
  explicit PointSet(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static constexpr std::size_t word_count(std::size_t size) noexcept {
    return (size + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const noexcept { return size_; }
  const std::vector<Word>& words() const noexcept { return words_; }

  void set(std::size_t p) { words_[p / kWordBits] |= Word{1} << (p % kWordBits); }
  void reset(std::size_t p) { words_[p / kWordBits] &= ~(Word{1} << (p % kWordBits)); }
  bool test(std::size_t p) const { return (words_[p / kWordBits] >> (p % kWordBits)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  PointSet& operator|=(const PointSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  // Number of points in `other` that are not in *this.
  std::size_t count_new(const PointSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(other.words_[i] & ~words_[i]));
    return c;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace frc
