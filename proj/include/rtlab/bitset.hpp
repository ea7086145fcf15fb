#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rtlab {

// Fixed-size runtime bitset tuned for adjacency rows and candidate sets.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t num_words() const noexcept { return words_.size(); }

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

  bool any() const noexcept {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }

  bool none() const noexcept { return !any(); }

  DynBitset& operator&=(const DynBitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  DynBitset& operator|=(const DynBitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  // this &= ~other
  DynBitset& subtract(const DynBitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend DynBitset operator&(DynBitset a, const DynBitset& b) noexcept { return a &= b; }

  std::size_t intersection_count(const DynBitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t find_first() const noexcept { return find_next_from(0); }

  std::size_t find_next_from(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word != 0) {
        std::size_t idx = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
        return idx < size_ ? idx : size_;
      }
      if (++w >= words_.size()) return size_;
      word = words_[w];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  bool operator==(const DynBitset&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rtlab
