#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace torslat {

// Fixed-size dense bitset sized at runtime. Used for reachability rows and
// module membership sets.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Calls f(i) for every set bit in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(k * 64 + static_cast<std::size_t>(bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace torslat
