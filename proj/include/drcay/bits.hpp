#pragma once

// Fixed-capacity bit vector used for vertex sets, connection sets and
// adjacency rows. Capacity is a compile-time word count so that set algebra
// stays allocation free and word parallel in the census hot loop.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace drcay {

template <std::size_t Words>
class BasicBits {
 public:
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kCapacity = Words * 64;

  constexpr BasicBits() = default;

  template <std::size_t Other>
  static BasicBits narrowed(const BasicBits<Other>& src) {
    BasicBits out;
    for (std::size_t w = 0; w < std::min(Words, Other); ++w) out.words_[w] = src.word(w);
    return out;
  }

  static BasicBits from_indices(const std::vector<int>& idx) {
    BasicBits b;
    for (int i : idx) b.set(i);
    return b;
  }

  /// All indices in [0, n).
  static BasicBits prefix(int n) {
    BasicBits b;
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  [[nodiscard]] std::uint64_t word(std::size_t w) const { return words_[w]; }
  std::uint64_t& word(std::size_t w) { return words_[w]; }

  [[nodiscard]] int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  [[nodiscard]] bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  [[nodiscard]] bool any() const { return !none(); }

  [[nodiscard]] int first() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  [[nodiscard]] bool intersects(const BasicBits& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  [[nodiscard]] int intersection_count(const BasicBits& o) const {
    int c = 0;
    for (std::size_t w = 0; w < Words; ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  [[nodiscard]] bool subset_of(const BasicBits& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  BasicBits& operator|=(const BasicBits& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  BasicBits& operator&=(const BasicBits& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BasicBits& operator^=(const BasicBits& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  BasicBits& operator-=(const BasicBits& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend BasicBits operator|(BasicBits a, const BasicBits& b) { return a |= b; }
  friend BasicBits operator&(BasicBits a, const BasicBits& b) { return a &= b; }
  friend BasicBits operator^(BasicBits a, const BasicBits& b) { return a ^= b; }
  friend BasicBits operator-(BasicBits a, const BasicBits& b) { return a -= b; }

  friend bool operator==(const BasicBits&, const BasicBits&) = default;

  /// Ordering by the sorted index list (lexicographic), which for sets of
  /// equal cardinality is the usual "smallest first element wins" order.
  friend bool lex_less(const BasicBits& a, const BasicBits& b) {
    if (a.count() == b.count()) {
      for (std::size_t w = 0; w < Words; ++w) {
        const std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff) return (a.words_[w] & diff & (~diff + 1)) != 0;
      }
      return false;
    }
    auto la = a.indices();
    auto lb = b.indices();
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < Words; ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        const int bit = std::countr_zero(x);
        fn(static_cast<int>(w * 64 + bit));
        x &= x - 1;
      }
    }
  }

  [[nodiscard]] std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  std::array<std::uint64_t, Words> words_{};
};

/// Default width: 384 bits covers every group order handled here (<= 343).
using Bits = BasicBits<6>;

struct BitsHash {
  template <std::size_t W>
  std::size_t operator()(const BasicBits<W>& b) const {
    return b.hash();
  }
};

}  // namespace drcay
