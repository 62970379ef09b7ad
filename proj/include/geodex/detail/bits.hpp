// Small helpers for the word-packed bit rows used across the library.
#pragma once

#include <bit>
#include <cstdint>

namespace geodex::detail {

inline constexpr int kWordBits = 64;

constexpr int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

inline bool get_bit(const std::uint64_t* words, int i) {
  return (words[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::uint64_t* words, int i) {
  words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

inline void clear_bit(std::uint64_t* words, int i) {
  words[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

inline int popcount_words(const std::uint64_t* words, int nwords) {
  int c = 0;
  for (int w = 0; w < nwords; ++w) c += std::popcount(words[w]);
  return c;
}

/// Calls f(index) for every set bit, in increasing index order.
template <typename F>
void for_each_bit(const std::uint64_t* words, int nwords, F&& f) {
  for (int w = 0; w < nwords; ++w) {
    std::uint64_t x = words[w];
    while (x) {
      int b = std::countr_zero(x);
      f(w * kWordBits + b);
      x &= x - 1;
    }
  }
}

template <typename F>
void for_each_bit64(std::uint64_t x, F&& f) {
  while (x) {
    f(std::countr_zero(x));
    x &= x - 1;
  }
}

}  // namespace geodex::detail
