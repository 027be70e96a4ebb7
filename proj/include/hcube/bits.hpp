#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

// Bit tricks on packed truth tables. Point x (an n-bit index) stores its
// j-th coordinate in bit j; within a 64-word table the first six
// coordinates live inside each word, the rest select the word.
namespace hcube::bits {

inline constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

// In-word butterfly: swaps each pair of points differing in coordinate j.
inline std::uint64_t swap_coord(std::uint64_t t, int j) {
  const int s = 1 << j;
  const std::uint64_t m = kLowHalf[j];
  return ((t >> s) & m) | ((t & m) << s);
}

// Word w of the mask of points whose coordinate j is set.
inline std::uint64_t coord_mask_word(int j, std::size_t w) {
  if (j < 6) return ~kLowHalf[j];
  return ((w >> (j - 6)) & 1u) ? ~0ULL : 0ULL;
}

// d = t XOR (t with coordinate j flipped): bit x of d marks a point whose
// value changes when coordinate j flips. words = number of 64-bit words.
inline void coord_diff(const std::uint64_t* t, std::uint64_t* d, int j,
                       std::size_t words) {
  if (j < 6) {
    for (std::size_t w = 0; w < words; ++w) d[w] = t[w] ^ swap_coord(t[w], j);
  } else {
    const std::size_t step = std::size_t{1} << (j - 6);
    for (std::size_t w = 0; w < words; ++w) d[w] = t[w] ^ t[w ^ step];
  }
}

inline int popcount(std::uint64_t x) { return std::popcount(x); }

}  // namespace hcube::bits
