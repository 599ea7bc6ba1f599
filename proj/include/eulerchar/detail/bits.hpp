#pragma once

// Word-level helpers for packed vertex sets. A row over a universe of n
// vertices occupies words_for(n) 64-bit words; bits at positions >= n are
// always zero.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace eulerchar::detail {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test_bit(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}
inline void set_bit(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}
inline void clear_bit(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t popcount(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline bool equal(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

inline bool is_zero(std::span<const Word> a) {
  for (Word w : a)
    if (w) return false;
  return true;
}

/// Mask of valid bits in the last word of an n-bit row.
constexpr Word tail_mask(std::size_t n) {
  const std::size_t r = n % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

/// Calls f(index) for each set bit in ascending order.
template <class F>
void for_each_bit(std::span<const Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word bits = row[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      f(w * kWordBits + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
}

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Index of the lowest set bit, or npos if none.
inline std::size_t lowest_bit(std::span<const Word> row) {
  for (std::size_t w = 0; w < row.size(); ++w)
    if (row[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(row[w]));
  return npos;
}

/// Parallel bit extract: gathers the bits of `src` selected by `mask` into
/// the low bits of the result.
Word extract_bits(Word src, Word mask);

}  // namespace eulerchar::detail
