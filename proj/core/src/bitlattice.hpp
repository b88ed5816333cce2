#pragma once

// Word-parallel lattice transforms on membership bit vectors.
//
// Position p of the vector is the subset whose mask is p. Coordinate i of
// the hypercube is bit i of p; within a 64-bit word the first six
// coordinates are strided bit patterns, coordinates beyond that stride
// across whole words. Each transform is one pass per coordinate.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace updown::detail {

// kCoordBit[i] selects the positions whose mask has bit i set.
inline constexpr std::array<std::uint64_t, 6> kCoordBit = {
    0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL,
};

// Single-word variants for ground sizes up to 6 (at most 64 positions).
// Input bits above position 2^n - 1 must be zero.

inline std::uint64_t word_supersets(std::uint64_t w, int n) {
  for (int i = 0; i < n; ++i) w |= (w << (1u << i)) & kCoordBit[i];
  return w;
}

inline std::uint64_t word_subsets(std::uint64_t w, int n) {
  for (int i = 0; i < n; ++i) w |= (w >> (1u << i)) & ~kCoordBit[i];
  return w;
}

// out[p] = OR of v[p \ {i}] over elements i in p.
inline std::uint64_t word_lower_neighbor_or(std::uint64_t v, int n) {
  std::uint64_t t = 0;
  for (int i = 0; i < n; ++i) t |= (v << (1u << i)) & kCoordBit[i];
  return t;
}

// out[p] = OR of v[p + {i}] over elements i not in p.
inline std::uint64_t word_upper_neighbor_or(std::uint64_t v, int n) {
  std::uint64_t t = 0;
  for (int i = 0; i < n; ++i) t |= (v >> (1u << i)) & ~kCoordBit[i];
  return t;
}

inline std::uint64_t bit_reverse64(std::uint64_t v) {
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0f0f0f0f0f0f0f0fULL) | ((v & 0x0f0f0f0f0f0f0f0fULL) << 4);
  v = ((v >> 8) & 0x00ff00ff00ff00ffULL) | ((v & 0x00ff00ff00ff00ffULL) << 8);
  v = ((v >> 16) & 0x0000ffff0000ffffULL) | ((v & 0x0000ffff0000ffffULL) << 16);
  return (v >> 32) | (v << 32);
}

// Multi-word in-place transforms over all 2^n positions.
void vec_supersets(std::vector<std::uint64_t>& w, int n);
void vec_subsets(std::vector<std::uint64_t>& w, int n);
std::vector<std::uint64_t> vec_lower_neighbor_or(
    const std::vector<std::uint64_t>& v, int n);
std::vector<std::uint64_t> vec_upper_neighbor_or(
    const std::vector<std::uint64_t>& v, int n);

}  // namespace updown::detail
