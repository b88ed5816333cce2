#include "bitlattice.hpp"

#include <cstddef>

namespace updown::detail {

namespace {

// Sources of an in-word step never splash past 2^n - 1: a destination kept
// by the coordinate mask differs from its source only in bit i < n.
void word_pass_up(std::vector<std::uint64_t>& w, int i) {
  const std::uint64_t keep = kCoordBit[static_cast<std::size_t>(i)];
  const unsigned s = 1u << i;
  for (auto& x : w) x |= (x << s) & keep;
}

void word_pass_down(std::vector<std::uint64_t>& w, int i) {
  const std::uint64_t keep = ~kCoordBit[static_cast<std::size_t>(i)];
  const unsigned s = 1u << i;
  for (auto& x : w) x |= (x >> s) & keep;
}

}  // namespace

void vec_supersets(std::vector<std::uint64_t>& w, int n) {
  for (int i = 0; i < n && i < 6; ++i) word_pass_up(w, i);
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j & stride) w[j] |= w[j - stride];
  }
}

void vec_subsets(std::vector<std::uint64_t>& w, int n) {
  for (int i = 0; i < n && i < 6; ++i) word_pass_down(w, i);
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (!(j & stride) && j + stride < w.size()) w[j] |= w[j + stride];
  }
}

std::vector<std::uint64_t> vec_lower_neighbor_or(
    const std::vector<std::uint64_t>& v, int n) {
  std::vector<std::uint64_t> t(v.size(), 0);
  for (int i = 0; i < n && i < 6; ++i) {
    const std::uint64_t keep = kCoordBit[static_cast<std::size_t>(i)];
    const unsigned s = 1u << i;
    for (std::size_t j = 0; j < v.size(); ++j) t[j] |= (v[j] << s) & keep;
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j & stride) t[j] |= v[j - stride];
  }
  return t;
}

std::vector<std::uint64_t> vec_upper_neighbor_or(
    const std::vector<std::uint64_t>& v, int n) {
  std::vector<std::uint64_t> t(v.size(), 0);
  for (int i = 0; i < n && i < 6; ++i) {
    const std::uint64_t keep = ~kCoordBit[static_cast<std::size_t>(i)];
    const unsigned s = 1u << i;
    for (std::size_t j = 0; j < v.size(); ++j) t[j] |= (v[j] >> s) & keep;
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!(j & stride) && j + stride < v.size()) t[j] |= v[j + stride];
  }
  return t;
}

}  // namespace updown::detail
