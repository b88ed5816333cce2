#include "updown/shift.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>
#include <tuple>

namespace updown {

namespace {

constexpr int kPairScanCap = 14;

void check_pair_scan_size(int n) {
  if (n > kPairScanCap)
    throw TooLargeError("ordered-pair scans cap the ground size at " +
                        std::to_string(kPairScanCap));
}

int max_element_of(SubsetMask m) { return 32 - std::countl_zero(m); }

bool pair_moves(const Family& f, const ShiftPair& pair) {
  bool moves = false;
  f.for_each_member([&](SubsetMask a) {
    if (moves) return;
    if ((a & pair.insert) == 0 && (a & pair.erase) == pair.erase &&
        !f.contains((a & ~pair.erase) | pair.insert))
      moves = true;
  });
  return moves;
}

}  // namespace

void validate_shift_pair(const ShiftPair& pair, int ground_size) {
  const SubsetMask ground = full_mask(ground_size);
  if (pair.insert == 0 || pair.erase == 0)
    throw InvalidShiftPairError("shift pair index sets must be nonempty");
  if ((pair.insert & pair.erase) != 0)
    throw InvalidShiftPairError("shift pair index sets must be disjoint");
  if ((pair.insert & ~ground) != 0 || (pair.erase & ~ground) != 0)
    throw InvalidShiftPairError("shift pair leaves the ground set");
}

std::vector<ShiftPair> ordered_pairs(int n) {
  check_pair_scan_size(n);
  std::vector<ShiftPair> out;
  for (int hi = 2; hi <= n; ++hi) {
    // erase contains hi as its largest element; insert sits strictly below
    // min(erase).
    const SubsetMask hi_bit = SubsetMask{1} << (hi - 1);
    for (SubsetMask erase_rest = 0; erase_rest < hi_bit; ++erase_rest) {
      const SubsetMask erase = hi_bit | erase_rest;
      const int lo = std::countr_zero(erase) + 1;
      const SubsetMask below = full_mask(lo - 1);
      for (SubsetMask insert = below; insert != 0;
           insert = (insert - 1) & below)
        out.push_back(ShiftPair{insert, erase});
    }
  }
  std::sort(out.begin(), out.end(), [](const ShiftPair& a, const ShiftPair& b) {
    return std::tuple(max_element_of(a.erase),
                      std::popcount(a.insert) + std::popcount(a.erase),
                      a.insert, a.erase) <
           std::tuple(max_element_of(b.erase),
                      std::popcount(b.insert) + std::popcount(b.erase),
                      b.insert, b.erase);
  });
  return out;
}

std::vector<std::uint64_t> shift_potential(const Family& f) {
  const int n = f.ground_size();
  std::vector<std::uint64_t> counts(std::size_t(n), 0);
  f.for_each_member([&](SubsetMask a) {
    while (a != 0) {
      const int e = max_element_of(a);
      ++counts[std::size_t(n - e)];
      a &= ~(SubsetMask{1} << (e - 1));
    }
  });
  return counts;
}

bool is_ordered_pair(const ShiftPair& pair) {
  if (pair.insert == 0 || pair.erase == 0) return false;
  return max_element_of(pair.insert) < std::countr_zero(pair.erase) + 1;
}

Family shift(const Family& f, const ShiftPair& pair) {
  validate_shift_pair(pair, f.ground_size());
  std::vector<std::uint64_t> w(f.words().size(), 0);
  f.for_each_member([&](SubsetMask a) {
    SubsetMask image = a;
    if ((a & pair.insert) == 0 && (a & pair.erase) == pair.erase) {
      const SubsetMask moved = (a & ~pair.erase) | pair.insert;
      if (!f.contains(moved)) image = moved;
    }
    w[image >> 6] |= std::uint64_t{1} << (image & 63);
  });
  Family out = Family::from_words(f.ground_size(), std::move(w));
  // Moved images collide neither with each other nor with fixed members.
  assert(out.count() == f.count());
  return out;
}

bool is_strongly_shifted(const Family& f) {
  check_pair_scan_size(f.ground_size());
  for (const ShiftPair& pair : ordered_pairs(f.ground_size()))
    if (pair_moves(f, pair)) return false;
  return true;
}

std::vector<ShiftPair> violating_pairs(const Family& f) {
  check_pair_scan_size(f.ground_size());
  std::vector<ShiftPair> out;
  for (const ShiftPair& pair : ordered_pairs(f.ground_size()))
    if (pair_moves(f, pair)) out.push_back(pair);
  return out;
}

Family strongly_shift(
    const Family& f,
    const std::function<void(const ShiftPair&, const Family&)>& on_step) {
  check_pair_scan_size(f.ground_size());
  const auto pairs = ordered_pairs(f.ground_size());
  Family cur = f;
  for (;;) {
    bool moved = false;
    for (const ShiftPair& pair : pairs) {
      if (!pair_moves(cur, pair)) continue;
      cur = shift(cur, pair);
      if (on_step) on_step(pair, cur);
      moved = true;
      break;
    }
    if (!moved) return cur;
  }
}

}  // namespace updown
