#include "updown/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <vector>

#include "bitlattice.hpp"
#include "updown/errors.hpp"

namespace updown::oracle {
namespace {

using detail::word_lower_neighbor_or;
using detail::word_subsets;
using detail::word_supersets;
using detail::word_upper_neighbor_or;

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Everything here runs on ground sets of at most five elements, so one
// 64-bit word holds the whole membership vector and the in-word transforms
// apply directly.

struct Entry {
  std::uint64_t value = 0;
  std::uint64_t family = 0;
  bool set = false;
};

void record(Entry& e, std::uint64_t value, std::uint64_t family) {
  if (!e.set || value < e.value) e = {value, family, true};
}

std::uint64_t closure_size(std::uint64_t fam, int n) {
  return std::uint64_t(
      std::popcount(word_supersets(fam, n) | word_subsets(fam, n)));
}

void check_supported(int n, int cap) {
  if (n < 0) throw OutOfRangeError("ground size must be nonnegative");
  if (n > cap)
    throw TooLargeError("ground size " + std::to_string(n) +
                        " is beyond the reference search cap " +
                        std::to_string(cap));
}

void check_size(int n, std::uint64_t m) {
  if (m > (std::uint64_t{1} << n))
    throw OutOfRangeError("family size exceeds 2^n");
}

// ---- exhaustive sweep, n <= 4 ----
//
// One pass over every membership vector; per size the first minimizer in
// ascending vector order is kept, which is the colexicographically first
// family of that size.

const std::vector<Entry>& exhaustive_column(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Entry>> cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const int slots = 1 << n;
  std::vector<Entry> col(std::size_t(slots) + 1);
  const std::uint64_t end = std::uint64_t{1} << slots;  // n <= 4, so 2^16 max
  for (std::uint64_t fam = 0; fam != end; ++fam)
    record(col[std::size_t(std::popcount(fam))], closure_size(fam, n), fam);
  return cache.emplace(n, std::move(col)).first->second;
}

// ---- convex enumeration, n <= 5 ----
//
// Convex families form a tree under "delete the largest minimal-or-maximal
// member": deleting such a member keeps the family convex, so walking the
// inverse relation from the empty family reaches every convex family exactly
// once, with no visited set. A candidate addition A is descended into only
// when A is the set that rule would delete from the enlarged family.

struct ConvexSweep {
  int n;
  int slots;
  std::array<std::uint64_t, 32> sup{};
  std::array<std::uint64_t, 32> sub{};
  std::vector<Entry> best;

  explicit ConvexSweep(int ground) : n(ground), slots(1 << ground) {
    for (int a = 0; a < slots; ++a) {
      sup[std::size_t(a)] = word_supersets(bit(a), n);
      sub[std::size_t(a)] = word_subsets(bit(a), n);
    }
    best.assign(std::size_t(slots) + 1, Entry{});
    visit(0, 0, 0);
  }

  void visit(std::uint64_t fam, std::uint64_t up, std::uint64_t down) {
    record(best[std::size_t(std::popcount(fam))],
           std::uint64_t(std::popcount(up | down)), fam);
    for (int a = 0; a < slots; ++a) {
      if (fam & bit(a)) continue;
      const std::uint64_t g = fam | bit(a);
      const std::uint64_t gup = up | sup[std::size_t(a)];
      const std::uint64_t gdown = down | sub[std::size_t(a)];
      if ((gup & gdown) != g) continue;
      const std::uint64_t extremes =
          (g & ~word_lower_neighbor_or(gup, n)) |
          (g & ~word_upper_neighbor_or(gdown, n));
      if (63 - std::countl_zero(extremes) != a) continue;
      visit(g, gup, gdown);
    }
  }
};

const std::vector<Entry>& convex_column(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Entry>> cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  ConvexSweep sweep(n);
  return cache.emplace(n, std::move(sweep.best)).first->second;
}

// ---- branch and bound, n == 5 ----
//
// Members are chosen in ascending mask order. A branch dies when its closure
// so far, plus one new position for every member that still has to come from
// outside that closure, cannot beat the incumbent. The incumbent starts at
// the convex minimum, which is a genuine family, so pruning never assumes
// anything a found family does not certify.

struct BranchBound {
  int n;
  int slots;
  std::uint64_t m;
  std::array<std::uint64_t, 32> sup{};
  std::array<std::uint64_t, 32> sub{};
  std::uint64_t bestValue;
  std::uint64_t bestFamily;

  BranchBound(int ground, std::uint64_t size, const Entry& seed)
      : n(ground),
        slots(1 << ground),
        m(size),
        bestValue(seed.value),
        bestFamily(seed.family) {
    for (int a = 0; a < slots; ++a) {
      sup[std::size_t(a)] = word_supersets(bit(a), n);
      sub[std::size_t(a)] = word_subsets(bit(a), n);
    }
    descend(0, 0, 0, 0);
  }

  void descend(int from, std::uint64_t chosen, std::uint64_t fam,
               std::uint64_t clo) {
    if (chosen == m) {
      const auto value = std::uint64_t(std::popcount(clo));
      if (value < bestValue) {
        bestValue = value;
        bestFamily = fam;
      }
      return;
    }
    const std::uint64_t need = m - chosen - 1;
    for (int a = from; std::uint64_t(slots - a) > need; ++a) {
      const std::uint64_t nclo =
          clo | sup[std::size_t(a)] | sub[std::size_t(a)];
      const auto grown = std::uint64_t(std::popcount(nclo));
      const auto coverable = std::uint64_t(std::popcount(nclo >> (a + 1)));
      const std::uint64_t outside = need > coverable ? need - coverable : 0;
      if (grown + outside >= bestValue) continue;
      descend(a + 1, chosen + 1, fam | bit(a), nclo);
    }
  }
};

Entry brute_entry(int n, std::uint64_t m) {
  check_supported(n, kBranchBoundCap);
  check_size(n, m);
  if (n <= kExhaustiveCap) return exhaustive_column(n)[std::size_t(m)];
  BranchBound search(n, m, convex_column(n)[std::size_t(m)]);
  return {search.bestValue, search.bestFamily, true};
}

Family family_from_bits(int n, std::uint64_t bits) {
  return Family::from_words(n, {bits});
}

}  // namespace

BruteResult brute_min_updown(int n, std::uint64_t m) {
  const Entry e = brute_entry(n, m);
  return {e.value, family_from_bits(n, e.family)};
}

std::uint64_t brute_min_updown_convex(int n, std::uint64_t m) {
  check_supported(n, kBranchBoundCap);
  check_size(n, m);
  return convex_column(n)[std::size_t(m)].value;
}

std::uint64_t brute_cross_sperner_max(int n) {
  if (n < 2) throw OutOfRangeError("need a ground set of at least two elements");
  check_supported(n, kBranchBoundCap);
  const std::uint64_t full = std::uint64_t{1} << n;
  std::uint64_t best = 0;
  for (std::uint64_t m = 1; m <= full; ++m) {
    const std::uint64_t phi = brute_entry(n, m).value;
    if (phi >= full) continue;
    best = std::max(best, m + (full - phi));
  }
  return best;
}

std::vector<Family> extremal_configs_m1(int n) {
  if (n != 2 && n != 4 && n != 5)
    throw OutOfRangeError(
        "one-set extremal configurations are characterized only for n in {2, 4, 5}");
  const std::uint64_t target = brute_entry(n, 1).value;
  std::vector<Family> out;
  for (int a = 0; a < (1 << n); ++a)
    if (closure_size(bit(a), n) == target)
      out.push_back(Family(n, {SubsetMask(a)}));
  return out;
}

}  // namespace updown::oracle
