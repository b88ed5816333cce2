#pragma once

// Brute-force reference searches on small ground sets. These recompute the
// closure minima straight from the definition, independently of the formula
// engines, and exist to certify those engines on every case they can reach.

#include <cstdint>
#include <vector>

#include "updown/family.hpp"

namespace updown::oracle {

/// Largest ground size the exhaustive search accepts.
inline constexpr int kExhaustiveCap = 4;
/// Largest ground size the branch-and-bound and convex searches accept.
inline constexpr int kBranchBoundCap = 5;

struct BruteResult {
  std::uint64_t value = 0;
  Family witness{0};
};

/// Minimum |F updown| over all m-element families of subsets of [n],
/// together with the first family attaining it. Exhaustive for n <= 4
/// (families enumerated in ascending membership-vector order, so the
/// witness is the colexicographically first minimizer); branch and bound,
/// pruned only against the best family found so far, for n == 5.
BruteResult brute_min_updown(int n, std::uint64_t m);

/// Minimum |F updown| over convex m-families only, n <= 5. Every size has
/// a convex minimizer, so this agrees with brute_min_updown wherever both
/// run; the restricted search space is what makes n == 5 cheap.
std::uint64_t brute_min_updown_convex(int n, std::uint64_t m);

/// Maximum of m + (2^n - brute_min_updown(n, m)) over m >= 1, skipping
/// values where the second term vanishes. This is the largest combined
/// size of two nonempty families in which no member of one contains or is
/// contained in a member of the other. 2 <= n <= 5.
std::uint64_t brute_cross_sperner_max(int n);

/// All one-set families {A} whose closure size attains brute_min_updown(n, 1),
/// in ascending mask order. These are exactly the A with |A| in
/// {floor(n/2), ceil(n/2)}. Supported for n in {2, 4, 5}; n == 3 is excluded
/// because there the maximum combined size is also reached by larger
/// families, so the one-set configurations are not the whole extremal story.
std::vector<Family> extremal_configs_m1(int n);

}  // namespace updown::oracle
