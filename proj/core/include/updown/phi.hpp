#pragma once

/**
 * Exact values of phi(n,m): the minimum size of the up/down closure over
 * all families of m subsets of [n].
 *
 * Two independent evaluators are provided. phi_recursive follows the
 * two-branch recursion on (n-2, m) with a self-conjugacy fallback for
 * m > 2^{n-2}; phi_fast evaluates a closed form built from the dyadic
 * profile delta_k. Everything is exact 64-bit integer arithmetic; square
 * roots are verified by multiplication and the dyadic values carry their
 * denominators explicitly.
 */

#include <cstdint>
#include <vector>

#include "updown/errors.hpp"

namespace updown {

/// num / 2^exp with 0 <= num <= 2^exp.
struct DyadicRational {
  std::uint64_t num = 0;
  unsigned exp = 0;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
};

/// Value equality (cross-multiplied, independent of representation).
bool dyadic_equal(DyadicRational a, DyadicRational b);

/// 2^t * value, exact; requires t >= a.exp.
std::uint64_t dyadic_scale_pow2(DyadicRational a, unsigned t);

/// The dyadic profile on {0,...,k}: delta_1(x) = x and for k >= 2
/// delta_k(x) halves into the floor(k/2) block below and the ceil(k/2)
/// block above. delta_k(0) = 0 and delta_k(k) = 1.
DyadicRational delta(std::uint64_t k, std::uint64_t x);

/// Floor of sqrt(x), verified by multiplication: r*r <= x < (r+1)*(r+1).
std::uint64_t isqrt(std::uint64_t x);

/// phi by the two-branch recursion. Memoized per n; safe to call
/// concurrently. 0 <= m <= 2^n, n <= 24.
std::uint64_t phi_recursive(int n, std::uint64_t m);

/// phi by the closed form; O(log) time, no tables.
std::uint64_t phi_fast(int n, std::uint64_t m);

/// Shape parameters of the closed form: kappa is 1 for even n and 2 for
/// odd n, nu = floor(n/2), and c is the unique positive integer with
/// kappa*c*(c-1) <= m < kappa*c*(c+1). (kappa * 2^nu)^2 = kappa * 2^n.
struct QuickParams {
  int kappa = 1;
  int nu = 0;
  std::uint64_t c = 1;
};
QuickParams quick_params(int n, std::uint64_t m);

/// Floor and exactness of f(n,m) = sqrt(2^{n+2} m) - m, the global lower
/// bound for phi(n,m). is_exact means 2^{n+2} m is a perfect square, in
/// which case phi(n,m) = f(n,m) exactly.
struct LowerBound {
  std::uint64_t floor_value = 0;
  bool is_exact = false;
};
LowerBound lower_bound_f(int n, std::uint64_t m);

/// Closed-form upper bound 2^{(n+a)/2} + 2^{(n-a)/2} m - m, where a is the
/// least element of {0,...,n} with m < 2^{a+1} and a = n (mod 2). Returns 0
/// for m = 0.
std::uint64_t upper_bound_explicit(int n, std::uint64_t m);

/// The exponent a used by upper_bound_explicit (m >= 1).
int explicit_bound_exponent(int n, std::uint64_t m);

/// The greatest s in {0,...,2^n} with phi(n,s) <= 2^n - m. Satisfies
/// phi(n,m) = 2^n - s: the phi partition is self-conjugate.
std::uint64_t self_conjugate_s(int n, std::uint64_t m);

/// 2^n - phi(n,l): the index paired with l under conjugation of witness
/// families. Requires l <= 2^{n-2} (l = 0 for n < 2).
std::uint64_t star_index(int n, std::uint64_t l);

/// 2^n - phi(n,m): the largest partner size in a cross-Sperner pair where
/// one side has m members. 1 <= m <= 2^n.
std::uint64_t cross_sperner_g(int n, std::uint64_t m);

/// phi(n,m) for every m in 0..2^n, computed by the closed form and
/// validated entry by entry against the recursion. n <= 20.
struct PhiTable {
  int n = 0;
  std::vector<std::uint64_t> values;
};
PhiTable phi_table(int n);

/// The phi values for m = 1..2^n as a nonincreasing integer partition.
std::vector<std::uint64_t> phi_partition(int n);

/// Conjugate of a nonincreasing partition: part j of the result counts the
/// input parts that are >= j.
std::vector<std::uint64_t> conjugate_partition(
    const std::vector<std::uint64_t>& parts);

/// Side of the Durfee square of the phi partition: the largest d such that
/// at least d of the values phi(n,1..2^n) are >= d.
std::uint64_t durfee_side(const PhiTable& table);

}  // namespace updown
