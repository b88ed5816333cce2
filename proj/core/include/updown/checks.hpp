#pragma once

// Invariant sweeps shared by the verify command and the test suite. Each
// sweep exercises one bundle of library guarantees across a range of ground
// sizes and reports the first counterexample it finds, if any.

#include <string>
#include <vector>

namespace updown::checks {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // empty on success, first counterexample otherwise
};

struct Options {
  int max_n = 16;           // formula sweeps cover 0..max_n
  int oracle_max = 4;       // exhaustive reference rows cover 0..oracle_max
  int chain_max = 8;        // chains are built and verified up to this n
  int bound_max = 12;       // window/conjugacy sweeps cover 0..bound_max
  int shift_cases = 10000;  // randomized shifting cases per ground size
};

/// Closed form equals the recursion for all n <= max_n, all m.
CheckResult phi_method_agreement(const Options& opt);

/// sqrt(2^{n+2} m) - m <= phi <= that + sqrt(2^n), compared through exact
/// integer squarings, with equality exactly at perfect squares.
CheckResult lower_bound_window(const Options& opt);

/// The explicit upper bound dominates phi everywhere and is tight on its
/// stated window around each power of two. Covers 0..bound_max.
CheckResult upper_bound_window(const Options& opt);

/// The partition (phi(n,1), ..., phi(n,2^n)) equals its own conjugate for
/// n <= bound_max.
CheckResult self_conjugacy(const Options& opt);

/// The dyadic profile identities for k <= 256 plus the paired-search
/// identity linking delta_k and delta_q when k + q is a power of two.
CheckResult delta_identities(const Options& opt);

/// canonical_chain passes verify_chain for every n <= chain_max.
CheckResult chain_suite(const Options& opt);

/// Reference searches agree with the closed form: exhaustively for
/// n <= min(4, oracle_max), and through the convex search at n = 5 when
/// oracle_max >= 5. Also checks returned witnesses attain their value.
CheckResult oracle_agreement(const Options& opt);

/// Brute-force cross-Sperner maxima match the closed-form bound on the
/// oracle range; the formula-based maximum matches it for all n <= max_n;
/// one-set extremal configurations are exactly the half-size sets.
CheckResult cross_sperner_suite(const Options& opt);

/// Shift properties: cardinality preservation, complement duality, the
/// component closure inequalities under the minimal-pair hypotheses, strict
/// potential decrease, witness preservation, and the strongly-shifted
/// closure lower bound. Exhaustive through n = 4, randomized at n in {5,6}.
CheckResult shifting_suite(const Options& opt);

/// Every sweep above, in the order listed.
std::vector<CheckResult> run_all(const Options& opt);

}  // namespace updown::checks
