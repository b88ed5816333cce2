#pragma once

/**
 * Construction of extremal families: for every m a convex family of m
 * subsets of [n] whose up/down closure has the minimum size phi(n,m), all
 * arranged in one increasing chain F_0 c F_1 c ... c F_{2^n}.
 *
 * The chain is built by lifting the chain for n-2 into two fresh elements,
 * conjugating the lifted prefix onto the upper indices, and interpolating
 * between consecutive conjugate anchors by deleting extreme sets one at a
 * time. All tie-breaks are deterministic, so the chain is a pure function
 * of n.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "updown/family.hpp"

namespace updown {

/// Cube slice { A : [(n-a)/2] subset of A subset of [(n+a)/2] }.
/// Requires 0 <= a <= n and a = n (mod 2); 2^a members.
Family c_family(int n, int a);

/// Conjugate slice { A : A not inside {(n-a)/2+1,...,n} and
/// {(n+a)/2+1,...,n} not inside A }. Same preconditions as c_family.
Family c_star_family(int n, int a);

/// Adds a fresh bottom element: relabels x -> x+1 on a family over
/// [n-2] and inserts element 1 into every member. Preserves convexity and
/// |lift(P)updown| = 2 |P updown| + |P|.
Family sandwich_lift(const Family& p, int n);

/// { A u B : A in f1, B in f2 } where f1 lives on [k] and f2 on the
/// remaining n-k elements (given relabeled onto [n-k]). Requires both
/// convex, [k] in f1 and the empty set in f2; the result is convex with
/// closure size 2^{n-k} |f1| + 2^k |f2| - |f1| |f2|.
Family join_product(const Family& f1, const Family& f2, int k, int n);

/// The standard product witness: c^2 members for even n, 2c^2 for odd n,
/// built from prefix families on the two halves of [n].
Family product_witness(int n, std::uint64_t c);

/// Deletes sets of big \ small that are minimal or maximal in the current
/// family, one per step, preferring maximal sets and then the largest mask,
/// until only one more deletion would reach small. Returns the
/// intermediate families by increasing size. Requires small properly
/// nested in big and both convex.
std::vector<Family> interpolate(const Family& small, const Family& big);

/// families[m] has m members for m = 0..2^n.
struct Chain {
  int n = 0;
  std::vector<Family> families;
};

/// The canonical witness chain for n <= 12. For n = 1 the middle family is
/// {{1}}; every other choice is forced or governed by the interpolation
/// tie-break.
Chain canonical_chain(int n);

struct ChainIndexCheck {
  std::uint64_t m = 0;
  bool cardinality = false;
  bool convex = false;
  bool witness = false;
  bool nested = false;  // families[m] proper subset of families[m+1]

  bool pass() const { return cardinality && convex && witness && nested; }
};

struct ChainAnchorCheck {
  int a = 0;
  bool cube_slice = false;
  bool conjugate_slice = false;
};

struct VerificationReport {
  int n = 0;
  bool pass = false;
  std::vector<ChainIndexCheck> indices;
  std::vector<ChainAnchorCheck> anchors;

  std::string summary() const;
};

/// Recomputes every chain property from scratch: cardinalities, proper
/// nesting, convexity, closure sizes against phi_fast, and the two anchor
/// identities at indices 2^a and 2^n - phi(n, 2^a).
VerificationReport verify_chain(const Chain& chain);

}  // namespace updown
