#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "updown/errors.hpp"
#include "updown/family.hpp"
#include "updown/phi.hpp"
#include "updown/witness.hpp"

using namespace updown;

namespace {

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

std::uint64_t closure_size(const Family& f) {
  return updown_closure(f).updown.count();
}

bool is_witness(const Family& f) {
  return closure_size(f) == phi_fast(f.ground_size(), f.count());
}

// convex hull of a few random masks plus the given required member
Family random_convex(std::mt19937_64& rng, int n, SubsetMask required) {
  std::uniform_int_distribution<SubsetMask> pick(0, full_mask(n));
  std::vector<SubsetMask> seed{required};
  for (int i = 0; i < 3; ++i) seed.push_back(pick(rng));
  const ClosureTriple c = updown_closure(Family(n, seed));
  return family_intersection(c.up, c.down);
}

}  // namespace

TEST_CASE("cube slices") {
  CHECK(c_family(2, 0) == Family(2, {make_mask({1})}));
  CHECK(c_family(4, 2) == Family(4, {0b0001u, 0b0011u, 0b0101u, 0b0111u}));
  CHECK(c_family(3, 3) == Family::full(3));
  CHECK(c_family(0, 0) == Family(0, {0u}));

  for (int n = 0; n <= 8; ++n) {
    for (int a = n % 2; a <= n; a += 2) {
      const Family c = c_family(n, a);
      REQUIRE(c.count() == pow2(a));
      REQUIRE(is_convex(c));
      REQUIRE(is_witness(c));
    }
  }

  CHECK_THROWS_AS(c_family(4, 1), ParityMismatchError);
  CHECK_THROWS_AS(c_family(4, 6), OutOfRangeError);
  CHECK_THROWS_AS(c_family(-1, 1), OutOfRangeError);
}

TEST_CASE("conjugate slices") {
  CHECK(c_star_family(2, 0) == Family(2, {make_mask({1})}));
  CHECK(c_star_family(4, 0).count() == 9);

  for (int n = 0; n <= 8; ++n) {
    for (int a = n % 2; a <= n; a += 2) {
      const Family star = c_star_family(n, a);
      REQUIRE(star.count() == pow2(n) - phi_fast(n, pow2(a)));
      REQUIRE(is_convex(star));
      REQUIRE(is_witness(star));
      REQUIRE(conjugate(c_family(n, a)) == star);
    }
  }
  CHECK_THROWS_AS(c_star_family(5, 2), ParityMismatchError);
}

TEST_CASE("lifting a family into two fresh elements") {
  CHECK(sandwich_lift(Family(2, {make_mask({1})}), 4) ==
        Family(4, {make_mask({1, 2})}));
  CHECK(sandwich_lift(Family(0, {0u}), 2) == Family(2, {make_mask({1})}));

  // closure identity, checked on every convex family over [2] and [3]
  for (int base = 0; base <= 3; ++base) {
    const int n = base + 2;
    const std::uint64_t total = pow2(static_cast<int>(pow2(base)));
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      const Family p = Family::from_words(base, {bits});
      if (!is_convex(p)) continue;
      const Family lifted = sandwich_lift(p, n);
      REQUIRE(lifted.count() == p.count());
      REQUIRE(is_convex(lifted));
      REQUIRE(closure_size(lifted) == 2 * closure_size(p) + p.count());
    }
  }

  CHECK_THROWS_AS(sandwich_lift(Family(2), 5), GroundMismatchError);
  CHECK_THROWS_AS(
      sandwich_lift(Family(2, {0u, make_mask({1, 2})}), 4),
      NotConvexError);
}

TEST_CASE("join of families on complementary blocks") {
  // one worked case: three sets over [3] joined with {emptyset} over [1]
  const Family f1(3, {make_mask({1, 2, 3}), make_mask({1, 2}), make_mask({1, 3})});
  const Family f2(1, {0u});
  const Family joined = join_product(f1, f2, 3, 4);
  CHECK(joined.count() == 3);
  CHECK(closure_size(joined) == 11);

  std::mt19937_64 rng(31u);
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int rep = 0; rep < 25; ++rep) {
        const Family a = random_convex(rng, k, full_mask(k));
        const Family b = random_convex(rng, n - k, 0u);
        const Family g = join_product(a, b, k, n);
        REQUIRE(g.count() == a.count() * b.count());
        REQUIRE(is_convex(g));
        REQUIRE(closure_size(g) == pow2(n - k) * a.count() +
                                       pow2(k) * b.count() -
                                       a.count() * b.count());
      }
    }
  }

  CHECK_THROWS_AS(join_product(Family(2), Family(2), 3, 4),
                  GroundMismatchError);
  CHECK_THROWS_AS(join_product(Family(2, {0u}), Family(2, {0u}), 2, 4),
                  PreconditionError);
  CHECK_THROWS_AS(
      join_product(Family(2, {full_mask(2)}), Family(2, {make_mask({1})}), 2, 4),
      PreconditionError);
  CHECK_THROWS_AS(
      join_product(Family(2, {0u, full_mask(2)}),
                   Family(2, {0u, full_mask(2)}), 2, 4),
      NotConvexError);
  CHECK_THROWS_AS(join_product(Family(2, {full_mask(2)}), Family(2, {0u}), 2, 30),
                  OutOfRangeError);
}

TEST_CASE("product witnesses attain the minimum") {
  for (int n = 2; n <= 8; ++n) {
    const int half = n / 2;
    const std::uint64_t cap = pow2(half);
    for (std::uint64_t c = 1; c <= cap; ++c) {
      const std::uint64_t size = n % 2 == 0 ? c * c : 2 * c * c;
      if (size > pow2(n)) break;
      const Family w = product_witness(n, c);
      REQUIRE(w.count() == size);
      REQUIRE(is_convex(w));
      REQUIRE(closure_size(w) == phi_fast(n, size));
    }
  }
  CHECK_THROWS_AS(product_witness(4, 0), OutOfRangeError);
  CHECK_THROWS_AS(product_witness(4, 5), OutOfRangeError);
}

TEST_CASE("interpolation between nested witnesses") {
  const Family small = c_family(4, 0);
  const Family big = c_family(4, 2);
  const std::vector<Family> mids = interpolate(small, big);
  REQUIRE(mids.size() == 2);
  const Family* prev = &small;
  for (const Family& f : mids) {
    REQUIRE(f.count() == prev->count() + 1);
    REQUIRE(is_proper_subfamily(*prev, f));
    REQUIRE(is_convex(f));
    REQUIRE(is_witness(f));
    prev = &f;
  }
  REQUIRE(is_proper_subfamily(*prev, big));

  CHECK(interpolate(c_family(2, 0), c_family(2, 2)).size() == 2);

  CHECK_THROWS_AS(interpolate(big, small), NotNestedError);
  CHECK_THROWS_AS(interpolate(Family(3), Family(4)), GroundMismatchError);
  CHECK_THROWS_AS(
      interpolate(Family(2), Family(2, {0u, full_mask(2)})), NotConvexError);
}

TEST_CASE("canonical chain for n = 2, member by member") {
  const Chain chain = canonical_chain(2);
  REQUIRE(chain.n == 2);
  REQUIRE(chain.families.size() == 5);
  CHECK(chain.families[0] == Family(2));
  CHECK(chain.families[1] == Family(2, {make_mask({1})}));
  CHECK(chain.families[2] == Family(2, {0u, make_mask({1})}));
  CHECK(chain.families[3] == Family(2, {0u, make_mask({1}), make_mask({2})}));
  CHECK(chain.families[4] == Family::full(2));
}

TEST_CASE("canonical chains verify and hit their anchors") {
  CHECK(canonical_chain(1).families[1] == Family(1, {make_mask({1})}));

  for (int n = 0; n <= 8; ++n) {
    const Chain chain = canonical_chain(n);
    REQUIRE(chain.families.size() == pow2(n) + 1);
    const VerificationReport report = verify_chain(chain);
    REQUIRE(report.pass);
    REQUIRE(report.summary().find("pass") != std::string::npos);

    for (int a = n % 2; a <= n; a += 2) {
      REQUIRE(chain.families[pow2(a)] == c_family(n, a));
    }
    // conjugate anchors sit at the paired indices
    for (int a = n % 2; n >= 2 && a <= n - 2; a += 2) {
      REQUIRE(chain.families[star_index(n, pow2(a))] == c_star_family(n, a));
    }
  }

  CHECK_THROWS_AS(canonical_chain(-1), OutOfRangeError);
  CHECK_THROWS_AS(canonical_chain(13), TooLargeError);
}

TEST_CASE("chain verification rejects corrupted chains") {
  Chain chain = canonical_chain(3);
  chain.families[1] = Family(3, {0u});  // {emptyset}: closure is everything
  const VerificationReport report = verify_chain(chain);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.summary().empty());
  bool flagged = false;
  for (const ChainIndexCheck& c : report.indices) {
    if (c.m == 1) {
      flagged = true;
      CHECK_FALSE(c.pass());
      CHECK(c.cardinality);
      CHECK_FALSE(c.witness);
    }
  }
  CHECK(flagged);

  Chain truncated = canonical_chain(2);
  truncated.families.pop_back();
  CHECK_THROWS_AS(verify_chain(truncated), PreconditionError);

  Chain mixed = canonical_chain(2);
  mixed.families[2] = Family(3, {0u, 1u});
  CHECK_THROWS_AS(verify_chain(mixed), GroundMismatchError);
}

TEST_CASE("conjugates of chain witnesses are witnesses") {
  for (int n = 2; n <= 7; ++n) {
    const Chain chain = canonical_chain(n);
    for (std::uint64_t l = 0; l <= pow2(n - 2); ++l) {
      const Family conj = conjugate(chain.families[l]);
      REQUIRE(is_convex(conj));
      REQUIRE(conj.count() == star_index(n, l));
      REQUIRE(closure_size(conj) == pow2(n) - l);
    }
  }
}
