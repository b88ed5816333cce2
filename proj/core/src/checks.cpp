#include "updown/checks.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "updown/family.hpp"
#include "updown/oracle.hpp"
#include "updown/phi.hpp"
#include "updown/shift.hpp"
#include "updown/witness.hpp"

namespace updown::checks {
namespace {

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

std::string at(int n, std::uint64_t m, const std::string& what) {
  std::ostringstream os;
  os << "n=" << n << " m=" << m << ": " << what;
  return os.str();
}

}  // namespace

CheckResult phi_method_agreement(const Options& opt) {
  CheckResult r{"phi-methods", true, ""};
  for (int n = 0; n <= opt.max_n; ++n) {
    for (std::uint64_t m = 0; m <= pow2(n); ++m) {
      const std::uint64_t fast = phi_fast(n, m);
      const std::uint64_t rec = phi_recursive(n, m);
      if (fast != rec) {
        r.pass = false;
        r.detail = at(n, m,
                      "closed form " + std::to_string(fast) +
                          " != recursion " + std::to_string(rec));
        return r;
      }
    }
  }
  return r;
}

CheckResult lower_bound_window(const Options& opt) {
  CheckResult r{"bound-lower", true, ""};
  auto fail = [&r](int n, std::uint64_t m, const std::string& what) {
    r.pass = false;
    r.detail = at(n, m, what);
  };
  for (int n = 0; n <= opt.max_n; ++n) {
    for (std::uint64_t m = 0; m <= pow2(n); ++m) {
      const std::uint64_t phi = phi_fast(n, m);
      const std::uint64_t sq = pow2(n + 2) * m;  // (phi + m)^2 is compared to this
      const std::uint64_t s = phi + m;
      if (s * s < sq) {
        fail(n, m, "phi drops below sqrt(2^{n+2} m) - m");
        return r;
      }
      const std::uint64_t root = isqrt(sq);
      const bool square = root * root == sq;
      if (square && s != root) {
        fail(n, m, "2^{n+2} m is a perfect square but the bound is not attained");
        return r;
      }
      const LowerBound lb = lower_bound_f(n, m);
      if (lb.floor_value != root - m || lb.is_exact != square) {
        fail(n, m, "lower_bound_f disagrees with a direct evaluation");
        return r;
      }
      if (lb.is_exact && phi != lb.floor_value) {
        fail(n, m, "exact lower bound not matched by phi");
        return r;
      }
      // upper bound phi <= sqrt(2^{n+2} m) - m + sqrt(2^n), squared out
      if (n % 2 == 0) {
        const std::uint64_t half = pow2(n / 2);
        if (s > half && (s - half) * (s - half) > sq) {
          fail(n, m, "phi exceeds the square-root upper bound");
          return r;
        }
      } else {
        const std::uint64_t base = sq + pow2(n);
        if (s * s > base) {
          const std::uint64_t t = s * s - base;
          const auto lhs = static_cast<unsigned __int128>(t) * t;
          const auto rhs = static_cast<unsigned __int128>(pow2(n + 2)) * pow2(n + 2) * m;
          if (lhs > rhs) {
            fail(n, m, "phi exceeds the square-root upper bound");
            return r;
          }
        }
      }
    }
  }
  return r;
}

CheckResult upper_bound_window(const Options& opt) {
  CheckResult r{"bound-upper", true, ""};
  auto fail = [&r](int n, std::uint64_t m, const std::string& what) {
    r.pass = false;
    r.detail = at(n, m, what);
  };
  for (int n = 0; n <= opt.bound_max; ++n) {
    for (std::uint64_t m = 1; m <= pow2(n); ++m) {
      const std::uint64_t phi = phi_fast(n, m);
      const std::uint64_t ub = upper_bound_explicit(n, m);
      if (ub < phi) {
        fail(n, m, "explicit bound falls below phi");
        return r;
      }
      const int a = explicit_bound_exponent(n, m);
      if ((n - a) % 2 != 0 || m >= pow2(a + 1) || (a >= 2 && m < pow2(a - 1))) {
        fail(n, m, "bound exponent out of its defining range");
        return r;
      }
      const std::uint64_t spread = pow2((a + 1) / 2) + pow2(a / 2);
      const std::uint64_t lo = pow2(a) + 2 - spread;
      const std::uint64_t hi = pow2(a) + spread - 1;
      if (m >= lo && m <= hi && ub != phi) {
        fail(n, m, "bound is not tight on its window around 2^a");
        return r;
      }
    }
  }
  return r;
}

CheckResult self_conjugacy(const Options& opt) {
  CheckResult r{"self-conjugate", true, ""};
  for (int n = 0; n <= opt.bound_max; ++n) {
    const auto parts = phi_partition(n);
    if (parts != conjugate_partition(parts)) {
      r.pass = false;
      r.detail = "n=" + std::to_string(n) + ": phi partition is not self-conjugate";
      return r;
    }
    for (std::uint64_t m = 0; m <= pow2(n); ++m) {
      if (pow2(n) - self_conjugate_s(n, m) != phi_fast(n, m)) {
        r.pass = false;
        r.detail = at(n, m, "self_conjugate_s does not complement phi");
        return r;
      }
    }
  }
  return r;
}

CheckResult delta_identities(const Options&) {
  CheckResult r{"delta-profile", true, ""};
  auto fail = [&r](const std::string& what) {
    r.pass = false;
    r.detail = what;
  };
  for (std::uint64_t k = 1; k <= 256; ++k) {
    unsigned t = 0;
    while (pow2(t) < k) ++t;  // least t with k <= 2^t
    if (dyadic_scale_pow2(delta(k, 0), t) != 0 ||
        dyadic_scale_pow2(delta(k, k), t) != pow2(t)) {
      fail("k=" + std::to_string(k) + ": endpoint values are not 0 and 1");
      return r;
    }
    for (std::uint64_t x = 0; x < k; ++x) {
      // increments of delta_k are at least 2^-t
      if (dyadic_scale_pow2(delta(k, x + 1), t) <
          dyadic_scale_pow2(delta(k, x), t) + 1) {
        fail("k=" + std::to_string(k) + " x=" + std::to_string(x) +
             ": increment smaller than 2^-t");
        return r;
      }
    }
  }
  for (unsigned t = 0; t <= 8; ++t) {
    const std::uint64_t k = pow2(t);
    for (std::uint64_t x = 0; x <= k; ++x) {
      if (dyadic_scale_pow2(delta(k, x), t) != x) {
        fail("t=" + std::to_string(t) + " x=" + std::to_string(x) +
             ": 2^t delta_{2^t}(x) != x");
        return r;
      }
    }
    if (t >= 1 && k >= 2) {
      for (std::uint64_t x = 1; x <= k - 1; ++x) {
        if (dyadic_scale_pow2(delta(k - 1, x), t) != x + 1) {
          fail("t=" + std::to_string(t) + " x=" + std::to_string(x) +
               ": 2^t delta_{2^t-1}(x) != x+1");
          return r;
        }
      }
    }
  }
  // paired-search identity: with k + q = 2^t, the greatest r in {0..q}
  // with 2^t delta_q(r) - r <= k - l is q - 2^t delta_k(l) + l
  for (unsigned t = 1; t <= 8; ++t) {
    const std::uint64_t full = pow2(t);
    for (std::uint64_t k = 1; k < full; ++k) {
      const std::uint64_t q = full - k;
      for (std::uint64_t l = 0; l <= k; ++l) {
        const std::uint64_t expected = q + l - dyadic_scale_pow2(delta(k, l), t);
        std::uint64_t found = q;
        while (dyadic_scale_pow2(delta(q, found), t) + l > k + found) --found;
        if (found != expected) {
          fail("t=" + std::to_string(t) + " k=" + std::to_string(k) +
               " l=" + std::to_string(l) + ": paired search returns " +
               std::to_string(found) + ", formula says " +
               std::to_string(expected));
          return r;
        }
      }
    }
  }
  return r;
}

CheckResult chain_suite(const Options& opt) {
  CheckResult r{"witness-chain", true, ""};
  for (int n = 0; n <= opt.chain_max; ++n) {
    const VerificationReport report = verify_chain(canonical_chain(n));
    if (!report.pass) {
      r.pass = false;
      r.detail = report.summary();
      return r;
    }
  }
  return r;
}

CheckResult oracle_agreement(const Options& opt) {
  CheckResult r{"oracle", true, ""};
  auto fail = [&r](int n, std::uint64_t m, const std::string& what) {
    r.pass = false;
    r.detail = at(n, m, what);
  };
  const int exhaustive_max = std::min(oracle::kExhaustiveCap, opt.oracle_max);
  for (int n = 0; n <= exhaustive_max; ++n) {
    for (std::uint64_t m = 0; m <= pow2(n); ++m) {
      const auto brute = oracle::brute_min_updown(n, m);
      if (brute.value != phi_fast(n, m)) {
        fail(n, m, "exhaustive minimum " + std::to_string(brute.value) +
                       " != phi " + std::to_string(phi_fast(n, m)));
        return r;
      }
      if (brute.witness.count() != m ||
          updown_closure(brute.witness).updown.count() != brute.value) {
        fail(n, m, "returned witness does not attain the minimum");
        return r;
      }
      if (oracle::brute_min_updown_convex(n, m) != brute.value) {
        fail(n, m, "convex minimum differs from the overall minimum");
        return r;
      }
    }
  }
  if (opt.oracle_max >= oracle::kBranchBoundCap) {
    const int n = oracle::kBranchBoundCap;
    for (std::uint64_t m = 0; m <= pow2(n); ++m) {
      if (oracle::brute_min_updown_convex(n, m) != phi_fast(n, m)) {
        fail(n, m, "convex search disagrees with phi");
        return r;
      }
    }
  }
  return r;
}

CheckResult cross_sperner_suite(const Options& opt) {
  CheckResult r{"cross-sperner", true, ""};
  auto bound = [](int n) {
    return pow2(n) - pow2((n + 1) / 2) - pow2(n / 2) + 2;
  };
  for (int n = 2; n <= std::min(oracle::kBranchBoundCap, opt.oracle_max); ++n) {
    const std::uint64_t brute = oracle::brute_cross_sperner_max(n);
    if (brute != bound(n)) {
      r.pass = false;
      r.detail = "n=" + std::to_string(n) + ": brute maximum " +
                 std::to_string(brute) + " != " + std::to_string(bound(n));
      return r;
    }
  }
  for (int n = 2; n <= opt.max_n; ++n) {
    std::uint64_t best = 0;
    for (std::uint64_t m = 1; m <= pow2(n); ++m) {
      if (phi_fast(n, m) >= pow2(n)) break;  // partner side would be empty
      best = std::max(best, m + cross_sperner_g(n, m));
    }
    if (best != bound(n)) {
      r.pass = false;
      r.detail = "n=" + std::to_string(n) + ": formula maximum " +
                 std::to_string(best) + " != " + std::to_string(bound(n));
      return r;
    }
  }
  for (int n : {2, 4, 5}) {
    if (n > opt.oracle_max) continue;
    const auto configs = oracle::extremal_configs_m1(n);
    std::uint64_t half_sized = 0;
    for (SubsetMask a = 0; a < pow2(n); ++a) {
      const int size = std::popcount(a);
      if (size == n / 2 || size == (n + 1) / 2) ++half_sized;
    }
    if (configs.size() != half_sized) {
      r.pass = false;
      r.detail = "n=" + std::to_string(n) + ": " +
                 std::to_string(configs.size()) +
                 " extremal one-set configurations, expected " +
                 std::to_string(half_sized);
      return r;
    }
    for (const Family& f : configs) {
      bool ok = f.count() == 1;
      f.for_each_member([&](SubsetMask a) {
        const int size = std::popcount(a);
        if (size != n / 2 && size != (n + 1) / 2) ok = false;
      });
      if (!ok) {
        r.pass = false;
        r.detail = "n=" + std::to_string(n) +
                   ": an extremal configuration is not a half-sized set";
        return r;
      }
    }
  }
  return r;
}

namespace {

// Every proper nonempty subpair must leave the family unchanged before the
// closure inequalities are required to hold for the pair itself.
bool subpairs_fix(const Family& f, const ShiftPair& p) {
  for (SubsetMask i = (p.insert - 1) & p.insert; i != 0; i = (i - 1) & p.insert) {
    if (shift(f, ShiftPair{i, p.erase}) != f) return false;
  }
  for (SubsetMask j = (p.erase - 1) & p.erase; j != 0; j = (j - 1) & p.erase) {
    if (shift(f, ShiftPair{p.insert, j}) != f) return false;
  }
  return true;
}

struct OneShift {
  std::string message;  // empty when every property held
  bool moved = false;
};

// Properties of a single application: cardinality, complement duality,
// potential decrease, and the closure inequalities when the pair is minimal.
OneShift check_one_shift(const Family& f, const ClosureTriple& clo,
                         bool convex, const std::vector<std::uint64_t>& pot,
                         const ShiftPair& p) {
  OneShift out;
  const Family g = shift(f, p);
  if (g.count() != f.count()) {
    out.message = "shift changed the member count";
    return out;
  }
  if (complement_family(g) !=
      shift(complement_family(f), ShiftPair{p.erase, p.insert})) {
    out.message = "complement duality violated";
    return out;
  }
  if (g == f) return out;
  out.moved = true;
  if (!(shift_potential(g) < pot)) {
    out.message = "potential did not decrease";
    return out;
  }
  if (subpairs_fix(f, p)) {
    const ClosureTriple gclo = updown_closure(g);
    if (gclo.up.count() > clo.up.count()) {
      out.message = "up closure grew under a minimal pair";
      return out;
    }
    if (gclo.down.count() > clo.down.count()) {
      out.message = "down closure grew under a minimal pair";
      return out;
    }
    if (convex && gclo.updown.count() > clo.updown.count()) {
      out.message = "closure grew on a convex family";
      return out;
    }
  }
  return out;
}

}  // namespace

CheckResult shifting_suite(const Options& opt) {
  CheckResult r{"shifting", true, ""};
  auto fail = [&r](int n, std::uint64_t word, const std::string& what) {
    std::ostringstream os;
    os << "n=" << n << " family word 0x" << std::hex << word << ": " << what;
    r.pass = false;
    r.detail = os.str();
  };

  for (int n = 2; n <= 4; ++n) {
    const auto pairs = ordered_pairs(n);
    const Family core = c_family(n, n - 2);
    const std::uint64_t total = pow2(1 << n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      const Family f = Family::from_words(n, {bits});
      const ClosureTriple clo = updown_closure(f);
      const bool convex = is_convex(f);
      const auto pot = shift_potential(f);
      bool fixed_everywhere = true;
      for (const auto& p : pairs) {
        const OneShift one = check_one_shift(f, clo, convex, pot, p);
        if (!one.message.empty()) {
          fail(n, bits, one.message);
          return r;
        }
        if (one.moved) fixed_everywhere = false;
      }
      if (is_strongly_shifted(f) != fixed_everywhere) {
        fail(n, bits, "is_strongly_shifted disagrees with the pair sweep");
        return r;
      }
      const std::uint64_t m = f.count();
      if (fixed_everywhere && m >= 1 && m <= pow2(n - 2) &&
          !is_subfamily(f, core) &&
          clo.updown.count() < pow2(n - 1) + m) {
        fail(n, bits, "strongly shifted family beats the closure bound");
        return r;
      }
      if (convex && clo.updown.count() == phi_fast(n, m)) {
        const Family g = strongly_shift(f);
        if (g.count() != m || !is_convex(g) || !is_strongly_shifted(g) ||
            updown_closure(g).updown.count() != clo.updown.count()) {
          fail(n, bits, "strong shifting broke a witness");
          return r;
        }
      }
    }
  }

  for (int n = 5; n <= 6; ++n) {
    const auto pairs = ordered_pairs(n);
    const Family core = c_family(n, n - 2);
    const int slots = 1 << n;
    const std::uint64_t word_mask =
        slots == 64 ? ~std::uint64_t{0} : pow2(slots) - 1;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    std::uniform_int_distribution<int> slot(0, slots - 1);
    std::uniform_int_distribution<int> sparse(0, slots / 4);
    for (int it = 0; it < opt.shift_cases; ++it) {
      std::uint64_t bits = 0;
      if (it % 2 == 0) {
        bits = rng() & word_mask;
      } else {
        const int m = sparse(rng);
        for (int j = 0; j < m; ++j) bits |= std::uint64_t{1} << slot(rng);
      }
      const Family f = Family::from_words(n, {bits});
      const ClosureTriple clo = updown_closure(f);
      const OneShift one = check_one_shift(f, clo, is_convex(f),
                                           shift_potential(f), pairs[pick(rng)]);
      if (!one.message.empty()) {
        fail(n, bits, one.message);
        return r;
      }
      if (it % 50 != 0) continue;
      // full run from the convex cover of f
      const Family hull = family_intersection(clo.up, clo.down);
      const std::uint64_t before = updown_closure(hull).updown.count();
      const Family g = strongly_shift(hull);
      const std::uint64_t after = updown_closure(g).updown.count();
      if (g.count() != hull.count() || !is_strongly_shifted(g)) {
        fail(n, bits, "strong shifting did not reach a same-size fixed point");
        return r;
      }
      if (after > before) {
        fail(n, bits, "closure grew across a full strong shift");
        return r;
      }
      const std::uint64_t m = g.count();
      if (m >= 1 && m <= std::uint64_t(slots / 4) && !is_subfamily(g, core) &&
          after < pow2(n - 1) + m) {
        fail(n, bits, "strongly shifted family beats the closure bound");
        return r;
      }
    }
    const Chain chain = canonical_chain(n);
    for (const Family& w : chain.families) {
      const std::uint64_t target = phi_fast(n, w.count());
      const Family g = strongly_shift(w);
      if (g.count() != w.count() || !is_convex(g) || !is_strongly_shifted(g) ||
          updown_closure(g).updown.count() != target) {
        r.pass = false;
        r.detail = at(n, w.count(), "strong shifting broke a chain witness");
        return r;
      }
    }
  }
  return r;
}

std::vector<CheckResult> run_all(const Options& opt) {
  return {phi_method_agreement(opt), lower_bound_window(opt),
          upper_bound_window(opt),   self_conjugacy(opt),
          delta_identities(opt),     chain_suite(opt),
          oracle_agreement(opt),     cross_sperner_suite(opt),
          shifting_suite(opt)};
}

}  // namespace updown::checks
