#include "updown/phi.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "updown/family.hpp"

namespace updown {

namespace {

void check_engine_n(int n) {
  if (n < 0) throw OutOfRangeError("n must be nonnegative");
  if (n > kMaxGroundSize)
    throw TooLargeError("n " + std::to_string(n) + " exceeds engine cap " +
                        std::to_string(kMaxGroundSize));
}

void check_engine_nm(int n, std::uint64_t m) {
  check_engine_n(n);
  if (m > (std::uint64_t{1} << n))
    throw OutOfRangeError("m " + std::to_string(m) +
                          " exceeds the number of subsets of [" +
                          std::to_string(n) + "]");
}

}  // namespace

bool dyadic_equal(DyadicRational a, DyadicRational b) {
  const unsigned e = std::max(a.exp, b.exp);
  // num <= 2^exp keeps both scaled values within 2^e <= 2^63.
  return (a.num << (e - a.exp)) == (b.num << (e - b.exp));
}

std::uint64_t dyadic_scale_pow2(DyadicRational a, unsigned t) {
  if (t < a.exp)
    throw PreconditionError("scaling exponent below the dyadic denominator");
  return a.num << (t - a.exp);
}

DyadicRational delta(std::uint64_t k, std::uint64_t x) {
  if (k == 0) throw OutOfRangeError("delta needs k >= 1");
  if (x > k) throw OutOfRangeError("delta argument exceeds k");
  if (k == 1) return DyadicRational{x, 0};
  const std::uint64_t lower = k / 2;
  if (x < lower) {
    const DyadicRational d = delta(lower, x);
    return DyadicRational{d.num, d.exp + 1};
  }
  const DyadicRational d = delta(k - lower, x - lower);
  return DyadicRational{(std::uint64_t{1} << d.exp) + d.num, d.exp + 1};
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  if (r > 0xffffffffULL) r = 0xffffffffULL;
  while (r > 0 && r * r > x) --r;
  while (r < 0xffffffffULL && (r + 1) * (r + 1) <= x) ++r;
  return r;
}

namespace {

// phi restricted to m <= 2^{n-2} per ground size (full range for n <= 1),
// filled bottom-up over n-2. Guarded by one mutex; values are deterministic
// so late readers always see the same numbers.
std::map<int, std::vector<std::uint64_t>>& columns() {
  static std::map<int, std::vector<std::uint64_t>> cols;
  return cols;
}
std::mutex g_phi_mutex;

const std::vector<std::uint64_t>& column_for(int n);

std::uint64_t query_locked(int n, std::uint64_t m) {
  const auto& col = column_for(n);
  if (m < col.size()) return col[m];
  // Self-conjugacy: phi(n,m) = 2^n - s for the greatest s with
  // phi(n,s) <= 2^n - m; the column is strictly increasing, so the
  // search stays inside it.
  const std::uint64_t full = std::uint64_t{1} << n;
  const std::uint64_t target = full - m;
  const auto it = std::upper_bound(col.begin(), col.end(), target);
  return full - static_cast<std::uint64_t>(it - col.begin() - 1);
}

const std::vector<std::uint64_t>& column_for(int n) {
  auto& cols = columns();
  if (const auto found = cols.find(n); found != cols.end())
    return found->second;
  std::vector<std::uint64_t> col;
  if (n == 0) {
    col = {0, 1};
  } else if (n == 1) {
    col = {0, 2, 2};
  } else {
    const std::uint64_t limit = std::uint64_t{1} << (n - 2);
    col.resize(limit + 1);
    for (std::uint64_t m = 0; m <= limit; ++m) {
      col[m] = 2 * query_locked(n - 2, m) + m;
      assert(m == 0 || col[m] > col[m - 1]);
    }
  }
  return cols.emplace(n, std::move(col)).first->second;
}

}  // namespace

std::uint64_t phi_recursive(int n, std::uint64_t m) {
  check_engine_nm(n, m);
  std::lock_guard lock(g_phi_mutex);
  return query_locked(n, m);
}

QuickParams quick_params(int n, std::uint64_t m) {
  check_engine_nm(n, m);
  QuickParams p;
  p.kappa = (n % 2 == 0) ? 1 : 2;
  p.nu = n / 2;
  const auto k = static_cast<std::uint64_t>(p.kappa);
  p.c = std::max<std::uint64_t>(1, isqrt(m / k));
  while (k * p.c * (p.c + 1) <= m) ++p.c;
  while (p.c > 1 && k * p.c * (p.c - 1) > m) --p.c;
  assert(k * p.c * (p.c - 1) <= m && m < k * p.c * (p.c + 1));
  return p;
}

std::uint64_t phi_fast(int n, std::uint64_t m) {
  check_engine_nm(n, m);
  if (m == 0) return 0;
  const QuickParams p = quick_params(n, m);
  const auto kappa = static_cast<std::uint64_t>(p.kappa);
  const unsigned half_up = static_cast<unsigned>((n + 1) / 2);
  const std::uint64_t root = std::uint64_t{1} << half_up;  // kappa * 2^nu
  const DyadicRational d = delta(2 * kappa * p.c, m - kappa * p.c * (p.c - 1));
  // The dyadic denominator never exceeds 2 * root, so this scaling is exact.
  const std::uint64_t scaled = dyadic_scale_pow2(d, half_up + 1);
  return root * (2 * p.c - 1) + scaled - m;
}

LowerBound lower_bound_f(int n, std::uint64_t m) {
  check_engine_nm(n, m);
  const std::uint64_t radicand = (std::uint64_t{1} << (n + 2)) * m;
  const std::uint64_t r = isqrt(radicand);
  return LowerBound{r - m, r * r == radicand};
}

int explicit_bound_exponent(int n, std::uint64_t m) {
  check_engine_nm(n, m);
  if (m == 0) throw OutOfRangeError("exponent requires m >= 1");
  for (int a = n % 2; a <= n; a += 2)
    if (m < (std::uint64_t{1} << (a + 1))) return a;
  // a = n always satisfies m <= 2^n < 2^{n+1}.
  return n;
}

std::uint64_t upper_bound_explicit(int n, std::uint64_t m) {
  check_engine_nm(n, m);
  if (m == 0) return 0;
  const int a = explicit_bound_exponent(n, m);
  return (std::uint64_t{1} << ((n + a) / 2)) +
         (std::uint64_t{1} << ((n - a) / 2)) * m - m;
}

std::uint64_t self_conjugate_s(int n, std::uint64_t m) {
  check_engine_nm(n, m);
  const std::uint64_t full = std::uint64_t{1} << n;
  const std::uint64_t target = full - m;
  std::uint64_t lo = 0;
  std::uint64_t hi = full;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (phi_fast(n, mid) <= target)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::uint64_t star_index(int n, std::uint64_t l) {
  check_engine_n(n);
  const std::uint64_t cap = n >= 2 ? (std::uint64_t{1} << (n - 2)) : 0;
  if (l > cap)
    throw OutOfRangeError("conjugate pairing needs l <= 2^{n-2}");
  return (std::uint64_t{1} << n) - phi_fast(n, l);
}

std::uint64_t cross_sperner_g(int n, std::uint64_t m) {
  check_engine_nm(n, m);
  if (m == 0) throw OutOfRangeError("cross-Sperner size requires m >= 1");
  return (std::uint64_t{1} << n) - phi_fast(n, m);
}

PhiTable phi_table(int n) {
  check_engine_n(n);
  constexpr int kTableCap = 20;
  if (n > kTableCap)
    throw TooLargeError("phi tables cap n at " + std::to_string(kTableCap));
  PhiTable t;
  t.n = n;
  const std::uint64_t full = std::uint64_t{1} << n;
  t.values.resize(full + 1);
  for (std::uint64_t m = 0; m <= full; ++m) {
    t.values[m] = phi_fast(n, m);
    if (t.values[m] != phi_recursive(n, m))
      throw Error("phi evaluators disagree at n=" + std::to_string(n) +
                  " m=" + std::to_string(m));
  }
  return t;
}

std::vector<std::uint64_t> phi_partition(int n) {
  const PhiTable t = phi_table(n);
  std::vector<std::uint64_t> parts(t.values.rbegin(), t.values.rend());
  parts.pop_back();  // drop phi(n,0) = 0
  return parts;
}

std::vector<std::uint64_t> conjugate_partition(
    const std::vector<std::uint64_t>& parts) {
  if (parts.empty()) return {};
  const std::uint64_t largest = parts.front();
  std::vector<std::uint64_t> count(largest + 1, 0);
  for (std::uint64_t p : parts) {
    if (p > largest) throw PreconditionError("partition must be nonincreasing");
    if (p > 0) ++count[p];
  }
  std::vector<std::uint64_t> out(largest);
  std::uint64_t running = 0;
  for (std::uint64_t j = largest; j >= 1; --j) {
    running += count[j];
    out[j - 1] = running;
  }
  return out;
}

std::uint64_t durfee_side(const PhiTable& table) {
  std::vector<std::uint64_t> parts(table.values.rbegin(),
                                   table.values.rend());
  parts.pop_back();
  std::uint64_t d = 0;
  while (d < parts.size() && parts[d] >= d + 1) ++d;
  return d;
}

}  // namespace updown
