#include "updown/witness.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <string>
#include <utility>

#include "updown/phi.hpp"

namespace updown {

namespace {

constexpr int kChainCap = 12;

void check_slice_args(int n, int a) {
  if (n < 0 || n > kMaxGroundSize)
    throw OutOfRangeError("ground size out of range");
  if (a < 0 || a > n) throw OutOfRangeError("slice width out of range");
  if ((n - a) % 2 != 0)
    throw ParityMismatchError("slice width must match the parity of n");
}

}  // namespace

Family c_family(int n, int a) {
  check_slice_args(n, a);
  const SubsetMask lower = full_mask((n - a) / 2);
  const SubsetMask upper = full_mask((n + a) / 2);
  const SubsetMask free = upper & ~lower;
  std::vector<SubsetMask> members;
  members.reserve(std::size_t{1} << a);
  SubsetMask sub = 0;
  do {
    members.push_back(lower | sub);
    sub = (sub - free) & free;  // next submask of free, wrapping at 0
  } while (sub != 0);
  return Family(n, members);
}

Family c_star_family(int n, int a) {
  check_slice_args(n, a);
  const SubsetMask low_window = full_mask(n) & ~full_mask((n - a) / 2);
  const SubsetMask high_tail = full_mask(n) & ~full_mask((n + a) / 2);
  std::vector<SubsetMask> members;
  for (SubsetMask x = 0; x < (std::uint64_t{1} << n); ++x) {
    const bool inside_low = (x & ~low_window) == 0;
    const bool above_high = (x & high_tail) == high_tail;
    if (!inside_low && !above_high) members.push_back(x);
  }
  return Family(n, members);
}

Family sandwich_lift(const Family& p, int n) {
  if (n < 2 || n > kMaxGroundSize)
    throw OutOfRangeError("lift target ground size out of range");
  if (p.ground_size() != n - 2)
    throw GroundMismatchError("lift source must live on a ground set of size n-2");
  if (!is_convex(p)) throw NotConvexError("lift source must be convex");
  std::vector<SubsetMask> members;
  members.reserve(p.count());
  p.for_each_member([&](SubsetMask a) {
    members.push_back(static_cast<SubsetMask>((a << 1) | 1u));
  });
  return Family(n, members);
}

Family join_product(const Family& f1, const Family& f2, int k, int n) {
  if (n < 0 || n > kMaxGroundSize || k < 0 || k > n)
    throw OutOfRangeError("join split out of range");
  if (f1.ground_size() != k)
    throw GroundMismatchError("first factor must live on [k]");
  if (f2.ground_size() != n - k)
    throw GroundMismatchError("second factor must live on n-k elements");
  if (!f1.contains(full_mask(k)))
    throw PreconditionError("first factor must contain the whole lower block");
  if (!f2.contains(0))
    throw PreconditionError("second factor must contain the empty set");
  if (!is_convex(f1) || !is_convex(f2))
    throw NotConvexError("join factors must be convex");
  std::vector<SubsetMask> members;
  members.reserve(f1.count() * f2.count());
  f1.for_each_member([&](SubsetMask a) {
    f2.for_each_member([&](SubsetMask b) {
      members.push_back(a | static_cast<SubsetMask>(b << k));
    });
  });
  return Family(n, members);
}

Family product_witness(int n, std::uint64_t c) {
  if (n < 0 || n > kMaxGroundSize) throw OutOfRangeError("n out of range");
  const int k = n / 2;  // lower block; the upper block has n - k elements
  const std::uint64_t low_size = std::uint64_t{1} << k;
  const std::uint64_t top_count = c;
  const std::uint64_t bottom_count = (n % 2 == 0) ? c : 2 * c;
  if (c < 1 || top_count > low_size ||
      bottom_count > (std::uint64_t{1} << (n - k)))
    throw OutOfRangeError("product parameter out of range");
  // Prefix families in mask order are convex: masks are monotone under
  // set inclusion.
  std::vector<SubsetMask> top;
  for (std::uint64_t i = 0; i < top_count; ++i)
    top.push_back(static_cast<SubsetMask>(low_size - 1 - i));
  std::vector<SubsetMask> bottom;
  for (std::uint64_t i = 0; i < bottom_count; ++i)
    bottom.push_back(static_cast<SubsetMask>(i));
  return join_product(Family(k, top), Family(n - k, bottom), k, n);
}

namespace {

Family remove_member(const Family& f, SubsetMask a) {
  std::vector<std::uint64_t> w(f.words().begin(), f.words().end());
  w[a >> 6] &= ~(std::uint64_t{1} << (a & 63));
  return Family::from_words(f.ground_size(), std::move(w));
}

}  // namespace

std::vector<Family> interpolate(const Family& small, const Family& big) {
  if (small.ground_size() != big.ground_size())
    throw GroundMismatchError("interpolation endpoints on different grounds");
  if (!is_convex(small) || !is_convex(big))
    throw NotConvexError("interpolation endpoints must be convex");
  if (!is_proper_subfamily(small, big))
    throw NotNestedError("interpolation needs small properly inside big");

  const int n = big.ground_size();
  std::vector<Family> reversed;
  Family cur = big;
  while (cur.count() > small.count() + 1) {
    // Only deleting a maximal or minimal member keeps the family convex,
    // and the deletion must also leave the closure at the minimum for the
    // new size. Candidates are tried maximal-first, largest mask first,
    // and the first deletion that preserves minimality is taken.
    const std::uint64_t target = phi_fast(n, cur.count() - 1);
    const Family maxs = family_difference(maximal_sets(cur), small);
    const Family mins = family_difference(minimal_sets(cur), small);
    std::vector<SubsetMask> order;
    maxs.for_each_member([&](SubsetMask a) { order.push_back(a); });
    std::reverse(order.begin(), order.end());
    const auto tail = static_cast<std::ptrdiff_t>(order.size());
    mins.for_each_member([&](SubsetMask a) {
      if (!maxs.contains(a)) order.push_back(a);
    });
    std::reverse(order.begin() + tail, order.end());

    bool advanced = false;
    for (SubsetMask a : order) {
      Family next = remove_member(cur, a);
      if (updown_closure(next).updown.count() != target) continue;
      cur = std::move(next);
      advanced = true;
      break;
    }
    if (!advanced)
      throw Error("interpolation stalled between adjacent anchors");
    reversed.push_back(cur);
  }
  return {reversed.rbegin(), reversed.rend()};
}

Chain canonical_chain(int n) {
  if (n < 0) throw OutOfRangeError("n must be nonnegative");
  if (n > kChainCap)
    throw TooLargeError("canonical chains cap n at " +
                        std::to_string(kChainCap));
  Chain chain;
  chain.n = n;
  if (n == 0) {
    chain.families = {Family(0), Family::full(0)};
    return chain;
  }
  if (n == 1) {
    chain.families = {Family(1), Family(1, {make_mask({1})}), Family::full(1)};
    return chain;
  }

  const Chain prev = canonical_chain(n - 2);
  const std::uint64_t quarter = std::uint64_t{1} << (n - 2);
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<Family> fams(full + 1, Family(n));

  for (std::uint64_t l = 0; l <= quarter; ++l)
    fams[l] = sandwich_lift(prev.families[l], n);

  // Conjugates of the lifted prefix fill the upper anchor indices; the top
  // lifted family is its own conjugate and stitches the two ranges.
  assert(star_index(n, quarter) == quarter &&
         conjugate(fams[quarter]) == fams[quarter]);
  for (std::uint64_t l = 0; l < quarter; ++l) {
    const Family cj = conjugate(fams[l]);
    assert(cj.count() == star_index(n, l));
    fams[star_index(n, l)] = std::move(cj);
  }

  for (std::uint64_t l = 0; l < quarter; ++l) {
    const std::uint64_t lo = star_index(n, l + 1);
    const std::uint64_t hi = star_index(n, l);
    std::vector<Family> mid = interpolate(fams[lo], fams[hi]);
    for (std::size_t i = 0; i < mid.size(); ++i)
      fams[lo + 1 + i] = std::move(mid[i]);
  }

  chain.families = std::move(fams);
  return chain;
}

std::string VerificationReport::summary() const {
  std::string out = "chain n=" + std::to_string(n) + ": ";
  if (pass) return out + "all checks pass";
  std::uint64_t bad = 0;
  for (const auto& c : indices)
    if (!c.pass()) ++bad;
  out += std::to_string(bad) + " failing indices [";
  bool first = true;
  for (const auto& c : indices) {
    if (c.pass()) continue;
    if (!first) out += ' ';
    first = false;
    out += std::to_string(c.m);
    if (!c.cardinality) out += ":size";
    if (!c.convex) out += ":convex";
    if (!c.witness) out += ":closure";
    if (!c.nested) out += ":nesting";
  }
  out += ']';
  for (const auto& a : anchors)
    if (!a.cube_slice || !a.conjugate_slice)
      out += " anchor a=" + std::to_string(a.a) + " broken";
  return out;
}

VerificationReport verify_chain(const Chain& chain) {
  const int n = chain.n;
  if (n < 0 || n > kMaxGroundSize)
    throw OutOfRangeError("chain ground size out of range");
  const std::uint64_t full = std::uint64_t{1} << n;
  if (chain.families.size() != full + 1)
    throw PreconditionError("chain must hold exactly 2^n + 1 families");
  for (const Family& f : chain.families)
    if (f.ground_size() != n)
      throw GroundMismatchError("chain family on the wrong ground set");

  VerificationReport report;
  report.n = n;
  report.indices.resize(full + 1);
  for (std::uint64_t m = 0; m <= full; ++m) {
    const Family& f = chain.families[m];
    ChainIndexCheck& c = report.indices[m];
    c.m = m;
    c.cardinality = f.count() == m;
    c.convex = is_convex(f);
    c.witness = updown_closure(f).updown.count() == phi_fast(n, m);
    c.nested =
        m == full || is_proper_subfamily(f, chain.families[m + 1]);
  }
  for (int a = n % 2; a <= n - 2; a += 2) {
    ChainAnchorCheck check;
    check.a = a;
    const std::uint64_t cube_index = std::uint64_t{1} << a;
    check.cube_slice = chain.families[cube_index] == c_family(n, a);
    check.conjugate_slice =
        chain.families[star_index(n, cube_index)] == c_star_family(n, a);
    report.anchors.push_back(check);
  }
  report.pass = true;
  for (const auto& c : report.indices)
    if (!c.pass()) report.pass = false;
  for (const auto& a : report.anchors)
    if (!a.cube_slice || !a.conjugate_slice) report.pass = false;
  return report;
}

}  // namespace updown
