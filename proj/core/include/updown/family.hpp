#pragma once

/**
 * Families of subsets of {1,...,n} and their up/down closures.
 *
 * A subset of [n] is a SubsetMask: element i lives in bit i-1. A Family
 * stores a ground size together with one membership bit per mask, so the
 * whole family is a 2^n-bit vector and the lattice transforms below run in
 * O(n * 2^n / 64) word operations instead of pairwise scans.
 *
 * Families are immutable once constructed and every operation is a pure
 * function returning a fresh value; instances can be shared across threads
 * without synchronization.
 */

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "updown/errors.hpp"

namespace updown {

/// One subset of [n]; element i is bit i-1.
using SubsetMask = std::uint32_t;

/// Hard cap on ground sizes. At n = 24 the membership vector is 2 MiB;
/// operations reject larger n instead of silently degrading.
inline constexpr int kMaxGroundSize = 24;

/// The mask of the whole ground set [n].
constexpr SubsetMask full_mask(int n) {
  return n <= 0 ? 0u : SubsetMask{0xffffffffu} >> (32 - n);
}

/// Whether 1-based element is in the mask.
constexpr bool mask_contains(SubsetMask a, int element) {
  return (a >> (element - 1)) & 1u;
}

/// Mask from 1-based elements, e.g. make_mask({1,3}).
SubsetMask make_mask(std::initializer_list<int> elements);

/// The 1-based elements of a mask, ascending.
std::vector<int> mask_elements(SubsetMask a);

/// Image of a mask under the relabeling x -> n+1-x.
SubsetMask reverse_mask(int n, SubsetMask a);

/// Text form "{1,3}"; the empty set prints as "{}".
std::string mask_to_string(SubsetMask a);

class Family {
 public:
  /// The empty family over [ground_size].
  explicit Family(int ground_size);

  /// Family with the given member masks (duplicates collapse).
  Family(int ground_size, std::span<const SubsetMask> members);
  Family(int ground_size, std::initializer_list<SubsetMask> members);

  /// The family of all 2^n subsets of [ground_size].
  static Family full(int ground_size);

  /// Adopts a raw membership vector; word w holds masks 64w .. 64w+63.
  /// Bits at positions >= 2^n are cleared.
  static Family from_words(int ground_size, std::vector<std::uint64_t> words);

  int ground_size() const { return n_; }
  std::uint64_t universe_size() const { return std::uint64_t{1} << n_; }
  std::uint64_t count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool is_full() const { return count_ == universe_size(); }
  bool contains(SubsetMask a) const {
    return a < universe_size() && ((words_[a >> 6] >> (a & 63)) & 1u);
  }

  /// Member masks in ascending numeric order.
  std::vector<SubsetMask> members() const;

  std::span<const std::uint64_t> words() const { return words_; }

  /// Calls fn(SubsetMask) for every member, ascending.
  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<SubsetMask>((w << 6) + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_;
  std::uint64_t count_;
  std::vector<std::uint64_t> words_;
};

/// The three closures of a family, computed together.
struct ClosureTriple {
  Family up;
  Family down;
  Family updown;
};

/// All supersets of members: { S : A subset of S for some member A }.
Family up_closure(const Family& f);

/// All subsets of members: { S : S subset of A for some member A }.
Family down_closure(const Family& f);

/// up, down, and their union. |updown| = |up| + |down| - |up intersect down|.
ClosureTriple updown_closure(const Family& f);

/// Whether every set sandwiched between two members is itself a member,
/// i.e. the intersection of up and down closures is the family itself.
bool is_convex(const Family& f);

/// Members with no other member strictly below / above them.
Family minimal_sets(const Family& f);
Family maximal_sets(const Family& f);

/// { [n] \ A : A in F }.
Family complement_family(const Family& f);

/// { rho(A) : A in F } for the relabeling rho(x) = n+1-x.
Family reverse_family(const Family& f);

/// 2^[n] minus the up/down closure of reverse_family(f). Always convex.
Family conjugate(const Family& f);

/// Sets gained by closing: updown closure minus the family itself.
Family boundary(const Family& f);

/// a subset of b, resp. a proper subset of b. Grounds must match.
bool is_subfamily(const Family& a, const Family& b);
bool is_proper_subfamily(const Family& a, const Family& b);

Family family_union(const Family& a, const Family& b);
Family family_intersection(const Family& a, const Family& b);
Family family_difference(const Family& a, const Family& b);

}  // namespace updown
