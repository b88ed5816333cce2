#pragma once

/**
 * Compression shifts on set families.
 *
 * A shift pair (insert, erase) rewrites each member F with erase inside F
 * and insert disjoint from F to (F \ erase) | insert, unless the rewritten
 * set is already a member; everything else stays put. Cardinality is always
 * preserved. A family fixed by every ordered pair (max(insert) < min(erase))
 * is strongly shifted.
 *
 * Ordered pairs are enumerated in a canonical order: ascending by the
 * largest element of erase, then by |insert| + |erase|, then by the two
 * masks as integers. The pair-scan operations cap the ground size at 14;
 * they are test and analysis surface, not bulk machinery.
 */

#include <cstdint>
#include <functional>
#include <vector>

#include "updown/family.hpp"

namespace updown {

/// Index sets of one shift: members trade erase for insert.
struct ShiftPair {
  SubsetMask insert = 0;
  SubsetMask erase = 0;

  friend bool operator==(const ShiftPair&, const ShiftPair&) = default;
};

/// Throws InvalidShiftPairError unless both masks are nonempty, disjoint
/// and inside the ground set.
void validate_shift_pair(const ShiftPair& pair, int ground_size);

/// Whether max(insert) < min(erase).
bool is_ordered_pair(const ShiftPair& pair);

/// Every ordered pair over [n], in the canonical order. Cap 14.
std::vector<ShiftPair> ordered_pairs(int n);

/// Member counts per element, listed from element n down to 1. Applying an
/// ordered pair that moves anything strictly decreases this vector
/// lexicographically, which is what terminates strongly_shift.
std::vector<std::uint64_t> shift_potential(const Family& f);

/// Applies one shift pair to every member. |result| = |f|.
Family shift(const Family& f, const ShiftPair& pair);

/// Whether every ordered pair fixes the family. Ground size capped at 14.
bool is_strongly_shifted(const Family& f);

/// Ordered pairs that move the family, in canonical order. Cap 14.
std::vector<ShiftPair> violating_pairs(const Family& f);

/// Applies the canonically first violating ordered pair until none is left.
/// That pair is automatically minimal: every proper subpair sorts earlier
/// in the canonical order, so it already fixes the family. Each application
/// strictly reduces the number of members containing max(erase) and leaves
/// the counts for larger elements unchanged, which bounds the iteration.
/// on_step, when given, observes (pair, family after applying it). Cap 14.
Family strongly_shift(
    const Family& f,
    const std::function<void(const ShiftPair&, const Family&)>& on_step = {});

}  // namespace updown
