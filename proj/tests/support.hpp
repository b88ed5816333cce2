#pragma once

// Definitional re-implementations used to cross-check the library: every
// function here works straight from the definitions with plain loops, no
// shared code with the word-parallel versions under test.

#include <random>
#include <vector>

#include "updown/family.hpp"
#include "updown/shift.hpp"

namespace testsupport {

using updown::Family;
using updown::ShiftPair;
using updown::SubsetMask;

inline bool subset_of(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

inline Family naive_up(const Family& f) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s < f.universe_size(); ++s) {
    bool hit = false;
    f.for_each_member([&](SubsetMask a) { hit = hit || subset_of(a, s); });
    if (hit) out.push_back(s);
  }
  return Family(f.ground_size(), out);
}

inline Family naive_down(const Family& f) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s < f.universe_size(); ++s) {
    bool hit = false;
    f.for_each_member([&](SubsetMask a) { hit = hit || subset_of(s, a); });
    if (hit) out.push_back(s);
  }
  return Family(f.ground_size(), out);
}

inline Family naive_updown(const Family& f) {
  const Family up = naive_up(f);
  const Family down = naive_down(f);
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s < f.universe_size(); ++s) {
    if (up.contains(s) || down.contains(s)) out.push_back(s);
  }
  return Family(f.ground_size(), out);
}

inline bool naive_convex(const Family& f) {
  const Family up = naive_up(f);
  const Family down = naive_down(f);
  for (SubsetMask s = 0; s < f.universe_size(); ++s) {
    if (up.contains(s) && down.contains(s) && !f.contains(s)) return false;
  }
  return true;
}

inline Family naive_minimal(const Family& f) {
  std::vector<SubsetMask> out;
  f.for_each_member([&](SubsetMask a) {
    bool lowest = true;
    f.for_each_member([&](SubsetMask b) {
      if (b != a && subset_of(b, a)) lowest = false;
    });
    if (lowest) out.push_back(a);
  });
  return Family(f.ground_size(), out);
}

inline Family naive_maximal(const Family& f) {
  std::vector<SubsetMask> out;
  f.for_each_member([&](SubsetMask a) {
    bool highest = true;
    f.for_each_member([&](SubsetMask b) {
      if (b != a && subset_of(a, b)) highest = false;
    });
    if (highest) out.push_back(a);
  });
  return Family(f.ground_size(), out);
}

inline Family naive_shift(const Family& f, const ShiftPair& p) {
  std::vector<SubsetMask> out;
  f.for_each_member([&](SubsetMask a) {
    const SubsetMask target = (a & ~p.erase) | p.insert;
    const bool movable = (a & p.erase) == p.erase && (a & p.insert) == 0 &&
                         !f.contains(target);
    out.push_back(movable ? target : a);
  });
  return Family(f.ground_size(), out);
}

inline Family random_family(std::mt19937_64& rng, int n) {
  const std::uint64_t slots = std::uint64_t{1} << n;
  std::vector<std::uint64_t> words((slots + 63) / 64);
  for (auto& w : words) w = rng();
  return Family::from_words(n, std::move(words));
}

inline Family random_sparse_family(std::mt19937_64& rng, int n,
                                   std::uint64_t members) {
  std::uniform_int_distribution<std::uint64_t> pick(
      0, (std::uint64_t{1} << n) - 1);
  std::vector<SubsetMask> out;
  for (std::uint64_t i = 0; i < members; ++i) {
    out.push_back(static_cast<SubsetMask>(pick(rng)));
  }
  return Family(n, out);
}

}  // namespace testsupport
