#include "updown/family.hpp"

#include <bit>
#include <string>
#include <utility>

#include "bitlattice.hpp"

namespace updown {

namespace {

void check_ground_size(int n) {
  if (n < 0) throw OutOfRangeError("ground size must be nonnegative");
  if (n > kMaxGroundSize)
    throw TooLargeError("ground size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxGroundSize));
}

std::size_t word_count(int n) {
  return n < 6 ? 1 : (std::size_t{1} << (n - 6));
}

// Clears bits at positions >= 2^n (only the single-word case has a tail).
void mask_tail(std::vector<std::uint64_t>& words, int n) {
  if (n < 6) words[0] &= (std::uint64_t{1} << (1u << n)) - 1;
}

std::uint64_t popcount_words(const std::vector<std::uint64_t>& words) {
  std::uint64_t c = 0;
  for (std::uint64_t w : words) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

void check_same_ground(const Family& a, const Family& b) {
  if (a.ground_size() != b.ground_size())
    throw GroundMismatchError("families over different ground sets");
}

std::vector<std::uint64_t> copy_words(const Family& f) {
  return {f.words().begin(), f.words().end()};
}

}  // namespace

SubsetMask make_mask(std::initializer_list<int> elements) {
  SubsetMask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize)
      throw OutOfRangeError("element " + std::to_string(e) + " out of range");
    m |= SubsetMask{1} << (e - 1);
  }
  return m;
}

std::vector<int> mask_elements(SubsetMask a) {
  std::vector<int> out;
  while (a != 0) {
    out.push_back(std::countr_zero(a) + 1);
    a &= a - 1;
  }
  return out;
}

SubsetMask reverse_mask(int n, SubsetMask a) {
  check_ground_size(n);
  if (a >= (std::uint64_t{1} << n))
    throw OutOfRangeError("mask does not fit the ground set");
  if (n == 0) return 0;
  return static_cast<SubsetMask>(detail::bit_reverse64(a) >> (64 - n));
}

std::string mask_to_string(SubsetMask a) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_elements(a)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

Family::Family(int ground_size) : n_(ground_size), count_(0) {
  check_ground_size(ground_size);
  words_.assign(word_count(ground_size), 0);
}

Family::Family(int ground_size, std::span<const SubsetMask> members)
    : Family(ground_size) {
  for (SubsetMask a : members) {
    if (a >= universe_size())
      throw OutOfRangeError("member mask " + std::to_string(a) +
                            " does not fit ground size " +
                            std::to_string(ground_size));
    words_[a >> 6] |= std::uint64_t{1} << (a & 63);
  }
  count_ = popcount_words(words_);
}

Family::Family(int ground_size, std::initializer_list<SubsetMask> members)
    : Family(ground_size,
             std::span<const SubsetMask>(members.begin(), members.size())) {}

Family Family::full(int ground_size) {
  check_ground_size(ground_size);
  std::vector<std::uint64_t> words(word_count(ground_size), ~std::uint64_t{0});
  mask_tail(words, ground_size);
  return from_words(ground_size, std::move(words));
}

Family Family::from_words(int ground_size, std::vector<std::uint64_t> words) {
  check_ground_size(ground_size);
  if (words.size() != word_count(ground_size))
    throw OutOfRangeError("membership vector has the wrong length");
  Family f(ground_size);
  mask_tail(words, ground_size);
  f.words_ = std::move(words);
  f.count_ = popcount_words(f.words_);
  return f;
}

std::vector<SubsetMask> Family::members() const {
  std::vector<SubsetMask> out;
  out.reserve(count_);
  for_each_member([&](SubsetMask a) { out.push_back(a); });
  return out;
}

Family up_closure(const Family& f) {
  auto w = copy_words(f);
  detail::vec_supersets(w, f.ground_size());
  return Family::from_words(f.ground_size(), std::move(w));
}

Family down_closure(const Family& f) {
  auto w = copy_words(f);
  detail::vec_subsets(w, f.ground_size());
  return Family::from_words(f.ground_size(), std::move(w));
}

ClosureTriple updown_closure(const Family& f) {
  Family up = up_closure(f);
  Family down = down_closure(f);
  Family both = family_union(up, down);
  return ClosureTriple{std::move(up), std::move(down), std::move(both)};
}

bool is_convex(const Family& f) {
  const auto up = copy_words(up_closure(f));
  const auto down = copy_words(down_closure(f));
  const auto& self = f.words();
  for (std::size_t j = 0; j < self.size(); ++j)
    if ((up[j] & down[j]) != self[j]) return false;
  return true;
}

Family minimal_sets(const Family& f) {
  // A member p is minimal iff no single-element deletion p \ {i} still
  // contains a member, i.e. none stays inside the up closure.
  const auto up = copy_words(up_closure(f));
  const auto strictly_above =
      detail::vec_lower_neighbor_or(up, f.ground_size());
  std::vector<std::uint64_t> out(up.size());
  const auto& self = f.words();
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = self[j] & ~strictly_above[j];
  return Family::from_words(f.ground_size(), std::move(out));
}

Family maximal_sets(const Family& f) {
  const auto down = copy_words(down_closure(f));
  const auto strictly_below =
      detail::vec_upper_neighbor_or(down, f.ground_size());
  std::vector<std::uint64_t> out(down.size());
  const auto& self = f.words();
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = self[j] & ~strictly_below[j];
  return Family::from_words(f.ground_size(), std::move(out));
}

Family complement_family(const Family& f) {
  // Complementing members reverses the whole membership vector, because
  // the complement of mask p is 2^n - 1 - p.
  const int n = f.ground_size();
  const auto& in = f.words();
  std::vector<std::uint64_t> out(in.size());
  if (n < 6) {
    out[0] = detail::bit_reverse64(in[0]) >> (64 - (1u << n));
  } else {
    for (std::size_t j = 0; j < in.size(); ++j)
      out[j] = detail::bit_reverse64(in[in.size() - 1 - j]);
  }
  return Family::from_words(n, std::move(out));
}

Family reverse_family(const Family& f) {
  const int n = f.ground_size();
  Family out(n);
  std::vector<std::uint64_t> w(f.words().size(), 0);
  f.for_each_member([&](SubsetMask a) {
    const SubsetMask r = n == 0 ? a
                                : static_cast<SubsetMask>(
                                      detail::bit_reverse64(a) >> (64 - n));
    w[r >> 6] |= std::uint64_t{1} << (r & 63);
  });
  return Family::from_words(n, std::move(w));
}

Family conjugate(const Family& f) {
  const int n = f.ground_size();
  auto w = copy_words(reverse_family(f));
  auto up = w;
  detail::vec_supersets(up, n);
  detail::vec_subsets(w, n);
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = ~(w[j] | up[j]);
  return Family::from_words(n, std::move(w));
}

Family boundary(const Family& f) {
  return family_difference(updown_closure(f).updown, f);
}

bool is_subfamily(const Family& a, const Family& b) {
  check_same_ground(a, b);
  for (std::size_t j = 0; j < a.words().size(); ++j)
    if ((a.words()[j] & ~b.words()[j]) != 0) return false;
  return true;
}

bool is_proper_subfamily(const Family& a, const Family& b) {
  return a.count() < b.count() && is_subfamily(a, b);
}

Family family_union(const Family& a, const Family& b) {
  check_same_ground(a, b);
  std::vector<std::uint64_t> w(a.words().size());
  for (std::size_t j = 0; j < w.size(); ++j)
    w[j] = a.words()[j] | b.words()[j];
  return Family::from_words(a.ground_size(), std::move(w));
}

Family family_intersection(const Family& a, const Family& b) {
  check_same_ground(a, b);
  std::vector<std::uint64_t> w(a.words().size());
  for (std::size_t j = 0; j < w.size(); ++j)
    w[j] = a.words()[j] & b.words()[j];
  return Family::from_words(a.ground_size(), std::move(w));
}

Family family_difference(const Family& a, const Family& b) {
  check_same_ground(a, b);
  std::vector<std::uint64_t> w(a.words().size());
  for (std::size_t j = 0; j < w.size(); ++j)
    w[j] = a.words()[j] & ~b.words()[j];
  return Family::from_words(a.ground_size(), std::move(w));
}

}  // namespace updown
