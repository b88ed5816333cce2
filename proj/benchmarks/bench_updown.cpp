// Microbenchmarks for the closure kernels, the two value evaluators, and
// the heavier construction paths. Inputs are seeded per shape, so runs are
// comparable across builds.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "updown/family.hpp"
#include "updown/phi.hpp"
#include "updown/shift.hpp"
#include "updown/witness.hpp"

namespace {

using namespace updown;

Family dense_family(int n) {
  std::mt19937_64 rng(0xc0ffee123ull + static_cast<std::uint64_t>(n));
  const std::uint64_t slots = std::uint64_t{1} << n;
  std::vector<std::uint64_t> words((slots + 63) / 64);
  for (auto& w : words) w = rng();
  return Family::from_words(n, std::move(words));
}

Family sparse_family(int n, std::uint64_t members) {
  std::mt19937_64 rng(0xfacade777ull + static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<std::uint64_t> pick(
      0, (std::uint64_t{1} << n) - 1);
  std::vector<SubsetMask> out;
  out.reserve(members);
  for (std::uint64_t i = 0; i < members; ++i) {
    out.push_back(static_cast<SubsetMask>(pick(rng)));
  }
  return Family(n, out);
}

void BM_UpdownClosureDense(benchmark::State& state) {
  const Family f = dense_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(updown_closure(f));
  }
}
BENCHMARK(BM_UpdownClosureDense)->DenseRange(12, 20, 2)->Unit(benchmark::kMicrosecond);

void BM_UpdownClosureSparse(benchmark::State& state) {
  const Family f = sparse_family(static_cast<int>(state.range(0)), 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(updown_closure(f));
  }
}
BENCHMARK(BM_UpdownClosureSparse)->DenseRange(12, 20, 2)->Unit(benchmark::kMicrosecond);

void BM_IsConvex(benchmark::State& state) {
  const Family f = dense_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_convex(f));
  }
}
BENCHMARK(BM_IsConvex)->DenseRange(12, 20, 2)->Unit(benchmark::kMicrosecond);

void BM_PhiFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t top = std::uint64_t{1} << n;
  std::uint64_t m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_fast(n, m));
    m = m % top + 1;
  }
}
BENCHMARK(BM_PhiFast)->Arg(8)->Arg(16)->Arg(24);

void BM_PhiTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_table(n));
  }
}
BENCHMARK(BM_PhiTable)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_StronglyShift(benchmark::State& state) {
  const Family f = sparse_family(static_cast<int>(state.range(0)), 48);
  for (auto _ : state) {
    benchmark::DoNotOptimize(strongly_shift(f));
  }
}
BENCHMARK(BM_StronglyShift)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_CanonicalChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_chain(n));
  }
}
BENCHMARK(BM_CanonicalChain)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Chain chain = canonical_chain(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_chain(chain));
  }
}
BENCHMARK(BM_VerifyChain)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
