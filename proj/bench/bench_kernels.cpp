// Parallel kernels against their serial references, and the packed GF(2) path.

#include <benchmark/benchmark.h>

#include <random>

#include "etk/ffla/bitmatrix.hpp"
#include "etk/ffla/kernels.hpp"

using namespace etk::ffla;

namespace {

FMatrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> d(0, f->q() - 1);
  FMatrix m(f, n, n);
  for (auto& x : m.data()) x = static_cast<Elem>(d(rng));
  return m;
}

template <FMatrix (*Mul)(const FMatrix&, const FMatrix&)>
void bm_multiply(benchmark::State& st) {
  const auto f = FieldTable::make(2, static_cast<unsigned>(st.range(1)));
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto a = random_matrix(f, n, 1), b = random_matrix(f, n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(Mul(a, b));
}

template <std::vector<std::size_t> (*Reduce)(FMatrix&)>
void bm_row_reduce(benchmark::State& st) {
  const auto f = FieldTable::make(2, static_cast<unsigned>(st.range(1)));
  const auto a = random_matrix(f, static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) {
    auto m = a;
    benchmark::DoNotOptimize(Reduce(m));
  }
}

void bm_bit_multiply(benchmark::State& st) {
  const auto f = FieldTable::make(2, 1);
  const auto n = static_cast<std::size_t>(st.range(0));
  const BitMatrix a(random_matrix(f, n, 4)), b(random_matrix(f, n, 5));
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {64, 256})
    for (int e : {1, 2, 6}) b->Args({n, e});
}

}  // namespace

BENCHMARK_TEMPLATE(bm_multiply, kernels::multiply)->Apply(sizes);
BENCHMARK_TEMPLATE(bm_multiply, kernels::multiply_reference)->Apply(sizes);
BENCHMARK_TEMPLATE(bm_row_reduce, kernels::row_reduce)->Apply(sizes);
BENCHMARK_TEMPLATE(bm_row_reduce, kernels::row_reduce_reference)->Apply(sizes);
BENCHMARK(bm_bit_multiply)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
