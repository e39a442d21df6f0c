// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "hopflab/coradical.hpp"
#include "hopflab/corpus.hpp"
#include "hopflab/nichols.hpp"

using namespace hopflab;

namespace {

Mat random_rational(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  const Field q = Field::rational();
  Mat m(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(q, mpq_class(num(rng), den(rng)));
  return m;
}

void BM_RowEchelon(benchmark::State& st) {
  const Mat m = random_rational(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(row_echelon(m));
}
void BM_RowEchelonSerial(benchmark::State& st) {
  const Mat m = random_rational(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(serial::row_echelon(m));
}

void BM_Multiply(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Mat a = random_rational(n, 2), b = random_rational(n, 3);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
void BM_MultiplySerial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Mat a = random_rational(n, 2), b = random_rational(n, 3);
  for (auto _ : st) benchmark::DoNotOptimize(serial::multiply(a, b));
}

// Product of the coradical with the whole algebra in the 27-dimensional dual small quantum group.
struct ProductCase {
  HopfAlgebra h = uqsl2_dual(3);
  Subspace h0 = coradical(h.coalgebra());
  Subspace full = Subspace::full(h.field(), h.dim());
};
const ProductCase& product_case() {
  static const ProductCase c;
  return c;
}
void BM_SubspaceProduct(benchmark::State& st) {
  const auto& c = product_case();
  for (auto _ : st) benchmark::DoNotOptimize(subspace_product(c.h.algebra(), c.h0, c.full));
}
void BM_SubspaceProductSerial(benchmark::State& st) {
  const auto& c = product_case();
  for (auto _ : st) benchmark::DoNotOptimize(serial::subspace_product(c.h.algebra(), c.h0, c.full));
}

// Symmetrizer of a non-diagonal braiding: factorized form against the sum over S_n.
Braiding dense_braiding() {
  const Field q = Field::rational();
  Mat d(q, 2, 2), g(q, 2, 2);
  d(0, 0) = Scalar(q, -1L), d(0, 1) = Scalar(q, 2L), d(1, 0) = Scalar(q, mpq_class(1, 2)), d(1, 1) = Scalar(q, 3L);
  g(0, 0) = g(0, 1) = g(1, 1) = Scalar::one(q);
  const Braiding b = diagonal_braiding(d);
  const Mat gg = kron(g, g);
  return {2, gg * b.c * *inverse(gg)};
}
void BM_Symmetrizer(benchmark::State& st) {
  const Braiding c = dense_braiding();
  for (auto _ : st) benchmark::DoNotOptimize(quantum_symmetrizer(c, static_cast<std::size_t>(st.range(0))));
}
void BM_SymmetrizerFullSum(benchmark::State& st) {
  const Braiding c = dense_braiding();
  for (auto _ : st) benchmark::DoNotOptimize(reference::quantum_symmetrizer(c, static_cast<std::size_t>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_RowEchelon)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RowEchelonSerial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Multiply)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MultiplySerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubspaceProduct)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubspaceProductSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Symmetrizer)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SymmetrizerFullSum)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
