#include <benchmark/benchmark.h>

#include <random>

#include "ltsenv/catalog.hpp"
#include "ltsenv/ideal_lab.hpp"
#include "ltsenv/nucleus_lab.hpp"
#include "ltsenv/polynomial.hpp"
#include "ltsenv/star_envelope.hpp"

using namespace ltsenv;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (gen() % 3 == 0) continue;
      m.set(i, j, Scalar(static_cast<long>(gen() % 11) - 5, static_cast<long>(gen() % 3) + 1));
    }
  }
  return m;
}

void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n + n / 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(16)->Arg(32)->Arg(64);

void BM_JordanChevalley(benchmark::State& state) {
  const auto a = algebras::truncated_polynomial(static_cast<std::size_t>(state.range(0)));
  Vector x = zero_vector(a.dim());
  x[0] = 3;
  x[1] = 1;
  const Matrix l = a.left_mult(x);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_chevalley(l));
}
BENCHMARK(BM_JordanChevalley)->Arg(4)->Arg(8)->Arg(16);

// Fresh session each iteration: measures the cold path including r and the
// embedding caches.
void BM_UvPowerCold(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    EnvelopeSession s(catalog::so3());
    benchmark::DoNotOptimize(s.monomial(Word(n, 0)) * s.monomial(Word{1, 2}));
  }
}
BENCHMARK(BM_UvPowerCold)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_UvMultiplyWarm(benchmark::State& state) {
  EnvelopeSession s(catalog::so3());
  const auto x = s.monomial(Word{0, 1, 2}) + s.monomial(Word{2, 2});
  const auto y = s.monomial(Word{0, 0, 1});
  benchmark::DoNotOptimize(x * y);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_UvMultiplyWarm);

void BM_StarProduct(benchmark::State& state) {
  EnvelopeSession s(catalog::so3());
  const auto& u = s.pbw();
  const auto x = u.monomial(Word{0, 1, 2}) + u.monomial(Word{2, 2});
  const auto y = u.monomial(Word{1, 3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(s.star_product(x, y));
}
BENCHMARK(BM_StarProduct);

void BM_Centralizer(benchmark::State& state) {
  const auto degree = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    EnvelopeSession s(catalog::so3());
    benchmark::DoNotOptimize(truncated_centralizer(s, degree));
  }
}
BENCHMARK(BM_Centralizer)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_So3Determinants(benchmark::State& state) {
  for (auto _ : state) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned p = 0; n + p <= 8; ++p) {
        for (unsigned q = 0; n + p + q <= 8; ++q) benchmark::DoNotOptimize(so3_condition_det(n, p, q));
      }
    }
  }
}
BENCHMARK(BM_So3Determinants)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = algebras::truncated_polynomial(n);
  Vector x = zero_vector(n);
  x[0] = 2;
  x[1] = 1;
  const SubspaceBasis v(n, {x});
  for (auto _ : state) benchmark::DoNotOptimize(theorem_decompose(a, v));
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
