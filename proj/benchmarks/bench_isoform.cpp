#include <benchmark/benchmark.h>

#include <random>

#include "isoform/isoform.hpp"

using namespace isoform;

namespace {

Matrix random_hermitian(const FieldSpec& field, std::size_t n, std::mt19937_64& rng) {
  Matrix h(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const FieldElement x = sample_element(field, rng);
      h(i, j) = i == j ? x + conj(x) : x;
      h(j, i) = conj(h(i, j));
    }
  }
  return h;
}

FieldSpec field_for(std::int64_t kind) {
  switch (kind) {
    case 0: return FieldSpec::prime_square(101);
    case 1: return FieldSpec::rationals();
    default: return FieldSpec::quadratic(-1);
  }
}

}  // namespace

static void BM_FieldMultiply(benchmark::State& state) {
  const FieldSpec field = field_for(state.range(0));
  std::mt19937_64 rng(1);
  const FieldElement a = sample_element(field, rng);
  const FieldElement b = sample_element(field, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetLabel(field.to_string());
}
BENCHMARK(BM_FieldMultiply)->DenseRange(0, 2);

static void BM_Diagonalize(benchmark::State& state) {
  const FieldSpec field = field_for(state.range(0));
  std::mt19937_64 rng(2);
  const HermitianForm form(random_hermitian(field, static_cast<std::size_t>(state.range(1)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(form));
  state.SetLabel(field.to_string());
}
BENCHMARK(BM_Diagonalize)->ArgsProduct({{0, 1, 2}, {4, 8, 16}});

static void BM_NormSolve(benchmark::State& state) {
  const FieldSpec field = FieldSpec::prime_square(static_cast<std::uint64_t>(state.range(0)));
  const FieldElement target(field, 2);
  for (auto _ : state) benchmark::DoNotOptimize(norm_solve(target));
}
BENCHMARK(BM_NormSolve)->Arg(31)->Arg(1009)->Arg(99991)->Arg(1000003);

static void BM_CloseGroup(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const FieldSpec field = FieldSpec::prime(7);
  Matrix cycle(field, n, n);
  Matrix swap = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i) cycle((i + 1) % n, i) = FieldElement::one(field);
  swap(0, 0) = swap(1, 1) = FieldElement::zero(field);
  swap(0, 1) = swap(1, 0) = FieldElement::one(field);
  for (auto _ : state) benchmark::DoNotOptimize(close_group(field, n, {cycle, swap}).order());
}
BENCHMARK(BM_CloseGroup)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

static void BM_CwSolve(benchmark::State& state) {
  const FieldSpec field = FieldSpec::prime(static_cast<std::uint64_t>(state.range(0)));
  const HomogeneousPoly f = HomogeneousPoly::diagonal_quadric(
      field, Vector{FieldElement(field, 1), FieldElement(field, 1), FieldElement(field, 1)});
  for (auto _ : state) benchmark::DoNotOptimize(cw_solve(f));
}
BENCHMARK(BM_CwSolve)->Arg(7)->Arg(101)->Arg(211);
BENCHMARK_MAIN();
