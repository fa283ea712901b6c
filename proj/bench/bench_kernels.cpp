#include <benchmark/benchmark.h>

#include "carlab/fock_engine.hpp"
#include "carlab/kernels/fock_kernels.hpp"

using namespace carlab;

namespace {

Eigen::MatrixXcd generator_matrix(int n_max) {
  return multiplication_operator(TrigPolynomial::cosine(1, 2.0) + TrigPolynomial::sine(2, 1.0), ModeWindow(n_max))
      .matrix();
}

void BM_AssembleSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = FockBasis::charge_sector(n, 0);
  const Eigen::MatrixXcd a = generator_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::assemble_bilinear_serial(*basis, a, 0.0));
  state.counters["states"] = static_cast<double>(basis->size());
}

void BM_AssembleOmp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = FockBasis::charge_sector(n, 0);
  const Eigen::MatrixXcd a = generator_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::assemble_bilinear_omp(*basis, a, 0.0));
  state.counters["states"] = static_cast<double>(basis->size());
}

template <bool Parallel>
void BM_Matvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = FockBasis::charge_sector(n, 0);
  const auto m = kernels::assemble_bilinear_omp(*basis, generator_matrix(n), 0.0);
  const Eigen::VectorXcd x = Eigen::VectorXcd::Ones(basis->size());
  Eigen::VectorXcd y(basis->size());
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::csr_matvec_omp(m, x.data(), y.data());
    else
      kernels::csr_matvec_serial(m, x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_VacuumExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OneParticleOperator a = multiplication_operator(TrigPolynomial::cosine(1, 2.0), ModeWindow(n));
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_expectation(a));
}

}  // namespace

BENCHMARK(BM_AssembleSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleOmp)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Matvec<false>)->DenseRange(6, 8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Matvec<true>)->DenseRange(6, 8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_VacuumExpectation)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
