// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <fembasis/stokes.hh>

using namespace fembasis;

namespace {

SparseSystem frozenStokesMatrix(std::size_t n)
{
  const GlobalBasis basis(StructuredGrid(n, n), taylorHoodSpec());
  SparseSystem matrix;
  assembleStokesMatrix(basis, matrix);
  matrix.freeze();
  return matrix;
}

void BM_MatvecSerial(benchmark::State& state)
{
  const auto matrix = frozenStokesMatrix(state.range(0));
  std::vector<double> x(matrix.keys().size(), 1.0), y(x.size());
  for (auto _ : state) {
    matrix.applySerial(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * matrix.values().size());
}

void BM_MatvecOpenMP(benchmark::State& state)
{
  const auto matrix = frozenStokesMatrix(state.range(0));
  std::vector<double> x(matrix.keys().size(), 1.0), y(x.size());
  for (auto _ : state) {
    matrix.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * matrix.values().size());
}

void BM_AssemblySerial(benchmark::State& state)
{
  const GlobalBasis basis(StructuredGrid(state.range(0), state.range(0)), taylorHoodSpec());
  for (auto _ : state) {
    SparseSystem matrix;
    assembleStokesMatrixSerial(basis, matrix);
    benchmark::DoNotOptimize(matrix.nonzeros());
  }
}

void BM_AssemblyOpenMP(benchmark::State& state)
{
  const GlobalBasis basis(StructuredGrid(state.range(0), state.range(0)), taylorHoodSpec());
  for (auto _ : state) {
    SparseSystem matrix;
    assembleStokesMatrix(basis, matrix);
    benchmark::DoNotOptimize(matrix.nonzeros());
  }
}

} // end anonymous namespace

BENCHMARK(BM_MatvecSerial)->Arg(16)->Arg(64);
BENCHMARK(BM_MatvecOpenMP)->Arg(16)->Arg(64);
BENCHMARK(BM_AssemblySerial)->Arg(8)->Arg(16);
BENCHMARK(BM_AssemblyOpenMP)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
