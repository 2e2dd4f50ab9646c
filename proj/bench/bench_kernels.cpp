// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "prodone/factorization.hpp"
#include "prodone/iso_lab.hpp"

using namespace prodone;

namespace {

Exec exec_of(benchmark::State const& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_TableBuild(benchmark::State& st) {
  auto g = make_group("D12");
  for (auto _ : st) {
    ProductSetTable t(g, 7, exec_of(st));
    benchmark::DoNotOptimize(t.product_one_free(7, 0));
  }
  label(st);
}

void BM_AtomsOfLength(benchmark::State& st) {
  auto g = make_group("Dic12");
  ProductSetTable t(g, 8);
  for (auto _ : st) benchmark::DoNotOptimize(atoms_of_length(t, 8, exec_of(st)).size());
  label(st);
}

void BM_SearchBijections(benchmark::State& st) {
  auto g = make_group("D12");
  for (auto _ : st) {
    Workspace ws({}, exec_of(st));
    benchmark::DoNotOptimize(search_bijections(g, g, 9, ws).size());
  }
  label(st);
}

void BM_VerifyPair(benchmark::State& st) {
  auto a = make_group("D8"), b = make_group("Q8");
  for (auto _ : st) {
    Workspace ws({}, exec_of(st));
    benchmark::DoNotOptimize(verify_theorem(a, b, ws).consistent);
  }
  label(st);
}

}  // namespace

BENCHMARK(BM_TableBuild)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AtomsOfLength)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchBijections)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyPair)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
