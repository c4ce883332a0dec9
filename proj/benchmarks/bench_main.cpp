#include <benchmark/benchmark.h>

#include <string>

#include "qweight/enumerators.hpp"
#include "qweight/feasibility.hpp"
#include "qweight/oracle.hpp"
#include "qweight/stabilizer.hpp"

namespace {

using namespace qweight;

StabilizerCode fixture(const std::string& name) {
  return parse_fixture_file(std::string(QWEIGHT_FIXTURE_DIR) + "/" + name);
}

void BM_GroupCensusShor(benchmark::State& state) {
  const auto code = fixture("shor_913.stab");
  for (auto _ : state) benchmark::DoNotOptimize(group_sl_weights(code));
}
BENCHMARK(BM_GroupCensusShor);

void BM_FineGrainedTableHexacode(benchmark::State& state) {
  const auto code = fixture("hexacode_604.stab");
  for (auto _ : state) benchmark::DoNotOptimize(fine_grained_unitary_table(code));
}
BENCHMARK(BM_FineGrainedTableHexacode);

void BM_ClosedFormWeights(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto params = qmds_params(n, 0, 5);
  for (auto _ : state) {
    auto a = qmds_sl(params);
    benchmark::DoNotOptimize(shadow(unitary_from_sl(a)));
  }
}
BENCHMARK(BM_ClosedFormWeights)->Arg(16)->Arg(32)->Arg(48);

void BM_LayeredCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = layered_check(qmds_params(n, 0, 5));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_LayeredCheck)->Arg(24)->Arg(48);

void BM_FamilyScan(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family_scan(N, 5));
}
BENCHMARK(BM_FamilyScan)->Arg(28)->Arg(48);

void BM_BoundTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_table(3, 16, nullptr));
}
BENCHMARK(BM_BoundTable);

void BM_RandomStateEntropies(benchmark::State& state) {
  const auto code = random_pure_stabilizer(2, 10, 11);
  for (auto _ : state) {
    long acc = 0;
    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b) acc += subsystem_entropy(code, {a, b});
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RandomStateEntropies);

}  // namespace

BENCHMARK_MAIN();
