#include <benchmark/benchmark.h>

#include "madcc/arrays.hpp"
#include "madcc/fixtures.hpp"
#include "madcc/schemes.hpp"
#include "madcc/sim.hpp"

using namespace madcc;

namespace {

void BM_BuildTdesignScheme(benchmark::State& state) {
  auto design = fixtures::steiner843();
  for (auto _ : state) {
    auto bundle = schemes::build_tdesign_scheme(design, 3, 1, static_cast<int>(state.range(0)),
                                                schemes::SplitRule::complement);
    benchmark::DoNotOptimize(bundle.metrics.S);
  }
}
BENCHMARK(BM_BuildTdesignScheme)->Arg(1)->Arg(2);

void BM_BuildOaUserDpda(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto bundle = schemes::build_oa_user_dpda(m, 2, 2);
    benchmark::DoNotOptimize(bundle.metrics.S);
  }
}
BENCHMARK(BM_BuildOaUserDpda)->Arg(4)->Arg(6)->Arg(8);

void BM_VerifyPda(benchmark::State& state) {
  auto bundle = schemes::build_tgdd_scheme(designs::trivial_gdd(4, 3, 2), 2,
                                           designs::proper_oa(3, 4), 1);
  for (auto _ : state) {
    auto rep = arrays::verify_pda(bundle.delivery);
    benchmark::DoNotOptimize(rep.valid());
  }
}
BENCHMARK(BM_VerifyPda);

void BM_FindPhi(benchmark::State& state) {
  auto bundle = schemes::build_tgdd_scheme(designs::trivial_gdd(4, 3, 2), 2,
                                           designs::proper_oa(3, 4), 1);
  for (auto _ : state) {
    auto phi = arrays::find_phi(bundle.delivery);
    benchmark::DoNotOptimize(phi.has_value());
  }
}
BENCHMARK(BM_FindPhi);

void BM_RunExperiment(benchmark::State& state) {
  auto bundle = schemes::build_tgdd_scheme(fixtures::gdd332(), 2, fixtures::oa331(), 1);
  sim::ExperimentConfig cfg;
  cfg.N = 27;
  cfg.B = static_cast<long long>(state.range(0));
  cfg.mode = sim::DemandMode::worst;
  cfg.seed = 7;
  for (auto _ : state) {
    auto rep = sim::run_experiment(bundle, cfg);
    benchmark::DoNotOptimize(rep.decode_ok);
  }
  state.SetBytesProcessed(state.iterations() * cfg.N * cfg.B);
}
BENCHMARK(BM_RunExperiment)->Arg(18 * 16)->Arg(18 * 256);

}  // namespace

BENCHMARK_MAIN();
