#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include "qwalk/closed_form.hpp"
#include "qwalk/densities.hpp"
#include "qwalk/estimation.hpp"
#include "qwalk/foundation.hpp"
#include "qwalk/oracle.hpp"

using namespace qwalk;

static void BM_EvolveDirect(benchmark::State& st) {
  const WalkSpec s = WalkSpec::hadamard();
  for (auto _ : st) benchmark::DoNotOptimize(evolve_direct(s, st.range(0)));
}
BENCHMARK(BM_EvolveDirect)->RangeMultiplier(4)->Range(16, 4096);

static void BM_ClosedForm(benchmark::State& st) {
  const WalkSpec s = WalkSpec::hadamard();
  for (auto _ : st) benchmark::DoNotOptimize(position_wavefunction(s, st.range(0)));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(4)->Range(16, 4096);

static void BM_FoundationTable(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(foundation_table(0.7, st.range(0)));
}
BENCHMARK(BM_FoundationTable)->RangeMultiplier(4)->Range(64, 4096);

static void BM_FoundationTableSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(foundation_table_serial(0.7, st.range(0)));
}
BENCHMARK(BM_FoundationTableSerial)->RangeMultiplier(4)->Range(64, 4096);

static void BM_FitWalk(benchmark::State& st) {
  const long t = st.range(0);
  const auto h = EmpiricalHistogram::from_probabilities(t, density_profile(WalkSpec::hadamard(), t).rho);
  for (auto _ : st) benchmark::DoNotOptimize(fit_walk(h));
}
BENCHMARK(BM_FitWalk)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

// Multinomial resampling of the Hadamard walk (nu = 1/2); reported only.
static void report_sampled_fit() {
  constexpr long t = 50;
  constexpr int draws = 10000;
  const auto rho = density_profile(WalkSpec::hadamard(), t).rho;
  std::mt19937_64 rng(7);
  double worst = 0.0, sum = 0.0;
  constexpr int reps = 20;
  for (int r = 0; r < reps; ++r) {
    std::discrete_distribution<long> d(rho.begin(), rho.end());
    std::map<long, double> counts;
    for (int i = 0; i < draws; ++i) counts[d(rng) - t] += 1.0;
    const FitResult f = fit_walk(EmpiricalHistogram(t, counts));
    const double err = std::abs(f.abs_a_hat - 1.0 / std::sqrt(2.0));
    worst = std::max(worst, err);
    sum += err;
  }
  std::printf("sampled fit, t=%ld, %d draws x %d repeats: mean |a| error %.4f, worst %.4f\n", t, draws, reps,
              sum / reps, worst);
}

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  report_sampled_fit();
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
