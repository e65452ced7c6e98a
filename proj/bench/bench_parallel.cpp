// Serial reference (threads = 1) against the OpenMP kernels on the depth-5
// decomposition of m6 + R^9 and on the five-generator module.
#include <benchmark/benchmark.h>

#include <string>

#include "sdep/io.hpp"
#include "sdep/polytope.hpp"
#include "sdep/stanley.hpp"

namespace {

std::string data(const std::string& name) { return std::string(SDEP_DATA_DIR) + "/" + name; }

struct Fixture {
  sdep::GradedModule gm;
  sdep::HilbertDecomposition dec;
};

const Fixture& big() {
  static const Fixture f = [] {
    const sdep::io::ModuleFile mf = sdep::io::read_module_file(data("m6_r9.json"));
    sdep::GradedModule gm = sdep::GradedModule::build(mf.presentation, mf.g);
    sdep::HilbertDecomposition d =
        sdep::io::read_decomposition_file(data("m6_r9_depth5.json"), gm.n(), gm.g());
    return Fixture{std::move(gm), std::move(d)};
  }();
  return f;
}

const Fixture& small() {
  static const Fixture f = [] {
    const sdep::io::ModuleFile mf = sdep::io::read_module_file(data("five_generators.json"));
    sdep::GradedModule gm = sdep::GradedModule::build(mf.presentation, mf.g);
    sdep::HilbertDecomposition d =
        sdep::io::read_decomposition_file(data("five_generators_dec.json"), gm.n(), gm.g());
    return Fixture{std::move(gm), std::move(d)};
  }();
  return f;
}

void BM_ModuleBuild(benchmark::State& state) {
  const sdep::io::ModuleFile mf = sdep::io::read_module_file(data("m6_r9.json"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdep::GradedModule::build(mf.presentation, mf.g, static_cast<int>(state.range(0))));
  }
}

void BM_BuildMatrices(benchmark::State& state) {
  const Fixture& f = big();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdep::build_matrices(f.gm, f.dec, static_cast<int>(state.range(0))));
  }
}

void BM_CheckTransversal(benchmark::State& state) {
  const Fixture& f = big();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdep::check_transversal(f.gm, f.dec, static_cast<int>(state.range(0))));
  }
}

void BM_CheckInfinite(benchmark::State& state) {
  const Fixture& f = small();
  const sdep::SymbolicMatrixFamily fam = sdep::build_matrices(f.gm, f.dec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdep::check_infinite(fam, static_cast<int>(state.range(0))));
  }
}

void BM_StanleyInequalities(benchmark::State& state) {
  const Fixture& f = big();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sdep::build_stanley_inequalities(f.gm, 2, 0, static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_ModuleBuild)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildMatrices)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckTransversal)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckInfinite)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StanleyInequalities)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
