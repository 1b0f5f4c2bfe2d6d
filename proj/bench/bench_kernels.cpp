// Serial reference path vs OpenMP path for the per-node kernels.
// Each benchmark takes (resolution, exec) with exec 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <map>

#include "causet/attract.hpp"
#include "causet/chains.hpp"
#include "causet/reach.hpp"
#include "causet/timefn.hpp"

using namespace causet;

namespace {

const GridModel& cylinder(int n) {
  static std::map<int, GridModel> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    GridParams p;
    p.nx = p.ny = n;
    it = cache.emplace(n, build_grid_model(builtin_spec("cylinder-tilt"), p)).first;
  }
  return it->second;
}

Execution exec_of(const benchmark::State& s) { return s.range(1) ? Execution::kParallel : Execution::kSerial; }

void label(benchmark::State& s) { s.SetLabel(s.range(1) ? "parallel" : "serial"); }

constexpr double kCap = 4.0;

void BM_ReachSet(benchmark::State& s) {
  const auto& m = cylinder(static_cast<int>(s.range(0)));
  Mask src(m.size());
  for (NodeId v = 0; v < m.size(); v += 7) src.set(v);
  for (auto _ : s) benchmark::DoNotOptimize(reach_set(m, src, 0.3, 0.6, kCap, exec_of(s)));
  label(s);
}

void BM_ChainGraph(benchmark::State& s) {
  const auto& m = cylinder(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(build_chain_graph(m, m.spacing(), 0.5, 1.0, exec_of(s)));
  label(s);
}

std::vector<AttractorRecord> some_records(const GridModel& m) {
  std::vector<AttractorRecord> recs;
  for (double x0 : {-0.5, 0.0, 0.5}) {
    Mask u(m.size());
    for (NodeId v = 0; v < m.size(); ++v) u.set(v, m.lattice.point(v).x >= x0);
    recs.push_back(attractor_of(m, u, 0.4, kCap));
  }
  return recs;
}

void BM_FillBasins(benchmark::State& s) {
  const auto& m = cylinder(static_cast<int>(s.range(0)));
  auto recs = some_records(m);
  for (auto _ : s) {
    fill_basins(m, recs, kCap, kCap, exec_of(s));
    benchmark::DoNotOptimize(recs.front().B);
  }
  label(s);
}

void BM_TauBatch(benchmark::State& s) {
  const auto& m = cylinder(static_cast<int>(s.range(0)));
  auto recs = some_records(m);
  fill_basins(m, recs, kCap, kCap);
  std::vector<TimeField> fs;
  for (const auto& r : recs) {
    if (!r.B.none()) fs.push_back(build_f(m, r));
  }
  const Ladder ladder = default_ladder(m, kCap);
  for (auto _ : s) benchmark::DoNotOptimize(tau_A_batch(m, fs, ladder, kCap, exec_of(s)));
  label(s);
}

void args(benchmark::internal::Benchmark* b) {
  for (int n : {32, 64}) {
    for (int e : {0, 1}) b->Args({n, e});
  }
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_ReachSet)->Apply(args);
BENCHMARK(BM_ChainGraph)->Apply(args);
BENCHMARK(BM_FillBasins)->Apply(args);
BENCHMARK(BM_TauBatch)->Apply(args);

BENCHMARK_MAIN();
