// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// usage: acceptance <causet-cli> <configs-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/spdlog.h>

#include "causet/adapted.hpp"
#include "causet/config.hpp"
#include "causet/pipeline.hpp"
#include "causet/reach.hpp"
#include "causet/verify.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace causet;

namespace {

std::string g_cli;
std::string g_configs;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

GridModel grid(const char* name, int nx, int ny) {
  GridParams p;
  p.nx = nx;
  p.ny = ny;
  return build_grid_model(builtin_spec(name), p);
}

Outcome wick() {
  double worst = 0.0;
  for (const char* name : {"minkowski", "torus", "cylinder-tilt", "tilted"}) {
    const auto m = grid(name, 64, 64);
    for (NodeId v = 0; v < m.size(); ++v) worst = std::max(worst, check_adapted_at(m.field, v));
  }
  const auto mk = grid("minkowski", 64, 64);
  bool identity = true;
  for (const auto& h : mk.field.h) identity = identity && h.xx == 1.0 && h.xy == 0.0 && h.yy == 1.0;
  return {worst < 1e-10 && identity, format("max residual %.3g, minkowski h identity %s", worst, identity ? "yes" : "no")};
}

Outcome semicontinuity() {
  const auto m = grid("minkowski", 32, 32);
  const auto r = check_semicontinuity_constant(m, ZigzagFamily{});
  const double c = 1.0 / std::sqrt(2.0);
  const double last = r.rows.back().ratio;
  const bool ok = r.infimum >= c - 0.02 && r.infimum <= c + 0.02 && r.monotone && std::abs(last - c) < 0.02;
  return {ok, format("infimum %.6f, last ratio %.6f, monotone %s", r.infimum, last, r.monotone ? "yes" : "no")};
}

Outcome continuity() {
  const auto coarse = grid("minkowski", 128, 128);
  const double s = coarse.spacing();
  const double r = 4 * s;
  const NodeId p = coarse.lattice.index(16, 64);
  const auto a = continuity_probe(coarse, p, 0.3, 0.6, {r}, 2.0).front();
  const auto fine = grid("minkowski", 256, 256);
  const Vec2 pt = coarse.lattice.point(p);
  const NodeId q = fine.lattice.index(static_cast<int>(std::lround((pt.x - fine.lattice.chart.x0) / fine.lattice.sx)),
                                      static_cast<int>(std::lround((pt.y - fine.lattice.chart.y0) / fine.lattice.sy)));
  const auto b = continuity_probe(fine, q, 0.3, 0.6, {r}, 2.0).front();
  const bool ok = a.modulus <= 3 * r + 2 * s && b.modulus <= a.modulus + 2 * s;
  return {ok, format("modulus %.5f at r=%.5f (bound %.5f), doubled resolution %.5f", a.modulus, r, 3 * r + 2 * s,
                     b.modulus)};
}

Outcome chain_oracle() {
  int grids = 0, mismatches = 0;
  for (const char* name : {"minkowski", "torus", "cylinder-tilt"}) {
    for (int nx = 8; nx <= 12; ++nx) {
      for (int ny = 8; ny <= 12; ++ny) {
        const auto m = grid(name, nx, ny);
        const double eps = m.spacing(), T = 0.3, T_cap = 0.6;
        const auto rec = chain_recurrent_set(build_chain_graph(m, eps, T, T_cap)).recurrent;
        const auto d = oracle::all_pairs(m);
        std::vector<std::vector<char>> adj(m.size(), std::vector<char>(m.size(), 0));
        for (NodeId x = 0; x < m.size(); ++x) {
          Mask src(m.size());
          src.set(x);
          const auto lo = oracle::min_lengths(m, src);
          const auto hi = oracle::max_lengths(m, src, T_cap);
          for (NodeId z = 0; z < m.size(); ++z) {
            if (!(lo[z] <= T_cap && hi[z] >= T)) continue;
            for (NodeId y = 0; y < m.size(); ++y) {
              if (d[z][y] <= eps + 1e-9) adj[x][y] = 1;
            }
          }
        }
        const auto c = oracle::closure(adj);
        for (NodeId x = 0; x < m.size(); ++x) mismatches += rec[x] != (c[x][x] != 0);
        ++grids;
      }
    }
  }
  return {mismatches == 0, format("%d grids, %d mismatches", grids, mismatches)};
}

Outcome regimes() {
  const auto mk = grid("minkowski", 64, 64);
  const auto to = grid("torus", 64, 64);
  const auto cy = grid("cylinder-tilt", 64, 64);
  auto R = [](const GridModel& m) {
    return chain_recurrent_set(build_chain_graph(m, m.spacing(), 0.5, 1.0)).recurrent;
  };
  const Mask rm = R(mk), rt = R(to), rc = R(cy);
  double far = 0.0;
  for (NodeId v : rc.nodes()) far = std::max(far, std::abs(cy.lattice.point(v).x));
  const bool ok = rm.none() && rt.all() && !rc.none() && far <= cy.lattice.sx * (1 + 1e-9);
  return {ok, format("minkowski |R|=%zu, torus |R|=%zu/%d, cylinder |R|=%zu max |x|=%.5f (cell %.5f)", rm.count(),
                     rt.count(), to.size(), rc.count(), far, cy.lattice.sx)};
}

struct Pipelines {
  RunConfig mink_cfg, cyl_cfg, torus_cfg;
  PipelineResult mink, cyl, torus;
};

Pipelines& pipelines() {
  static Pipelines p = [] {
    Pipelines q;
    q.mink_cfg = load_config(g_configs + "/minkowski.json");
    q.cyl_cfg = load_config(g_configs + "/cylinder_tilt.json");
    q.torus_cfg = load_config(g_configs + "/torus.json");
    q.mink = global_time_function(q.mink_cfg);
    q.cyl = global_time_function(q.cyl_cfg);
    q.torus = global_time_function(q.torus_cfg);
    return q;
  }();
  return p;
}

Outcome time_contract() {
  auto& P = pipelines();
  const double tol = 1e-9;
  // Minkowski: no mask, strictness everywhere.
  const auto& m = P.mink;
  const Mask none(m.model.size());
  const auto curves = sample_causal_curves(m.model, P.mink_cfg.curves, P.mink_cfg.curve_length, P.mink_cfg.seed);
  const auto mc = audit_monotone(m.tau, curves, none, tol);
  const auto me = audit_edges(m.model, m.tau, none, tol);
  const bool mink_ok = m.chains.recurrence.recurrent.none() && mc.violations == 0 && me.violations == 0 &&
                       mc.strict_failures == 0 && me.strict_failures == 0 && mc.strict_checked > 0;

  const auto& c = P.cyl;
  const Mask& R = c.chains.recurrence.recurrent;
  const auto ce = audit_edges(c.model, c.tau, R, tol);
  const auto cc = audit_monotone(c.tau, sample_causal_curves(c.model, P.cyl_cfg.curves, P.cyl_cfg.curve_length,
                                                             P.cyl_cfg.seed),
                                 R, tol);
  double lo = 1e300, hi = -1e300;
  for (NodeId v : R.nodes()) {
    lo = std::min(lo, c.tau.value[v]);
    hi = std::max(hi, c.tau.value[v]);
  }
  const bool cyl_ok = ce.violations == 0 && cc.violations == 0 && ce.strict_failures == 0 && !R.none() &&
                      hi - lo <= 1e-6;
  return {mink_ok && cyl_ok,
          format("minkowski: %zu curve + %zu edge violations, %zu+%zu non-strict; cylinder: %zu+%zu violations, "
                 "%zu non-strict of %zu audited edges, spread on R %.3g",
                 mc.violations, me.violations, mc.strict_failures, me.strict_failures, cc.violations, ce.violations,
                 ce.strict_failures, ce.strict_checked, hi - lo)};
}

Outcome pinning() {
  auto& P = pipelines();
  std::size_t records = 0, bad = 0;
  for (const PipelineResult* r : {&P.mink, &P.cyl, &P.torus}) {
    for (std::size_t k = 0; k < r->attractors.records.size(); ++k) {
      const auto& rec = r->attractors.records[k];
      const auto& t = r->taus[k].value;
      for (NodeId v = 0; v < r->model.size(); ++v) {
        if (rec.A[v] && t[v] != 1.0) ++bad;
        if (!rec.B[v] && t[v] != 0.0) ++bad;
      }
      ++records;
    }
  }
  return {records > 0 && bad == 0, format("%zu records, %zu unpinned nodes", records, bad)};
}

Outcome certificate() {
  auto& P = pipelines();
  const auto a = no_chain_certificate(P.mink.model, P.mink.tau, P.mink_cfg.certificate_T, P.mink_cfg.l_cap);
  const auto b = no_chain_certificate(P.torus.model, P.torus.tau, P.torus_cfg.certificate_T, P.torus_cfg.l_cap);
  const bool ok = a.alpha > 0.0 && a.verdict == CertificateVerdict::kAcyclic &&
                  b.verdict == CertificateVerdict::kImpossible;
  return {ok, format("minkowski alpha %.6g %s; torus %s", a.alpha, verdict_name(a.verdict).c_str(),
                     verdict_name(b.verdict).c_str())};
}

std::map<std::string, std::string> slurp_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    out[e.path().filename().string()] = std::string(std::istreambuf_iterator<char>(in), {});
  }
  return out;
}

Outcome determinism() {
  const fs::path base = fs::temp_directory_path() / "causet_acceptance";
  fs::remove_all(base);
  std::size_t files = 0;
  std::vector<std::string> differ;
  for (const char* cfg : {"minkowski.json", "cylinder_tilt.json"}) {
    for (const char* run : {"a", "b"}) {
      const fs::path out = base / cfg / run;
      const std::string cmd = "\"" + g_cli + "\" --config \"" + g_configs + "/" + cfg + "\" --out \"" +
                              out.string() + "\" --command all";
      if (std::system(cmd.c_str()) != 0) return {false, std::string("cli failed on ") + cfg};
    }
    const auto a = slurp_dir(base / cfg / "a"), b = slurp_dir(base / cfg / "b");
    if (a.size() != b.size()) differ.push_back(std::string(cfg) + ": file sets differ");
    for (const auto& [name, bytes] : a) {
      auto it = b.find(name);
      if (it == b.end() || it->second != bytes) differ.push_back(std::string(cfg) + "/" + name);
    }
    files += a.size();
  }
  fs::remove_all(base);
  std::string d;
  for (const auto& s : differ) d += " " + s;
  return {differ.empty() && files > 0, format("%zu files compared%s%s", files, differ.empty() ? "" : ", differing:",
                                              d.c_str())};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: acceptance <causet-cli> <configs-dir>\n");
    return 2;
  }
  spdlog::set_level(spdlog::level::warn);
  g_cli = argv[1];
  g_configs = argv[2];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"adapted metric residual", wick},
      {"length semicontinuity constant", semicontinuity},
      {"hausdorff continuity of J+_{t,T}", continuity},
      {"chain recurrence vs transitive closure", chain_oracle},
      {"regime classification", regimes},
      {"time function monotonicity", time_contract},
      {"attractor pinning", pinning},
      {"no-chain certificate", certificate},
      {"determinism of all", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                o.detail.c_str(), dt);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
