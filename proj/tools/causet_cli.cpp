#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "causet/config.hpp"
#include "causet/error.hpp"
#include "causet/export.hpp"
#include "causet/parallel.hpp"
#include "causet/pipeline.hpp"
#include "causet/reach.hpp"
#include "causet/verify.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace causet;

namespace {

constexpr int kOk = 0;
constexpr int kStageFailure = 1;
constexpr int kConfigError = 2;

int fail(int code, const std::string& kind, const std::string& message) {
  nlohmann::json j = {{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << j.dump() << "\n";
  return code;
}

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("causet");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* lvl = std::getenv("CAUSET_LOG")) spdlog::set_level(spdlog::level::from_str(lvl));
}

struct Runner {
  RunConfig cfg;
  fs::path out;
  Provenance prov;

  std::string path(const char* name) const { return (out / name).string(); }

  void write_model(const GridModel& m, const ModelSummary& s) const {
    write_file(path("model.json"), model_json(m, s, cfg.l_cap, prov));
  }

  void write_chains(const GridModel& m, const ChainStageResult& c) const {
    write_file(path("recurrence.csv"), recurrence_csv(m, c.recurrence, prov));
    write_file(path("recurrence.json"), recurrence_json(c.recurrence, prov));
    if (cfg.export_chain_edges) write_file(path("chain_edges.csv"), chain_edges_csv(c.last_graph, prov));
  }

  void write_attractors(const GridModel& m, const AttractorStageResult& a, const std::vector<TimeField>& taus) const {
    write_file(path("attractors.json"), attractors_json(a, prov));
    write_file(path("attractor_nodes.csv"), attractor_nodes_csv(m, a, taus, prov));
  }

  void run_model() const {
    const GridModel m = build_model(cfg);
    write_model(m, summarize_model(m, cfg.l_cap));
  }

  void run_reach(const GridModel& m) const {
    std::vector<NodeId> sources;
    for (const auto& [i, j] : cfg.reach_sources) sources.push_back(m.lattice.index(i, j));
    if (sources.empty()) sources.push_back(m.lattice.index(m.lattice.nx / 2, m.lattice.ny / 2));
    std::vector<ReachResult> res;
    for (NodeId s : sources) res.push_back(reach_interval(m, s, cfg.l_cap));
    write_file(path("reach.csv"), reach_csv(m, res, cfg.reach_t, cfg.reach_T, prov));
  }

  void run_chains_cmd() const {
    const GridModel m = build_model(cfg);
    write_chains(m, run_chains(m, cfg));
  }

  void run_attractors_cmd() const {
    const GridModel m = build_model(cfg);
    const auto chains = run_chains(m, cfg);
    write_chains(m, chains);
    write_attractors(m, run_attractors(m, cfg, chains), {});
  }

  PipelineResult run_timefn() const {
    PipelineResult r = global_time_function(cfg);
    write_model(r.model, r.summary);
    write_chains(r.model, r.chains);
    write_attractors(r.model, r.attractors, r.taus);
    write_file(path("tau.csv"), tau_csv(r.model, r.tau, r.chains.recurrence.recurrent, r.undecided, prov));
    write_file(path("tau_grid.csv"), tau_grid_csv(r.model, r.tau, prov));
    write_file(path("tau.json"), tau_json(r, prov));
    return r;
  }

  // Returns false when an audit found a violation.
  bool run_verify(const GridModel& m, const TimeField& tau, const Mask& recurrent) const {
    const auto curves = sample_causal_curves(m, cfg.curves, cfg.curve_length, cfg.seed);
    const AuditReport ca = audit_monotone(tau, curves, recurrent, 1e-9);
    const AuditReport ea = audit_edges(m, tau, recurrent, 1e-9);
    const NoChainCertificate cert = no_chain_certificate(m, tau, cfg.certificate_T, cfg.l_cap);
    write_file(path("audit.json"), audit_json(ea, ca, cert, prov));
    write_file(path("violating_curves.csv"), curves_csv(curves, ca, prov));
    spdlog::info("audit: {} curve violations, {} edge violations, certificate {}", ca.violations, ea.violations,
                 verdict_name(cert.verdict));
    return ca.violations == 0 && ea.violations == 0;
  }

  bool run_verify_cmd() const {
    const GridModel m = build_model(cfg);
    const TauTable t = read_tau_csv(path("tau.csv"), static_cast<std::size_t>(m.size()));
    if (t.provenance.find("config_sha256=" + cfg.hash) == std::string::npos) {
      throw ConfigError("tau.csv was produced from a different config");
    }
    return run_verify(m, t.tau, t.recurrent);
  }

  bool run_all() const {
    const PipelineResult r = run_timefn();
    run_reach(r.model);
    return run_verify(r.model, r.tau, r.chains.recurrence.recurrent);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal-structure engine for 2-D time-oriented Lorentzian spacetimes"};
  std::string config_path, out_dir, command;
  std::uint64_t seed = 0;
  int threads = -1;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_dir, "output directory (default: out)");
  app.add_option("--command", command, "model | reach | chains | attractors | timefn | verify | all");
  auto* seed_opt = app.add_option("--seed", seed, "curve sampler seed");
  app.add_option("--threads", threads, "worker threads, 0 = auto");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kConfigError, "usage", e.what());
  }
  setup_logging();

  Runner run;
  try {
    run.cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    return fail(kConfigError, "config", e.what());
  } catch (const std::exception& e) {
    return fail(kConfigError, "config", e.what());
  }
  if (!command.empty()) run.cfg.command = command;
  if (!out_dir.empty()) run.cfg.out_dir = out_dir;
  if (*seed_opt) run.cfg.seed = seed;
  if (threads >= 0) run.cfg.threads = threads;
  static const std::set<std::string> kCommands{"model", "reach", "chains", "attractors", "timefn", "verify", "all"};
  if (!kCommands.count(run.cfg.command)) return fail(kConfigError, "config", "unknown command '" + run.cfg.command + "'");
  set_worker_count(run.cfg.threads);

  run.out = run.cfg.out_dir;
  run.prov = {run.cfg.hash, run.cfg.command, run.cfg.seed};
  try {
    fs::create_directories(run.out);
    const std::string& c = run.cfg.command;
    bool ok = true;
    if (c == "model") {
      run.run_model();
    } else if (c == "reach") {
      run.run_reach(build_model(run.cfg));
    } else if (c == "chains") {
      run.run_chains_cmd();
    } else if (c == "attractors") {
      run.run_attractors_cmd();
    } else if (c == "timefn") {
      run.run_timefn();
    } else if (c == "verify") {
      ok = run.run_verify_cmd();
    } else {
      ok = run.run_all();
    }
    if (!ok) return fail(kStageFailure, "audit", "monotonicity audit found violations; see audit.json");
  } catch (const ConfigError& e) {
    return fail(kConfigError, "config", e.what());
  } catch (const std::exception& e) {
    return fail(kStageFailure, "stage", e.what());
  }
  return kOk;
}
