#include "causet/pipeline.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>

#include "causet/reach.hpp"

namespace causet {

ModelSummary summarize_model(const GridModel& model, double l_cap) {
  ModelSummary s;
  for (NodeId v = 0; v < model.size(); ++v) {
    s.max_adapted_residual = std::max(s.max_adapted_residual, check_adapted_at(model.field, v));
  }
  s.step_edges = model.edge_count();
  s.exit_nodes = model.exits.count();
  s.cyclic_nodes = model.cyclic.count();
  s.longest_acyclic_path = model.longest_acyclic_path();
  s.horizon_above_acyclic = l_cap > s.longest_acyclic_path;
  return s;
}

GridModel build_model(const RunConfig& config) {
  GridModel m = build_grid_model(config.spec, config.grid);
  spdlog::info("model {}: {}x{} nodes, spacing {:.6g}, {} step edges", config.spec.name, m.lattice.nx,
               m.lattice.ny, m.spacing(), m.edge_count());
  return m;
}

ChainStageResult run_chains(const GridModel& model, const RunConfig& config, Execution exec) {
  ChainStageResult r;
  r.recurrence = approx_R(model, config.schedule(model.spacing()), config.chain_T_cap, exec, &r.last_graph);
  spdlog::info("chain recurrent set: {} of {} nodes", r.recurrence.recurrent.count(), model.size());
  return r;
}

AttractorStageResult run_attractors(const GridModel& model, const RunConfig& config, const ChainStageResult& chains,
                                    Execution exec) {
  AttractorStageResult out;
  const Mask& last = chains.recurrence.stages.back();
  std::vector<NodeId> free_nodes;
  for (NodeId v = 0; v < model.size(); ++v) {
    if (!chains.recurrence.recurrent[v]) free_nodes.push_back(v);
  }
  const std::size_t nseeds = std::min<std::size_t>(config.max_seeds, free_nodes.size());
  for (std::size_t k = 0; k < nseeds; ++k) {
    out.seeds.push_back(free_nodes[(free_nodes.size() * (2 * k + 1)) / (2 * nseeds)]);
  }

  const GridModel widened = widened_model(model, config.alpha);
  const double l_cap = config.l_cap;
  for (NodeId x : out.seeds) {
    std::vector<AttractorRecord> found;
    if (!last[x]) found = candidates_from_chains(model, chains.last_graph, last, x, l_cap);
    for (auto& r : candidates_from_widened_futures(model, widened, x, config.t0_widened, l_cap)) {
      found.push_back(std::move(r));
    }
    for (auto& r : found) {
      const bool dup = std::any_of(out.records.begin(), out.records.end(),
                                   [&](const AttractorRecord& o) { return o.U == r.U && o.t0 == r.t0; });
      if (!dup) out.records.push_back(std::move(r));
    }
  }
  fill_basins(model, out.records, l_cap, l_cap, exec);
  for (const auto& r : out.records) out.certificates.push_back(is_pre_attractor(model, r.U, r.t0, l_cap));
  spdlog::info("attractor records: {} from {} seeds", out.records.size(), out.seeds.size());
  return out;
}

PipelineResult global_time_function(const RunConfig& config, Execution exec) {
  PipelineResult res;
  res.model = build_model(config);
  const GridModel& m = res.model;
  const double l_cap = config.l_cap;
  res.summary = summarize_model(m, l_cap);
  if (!res.summary.horizon_above_acyclic) {
    res.notes.push_back("horizon does not exceed the longest acyclic step path; capped lengths may hide strictness");
  }
  res.chains = run_chains(m, config, exec);
  res.attractors = run_attractors(m, config, res.chains, exec);

  res.ladder = config.ladder_resolution > 0.0 ? dyadic_ladder(l_cap, config.ladder_resolution)
                                               : default_ladder(m, l_cap);
  std::vector<TimeField> fs;
  res.undecided = Mask(m.size());
  for (const auto& r : res.attractors.records) {
    fs.push_back(build_f(m, r));
    res.undecided |= r.boundary_undecided;
  }
  res.taus = tau_A_batch(m, fs, res.ladder, l_cap, exec);
  if (res.taus.empty()) {
    res.tau.kind = FieldKind::kTau;
    res.tau.value.assign(m.size(), 0.0);
    res.notes.push_back("no attractor records: tau is constant");
    if (res.chains.recurrent_all()) res.notes.push_back("every node is chain recurrent: no time function on the whole chart exists");
  } else {
    res.tau = combine(res.taus);
  }
  res.edge_audit = audit_edges(m, res.tau, res.chains.recurrence.recurrent, 1e-9);
  spdlog::info("tau: {} edge violations, {} strict failures outside R", res.edge_audit.violations,
               res.edge_audit.strict_failures);
  return res;
}

}  // namespace causet
