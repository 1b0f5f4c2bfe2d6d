#pragma once

#include <string>
#include <vector>

#include "causet/attract.hpp"
#include "causet/chains.hpp"
#include "causet/config.hpp"
#include "causet/grid.hpp"
#include "causet/timefn.hpp"
#include "causet/verify.hpp"

namespace causet {

struct ModelSummary {
  double max_adapted_residual = 0.0;
  std::size_t step_edges = 0;
  std::size_t exit_nodes = 0;
  std::size_t cyclic_nodes = 0;
  double longest_acyclic_path = 0.0;
  bool horizon_above_acyclic = false;  // cap saturates only through cycles
};

ModelSummary summarize_model(const GridModel& model, double l_cap);

struct ChainStageResult {
  RecurrenceReport recurrence;
  ChainGraph last_graph;

  bool recurrent_all() const { return recurrence.recurrent.all(); }
};

struct AttractorStageResult {
  std::vector<AttractorRecord> records;
  std::vector<PreAttractorCheck> certificates;  // re-checked from scratch
  std::vector<NodeId> seeds;
};

struct PipelineResult {
  GridModel model;
  ModelSummary summary;
  ChainStageResult chains;
  AttractorStageResult attractors;
  Ladder ladder;
  std::vector<TimeField> taus;  // per record
  TimeField tau;
  AuditReport edge_audit;       // strictness outside R
  Mask undecided;               // union of per-record boundary_undecided
  std::vector<std::string> notes;
};

GridModel build_model(const RunConfig& config);
ChainStageResult run_chains(const GridModel& model, const RunConfig& config, Execution exec = Execution::kParallel);
AttractorStageResult run_attractors(const GridModel& model, const RunConfig& config, const ChainStageResult& chains,
                                    Execution exec = Execution::kParallel);

// Model, chains, attractor records, per-record tau_A and the combined tau.
PipelineResult global_time_function(const RunConfig& config, Execution exec = Execution::kParallel);

}  // namespace causet
