#pragma once

#include <cstdint>
#include <vector>

#include "causet/grid.hpp"
#include "causet/parallel.hpp"

namespace causet {

// Digraph of single (eps,T)-chain links: x -> y iff y lies within h-distance
// eps(y) of J+_{T,T_cap}(x). Rows are dense bitsets.
class ChainGraph {
 public:
  ChainGraph() = default;
  ChainGraph(int n, double T, double T_cap, std::vector<double> eps);

  int size() const { return n_; }
  double T() const { return T_; }
  double T_cap() const { return T_cap_; }
  const std::vector<double>& eps() const { return eps_; }

  bool edge(NodeId x, NodeId y) const { return (row(x)[y >> 6] >> (y & 63)) & 1u; }
  void add_edge(NodeId x, NodeId y) { row(x)[y >> 6] |= std::uint64_t{1} << (y & 63); }
  std::vector<NodeId> successors(NodeId x) const;
  std::size_t edge_count() const;

  const std::uint64_t* row(NodeId x) const { return bits_.data() + static_cast<std::size_t>(x) * words_; }
  std::uint64_t* row(NodeId x) { return bits_.data() + static_cast<std::size_t>(x) * words_; }
  int words() const { return words_; }

 private:
  int n_ = 0;
  int words_ = 0;
  double T_ = 0.0;
  double T_cap_ = 0.0;
  std::vector<double> eps_;
  std::vector<std::uint64_t> bits_;
};

// Constant eps; throws ConfigError when eps < spacing and ArgumentError
// unless 0 < T <= T_cap.
ChainGraph build_chain_graph(const GridModel& model, double eps, double T, double T_cap,
                             Execution exec = Execution::kParallel);
// Per-node eps table; entries must be positive.
ChainGraph build_chain_graph(const GridModel& model, const std::vector<double>& eps, double T,
                             double T_cap, Execution exec = Execution::kParallel);

struct RecurrenceReport {
  Mask recurrent;                  // intersection over all stages
  std::vector<std::int32_t> scc;   // component id per node (last stage)
  std::vector<Mask> stages;
  std::vector<double> stage_eps;
  std::vector<double> stage_T;
  double T_cap = 0.0;
};

// Nodes on a directed cycle (self-loop or component of size >= 2).
RecurrenceReport chain_recurrent_set(const ChainGraph& graph);

// Endpoints of chain-graph paths of length >= 1 starting at x. Edge targets
// are already eps-dilated, so no further dilation is applied.
Mask chain_reachable_from(const ChainGraph& graph, NodeId x);

struct ChainStage {
  double eps = 0.0;
  double T = 0.0;
};

// Intersection of R_{eps,T} over the schedule with one fixed T_cap
// (<= 0 selects twice the largest T). Throws ArgumentError for an empty or
// non-monotone schedule.
RecurrenceReport approx_R(const GridModel& model, const std::vector<ChainStage>& schedule,
                          double T_cap = 0.0, Execution exec = Execution::kParallel,
                          ChainGraph* last_graph = nullptr);

}  // namespace causet
