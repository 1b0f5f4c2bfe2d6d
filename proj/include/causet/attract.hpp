#pragma once

#include <string>
#include <vector>

#include "causet/chains.hpp"
#include "causet/grid.hpp"
#include "causet/parallel.hpp"

namespace causet {

struct PreAttractorCheck {
  bool holds = false;
  bool boundary_exit = false;  // some contributing path left the chart
  std::vector<NodeId> violations;  // nodes of closure(J+_{t0}(U)) outside U
};

// closure(J+_{t0}(U)) subset of U. Throws ArgumentError for empty U or
// t0 outside (0, l_cap).
PreAttractorCheck is_pre_attractor(const GridModel& model, const Mask& U, double t0, double l_cap);

struct AttractorRecord {
  Mask U;
  double t0 = 0.0;
  Mask A;
  Mask B;
  Mask boundary_undecided;  // basin nodes whose witness future touches the chart edge
  bool boundary_contaminated = false;
  bool converged = false;
  int iterations = 0;
  std::string origin;  // "chains", "widened" or "user"
  NodeId seed = kNoNode;
  bool hull_expanded = false;
};

// A_0 = U, A_{k+1} = closure(J+_{t0}(A_k)) until a fixed point or max_iters.
// B is left empty; see basin().
AttractorRecord attractor_of(const GridModel& model, const Mask& U, double t0, double l_cap,
                             int max_iters = 10000);

struct BasinResult {
  Mask B;
  Mask undecided;
};

// p is in the basin iff closure(J+_t(p)) subset of U for some 0 < t <= t_max,
// i.e. iff max{lmax_p(r) : r in dilate(complement U)} < t_max.
BasinResult basin(const GridModel& model, const AttractorRecord& record, double t_max, double l_cap,
                  Execution exec = Execution::kParallel);
// Fills B and boundary_undecided of every record with one reach per node.
void fill_basins(const GridModel& model, std::vector<AttractorRecord>& records, double t_max,
                 double l_cap, Execution exec = Execution::kParallel);

// Smallest superset of U closed under U <- U | closure(J+_{t0}(U)).
Mask pre_attractor_hull(const GridModel& model, const Mask& U, double t0, double l_cap);

// Whether x lies in B(A,U) \ A for a record with A already computed.
bool separates(const GridModel& model, const AttractorRecord& record, NodeId x, double t_max, double l_cap);

// U = hull of the chain-reachable set of x, t0 = graph T. Returns an empty
// list when x is chain recurrent (per `recurrent`) or no candidate puts x in
// B \ A. Returned records carry A but not B.
std::vector<AttractorRecord> candidates_from_chains(const GridModel& model, const ChainGraph& graph,
                                                    const Mask& recurrent, NodeId x, double l_cap);

// U = hull of the one-cell dilated strict future of z in the widened model,
// z a step-graph predecessor of x (x itself when none exists).
std::vector<AttractorRecord> candidates_from_widened_futures(const GridModel& model,
                                                             const GridModel& widened, NodeId x,
                                                             double t0, double l_cap);
std::vector<AttractorRecord> candidates_from_widened_futures(const GridModel& model, double alpha,
                                                             NodeId x, double t0, double l_cap);

GridModel widened_model(const GridModel& model, double alpha);

}  // namespace causet
