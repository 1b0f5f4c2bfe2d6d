#pragma once

#include <vector>

#include "causet/grid.hpp"
#include "causet/parallel.hpp"

namespace causet {

// Attainable causal lengths from a source (node or node set).
// lmin is the shortest path length, lmax the longest, capped at l_cap; nodes
// on or downstream of a step-graph cycle get lmax = l_cap. Unreached nodes
// carry lmin = +inf, lmax = -inf. A node reached only beyond the horizon has
// lmin > l_cap and lmax = l_cap, so it belongs to no bounded window.
struct ReachResult {
  Mask source;
  double l_cap = 0.0;
  std::vector<double> lmin;
  std::vector<double> lmax;
  Mask reached;
  Mask exit;  // reached nodes with a causal step leaving the chart
  bool boundary_exit = false;

  // J+_{t,T}: closed interval [lmin, lmax] meets [t, T].
  Mask window(double t, double T) const;
  // J+_t: lmax >= t, no upper bound.
  Mask future(double t) const;
};

ReachResult reach_interval(const GridModel& model, NodeId source, double l_cap);
// Super-source propagation: lmin/lmax are the min/max over sources.
ReachResult reach_from(const GridModel& model, const Mask& sources, double l_cap);

// Union over sources of J+_{t,T}. Throws ArgumentError unless t < T <= l_cap.
Mask reach_set(const GridModel& model, const Mask& sources, double t, double T, double l_cap,
               Execution exec = Execution::kParallel);
// Union over sources of J+_t (exact via the super-source).
Mask future_set(const GridModel& model, const Mask& sources, double t, double l_cap);

// One-cell dilation over the 8-neighbour lattice.
Mask closure_mask(const GridModel& model, const Mask& mask);

// Throws ArgumentError if either mask is empty.
double hausdorff(const GridModel& model, const Mask& a, const Mask& b);

struct ContinuityRow {
  double radius = 0.0;
  double modulus = 0.0;
  int probes = 0;
};

// For each radius r: sup over q with h_distance(p,q) <= r of
// d_H(closure J+_{t,T}(p), closure J+_{t,T}(q)).
std::vector<ContinuityRow> continuity_probe(const GridModel& model, NodeId p, double t, double T,
                                            const std::vector<double>& radii, double l_cap,
                                            Execution exec = Execution::kParallel);

}  // namespace causet
