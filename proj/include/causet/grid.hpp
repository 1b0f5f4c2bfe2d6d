#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "causet/adapted.hpp"
#include "causet/lattice.hpp"
#include "causet/spacetime.hpp"
#include "causet/types.hpp"

namespace causet {

struct GridParams {
  int nx = 64;
  int ny = 64;
  double r_step = 0.0;  // <= 0: 2.5 * spacing
  double eta = -1.0;    // < 0: 0.25 * spacing / r_step
};

// One causal lattice offset from a node. `to` is kNoNode when the offset
// leaves a non-periodic chart.
struct StepEdge {
  NodeId to = kNoNode;
  double weight = 0.0;  // h-length of the straight segment
  int di = 0;
  int dj = 0;
};

struct LatticeEdge {
  NodeId to = kNoNode;
  double weight = 0.0;
};

struct GridModel {
  SpacetimeSpec spec;
  Lattice lattice;
  AdaptedMetricField field;
  double r_step = 0.0;
  double eta = 0.0;

  // Causal step graph in CSR form, exiting offsets included.
  std::vector<std::int32_t> step_begin;
  std::vector<StepEdge> steps;
  Mask exits;  // node has a causal offset leaving the chart

  // Undirected 8-neighbour lattice used for h-distances.
  std::vector<std::int32_t> nb_begin;
  std::vector<LatticeEdge> nbs;

  // Strongly connected components of the step graph, numbered in
  // topological order of the condensation (edges go from lower to higher id).
  std::vector<std::int32_t> scc_of;
  std::vector<std::int32_t> scc_begin;
  std::vector<NodeId> scc_nodes;
  Mask cyclic;  // node lies on a directed cycle of the step graph

  int size() const { return lattice.size(); }
  double spacing() const { return lattice.spacing(); }
  int scc_count() const { return static_cast<int>(scc_begin.size()) - 1; }
  double min_step_weight() const;
  // Longest step path that does not enter a cyclic component twice; horizons
  // above it are only ever saturated by step-graph cycles.
  double longest_acyclic_path() const;
  std::size_t edge_count() const;
};

// Throws ConfigError on degenerate charts, resolution < 8 or r_step < spacing.
GridModel build_grid_model(const SpacetimeSpec& spec, const GridParams& params);

// Multi-source Dijkstra over the 8-neighbour lattice. Distances beyond
// `cutoff` are left at +inf.
std::vector<double> h_distance_field(const GridModel& model, const Mask& sources,
                                     double cutoff = std::numeric_limits<double>::infinity());
std::vector<double> h_distance_field(const GridModel& model, NodeId source,
                                     double cutoff = std::numeric_limits<double>::infinity());
double h_distance(const GridModel& model, NodeId a, NodeId b);

// Nodes within h-distance eps of the mask (eps-dilation).
Mask h_dilate(const GridModel& model, const Mask& mask, double eps);
Mask h_ball(const GridModel& model, NodeId center, double eps);

}  // namespace causet
