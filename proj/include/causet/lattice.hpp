#pragma once

#include "causet/spacetime.hpp"
#include "causet/types.hpp"

namespace causet {

// Regular node lattice over a chart. Node (i, j) sits at
// (x0 + i*sx, y0 + j*sy) and has index i*ny + j. Periodic axes exclude the
// duplicated right edge, so their spacing is extent/n instead of extent/(n-1).
struct Lattice {
  int nx = 0;
  int ny = 0;
  Chart chart;
  bool periodic_x = false;
  bool periodic_y = false;
  double sx = 0.0;
  double sy = 0.0;

  static Lattice over(const SpacetimeSpec& spec, int nx, int ny);

  int size() const { return nx * ny; }
  double spacing() const { return sx > sy ? sx : sy; }
  NodeId index(int i, int j) const { return static_cast<NodeId>(i * ny + j); }
  int i_of(NodeId n) const { return n / ny; }
  int j_of(NodeId n) const { return n % ny; }
  Vec2 point(NodeId n) const { return {chart.x0 + i_of(n) * sx, chart.y0 + j_of(n) * sy}; }

  // Node at lattice offset (di, dj) from n, wrapping periodic axes;
  // kNoNode when the offset leaves the chart.
  NodeId shift(NodeId n, int di, int dj) const;
};

}  // namespace causet
