#include "causet/lattice.hpp"

#include "causet/error.hpp"

namespace causet {
namespace {

int wrap_index(int v, int n) {
  v %= n;
  return v < 0 ? v + n : v;
}

}  // namespace

Lattice Lattice::over(const SpacetimeSpec& spec, int nx, int ny) {
  if (nx < 2 || ny < 2) throw ConfigError("lattice needs at least 2 nodes per axis");
  Lattice l;
  l.nx = nx;
  l.ny = ny;
  l.chart = spec.chart;
  l.periodic_x = spec.periodic_x;
  l.periodic_y = spec.periodic_y;
  const double ex = spec.chart.x1 - spec.chart.x0;
  const double ey = spec.chart.y1 - spec.chart.y0;
  l.sx = spec.periodic_x ? ex / nx : ex / (nx - 1);
  l.sy = spec.periodic_y ? ey / ny : ey / (ny - 1);
  return l;
}

NodeId Lattice::shift(NodeId n, int di, int dj) const {
  int i = i_of(n) + di;
  int j = j_of(n) + dj;
  if (periodic_x) {
    i = wrap_index(i, nx);
  } else if (i < 0 || i >= nx) {
    return kNoNode;
  }
  if (periodic_y) {
    j = wrap_index(j, ny);
  } else if (j < 0 || j >= ny) {
    return kNoNode;
  }
  return index(i, j);
}

}  // namespace causet
