#pragma once

#include <vector>

#include "causet/lattice.hpp"
#include "causet/spacetime.hpp"

namespace causet {

// Wick rotation of g about T:
//   h(xT + u, yT + v) = -x y g(T,T) + g(u,v),   u, v g-orthogonal to T,
// which in matrix form is g - 2 (gT)(gT)^T / g(T,T).
Sym2 wick_matrix(const Sym2& g, const Vec2& t);

// Adapted metric of the unwidened spacetime at an arbitrary chart point.
Sym2 h_at(const SpacetimeSpec& spec, Vec2 p);

// Per-node samples of (g, T, h) on a lattice. `h` is public so tests can
// corrupt it and watch check_adapted_at react.
struct AdaptedMetricField {
  SpacetimeSpec spec;
  Lattice lattice;
  std::vector<Sym2> g;
  std::vector<Vec2> t;
  std::vector<Sym2> h;
};

// Throws ConstructionError naming the node if T is not timelike there, or if
// the resulting h is not positive definite.
AdaptedMetricField wick_rotation(const SpacetimeSpec& spec, const Lattice& lattice);

// Max-norm deviation of (g, h) from (diag(-1,1), diag(1,1)) in the frame
// (T/sqrt(-g(T,T)), unit g-normal of T).
double check_adapted_at(const AdaptedMetricField& field, NodeId node);

// Sum over segments of sqrt(d^T h(mid) d), each segment split into pieces no
// longer than `max_piece` in chart coordinates. Points are unwrapped chart
// coordinates; periodic axes are wrapped for evaluation only.
double h_length(const SpacetimeSpec& spec, const std::vector<Vec2>& curve, double max_piece);
double h_length(const AdaptedMetricField& field, const std::vector<Vec2>& curve);

}  // namespace causet
