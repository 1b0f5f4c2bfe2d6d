#include "causet/adapted.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "causet/error.hpp"

namespace causet {

Sym2 wick_matrix(const Sym2& g, const Vec2& t) {
  const Vec2 gt = g.apply(t);
  return g - Sym2::outer(gt) * (2.0 / g.quad(t));
}

Sym2 h_at(const SpacetimeSpec& spec, Vec2 p) {
  p = wrap_point(spec, p);
  return wick_matrix(base_metric_at(spec, p), orientation_at(spec, p));
}

AdaptedMetricField wick_rotation(const SpacetimeSpec& spec, const Lattice& lattice) {
  AdaptedMetricField f;
  f.spec = spec;
  f.lattice = lattice;
  const int n = lattice.size();
  f.g.resize(n);
  f.t.resize(n);
  f.h.resize(n);
  for (NodeId k = 0; k < n; ++k) {
    const Vec2 p = lattice.point(k);
    f.g[k] = base_metric_at(spec, p);
    f.t[k] = orientation_at(spec, p);
    if (!(f.g[k].quad(f.t[k]) < 0.0)) {
      throw ConstructionError("orientation not timelike at node " + std::to_string(k));
    }
    f.h[k] = wick_matrix(f.g[k], f.t[k]);
    if (!(f.h[k].eigenvalues()[0] > 0.0)) {
      throw ConstructionError("adapted metric not positive definite at node " + std::to_string(k));
    }
  }
  return f;
}

double check_adapted_at(const AdaptedMetricField& field, NodeId node) {
  const Sym2& g = field.g[node];
  const Sym2& h = field.h[node];
  const Vec2 t = field.t[node];
  const Vec2 e1 = t * (1.0 / std::sqrt(-g.quad(t)));
  const Vec2 gt = g.apply(t);
  Vec2 e2{-gt.y, gt.x};
  e2 = e2 * (1.0 / std::sqrt(g.quad(e2)));
  const Sym2 gf{g.quad(e1), g.bilinear(e1, e2), g.quad(e2)};
  const Sym2 hf{h.quad(e1), h.bilinear(e1, e2), h.quad(e2)};
  return std::max(max_abs_diff(gf, Sym2::diag(-1.0, 1.0)), max_abs_diff(hf, Sym2::diag(1.0, 1.0)));
}

double h_length(const SpacetimeSpec& spec, const std::vector<Vec2>& curve, double max_piece) {
  if (curve.size() < 2) throw ArgumentError("h_length: curve needs at least 2 points");
  if (!(max_piece > 0.0)) throw ArgumentError("h_length: piece length must be positive");
  wrap_point(spec, curve.front());
  double total = 0.0;
  for (std::size_t s = 0; s + 1 < curve.size(); ++s) {
    const Vec2 a = curve[s];
    const Vec2 d = curve[s + 1] - a;
    wrap_point(spec, curve[s + 1]);
    const double len = std::hypot(d.x, d.y);
    const int pieces = std::max(1, static_cast<int>(std::ceil(len / max_piece - 1e-12)));
    const Vec2 step = d * (1.0 / pieces);
    for (int k = 0; k < pieces; ++k) {
      const Vec2 mid = a + step * (k + 0.5);
      total += std::sqrt(h_at(spec, mid).quad(step));
    }
  }
  return total;
}

double h_length(const AdaptedMetricField& field, const std::vector<Vec2>& curve) {
  return h_length(field.spec, curve, field.lattice.spacing());
}

}  // namespace causet
