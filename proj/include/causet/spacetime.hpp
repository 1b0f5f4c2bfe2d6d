#pragma once

#include <map>
#include <string>

#include "causet/types.hpp"

namespace causet {

struct Chart {
  double x0 = 0.0, x1 = 1.0;  // first coordinate range
  double y0 = 0.0, y1 = 1.0;  // second coordinate range
};

enum class Builtin { kMinkowski, kTorus, kCylinderTilt, kTilted };

// Analytic 2-D time-oriented Lorentzian spacetime on a rectangular chart.
//
// Builtins (metric g, orientation T):
//   minkowski      -dt^2 + dx^2, T = d/dt
//   torus          minkowski with both axes periodic
//   tilted         diag(-1,1) rotated by the constant angle `theta`
//   cylinder-tilt  diag(-1,1) rotated by theta(x) = (pi/4) sech^2(k (x - x_c)),
//                  second axis periodic; the circle x = x_c is a closed null curve
// Every builtin accepts `scale` > 0, a constant conformal factor on g.
//
// `widening` >= 0 is the cone-widening parameter: the timelike eigenvalue of g
// in the orthonormal frame of T is multiplied by (1 + widening).
struct SpacetimeSpec {
  std::string name;
  Builtin builtin = Builtin::kMinkowski;
  Chart chart;
  bool periodic_x = false;
  bool periodic_y = false;
  std::map<std::string, double> params;
  double widening = 0.0;

  double param(const std::string& key, double fallback) const;
};

// Default spec for a builtin name ("minkowski", "torus", "cylinder-tilt",
// "tilted"). Throws ConfigError for unknown names.
SpacetimeSpec builtin_spec(const std::string& name);
Builtin parse_builtin(const std::string& name);
std::string builtin_name(Builtin b);

// Checks chart geometry, parameter ranges, and forced periodicity.
void validate_spec(const SpacetimeSpec& spec);

// Maps p into the chart, wrapping periodic axes. Throws DomainError when p is
// outside the chart on a non-periodic axis.
Vec2 wrap_point(const SpacetimeSpec& spec, Vec2 p);

// Metric including cone widening.
Sym2 metric_at(const SpacetimeSpec& spec, Vec2 p);
// Metric of the unwidened spacetime; the adapted metric is always built from it.
Sym2 base_metric_at(const SpacetimeSpec& spec, Vec2 p);
Vec2 orientation_at(const SpacetimeSpec& spec, Vec2 p);

// Widened metric g + a (gT)(gT)^T / g(T,T): scales the timelike eigenvalue in
// the g-orthonormal frame of T by (1 + a).
Sym2 widen_metric(const Sym2& g, const Vec2& t, double a);

SpacetimeSpec widen_cones(const SpacetimeSpec& spec, double alpha);

struct ConeSample {
  Vec2 point;
  Sym2 g;       // unwidened metric
  Vec2 t;       // time orientation
  double alpha = 0.0;
  Sym2 h;       // adapted metric, scale for the causal slack
};

ConeSample cone_at(const SpacetimeSpec& spec, Vec2 p);

// True iff g_alpha(v,v) <= slack * h(v,v) and g(v,T) < 0.
bool is_future_causal(const ConeSample& cone, Vec2 v, double slack);

}  // namespace causet
