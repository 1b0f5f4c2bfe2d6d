#include "causet/spacetime.hpp"

#include <cmath>
#include <numbers>

#include "causet/adapted.hpp"
#include "causet/error.hpp"

namespace causet {
namespace {

Sym2 rotated_minkowski(double theta) {
  const Vec2 e1{std::cos(theta), std::sin(theta)};
  const Vec2 e2{-std::sin(theta), std::cos(theta)};
  return Sym2::outer(e2) - Sym2::outer(e1);
}

double tilt_angle(const SpacetimeSpec& spec, Vec2 p) {
  switch (spec.builtin) {
    case Builtin::kTilted:
      return spec.param("theta", 0.0);
    case Builtin::kCylinderTilt: {
      const double k = spec.param("k", 12.0);
      const double c = 1.0 / std::cosh(k * (p.x - spec.param("x_c", 0.0)));
      return 0.25 * std::numbers::pi * c * c;
    }
    default:
      return 0.0;
  }
}

double wrap_axis(double v, double lo, double hi) {
  const double period = hi - lo;
  double r = std::fmod(v - lo, period);
  if (r < 0.0) r += period;
  return lo + r;
}

}  // namespace

double SpacetimeSpec::param(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Builtin parse_builtin(const std::string& name) {
  if (name == "minkowski") return Builtin::kMinkowski;
  if (name == "torus") return Builtin::kTorus;
  if (name == "cylinder-tilt") return Builtin::kCylinderTilt;
  if (name == "tilted") return Builtin::kTilted;
  throw ConfigError("unknown builtin spacetime '" + name + "'");
}

std::string builtin_name(Builtin b) {
  switch (b) {
    case Builtin::kMinkowski: return "minkowski";
    case Builtin::kTorus: return "torus";
    case Builtin::kCylinderTilt: return "cylinder-tilt";
    case Builtin::kTilted: return "tilted";
  }
  return "unknown";
}

SpacetimeSpec builtin_spec(const std::string& name) {
  SpacetimeSpec s;
  s.name = name;
  s.builtin = parse_builtin(name);
  switch (s.builtin) {
    case Builtin::kMinkowski:
      s.chart = {0.0, 1.0, -0.5, 0.5};
      break;
    case Builtin::kTorus:
      s.chart = {0.0, 1.0, 0.0, 1.0};
      s.periodic_x = s.periodic_y = true;
      break;
    case Builtin::kCylinderTilt:
      // 64 nodes on [-1, 31/32] put a node exactly on x = 0 with spacing 1/32.
      s.chart = {-1.0, 0.96875, 0.0, 2.0};
      s.periodic_y = true;
      s.params = {{"k", 12.0}, {"x_c", 0.0}};
      break;
    case Builtin::kTilted:
      s.chart = {0.0, 1.0, -0.5, 0.5};
      s.params = {{"theta", 0.0}};
      break;
  }
  return s;
}

void validate_spec(const SpacetimeSpec& spec) {
  const Chart& c = spec.chart;
  if (!(c.x1 > c.x0) || !(c.y1 > c.y0) || !std::isfinite(c.x0) || !std::isfinite(c.x1) ||
      !std::isfinite(c.y0) || !std::isfinite(c.y1)) {
    throw ConfigError("degenerate chart: zero or negative area");
  }
  if (spec.builtin == Builtin::kTorus && !(spec.periodic_x && spec.periodic_y)) {
    throw ConfigError("torus requires both axes periodic");
  }
  if (spec.builtin == Builtin::kCylinderTilt && !spec.periodic_y) {
    throw ConfigError("cylinder-tilt requires a periodic second axis");
  }
  if (!(spec.param("scale", 1.0) > 0.0)) throw ConfigError("scale must be positive");
  if (!(spec.widening >= 0.0)) throw ConfigError("widening must be >= 0");
  if (spec.builtin == Builtin::kTilted && !(std::abs(spec.param("theta", 0.0)) < 0.5 * std::numbers::pi)) {
    throw ConfigError("tilted: |theta| must be below pi/2");
  }
}

Vec2 wrap_point(const SpacetimeSpec& spec, Vec2 p) {
  const Chart& c = spec.chart;
  // Tolerance of a few ulps on closed non-periodic edges.
  const double tx = 1e-12 * std::max(1.0, c.x1 - c.x0);
  const double ty = 1e-12 * std::max(1.0, c.y1 - c.y0);
  if (spec.periodic_x) {
    p.x = wrap_axis(p.x, c.x0, c.x1);
  } else if (p.x < c.x0 - tx || p.x > c.x1 + tx) {
    throw DomainError("point outside chart on first axis");
  }
  if (spec.periodic_y) {
    p.y = wrap_axis(p.y, c.y0, c.y1);
  } else if (p.y < c.y0 - ty || p.y > c.y1 + ty) {
    throw DomainError("point outside chart on second axis");
  }
  return p;
}

Sym2 base_metric_at(const SpacetimeSpec& spec, Vec2 p) {
  p = wrap_point(spec, p);
  const double scale = spec.param("scale", 1.0);
  switch (spec.builtin) {
    case Builtin::kMinkowski:
    case Builtin::kTorus:
      return Sym2::diag(-scale, scale);
    case Builtin::kTilted:
    case Builtin::kCylinderTilt:
      return rotated_minkowski(tilt_angle(spec, p)) * scale;
  }
  return {};
}

Vec2 orientation_at(const SpacetimeSpec& spec, Vec2 p) {
  p = wrap_point(spec, p);
  const double theta = tilt_angle(spec, p);
  return {std::cos(theta), std::sin(theta)};
}

Sym2 widen_metric(const Sym2& g, const Vec2& t, double a) {
  if (a == 0.0) return g;
  const Vec2 gt = g.apply(t);
  return g + Sym2::outer(gt) * (a / g.quad(t));
}

Sym2 metric_at(const SpacetimeSpec& spec, Vec2 p) {
  const Sym2 g = base_metric_at(spec, p);
  return widen_metric(g, orientation_at(spec, p), spec.widening);
}

SpacetimeSpec widen_cones(const SpacetimeSpec& spec, double alpha) {
  if (!(alpha >= 0.0)) throw ArgumentError("widen_cones: alpha must be >= 0");
  SpacetimeSpec out = spec;
  // Widening composes multiplicatively on the timelike eigenvalue.
  out.widening = (1.0 + spec.widening) * (1.0 + alpha) - 1.0;
  if (alpha > 0.0) out.name = spec.name + "+widened";
  return out;
}

ConeSample cone_at(const SpacetimeSpec& spec, Vec2 p) {
  ConeSample c;
  c.point = wrap_point(spec, p);
  c.g = base_metric_at(spec, c.point);
  c.t = orientation_at(spec, c.point);
  c.alpha = spec.widening;
  c.h = wick_matrix(c.g, c.t);
  return c;
}

bool is_future_causal(const ConeSample& cone, Vec2 v, double slack) {
  if (v.x == 0.0 && v.y == 0.0) throw ArgumentError("is_future_causal: zero vector");
  const Sym2 ga = widen_metric(cone.g, cone.t, cone.alpha);
  return ga.quad(v) <= slack * cone.h.quad(v) && cone.g.bilinear(v, cone.t) < 0.0;
}

}  // namespace causet
