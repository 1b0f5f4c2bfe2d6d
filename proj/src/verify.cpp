#include "causet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "causet/adapted.hpp"
#include "causet/error.hpp"
#include "causet/reach.hpp"

namespace causet {

std::vector<CurveSample> sample_causal_curves(const GridModel& model, int count, double length_target,
                                              std::uint64_t seed) {
  if (count < 1) throw ArgumentError("sample_causal_curves: count must be >= 1");
  if (!(length_target > 0.0)) throw ArgumentError("sample_causal_curves: length_target must be positive");
  std::mt19937_64 rng(seed);
  const Lattice& l = model.lattice;
  std::vector<CurveSample> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    CurveSample s;
    s.seed = seed;
    NodeId v = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(model.size()));
    Vec2 p = l.point(v);
    s.nodes.push_back(v);
    s.points.push_back(p);
    double walked = 0.0;
    while (walked < length_target) {
      const auto b = model.step_begin[v], e = model.step_begin[v + 1];
      if (b == e) throw ConstructionError("node " + std::to_string(v) + " has no causal steps");
      const StepEdge& st = model.steps[b + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(e - b))];
      if (st.to == kNoNode) {
        s.truncated = true;
        break;
      }
      const Vec2 d{st.di * l.sx, st.dj * l.sy};
      s.causal.push_back(is_future_causal(cone_at(model.spec, l.point(v)), d, model.eta));
      p = p + d;
      v = st.to;
      s.nodes.push_back(v);
      s.points.push_back(p);
      walked += st.weight;
    }
    s.length = s.points.size() > 1 ? h_length(model.spec, s.points, l.spacing()) : 0.0;
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

void audit_pair(AuditReport& rep, double tp, double tq, bool audited, double tol, std::size_t curve,
                std::size_t segment) {
  ++rep.segments;
  const double d = tq - tp;
  if (d < -tol) {
    ++rep.violations;
    rep.details.push_back({curve, segment, d});
  }
  if (!audited) return;
  if (rep.strict_checked == 0 || d < rep.min_increment) rep.min_increment = d;
  ++rep.strict_checked;
  if (!(d > 0.0)) ++rep.strict_failures;
}

}  // namespace

AuditReport audit_monotone(const TimeField& tau, const std::vector<CurveSample>& curves, const Mask& strict_mask,
                           double tol) {
  AuditReport rep;
  rep.curves = curves.size();
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const auto& n = curves[c].nodes;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      const bool audited = !strict_mask[n[k]] && !strict_mask[n[k + 1]];
      audit_pair(rep, tau.value[n[k]], tau.value[n[k + 1]], audited, tol, c, k);
    }
  }
  return rep;
}

AuditReport audit_edges(const GridModel& model, const TimeField& tau, const Mask& strict_mask, double tol) {
  AuditReport rep;
  for (NodeId p = 0; p < model.size(); ++p) {
    for (auto k = model.step_begin[p]; k < model.step_begin[p + 1]; ++k) {
      const NodeId q = model.steps[k].to;
      if (q == kNoNode) continue;
      audit_pair(rep, tau.value[p], tau.value[q], !strict_mask[p] && !strict_mask[q], tol,
                 static_cast<std::size_t>(p), static_cast<std::size_t>(k));
    }
  }
  return rep;
}

std::string verdict_name(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::kAcyclic: return "acyclic";
    case CertificateVerdict::kCyclic: return "cyclic";
    case CertificateVerdict::kImpossible: return "impossible";
  }
  return "unknown";
}

NoChainCertificate no_chain_certificate(const GridModel& model, const TimeField& tau, double T, double l_cap,
                                        Execution exec) {
  if (!(T > 0.0 && T <= 0.5 * l_cap)) throw ArgumentError("no_chain_certificate requires 0 < T <= L_cap/2");
  const int n = model.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> gap(n, kInf);
  std::vector<NodeId> arg(n, kNoNode);
  auto one = [&](NodeId x) {
    const Mask w = reach_interval(model, x, l_cap).window(T, l_cap);
    for (NodeId y = 0; y < n; ++y) {
      if (w[y] && tau.value[y] - tau.value[x] < gap[x]) {
        gap[x] = tau.value[y] - tau.value[x];
        arg[x] = y;
      }
    }
  };
  if (exec == Execution::kSerial) {
    for (NodeId x = 0; x < n; ++x) one(x);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (NodeId x = 0; x < n; ++x) one(x);
  }

  NoChainCertificate cert;
  cert.alpha = kInf;
  for (NodeId x = 0; x < n; ++x) {
    if (gap[x] < cert.alpha) {
      cert.alpha = gap[x];
      cert.witness_from = x;
      cert.witness_to = arg[x];
    }
  }
  if (!(cert.alpha > 0.0)) {
    cert.verdict = CertificateVerdict::kImpossible;
    return cert;
  }
  if (cert.alpha == kInf) cert.alpha = 1.0;  // no windows at all: any eps works

  const double s = model.spacing();
  cert.eps.assign(n, 0.0);
  for (NodeId y = 0; y < n; ++y) {
    double nearest = kInf;
    for (auto k = model.nb_begin[y]; k < model.nb_begin[y + 1]; ++k) nearest = std::min(nearest, model.nbs[k].weight);
    double e = 0.5 * nearest;
    const auto d = h_distance_field(model, y, 8.0 * s * (1.0 + 1e-9));
    for (int k = 1; k <= 8; ++k) {
      const double r = k * s;
      bool ok = true;
      for (NodeId z = 0; z < n && ok; ++z) {
        if (d[z] <= r * (1.0 + 1e-9)) ok = std::abs(tau.value[z] - tau.value[y]) < 0.5 * cert.alpha;
      }
      if (!ok) break;
      e = r;
    }
    cert.eps[y] = e;
  }
  const ChainGraph g = build_chain_graph(model, cert.eps, T, l_cap, exec);
  cert.edges = g.edge_count();
  cert.verdict = chain_recurrent_set(g).recurrent.none() ? CertificateVerdict::kAcyclic : CertificateVerdict::kCyclic;
  return cert;
}

std::vector<Vec2> zigzag_member(const ZigzagFamily& fam, int k) {
  const int teeth = 1 << k;
  const double slope = fam.approach_null ? fam.slope * (1.0 - std::ldexp(1.0, -k)) : fam.slope;
  const double half = fam.extent / (2.0 * teeth);
  std::vector<Vec2> pts;
  for (int i = 0; i <= 2 * teeth; ++i) {
    pts.push_back({fam.start.x + i * half, fam.start.y + (i % 2 ? slope * half : 0.0)});
  }
  return pts;
}

SemicontinuityReport check_semicontinuity_constant(const GridModel& model, const ZigzagFamily& family) {
  SemicontinuityReport rep;
  const double piece = model.spacing();
  rep.limit_length = h_length(model.spec, {family.start, family.start + Vec2{family.extent, 0.0}}, piece);
  rep.infimum = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= family.members; ++k) {
    const auto pts = zigzag_member(family, k);
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      if (!is_future_causal(cone_at(model.spec, pts[s]), pts[s + 1] - pts[s], 1e-12)) {
        throw ArgumentError("zigzag member " + std::to_string(k) + " is not causal");
      }
    }
    ZigzagRow row;
    row.k = k;
    row.slope = family.approach_null ? family.slope * (1.0 - std::ldexp(1.0, -k)) : family.slope;
    row.length = h_length(model.spec, pts, piece);
    row.ratio = rep.limit_length / row.length;
    if (!rep.rows.empty() && row.ratio > rep.rows.back().ratio) rep.monotone = false;
    rep.infimum = std::min(rep.infimum, row.ratio);
    rep.rows.push_back(row);
  }
  return rep;
}

std::string verdict_name(LengthVerdict v) {
  switch (v) {
    case LengthVerdict::kHolds: return "holds";
    case LengthVerdict::kViolated: return "violated";
    case LengthVerdict::kInapplicable: return "inapplicable";
  }
  return "unknown";
}

LocalLengthReport check_local_length_bound(const GridModel& model, const NodeWindow& win, double eps_target) {
  const Lattice& l = model.lattice;
  LocalLengthReport rep;
  if (win.i0 < 0 || win.j0 < 0 || win.i1 >= l.nx || win.j1 >= l.ny || win.i0 > win.i1 || win.j0 > win.j1) {
    throw ArgumentError("check_local_length_bound: window outside the lattice");
  }
  auto inside = [&](NodeId v) {
    const int i = l.i_of(v), j = l.j_of(v);
    return i >= win.i0 && i <= win.i1 && j >= win.j0 && j <= win.j1;
  };

  // Orthonormal frame at the window centre.
  const Vec2 c{l.chart.x0 + 0.5 * (win.i0 + win.i1) * l.sx, l.chart.y0 + 0.5 * (win.j0 + win.j1) * l.sy};
  const Sym2 gc = base_metric_at(model.spec, c);
  const Vec2 tc = orientation_at(model.spec, c);
  const Vec2 e1 = tc * (1.0 / std::sqrt(-gc.quad(tc)));
  const Vec2 gt = gc.apply(tc);
  Vec2 e2{-gt.y, gt.x};
  e2 = e2 * (1.0 / std::sqrt(gc.quad(e2)));
  auto frame_u = [&](Vec2 d) { return -gc.bilinear(d, e1); };
  auto frame_w = [&](Vec2 d) { return gc.bilinear(d, e2); };

  std::vector<NodeId> nodes;
  for (int i = win.i0; i <= win.i1; ++i) {
    for (int j = win.j0; j <= win.j1; ++j) nodes.push_back(l.index(i, j));
  }

  constexpr int kDirections = 360;
  for (NodeId v : nodes) {
    const ConeSample cone = cone_at(model.spec, l.point(v));
    for (int k = 0; k < kDirections; ++k) {
      const double a = 2.0 * std::numbers::pi * k / kDirections;
      const Vec2 d{std::cos(a), std::sin(a)};
      const double u = frame_u(d), w = frame_w(d);
      if (cone.h.quad(d) > 2.0 * (u * u + w * w) * (1.0 + 1e-12)) {
        rep.reason = "adapted metric exceeds twice the frame metric at node " + std::to_string(v);
        return rep;
      }
      if (is_future_causal(cone, d, model.eta) && !(w * w < 2.0 * u * u)) {
        rep.reason = "cone not bracketed at node " + std::to_string(v);
        return rep;
      }
    }
  }

  // Longest path by Kahn order on the window subgraph.
  const int n = model.size();
  std::vector<int> indeg(n, 0);
  for (NodeId v : nodes) {
    for (auto k = model.step_begin[v]; k < model.step_begin[v + 1]; ++k) {
      const NodeId q = model.steps[k].to;
      if (q != kNoNode && inside(q)) ++indeg[q];
    }
  }
  std::vector<NodeId> ready;
  for (NodeId v : nodes) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::vector<double> best(n, 0.0);
  std::size_t processed = 0;
  while (!ready.empty()) {
    const NodeId v = ready.back();
    ready.pop_back();
    ++processed;
    for (auto k = model.step_begin[v]; k < model.step_begin[v + 1]; ++k) {
      const NodeId q = model.steps[k].to;
      if (q == kNoNode || !inside(q)) continue;
      best[q] = std::max(best[q], best[v] + model.steps[k].weight);
      if (--indeg[q] == 0) ready.push_back(q);
    }
  }
  if (processed != nodes.size()) {
    rep.reason = "window contains a causal step cycle";
    return rep;
  }

  double umin = std::numeric_limits<double>::infinity(), umax = -umin;
  for (NodeId v : nodes) {
    const double u = frame_u(l.point(v) - c);
    umin = std::min(umin, u);
    umax = std::max(umax, u);
    rep.max_length = std::max(rep.max_length, best[v]);
  }
  rep.delta_u = umax - umin;
  rep.bound = 2.0 * std::sqrt(3.0) * rep.delta_u * 1.05;
  rep.verdict = rep.max_length <= rep.bound ? LengthVerdict::kHolds : LengthVerdict::kViolated;
  rep.meets_target = rep.max_length <= eps_target;
  return rep;
}

}  // namespace causet
