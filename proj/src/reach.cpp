#include "causet/reach.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "causet/error.hpp"

namespace causet {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_cap(double l_cap) {
  if (!(l_cap > 0.0)) throw ArgumentError("horizon L_cap must be positive");
}

}  // namespace

Mask ReachResult::window(double t, double T) const {
  Mask m(lmin.size());
  for (std::size_t v = 0; v < lmin.size(); ++v) {
    m.set(v, reached[v] && lmin[v] <= T && lmax[v] >= t);
  }
  return m;
}

Mask ReachResult::future(double t) const {
  Mask m(lmin.size());
  for (std::size_t v = 0; v < lmin.size(); ++v) m.set(v, reached[v] && lmax[v] >= t);
  return m;
}

ReachResult reach_from(const GridModel& model, const Mask& sources, double l_cap) {
  check_cap(l_cap);
  const int n = model.size();
  ReachResult r;
  r.source = sources;
  r.l_cap = l_cap;
  r.lmin.assign(n, kInf);
  r.lmax.assign(n, -kInf);

  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (NodeId v = 0; v < n; ++v) {
    if (sources[v]) {
      r.lmin[v] = 0.0;
      r.lmax[v] = 0.0;
      pq.push({0.0, v});
    }
  }
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (d > r.lmin[v]) continue;
    for (auto k = model.step_begin[v]; k < model.step_begin[v + 1]; ++k) {
      const StepEdge& e = model.steps[k];
      if (e.to == kNoNode) continue;
      const double nd = d + e.weight;
      if (nd < r.lmin[e.to]) {
        r.lmin[e.to] = nd;
        pq.push({nd, e.to});
      }
    }
  }

  // Longest paths in topological order of the condensation.
  for (int c = 0; c < model.scc_count(); ++c) {
    const auto b = model.scc_begin[c], eend = model.scc_begin[c + 1];
    const NodeId first = model.scc_nodes[b];
    if (model.cyclic[first] && r.lmin[first] < kInf) {
      for (auto k = b; k < eend; ++k) r.lmax[model.scc_nodes[k]] = l_cap;
    }
    for (auto k = b; k < eend; ++k) {
      const NodeId u = model.scc_nodes[k];
      if (r.lmax[u] == -kInf) continue;
      for (auto s = model.step_begin[u]; s < model.step_begin[u + 1]; ++s) {
        const StepEdge& e = model.steps[s];
        if (e.to == kNoNode || model.scc_of[e.to] == c) continue;
        r.lmax[e.to] = std::max(r.lmax[e.to], std::min(l_cap, r.lmax[u] + e.weight));
      }
    }
  }

  r.reached = Mask(n);
  r.exit = Mask(n);
  for (NodeId v = 0; v < n; ++v) {
    if (r.lmin[v] == kInf) continue;
    r.reached.set(v);
    if (model.exits[v]) {
      r.exit.set(v);
      r.boundary_exit = true;
    }
  }
  return r;
}

ReachResult reach_interval(const GridModel& model, NodeId source, double l_cap) {
  Mask m(model.size());
  m.set(source);
  return reach_from(model, m, l_cap);
}

Mask reach_set(const GridModel& model, const Mask& sources, double t, double T, double l_cap,
               Execution exec) {
  if (!(t < T) || !(T <= l_cap)) throw ArgumentError("reach_set requires t < T <= L_cap");
  const std::vector<NodeId> src = sources.nodes();
  Mask out(model.size());
  if (exec == Execution::kSerial) {
    for (NodeId s : src) out |= reach_interval(model, s, l_cap).window(t, T);
    return out;
  }
  std::vector<Mask> parts(src.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < src.size(); ++k) {
    parts[k] = reach_interval(model, src[k], l_cap).window(t, T);
  }
  for (const auto& p : parts) out |= p;
  return out;
}

Mask future_set(const GridModel& model, const Mask& sources, double t, double l_cap) {
  if (sources.none()) return Mask(model.size());
  return reach_from(model, sources, l_cap).future(t);
}

Mask closure_mask(const GridModel& model, const Mask& mask) {
  Mask out = mask;
  for (NodeId v = 0; v < model.size(); ++v) {
    if (!mask[v]) continue;
    for (auto k = model.nb_begin[v]; k < model.nb_begin[v + 1]; ++k) out.set(model.nbs[k].to);
  }
  return out;
}

double hausdorff(const GridModel& model, const Mask& a, const Mask& b) {
  if (a.none() || b.none()) throw ArgumentError("hausdorff: empty mask");
  const auto da = h_distance_field(model, a);
  const auto db = h_distance_field(model, b);
  double h = 0.0;
  for (NodeId v = 0; v < model.size(); ++v) {
    if (a[v]) h = std::max(h, db[v]);
    if (b[v]) h = std::max(h, da[v]);
  }
  return h;
}

std::vector<ContinuityRow> continuity_probe(const GridModel& model, NodeId p, double t, double T,
                                            const std::vector<double>& radii, double l_cap,
                                            Execution exec) {
  if (!(0.0 < t && t < T && T <= l_cap)) throw ArgumentError("continuity_probe requires 0 < t < T <= L_cap");
  double rmax = 0.0;
  for (double r : radii) rmax = std::max(rmax, r);
  const auto dp = h_distance_field(model, p, rmax * (1.0 + 1e-9));
  std::vector<NodeId> ball;
  for (NodeId q = 0; q < model.size(); ++q) {
    if (dp[q] <= rmax * (1.0 + 1e-9)) ball.push_back(q);
  }

  const Mask kp = closure_mask(model, reach_interval(model, p, l_cap).window(t, T));
  auto distance_to = [&](NodeId q) {
    if (q == p) return 0.0;
    const Mask kq = closure_mask(model, reach_interval(model, q, l_cap).window(t, T));
    if (kp.none() && kq.none()) return 0.0;
    if (kp.none() || kq.none()) return kInf;
    return hausdorff(model, kp, kq);
  };

  std::vector<double> dh(ball.size());
  if (exec == Execution::kSerial) {
    for (std::size_t k = 0; k < ball.size(); ++k) dh[k] = distance_to(ball[k]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < ball.size(); ++k) dh[k] = distance_to(ball[k]);
  }

  std::vector<ContinuityRow> rows;
  for (double r : radii) {
    ContinuityRow row;
    row.radius = r;
    for (std::size_t k = 0; k < ball.size(); ++k) {
      if (dp[ball[k]] <= r * (1.0 + 1e-9)) {
        row.modulus = std::max(row.modulus, dh[k]);
        ++row.probes;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace causet
