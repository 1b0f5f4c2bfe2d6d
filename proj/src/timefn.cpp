#include "causet/timefn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "causet/error.hpp"
#include "causet/reach.hpp"

namespace causet {
namespace {

void check_ladder(const Ladder& l) {
  if (l.t.empty() || l.t.size() != l.w.size()) throw ArgumentError("ladder: times and weights must match");
  double sum = 0.0;
  for (std::size_t k = 0; k < l.t.size(); ++k) {
    if (!(l.w[k] > 0.0)) throw ArgumentError("ladder: weights must be positive");
    if (!(l.t[k] > 0.0) || (k > 0 && !(l.t[k] > l.t[k - 1]))) {
      throw ArgumentError("ladder: times must be positive and increasing");
    }
    sum += l.w[k];
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ArgumentError("ladder: weights must sum to 1");
}

// Writes tau_A(x) for every field into out[k][x].
void tau_at(const GridModel& model, const std::vector<TimeField>& fs, const Ladder& ladder, double l_cap,
            NodeId x, std::vector<TimeField>& out) {
  const ReachResult r = reach_interval(model, x, l_cap);
  std::vector<NodeId> order;
  for (NodeId v = 0; v < model.size(); ++v) {
    if (r.reached[v]) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return r.lmax[a] != r.lmax[b] ? r.lmax[a] > r.lmax[b] : a < b;
  });
  // prefix[k]: number of nodes with lmax >= t_k
  std::vector<std::size_t> prefix(ladder.t.size());
  std::size_t p = 0;
  for (std::size_t k = ladder.t.size(); k-- > 0;) {
    while (p < order.size() && r.lmax[order[p]] >= ladder.t[k]) ++p;
    prefix[k] = p;
  }
  std::vector<double> running(order.size() + 1);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    running[0] = 0.0;
    for (std::size_t q = 0; q < order.size(); ++q) running[q + 1] = std::max(running[q], fs[f].value[order[q]]);
    double tau = 0.0;
    for (std::size_t k = 0; k < ladder.t.size(); ++k) tau += ladder.w[k] * (1.0 - running[prefix[k]]);
    out[f].value[x] = tau;
  }
}

}  // namespace

std::string field_kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::kF: return "f";
    case FieldKind::kGt: return "g_t";
    case FieldKind::kTauA: return "tau_A";
    case FieldKind::kTau: return "tau_combined";
  }
  return "unknown";
}

TimeField build_f(const GridModel& model, const AttractorRecord& record) {
  if (record.B.none()) throw ArgumentError("build_f: empty basin");
  const int n = model.size();
  TimeField f;
  f.kind = FieldKind::kF;
  f.value.assign(n, 0.0);
  std::vector<double> mu(n, 1.0);
  if (!record.A.none()) {
    const auto da = h_distance_field(model, record.A);
    for (NodeId v = 0; v < n; ++v) mu[v] = std::min(1.0, da[v]);
  }
  const Mask outside = ~record.B;
  if (outside.none()) {
    for (NodeId v = 0; v < n; ++v) f.value[v] = mu[v] / (mu[v] + 1.0);
    return f;
  }
  const auto dc = h_distance_field(model, outside);
  for (NodeId v = 0; v < n; ++v) f.value[v] = mu[v] / (mu[v] + dc[v]);
  return f;
}

TimeField g_t_field(const GridModel& model, const TimeField& f, double t, double l_cap, Execution exec) {
  if (!(t > 0.0 && t <= l_cap)) throw ArgumentError("g_t_field requires 0 < t <= L_cap");
  TimeField g;
  g.kind = FieldKind::kGt;
  g.value.assign(model.size(), 0.0);
  auto one = [&](NodeId x) {
    const ReachResult r = reach_interval(model, x, l_cap);
    double best = 0.0;
    for (NodeId v = 0; v < model.size(); ++v) {
      if (r.reached[v] && r.lmax[v] >= t) best = std::max(best, f.value[v]);
    }
    g.value[x] = best;
  };
  if (exec == Execution::kSerial) {
    for (NodeId x = 0; x < model.size(); ++x) one(x);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (NodeId x = 0; x < model.size(); ++x) one(x);
  }
  return g;
}

Ladder dyadic_ladder(double l_cap, double resolution) {
  if (!(l_cap > 0.0) || !(resolution > 0.0)) throw ArgumentError("dyadic_ladder: positive arguments required");
  int m = 0;
  while (std::ldexp(l_cap, -m) > resolution && m < 24) ++m;
  const int count = 1 << m;
  Ladder l;
  for (int k = 1; k <= count; ++k) {
    l.t.push_back(std::ldexp(l_cap * k, -m));
    l.w.push_back(std::ldexp(1.0, -m));
  }
  return l;
}

Ladder default_ladder(const GridModel& model, double l_cap) {
  return dyadic_ladder(l_cap, 0.5 * model.min_step_weight());
}

std::vector<TimeField> tau_A_batch(const GridModel& model, const std::vector<TimeField>& fs, const Ladder& ladder,
                                   double l_cap, Execution exec) {
  check_ladder(ladder);
  std::vector<TimeField> out(fs.size());
  for (auto& o : out) {
    o.kind = FieldKind::kTauA;
    o.value.assign(model.size(), 0.0);
  }
  if (fs.empty()) return out;
  if (exec == Execution::kSerial) {
    for (NodeId x = 0; x < model.size(); ++x) tau_at(model, fs, ladder, l_cap, x, out);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (NodeId x = 0; x < model.size(); ++x) tau_at(model, fs, ladder, l_cap, x, out);
  }
  return out;
}

TimeField tau_A(const GridModel& model, const TimeField& f, const Ladder& ladder, double l_cap, Execution exec) {
  return tau_A_batch(model, {f}, ladder, l_cap, exec).front();
}

TimeField combine(const std::vector<TimeField>& fields) {
  if (fields.empty()) throw ArgumentError("combine: no fields");
  const std::size_t n = fields.front().value.size();
  TimeField out;
  out.kind = FieldKind::kTau;
  out.value.assign(n, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (fields[k].value.size() != n) throw ArgumentError("combine: fields on different grids");
    const double w = std::ldexp(1.0, -static_cast<int>(k + 1));
    total += w;
    for (std::size_t v = 0; v < n; ++v) out.value[v] += w * fields[k].value[v];
  }
  for (auto& v : out.value) v /= total;
  return out;
}

}  // namespace causet
