#include "causet/attract.hpp"

#include <cmath>
#include <limits>

#include "causet/error.hpp"
#include "causet/reach.hpp"

namespace causet {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-record data needed by the basin test.
struct BasinProbe {
  Mask outside;  // dilate(complement U)
};

void basin_at(const GridModel& model, const std::vector<BasinProbe>& probes, NodeId p, double t_max,
              double l_cap, std::vector<BasinResult>& out) {
  const ReachResult r = reach_interval(model, p, l_cap);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    double m = -kInf;
    for (NodeId v = 0; v < model.size(); ++v) {
      if (r.reached[v] && probes[k].outside[v]) m = std::max(m, r.lmax[v]);
    }
    if (!(m < t_max)) continue;
    out[k].B.set(p);
    for (NodeId v = 0; v < model.size(); ++v) {
      if (r.exit[v] && r.lmax[v] > m) {
        out[k].undecided.set(p);
        break;
      }
    }
  }
}

std::vector<BasinResult> basins(const GridModel& model, const std::vector<const AttractorRecord*>& recs,
                                double t_max, double l_cap, Execution exec) {
  std::vector<BasinProbe> probes;
  std::vector<BasinResult> out;
  for (const auto* rec : recs) {
    probes.push_back({closure_mask(model, ~rec->U)});
    out.push_back({Mask(model.size()), Mask(model.size())});
  }
  if (exec == Execution::kSerial) {
    for (NodeId p = 0; p < model.size(); ++p) basin_at(model, probes, p, t_max, l_cap, out);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (NodeId p = 0; p < model.size(); ++p) basin_at(model, probes, p, t_max, l_cap, out);
  }
  return out;
}

NodeId nearest_predecessor(const GridModel& model, NodeId x) {
  NodeId best = kNoNode;
  double best_w = kInf;
  for (NodeId z = 0; z < model.size(); ++z) {
    for (auto k = model.step_begin[z]; k < model.step_begin[z + 1]; ++k) {
      const StepEdge& e = model.steps[k];
      if (e.to == x && z != x && e.weight < best_w) {
        best_w = e.weight;
        best = z;
      }
    }
  }
  return best;
}

std::vector<AttractorRecord> accept(const GridModel& model, const Mask& raw, double t0, NodeId x,
                                    double l_cap, const char* origin) {
  if (raw.none()) return {};
  const Mask hull = pre_attractor_hull(model, raw, t0, l_cap);
  AttractorRecord rec = attractor_of(model, hull, t0, l_cap);
  rec.origin = origin;
  rec.seed = x;
  rec.hull_expanded = !(hull == raw);
  if (!separates(model, rec, x, l_cap, l_cap)) return {};
  return {rec};
}

}  // namespace

PreAttractorCheck is_pre_attractor(const GridModel& model, const Mask& U, double t0, double l_cap) {
  if (U.none()) throw ArgumentError("is_pre_attractor: empty U");
  if (!(t0 > 0.0 && t0 < l_cap)) throw ArgumentError("is_pre_attractor: t0 must lie in (0, L_cap)");
  const ReachResult r = reach_from(model, U, l_cap);
  const Mask img = closure_mask(model, r.future(t0));
  PreAttractorCheck c;
  c.boundary_exit = r.boundary_exit;
  for (NodeId v = 0; v < model.size(); ++v) {
    if (img[v] && !U[v]) c.violations.push_back(v);
  }
  c.holds = c.violations.empty();
  return c;
}

AttractorRecord attractor_of(const GridModel& model, const Mask& U, double t0, double l_cap, int max_iters) {
  AttractorRecord rec;
  rec.U = U;
  rec.t0 = t0;
  rec.origin = "user";
  rec.B = Mask(model.size());
  rec.boundary_undecided = Mask(model.size());
  Mask a = U;
  for (int it = 0; it < max_iters; ++it) {
    if (a.none()) {
      rec.converged = true;
      break;
    }
    const ReachResult r = reach_from(model, a, l_cap);
    rec.boundary_contaminated = rec.boundary_contaminated || r.boundary_exit;
    const Mask next = closure_mask(model, r.future(t0));
    rec.iterations = it + 1;
    if (next == a) {
      rec.converged = true;
      break;
    }
    a = next;
  }
  rec.A = a;
  return rec;
}

BasinResult basin(const GridModel& model, const AttractorRecord& record, double t_max, double l_cap,
                  Execution exec) {
  return basins(model, {&record}, t_max, l_cap, exec).front();
}

void fill_basins(const GridModel& model, std::vector<AttractorRecord>& records, double t_max, double l_cap,
                 Execution exec) {
  std::vector<const AttractorRecord*> ptrs;
  for (const auto& r : records) ptrs.push_back(&r);
  auto res = basins(model, ptrs, t_max, l_cap, exec);
  for (std::size_t k = 0; k < records.size(); ++k) {
    records[k].B = std::move(res[k].B);
    records[k].boundary_undecided = std::move(res[k].undecided);
  }
}

Mask pre_attractor_hull(const GridModel& model, const Mask& U, double t0, double l_cap) {
  Mask u = U;
  for (int it = 0; it <= model.size(); ++it) {
    const Mask next = u | closure_mask(model, future_set(model, u, t0, l_cap));
    if (next == u) break;
    u = next;
  }
  return u;
}

bool separates(const GridModel& model, const AttractorRecord& record, NodeId x, double t_max, double l_cap) {
  if (record.A[x]) return false;
  const ReachResult r = reach_interval(model, x, l_cap);
  const Mask outside = closure_mask(model, ~record.U);
  double m = -kInf;
  for (NodeId v = 0; v < model.size(); ++v) {
    if (r.reached[v] && outside[v]) m = std::max(m, r.lmax[v]);
  }
  return m < t_max;
}

std::vector<AttractorRecord> candidates_from_chains(const GridModel& model, const ChainGraph& graph,
                                                    const Mask& recurrent, NodeId x, double l_cap) {
  if (recurrent[x]) return {};
  return accept(model, chain_reachable_from(graph, x), graph.T(), x, l_cap, "chains");
}

GridModel widened_model(const GridModel& model, double alpha) {
  GridParams p;
  p.nx = model.lattice.nx;
  p.ny = model.lattice.ny;
  p.r_step = model.r_step;
  p.eta = model.eta;
  return build_grid_model(widen_cones(model.spec, alpha), p);
}

std::vector<AttractorRecord> candidates_from_widened_futures(const GridModel& model, const GridModel& widened,
                                                             NodeId x, double t0, double l_cap) {
  if (!(widened.spec.widening > model.spec.widening)) {
    throw ArgumentError("candidates_from_widened_futures: widening must be positive");
  }
  NodeId z = nearest_predecessor(model, x);
  if (z == kNoNode) z = x;
  const ReachResult r = reach_interval(widened, z, l_cap);
  const Mask strict = r.future(std::numeric_limits<double>::min());
  return accept(model, closure_mask(model, strict), t0, x, l_cap, "widened");
}

std::vector<AttractorRecord> candidates_from_widened_futures(const GridModel& model, double alpha, NodeId x,
                                                             double t0, double l_cap) {
  if (!(alpha > 0.0)) throw ArgumentError("candidates_from_widened_futures: alpha must be positive");
  return candidates_from_widened_futures(model, widened_model(model, alpha), x, t0, l_cap);
}

}  // namespace causet
