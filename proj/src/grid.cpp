#include "causet/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "causet/error.hpp"

namespace causet {
namespace {

constexpr std::array<std::array<int, 2>, 4> kForward{{{1, 0}, {0, 1}, {1, 1}, {1, -1}}};

// Iterative Tarjan. Components come out sinks first; they are renumbered so
// that every step edge goes from a lower to a higher component id.
void decompose(GridModel& m) {
  const int n = m.size();
  std::vector<std::int32_t> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<NodeId> stack;
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::pair<NodeId, std::int32_t>> call;  // node, next edge slot
  std::int32_t counter = 0;
  std::int32_t ncomp = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, m.step_begin[root]});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, slot] = call.back();
      if (slot < m.step_begin[v + 1]) {
        const NodeId w = m.steps[slot++].to;
        if (w == kNoNode) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, m.step_begin[w]});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const NodeId done = v;
      call.pop_back();
      if (!call.empty()) {
        const NodeId parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
        } while (w != done);
        ++ncomp;
      }
    }
  }

  m.scc_of.assign(n, 0);
  std::vector<std::int32_t> sizes(ncomp, 0);
  for (NodeId v = 0; v < n; ++v) {
    m.scc_of[v] = ncomp - 1 - comp[v];
    ++sizes[m.scc_of[v]];
  }
  m.scc_begin.assign(ncomp + 1, 0);
  for (int c = 0; c < ncomp; ++c) m.scc_begin[c + 1] = m.scc_begin[c] + sizes[c];
  m.scc_nodes.assign(n, kNoNode);
  std::vector<std::int32_t> fill(m.scc_begin.begin(), m.scc_begin.end() - 1);
  for (NodeId v = 0; v < n; ++v) m.scc_nodes[fill[m.scc_of[v]]++] = v;

  m.cyclic = Mask(n);
  for (NodeId v = 0; v < n; ++v) {
    const int c = m.scc_of[v];
    bool cyc = m.scc_begin[c + 1] - m.scc_begin[c] > 1;
    for (auto e = m.step_begin[v]; !cyc && e < m.step_begin[v + 1]; ++e) cyc = m.steps[e].to == v;
    m.cyclic.set(v, cyc);
  }
}

void build_lattice_graph(GridModel& m) {
  const Lattice& l = m.lattice;
  const int n = l.size();
  const double piece = l.spacing();
  std::vector<std::array<double, 4>> w(n);
#pragma omp parallel for schedule(static)
  for (NodeId v = 0; v < n; ++v) {
    const Vec2 p = l.point(v);
    for (int k = 0; k < 4; ++k) {
      w[v][k] = std::numeric_limits<double>::quiet_NaN();
      if (l.shift(v, kForward[k][0], kForward[k][1]) == kNoNode) continue;
      const Vec2 d{kForward[k][0] * l.sx, kForward[k][1] * l.sy};
      w[v][k] = h_length(m.spec, {p, p + d}, piece);
    }
  }
  m.nb_begin.assign(n + 1, 0);
  m.nbs.clear();
  for (NodeId v = 0; v < n; ++v) {
    for (int k = 0; k < 4; ++k) {
      const NodeId fwd = l.shift(v, kForward[k][0], kForward[k][1]);
      if (fwd != kNoNode) m.nbs.push_back({fwd, w[v][k]});
      const NodeId back = l.shift(v, -kForward[k][0], -kForward[k][1]);
      if (back != kNoNode) m.nbs.push_back({back, w[back][k]});
    }
    m.nb_begin[v + 1] = static_cast<std::int32_t>(m.nbs.size());
  }
}

}  // namespace

double GridModel::min_step_weight() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : steps) best = std::min(best, e.weight);
  return best;
}

double GridModel::longest_acyclic_path() const {
  // Components are numbered topologically, so a backwards sweep sees every
  // successor before its predecessors.
  std::vector<double> down(size(), 0.0);
  double best = 0.0;
  for (int c = scc_count() - 1; c >= 0; --c) {
    for (auto k = scc_begin[c]; k < scc_begin[c + 1]; ++k) {
      const NodeId u = scc_nodes[k];
      for (auto s = step_begin[u]; s < step_begin[u + 1]; ++s) {
        const StepEdge& e = steps[s];
        if (e.to == kNoNode || scc_of[e.to] == c) continue;
        down[u] = std::max(down[u], e.weight + down[e.to]);
      }
    }
    double comp = 0.0;
    for (auto k = scc_begin[c]; k < scc_begin[c + 1]; ++k) comp = std::max(comp, down[scc_nodes[k]]);
    for (auto k = scc_begin[c]; k < scc_begin[c + 1]; ++k) down[scc_nodes[k]] = comp;
    best = std::max(best, comp);
  }
  return best;
}

std::size_t GridModel::edge_count() const {
  std::size_t c = 0;
  for (const auto& e : steps) c += e.to != kNoNode;
  return c;
}

GridModel build_grid_model(const SpacetimeSpec& spec, const GridParams& params) {
  validate_spec(spec);
  if (params.nx < 8 || params.ny < 8) throw ConfigError("resolution must be at least 8 per axis");
  GridModel m;
  m.spec = spec;
  m.lattice = Lattice::over(spec, params.nx, params.ny);
  const Lattice& l = m.lattice;
  const double s = l.spacing();
  m.r_step = params.r_step > 0.0 ? params.r_step : 2.5 * s;
  if (m.r_step < s * (1.0 - 1e-12)) {
    throw ConfigError("r_step must be at least the grid spacing " + std::to_string(s));
  }
  m.eta = params.eta >= 0.0 ? params.eta : 0.25 * s / m.r_step;
  m.field = wick_rotation(spec, l);

  const int ri = static_cast<int>(std::floor(m.r_step / l.sx + 1e-9));
  const int rj = static_cast<int>(std::floor(m.r_step / l.sy + 1e-9));
  std::vector<std::array<int, 2>> offsets;
  for (int di = -ri; di <= ri; ++di) {
    for (int dj = -rj; dj <= rj; ++dj) {
      if (di == 0 && dj == 0) continue;
      if (std::hypot(di * l.sx, dj * l.sy) <= m.r_step * (1.0 + 1e-12)) offsets.push_back({di, dj});
    }
  }

  const int n = l.size();
  std::vector<std::vector<StepEdge>> per_node(n);
#pragma omp parallel for schedule(static)
  for (NodeId v = 0; v < n; ++v) {
    const Vec2 p = l.point(v);
    const ConeSample cone = cone_at(spec, p);
    for (const auto& [di, dj] : offsets) {
      const Vec2 d{di * l.sx, dj * l.sy};
      if (!is_future_causal(cone, d, m.eta)) continue;
      StepEdge e;
      e.di = di;
      e.dj = dj;
      e.to = l.shift(v, di, dj);
      e.weight = e.to == kNoNode ? std::sqrt(cone.h.quad(d)) : h_length(spec, {p, p + d}, s);
      per_node[v].push_back(e);
    }
  }
  m.step_begin.assign(n + 1, 0);
  m.exits = Mask(n);
  for (NodeId v = 0; v < n; ++v) {
    for (const auto& e : per_node[v]) {
      m.steps.push_back(e);
      if (e.to == kNoNode) m.exits.set(v);
    }
    m.step_begin[v + 1] = static_cast<std::int32_t>(m.steps.size());
  }

  build_lattice_graph(m);
  decompose(m);
  return m;
}

std::vector<double> h_distance_field(const GridModel& model, const Mask& sources, double cutoff) {
  const int n = model.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (NodeId v = 0; v < n; ++v) {
    if (sources[v]) {
      dist[v] = 0.0;
      pq.push({0.0, v});
    }
  }
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (auto k = model.nb_begin[v]; k < model.nb_begin[v + 1]; ++k) {
      const LatticeEdge& e = model.nbs[k];
      const double nd = d + e.weight;
      if (nd < dist[e.to] && nd <= cutoff) {
        dist[e.to] = nd;
        pq.push({nd, e.to});
      }
    }
  }
  return dist;
}

std::vector<double> h_distance_field(const GridModel& model, NodeId source, double cutoff) {
  Mask m(model.size());
  m.set(source);
  return h_distance_field(model, m, cutoff);
}

double h_distance(const GridModel& model, NodeId a, NodeId b) {
  if (a == b) return 0.0;
  return h_distance_field(model, a)[b];
}

Mask h_dilate(const GridModel& model, const Mask& mask, double eps) {
  const double cut = eps * (1.0 + 1e-9);
  const auto dist = h_distance_field(model, mask, cut);
  Mask out(model.size());
  for (NodeId v = 0; v < model.size(); ++v) out.set(v, dist[v] <= cut);
  return out;
}

Mask h_ball(const GridModel& model, NodeId center, double eps) {
  Mask m(model.size());
  m.set(center);
  return h_dilate(model, m, eps);
}

}  // namespace causet
