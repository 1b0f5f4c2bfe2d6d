#include "causet/chains.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "causet/error.hpp"
#include "causet/reach.hpp"

namespace causet {

ChainGraph::ChainGraph(int n, double T, double T_cap, std::vector<double> eps)
    : n_(n), words_((n + 63) / 64), T_(T), T_cap_(T_cap), eps_(std::move(eps)),
      bits_(static_cast<std::size_t>(n) * words_, 0) {}

std::vector<NodeId> ChainGraph::successors(NodeId x) const {
  std::vector<NodeId> out;
  const std::uint64_t* r = row(x);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<NodeId>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ChainGraph::edge_count() const {
  std::size_t c = 0;
  for (auto b : bits_) c += static_cast<std::size_t>(std::popcount(b));
  return c;
}

namespace {

void fill_row(const GridModel& model, ChainGraph& g, NodeId x, double eps_max) {
  const Mask w = reach_interval(model, x, g.T_cap()).window(g.T(), g.T_cap());
  if (w.none()) return;
  const auto d = h_distance_field(model, w, eps_max * (1.0 + 1e-9));
  const auto& eps = g.eps();
  for (NodeId y = 0; y < g.size(); ++y) {
    if (d[y] <= eps[y] * (1.0 + 1e-9)) g.add_edge(x, y);
  }
}

}  // namespace

ChainGraph build_chain_graph(const GridModel& model, const std::vector<double>& eps, double T,
                             double T_cap, Execution exec) {
  if (!(T > 0.0) || !(T <= T_cap)) throw ArgumentError("chain graph requires 0 < T <= T_cap");
  if (eps.size() != static_cast<std::size_t>(model.size())) throw ArgumentError("eps table size mismatch");
  double eps_max = 0.0;
  for (double e : eps) {
    if (!(e > 0.0)) throw ArgumentError("eps table entries must be positive");
    eps_max = std::max(eps_max, e);
  }
  ChainGraph g(model.size(), T, T_cap, eps);
  if (exec == Execution::kSerial) {
    for (NodeId x = 0; x < model.size(); ++x) fill_row(model, g, x, eps_max);
  } else {
    // Rows are disjoint word ranges.
#pragma omp parallel for schedule(dynamic, 16)
    for (NodeId x = 0; x < model.size(); ++x) fill_row(model, g, x, eps_max);
  }
  return g;
}

ChainGraph build_chain_graph(const GridModel& model, double eps, double T, double T_cap, Execution exec) {
  const double s = model.spacing();
  if (eps < s * (1.0 - 1e-12)) {
    throw ConfigError("chain eps must be at least the grid spacing " + std::to_string(s));
  }
  return build_chain_graph(model, std::vector<double>(model.size(), eps), T, T_cap, exec);
}

RecurrenceReport chain_recurrent_set(const ChainGraph& graph) {
  const int n = graph.size();
  std::vector<std::int32_t> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<NodeId> stack;
  std::vector<std::uint8_t> on_stack(n, 0);
  struct Frame {
    NodeId v;
    std::vector<NodeId> succ;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::int32_t counter = 0, ncomp = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    call.push_back({root, graph.successors(root), 0});
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < f.succ.size()) {
        const NodeId w = f.succ[f.next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, graph.successors(w), 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const NodeId done = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[done]);
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

  std::vector<std::int32_t> sizes(ncomp, 0);
  for (NodeId v = 0; v < n; ++v) ++sizes[comp[v]];
  RecurrenceReport rep;
  rep.scc = comp;
  rep.recurrent = Mask(n);
  for (NodeId v = 0; v < n; ++v) rep.recurrent.set(v, sizes[comp[v]] > 1 || graph.edge(v, v));
  rep.stages.push_back(rep.recurrent);
  rep.stage_eps.push_back(graph.eps().empty() ? 0.0 : *std::max_element(graph.eps().begin(), graph.eps().end()));
  rep.stage_T.push_back(graph.T());
  rep.T_cap = graph.T_cap();
  return rep;
}

Mask chain_reachable_from(const ChainGraph& graph, NodeId x) {
  Mask seen(graph.size());
  std::vector<NodeId> frontier = graph.successors(x);
  for (NodeId y : frontier) seen.set(y);
  while (!frontier.empty()) {
    const NodeId v = frontier.back();
    frontier.pop_back();
    for (NodeId y : graph.successors(v)) {
      if (!seen[y]) {
        seen.set(y);
        frontier.push_back(y);
      }
    }
  }
  return seen;
}

RecurrenceReport approx_R(const GridModel& model, const std::vector<ChainStage>& schedule, double T_cap,
                          Execution exec, ChainGraph* last_graph) {
  if (schedule.empty()) throw ArgumentError("approx_R: empty schedule");
  double t_max = 0.0;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (k > 0 && (schedule[k].eps > schedule[k - 1].eps || schedule[k].T < schedule[k - 1].T)) {
      throw ArgumentError("approx_R: schedule must have non-increasing eps and non-decreasing T");
    }
    t_max = std::max(t_max, schedule[k].T);
  }
  if (T_cap <= 0.0) T_cap = 2.0 * t_max;

  RecurrenceReport out;
  out.recurrent = Mask(model.size(), true);
  out.T_cap = T_cap;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const ChainStage& st = schedule[k];
    ChainGraph g = build_chain_graph(model, st.eps, st.T, T_cap, exec);
    const RecurrenceReport r = chain_recurrent_set(g);
    if (last_graph && k + 1 == schedule.size()) *last_graph = std::move(g);
    out.recurrent &= r.recurrent;
    out.scc = r.scc;
    out.stages.push_back(r.recurrent);
    out.stage_eps.push_back(st.eps);
    out.stage_T.push_back(st.T);
  }
  return out;
}

}  // namespace causet
