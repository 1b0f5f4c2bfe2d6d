#include "causet/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "causet/error.hpp"

namespace causet {

using nlohmann::json;

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Provenance::csv_line() const {
  return "# provenance config_sha256=" + config_hash + " command=" + command + " seed=" + std::to_string(seed) + "\n";
}

json Provenance::to_json() const {
  return {{"config_sha256", config_hash}, {"command", command}, {"seed", seed}};
}

json rle_encode(const Mask& m) {
  json runs = json::array();
  bool cur = false;
  std::size_t len = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == cur) {
      ++len;
      continue;
    }
    runs.push_back(len);
    cur = !cur;
    len = 1;
  }
  runs.push_back(len);
  return runs;
}

Mask rle_decode(const json& runs, std::size_t n) {
  Mask m(n);
  std::size_t pos = 0;
  bool cur = false;
  for (const auto& r : runs) {
    const auto len = r.get<std::size_t>();
    if (pos + len > n) throw ArgumentError("rle_decode: runs exceed mask size");
    for (std::size_t k = 0; k < len; ++k) m.set(pos + k, cur);
    pos += len;
    cur = !cur;
  }
  if (pos != n) throw ArgumentError("rle_decode: runs do not cover the mask");
  return m;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

namespace {

std::string node_cols(const Lattice& l, NodeId v) {
  const Vec2 p = l.point(v);
  return std::to_string(v) + "," + std::to_string(l.i_of(v)) + "," + std::to_string(l.j_of(v)) + "," + fmt(p.x) +
         "," + fmt(p.y);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json record_json(const AttractorRecord& r, const PreAttractorCheck& c) {
  return {{"origin", r.origin},
          {"seed_node", r.seed},
          {"t0", r.t0},
          {"converged", r.converged},
          {"iterations", r.iterations},
          {"hull_expanded", r.hull_expanded},
          {"boundary_contaminated", r.boundary_contaminated},
          {"sizes", {{"U", r.U.count()}, {"A", r.A.count()}, {"B", r.B.count()}}},
          {"boundary_undecided", r.boundary_undecided.count()},
          {"certificate", {{"holds", c.holds}, {"boundary_exit", c.boundary_exit}, {"violations", c.violations}}},
          {"U", rle_encode(r.U)},
          {"A", rle_encode(r.A)},
          {"B", rle_encode(r.B)}};
}

json audit_to_json(const AuditReport& a) {
  return {{"curves", a.curves},
          {"segments", a.segments},
          {"violations", a.violations},
          {"strict_checked", a.strict_checked},
          {"strict_failures", a.strict_failures},
          {"min_increment", a.strict_checked ? json(a.min_increment) : json(nullptr)}};
}

}  // namespace

std::string model_json(const GridModel& model, const ModelSummary& s, double l_cap, const Provenance& p) {
  const Lattice& l = model.lattice;
  json j = {{"provenance", p.to_json()},
            {"spacetime", model.spec.name},
            {"chart", {l.chart.x0, l.chart.x1, l.chart.y0, l.chart.y1}},
            {"periodic", {l.periodic_x, l.periodic_y}},
            {"nx", l.nx},
            {"ny", l.ny},
            {"spacing", model.spacing()},
            {"r_step", model.r_step},
            {"eta", model.eta},
            {"horizon", l_cap},
            {"step_edges", s.step_edges},
            {"exit_nodes", s.exit_nodes},
            {"cyclic_nodes", s.cyclic_nodes},
            {"longest_acyclic_path", s.longest_acyclic_path},
            {"horizon_above_acyclic", s.horizon_above_acyclic},
            {"max_adapted_residual", s.max_adapted_residual}};
  return dump(j);
}

std::string reach_csv(const GridModel& model, const std::vector<ReachResult>& results, double t, double T,
                      const Provenance& p) {
  std::ostringstream o;
  o << p.csv_line() << "source,node,i,j,x,y,lmin,lmax,reached,exit,in_window\n";
  for (const auto& r : results) {
    const Mask w = r.window(t, T);
    const NodeId src = r.source.nodes().front();
    for (NodeId v = 0; v < model.size(); ++v) {
      if (!r.reached[v]) continue;
      o << src << "," << node_cols(model.lattice, v) << "," << fmt(r.lmin[v]) << "," << fmt(r.lmax[v]) << ",1,"
        << int(r.exit[v]) << "," << int(w[v]) << "\n";
    }
  }
  return o.str();
}

std::string recurrence_csv(const GridModel& model, const RecurrenceReport& rep, const Provenance& p) {
  std::ostringstream o;
  o << p.csv_line() << "node,i,j,x,y,recurrent,scc";
  for (std::size_t k = 0; k < rep.stages.size(); ++k) o << ",stage" << k;
  o << "\n";
  for (NodeId v = 0; v < model.size(); ++v) {
    o << node_cols(model.lattice, v) << "," << int(rep.recurrent[v]) << "," << rep.scc[v];
    for (const auto& s : rep.stages) o << "," << int(s[v]);
    o << "\n";
  }
  return o.str();
}

std::string recurrence_json(const RecurrenceReport& rep, const Provenance& p) {
  json stages = json::array();
  for (std::size_t k = 0; k < rep.stages.size(); ++k) {
    stages.push_back({{"eps", rep.stage_eps[k]}, {"T", rep.stage_T[k]}, {"recurrent", rep.stages[k].count()}});
  }
  json j = {{"provenance", p.to_json()},
            {"T_cap", rep.T_cap},
            {"stages", stages},
            {"recurrent", rep.recurrent.count()},
            {"nodes", rep.recurrent.size()},
            {"mask", rle_encode(rep.recurrent)}};
  return dump(j);
}

std::string chain_edges_csv(const ChainGraph& g, const Provenance& p) {
  std::ostringstream o;
  o << p.csv_line() << "from,to\n";
  for (NodeId x = 0; x < g.size(); ++x) {
    for (NodeId y : g.successors(x)) o << x << "," << y << "\n";
  }
  return o.str();
}

std::string attractors_json(const AttractorStageResult& a, const Provenance& p) {
  json recs = json::array();
  for (std::size_t k = 0; k < a.records.size(); ++k) recs.push_back(record_json(a.records[k], a.certificates[k]));
  json j = {{"provenance", p.to_json()},
            {"seeds", a.seeds},
            {"basin_scope", "union over the emitted candidates only"},
            {"records", recs}};
  return dump(j);
}

std::string attractor_nodes_csv(const GridModel& model, const AttractorStageResult& a,
                                const std::vector<TimeField>& taus, const Provenance& p) {
  std::ostringstream o;
  o << p.csv_line() << "record,node,in_U,in_A,in_B,undecided,tau_A\n";
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    const auto& r = a.records[k];
    for (NodeId v = 0; v < model.size(); ++v) {
      o << k << "," << v << "," << int(r.U[v]) << "," << int(r.A[v]) << "," << int(r.B[v]) << ","
        << int(r.boundary_undecided[v]) << "," << (k < taus.size() ? fmt(taus[k].value[v]) : "") << "\n";
    }
  }
  return o.str();
}

std::string tau_csv(const GridModel& model, const TimeField& tau, const Mask& recurrent, const Mask& undecided,
                    const Provenance& p) {
  std::ostringstream o;
  o << p.csv_line() << "node,i,j,x,y,value,recurrent,undecided\n";
  for (NodeId v = 0; v < model.size(); ++v) {
    o << node_cols(model.lattice, v) << "," << fmt(tau.value[v]) << "," << int(recurrent[v]) << ","
      << int(undecided[v]) << "\n";
  }
  return o.str();
}

std::string tau_grid_csv(const GridModel& model, const TimeField& tau, const Provenance& p) {
  const Lattice& l = model.lattice;
  std::ostringstream o;
  o << p.csv_line() << "i";
  for (int j = 0; j < l.ny; ++j) o << ",j" << j;
  o << "\n";
  for (int i = 0; i < l.nx; ++i) {
    o << i;
    for (int j = 0; j < l.ny; ++j) o << "," << fmt(tau.value[l.index(i, j)]);
    o << "\n";
  }
  return o.str();
}

std::string tau_json(const PipelineResult& r, const Provenance& p) {
  json j = {{"provenance", p.to_json()},
            {"kind", field_kind_name(r.tau.kind)},
            {"records", r.attractors.records.size()},
            {"ladder", {{"count", r.ladder.t.size()}, {"t_min", r.ladder.t.front()}, {"t_max", r.ladder.t.back()}}},
            {"recurrent_nodes", r.chains.recurrence.recurrent.count()},
            {"boundary_undecided_nodes", r.undecided.count()},
            {"edge_audit", audit_to_json(r.edge_audit)},
            {"notes", r.notes}};
  return dump(j);
}

std::string audit_json(const AuditReport& edges, const AuditReport& curves, const NoChainCertificate& cert,
                       const Provenance& p) {
  json c = {{"verdict", verdict_name(cert.verdict)},
            {"alpha", std::isinf(cert.alpha) ? json(nullptr) : json(cert.alpha)},
            {"witness", {cert.witness_from, cert.witness_to}},
            {"chain_edges", cert.edges}};
  json j = {{"provenance", p.to_json()},
            {"edges", audit_to_json(edges)},
            {"curves", audit_to_json(curves)},
            {"no_chain_certificate", c}};
  return dump(j);
}

std::string curves_csv(const std::vector<CurveSample>& curves, const AuditReport& audit, const Provenance& p) {
  std::ostringstream o;
  o << p.csv_line() << "curve,point,x,y\n";
  std::vector<bool> bad(curves.size(), false);
  for (const auto& d : audit.details) bad[d.curve] = true;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    if (!bad[c]) continue;
    for (std::size_t k = 0; k < curves[c].points.size(); ++k) {
      o << c << "," << k << "," << fmt(curves[c].points[k].x) << "," << fmt(curves[c].points[k].y) << "\n";
    }
  }
  return o.str();
}

TauTable read_tau_csv(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'; run the timefn command first");
  TauTable t;
  t.tau.kind = FieldKind::kTau;
  t.tau.value.assign(n, 0.0);
  t.recurrent = Mask(n);
  t.undecided = Mask(n);
  std::string line;
  std::getline(in, t.provenance);
  std::getline(in, line);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 8) throw ConfigError("malformed tau.csv row");
    const auto v = static_cast<std::size_t>(std::stoul(cells[0]));
    if (v >= n) throw ConfigError("tau.csv does not match the configured grid");
    t.tau.value[v] = std::stod(cells[5]);
    t.recurrent.set(v, cells[6] == "1");
    t.undecided.set(v, cells[7] == "1");
    ++rows;
  }
  if (rows != n) throw ConfigError("tau.csv does not match the configured grid");
  return t;
}

}  // namespace causet
