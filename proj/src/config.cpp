#include "causet/config.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "causet/error.hpp"
#include "json.hpp"

namespace causet {
namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::string& where, std::set<std::string> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for '") + key + "'");
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

void parse_spacetime(const json& j, RunConfig& c) {
  only_keys(j, "spacetime", {"builtin", "chart", "periodic", "params"});
  std::string name;
  read(j, "builtin", name);
  require(!name.empty(), "spacetime.builtin is required");
  c.spec = builtin_spec(name);
  if (j.contains("chart")) {
    std::vector<double> ch;
    read(j, "chart", ch);
    require(ch.size() == 4, "spacetime.chart must be [x0, x1, y0, y1]");
    c.spec.chart = {ch[0], ch[1], ch[2], ch[3]};
  }
  if (j.contains("periodic")) {
    std::vector<bool> p;
    read(j, "periodic", p);
    require(p.size() == 2, "spacetime.periodic must be [bool, bool]");
    c.spec.periodic_x = p[0];
    c.spec.periodic_y = p[1];
  }
  if (j.contains("params")) {
    require(j["params"].is_object(), "spacetime.params must be an object");
    for (const auto& [k, v] : j["params"].items()) {
      require(v.is_number(), "spacetime.params." + k + " must be a number");
      c.spec.params[k] = v.get<double>();
    }
  }
  validate_spec(c.spec);
}

}  // namespace

std::vector<ChainStage> RunConfig::schedule(double spacing) const {
  std::vector<ChainStage> s;
  for (std::size_t k = 0; k < eps_cells.size(); ++k) s.push_back({eps_cells[k] * spacing, chain_T[k]});
  return s;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(doc, "config", {"schema_version", "spacetime", "grid", "horizon", "chains", "attractors", "timefn",
                            "verify", "reach", "seed", "threads", "command"});
  int version = 0;
  read(doc, "schema_version", version);
  require(version == kSchemaVersion, "schema_version must be " + std::to_string(kSchemaVersion));
  require(doc.contains("spacetime"), "spacetime section is required");

  RunConfig c;
  parse_spacetime(doc["spacetime"], c);

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    only_keys(g, "grid", {"nx", "ny", "r_step_cells", "eta"});
    read(g, "nx", c.grid.nx);
    read(g, "ny", c.grid.ny);
    double cells = 0.0;
    read(g, "r_step_cells", cells);
    c.grid.r_step = -cells;  // resolved against the spacing below
    read(g, "eta", c.grid.eta);
  }
  require(c.grid.nx >= 8 && c.grid.ny >= 8, "grid.nx and grid.ny must be >= 8");
  {
    const Lattice l = Lattice::over(c.spec, c.grid.nx, c.grid.ny);
    const double cells = -c.grid.r_step;
    require(cells == 0.0 || cells >= 1.0, "grid.r_step_cells must be >= 1");
    c.grid.r_step = cells * l.spacing();
  }

  read(doc, "horizon", c.l_cap);
  require(c.l_cap > 0.0, "horizon must be positive");

  if (doc.contains("chains")) {
    const json& ch = doc["chains"];
    only_keys(ch, "chains", {"schedule", "T_cap", "export_edges"});
    if (ch.contains("schedule")) {
      require(ch["schedule"].is_array() && !ch["schedule"].empty(), "chains.schedule must be a non-empty array");
      c.eps_cells.clear();
      c.chain_T.clear();
      for (const auto& st : ch["schedule"]) {
        only_keys(st, "chains.schedule entry", {"eps_cells", "T"});
        double e = 1.0, t = 0.5;
        read(st, "eps_cells", e);
        read(st, "T", t);
        c.eps_cells.push_back(e);
        c.chain_T.push_back(t);
      }
    }
    read(ch, "T_cap", c.chain_T_cap);
    read(ch, "export_edges", c.export_chain_edges);
  }
  double t_max = 0.0;
  for (std::size_t k = 0; k < c.eps_cells.size(); ++k) {
    require(c.eps_cells[k] >= 1.0, "chains.schedule eps_cells must be >= 1");
    require(c.chain_T[k] > 0.0, "chains.schedule T must be positive");
    if (k > 0) {
      require(c.eps_cells[k] <= c.eps_cells[k - 1] && c.chain_T[k] >= c.chain_T[k - 1],
              "chains.schedule must have non-increasing eps and non-decreasing T");
    }
    t_max = std::max(t_max, c.chain_T[k]);
  }
  if (c.chain_T_cap <= 0.0) c.chain_T_cap = 2.0 * t_max;
  require(c.chain_T_cap >= t_max && c.chain_T_cap <= c.l_cap, "chains.T_cap must lie in [max T, horizon]");

  if (doc.contains("attractors")) {
    const json& a = doc["attractors"];
    only_keys(a, "attractors", {"alpha", "t0_widened", "max_seeds", "max_iters"});
    read(a, "alpha", c.alpha);
    read(a, "t0_widened", c.t0_widened);
    read(a, "max_seeds", c.max_seeds);
    read(a, "max_iters", c.max_iters);
  }
  require(c.alpha > 0.0, "attractors.alpha must be positive");
  require(c.t0_widened > 0.0 && c.t0_widened < c.l_cap, "attractors.t0_widened must lie in (0, horizon)");
  require(c.max_seeds >= 0 && c.max_iters >= 1, "attractors.max_seeds >= 0 and max_iters >= 1 required");

  if (doc.contains("timefn")) {
    only_keys(doc["timefn"], "timefn", {"ladder_resolution"});
    read(doc["timefn"], "ladder_resolution", c.ladder_resolution);
  }

  if (doc.contains("verify")) {
    const json& v = doc["verify"];
    only_keys(v, "verify", {"curves", "curve_length", "certificate_T"});
    read(v, "curves", c.curves);
    read(v, "curve_length", c.curve_length);
    read(v, "certificate_T", c.certificate_T);
  }
  require(c.curves >= 1, "verify.curves must be >= 1");
  require(c.curve_length > 0.0 && c.curve_length <= c.l_cap, "verify.curve_length must lie in (0, horizon]");
  require(c.certificate_T > 0.0 && c.certificate_T <= 0.5 * c.l_cap, "verify.certificate_T must lie in (0, horizon/2]");

  if (doc.contains("reach")) {
    const json& r = doc["reach"];
    only_keys(r, "reach", {"sources", "t", "T"});
    std::vector<std::vector<int>> src;
    read(r, "sources", src);
    for (const auto& s : src) {
      require(s.size() == 2, "reach.sources entries must be [i, j]");
      require(s[0] >= 0 && s[0] < c.grid.nx && s[1] >= 0 && s[1] < c.grid.ny, "reach source outside the lattice");
      c.reach_sources.push_back({s[0], s[1]});
    }
    read(r, "t", c.reach_t);
    read(r, "T", c.reach_T);
  }
  require(c.reach_t >= 0.0 && c.reach_t < c.reach_T && c.reach_T <= c.l_cap, "reach window must satisfy 0 <= t < T <= horizon");

  read(doc, "seed", c.seed);
  read(doc, "threads", c.threads);
  read(doc, "command", c.command);
  require(c.threads >= 0, "threads must be >= 0");

  c.canonical = doc.dump();
  c.hash = sha256_hex(c.canonical);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace causet
