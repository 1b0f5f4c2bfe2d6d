#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "causet/chains.hpp"
#include "causet/grid.hpp"
#include "causet/spacetime.hpp"

namespace causet {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  SpacetimeSpec spec;
  GridParams grid;
  double l_cap = 2.0;

  // Chain schedule; eps is given in units of grid spacing in the file and
  // stored here in chart units once the model spacing is known.
  std::vector<double> eps_cells{1.0};
  std::vector<double> chain_T{0.5};
  double chain_T_cap = 0.0;  // <= 0: twice the largest T
  bool export_chain_edges = false;

  double alpha = 0.5;
  double t0_widened = 1.0;
  int max_seeds = 8;
  int max_iters = 10000;

  double ladder_resolution = 0.0;  // <= 0: half the shortest step

  int curves = 1000;
  double curve_length = 1.0;
  double certificate_T = 0.5;

  std::vector<std::pair<int, int>> reach_sources;
  double reach_t = 0.0;
  double reach_T = 1.0;

  std::uint64_t seed = 1;
  int threads = 0;
  std::string command = "all";
  std::string out_dir = "out";

  std::string canonical;  // canonical JSON text of the input document
  std::string hash;       // sha256 hex of `canonical`

  std::vector<ChainStage> schedule(double spacing) const;
};

// Throws ConfigError on malformed JSON, unknown keys or out-of-range values.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

std::string sha256_hex(const std::string& data);

}  // namespace causet
