#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "causet/grid.hpp"
#include "causet/pipeline.hpp"
#include "causet/reach.hpp"
#include "causet/verify.hpp"
#include "json.hpp"

namespace causet {

struct Provenance {
  std::string config_hash;
  std::string command;
  std::uint64_t seed = 0;

  std::string csv_line() const;  // "# provenance ..." comment line
  nlohmann::json to_json() const;
};

// %.17g; infinities as "inf" / "-inf".
std::string fmt(double v);

// Alternating run lengths, starting with a (possibly empty) run of zeros.
nlohmann::json rle_encode(const Mask& m);
Mask rle_decode(const nlohmann::json& runs, std::size_t n);

void write_file(const std::string& path, const std::string& content);

std::string model_json(const GridModel& model, const ModelSummary& s, double l_cap, const Provenance& p);
std::string reach_csv(const GridModel& model, const std::vector<ReachResult>& results, double t, double T,
                      const Provenance& p);
std::string recurrence_csv(const GridModel& model, const RecurrenceReport& rep, const Provenance& p);
std::string recurrence_json(const RecurrenceReport& rep, const Provenance& p);
std::string chain_edges_csv(const ChainGraph& g, const Provenance& p);
std::string attractors_json(const AttractorStageResult& a, const Provenance& p);
std::string attractor_nodes_csv(const GridModel& model, const AttractorStageResult& a,
                                const std::vector<TimeField>& taus, const Provenance& p);
std::string tau_csv(const GridModel& model, const TimeField& tau, const Mask& recurrent, const Mask& undecided,
                    const Provenance& p);
std::string tau_grid_csv(const GridModel& model, const TimeField& tau, const Provenance& p);
std::string tau_json(const PipelineResult& r, const Provenance& p);
std::string audit_json(const AuditReport& edges, const AuditReport& curves, const NoChainCertificate& cert,
                       const Provenance& p);
std::string curves_csv(const std::vector<CurveSample>& curves, const AuditReport& audit, const Provenance& p);

// Reads tau.csv: values and the recurrent/undecided columns.
struct TauTable {
  TimeField tau;
  Mask recurrent;
  Mask undecided;
  std::string provenance;
};
TauTable read_tau_csv(const std::string& path, std::size_t n);

}  // namespace causet
