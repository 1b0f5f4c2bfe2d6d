#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "causet/chains.hpp"
#include "causet/grid.hpp"
#include "causet/timefn.hpp"

namespace causet {

struct CurveSample {
  std::vector<Vec2> points;  // unwrapped chart coordinates
  std::vector<NodeId> nodes;
  std::vector<bool> causal;  // per segment
  double length = 0.0;
  std::uint64_t seed = 0;
  bool truncated = false;  // a chosen step left the chart
};

// Random walks over causal step offsets, uniform over all offsets of the
// current node (exiting ones included; choosing one truncates the curve).
// Each walk stops once its h-length reaches length_target. Throws
// ConstructionError naming a node without causal steps.
std::vector<CurveSample> sample_causal_curves(const GridModel& model, int count, double length_target,
                                              std::uint64_t seed);

struct CurveViolation {
  std::size_t curve = 0;
  std::size_t segment = 0;
  double delta = 0.0;
};

struct AuditReport {
  std::size_t curves = 0;
  std::size_t segments = 0;
  std::size_t violations = 0;       // decrease beyond tol
  std::size_t strict_checked = 0;
  std::size_t strict_failures = 0;  // audited segment with no increase
  double min_increment = 0.0;       // over audited segments
  std::vector<CurveViolation> details;
};

// Strictness is audited only where both endpoints lie outside strict_mask.
AuditReport audit_monotone(const TimeField& tau, const std::vector<CurveSample>& curves,
                           const Mask& strict_mask, double tol);

// Same audit over every step edge of the model.
AuditReport audit_edges(const GridModel& model, const TimeField& tau, const Mask& strict_mask, double tol);

enum class CertificateVerdict { kAcyclic, kCyclic, kImpossible };
std::string verdict_name(CertificateVerdict v);

struct NoChainCertificate {
  double alpha = 0.0;
  NodeId witness_from = kNoNode;  // pair attaining alpha
  NodeId witness_to = kNoNode;
  std::vector<double> eps;
  CertificateVerdict verdict = CertificateVerdict::kImpossible;
  std::size_t edges = 0;
};

// alpha = min over x and y in J+_{T,L_cap}(x) of tau(y) - tau(x). eps(y) is
// the largest k * spacing (k <= 8) whose h-ball keeps |tau - tau(y)| < alpha/2,
// or half the shortest lattice edge at y. Throws ArgumentError unless
// 0 < T <= l_cap / 2.
NoChainCertificate no_chain_certificate(const GridModel& model, const TimeField& tau, double T, double l_cap,
                                        Execution exec = Execution::kParallel);

struct ZigzagFamily {
  Vec2 start{0.0, 0.0};
  double extent = 1.0;       // along the first coordinate
  double slope = 1.0;        // limiting |dx/dt| of the teeth
  bool approach_null = true; // member k uses slope * (1 - 2^-k)
  int members = 12;          // member k has 2^k teeth
};

struct ZigzagRow {
  int k = 0;
  double slope = 0.0;
  double length = 0.0;
  double ratio = 0.0;  // limit length / member length
};

struct SemicontinuityReport {
  double limit_length = 0.0;
  std::vector<ZigzagRow> rows;
  double infimum = 0.0;
  bool monotone = true;  // ratios non-increasing in k
};

std::vector<Vec2> zigzag_member(const ZigzagFamily& fam, int k);
// Throws ArgumentError if a member segment is not future causal.
SemicontinuityReport check_semicontinuity_constant(const GridModel& model, const ZigzagFamily& family);

struct NodeWindow {
  int i0 = 0, i1 = 0;  // inclusive index ranges
  int j0 = 0, j1 = 0;
};

enum class LengthVerdict { kHolds, kViolated, kInapplicable };
std::string verdict_name(LengthVerdict v);

struct LocalLengthReport {
  LengthVerdict verdict = LengthVerdict::kInapplicable;
  double max_length = 0.0;
  double delta_u = 0.0;  // time extent in the frame of the window centre
  double bound = 0.0;    // 2 sqrt(3) delta_u (1.05)
  bool meets_target = false;
  std::string reason;
};

// Longest step path inside the window versus the short-curve bound. The
// window must bracket the centre frame: every discretely causal direction
// satisfies |dw| < sqrt(2)|du| and h <= 2(du^2 + dw^2).
LocalLengthReport check_local_length_bound(const GridModel& model, const NodeWindow& window, double eps_target);

}  // namespace causet
