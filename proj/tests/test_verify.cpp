#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "causet/error.hpp"
#include "causet/verify.hpp"

using namespace causet;

namespace {

GridModel model(const char* name, int n) {
  GridParams p;
  p.nx = p.ny = n;
  return build_grid_model(builtin_spec(name), p);
}

TimeField first_coordinate(const GridModel& m, double sign) {
  TimeField t{FieldKind::kTau, std::vector<double>(m.size())};
  for (NodeId v = 0; v < m.size(); ++v) t.value[v] = sign * m.lattice.point(v).x;
  return t;
}

}  // namespace

TEST(SampleCurves, Deterministic) {
  const auto m = model("cylinder-tilt", 32);
  const auto a = sample_causal_curves(m, 50, 1.0, 11);
  const auto b = sample_causal_curves(m, 50, 1.0, 11);
  const auto c = sample_causal_curves(m, 50, 1.0, 12);
  ASSERT_EQ(a.size(), 50u);
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].nodes, b[k].nodes);
    EXPECT_EQ(a[k].length, b[k].length);
    EXPECT_EQ(a[k].truncated, b[k].truncated);
    differs = differs || a[k].nodes != c[k].nodes;
  }
  EXPECT_TRUE(differs);
}

TEST(SampleCurves, MinkowskiFirstCoordinateIncreases) {
  const auto m = model("minkowski", 32);
  const auto curves = sample_causal_curves(m, 200, 0.5, 3);
  for (const auto& c : curves) {
    for (std::size_t s = 0; s + 1 < c.points.size(); ++s) {
      EXPECT_GT(c.points[s + 1].x, c.points[s].x);
      EXPECT_TRUE(c.causal[s]);
    }
    EXPECT_TRUE(c.truncated || c.length >= 0.5);
  }
}

TEST(SampleCurves, TorusRevisitsStartCell) {
  const auto m = model("torus", 16);
  const auto curves = sample_causal_curves(m, 100, 3.0, 5);
  bool revisit = false;
  for (const auto& c : curves) {
    EXPECT_FALSE(c.truncated);
    revisit = revisit || std::count(c.nodes.begin() + 1, c.nodes.end(), c.nodes.front()) > 0;
  }
  EXPECT_TRUE(revisit);
}

TEST(AuditMonotone, ConstantTau) {
  const auto m = model("minkowski", 32);
  const auto curves = sample_causal_curves(m, 100, 0.5, 1);
  TimeField tau{FieldKind::kTau, std::vector<double>(m.size(), 0.25)};
  const auto r = audit_monotone(tau, curves, Mask(m.size()), 1e-12);
  EXPECT_EQ(r.curves, 100u);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_GT(r.strict_checked, 0u);
  EXPECT_EQ(r.strict_failures, r.strict_checked);
  // a strict mask covering everything disables the strictness audit
  EXPECT_EQ(audit_monotone(tau, curves, Mask(m.size(), true), 1e-12).strict_checked, 0u);
}

TEST(AuditMonotone, AdversarialTauViolatesEverySegment) {
  const auto m = model("minkowski", 32);
  const auto curves = sample_causal_curves(m, 100, 0.5, 2);
  const auto r = audit_monotone(first_coordinate(m, -1.0), curves, Mask(m.size()), 1e-12);
  EXPECT_GT(r.segments, 0u);
  EXPECT_EQ(r.violations, r.segments);
  const auto good = audit_monotone(first_coordinate(m, 1.0), curves, Mask(m.size()), 1e-12);
  EXPECT_EQ(good.violations, 0u);
  EXPECT_EQ(good.strict_failures, 0u);
  EXPECT_NEAR(good.min_increment, m.lattice.sx, 1e-12);
}

TEST(AuditEdges, CountsEveryInternalEdge) {
  const auto m = model("minkowski", 16);
  std::size_t internal = 0;
  for (const auto& e : m.steps) internal += e.to != kNoNode;
  const auto r = audit_edges(m, first_coordinate(m, -1.0), Mask(m.size()), 1e-12);
  EXPECT_EQ(r.segments, internal);
  EXPECT_EQ(r.violations, internal);
  EXPECT_EQ(audit_edges(m, first_coordinate(m, 1.0), Mask(m.size()), 1e-12).violations, 0u);
}

TEST(Semicontinuity, VerticalFamilyRatioOne) {
  const auto m = model("minkowski", 32);
  ZigzagFamily fam;
  fam.start = {0.0, 0.0};
  fam.slope = 0.0;
  fam.approach_null = false;
  fam.members = 6;
  const auto r = check_semicontinuity_constant(m, fam);
  for (const auto& row : r.rows) EXPECT_NEAR(row.ratio, 1.0, 1e-12);
  EXPECT_NEAR(r.limit_length, 1.0, 1e-12);
}

TEST(Semicontinuity, NullZigzagRatio) {
  const auto m = model("minkowski", 32);
  ZigzagFamily fam;
  fam.approach_null = false;
  fam.members = 6;
  const auto r = check_semicontinuity_constant(m, fam);
  for (const auto& row : r.rows) {
    EXPECT_NEAR(row.length, std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(row.ratio, 1.0 / std::sqrt(2.0), 1e-9);
  }
}

TEST(Semicontinuity, ApproachesNullLimitMonotonically) {
  const auto m = model("minkowski", 32);
  const auto r = check_semicontinuity_constant(m, ZigzagFamily{});
  EXPECT_TRUE(r.monotone);
  EXPECT_GE(r.infimum, 1.0 / std::sqrt(2.0) - 0.02);
  EXPECT_LE(r.infimum, 1.0 / std::sqrt(2.0) + 0.02);
  for (const auto& row : r.rows) EXPECT_NEAR(row.ratio, 1.0 / std::hypot(1.0, row.slope), 1e-9);
}

TEST(Semicontinuity, HalfAmplitude) {
  const auto m = model("minkowski", 32);
  ZigzagFamily fam;
  fam.slope = 0.5;
  fam.approach_null = false;
  fam.members = 5;
  const auto r = check_semicontinuity_constant(m, fam);
  for (const auto& row : r.rows) {
    EXPECT_NEAR(row.ratio, 1.0 / std::sqrt(1.25), 1e-9);
    EXPECT_GT(row.ratio, 1.0 / std::sqrt(2.0));
    EXPECT_LT(row.ratio, 1.0);
  }
}

TEST(Semicontinuity, SpacelikeFamilyRejected) {
  const auto m = model("minkowski", 32);
  ZigzagFamily fam;
  fam.slope = 1.5;
  fam.approach_null = false;
  EXPECT_THROW(check_semicontinuity_constant(m, fam), ArgumentError);
}

TEST(LocalLength, MinkowskiWindow) {
  const auto m = model("minkowski", 64);
  const NodeWindow w{10, 16, 20, 40};
  const auto r = check_local_length_bound(m, w, 1.0);
  ASSERT_EQ(r.verdict, LengthVerdict::kHolds) << r.reason;
  const double s = m.lattice.sx;
  EXPECT_NEAR(r.delta_u, 6 * s, 1e-12);
  EXPECT_NEAR(r.bound, 2.0 * std::sqrt(3.0) * 6 * s * 1.05, 1e-12);
  EXPECT_NEAR(r.max_length, 6 * std::sqrt(2.0) * s, 1e-12);
  EXPECT_TRUE(r.meets_target);
}

TEST(LocalLength, MinkowskiTenthExtent) {
  const auto m = model("minkowski", 11);
  const auto r = check_local_length_bound(m, NodeWindow{3, 4, 0, 10}, 0.5);
  ASSERT_EQ(r.verdict, LengthVerdict::kHolds) << r.reason;
  EXPECT_NEAR(r.delta_u, 0.1, 1e-12);
  EXPECT_NEAR(r.bound, 0.364, 5e-4);
  EXPECT_LE(r.max_length, r.bound);
}

TEST(LocalLength, SingleCell) {
  const auto m = model("minkowski", 16);
  const auto r = check_local_length_bound(m, NodeWindow{4, 4, 7, 7}, 0.1);
  EXPECT_EQ(r.verdict, LengthVerdict::kHolds);
  EXPECT_EQ(r.max_length, 0.0);
  EXPECT_THROW(check_local_length_bound(m, NodeWindow{4, 3, 7, 7}, 0.1), ArgumentError);
  EXPECT_THROW(check_local_length_bound(m, NodeWindow{0, 16, 0, 3}, 0.1), ArgumentError);
}

TEST(LocalLength, CylinderNearCentre) {
  const auto m = model("cylinder-tilt", 64);
  const int ic = static_cast<int>(std::lround(-m.lattice.chart.x0 / m.lattice.sx));
  const auto r = check_local_length_bound(m, NodeWindow{ic - 1, ic + 1, 10, 16}, 1.0);
  ASSERT_EQ(r.verdict, LengthVerdict::kHolds) << r.reason;
  EXPECT_GT(r.max_length, 0.0);
  EXPECT_LE(r.max_length, r.bound);
  // two cells out the tilt has already turned too far for the frame
  const auto wide = check_local_length_bound(m, NodeWindow{ic - 2, ic + 2, 10, 16}, 1.0);
  EXPECT_EQ(wide.verdict, LengthVerdict::kInapplicable);
  EXPECT_FALSE(wide.reason.empty());
}

TEST(Certificate, TorusConstantIsImpossible) {
  const auto m = model("torus", 12);
  TimeField tau{FieldKind::kTau, std::vector<double>(m.size(), 0.0)};
  const auto c = no_chain_certificate(m, tau, 0.5, 2.0);
  EXPECT_EQ(c.verdict, CertificateVerdict::kImpossible);
  EXPECT_LE(c.alpha, 0.0);
  EXPECT_NE(c.witness_from, kNoNode);
  EXPECT_EQ(verdict_name(c.verdict), "impossible");
}

TEST(Certificate, MinkowskiTimeCoordinateIsAcyclic) {
  const auto m = model("minkowski", 24);
  const auto c = no_chain_certificate(m, first_coordinate(m, 1.0), 0.5, 2.0);
  EXPECT_EQ(c.verdict, CertificateVerdict::kAcyclic);
  EXPECT_GT(c.alpha, 0.0);
  EXPECT_GE(c.alpha, 0.5 / std::sqrt(2.0) - m.lattice.sx);
  for (double e : c.eps) EXPECT_GT(e, 0.0);
  EXPECT_THROW(no_chain_certificate(m, first_coordinate(m, 1.0), 1.5, 2.0), ArgumentError);
}
