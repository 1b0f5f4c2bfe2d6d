#include <gtest/gtest.h>

#include <cmath>

#include "causet/error.hpp"
#include "causet/timefn.hpp"
#include "oracles.hpp"

using namespace causet;

namespace {

GridModel model(const char* name, int n) {
  GridParams p;
  p.nx = p.ny = n;
  return build_grid_model(builtin_spec(name), p);
}

AttractorRecord columns(const GridModel& m, int a_last, int outside_first) {
  AttractorRecord r;
  r.A = Mask(m.size());
  r.B = Mask(m.size());
  for (NodeId v = 0; v < m.size(); ++v) {
    const int i = m.lattice.i_of(v);
    r.A.set(v, i <= a_last);
    r.B.set(v, i < outside_first);
  }
  r.U = r.B;
  return r;
}

TimeField cylinder_f(const GridModel& m) {
  auto rec = attractor_of(m, pre_attractor_hull(m, [&] {
    Mask s(m.size());
    s.set(m.lattice.index(5, 2));
    return s;
  }(), 0.4, 4.0), 0.4, 4.0);
  rec.B = basin(m, rec, 4.0, 4.0).B;
  return build_f(m, rec);
}

}  // namespace

TEST(BuildF, EndpointsAndInteriorValue) {
  const auto m = model("minkowski", 11);
  const auto rec = columns(m, 3, 8);
  const auto f = build_f(m, rec);
  for (NodeId v = 0; v < m.size(); ++v) {
    if (rec.A[v]) { EXPECT_EQ(f.value[v], 0.0); }
    if (!rec.B[v]) { EXPECT_EQ(f.value[v], 1.0); }
    EXPECT_GE(f.value[v], 0.0);
    EXPECT_LE(f.value[v], 1.0);
  }
  EXPECT_NEAR(f.value[m.lattice.index(5, 5)], 0.4, 1e-12);
  EXPECT_EQ(f.kind, FieldKind::kF);
}

TEST(BuildF, EmptyBasinRejectedAndEmptyAttractor) {
  const auto m = model("minkowski", 11);
  auto rec = columns(m, 3, 8);
  rec.B = Mask(m.size());
  EXPECT_THROW(build_f(m, rec), ArgumentError);
  rec = columns(m, -1, 8);
  const auto f = build_f(m, rec);
  EXPECT_NEAR(f.value[m.lattice.index(5, 5)], 1.0 / 1.3, 1e-12);
}

TEST(GtField, ZeroFieldGivesZero) {
  const auto m = model("cylinder-tilt", 16);
  TimeField f{FieldKind::kF, std::vector<double>(m.size(), 0.0)};
  const auto g = g_t_field(m, f, 0.5, 4.0);
  for (double v : g.value) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(g.kind, FieldKind::kGt);
  EXPECT_THROW(g_t_field(m, f, 0.0, 4.0), ArgumentError);
  EXPECT_THROW(g_t_field(m, f, 5.0, 4.0), ArgumentError);
}

TEST(GtField, MatchesOracleFutureMaximum) {
  const auto m = model("cylinder-tilt", 16);
  const auto f = cylinder_f(m);
  for (double t : {0.2, 0.7}) {
    const auto g = g_t_field(m, f, t, 4.0);
    for (NodeId x = 0; x < m.size(); ++x) {
      Mask s(m.size());
      s.set(x);
      const Mask fut = oracle::future(m, s, t, 4.0);
      double best = 0.0;
      for (NodeId v = 0; v < m.size(); ++v) {
        if (fut[v]) best = std::max(best, f.value[v]);
      }
      ASSERT_EQ(g.value[x], best) << x;
    }
  }
}

TEST(GtField, AntiMonotoneInT) {
  const auto m = model("cylinder-tilt", 16);
  const auto f = cylinder_f(m);
  const auto a = g_t_field(m, f, 0.3, 4.0), b = g_t_field(m, f, 0.9, 4.0);
  for (NodeId x = 0; x < m.size(); ++x) EXPECT_GE(a.value[x], b.value[x]);
}

TEST(Ladder, DyadicAndDefault) {
  const auto l = dyadic_ladder(1.0, 0.3);
  EXPECT_EQ(l.t, (std::vector<double>{0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(l.w, (std::vector<double>(4, 0.25)));
  EXPECT_THROW(dyadic_ladder(0.0, 0.1), ArgumentError);
  const auto m = model("cylinder-tilt", 16);
  const auto d = default_ladder(m, 4.0);
  EXPECT_LE(d.t[1] - d.t[0], 0.5 * m.min_step_weight());
  EXPECT_DOUBLE_EQ(d.t.back(), 4.0);
}

TEST(TauA, SinglePointLadderIsOneMinusG) {
  const auto m = model("cylinder-tilt", 16);
  const auto f = cylinder_f(m);
  const auto tau = tau_A(m, f, Ladder{{0.6}, {1.0}}, 4.0);
  const auto g = g_t_field(m, f, 0.6, 4.0);
  for (NodeId x = 0; x < m.size(); ++x) EXPECT_NEAR(tau.value[x], 1.0 - g.value[x], 1e-15);
  EXPECT_EQ(tau.kind, FieldKind::kTauA);
}

TEST(TauA, LadderValidation) {
  const auto m = model("minkowski", 12);
  TimeField f{FieldKind::kF, std::vector<double>(m.size(), 0.5)};
  EXPECT_THROW(tau_A(m, f, Ladder{{0.5, 1.0}, {0.5}}, 2.0), ArgumentError);
  EXPECT_THROW(tau_A(m, f, Ladder{{0.5, 1.0}, {0.5, 0.4}}, 2.0), ArgumentError);
  EXPECT_THROW(tau_A(m, f, Ladder{{1.0, 0.5}, {0.5, 0.5}}, 2.0), ArgumentError);
  EXPECT_THROW(tau_A(m, f, Ladder{{0.0, 0.5}, {0.5, 0.5}}, 2.0), ArgumentError);
}

TEST(TauA, NonDecreasingAlongSteps) {
  const auto m = model("cylinder-tilt", 16);
  const auto tau = tau_A(m, cylinder_f(m), dyadic_ladder(4.0, 0.05), 4.0);
  for (NodeId v = 0; v < m.size(); ++v) {
    for (auto k = m.step_begin[v]; k < m.step_begin[v + 1]; ++k) {
      if (m.steps[k].to != kNoNode) { EXPECT_LE(tau.value[v], tau.value[m.steps[k].to] + 1e-15); }
    }
  }
}

TEST(TauA, BatchSerialParallelAgree) {
  const auto m = model("cylinder-tilt", 16);
  const auto f1 = cylinder_f(m);
  TimeField f2{FieldKind::kF, std::vector<double>(m.size())};
  for (NodeId v = 0; v < m.size(); ++v) f2.value[v] = m.lattice.i_of(v) / 15.0;
  const auto ladder = dyadic_ladder(4.0, 0.1);
  const auto batch = tau_A_batch(m, {f1, f2}, ladder, 4.0, Execution::kParallel);
  const auto serial = tau_A_batch(m, {f1, f2}, ladder, 4.0, Execution::kSerial);
  ASSERT_EQ(batch.size(), 2u);
  EXPECT_EQ(batch[0].value, serial[0].value);
  EXPECT_EQ(batch[1].value, serial[1].value);
  const auto one = tau_A(m, f2, ladder, 4.0, Execution::kSerial);
  for (NodeId v = 0; v < m.size(); ++v) EXPECT_NEAR(batch[1].value[v], one.value[v], 1e-12);
}

TEST(Combine, WeightsAndErrors) {
  TimeField a{FieldKind::kTauA, {1.0, 0.0, 0.5}};
  TimeField b{FieldKind::kTauA, {0.0, 1.0, 0.5}};
  const auto one = combine({a});
  EXPECT_EQ(one.value, a.value);
  EXPECT_EQ(one.kind, FieldKind::kTau);
  const auto two = combine({a, b});
  EXPECT_NEAR(two.value[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(two.value[1], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(two.value[2], 0.5, 1e-15);
  EXPECT_THROW(combine({}), ArgumentError);
  EXPECT_THROW(combine({a, TimeField{FieldKind::kTauA, {1.0}}}), ArgumentError);
}

TEST(FieldKindName, Names) {
  EXPECT_EQ(field_kind_name(FieldKind::kF), "f");
  EXPECT_EQ(field_kind_name(FieldKind::kTau), "tau_combined");
}
