#pragma once

#include <string>
#include <vector>

#include "causet/attract.hpp"
#include "causet/grid.hpp"
#include "causet/parallel.hpp"

namespace causet {

enum class FieldKind { kF, kGt, kTauA, kTau };
std::string field_kind_name(FieldKind k);

struct TimeField {
  FieldKind kind = FieldKind::kF;
  std::vector<double> value;
};

// f = mu / (mu + d(., complement B)), mu = min(1, d(., A)); mu = 1 when A is
// empty. Throws ArgumentError when B is empty.
TimeField build_f(const GridModel& model, const AttractorRecord& record);

// g_t(x) = max of f over J+_t(x); 0 when that set is empty.
TimeField g_t_field(const GridModel& model, const TimeField& f, double t, double l_cap,
                    Execution exec = Execution::kParallel);

struct Ladder {
  std::vector<double> t;  // increasing
  std::vector<double> w;  // positive, summing to 1
};

// t_k = k * l_cap / 2^m for k = 1..2^m, equal weights, with m the smallest
// exponent giving spacing <= resolution.
Ladder dyadic_ladder(double l_cap, double resolution);
// Spacing at most half the shortest step weight.
Ladder default_ladder(const GridModel& model, double l_cap);

// tau_A = sum_i w_i (1 - g_{t_i}). Throws ArgumentError for mismatched or
// non-normalized weights.
TimeField tau_A(const GridModel& model, const TimeField& f, const Ladder& ladder, double l_cap,
                Execution exec = Execution::kParallel);
// Same for several f fields, sharing one reach per node.
std::vector<TimeField> tau_A_batch(const GridModel& model, const std::vector<TimeField>& fs,
                                   const Ladder& ladder, double l_cap,
                                   Execution exec = Execution::kParallel);

// sum_n 2^-(n+1) fields[n], renormalized by the weight total.
TimeField combine(const std::vector<TimeField>& fields);

}  // namespace causet
