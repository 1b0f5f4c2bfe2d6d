#pragma once

// Execution policy for the data-parallel kernels. Every kernel that takes an
// Execution argument has a serial path kept as the reference implementation;
// the parallel path distributes independent per-node jobs over OpenMP threads
// and writes each result into its own slot, so both paths produce identical
// output.

#include <omp.h>

namespace causet {

enum class Execution { kSerial, kParallel };

inline int worker_count() { return omp_get_max_threads(); }

// 0 selects the OpenMP default.
inline void set_worker_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace causet
