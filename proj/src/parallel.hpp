#pragma once

#include <omp.h>

namespace ifslab::detail {

// threads <= 0 defers to the OpenMP runtime default.
inline int resolve_threads(int threads) {
  return threads > 0 ? threads : omp_get_max_threads();
}

}  // namespace ifslab::detail
