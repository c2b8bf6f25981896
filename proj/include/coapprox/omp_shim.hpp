#pragma once

// Include this instead of <omp.h> so the kernels build without OpenMP too.

#if defined(_OPENMP)
#include <omp.h>
namespace coapprox {
constexpr bool kHasOpenMp = true;
}
#else
#pragma GCC diagnostic ignored "-Wunknown-pragmas"
namespace coapprox {
constexpr bool kHasOpenMp = false;
}
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
#endif
