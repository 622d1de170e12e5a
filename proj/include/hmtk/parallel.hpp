#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hmtk {

// Worker count: OpenMP's maximum, capped by the HMTK_THREADS environment variable.
int thread_count();

// Runs body(i) for i in [0, n). Iterations must be independent. Callers that
// reduce must gather into an array indexed by i and fold serially afterwards,
// so results never depend on the schedule or the thread count. The serial
// path (parallel = false) is the reference implementation used by the tests
// and the benchmark. Exceptions are captured and rethrown once.
template <class Body>
void parallel_for(std::size_t n, Body&& body, bool parallel = true) {
    if (n == 0) return;
#ifdef _OPENMP
    if (parallel && n > 1 && thread_count() > 1 && !omp_in_parallel()) {
        std::exception_ptr err;
        std::mutex err_mu;
        #pragma omp parallel for schedule(static) num_threads(thread_count())
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace hmtk
