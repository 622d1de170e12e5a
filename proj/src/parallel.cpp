#include "hmtk/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace hmtk {

int thread_count() {
    static const int n = [] {
        int max_threads = 1;
#ifdef _OPENMP
        max_threads = omp_get_max_threads();
#endif
        if (const char* env = std::getenv("HMTK_THREADS")) {
            char* end = nullptr;
            const long cap = std::strtol(env, &end, 10);
            if (end != env && cap > 0) max_threads = std::min<long>(cap, max_threads);
        }
        return std::max(1, max_threads);
    }();
    return n;
}

}  // namespace hmtk
