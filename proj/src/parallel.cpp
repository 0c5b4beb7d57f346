#include "ainf/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ainf {

int worker_threads() {
#ifdef _OPENMP
    static const long cap = [] {
        if (const char* env = std::getenv("AINFTY_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1) return v;
        }
        return 0L;
    }();
    const int n = omp_get_max_threads();
    return cap > 0 && cap < n ? static_cast<int>(cap) : n;
#else
    return 1;
#endif
}

}  // namespace ainf
