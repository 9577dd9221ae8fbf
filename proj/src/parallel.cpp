#include "cqed/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cqed {

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int threads_from_env() {
    const char* s = std::getenv("CQED_THREADS");
    if (!s || !*s) return 0;
    try {
        std::size_t pos = 0;
        const int n = std::stoi(s, &pos);
        return (pos == std::string(s).size() && n > 0) ? n : 0;
    } catch (...) {
        return 0;
    }
}

} // namespace cqed
