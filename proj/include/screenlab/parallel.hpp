// Execution policy for the data-parallel kernels. Every kernel has one code
// path; Exec::serial runs it on the calling thread and is the reference the
// tests compare against. Results are bitwise identical across policies and
// thread counts because cells are independent and reductions merge partials
// in a fixed order.
#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace screenlab {

enum class Exec { serial, parallel };

template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace screenlab
