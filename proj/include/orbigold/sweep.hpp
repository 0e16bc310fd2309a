#pragma once

// Deterministic indexed sweeps. Verification suites here are embarrassingly
// parallel: a kernel runs independently for every index of a finite range.
// map_indexed executes the kernel either serially or under OpenMP and always
// returns results in index order, so the two policies are bit-identical and
// can be asserted against each other.

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbigold::sweep {

enum class Execution { serial, parallel };

template <class Result, class Fn>
std::vector<Result> map_indexed(std::size_t count, Execution exec, Fn&& fn) {
    std::vector<Result> results(count);
#ifdef _OPENMP
    if (exec == Execution::parallel) {
        std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                results[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        // Rethrow the first failure by index, deterministically.
        for (std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
        return results;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
}

}  // namespace orbigold::sweep
