#pragma once

// Data-parallel loops. Every kernel takes an Execution policy; Execution::serial is the
// reference path used by the tests, Execution::parallel runs the same body under OpenMP.

#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <vector>

namespace wks {

enum class Execution { serial, parallel };

/// Number of OpenMP workers used by Execution::parallel (default: available parallelism).
void set_worker_count(int workers);
int worker_count();

/// Calls body(i) for i in [0, count). Each index is visited exactly once; the first exception
/// thrown by any body is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// h_{p,N}(x) at every abscissa.
std::vector<double> tabulate_h_sum(double p, int N, std::span<const double> xs, double tol, Execution exec);

/// Index of the largest value; ties resolve to the smallest index.
std::size_t argmax_first(std::span<const double> values);

} // namespace wks
