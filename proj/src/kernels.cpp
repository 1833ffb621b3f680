#include "wks/kernels.hpp"

#include "wks/errors.hpp"
#include "wks/sincsum.hpp"

#include <omp.h>

namespace wks {

void set_worker_count(int workers) {
    if (workers < 1) {
        throw ArgumentError("worker count must be >= 1");
    }
    omp_set_num_threads(workers);
}

int worker_count() { return omp_get_max_threads(); }

std::vector<double> tabulate_h_sum(double p, int N, std::span<const double> xs, double tol, Execution exec) {
    const PowerSumParams params{p, N, tol};
    params.validate();
    std::vector<double> values(xs.size());
    for_each_index(xs.size(), exec, [&](std::size_t i) { values[i] = h_sum(params, xs[i]).value; });
    return values;
}

std::size_t argmax_first(std::span<const double> values) {
    if (values.empty()) {
        throw ArgumentError("argmax of an empty sequence");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) {
            best = i;
        }
    }
    return best;
}

} // namespace wks
