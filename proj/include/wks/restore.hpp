#pragma once

#include "wks/kernels.hpp"
#include "wks/signals.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wks {

/// Time-shifted truncation window J_x = {n : |x_j - n_j| <= N_j for every j}.
class IndexSet {
  public:
    IndexSet(std::span<const double> x, std::span<const int> Ns);

    int dimension() const { return static_cast<int>(ranges_.size()); }
    /// Inclusive integer range on one axis.
    std::pair<long, long> range(int axis) const { return ranges_.at(axis); }
    std::size_t axis_size(int axis) const;
    std::size_t size() const;
    bool contains(std::span<const long> n) const;
    /// Every member, in lexicographic order.
    std::vector<std::vector<long>> enumerate() const;

  private:
    std::vector<std::pair<long, long>> ranges_;
};

IndexSet index_set(std::span<const double> x, std::span<const int> Ns);

/// sum_{n in J_x} f(n) prod_j sinc(x_j - n_j).
double truncated_wks(const BandlimitedSignal& f, std::span<const double> x, std::span<const int> Ns);

/// Probe points stored row-major (count x dimension).
struct ProbeSet {
    int dimension = 1;
    std::vector<double> coords;
    std::uint64_t seed = 0;

    std::size_t size() const { return dimension > 0 ? coords.size() / dimension : 0; }
    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dimension, static_cast<std::size_t>(dimension)};
    }
};

/// Halton points in [lo, hi]^d with a seeded random shift (Cranley-Patterson rotation).
ProbeSet make_probes(int dimension, std::size_t count, double lo, double hi, std::uint64_t seed);

/// max over probes of |f(x) - truncated_wks(f, x, Ns)|.
double measure_error(const BandlimitedSignal& f, const ProbeSet& probes, std::span<const int> Ns,
                     Execution exec = Execution::parallel);

} // namespace wks
