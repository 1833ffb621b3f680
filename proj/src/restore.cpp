#include "wks/restore.hpp"

#include "wks/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace wks {

namespace {

void check_window(std::span<const double> x, std::span<const int> Ns) {
    if (x.empty() || x.size() != Ns.size()) {
        throw ArgumentError("point and truncation vector must have the same positive dimension");
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw ArgumentError("point coordinates must be finite");
        }
    }
    for (int n : Ns) {
        if (n < 1) {
            throw ArgumentError("truncation sizes must satisfy N_j >= 1");
        }
    }
}

double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double inverse = 1.0 / static_cast<double>(base);
    double scale = inverse;
    double out = 0.0;
    while (index > 0) {
        out += static_cast<double>(index % base) * scale;
        index /= base;
        scale *= inverse;
    }
    return out;
}

} // namespace

IndexSet::IndexSet(std::span<const double> x, std::span<const int> Ns) {
    check_window(x, Ns);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const auto lo = static_cast<long>(std::ceil(x[j] - Ns[j]));
        const auto hi = static_cast<long>(std::floor(x[j] + Ns[j]));
        ranges_.emplace_back(lo, hi);
    }
}

std::size_t IndexSet::axis_size(int axis) const {
    const auto [lo, hi] = range(axis);
    return static_cast<std::size_t>(hi - lo + 1);
}

std::size_t IndexSet::size() const {
    std::size_t total = 1;
    for (int j = 0; j < dimension(); ++j) {
        total *= axis_size(j);
    }
    return total;
}

bool IndexSet::contains(std::span<const long> n) const {
    if (static_cast<int>(n.size()) != dimension()) {
        return false;
    }
    for (std::size_t j = 0; j < n.size(); ++j) {
        if (n[j] < ranges_[j].first || n[j] > ranges_[j].second) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<long>> IndexSet::enumerate() const {
    std::vector<std::vector<long>> out;
    out.reserve(size());
    std::vector<long> n(ranges_.size());
    for (std::size_t j = 0; j < n.size(); ++j) {
        n[j] = ranges_[j].first;
    }
    while (true) {
        out.push_back(n);
        int axis = dimension() - 1;
        while (axis >= 0 && n[axis] == ranges_[axis].second) {
            n[axis] = ranges_[axis].first;
            --axis;
        }
        if (axis < 0) {
            break;
        }
        ++n[axis];
    }
    return out;
}

IndexSet index_set(std::span<const double> x, std::span<const int> Ns) { return IndexSet(x, Ns); }

double truncated_wks(const BandlimitedSignal& f, std::span<const double> x, std::span<const int> Ns) {
    if (static_cast<int>(x.size()) != f.dimension()) {
        throw ArgumentError("point dimension does not match the signal");
    }
    const IndexSet window(x, Ns);
    const int d = window.dimension();
    std::vector<std::vector<double>> weights(d);
    std::vector<long> n(d);
    for (int j = 0; j < d; ++j) {
        const auto [lo, hi] = window.range(j);
        for (long k = lo; k <= hi; ++k) {
            weights[j].push_back(sinc(x[j] - static_cast<double>(k)));
        }
        n[j] = lo;
    }
    std::vector<std::size_t> pos(d, 0);
    double total = 0.0;
    while (true) {
        double w = 1.0;
        for (int j = 0; j < d; ++j) {
            w *= weights[j][pos[j]];
        }
        if (w != 0.0) {
            total += f.sample(n) * w;
        }
        int axis = d - 1;
        while (axis >= 0 && pos[axis] + 1 == weights[axis].size()) {
            pos[axis] = 0;
            n[axis] = window.range(axis).first;
            --axis;
        }
        if (axis < 0) {
            break;
        }
        ++pos[axis];
        ++n[axis];
    }
    return total;
}

ProbeSet make_probes(int dimension, std::size_t count, double lo, double hi, std::uint64_t seed) {
    static constexpr std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    if (dimension < 1 || dimension > 6) {
        throw ArgumentError("probe dimension must be in [1, 6]");
    }
    if (count == 0) {
        throw ArgumentError("probe count must be positive");
    }
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw ArgumentError("probe range needs finite lo < hi");
    }
    std::mt19937_64 engine(seed);
    std::vector<double> shift(dimension);
    for (double& s : shift) {
        s = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    }
    ProbeSet probes{dimension, {}, seed};
    probes.coords.reserve(count * dimension);
    for (std::size_t i = 0; i < count; ++i) {
        for (int j = 0; j < dimension; ++j) {
            double u = radical_inverse(i + 1, primes[j]) + shift[j];
            u -= std::floor(u);
            probes.coords.push_back(lo + (hi - lo) * u);
        }
    }
    return probes;
}

double measure_error(const BandlimitedSignal& f, const ProbeSet& probes, std::span<const int> Ns, Execution exec) {
    if (probes.dimension != f.dimension() || static_cast<int>(Ns.size()) != f.dimension()) {
        throw ArgumentError("probe, signal and truncation dimensions differ");
    }
    if (probes.size() == 0) {
        throw ArgumentError("no probe points");
    }
    std::vector<double> errors(probes.size());
    for_each_index(probes.size(), exec, [&](std::size_t i) {
        const auto x = probes.point(i);
        errors[i] = std::abs(f.evaluate(x) - truncated_wks(f, x, Ns));
    });
    return *std::max_element(errors.begin(), errors.end());
}

} // namespace wks
