#pragma once

#include "wks/specfun.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wks {

/// One-dimensional factor g of a tensor-product signal f(x) = prod_j g_j(x_j).
class AxisFactor {
  public:
    virtual ~AxisFactor() = default;

    virtual double evaluate(double x) const = 0;
    /// g(n); implementations return exact sample values.
    virtual double sample(long n) const { return evaluate(static_cast<double>(n)); }
    /// Whether g is in L^q.
    virtual bool in_Lq(double q) const = 0;
    /// Integral of |g|^q over the real line.
    virtual double power_integral(double q) const = 0;
    /// sum_n |g(n)|^q with a bound on the error.
    virtual SumEvaluation sample_power_sum(double q) const = 0;
    virtual std::string describe() const = 0;
};

/// sinc(x - a).
std::shared_ptr<const AxisFactor> shifted_sinc_factor(double shift);
/// sinc(b x)^m; exponential type m b pi must not exceed pi.
std::shared_ptr<const AxisFactor> dilated_sinc_power_factor(int power, double dilation);
/// sum_i c_i sinc(x - n_i).
std::shared_ptr<const AxisFactor> sinc_combination_factor(std::vector<long> shifts, std::vector<double> coeffs);

/// Member of the Bernstein class B_{pi,d}^q built as a tensor product of axis factors.
/// Immutable after construction, so concurrent evaluation is safe.
class BandlimitedSignal {
  public:
    BandlimitedSignal(std::string label, std::vector<std::shared_ptr<const AxisFactor>> factors);

    int dimension() const { return static_cast<int>(factors_.size()); }
    const std::string& label() const { return label_; }

    double evaluate(std::span<const double> x) const;
    double sample(std::span<const long> n) const;
    bool in_Lq(double q) const;
    /// ||f||_q; throws DomainError when f is not in L^q.
    double norm_q(double q) const;
    /// sum_{n in Z^d} |f(n)|^q.
    SumEvaluation sample_power_sum(double q) const;

    const AxisFactor& factor(int axis) const { return *factors_.at(axis); }

  private:
    std::string label_;
    std::vector<std::shared_ptr<const AxisFactor>> factors_;
};

/// Signal kind plus key=value parameters, as written in a corpus file.
struct SignalSpec {
    std::string kind;
    std::map<std::string, std::string> params;
};

/// Builds one corpus signal. Kinds and parameters (all optional):
///   shifted_sinc_product     d=<dim> a=<a_1,...,a_d>          prod_j sinc(x_j - a_j)
///   sinc_squared_half        d=<dim>                          prod_j sinc^2(x_j / 2)
///   dilated_sinc_power       d=<dim> m=<int> b=<real>         prod_j sinc^m(b x_j), m b <= 1
///   finite_sinc_combination  d=<dim> terms=<int> reach=<int> seed=<int>
///                            tensor product of random combinations sum_i c_i sinc(x - n_i),
///                            rational c_i, integer n_i in [-reach, reach]
/// Throws ArgumentError for unknown kinds or malformed parameters, DomainError for a
/// dilation exceeding type pi.
BandlimitedSignal make_signal(const SignalSpec& spec);

/// Parses "kind key=value ..." (one signal per line; '#' starts a comment).
SignalSpec parse_signal_line(std::string_view line);
std::vector<BandlimitedSignal> parse_corpus(std::string_view text);
std::vector<BandlimitedSignal> load_corpus(const std::string& path);

/// Default validation corpus for the given dimension.
std::vector<BandlimitedSignal> default_corpus(int d, std::uint64_t seed = 2010);

} // namespace wks
