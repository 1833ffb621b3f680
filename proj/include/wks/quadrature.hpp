#pragma once

#include <span>

namespace wks {

/// Mean of |sin(pi u)|^alpha over one period.
double sine_power_mean(double alpha);

/// Integral of |sinc x|^alpha over the real line, alpha > 1.
///
/// Unit cells on [0, L] are integrated with tanh-sinh quadrature; the rest is exactly
/// pi^{-alpha} int_0^1 |sin(pi u)|^alpha zeta(alpha, L + u) du.
double sinc_power_integral(double alpha);

/// Integral of |sum_i c_i sinc(x - n_i)|^q over the real line, q > 1.
///
/// Cells on [-L, L] are integrated directly; beyond that the kernel sum is
/// sin(pi x)/pi * sum_i c_i (-1)^{n_i}/(x - n_i), summed per cell out to a far cutoff and
/// closed with its moment expansion in 1/x.
double sinc_combination_power_integral(std::span<const long> shifts, std::span<const double> coeffs, double q);

} // namespace wks
