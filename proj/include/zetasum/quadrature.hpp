// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_QUADRATURE_HPP
#define ZETASUM_QUADRATURE_HPP

#include <functional>
#include <optional>

#include "zetasum/complex_kernel.hpp"

namespace zetasum {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_depth = 30;
  long max_evals = 200000;
  /// Tail truncation margin in natural-log units.
  double tail_margin = 40.0;

  /// Throws DomainError when any field is out of range.
  void validate() const;
};

struct EvalResult {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
  long evals_used = 0;
  std::optional<double> truncation_point;
  bool converged = false;
};

using Integrand = std::function<Complex(double)>;

/// Integral of f over (a, b) by tanh-sinh panels with adaptive bisection.
/// Endpoints are never sampled. Each panel refines its step until two
/// successive levels agree; panels that fail are split, down to max_depth.
/// A non-finite integrand value throws IntegrandError naming the abscissa.
EvalResult integrate_finite(const Integrand& f, double a, double b, const QuadratureConfig& cfg);

/// Integral of f over (0, inf) for integrands bounded by
/// C t^growth_exponent e^{-decay t}; integrates over (0, T) with
/// T = truncation_point(...) and records T in the result.
EvalResult integrate_semi_infinite(const Integrand& f, double decay, double growth_exponent,
                                   const QuadratureConfig& cfg);

/// Smallest T > 0 with decay*T - growth_exponent*log(1+T) >= cfg.tail_margin.
double truncation_point(double decay, double growth_exponent, const QuadratureConfig& cfg);

}  // namespace zetasum

#endif  // ZETASUM_QUADRATURE_HPP
