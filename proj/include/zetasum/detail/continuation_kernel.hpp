// SPDX-License-Identifier: Apache-2.0

// Shared csch^2 integral behind the power-sum and zeta continuations.
//
// Every continuation integral has the shape
//
//   J(s, c) = int_0^inf c^{s+1} csch^2(pi c t) (1 - (1+t^2)^{s/2} cos(s atan t)) dt,
//
// the t = tan v image of the (0, pi/2) integral with sec^2 v csch^2(pi c tan v)
// and the factor 1 - cos(s v) / cos(v)^s.

#ifndef ZETASUM_DETAIL_CONTINUATION_KERNEL_HPP
#define ZETASUM_DETAIL_CONTINUATION_KERNEL_HPP

#include "zetasum/complex_kernel.hpp"
#include "zetasum/quadrature.hpp"

namespace zetasum::detail {

/// Below this abscissa the integrand is replaced by its t -> 0 limit.
inline constexpr double kSmallAbscissa = 1e-12;

/// 1 - (1+t^2)^{s/2} cos(s atan t).
Complex continuation_factor(Complex s, double t);

/// 1 - cos(s v) / cos(v)^s, the same factor in the angular variable.
Complex continuation_factor_angle(Complex s, double v);

/// exp(log_scale) csch^2(pi c t) continuation_factor(s, t); csch^2 is even,
/// so Re(c) < 0 is folded onto -c.
Complex continuation_integrand(Complex s, Complex c, Complex log_scale, double t);

/// J(s, c) for Re(c) != 0.
EvalResult continuation_integral(Complex s, Complex c, const QuadratureConfig& cfg);

/// J(s, c_hi) - J(s, c_lo) as one integrand, so the t = 0 singularities of the
/// two csch^2 factors are never separated.
EvalResult continuation_integral_difference(Complex s, Complex c_hi, Complex c_lo,
                                            const QuadratureConfig& cfg);

/// Quadrature settings for a J(s, .) integral: |Im s| adds to the tail
/// margin because cos(s atan t) can grow like e^{|Im s| pi/2}.
QuadratureConfig continuation_config(Complex s, const QuadratureConfig& cfg);

/// max(0, Re s): polynomial growth of the continuation factor.
double continuation_growth(Complex s);

/// +1 or -1 by the sign of Re(c); throws DomainError when Re(c) = 0.
double real_part_sign(Complex c);

}  // namespace zetasum::detail

#endif  // ZETASUM_DETAIL_CONTINUATION_KERNEL_HPP
