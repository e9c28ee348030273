// SPDX-License-Identifier: Apache-2.0

#include "zetasum/detail/continuation_kernel.hpp"

#include <algorithm>
#include <cmath>

#include "zetasum/errors.hpp"

namespace zetasum::detail {

namespace {

// exp(log_scale) / (pi c)^2 * s (s - 1) / 2: the t -> 0 limit of the integrand,
// from csch^2(pi c t) ~ 1/(pi c t)^2 and 1 - K ~ s (s - 1) t^2 / 2.
Complex small_t_limit(Complex s, Complex c, Complex log_scale) {
  const Complex pc = kPi * c;
  return std::exp(log_scale) / (pc * pc) * s * (s - 1.0) * 0.5;
}

}  // namespace

Complex continuation_factor(Complex s, double t) {
  const Complex log_modulus = s * (0.5 * std::log1p(t * t));
  const Complex angle = s * std::atan(t);
  return one_minus_exp_cos(log_modulus, angle);
}

Complex continuation_factor_angle(Complex s, double v) {
  double log_cos = 0.0;
  if (v < 0.25 * kPi) {
    const double h = std::sin(0.5 * v);
    log_cos = std::log1p(-2.0 * h * h);
  } else {
    log_cos = std::log(std::cos(v));
  }
  return one_minus_exp_cos(-s * log_cos, s * v);
}

Complex continuation_integrand(Complex s, Complex c, Complex log_scale, double t) {
  const Complex folded = c.real() < 0.0 ? -c : c;
  if (t < kSmallAbscissa) return small_t_limit(s, folded, log_scale);
  return scaled_csch_sq(log_scale, kPi * folded * t) * continuation_factor(s, t);
}

double real_part_sign(Complex c) {
  if (c.real() > 0.0) return 1.0;
  if (c.real() < 0.0) return -1.0;
  throw DomainError("continuation integral requires Re(c) != 0");
}

double continuation_growth(Complex s) { return std::max(0.0, s.real()); }

QuadratureConfig continuation_config(Complex s, const QuadratureConfig& cfg) {
  QuadratureConfig adjusted = cfg;
  adjusted.tail_margin += 0.5 * kPi * std::abs(s.imag());
  return adjusted;
}

EvalResult continuation_integral(Complex s, Complex c, const QuadratureConfig& cfg) {
  real_part_sign(c);
  const Complex log_scale = (s + 1.0) * principal_log(c);
  const auto f = [&](double t) { return continuation_integrand(s, c, log_scale, t); };
  return integrate_semi_infinite(f, kTwoPi * std::abs(c.real()), continuation_growth(s),
                                 continuation_config(s, cfg));
}

EvalResult continuation_integral_difference(Complex s, Complex c_hi, Complex c_lo,
                                            const QuadratureConfig& cfg) {
  real_part_sign(c_hi);
  real_part_sign(c_lo);
  const Complex log_hi = (s + 1.0) * principal_log(c_hi);
  const Complex log_lo = (s + 1.0) * principal_log(c_lo);
  const auto f = [&](double t) {
    const Complex folded_hi = c_hi.real() < 0.0 ? -c_hi : c_hi;
    const Complex folded_lo = c_lo.real() < 0.0 ? -c_lo : c_lo;
    if (t < kSmallAbscissa) {
      return small_t_limit(s, folded_hi, log_hi) - small_t_limit(s, folded_lo, log_lo);
    }
    const Complex kernel = scaled_csch_sq(log_hi, kPi * folded_hi * t) -
                           scaled_csch_sq(log_lo, kPi * folded_lo * t);
    return kernel * continuation_factor(s, t);
  };
  const double decay = kTwoPi * std::min(std::abs(c_hi.real()), std::abs(c_lo.real()));
  return integrate_semi_infinite(f, decay, continuation_growth(s), continuation_config(s, cfg));
}

}  // namespace zetasum::detail
