// SPDX-License-Identifier: Apache-2.0

#include "zetasum/complex_kernel.hpp"

#include <array>
#include <cmath>

#include "zetasum/errors.hpp"

namespace zetasum {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLogTwoPi = 0.5 * std::log(kTwoPi);
const double kLogPi = std::log(kPi);

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

// sin(pi r), cos(pi r) for real r with exact zeros at the integer lattice.
double sin_pi_real(double r) {
  const double x = std::fmod(r, 2.0);
  if (is_integer(x)) return 0.0;
  if (x == 0.5 || x == -1.5) return 1.0;
  if (x == -0.5 || x == 1.5) return -1.0;
  return std::sin(kPi * x);
}

double cos_pi_real(double r) {
  const double x = std::fmod(r, 2.0);
  if (is_integer(x + 0.5)) return 0.0;
  if (x == 0.0) return 1.0;
  if (x == 1.0 || x == -1.0) return -1.0;
  return std::cos(kPi * x);
}

Complex log_gamma_lanczos(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (zm1 + static_cast<double>(i));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  return kHalfLogTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex principal_log(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) {
    return {std::log(-z.real()), kPi};
  }
  return std::log(z);
}

Complex cpow(Complex z, Complex w) {
  if (z == Complex{0.0, 0.0}) {
    if (w.real() > 0.0) return {0.0, 0.0};
    throw DomainError("cpow: 0 raised to a power with non-positive real part");
  }
  if (w.imag() == 0.0 && z.imag() == 0.0 && z.real() > 0.0) {
    return {std::pow(z.real(), w.real()), 0.0};
  }
  return std::exp(w * principal_log(z));
}

Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) return {std::expm1(x), 0.0};
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

Complex sin_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) return {sin_pi_real(x), 0.0};
  return {sin_pi_real(x) * std::cosh(kPi * y), cos_pi_real(x) * std::sinh(kPi * y)};
}

Complex cos_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) return {cos_pi_real(x), 0.0};
  return {cos_pi_real(x) * std::cosh(kPi * y), -sin_pi_real(x) * std::sinh(kPi * y)};
}

Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && is_integer(z.real())) {
    throw PoleError("log_gamma: pole at non-positive integer");
  }
  if (z.real() >= 0.5) return log_gamma_lanczos(z);

  // Reflection. The 2*pi*i multiple keeps the result on the branch that
  // is continuous across the half-planes; for real z it is zero.
  const double shift =
      z.imag() == 0.0 ? 0.0 : std::copysign(kTwoPi, z.imag()) * std::floor(0.5 * z.real() + 0.25);
  return Complex{kLogPi, shift} - principal_log(sin_pi(z)) - log_gamma_lanczos(1.0 - z);
}

Complex csch_sq(Complex z) {
  if (!(z.real() > 0.0)) throw DomainError("csch_sq: requires Re(z) > 0");
  return scaled_csch_sq(0.0, z);
}

Complex scaled_csch_sq(Complex log_scale, Complex z) {
  if (!(z.real() > 0.0)) throw DomainError("scaled_csch_sq: requires Re(z) > 0");
  const Complex denom = -expm1(-2.0 * z);
  return 4.0 * std::exp(log_scale - 2.0 * z) / (denom * denom);
}

Complex one_minus_exp_cos(Complex a, Complex b) {
  const Complex half_sin = std::sin(0.5 * b);
  return -expm1(a) * std::cos(b) + 2.0 * half_sin * half_sin;
}

}  // namespace zetasum
