// SPDX-License-Identifier: Apache-2.0

#include "zetasum/zeta.hpp"

#include <array>
#include <cmath>

#include "zetasum/detail/continuation_kernel.hpp"
#include "zetasum/errors.hpp"

namespace zetasum {

namespace {

constexpr double kPoleExclusion = 1e-8;
const double kLog2 = std::log(2.0);
const double kLogTwoPi = std::log(kTwoPi);

// t^s e^{-t} / (1 - e^{-t})^2, the u = e^{-t} image of (-log u)^s / (1 - u)^2.
Complex log_form_integrand(Complex s, double t) {
  if (t < 1e-4) {
    // e^{-t}/(1-e^{-t})^2 = t^{-2} (1 - t^2/12 + t^4/240 - ...)
    const double t2 = t * t;
    return std::exp((s - 2.0) * std::log(t)) * (1.0 - t2 / 12.0 + t2 * t2 / 240.0);
  }
  // csch^2(t/2) / 4 = e^{-t} / (1 - e^{-t})^2
  return scaled_csch_sq(s * std::log(t) - std::log(4.0), Complex{0.5 * t, 0.0});
}

EvalResult log_form_integral(Complex s, const QuadratureConfig& cfg) {
  const auto f = [s](double t) { return log_form_integrand(s, t); };
  return integrate_semi_infinite(f, 1.0, std::max(0.0, s.real()), cfg);
}

EvalResult scaled(EvalResult r, Complex factor, Complex offset = {0.0, 0.0}) {
  r.value = factor * r.value + offset;
  r.err_estimate *= std::abs(factor);
  return r;
}

// Borwein's d_k for the eta-series acceleration, n = 64 terms.
constexpr int kBorweinTerms = 64;

std::array<double, kBorweinTerms + 1> borwein_weights() {
  std::array<double, kBorweinTerms + 1> d{};
  const double n = kBorweinTerms;
  double term = 1.0 / n;
  double partial = term;
  d[0] = n * partial;
  for (int i = 1; i <= kBorweinTerms; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1));
    partial += term;
    d[i] = n * partial;
  }
  return d;
}

Complex zeta_borwein(Complex s) {
  static const auto d = borwein_weights();
  const double dn = d[kBorweinTerms];
  Complex sum{0.0, 0.0};
  for (int k = kBorweinTerms - 1; k >= 0; --k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (d[k] - dn) * std::exp(-s * std::log(static_cast<double>(k + 1)));
  }
  const Complex one_minus_pow = -expm1((1.0 - s) * kLog2);
  return -sum / (dn * one_minus_pow);
}

}  // namespace

std::string_view to_string(ZetaRepresentation repr) {
  switch (repr) {
    case ZetaRepresentation::strip_pos: return "strip_pos";
    case ZetaRepresentation::strip_neg: return "strip_neg";
    case ZetaRepresentation::global: return "global";
    case ZetaRepresentation::functional: return "functional";
    case ZetaRepresentation::reference: return "reference";
  }
  return "unknown";
}

std::optional<ZetaRepresentation> parse_zeta_representation(std::string_view name) {
  for (auto repr : {ZetaRepresentation::strip_pos, ZetaRepresentation::strip_neg,
                    ZetaRepresentation::global, ZetaRepresentation::functional,
                    ZetaRepresentation::reference}) {
    if (to_string(repr) == name) return repr;
  }
  return std::nullopt;
}

EvalResult zeta_strip_pos(Complex k, const QuadratureConfig& cfg) {
  if (!(k.real() > 1.0)) throw DomainError("zeta_strip_pos: requires Re(k) > 1");
  const EvalResult integral = log_form_integral(k, cfg);
  return scaled(integral, std::exp(-log_gamma(k + 1.0)));
}

EvalResult zeta_strip_neg(Complex k, const QuadratureConfig& cfg) {
  if (!(k.real() < 0.0)) throw DomainError("zeta_strip_neg: requires Re(k) < 0");
  const EvalResult integral = log_form_integral(1.0 - k, cfg);
  const Complex prefactor =
      -2.0 * std::exp((k - 1.0) * kLogTwoPi) / (k - 1.0) * sin_pi(0.5 * k);
  return scaled(integral, prefactor);
}

EvalResult zeta_global(Complex k, const QuadratureConfig& cfg) {
  if (std::abs(k - 1.0) < kPoleExclusion) throw PoleError("pole at k=1");
  const Complex inv = 1.0 / (k - 1.0);
  const EvalResult integral = detail::continuation_integral(1.0 - k, Complex{1.0, 0.0}, cfg);
  return scaled(integral, kPi * inv, inv + 0.5);
}

EvalResult zeta_functional(Complex k, const QuadratureConfig& cfg) {
  if (!(k.real() > 0.0)) throw DomainError("zeta_functional: requires Re(k) > 0");
  const EvalResult upper = zeta_strip_pos(k + 1.0, cfg);
  const Complex factor =
      2.0 * std::exp(log_gamma(k + 1.0) - (k + 1.0) * kLogTwoPi) * cos_pi(0.5 * (k + 1.0));
  return scaled(upper, factor);
}

Complex zeta_reference(Complex k) {
  if (k == Complex{1.0, 0.0}) throw PoleError("pole at k=1");
  if (k.real() >= 0.0) return zeta_borwein(k);
  // zeta(k) = 2^k pi^{k-1} sin(pi k / 2) Gamma(1-k) zeta(1-k)
  const Complex log_factor = k * kLog2 + (k - 1.0) * std::log(kPi) + log_gamma(1.0 - k);
  return std::exp(log_factor) * sin_pi(0.5 * k) * zeta_borwein(1.0 - k);
}

EvalResult evaluate_zeta(ZetaRepresentation repr, Complex k, const QuadratureConfig& cfg) {
  switch (repr) {
    case ZetaRepresentation::strip_pos: return zeta_strip_pos(k, cfg);
    case ZetaRepresentation::strip_neg: return zeta_strip_neg(k, cfg);
    case ZetaRepresentation::global: return zeta_global(k, cfg);
    case ZetaRepresentation::functional: {
      // The functional path computes zeta(-m); evaluate it at m = -k.
      if (!(k.real() < 0.0)) throw DomainError("functional representation requires Re(k) < 0");
      return zeta_functional(-k, cfg);
    }
    case ZetaRepresentation::reference: {
      EvalResult r;
      r.value = zeta_reference(k);
      r.converged = true;
      return r;
    }
  }
  throw DomainError("unknown zeta representation");
}

}  // namespace zetasum
