// SPDX-License-Identifier: Apache-2.0

#include "zetasum/hurwitz.hpp"

#include <cmath>
#include <limits>

#include "zetasum/detail/continuation_kernel.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/faulhaber.hpp"

namespace zetasum {

namespace {

EvalResult hurwitz_unchecked(Complex k, Complex b, const QuadratureConfig& cfg) {
  if (std::abs(k - 1.0) < 1e-8) throw PoleError("pole at k=1");
  const double sign = detail::real_part_sign(b);
  const Complex inv = 1.0 / (k - 1.0);
  const Complex head = cpow(b, 1.0 - k) * inv + 0.5 * cpow(b, -k);
  EvalResult r = detail::continuation_integral(1.0 - k, b, cfg);
  const Complex factor = sign * kPi * inv;
  r.value = head + factor * r.value;
  r.err_estimate *= std::abs(factor);
  return r;
}

}  // namespace

HurwitzParams::HurwitzParams(Complex k, Complex b) : HurwitzParams(k, b, true) {}

HurwitzParams::HurwitzParams(Complex k, Complex b, bool checked) : k_(k), b_(b) {
  if (checked && !(b.real() > 0.0)) {
    throw DomainError("offset b must satisfy Re(b) > 0");
  }
  if (b.real() == 0.0) throw DomainError("offset b must satisfy Re(b) != 0");
}

HurwitzParams HurwitzParams::unvalidated_any_b(Complex k, Complex b) {
  return HurwitzParams(k, b, false);
}

Complex hurwitz_neg_int(int m, Complex b) {
  if (m < 0) throw DomainError("hurwitz_neg_int: m must be >= 0");
  if (b == Complex{0.0, 0.0}) throw DomainError("hurwitz_neg_int: b must be non-zero");
  if (m + 1 > kMaxBernoulliIndex) {
    throw CapacityError("hurwitz_neg_int: m exceeds the Bernoulli table");
  }
  const BernoulliTable& table = shared_bernoulli_table();
  const double md = m;

  Complex sum{0.0, 0.0};
  double falling = 1.0;  // m! / (m+1-2j)!
  for (int j = 1; 2 * j <= m + 1; ++j) {
    // multiply in (m+2-2j) and (m+3-2j), skipping the factor m+1 at j = 1
    if (j == 1) {
      falling = m >= 1 ? md : 1.0;
    } else {
      falling *= (md + 3.0 - 2.0 * j) * (md + 2.0 - 2.0 * j);
    }
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += 2.0 * sign * falling * cpow(b, md + 1.0 - 2.0 * j) * std::pow(kTwoPi, -2.0 * j) *
           table.zeta_even[j];
  }
  return -cpow(b, md + 1.0) / (md + 1.0) + 0.5 * cpow(b, md) + sum;
}

EvalResult hurwitz_global(const HurwitzParams& p, const QuadratureConfig& cfg) {
  return hurwitz_unchecked(p.k(), p.b(), cfg);
}

EvalResult hurwitz_global(Complex k, Complex b, const QuadratureConfig& cfg) {
  return hurwitz_global(HurwitzParams(k, b), cfg);
}

Complex hurwitz_reference(Complex k, Complex b) {
  if (std::abs(k - 1.0) < 1e-8) throw PoleError("pole at k=1");
  if (!(b.real() > 0.0)) throw DomainError("offset b must satisfy Re(b) > 0");
  const BernoulliTable& table = shared_bernoulli_table();
  // Correction terms shrink by about (|k| + 2j)^2 / (2 pi |N + b|)^2 until
  // 2j nears 2 pi |N + b|; the smallest is near e^{-2 pi |N + b| + |k|}. Few
  // direct terms keep the cancellation small when Re(k) < 0.
  const auto terms = static_cast<std::int64_t>(std::ceil((std::abs(k) + 45.0) / kTwoPi));
  detail::CompensatedSum sum;
  for (std::int64_t j = terms - 1; j >= 0; --j) sum.add(cpow(static_cast<double>(j) + b, -k));
  const Complex x = static_cast<double>(terms) + b;
  const Complex x_pow = cpow(x, -k);
  sum.add(x_pow * x / (k - 1.0));
  sum.add(0.5 * x_pow);

  Complex rising = k;  // k (k+1) ... (k+2j-2)
  Complex power = x_pow / x;
  double factorial = 2.0;
  const Complex inv_x_sq = 1.0 / (x * x);
  double previous = std::numeric_limits<double>::infinity();
  for (int j = 1; 2 * j <= table.max_index; ++j) {
    if (j > 1) {
      rising *= (k + (2.0 * j - 3.0)) * (k + (2.0 * j - 2.0));
      power *= inv_x_sq;
      factorial *= (2.0 * j - 1.0) * (2.0 * j);
    }
    const Complex term = static_cast<double>(table[2 * j]) / factorial * rising * power;
    if (std::abs(term) > previous) break;  // asymptotic series turned
    sum.add(term);
    if (std::abs(term) < 1e-17 * std::abs(sum.value())) break;
    previous = std::abs(term);
  }
  return sum.value();
}

Complex hp_bruteforce(Complex k, Complex b, std::int64_t n, int start) {
  if (start != 0 && start != 1) throw DomainError("hp_bruteforce: start must be 0 or 1");
  if (n < start) throw DomainError("hp_bruteforce: requires n >= start");
  detail::CompensatedSum sum;
  for (std::int64_t j = start; j <= n; ++j) {
    const Complex base = static_cast<double>(j) + b;
    if (base == Complex{0.0, 0.0}) throw DomainError("hp_bruteforce: j + b = 0 for a summed j");
    sum.add(cpow(base, k));
  }
  return sum.value();
}

EvalResult hp_sum_ac(const HurwitzParams& p, std::int64_t n, const QuadratureConfig& cfg) {
  const Complex k = p.k();
  const Complex b = p.b();
  detail::require_not_harmonic(k);
  if (n < 1) throw DomainError("hp_sum_ac: requires n >= 1");
  const double sign = detail::real_part_sign(b);
  const Complex s = k + 1.0;
  const Complex top = static_cast<double>(n) + b;

  const Complex head = (cpow(top, s) - cpow(b, s)) / s + 0.5 * (cpow(top, k) - cpow(b, k));
  EvalResult r = detail::continuation_integral_difference(s, top, b, cfg);
  const Complex factor = sign * kPi / s;
  r.value = head + factor * r.value;
  r.err_estimate *= std::abs(factor);
  return r;
}

EvalResult hp_sum_ac(Complex k, Complex b, std::int64_t n, const QuadratureConfig& cfg) {
  return hp_sum_ac(HurwitzParams(k, b), n, cfg);
}

EvalResult hp_sum_hurwitz(const HurwitzParams& p, std::int64_t n, const QuadratureConfig& cfg) {
  const Complex k = p.k();
  const Complex b = p.b();
  detail::require_not_harmonic(k);
  if (n < 0) throw DomainError("hp_sum_hurwitz: requires n >= 0");
  const double sign = detail::real_part_sign(b);
  const Complex s = k + 1.0;
  const Complex top = static_cast<double>(n) + b;

  const EvalResult zeta_part = hurwitz_unchecked(-k, b, cfg);
  const EvalResult integral = detail::continuation_integral(s, top, cfg);
  const Complex factor = sign * kPi / s;

  EvalResult r;
  r.value = cpow(top, s) / s + 0.5 * cpow(top, k) + zeta_part.value + factor * integral.value;
  r.err_estimate = zeta_part.err_estimate + std::abs(factor) * integral.err_estimate;
  r.evals_used = zeta_part.evals_used + integral.evals_used;
  r.truncation_point = integral.truncation_point;
  r.converged = zeta_part.converged && integral.converged;
  return r;
}

EvalResult hp_sum_hurwitz(Complex k, Complex b, std::int64_t n, const QuadratureConfig& cfg) {
  return hp_sum_hurwitz(HurwitzParams(k, b), n, cfg);
}

}  // namespace zetasum
