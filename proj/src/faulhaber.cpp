// SPDX-License-Identifier: Apache-2.0

#include "zetasum/faulhaber.hpp"

#include <cmath>
#include <string>

#include "zetasum/detail/continuation_kernel.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/zeta.hpp"

namespace zetasum {

namespace detail {

void require_not_harmonic(Complex k) {
  if (std::abs(k + 1.0) < 1e-8) {
    throw SingularParameterError("singular parameter k=-1: the harmonic exponent is excluded");
  }
}

void CompensatedSum::add_part(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

void CompensatedSum::add(Complex term) {
  add_part(re_, re_c_, term.real());
  add_part(im_, im_c_, term.imag());
}

}  // namespace detail

namespace {

using boost::multiprecision::cpp_int;

void require_positive_n(std::int64_t n) {
  if (n < 1) throw DomainError("term count n must be >= 1");
}

bool is_positive_integer(Complex k) {
  return k.imag() == 0.0 && k.real() >= 1.0 && k.real() == std::floor(k.real());
}

// (-2 + (1+ix)^s + (1-ix)^s) for small x by its even binomial series
// 2 sum_{m>=1} C(s, 2m) (-1)^m x^{2m}.
Complex binomial_pair_series(Complex s, double x) {
  const double x2 = x * x;
  Complex coeff = 1.0;  // C(s, 2m) built incrementally
  Complex sum{0.0, 0.0};
  double power = 1.0;
  for (int m = 1; m <= 20; ++m) {
    coeff *= (s - (2.0 * m - 2.0)) * (s - (2.0 * m - 1.0)) / ((2.0 * m - 1.0) * (2.0 * m));
    power *= -x2;
    const Complex term = 2.0 * coeff * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

Complex leading_terms(Complex k, std::int64_t n) {
  const double nd = static_cast<double>(n);
  return cpow(nd, k + 1.0) / (k + 1.0) + 0.5 * cpow(nd, k);
}

EvalResult combine(const EvalResult& zeta_part, const EvalResult& integral, Complex factor,
                   Complex offset) {
  EvalResult r;
  r.value = offset + zeta_part.value + factor * integral.value;
  r.err_estimate = zeta_part.err_estimate + std::abs(factor) * integral.err_estimate;
  r.evals_used = zeta_part.evals_used + integral.evals_used;
  r.truncation_point = integral.truncation_point;
  r.converged = zeta_part.converged && integral.converged;
  return r;
}

}  // namespace

Complex powersum_bruteforce(Complex k, std::int64_t n) {
  require_positive_n(n);
  detail::CompensatedSum sum;
  for (std::int64_t j = 1; j <= n; ++j) sum.add(cpow(static_cast<double>(j), k));
  return sum.value();
}

Rational faulhaber_odd_exact(int m, std::int64_t n) {
  if (m < 1 || m % 2 == 0) throw DomainError("faulhaber_bernoulli_odd: m must be odd and positive");
  require_positive_n(n);
  if (m + 1 > kMaxBernoulliIndex) {
    throw CapacityError("faulhaber_bernoulli_odd: m exceeds the Bernoulli table");
  }
  const BernoulliTable& table = shared_bernoulli_table();
  const int half = (m + 1) / 2;  // m = 2*half - 1

  auto factorial = [](int x) {
    cpp_int f = 1;
    for (int i = 2; i <= x; ++i) f *= i;
    return f;
  };
  auto power = [](std::int64_t base, int e) {
    cpp_int p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
  };

  Rational sum = 0;
  for (int j = 0; j < half; ++j) {
    sum += table[2 * j] * Rational(power(n, 2 * half - 2 * j)) /
           Rational(factorial(2 * j) * factorial(2 * half - 2 * j));
  }
  return Rational(power(n, m)) / 2 + Rational(factorial(m)) * sum;
}

Complex faulhaber_bernoulli_odd(int m, std::int64_t n) {
  return {static_cast<double>(faulhaber_odd_exact(m, n)), 0.0};
}

std::string_view to_string(TailForm form) {
  switch (form) {
    case TailForm::finite_sum: return "finite_sum";
    case TailForm::trig: return "trig";
    case TailForm::rational: return "rational";
  }
  return "unknown";
}

std::optional<TailForm> parse_tail_form(std::string_view name) {
  for (auto form : {TailForm::finite_sum, TailForm::trig, TailForm::rational}) {
    if (to_string(form) == name) return form;
  }
  return std::nullopt;
}

EvalResult zeta_even_tail(Complex k, Complex n, TailForm form, const QuadratureConfig& cfg) {
  if (form == TailForm::finite_sum) {
    if (!is_positive_integer(k)) {
      throw DomainError("zeta_even_tail: finite_sum needs a positive integer k");
    }
    if (n == Complex{0.0, 0.0}) throw DomainError("zeta_even_tail: n must be non-zero");
    const int kk = static_cast<int>(k.real());
    const BernoulliTable& table = shared_bernoulli_table();
    if (2 * (kk / 2) > table.max_index) {
      throw CapacityError("zeta_even_tail: k exceeds the Bernoulli table");
    }
    // (2 pi i n)^{-2j} = (-(2 pi n)^2)^{-j}
    const Complex base = -1.0 / ((kTwoPi * n) * (kTwoPi * n));
    Complex power = 1.0;
    Complex sum{0.0, 0.0};
    for (int j = 1; 2 * j <= kk; ++j) {
      power *= base;
      sum += power * table.zeta_even[j] / std::tgamma(kk - 2 * j + 1.0);
    }
    EvalResult r;
    r.value = sum;
    r.converged = true;
    return r;
  }

  const double sign = detail::real_part_sign(n);
  const Complex folded = sign * n;
  const Complex prefactor = -sign * kPi * n / (2.0 * std::exp(log_gamma(k + 1.0)));
  const Complex limit = k * (k - 1.0) / (2.0 * kPi * kPi * folded * folded);

  EvalResult integral;
  if (form == TailForm::trig) {
    const auto f = [&](double v) -> Complex {
      if (v < detail::kSmallAbscissa) return limit;
      const double tan_v = std::tan(v);
      const Complex kernel = csch_sq(kPi * folded * tan_v);
      if (kernel == Complex{0.0, 0.0}) return {0.0, 0.0};
      return (1.0 + tan_v * tan_v) * kernel * detail::continuation_factor_angle(k, v);
    };
    integral = integrate_finite(f, 0.0, 0.5 * kPi, cfg);
  } else {
    const auto f = [&](double t) {
      return detail::continuation_integrand(k, folded, Complex{0.0, 0.0}, t);
    };
    integral = integrate_semi_infinite(f, kTwoPi * folded.real(), detail::continuation_growth(k),
                                       detail::continuation_config(k, cfg));
  }
  integral.value *= prefactor;
  integral.err_estimate *= std::abs(prefactor);
  return integral;
}

EvalResult powersum_ac(Complex k, std::int64_t n, const QuadratureConfig& cfg) {
  detail::require_not_harmonic(k);
  require_positive_n(n);
  const EvalResult zeta_part = zeta_global(-k, cfg);
  const Complex s = k + 1.0;
  const EvalResult integral =
      detail::continuation_integral(s, Complex{static_cast<double>(n), 0.0}, cfg);
  return combine(zeta_part, integral, kPi / s, leading_terms(k, n));
}

EvalResult powersum_ac_alt(Complex k, std::int64_t n, const QuadratureConfig& cfg) {
  detail::require_not_harmonic(k);
  require_positive_n(n);
  const EvalResult zeta_part = zeta_global(-k, cfg);
  const Complex s = k + 1.0;
  const double nd = static_cast<double>(n);
  const double rate = kTwoPi * nd;
  const Complex log_scale = (k + 2.0) * std::log(nd);
  const double series_cutoff = 1e-3 / std::max(1.0, std::abs(s));

  // n^{k+2} (-2 + (1+ix)^s + (1-ix)^s) e^{-2 pi n x} / (1 - e^{-2 pi n x})^2
  const auto f = [&](double x) -> Complex {
    if (x < detail::kSmallAbscissa) {
      return -std::exp(log_scale) * s * (s - 1.0) / (rate * rate);
    }
    const Complex numerator = x < series_cutoff
                                  ? binomial_pair_series(s, x)
                                  : -2.0 + cpow(Complex{1.0, x}, s) + cpow(Complex{1.0, -x}, s);
    const double y = rate * x;
    const double denom = -std::expm1(-y);
    return numerator * std::exp(log_scale - y) / (denom * denom);
  };
  const EvalResult integral = integrate_semi_infinite(
      f, rate, detail::continuation_growth(s), detail::continuation_config(s, cfg));
  return combine(zeta_part, integral, -2.0 * kPi / s, leading_terms(k, n));
}

}  // namespace zetasum
