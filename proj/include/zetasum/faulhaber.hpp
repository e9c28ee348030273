// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_FAULHABER_HPP
#define ZETASUM_FAULHABER_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "zetasum/complex_kernel.hpp"
#include "zetasum/quadrature.hpp"

namespace zetasum {

/// Identifies one sum instance: exponent k, term count n, offset b.
struct SeriesParams {
  Complex k{0.0, 0.0};
  std::int64_t n = 1;
  Complex b{0.0, 0.0};
};

/// sum_{j=1}^n j^k by Neumaier-compensated direct summation.
Complex powersum_bruteforce(Complex k, std::int64_t n);

/// Classical odd-power Faulhaber formula, exact over the rationals:
/// n^m / 2 + m! sum_{j<(m+1)/2} B_{2j} n^{m+1-2j} / ((2j)! (m+1-2j)!).
Rational faulhaber_odd_exact(int m, std::int64_t n);

/// faulhaber_odd_exact rounded to double. m must be odd and positive.
Complex faulhaber_bernoulli_odd(int m, std::int64_t n);

enum class TailForm { finite_sum, trig, rational };

std::string_view to_string(TailForm form);
std::optional<TailForm> parse_tail_form(std::string_view name);

/// sum_{j=1}^{floor(k/2)} (2 pi i n)^{-2j} zeta(2j) / (k-2j)!, in one of three
/// equivalent forms:
///   finite_sum  the sum itself (k a positive integer),
///   trig        -sgn(Re n) pi n / (2 k!) int_0^{pi/2} (sec v csch(pi n tan v))^2
///                 (1 - cos(k v) / cos(v)^k) dv,
///   rational    the same integral after t = tan v, over (0, inf).
/// The integral forms need Re(n) != 0.
EvalResult zeta_even_tail(Complex k, Complex n, TailForm form, const QuadratureConfig& cfg = {});

/// sum_{j=1}^n j^k = n^{k+1}/(k+1) + n^k/2 + zeta(-k) + pi/(k+1) J(k+1, n),
/// for every complex k except -1. zeta(-k) comes from zeta_global.
EvalResult powersum_ac(Complex k, std::int64_t n, const QuadratureConfig& cfg = {});

/// Same sum with the exponential-kernel integral
/// -2 pi n^{k+2}/(k+1) int_0^inf (-2 + (1+ix)^{k+1} + (1-ix)^{k+1})
///   e^{-2 pi n x} / (1 - e^{-2 pi n x})^2 dx.
EvalResult powersum_ac_alt(Complex k, std::int64_t n, const QuadratureConfig& cfg = {});

namespace detail {

/// Rejects k within 1e-8 of -1 with SingularParameterError.
void require_not_harmonic(Complex k);

/// Neumaier summation of complex terms.
class CompensatedSum {
 public:
  void add(Complex term);
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x);
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

}  // namespace detail

}  // namespace zetasum

#endif  // ZETASUM_FAULHABER_HPP
