// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_COMPLEX_KERNEL_HPP
#define ZETASUM_COMPLEX_KERNEL_HPP

#include <complex>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetasum {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Principal logarithm with imaginary part in (-pi, pi]. A negative real
/// argument carrying a -0.0 imaginary part still maps to +i*pi.
Complex principal_log(Complex z);

/// exp(w * Log z) on the principal branch. Throws DomainError for
/// z = 0 with Re(w) <= 0; 0^w = 0 when Re(w) > 0.
Complex cpow(Complex z, Complex w);

/// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z);

/// sin(pi z) and cos(pi z) with the real part reduced exactly, so that
/// integer and half-integer real arguments give exact zeros.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

/// Principal branch of log Gamma(z), continuous on C \ (-inf, 0].
/// Lanczos (g = 7, 9 terms) for Re(z) >= 0.5, reflection below.
/// Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

/// csch^2(z) evaluated as 4 e^{-2z} / (1 - e^{-2z})^2. Requires Re(z) > 0.
Complex csch_sq(Complex z);

/// exp(log_scale) * csch^2(z), folded into a single exponential so that
/// large scale factors and the e^{-2z} decay never overflow separately.
Complex scaled_csch_sq(Complex log_scale, Complex z);

/// 1 - e^a cos(b), accurate when a and b are both small.
Complex one_minus_exp_cos(Complex a, Complex b);

/// Exact Bernoulli numbers and the even zeta values derived from them.
///
/// `values[m]` holds B_m for even m and zero for odd m; B_1 = -1/2 is kept
/// in `b1` so the even/odd split stays uniform. `zeta_even[j]` is zeta(2j)
/// for 0 <= 2j <= max_index (zeta_even[0] = zeta(0) = -1/2).
struct BernoulliTable {
  int max_index = 0;
  std::vector<Rational> values;
  Rational b1{-1, 2};
  std::vector<Complex> zeta_even;

  const Rational& operator[](int m) const { return values.at(static_cast<std::size_t>(m)); }
};

inline constexpr int kMaxBernoulliIndex = 120;

/// Builds B_0..B_max_index from sum_{m=0}^{M} C(M+1, m) B_m = 0.
/// max_index must be even and in [2, 120]; above 120 throws CapacityError.
BernoulliTable bernoulli_table(int max_index);

/// Process-wide table up to kMaxBernoulliIndex, built on first use.
const BernoulliTable& shared_bernoulli_table();

}  // namespace zetasum

#endif  // ZETASUM_COMPLEX_KERNEL_HPP
