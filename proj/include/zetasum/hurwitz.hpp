// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_HURWITZ_HPP
#define ZETASUM_HURWITZ_HPP

#include <cstdint>

#include "zetasum/complex_kernel.hpp"
#include "zetasum/quadrature.hpp"

namespace zetasum {

/// Exponent and offset of a Hurwitz-type evaluation.
///
/// The integral representations are only validated for Re(b) > 0, so
/// construction rejects anything else. `unvalidated_any_b` lifts the check
/// for exploratory use; results off that half-plane carry no guarantee.
class HurwitzParams {
 public:
  HurwitzParams(Complex k, Complex b);
  static HurwitzParams unvalidated_any_b(Complex k, Complex b);

  Complex k() const { return k_; }
  Complex b() const { return b_; }

 private:
  HurwitzParams(Complex k, Complex b, bool checked);
  Complex k_;
  Complex b_;
};

/// zeta(-m, b) for integers m >= 0, as a finite sum over even zeta values:
/// -b^{m+1}/(m+1) + b^m/2 + 2 m! b^{m+1} sum_{j=1}^{floor((m+1)/2)}
///   (-1)^j (2 pi b)^{-2j} zeta(2j) / (m+1-2j)!.
/// Defined for any b != 0. Throws CapacityError when m + 1 > 120.
Complex hurwitz_neg_int(int m, Complex b);

/// zeta(k, b) = b^{1-k}/(k-1) + b^{-k}/2 + sgn(Re b) pi/(k-1) J(1-k, b), k != 1.
EvalResult hurwitz_global(const HurwitzParams& p, const QuadratureConfig& cfg = {});
EvalResult hurwitz_global(Complex k, Complex b, const QuadratureConfig& cfg = {});

/// zeta(k, b) by Euler-Maclaurin: N direct terms, the integral and end
/// corrections at N + b, then Bernoulli terms until they fall below 1e-17.
/// Independent of the integral path; used as an oracle. Re(b) > 0, k != 1.
Complex hurwitz_reference(Complex k, Complex b);

/// sum_{j=start}^n (j+b)^k by compensated direct summation; start is 0 or 1.
Complex hp_bruteforce(Complex k, Complex b, std::int64_t n, int start);

/// sum_{j=1}^n (j+b)^k from the shifted-power continuation, with the two
/// csch^2 terms at n+b and b integrated together. k != -1.
EvalResult hp_sum_ac(const HurwitzParams& p, std::int64_t n, const QuadratureConfig& cfg = {});
EvalResult hp_sum_ac(Complex k, Complex b, std::int64_t n, const QuadratureConfig& cfg = {});

/// sum_{j=0}^n (j+b)^k = (n+b)^{k+1}/(k+1) + (n+b)^k/2 + zeta(-k, b)
///   + sgn(Re b) pi/(k+1) J(k+1, n+b), with zeta(-k, b) from hurwitz_global.
EvalResult hp_sum_hurwitz(const HurwitzParams& p, std::int64_t n,
                          const QuadratureConfig& cfg = {});
EvalResult hp_sum_hurwitz(Complex k, Complex b, std::int64_t n, const QuadratureConfig& cfg = {});

}  // namespace zetasum

#endif  // ZETASUM_HURWITZ_HPP
