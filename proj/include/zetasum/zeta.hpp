// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_ZETA_HPP
#define ZETASUM_ZETA_HPP

#include <optional>
#include <string_view>

#include "zetasum/complex_kernel.hpp"
#include "zetasum/quadrature.hpp"

namespace zetasum {

enum class ZetaRepresentation { strip_pos, strip_neg, global, functional, reference };

std::string_view to_string(ZetaRepresentation repr);
std::optional<ZetaRepresentation> parse_zeta_representation(std::string_view name);

/// zeta(k) = 1/Gamma(k+1) int_0^inf t^k e^{-t} / (1 - e^{-t})^2 dt, Re(k) > 1.
/// This is the (0, 1) logarithmic integral after u = e^{-t}.
EvalResult zeta_strip_pos(Complex k, const QuadratureConfig& cfg = {});

/// zeta(k) = -2 (2 pi)^{k-1} / (k-1) sin(k pi / 2) int_0^inf t^{1-k} e^{-t} / (1 - e^{-t})^2 dt,
/// Re(k) < 0.
EvalResult zeta_strip_neg(Complex k, const QuadratureConfig& cfg = {});

/// zeta(k) = 1/(k-1) + 1/2 + pi/(k-1) J(1-k, 1), valid for every k != 1.
/// Points with |k - 1| < 1e-8 are refused with PoleError.
EvalResult zeta_global(Complex k, const QuadratureConfig& cfg = {});

/// zeta(-k) = 2 Gamma(k+1) (2 pi)^{-(k+1)} cos((k+1) pi / 2) zeta(k+1) with
/// zeta(k+1) from zeta_strip_pos. Requires Re(k) > 0.
EvalResult zeta_functional(Complex k, const QuadratureConfig& cfg = {});

/// Independent oracle: Borwein's accelerated alternating series for the
/// eta function, reflected through the functional equation for Re(k) < 0.
/// About 13 correct digits for |Im k| <= 20 and |k - 1| >= 0.1.
Complex zeta_reference(Complex k);

/// Dispatch on representation; `reference` reports a zero error estimate.
EvalResult evaluate_zeta(ZetaRepresentation repr, Complex k, const QuadratureConfig& cfg = {});

}  // namespace zetasum

#endif  // ZETASUM_ZETA_HPP
