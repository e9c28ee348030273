// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_TESTS_TEST_SUPPORT_HPP
#define ZETASUM_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>

namespace zetasum::testing {

/// |a - b| / max(|b|, tiny); falls back to absolute difference near zero.
inline double rel_diff(std::complex<double> a, std::complex<double> b) {
  const double scale = std::abs(b);
  const double diff = std::abs(a - b);
  return scale > 1e-300 ? diff / scale : diff;
}

}  // namespace zetasum::testing

#endif  // ZETASUM_TESTS_TEST_SUPPORT_HPP
