// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "zetasum/complex_kernel.hpp"
#include "zetasum/errors.hpp"

namespace zetasum {

namespace {

using boost::multiprecision::cpp_int;
using Wide = boost::multiprecision::cpp_dec_float_50;

// Row M+1 of Pascal's triangle.
std::vector<cpp_int> binomial_row(int n) {
  std::vector<cpp_int> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    row[m] = row[m - 1] * (n - m + 1) / m;
  }
  return row;
}

}  // namespace

BernoulliTable bernoulli_table(int max_index) {
  if (max_index > kMaxBernoulliIndex) {
    throw CapacityError("bernoulli_table: max_index " + std::to_string(max_index) +
                        " exceeds the supported limit " + std::to_string(kMaxBernoulliIndex));
  }
  if (max_index < 2 || max_index % 2 != 0) {
    throw DomainError("bernoulli_table: max_index must be even and >= 2");
  }

  // Full sequence with B_1 = -1/2 so the recurrence runs unmodified.
  std::vector<Rational> b(static_cast<std::size_t>(max_index) + 1);
  b[0] = 1;
  for (int big_m = 1; big_m <= max_index; ++big_m) {
    if (big_m > 1 && big_m % 2 == 1) {
      b[big_m] = 0;
      continue;
    }
    const auto row = binomial_row(big_m + 1);
    Rational acc = 0;
    for (int m = 0; m < big_m; ++m) acc += Rational(row[m]) * b[m];
    b[big_m] = -acc / (big_m + 1);
  }

  BernoulliTable table;
  table.max_index = max_index;
  table.b1 = b[1];
  b[1] = 0;
  table.values = std::move(b);

  // zeta(2j) = (-1)^{j+1} B_{2j} (2 pi)^{2j} / (2 (2j)!), carried in 50 digits
  // so the rounded double is within an ulp even at j = 60.
  const Wide two_pi = boost::math::constants::two_pi<Wide>();
  const Wide two_pi_sq = two_pi * two_pi;
  Wide power = 1;
  Rational factorial = 1;
  table.zeta_even.reserve(static_cast<std::size_t>(max_index / 2) + 1);
  for (int j = 0; 2 * j <= max_index; ++j) {
    if (j > 0) {
      factorial *= (2 * j - 1) * (2 * j);
      power *= two_pi_sq;
    }
    const Rational ratio = table.values[2 * j] / (2 * factorial);
    const Wide exact_ratio = Wide(numerator(ratio)) / Wide(denominator(ratio));
    const Wide value = (j % 2 == 0 ? -1 : 1) * exact_ratio * power;
    table.zeta_even.emplace_back(static_cast<double>(value), 0.0);
  }
  return table;
}

const BernoulliTable& shared_bernoulli_table() {
  static const BernoulliTable table = bernoulli_table(kMaxBernoulliIndex);
  return table;
}

}  // namespace zetasum
