// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/faulhaber.hpp"

using namespace zetasum;
using zetasum::testing::rel_diff;

TEST_CASE("powersum_bruteforce") {
  CHECK(powersum_bruteforce(3.0, 10) == Complex{3025.0, 0.0});
  CHECK(powersum_bruteforce(2.0, 5) == Complex{55.0, 0.0});
  const double roots = 1.0 + std::sqrt(2.0) + std::sqrt(3.0) + 2.0;
  CHECK(rel_diff(powersum_bruteforce(0.5, 4), roots) < 1e-15);
  CHECK(roots == doctest::Approx(6.1462643699).epsilon(1e-10));
}

TEST_CASE("faulhaber_bernoulli_odd") {
  CHECK(faulhaber_bernoulli_odd(1, 100) == Complex{5050.0, 0.0});
  CHECK(faulhaber_bernoulli_odd(3, 10) == Complex{3025.0, 0.0});
  CHECK(faulhaber_bernoulli_odd(5, 4) == Complex{1300.0, 0.0});
  CHECK_THROWS_AS(faulhaber_bernoulli_odd(4, 4), DomainError);
  CHECK_THROWS_AS(faulhaber_bernoulli_odd(-1, 4), DomainError);
  CHECK_THROWS_AS(faulhaber_bernoulli_odd(3, 0), DomainError);
}

TEST_CASE("odd Faulhaber is exact against integer sums") {
  for (const int m : {1, 3, 5, 7, 9}) {
    boost::multiprecision::cpp_int sum = 0;
    for (std::int64_t n = 1; n <= 50; ++n) {
      sum += boost::multiprecision::pow(boost::multiprecision::cpp_int(n), m);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(faulhaber_odd_exact(m, n) == Rational(sum));
    }
  }
}

TEST_CASE("zeta_even_tail") {
  const QuadratureConfig cfg;
  const double expected = -1.0 / 24.0;
  CHECK(rel_diff(zeta_even_tail(2.0, 1.0, TailForm::finite_sum, cfg).value, expected) < 1e-15);
  CHECK(rel_diff(zeta_even_tail(2.0, 1.0, TailForm::rational, cfg).value, expected) <= 1e-9);
  CHECK(rel_diff(zeta_even_tail(2.0, 1.0, TailForm::trig, cfg).value, expected) <= 1e-9);
  CHECK(rel_diff(zeta_even_tail(3.0, 1.0, TailForm::finite_sum, cfg).value, expected) < 1e-15);
  CHECK(rel_diff(zeta_even_tail(3.0, 1.0, TailForm::rational, cfg).value, expected) <= 1e-9);

  CHECK_THROWS_AS(zeta_even_tail(2.0, Complex{0.0, 1.0}, TailForm::rational, cfg), DomainError);
  CHECK_THROWS_AS(zeta_even_tail(2.5, 1.0, TailForm::finite_sum, cfg), DomainError);
  CHECK(parse_tail_form("trig") == TailForm::trig);
  CHECK_FALSE(parse_tail_form("polar").has_value());
}

TEST_CASE("tail forms agree") {
  const QuadratureConfig cfg;
  for (const Complex k : {Complex{2.0, 0.0}, Complex{3.0, 0.0}, Complex{4.0, 0.0}, Complex{2.5, 1.0}}) {
    for (const Complex n : {Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{1.0, 1.0}}) {
      CAPTURE(k);
      CAPTURE(n);
      const Complex trig = zeta_even_tail(k, n, TailForm::trig, cfg).value;
      const Complex rational = zeta_even_tail(k, n, TailForm::rational, cfg).value;
      CHECK(rel_diff(trig, rational) <= 1e-9);
      if (k.imag() == 0.0 && k.real() == std::floor(k.real())) {
        CHECK(rel_diff(zeta_even_tail(k, n, TailForm::finite_sum, cfg).value, rational) <= 1e-9);
      }
    }
  }
}

TEST_CASE("powersum_ac examples") {
  const QuadratureConfig cfg;
  CHECK(std::abs(powersum_ac(3.0, 10, cfg).value - 3025.0) <= 1e-6);
  CHECK(rel_diff(powersum_ac(0.0, 7, cfg).value, 7.0) <= 1e-12);
  CHECK(rel_diff(powersum_ac(0.5, 4, cfg).value, powersum_bruteforce(0.5, 4)) <= 1e-9);

  CHECK(rel_diff(powersum_ac_alt(2.0, 5, cfg).value, 55.0) <= 1e-9);
  CHECK(rel_diff(powersum_ac_alt(3.0, 10, cfg).value, 3025.0) <= 1e-9);
  CHECK(rel_diff(powersum_ac_alt(-2.0, 3, cfg).value, 49.0 / 36.0) <= 1e-9);
}

TEST_CASE("harmonic point is rejected") {
  const QuadratureConfig cfg;
  CHECK_THROWS_AS(powersum_ac(-1.0, 5, cfg), SingularParameterError);
  CHECK_THROWS_AS(powersum_ac_alt(-1.0, 5, cfg), SingularParameterError);
  CHECK_THROWS_AS(powersum_ac(Complex{-1.0, 5e-9}, 5, cfg), SingularParameterError);
  CHECK_THROWS_AS(powersum_ac(2.0, 0, cfg), DomainError);
  try {
    powersum_ac(-1.0, 3, cfg);
  } catch (const SingularParameterError& e) {
    CHECK(std::string(e.what()).find("k=-1") != std::string::npos);
  }
}

TEST_CASE("both forms match brute force for integer exponents") {
  const QuadratureConfig cfg;
  double worst = 0.0;
  for (int k = 0; k <= 8; ++k) {
    for (std::int64_t n = 1; n <= 20; ++n) {
      const Complex exact = powersum_bruteforce(k, n);
      worst = std::max(worst, rel_diff(powersum_ac(k, n, cfg).value, exact));
      worst = std::max(worst, rel_diff(powersum_ac_alt(k, n, cfg).value, exact));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("negative and complex exponents") {
  const QuadratureConfig cfg;
  double worst = 0.0;
  for (const Complex k : {Complex{-2.0, 0.0}, Complex{-3.0, 0.0}, Complex{-0.5, 0.0},
                          Complex{0.5, 0.0}, Complex{2.0, 1.0}}) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const Complex exact = powersum_bruteforce(k, n);
      const double ac = rel_diff(powersum_ac(k, n, cfg).value, exact);
      const double alt = rel_diff(powersum_ac_alt(k, n, cfg).value, exact);
      CHECK(ac <= 1e-9);
      CHECK(alt <= 1e-9);
      worst = std::max({worst, ac, alt});
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("telescoping") {
  const QuadratureConfig cfg;
  for (const Complex k : {Complex{0.5, 0.0}, Complex{2.0, 1.0}, Complex{-3.0, 0.0}, Complex{kPi, 0.0}}) {
    for (const std::int64_t n : {2, 5, 10}) {
      CAPTURE(k);
      CAPTURE(n);
      const Complex step = powersum_ac(k, n, cfg).value - powersum_ac(k, n - 1, cfg).value;
      CHECK(rel_diff(step, cpow(static_cast<double>(n), k)) <= 1e-8);
    }
  }
}

TEST_CASE("large n stays finite") {
  const QuadratureConfig cfg;
  for (const std::int64_t n : {200, 1000}) {
    CAPTURE(n);
    const EvalResult r = powersum_ac(1.5, n, cfg);
    CHECK(std::isfinite(r.value.real()));
    CHECK(rel_diff(r.value, powersum_bruteforce(1.5, n)) <= 1e-9);
    CHECK(rel_diff(powersum_ac_alt(1.5, n, cfg).value, powersum_bruteforce(1.5, n)) <= 1e-9);
  }
}
