// SPDX-License-Identifier: Apache-2.0

#include "zetasum/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>

#include "zetasum/complex_kernel.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/faulhaber.hpp"
#include "zetasum/hurwitz.hpp"
#include "zetasum/zeta.hpp"

namespace zetasum {

namespace {

std::string describe(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

// Collects one invariant. A point's deviation is the larger of the measured
// difference and the error the evaluator itself claims, both scaled by
// max(|expected|, floor); non-convergence fails the point outright.
class Check {
 public:
  Check(std::string module, std::string name, double tol) {
    result_.module = std::move(module);
    result_.name = std::move(name);
    result_.tolerance = tol;
    result_.passed = true;
  }

  void compare(Complex got, Complex want, const std::string& where, double floor = 1e-300) {
    record(std::abs(got - want) / std::max(std::abs(want), floor), where);
  }

  void compare(const EvalResult& got, Complex want, const std::string& where,
               double floor = 1e-300) {
    const double scale = std::max(std::abs(want), floor);
    if (!got.converged) {
      fail(where + ": not converged");
      return;
    }
    record(std::max(std::abs(got.value - want), got.err_estimate) / scale, where);
  }

  void record(double deviation, const std::string& where) {
    ++result_.points;
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    result_.max_deviation = std::max(result_.max_deviation, deviation);
    if (deviation > result_.tolerance && result_.passed) {
      result_.passed = false;
      char buf[48];
      std::snprintf(buf, sizeof buf, " deviates by %.3g", deviation);
      result_.detail = where + buf;
    }
  }

  void fail(const std::string& why) {
    ++result_.points;
    result_.max_deviation = std::numeric_limits<double>::infinity();
    if (result_.passed) result_.detail = why;
    result_.passed = false;
  }

  template <class Error, class F>
  void expect_throw(F&& f, const std::string& where) {
    try {
      f();
    } catch (const Error&) {
      ++result_.points;
      return;
    } catch (const std::exception& e) {
      fail(where + ": wrong error: " + e.what());
      return;
    }
    fail(where + ": no error raised");
  }

  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

class Runner {
 public:
  explicit Runner(SelftestReport& report) : report_(report) {}

  void add(const char* module, const char* name, double tol, const std::function<void(Check&)>& body) {
    Check check(module, name, tol);
    try {
      body(check);
    } catch (const std::exception& e) {
      check.fail(std::string("threw: ") + e.what());
    }
    report_.checks.push_back(check.finish());
  }

 private:
  SelftestReport& report_;
};

std::vector<std::int64_t> span(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void kernel_checks(Runner& run, bool full) {
  run.add("complex_kernel", "bernoulli recurrence is exact", 0.0, [&](Check& c) {
    const BernoulliTable& t = shared_bernoulli_table();
    const int top = full ? t.max_index : 40;
    for (int big_m = 2; big_m <= top; ++big_m) {
      Rational acc = 0;
      boost::multiprecision::cpp_int binom = 1;
      for (int m = 0; m <= big_m; ++m) {
        acc += Rational(binom) * (m == 1 ? t.b1 : t[m]);
        binom = binom * (big_m + 1 - m) / (m + 1);
      }
      c.record(acc == 0 ? 0.0 : 1.0, "M=" + std::to_string(big_m));
    }
  });

  run.add("complex_kernel", "zeta_even against partial sums", 1e-10, [&](Check& c) {
    const BernoulliTable& t = shared_bernoulli_table();
    const int terms = full ? 1000000 : 20000;
    const int top = full ? t.max_index / 2 : 10;
    for (int j = 1; j <= top; ++j) {
      const double p = 2.0 * j;
      detail::CompensatedSum sum;
      for (int m = terms; m >= 1; --m) sum.add(std::pow(static_cast<double>(m), -p));
      const double n = terms;
      const double tail = std::pow(n, 1.0 - p) / (p - 1.0) - 0.5 * std::pow(n, -p) +
                          p * std::pow(n, -p - 1.0) / 12.0;
      c.compare(t.zeta_even[j], sum.value() + tail, "j=" + std::to_string(j));
    }
  });

  run.add("complex_kernel", "log_gamma recurrence", 1e-12, [&](Check& c) {
    const double step = full ? 0.25 : 1.0;
    for (double re = 0.5; re <= 10.0; re += step) {
      for (double im = -5.0; im <= 5.0; im += 2.0 * step) {
        const Complex z{re, im};
        const Complex lhs = log_gamma(z + 1.0);
        c.compare(lhs, log_gamma(z) + principal_log(z), "z=" + describe(z), 1.0);
      }
    }
  });

  run.add("complex_kernel", "csch_sq against 1/sinh^2", 1e-12, [&](Check& c) {
    for (double re = 0.01; re < 300.0; re *= 1.7) {
      for (const double im : {-2.5, 0.0, 1.3}) {
        const Complex z{re, im};
        const Complex sh = std::sinh(z);
        c.compare(csch_sq(z), 1.0 / (sh * sh), "z=" + describe(z));
      }
    }
  });
}

void quadrature_checks(Runner& run, const QuadratureConfig& cfg) {
  run.add("quadrature", "finite integrals with endpoint singularities", 1e-9, [&](Check& c) {
    c.compare(integrate_finite([](double x) { return Complex{1.0 / std::sqrt(x), 0.0}; }, 0.0, 1.0, cfg),
              2.0, "1/sqrt(x)");
    c.compare(integrate_finite([](double x) { return Complex{std::log(x), 0.0}; }, 0.0, 1.0, cfg),
              -1.0, "log(x)");
    c.compare(integrate_finite([](double x) { return Complex{1.0 / (1.0 + x * x), 0.0}; }, 0.0, 1.0,
                               cfg),
              kPi / 4.0, "1/(1+x^2)");
    c.compare(integrate_finite([](double x) { return std::exp(Complex{0.0, x}); }, 0.0, 1.0, cfg),
              Complex{std::sin(1.0), 1.0 - std::cos(1.0)}, "e^{ix}");
  });

  run.add("quadrature", "semi-infinite integrals", 1e-9, [&](Check& c) {
    c.compare(integrate_semi_infinite([](double t) { return Complex{std::exp(-t), 0.0}; }, 1.0, 0.0,
                                      cfg),
              1.0, "e^-t");
    c.compare(integrate_semi_infinite(
                  [](double t) { return Complex{t * std::exp(-2.0 * t), 0.0}; }, 2.0, 1.0, cfg),
              0.25, "t e^-2t");
    c.compare(integrate_semi_infinite(
                  [](double t) {
                    if (t < 1e-12) return Complex{1.0 / (kPi * kPi), 0.0};
                    return t * t * csch_sq(kPi * t);
                  },
                  kTwoPi, 2.0, cfg),
              1.0 / (6.0 * kPi), "t^2 csch^2(pi t)");
  });

  run.add("quadrature", "additivity over a split interval", 1e-9, [&](Check& c) {
    const auto f = [](double x) { return Complex{std::pow(x, -0.9), 0.0}; };
    const EvalResult whole = integrate_finite(f, 0.0, 1.0, cfg);
    for (const double mid : {0.1, 0.37, 0.9}) {
      const Complex parts =
          integrate_finite(f, 0.0, mid, cfg).value + integrate_finite(f, mid, 1.0, cfg).value;
      c.compare(parts, whole.value, "split at " + std::to_string(mid));
    }
  });
}

void zeta_checks(Runner& run, const QuadratureConfig& cfg, bool full) {
  run.add("zeta", "special values", 1e-9, [&](Check& c) {
    c.compare(zeta_global(2.0, cfg), kPi * kPi / 6.0, "k=2");
    c.compare(zeta_global(-1.0, cfg), -1.0 / 12.0, "k=-1");
    c.compare(zeta_strip_pos(4.0, cfg), std::pow(kPi, 4) / 90.0, "strip_pos k=4");
    c.compare(zeta_strip_neg(-1.0, cfg), -1.0 / 12.0, "strip_neg k=-1");
  });

  run.add("zeta", "zeta(0) = -1/2", 1e-12, [&](Check& c) {
    const EvalResult r = zeta_global(0.0, cfg);
    c.record(std::abs(r.value + 0.5), "k=0");
  });

  run.add("zeta", "trivial zeros", 1e-9, [&](Check& c) {
    for (int m = 1; m <= 5; ++m) {
      c.compare(zeta_global(-2.0 * m, cfg), 0.0, "k=" + std::to_string(-2 * m), 1.0);
    }
  });

  const std::vector<double> ims = full ? std::vector<double>{0.0, 1.0, -1.0, 3.0, -3.0}
                                       : std::vector<double>{0.0, 1.0, -3.0};
  run.add("zeta", "strip_pos agrees with global", 1e-8, [&](Check& c) {
    for (const double im : ims) {
      for (const double re : {1.5, 2.0, 3.0, 5.0}) {
        const Complex k{re, im};
        c.compare(zeta_strip_pos(k, cfg), zeta_global(k, cfg).value, "k=" + describe(k));
      }
    }
  });

  run.add("zeta", "strip_neg agrees with global", 1e-8, [&](Check& c) {
    for (const double im : ims) {
      for (const double re : {-0.5, -2.5, -4.0}) {
        const Complex k{re, im};
        // k = -4 is a trivial zero; compare absolutely there
        c.compare(zeta_strip_neg(k, cfg), zeta_global(k, cfg).value, "k=" + describe(k), 1e-7);
      }
    }
  });

  run.add("zeta", "critical strip against the reference", 1e-8, [&](Check& c) {
    const Complex points[] = {{0.5, 0.5},  {0.5, -2.0}, {0.25, 1.0}, {0.25, -3.0}, {0.75, 2.5},
                              {0.75, -0.5}, {0.1, 3.0},  {0.9, -1.5}, {0.5, 3.0},   {0.6, 0.0}};
    for (const Complex k : points) c.compare(zeta_global(k, cfg), zeta_reference(k), "k=" + describe(k));
  });

  run.add("zeta", "global against the reference", 1e-8, [&](Check& c) {
    const std::vector<double> res = full ? std::vector<double>{-5.0, -3.5, -2.0, -0.75, 1.5, 3.0, 5.0}
                                         : std::vector<double>{-3.5, -0.75, 3.0};
    for (const double re : res) {
      for (const double im : {-3.0, 0.5, 2.0}) {
        const Complex k{re, im};
        c.compare(zeta_global(k, cfg), zeta_reference(k), "k=" + describe(k));
      }
    }
  });

  run.add("zeta", "functional equation", 1e-8, [&](Check& c) {
    for (const double k : {0.5, 1.0, 3.0, 4.5}) {
      c.compare(zeta_functional(k, cfg), zeta_global(-k, cfg).value, "k=" + std::to_string(k), 1.0);
    }
  });

  run.add("zeta", "pole at k=1 is rejected", 0.0, [&](Check& c) {
    c.expect_throw<PoleError>([&] { zeta_global(1.0, cfg); }, "zeta k=1");
    c.expect_throw<PoleError>([&] { hurwitz_global(1.0, 2.0, cfg); }, "hurwitz k=1");
    c.expect_throw<DomainError>([&] { hurwitz_global(2.0, -0.5, cfg); }, "hurwitz Re(b)<0");
  });
}

void faulhaber_checks(Runner& run, const QuadratureConfig& cfg, bool full) {
  run.add("faulhaber", "odd Faulhaber formula is exact", 0.0, [&](Check& c) {
    for (const int m : {1, 3, 5, 7, 9}) {
      boost::multiprecision::cpp_int sum = 0;
      for (std::int64_t n = 1; n <= 50; ++n) {
        sum += boost::multiprecision::pow(boost::multiprecision::cpp_int(n), m);
        c.record(faulhaber_odd_exact(m, n) == Rational(sum) ? 0.0 : 1.0,
                 "m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  });

  const std::vector<std::int64_t> ns = full ? span(1, 20) : std::vector<std::int64_t>{1, 7, 20};
  run.add("faulhaber", "powersum_ac matches brute force for integer k", 1e-9, [&](Check& c) {
    for (int k = 0; k <= 8; ++k) {
      for (const std::int64_t n : ns) {
        c.compare(powersum_ac(k, n, cfg), powersum_bruteforce(k, n),
                  "k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  });
  run.add("faulhaber", "powersum_ac_alt matches brute force for integer k", 1e-9, [&](Check& c) {
    for (int k = 0; k <= 8; ++k) {
      for (const std::int64_t n : ns) {
        c.compare(powersum_ac_alt(k, n, cfg), powersum_bruteforce(k, n),
                  "k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  });

  const Complex exponents[] = {{-2.0, 0.0}, {-3.0, 0.0}, {-0.5, 0.0}, {0.5, 0.0}, {2.0, 1.0}};
  const std::vector<std::int64_t> short_ns = full ? span(1, 10) : std::vector<std::int64_t>{1, 4, 10};
  run.add("faulhaber", "powersum_ac for negative and complex k", 1e-9, [&](Check& c) {
    for (const Complex k : exponents) {
      for (const std::int64_t n : short_ns) {
        c.compare(powersum_ac(k, n, cfg), powersum_bruteforce(k, n),
                  "k=" + describe(k) + " n=" + std::to_string(n));
      }
    }
  });
  run.add("faulhaber", "powersum_ac_alt for negative and complex k", 1e-9, [&](Check& c) {
    for (const Complex k : exponents) {
      for (const std::int64_t n : short_ns) {
        c.compare(powersum_ac_alt(k, n, cfg), powersum_bruteforce(k, n),
                  "k=" + describe(k) + " n=" + std::to_string(n));
      }
    }
  });

  run.add("faulhaber", "telescoping", 1e-8, [&](Check& c) {
    for (const Complex k : {Complex{0.5, 0.0}, Complex{2.0, 1.0}, Complex{-3.0, 0.0}, Complex{kPi, 0.0}}) {
      for (const std::int64_t n : {2, 5, 10}) {
        const Complex step = powersum_ac(k, n, cfg).value - powersum_ac(k, n - 1, cfg).value;
        c.compare(step, cpow(static_cast<double>(n), k), "k=" + describe(k) + " n=" + std::to_string(n));
      }
    }
  });

  run.add("faulhaber", "tail trig and rational forms agree", 1e-9, [&](Check& c) {
    for (const Complex k : {Complex{2.0, 0.0}, Complex{3.0, 0.0}, Complex{4.0, 0.0}, Complex{2.5, 1.0}}) {
      for (const Complex n : {Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{1.0, 1.0}}) {
        c.compare(zeta_even_tail(k, n, TailForm::trig, cfg),
                  zeta_even_tail(k, n, TailForm::rational, cfg).value,
                  "k=" + describe(k) + " n=" + describe(n));
      }
    }
  });

  run.add("faulhaber", "tail finite sum agrees for integer k", 1e-9, [&](Check& c) {
    for (const double k : {2.0, 3.0, 4.0, 7.0}) {
      for (const Complex n : {Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{1.0, 1.0}}) {
        c.compare(zeta_even_tail(k, n, TailForm::rational, cfg),
                  zeta_even_tail(k, n, TailForm::finite_sum, cfg).value,
                  "k=" + std::to_string(k) + " n=" + describe(n));
      }
    }
  });

  run.add("faulhaber", "harmonic point is rejected", 0.0, [&](Check& c) {
    c.expect_throw<SingularParameterError>([&] { powersum_ac(-1.0, 5, cfg); }, "powersum_ac");
    c.expect_throw<SingularParameterError>([&] { powersum_ac_alt(-1.0, 5, cfg); }, "powersum_ac_alt");
    c.expect_throw<SingularParameterError>([&] { hp_sum_ac(-1.0, 0.5, 5, cfg); }, "hp_sum_ac");
  });
}

void hurwitz_checks(Runner& run, const QuadratureConfig& cfg, bool full) {
  const Complex offsets[] = {{0.4, 0.0}, {1.0, 0.0}, {2.5, 0.0}, {1.0, 1.0}};
  run.add("hurwitz", "negative integers match the finite formula", 1e-9, [&](Check& c) {
    for (int m = 0; m <= 5; ++m) {
      for (const Complex b : offsets) {
        // zeta(-2m, 1) vanishes; floor the scale there
        c.compare(hurwitz_global(static_cast<double>(-m), b, cfg), hurwitz_neg_int(m, b),
                  "m=" + std::to_string(m) + " b=" + describe(b), 1e-6);
      }
    }
  });

  run.add("hurwitz", "b = 1 reduces to Riemann zeta", 1e-8, [&](Check& c) {
    for (const Complex k : {Complex{-3.0, 0.0}, Complex{-0.5, 0.0}, Complex{0.5, 2.0}, Complex{2.0, 0.0},
                            Complex{4.0, 0.0}}) {
      c.compare(hurwitz_global(k, 1.0, cfg), zeta_global(k, cfg).value, "k=" + describe(k));
    }
  });

  run.add("hurwitz", "recurrence in b", 1e-8, [&](Check& c) {
    for (const Complex k : {Complex{2.0, 0.0}, Complex{-1.5, 0.0}, Complex{1.5, 1.0}}) {
      for (const Complex b : {Complex{0.3, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 1.0}}) {
        const Complex diff = hurwitz_global(k, b, cfg).value - hurwitz_global(k, b + 1.0, cfg).value;
        c.compare(diff, cpow(b, -k), "k=" + describe(k) + " b=" + describe(b));
      }
    }
  });

  run.add("hurwitz", "multiplication theorem at b = 1/2", 1e-8, [&](Check& c) {
    for (const double k : {2.0, 3.0, -0.5}) {
      c.compare(hurwitz_global(k, 0.5, cfg), (std::pow(2.0, k) - 1.0) * zeta_global(k, cfg).value,
                "k=" + std::to_string(k));
    }
  });

  run.add("hurwitz", "sum and zeta bridge", 1e-8, [&](Check& c) {
    for (const double k : {2.0, 0.5, -3.0}) {
      for (const std::int64_t n : {1, 5, 10}) {
        const Complex rhs =
            zeta_global(-k, cfg).value - hurwitz_global(-k, static_cast<double>(n + 1), cfg).value;
        c.compare(powersum_ac(k, n, cfg), rhs, "k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  });

  run.add("hurwitz", "global against the Euler-Maclaurin reference", 1e-8, [&](Check& c) {
    for (const Complex k : {Complex{2.0, 1.0}, Complex{-1.5, 0.5}, Complex{0.5, -2.0}}) {
      for (const Complex b : {Complex{0.3, 0.0}, Complex{2.0, -1.0}}) {
        c.compare(hurwitz_global(k, b, cfg), hurwitz_reference(k, b),
                  "k=" + describe(k) + " b=" + describe(b));
      }
    }
  });

  const std::vector<std::int64_t> ns = full ? span(1, 15) : std::vector<std::int64_t>{1, 8, 15};
  const std::vector<int> ks = full ? std::vector<int>{-3, -2, 0, 1, 2, 3, 4, 5}
                                   : std::vector<int>{-3, 0, 2, 5};
  const Complex hp_offsets[] = {{0.3, 0.0}, {1.0, 0.0}, {2.0, 0.5}};
  run.add("hurwitz", "hp_sum_ac matches brute force", 1e-9, [&](Check& c) {
    for (const int k : ks) {
      for (const Complex b : hp_offsets) {
        for (const std::int64_t n : ns) {
          c.compare(hp_sum_ac(static_cast<double>(k), b, n, cfg), hp_bruteforce(k, b, n, 1),
                    "k=" + std::to_string(k) + " b=" + describe(b) + " n=" + std::to_string(n));
        }
      }
    }
  });
  run.add("hurwitz", "hp_sum_hurwitz matches brute force", 1e-9, [&](Check& c) {
    for (const int k : ks) {
      for (const Complex b : hp_offsets) {
        for (const std::int64_t n : ns) {
          c.compare(hp_sum_hurwitz(static_cast<double>(k), b, n, cfg), hp_bruteforce(k, b, n, 0),
                    "k=" + std::to_string(k) + " b=" + describe(b) + " n=" + std::to_string(n));
        }
      }
    }
  });
}

}  // namespace

std::string_view to_string(SelftestLevel level) {
  return level == SelftestLevel::quick ? "quick" : "full";
}

std::optional<SelftestLevel> parse_selftest_level(std::string_view name) {
  if (name == "quick") return SelftestLevel::quick;
  if (name == "full") return SelftestLevel::full;
  return std::nullopt;
}

int SelftestReport::failed() const {
  int n = 0;
  for (const CheckResult& c : checks) n += c.passed ? 0 : 1;
  return n;
}

SelftestReport run_selftest(SelftestLevel level, const QuadratureConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SelftestReport report;
  report.level = level;
  const bool full = level == SelftestLevel::full;
  Runner run(report);
  kernel_checks(run, full);
  quadrature_checks(run, cfg);
  zeta_checks(run, cfg, full);
  faulhaber_checks(run, cfg, full);
  hurwitz_checks(run, cfg, full);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace zetasum
