// SPDX-License-Identifier: Apache-2.0
//
// Acceptance criteria 1-10. One line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "zetasum/errors.hpp"
#include "zetasum/faulhaber.hpp"
#include "zetasum/hurwitz.hpp"
#include "zetasum/selftest.hpp"
#include "zetasum/zeta.hpp"

using namespace zetasum;

namespace {

using Clock = std::chrono::steady_clock;

const QuadratureConfig kCfg;

struct SlowestCall {
  double ms = 0.0;
  std::string what;
  int calls = 0;
} slowest;

// Every evaluator call goes through here so criterion 10 sees all of them.
EvalResult timed(const std::string& what, const std::function<EvalResult()>& f) {
  const auto start = Clock::now();
  EvalResult r = f();
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  ++slowest.calls;
  if (ms > slowest.ms) {
    slowest.ms = ms;
    slowest.what = what;
  }
  return r;
}

std::string show(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g%+gi", z.real(), z.imag());
  return buf;
}

class Criterion {
 public:
  Criterion(int id, std::string title, double tol, std::string unit = {})
      : id_(id), title_(std::move(title)), tol_(tol), unit_(std::move(unit)) {}

  // |got - want| / max(|want|, floor); the floor only matters at exact zeros.
  void compare(Complex got, Complex want, const std::string& where, double floor = 1e-300) {
    deviation(std::abs(got - want) / std::max(std::abs(want), floor), where);
  }

  void compare(const EvalResult& got, Complex want, const std::string& where, double floor = 1e-300) {
    if (!got.converged) fail(where + " did not converge");
    compare(got.value, want, where, floor);
  }

  void deviation(double d, const std::string& where) {
    ++points_;
    if (std::isnan(d)) d = INFINITY;
    if (d > worst_) {
      worst_ = d;
      worst_at_ = where;
    }
    if (d > tol_) ok_ = false;
  }

  void fail(const std::string& why) {
    ok_ = false;
    if (note_.empty()) note_ = why;
  }

  void note(const std::string& text) { note_ = text; }

  template <class F>
  void guard(F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(std::string("threw: ") + e.what());
    }
  }

  bool report() const {
    if (unit_.empty()) {
      std::printf("[%s] criterion %2d: %-46s max_dev %.3g (tol %.0e, %d points)", ok_ ? "PASS" : "FAIL",
                  id_, title_.c_str(), worst_, tol_, points_);
    } else {
      std::printf("[%s] criterion %2d: %-46s max %.3g %s (limit %g %s)", ok_ ? "PASS" : "FAIL", id_,
                  title_.c_str(), worst_, unit_.c_str(), tol_, unit_.c_str());
    }
    if (!ok_ && !worst_at_.empty()) std::printf(" worst at %s", worst_at_.c_str());
    if (!note_.empty()) std::printf(" %s", note_.c_str());
    std::printf("\n");
    std::fflush(stdout);
    return ok_;
  }

 private:
  int id_;
  std::string title_;
  double tol_;
  std::string unit_;
  double worst_ = 0.0;
  std::string worst_at_;
  std::string note_;
  int points_ = 0;
  bool ok_ = true;
};

bool criterion_1() {
  Criterion c(1, "generalized Faulhaber, integer k", 1e-9);
  const auto start = Clock::now();
  c.guard([&] {
    for (int k = 0; k <= 8; ++k) {
      for (std::int64_t n = 1; n <= 20; ++n) {
        const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        const Complex exact = powersum_bruteforce(k, n);
        c.compare(timed("powersum_ac " + at, [&] { return powersum_ac(k, n, kCfg); }), exact, at);
        c.compare(timed("powersum_ac_alt " + at, [&] { return powersum_ac_alt(k, n, kCfg); }), exact, at + " alt");
      }
    }
  });
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds > 30.0) c.fail("took " + std::to_string(seconds) + " s");
  return c.report();
}

bool criterion_2() {
  Criterion c(2, "negative and non-integer exponents", 1e-9);
  c.guard([&] {
    for (const Complex k : {Complex{-2.0, 0.0}, Complex{-3.0, 0.0}, Complex{-0.5, 0.0}, Complex{0.5, 0.0},
                            Complex{2.0, 1.0}}) {
      for (std::int64_t n = 1; n <= 10; ++n) {
        const std::string at = "k=" + show(k) + " n=" + std::to_string(n);
        const Complex exact = powersum_bruteforce(k, n);
        c.compare(timed("powersum_ac " + at, [&] { return powersum_ac(k, n, kCfg); }), exact, at);
        c.compare(timed("powersum_ac_alt " + at, [&] { return powersum_ac_alt(k, n, kCfg); }), exact, at + " alt");
      }
    }
    for (const auto& eval : {std::function<void()>([] { powersum_ac(-1.0, 5, kCfg); }),
                             std::function<void()>([] { powersum_ac_alt(-1.0, 5, kCfg); })}) {
      try {
        eval();
        c.fail("k=-1 accepted");
      } catch (const SingularParameterError&) {
      }
    }
  });
  return c.report();
}

bool criterion_3() {
  Criterion c(3, "zeta sanity values", 1e-9);
  c.guard([&] {
    for (int m = 1; m <= 5; ++m) {
      const double k = -2.0 * m;
      const EvalResult r = timed("zeta_global trivial zero", [&] { return zeta_global(k, kCfg); });
      if (!r.converged) c.fail("trivial zero did not converge");
      c.deviation(std::abs(r.value), "|zeta(" + std::to_string(-2 * m) + ")|");
    }
    c.compare(timed("zeta_global(2)", [] { return zeta_global(2.0, kCfg); }), kPi * kPi / 6.0, "k=2");
    const EvalResult minus_one = timed("zeta_global(-1)", [] { return zeta_global(-1.0, kCfg); });
    c.deviation(std::abs(minus_one.value + 1.0 / 12.0), "k=-1");
    const EvalResult zero = timed("zeta_global(0)", [] { return zeta_global(0.0, kCfg); });
    const double at_zero = std::abs(zero.value + 0.5);
    if (at_zero > 1e-12) c.fail("zeta(0) off by " + std::to_string(at_zero));
    c.deviation(at_zero, "k=0");
  });
  return c.report();
}

bool criterion_4() {
  Criterion c(4, "off-strip integrals agree with global", 1e-8);
  c.guard([&] {
    for (const double im : {0.0, 1.0, -1.0, 3.0, -3.0}) {
      for (const double re : {1.5, 2.0, 3.0, 5.0}) {
        const Complex k{re, im};
        const EvalResult g = timed("zeta_global " + show(k), [&] { return zeta_global(k, kCfg); });
        c.compare(timed("zeta_strip_pos " + show(k), [&] { return zeta_strip_pos(k, kCfg); }), g.value,
                  "k=" + show(k));
      }
      for (const double re : {-0.5, -2.5, -4.0}) {
        const Complex k{re, im};
        const EvalResult g = timed("zeta_global " + show(k), [&] { return zeta_global(k, kCfg); });
        // k = -4 is a trivial zero; the floor turns that point into an absolute check
        c.compare(timed("zeta_strip_neg " + show(k), [&] { return zeta_strip_neg(k, kCfg); }), g.value,
                  "k=" + show(k), 1e-7);
      }
    }
  });
  return c.report();
}

bool criterion_5() {
  Criterion c(5, "critical strip against the reference", 1e-8);
  c.guard([&] {
    const Complex points[] = {{0.5, 0.5},  {0.5, -2.0}, {0.25, 1.0}, {0.25, -3.0}, {0.75, 2.5},
                              {0.75, -0.5}, {0.1, 3.0},  {0.9, -1.5}, {0.5, 3.0},   {0.6, 0.0}};
    for (const Complex k : points) {
      c.compare(timed("zeta_global " + show(k), [&] { return zeta_global(k, kCfg); }), zeta_reference(k),
                "k=" + show(k));
    }
  });
  return c.report();
}

bool criterion_6() {
  Criterion c(6, "three forms of the even-zeta tail", 1e-9);
  c.guard([&] {
    for (const Complex k : {Complex{2.0, 0.0}, Complex{3.0, 0.0}, Complex{4.0, 0.0}, Complex{2.5, 1.0}}) {
      for (const Complex n : {Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{1.0, 1.0}}) {
        const std::string at = "k=" + show(k) + " n=" + show(n);
        const EvalResult rational =
            timed("tail rational " + at, [&] { return zeta_even_tail(k, n, TailForm::rational, kCfg); });
        c.compare(timed("tail trig " + at, [&] { return zeta_even_tail(k, n, TailForm::trig, kCfg); }),
                  rational.value, at);
        if (k.imag() == 0.0) {
          c.compare(rational, zeta_even_tail(k, n, TailForm::finite_sum, kCfg).value, at + " finite");
        }
      }
    }
  });
  return c.report();
}

bool criterion_7() {
  Criterion c(7, "Hurwitz integer, recurrence and duplication", 1e-8);
  c.guard([&] {
    double worst_int = 0.0;
    for (int m = 0; m <= 5; ++m) {
      for (const Complex b : {Complex{0.4, 0.0}, Complex{1.0, 0.0}, Complex{2.5, 0.0}, Complex{1.0, 1.0}}) {
        const std::string at = "m=" + std::to_string(m) + " b=" + show(b);
        const Complex exact = hurwitz_neg_int(m, b);
        const EvalResult r =
            timed("hurwitz_global " + at, [&] { return hurwitz_global(static_cast<double>(-m), b, kCfg); });
        if (!r.converged) c.fail(at + " did not converge");
        // zeta(-2, 1) and zeta(-4, 1) vanish
        const double d = std::abs(r.value - exact) / std::max(std::abs(exact), 1e-6);
        worst_int = std::max(worst_int, d);
        c.deviation(d, at);
      }
    }
    if (worst_int > 1e-9) c.fail("integer part exceeds 1e-9");

    for (const Complex k : {Complex{2.0, 0.0}, Complex{-1.5, 0.0}, Complex{1.5, 1.0}}) {
      for (const Complex b : {Complex{0.3, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 1.0}}) {
        const std::string at = "k=" + show(k) + " b=" + show(b);
        const EvalResult lo = timed("hurwitz_global " + at, [&] { return hurwitz_global(k, b, kCfg); });
        const EvalResult hi = timed("hurwitz_global " + at, [&] { return hurwitz_global(k, b + 1.0, kCfg); });
        if (!lo.converged || !hi.converged) c.fail(at + " did not converge");
        c.compare(lo.value - hi.value, cpow(b, -k), "recurrence " + at);
      }
    }
    for (const double k : {2.0, 3.0, -0.5}) {
      const EvalResult z = timed("zeta_global", [&] { return zeta_global(k, kCfg); });
      c.compare(timed("hurwitz_global b=1/2", [&] { return hurwitz_global(k, 0.5, kCfg); }),
                (std::pow(2.0, k) - 1.0) * z.value, "b=1/2 k=" + std::to_string(k));
    }
  });
  return c.report();
}

bool criterion_8() {
  Criterion c(8, "harmonic progressions against brute force", 1e-9);
  c.guard([&] {
    for (int k = -3; k <= 5; ++k) {
      if (k == -1) continue;
      for (const Complex b : {Complex{0.3, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 0.5}}) {
        for (std::int64_t n = 1; n <= 15; ++n) {
          const Complex kk = static_cast<double>(k);
          const std::string at = "k=" + std::to_string(k) + " b=" + show(b) + " n=" + std::to_string(n);
          c.compare(timed("hp_sum_ac " + at, [&] { return hp_sum_ac(kk, b, n, kCfg); }),
                    hp_bruteforce(kk, b, n, 1), at);
          c.compare(timed("hp_sum_hurwitz " + at, [&] { return hp_sum_hurwitz(kk, b, n, kCfg); }),
                    hp_bruteforce(kk, b, n, 0), at + " from 0");
        }
      }
    }
  });
  return c.report();
}

bool criterion_9() {
  Criterion c(9, "power sum through zeta and Hurwitz zeta", 1e-8);
  c.guard([&] {
    for (const double k : {2.0, 0.5, -3.0}) {
      for (const std::int64_t n : {1, 5, 10}) {
        const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        const EvalResult z = timed("zeta_global " + at, [&] { return zeta_global(-k, kCfg); });
        const EvalResult h = timed("hurwitz_global " + at,
                                   [&] { return hurwitz_global(-k, static_cast<double>(n + 1), kCfg); });
        c.compare(timed("powersum_ac " + at, [&] { return powersum_ac(k, n, kCfg); }), z.value - h.value, at);
      }
    }
  });
  return c.report();
}

bool criterion_10() {
  Criterion c(10, "performance envelope", 50.0, "ms");
  c.guard([&] {
    // heavier single evaluations beyond the grids above
    timed("zeta_global 0.5+14.13i", [] { return zeta_global(Complex{0.5, 14.134725141734693}, kCfg); });
    timed("zeta_global -8+5i", [] { return zeta_global(Complex{-8.0, 5.0}, kCfg); });
    timed("powersum_ac 2.5, n=1e6", [] { return powersum_ac(2.5, 1000000, kCfg); });
    timed("powersum_ac_alt 2.5, n=1e6", [] { return powersum_ac_alt(2.5, 1000000, kCfg); });
    timed("hp_sum_ac 1.5+2i, b=0.1, n=1000", [] { return hp_sum_ac(Complex{1.5, 2.0}, 0.1, 1000, kCfg); });
    timed("hurwitz_global 3+5i, b=0.05", [] { return hurwitz_global(Complex{3.0, 5.0}, 0.05, kCfg); });
    timed("tail trig 6, n=1+i", [] { return zeta_even_tail(6.0, Complex{1.0, 1.0}, TailForm::trig, kCfg); });
    c.deviation(slowest.ms, "slowest single evaluation");

    const auto start = Clock::now();
    const SelftestReport full = run_selftest(SelftestLevel::full, kCfg);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!full.passed()) c.fail("selftest full has failures");
    if (seconds > 300.0) c.fail("selftest full took " + std::to_string(seconds) + " s");
    char text[200];
    std::snprintf(text, sizeof text, "per call over %d calls, slowest %s; selftest full %.1f s", slowest.calls,
                  slowest.what.c_str(), seconds);
    c.note(text);
  });
  return c.report();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                       criterion_5, criterion_6, criterion_7, criterion_8,
                                                       criterion_9, criterion_10};
  int failed = 0;
  for (const auto& criterion : criteria) failed += criterion() ? 0 : 1;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
