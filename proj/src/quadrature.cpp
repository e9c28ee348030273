// SPDX-License-Identifier: Apache-2.0

#include "zetasum/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "zetasum/errors.hpp"

namespace zetasum {

namespace {

// Nodes with 1 - x below this sit on top of the endpoint in double precision.
constexpr double kMinComplement = 1e-300;
constexpr double kMaxT = 6.1;
constexpr int kMaxLevel = 7;
constexpr int kMinLevel = 2;

struct Node {
  double complement;  // 1 - tanh(pi/2 sinh t), never rounded to zero
  double weight;      // (pi/2) cosh t sech^2(pi/2 sinh t)
};

// Level 0 holds t = 0, 1, 2, ...; level L > 0 holds odd multiples of 2^-L.
// Only t >= 0 is stored; nodes are mirrored about the panel centre.
using NodeTable = std::array<std::vector<Node>, kMaxLevel + 1>;

NodeTable build_nodes() {
  NodeTable table;
  for (int level = 0; level <= kMaxLevel; ++level) {
    const double h = std::ldexp(1.0, -level);
    const int step = level == 0 ? 1 : 2;
    const int first = level == 0 ? 0 : 1;
    for (int k = first;; k += step) {
      const double t = k * h;
      if (t > kMaxT) break;
      const double u = 0.5 * kPi * std::sinh(t);
      const double e = std::exp(-2.0 * u);
      const double complement = 2.0 * e / (1.0 + e);
      if (complement < kMinComplement) break;
      const double weight = 0.5 * kPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
      table[level].push_back({complement, weight});
    }
  }
  return table;
}

const NodeTable& nodes() {
  static const NodeTable table = build_nodes();
  return table;
}

struct PanelOutcome {
  Complex value;
  double err;
  bool ok;
};

class Integrator {
 public:
  Integrator(const Integrand& f, const QuadratureConfig& cfg) : f_(f), cfg_(cfg) {}

  PanelOutcome panel(double a, double b, double target, int depth) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    Complex sum{0.0, 0.0};
    Complex previous{0.0, 0.0};
    Complex estimate{0.0, 0.0};
    double err = std::numeric_limits<double>::infinity();
    bool ok = false;

    for (int level = 0; level <= kMaxLevel; ++level) {
      const auto& level_nodes = nodes()[level];
      for (std::size_t i = 0; i < level_nodes.size(); ++i) {
        const Node& node = level_nodes[i];
        if (level == 0 && i == 0) {
          sum += node.weight * sample(centre);
          continue;
        }
        const double offset = half * node.complement;
        const double left = a + offset;
        const double right = b - offset;
        if (left > a && left < b) sum += node.weight * sample(left);
        if (right > a && right < b) sum += node.weight * sample(right);
      }
      estimate = std::ldexp(half, -level) * sum;
      if (level >= kMinLevel) {
        err = std::abs(estimate - previous);
        if (err <= std::max(cfg_.rel_tol * std::abs(estimate), target)) {
          ok = true;
          break;
        }
      }
      if (evals_ > cfg_.max_evals) break;
      previous = estimate;
    }

    if (ok || depth >= cfg_.max_depth || evals_ > cfg_.max_evals) {
      return {estimate, err, ok};
    }

    const double mid = centre;
    const double child_target = 0.5 * std::max(cfg_.rel_tol * std::abs(estimate), target);
    const PanelOutcome lo = panel(a, mid, child_target, depth + 1);
    const PanelOutcome hi = panel(mid, b, child_target, depth + 1);
    return {lo.value + hi.value, lo.err + hi.err, lo.ok && hi.ok};
  }

  long evals() const { return evals_; }

 private:
  Complex sample(double x) {
    ++evals_;
    const Complex y = f_(x);
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand returned a non-finite value at x = " << x;
      throw IntegrandError(msg.str(), x);
    }
    return y;
  }

  const Integrand& f_;
  const QuadratureConfig& cfg_;
  long evals_ = 0;
};

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureConfig: rel_tol must be > 0");
  if (!(abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be > 0");
  if (max_depth < 1) throw DomainError("QuadratureConfig: max_depth must be >= 1");
  if (max_evals < 100) throw DomainError("QuadratureConfig: max_evals must be >= 100");
  if (!(tail_margin > 0.0)) throw DomainError("QuadratureConfig: tail_margin must be > 0");
}

EvalResult integrate_finite(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b)) throw DomainError("integrate_finite: requires a < b");

  Integrator integrator(f, cfg);
  const PanelOutcome outcome = integrator.panel(a, b, cfg.abs_tol, 0);

  EvalResult result;
  result.value = outcome.value;
  result.err_estimate = outcome.err;
  result.evals_used = integrator.evals();
  result.converged =
      outcome.ok && outcome.err <= std::max(cfg.rel_tol * std::abs(outcome.value), cfg.abs_tol);
  return result;
}

EvalResult integrate_semi_infinite(const Integrand& f, double decay, double growth_exponent,
                                   const QuadratureConfig& cfg) {
  const double upper = truncation_point(decay, growth_exponent, cfg);
  EvalResult result = integrate_finite(f, 0.0, upper, cfg);
  result.truncation_point = upper;
  return result;
}

double truncation_point(double decay, double growth_exponent, const QuadratureConfig& cfg) {
  if (!(decay > 0.0)) throw DomainError("truncation_point: decay must be > 0");
  if (growth_exponent < 0.0) throw DomainError("truncation_point: growth_exponent must be >= 0");
  const double margin = cfg.tail_margin;
  if (growth_exponent == 0.0) return margin / decay;

  // decay*T - g*log1p(T) is convex and zero at T = 0, so the set where it
  // reaches the margin is a half-line; bracket and bisect its left end.
  const auto envelope = [&](double t) { return decay * t - growth_exponent * std::log1p(t); };
  double lo = 0.0;
  double hi = margin / decay;
  while (envelope(hi) < margin) {
    lo = hi;
    hi *= 2.0;
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (envelope(mid) >= margin ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace zetasum
