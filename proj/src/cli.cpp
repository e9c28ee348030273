// SPDX-License-Identifier: Apache-2.0

#include "zetasum/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetasum/errors.hpp"
#include "zetasum/faulhaber.hpp"
#include "zetasum/hurwitz.hpp"
#include "zetasum/selftest.hpp"
#include "zetasum/zeta.hpp"

namespace zetasum::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Target { zeta, hurwitz, powersum, hp };

const std::map<std::string, Target> kTargets = {
    {"zeta", Target::zeta}, {"hurwitz", Target::hurwitz}, {"powersum", Target::powersum}, {"hp", Target::hp}};

bool uses_b(Target t) { return t == Target::hurwitz || t == Target::hp; }
bool uses_n(Target t) { return t == Target::powersum || t == Target::hp; }

struct Request {
  Target target = Target::zeta;
  std::string target_name;
  Complex k;
  std::int64_t n = 0;
  Complex b{1.0, 0.0};
  ZetaRepresentation repr = ZetaRepresentation::global;
  std::string form;
  bool unvalidated_b = false;
};

struct Outcome {
  std::optional<EvalResult> result;
  std::string status;
  std::string error;
  int code = kExitOk;
};

// Raw command-line state, converted into a Request once parsing succeeds.
struct Options {
  std::string target;
  std::optional<std::string> k;
  std::optional<std::string> b;
  std::optional<std::int64_t> n;
  std::optional<std::string> repr;
  std::optional<std::string> form;
  std::optional<std::string> oracle;
  double tolerance = 1e-8;
  bool unvalidated_b = false;
  QuadratureConfig cfg;

  double re_min = 0.0;
  std::optional<double> re_max;
  int re_steps = 1;
  double im_min = 0.0;
  std::optional<double> im_max;
  int im_steps = 1;
  std::string format = "json";
  unsigned threads = 0;

  std::string level = "quick";
};

// ---- environment -------------------------------------------------------

template <class T>
void read_env(const EnvLookup& env, const char* suffix, T& target) {
  const std::string name = std::string(kEnvPrefix) + suffix;
  const std::optional<std::string> text = env(name);
  if (!text || text->empty()) return;
  T value{};
  const char* first = text->data();
  const char* last = first + text->size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw UsageError(name + ": cannot parse '" + *text + "'");
  }
  target = value;
}

void apply_env(const EnvLookup& env, Options& o) {
  read_env(env, "REL_TOL", o.cfg.rel_tol);
  read_env(env, "ABS_TOL", o.cfg.abs_tol);
  read_env(env, "TAIL_MARGIN", o.cfg.tail_margin);
  read_env(env, "MAX_DEPTH", o.cfg.max_depth);
  read_env(env, "MAX_EVALS", o.cfg.max_evals);
  read_env(env, "THREADS", o.threads);
}

// ---- evaluation --------------------------------------------------------

HurwitzParams hurwitz_params(const Request& r) {
  return r.unvalidated_b ? HurwitzParams::unvalidated_any_b(r.k, r.b) : HurwitzParams(r.k, r.b);
}

EvalResult evaluate(const Request& r, const QuadratureConfig& cfg) {
  switch (r.target) {
    case Target::zeta:
      return evaluate_zeta(r.repr, r.k, cfg);
    case Target::hurwitz:
      return hurwitz_global(hurwitz_params(r), cfg);
    case Target::powersum:
      return r.form == "alt" ? powersum_ac_alt(r.k, r.n, cfg) : powersum_ac(r.k, r.n, cfg);
    case Target::hp:
      return r.form == "hurwitz" ? hp_sum_hurwitz(hurwitz_params(r), r.n, cfg)
                                 : hp_sum_ac(hurwitz_params(r), r.n, cfg);
  }
  throw std::logic_error("unhandled target");
}

Outcome attempt(const Request& r, const QuadratureConfig& cfg) {
  Outcome o;
  const auto fail = [&o](const char* status, const std::exception& e, int code) {
    o.result.reset();
    o.status = status;
    o.error = e.what();
    o.code = code;
  };
  try {
    o.result = evaluate(r, cfg);
    o.status = o.result->converged ? "ok" : "not_converged";
    o.code = o.result->converged ? kExitOk : kExitNotConverged;
  } catch (const PoleError& e) {
    fail("pole", e, kExitDomain);
  } catch (const SingularParameterError& e) {
    fail("singular", e, kExitDomain);
  } catch (const CapacityError& e) {
    fail("capacity", e, kExitDomain);
  } catch (const DomainError& e) {
    fail("domain_error", e, kExitDomain);
  } catch (const IntegrandError& e) {
    fail("integrand_error", e, kExitNotConverged);
  }
  return o;
}

// ---- request construction ------------------------------------------------

Complex complex_flag(const std::string& flag, const std::string& text) {
  const std::optional<Complex> z = parse_complex(text);
  if (!z) throw UsageError(flag + ": expected RE[+-]IMi, got '" + text + "'");
  return *z;
}

Request build_request(const Options& o, bool need_k) {
  Request r;
  r.target_name = o.target;
  r.target = kTargets.at(o.target);
  if (need_k) {
    if (!o.k) throw UsageError("--k is required");
    r.k = complex_flag("--k", *o.k);
  }
  if (uses_b(r.target)) {
    if (!o.b) throw UsageError("--b is required for target " + o.target);
    r.b = complex_flag("--b", *o.b);
    r.unvalidated_b = o.unvalidated_b;
  } else if (o.b) {
    throw UsageError("--b does not apply to target " + o.target);
  }
  if (uses_n(r.target)) {
    if (!o.n) throw UsageError("--n is required for target " + o.target);
    r.n = *o.n;
  } else if (o.n) {
    throw UsageError("--n does not apply to target " + o.target);
  }

  if (o.repr && r.target != Target::zeta) throw UsageError("--repr applies to target zeta only");
  if (o.repr) {
    const auto repr = parse_zeta_representation(*o.repr);
    if (!repr) throw UsageError("--repr: unknown representation '" + *o.repr + "'");
    r.repr = *repr;
  }

  if (r.target == Target::powersum || r.target == Target::hp) {
    r.form = o.form.value_or("ac");
    const char* other = r.target == Target::powersum ? "alt" : "hurwitz";
    if (r.form != "ac" && r.form != other) {
      throw UsageError("--form for " + o.target + " must be ac or " + other);
    }
  } else if (o.form) {
    throw UsageError("--form does not apply to target " + o.target);
  }
  return r;
}

// ---- JSON --------------------------------------------------------------

Json complex_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json config_json(const QuadratureConfig& cfg) {
  Json j;
  j["rel_tol"] = cfg.rel_tol;
  j["abs_tol"] = cfg.abs_tol;
  j["max_depth"] = cfg.max_depth;
  j["max_evals"] = cfg.max_evals;
  j["tail_margin"] = cfg.tail_margin;
  return j;
}

Json params_json(const Request& r, const QuadratureConfig& cfg, bool with_k = true) {
  Json p;
  if (with_k) p["k"] = complex_json(r.k);
  if (uses_n(r.target)) p["n"] = r.n;
  if (uses_b(r.target)) p["b"] = complex_json(r.b);
  if (r.target == Target::zeta) p["representation"] = std::string(to_string(r.repr));
  if (!r.form.empty()) p["form"] = r.form;
  if (uses_b(r.target)) p["unvalidated_b"] = r.unvalidated_b;
  p["config"] = config_json(cfg);
  return p;
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json record_json(const Request& r, const QuadratureConfig& cfg, const Outcome& o) {
  Json j;
  j["target"] = r.target_name;
  j["params"] = params_json(r, cfg);
  if (o.result) {
    j["value"] = complex_json(o.result->value);
    j["err_estimate"] = o.result->err_estimate;
    j["evals_used"] = o.result->evals_used;
    j["truncation_point"] = optional_number(o.result->truncation_point);
    j["converged"] = o.result->converged;
  } else {
    j["value"] = nullptr;
    j["err_estimate"] = nullptr;
    j["evals_used"] = nullptr;
    j["truncation_point"] = nullptr;
    j["converged"] = false;
  }
  j["status"] = o.status;
  j["error"] = o.error.empty() ? Json(nullptr) : Json(o.error);
  return j;
}

// ---- commands ----------------------------------------------------------

int cmd_eval(const Options& opts, std::ostream& out, std::ostream& err) {
  const Request r = build_request(opts, true);
  const Outcome o = attempt(r, opts.cfg);
  out << record_json(r, opts.cfg, o).dump() << '\n';
  if (!o.error.empty()) err << "error: " << o.error << '\n';
  return o.code;
}

bool is_integer(Complex z) { return z.imag() == 0.0 && z.real() == std::floor(z.real()); }

std::pair<std::string, Complex> oracle_value(const Request& r, const std::optional<std::string>& name) {
  switch (r.target) {
    case Target::zeta: {
      const std::string used = name.value_or("reference");
      if (used != "reference") throw UsageError("oracle for zeta must be reference");
      return {used, zeta_reference(r.k)};
    }
    case Target::hurwitz: {
      const std::string used = name.value_or("reference");
      if (used == "reference") return {used, hurwitz_reference(r.k, r.b)};
      if (used == "neg_int") {
        if (!is_integer(r.k) || r.k.real() > 0.0) {
          throw DomainError("oracle neg_int needs k a non-positive integer");
        }
        return {used, hurwitz_neg_int(static_cast<int>(-r.k.real()), r.b)};
      }
      throw UsageError("oracle for hurwitz must be reference or neg_int");
    }
    case Target::powersum: {
      const std::string used = name.value_or("bruteforce");
      if (used == "bruteforce") return {used, powersum_bruteforce(r.k, r.n)};
      if (used == "faulhaber") {
        if (!is_integer(r.k) || r.k.real() < 1.0 || std::fmod(r.k.real(), 2.0) != 1.0) {
          throw DomainError("oracle faulhaber needs k an odd positive integer");
        }
        return {used, faulhaber_bernoulli_odd(static_cast<int>(r.k.real()), r.n)};
      }
      throw UsageError("oracle for powersum must be bruteforce or faulhaber");
    }
    case Target::hp: {
      const std::string used = name.value_or("bruteforce");
      if (used != "bruteforce") throw UsageError("oracle for hp must be bruteforce");
      return {used, hp_bruteforce(r.k, r.b, r.n, r.form == "hurwitz" ? 0 : 1)};
    }
  }
  throw std::logic_error("unhandled target");
}

int cmd_compare(const Options& opts, std::ostream& out, std::ostream& err) {
  const Request r = build_request(opts, true);
  if (!(opts.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  Outcome o = attempt(r, opts.cfg);

  Json j;
  j["target"] = r.target_name;
  j["params"] = params_json(r, opts.cfg);
  j["oracle"] = opts.oracle ? Json(*opts.oracle) : Json(nullptr);
  j["formula_value"] = o.result ? complex_json(o.result->value) : Json(nullptr);
  j["oracle_value"] = nullptr;
  j["abs_diff"] = nullptr;
  j["rel_diff"] = nullptr;
  j["tolerance"] = opts.tolerance;
  j["err_estimate"] = o.result ? Json(o.result->err_estimate) : Json(nullptr);
  j["converged"] = o.result ? o.result->converged : false;

  if (o.result) {
    try {
      const auto [used, oracle] = oracle_value(r, opts.oracle);
      j["oracle"] = used;
      j["oracle_value"] = complex_json(oracle);
      const double abs_diff = std::abs(o.result->value - oracle);
      // absolute when the oracle is exactly zero
      const double rel_diff = std::abs(oracle) < 1e-300 ? abs_diff : abs_diff / std::abs(oracle);
      j["abs_diff"] = abs_diff;
      j["rel_diff"] = rel_diff;
      if (o.code == kExitOk && !(rel_diff <= opts.tolerance)) {
        o.status = "mismatch";
        o.code = kExitNotConverged;
      }
    } catch (const DomainError& e) {
      o.status = "oracle_error";
      o.error = e.what();
      o.code = kExitDomain;
    }
  }
  j["status"] = o.status;
  j["error"] = o.error.empty() ? Json(nullptr) : Json(o.error);
  out << j.dump() << '\n';
  if (!o.error.empty()) err << "error: " << o.error << '\n';
  return o.code;
}

std::vector<double> axis(double lo, std::optional<double> hi, int steps, const char* name) {
  if (steps < 1) throw UsageError(std::string("--") + name + "-steps must be >= 1");
  const double top = hi.value_or(lo);
  if (steps > 1 && !(top > lo)) {
    throw UsageError(std::string("--") + name + "-max must exceed --" + name + "-min");
  }
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    v[i] = steps == 1 ? lo : lo + (top - lo) * i / (steps - 1);
  }
  if (steps > 1) v.back() = top;
  return v;
}

struct Row {
  Complex k;
  Outcome outcome;
};

std::string number_text(double x, bool json) {
  if (std::isfinite(x)) return format_double(x);
  return json ? "null" : format_double(x);
}

void emit_row(std::ostream& out, const Row& row, bool csv) {
  const std::optional<EvalResult>& r = row.outcome.result;
  const std::string none = csv ? "" : "null";
  const std::string value_re = r ? number_text(r->value.real(), !csv) : none;
  const std::string value_im = r ? number_text(r->value.imag(), !csv) : none;
  const std::string err_est = r ? number_text(r->err_estimate, !csv) : none;
  const bool converged = r && r->converged;
  if (csv) {
    out << format_double(row.k.real()) << ',' << format_double(row.k.imag()) << ',' << value_re << ','
        << value_im << ',' << err_est << ',' << (converged ? "true" : "false") << ','
        << row.outcome.status << '\n';
  } else {
    out << "{\"k_re\":" << format_double(row.k.real()) << ",\"k_im\":" << format_double(row.k.imag())
        << ",\"value_re\":" << value_re << ",\"value_im\":" << value_im
        << ",\"err_estimate\":" << err_est << ",\"converged\":" << (converged ? "true" : "false")
        << ",\"status\":\"" << row.outcome.status << "\"}\n";
  }
}

int cmd_scan(const Options& opts, std::ostream& out, std::ostream&) {
  const Request base = build_request(opts, false);
  if (opts.format != "json" && opts.format != "csv") throw UsageError("--format must be json or csv");
  const std::vector<double> res = axis(opts.re_min, opts.re_max, opts.re_steps, "re");
  const std::vector<double> ims = axis(opts.im_min, opts.im_max, opts.im_steps, "im");

  std::vector<Row> rows;
  rows.reserve(res.size() * ims.size());
  for (const double im : ims) {
    for (const double re : res) rows.push_back({Complex{re, im}, {}});
  }

  const Complex pole = (base.target == Target::zeta || base.target == Target::hurwitz) ? 1.0 : -1.0;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      Row& row = rows[i];
      if (std::abs(row.k - pole) < 1e-6) {
        row.outcome.status = "singular";
        continue;
      }
      Request r = base;
      r.k = row.k;
      try {
        row.outcome = attempt(r, opts.cfg);
      } catch (const std::exception& e) {
        row.outcome.status = "error";
        row.outcome.error = e.what();
        row.outcome.code = kExitNotConverged;
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  const bool csv = opts.format == "csv";
  if (csv) out << "k_re,k_im,value_re,value_im,err_estimate,converged,status\n";
  int code = kExitOk;
  for (const Row& row : rows) {
    emit_row(out, row, csv);
    if (row.outcome.code == kExitNotConverged) code = kExitNotConverged;
    if (row.outcome.code == kExitDomain && code == kExitOk) code = kExitDomain;
  }
  return code;
}

Json deviation_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

int cmd_selftest(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto level = parse_selftest_level(opts.level);
  if (!level) throw UsageError("selftest level must be quick or full");
  const SelftestReport report = run_selftest(*level, opts.cfg);

  Json results = Json::array();
  for (const CheckResult& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-15s %-52s max_dev %-10.3g tol %-8.1g %d points",
                  c.passed ? "PASS" : "FAIL", c.module.c_str(), c.name.c_str(), c.max_deviation,
                  c.tolerance, c.points);
    err << line << '\n';
    if (!c.passed) err << "      " << c.detail << '\n';

    Json j;
    j["module"] = c.module;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["max_deviation"] = deviation_json(c.max_deviation);
    j["tolerance"] = c.tolerance;
    j["points"] = c.points;
    j["detail"] = c.detail.empty() ? Json(nullptr) : Json(c.detail);
    results.push_back(std::move(j));
  }
  const int failed = report.failed();
  char summary[128];
  std::snprintf(summary, sizeof summary, "%zu checks, %d failed, %.2f s", report.checks.size(), failed,
                report.seconds);
  err << summary << '\n';

  Json j;
  j["level"] = std::string(to_string(report.level));
  j["checks"] = report.checks.size();
  j["passed"] = static_cast<int>(report.checks.size()) - failed;
  j["failed"] = failed;
  j["seconds"] = report.seconds;
  j["config"] = config_json(opts.cfg);
  j["results"] = std::move(results);
  out << j.dump() << '\n';
  return failed == 0 ? kExitOk : kExitSelftestFailed;
}

// ---- argument wiring ---------------------------------------------------

void add_config_flags(CLI::App* sub, Options& o) {
  sub->add_option("--rel-tol", o.cfg.rel_tol, "Relative tolerance per integral")->capture_default_str();
  sub->add_option("--abs-tol", o.cfg.abs_tol, "Absolute tolerance per integral")->capture_default_str();
  sub->add_option("--tail-margin", o.cfg.tail_margin, "Tail truncation margin (natural-log units)")
      ->capture_default_str();
  sub->add_option("--max-evals", o.cfg.max_evals, "Integrand evaluation budget")->capture_default_str();
  sub->add_option("--max-depth", o.cfg.max_depth, "Maximum bisection depth")->capture_default_str();
}

void add_point_flags(CLI::App* sub, Options& o, bool with_k) {
  sub->add_option("target", o.target, "zeta | hurwitz | powersum | hp")
      ->required()
      ->check(CLI::IsMember({"zeta", "hurwitz", "powersum", "hp"}));
  if (with_k) sub->add_option("--k", o.k, "Exponent, e.g. 2 or 0.5+14.1i");
  sub->add_option("--n", o.n, "Term count (powersum, hp)");
  sub->add_option("--b", o.b, "Offset with Re(b) > 0 (hurwitz, hp)");
  sub->add_option("--repr", o.repr, "zeta representation: global | strip_pos | strip_neg | functional | reference");
  sub->add_option("--form", o.form, "powersum: ac | alt; hp: ac | hurwitz");
  sub->add_flag("--unvalidated-negative-b", o.unvalidated_b,
                "Allow Re(b) < 0. Results there are not validated.")
      ->group("");
  add_config_flags(sub, o);
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

std::optional<Complex> parse_complex(std::string_view text) {
  const auto real = [](std::string_view s) -> std::optional<double> {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty() || s.front() == '+') return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  // a bare sign means a unit imaginary part
  const auto imaginary = [&](std::string_view s) -> std::optional<double> {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return real(s);
  };

  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = real(text);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = imaginary(body);
    if (!im) return std::nullopt;
    return Complex{0.0, *im};
  }
  const auto re = real(body.substr(0, split));
  const auto im = imaginary(body.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  Options opts;
  try {
    apply_env(env, opts);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Power sums, harmonic progressions and zeta functions for complex exponents",
               "zetasum"};
  app.set_version_flag("--version", "zetasum 0.1.0");
  app.require_subcommand(1);
  app.footer(
      "Environment: ZETASUM_REL_TOL, ZETASUM_ABS_TOL, ZETASUM_TAIL_MARGIN, ZETASUM_MAX_EVALS,\n"
      "ZETASUM_MAX_DEPTH, ZETASUM_THREADS set defaults; flags override them.\n"
      "Exit codes: 0 ok, 1 domain error, 2 not converged, 3 selftest failure, 64 usage.");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one point, print a JSON record");
  add_point_flags(eval, opts, true);

  CLI::App* compare = app.add_subcommand("compare", "Evaluate and compare with an independent oracle");
  add_point_flags(compare, opts, true);
  compare->add_option("--oracle", opts.oracle,
                      "zeta: reference; hurwitz: reference | neg_int; powersum: bruteforce | "
                      "faulhaber; hp: bruteforce");
  compare->add_option("--tolerance", opts.tolerance, "Relative agreement required for exit 0")
      ->capture_default_str();

  CLI::App* scan = app.add_subcommand("scan", "Evaluate over a grid of k");
  add_point_flags(scan, opts, false);
  scan->add_option("--re-min", opts.re_min, "Lowest Re(k)")->required();
  scan->add_option("--re-max", opts.re_max, "Highest Re(k) (default --re-min)");
  scan->add_option("--re-steps", opts.re_steps, "Points along Re(k)")->capture_default_str();
  scan->add_option("--im-min", opts.im_min, "Lowest Im(k)")->capture_default_str();
  scan->add_option("--im-max", opts.im_max, "Highest Im(k) (default --im-min)");
  scan->add_option("--im-steps", opts.im_steps, "Points along Im(k)")->capture_default_str();
  scan->add_option("--format", opts.format, "json (one object per line) | csv")->capture_default_str();
  scan->add_option("--threads", opts.threads, "Worker threads, 0 = all cores")->capture_default_str();

  CLI::App* selftest = app.add_subcommand("selftest", "Run the invariant checks of every module");
  selftest->add_option("level", opts.level, "quick | full")->capture_default_str();
  add_config_flags(selftest, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    opts.cfg.validate();
    if (eval->parsed()) return cmd_eval(opts, out, err);
    if (compare->parsed()) return cmd_compare(opts, out, err);
    if (scan->parsed()) return cmd_scan(opts, out, err);
    return cmd_selftest(opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    // configuration rejected by QuadratureConfig::validate
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace zetasum::cli
