#include "CLI11.hpp"
#include "json.hpp"
#include "zetakit/hypergeom.hpp"
#include "zetakit/oracles.hpp"
#include "zetakit/stieltjes.hpp"
#include "zetakit/verify.hpp"
#include "zetakit/zeta.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace zetakit;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kDomain = 3, kPrecision = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFunctions{"hurwitz", "zeta",  "eta",       "lerch",   "polylog",
                                          "gamma-inc", "gamma-inc-deriv", "stieltjes", "loggamma"};
const std::vector<std::string> kLambdaFunctions{"hurwitz", "zeta", "eta", "stieltjes", "loggamma"};

int digits_from(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ZETAKIT_DIGITS"); env && *env) {
    char* end = nullptr;
    const long d = std::strtol(env, &end, 10);
    if (*end != '\0' || d <= 0 || d > 100000) throw UsageError(std::string("ZETAKIT_DIGITS is not a positive integer: ") + env);
    return static_cast<int>(d);
  }
  return 30;
}

Complex parse_arg(const std::string& text) {
  try {
    return mp::parse_complex(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse '" + text + "' as a decimal or complex literal (a, a+bi, a-bi)");
  }
}

Real real_arg(const std::string& text, const char* what) {
  Complex z = parse_arg(text);
  if (!z.im().is_zero()) throw DomainError(std::string(what) + " must be real");
  return z.re();
}

int int_arg(const std::string& text, const char* what) {
  Real r = real_arg(text, what);
  if (!r.is_integer()) throw DomainError(std::string(what) + " must be an integer");
  return static_cast<int>(r.to_long());
}

void expect_args(const std::string& fn, const std::vector<std::string>& args, std::size_t lo, std::size_t hi,
                 const char* usage) {
  if (args.size() < lo || args.size() > hi) throw UsageError(fn + " expects arguments: " + usage);
}

ApproxValue dispatch(const std::string& fn, const std::vector<std::string>& args, const PrecisionContext& ctx) {
  if (fn == "hurwitz") {
    expect_args(fn, args, 2, 2, "s a");
    return hurwitz_zeta(parse_arg(args[0]), parse_arg(args[1]), ctx);
  }
  if (fn == "zeta") {
    expect_args(fn, args, 1, 1, "s");
    return riemann_zeta(parse_arg(args[0]), ctx);
  }
  if (fn == "eta") {
    expect_args(fn, args, 1, 1, "s");
    return eta(parse_arg(args[0]), ctx);
  }
  if (fn == "lerch") {
    expect_args(fn, args, 3, 3, "z s a");
    return lerch_phi(parse_arg(args[0]), parse_arg(args[1]), parse_arg(args[2]), ctx);
  }
  if (fn == "polylog") {
    expect_args(fn, args, 2, 2, "s x");
    return polylog(parse_arg(args[0]), real_arg(args[1], "x"), ctx);
  }
  if (fn == "gamma-inc") {
    expect_args(fn, args, 2, 2, "s x");
    return upper_gamma(parse_arg(args[0]), real_arg(args[1], "x"), ctx);
  }
  if (fn == "gamma-inc-deriv") {
    expect_args(fn, args, 2, 3, "s x [order]");
    const int order = args.size() == 3 ? int_arg(args[2], "order") : 1;
    return gamma_inc_param_deriv(order, parse_arg(args[0]), real_arg(args[1], "x"), ctx);
  }
  if (fn == "stieltjes") {
    expect_args(fn, args, 2, 2, "k a");
    return stieltjes(int_arg(args[0], "k"), parse_arg(args[1]), ctx);
  }
  if (fn == "loggamma") {
    expect_args(fn, args, 1, 1, "x");
    return log_gamma_series(parse_arg(args[0]), ctx);
  }
  throw UsageError("unknown function '" + fn + "'");
}

std::string sci2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

// Decimal string with `digits` significant digits; exact zero prints as "0".
std::string decimal(const Real& x, int digits) { return x.is_zero() ? "0" : x.to_string(digits); }

std::string complex_text(const Complex& z, int digits) {
  if (z.im().is_zero()) return decimal(z.re(), digits);
  std::string im = decimal(mp::abs(z.im()), digits);
  return decimal(z.re(), digits) + (z.im().sign() < 0 ? " - " : " + ") + im + "i";
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

std::string parts_text(const ApproxValue& v) {
  std::string out;
  for (const auto& p : v.parts) out += (out.empty() ? "" : ", ") + p.name + " " + std::to_string(p.terms);
  return out;
}

int cmd_compute(const std::string& fn, const std::vector<std::string>& args, int digits_flag, double lambda,
                const std::string& format) {
  const int digits = digits_from(digits_flag);
  const auto ctx = PrecisionContext::for_digits(digits, lambda);
  const auto t0 = std::chrono::steady_clock::now();
  ApproxValue v = dispatch(fn, args, ctx);
  const long ms = elapsed_ms(t0);
  mp::PrecisionScope scope(ctx.working_bits);
  if (format == "json") {
    json j;
    j["function"] = fn;
    j["args"] = args;
    j["lambda"] = lambda;
    j["digits"] = digits;
    j["value_re"] = decimal(v.value.re(), digits);
    j["value_im"] = decimal(v.value.im(), digits);
    j["err"] = v.err;
    j["terms_used"] = v.terms_used;
    j["runtime_ms"] = ms;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << fn << "(";
    for (std::size_t i = 0; i < args.size(); ++i) std::cout << (i ? ", " : "") << args[i];
    std::cout << ") = " << complex_text(v.value, digits) << "\n";
    std::cout << "  err " << sci2(v.err) << ", terms " << v.terms_used;
    if (!v.parts.empty()) std::cout << " (" << parts_text(v) << ")";
    std::cout << ", " << ms << " ms\n";
  }
  return kOk;
}

json report_json(const verify::VerificationReport& r, int digits) {
  json j;
  j["identity_id"] = r.identity_id;
  j["lhs_re"] = decimal(r.lhs.re(), digits);
  j["lhs_im"] = decimal(r.lhs.im(), digits);
  j["rhs_re"] = decimal(r.rhs.re(), digits);
  j["rhs_im"] = decimal(r.rhs.im(), digits);
  j["abs_delta"] = r.abs_delta;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["asserted"] = r.asserted;
  j["runtime_ms"] = r.runtime_ms;
  j["context"] = {{"digits", r.context_echo.target_digits},
                  {"working_bits", r.context_echo.working_bits},
                  {"lambda", r.context_echo.lambda}};
  j["note"] = r.note;
  return j;
}

int cmd_verify(const std::string& suite, int digits_flag, const std::string& format, unsigned threads) {
  const int digits = digits_from(digits_flag);
  const auto ctx = PrecisionContext::for_digits(digits);
  auto checks = verify::checks_for_suite(suite);
  const bool as_json = format == "json";
  if (!as_json) std::printf("%-34s %-6s %-10s %-10s %8s\n", "identity", "result", "delta", "tolerance", "ms");
  auto reports = verify::run_checks(
      checks, ctx,
      [&](const verify::VerificationReport& r) {
        mp::PrecisionScope scope(ctx.working_bits);
        if (as_json) {
          std::cout << report_json(r, std::min(digits, 40)).dump() << std::endl;
        } else {
          const char* result = !r.asserted ? "info" : (r.passed ? "pass" : "FAIL");
          std::printf("%-34s %-6s %-10s %-10s %8ld  %s\n", r.identity_id.c_str(), result, sci2(r.abs_delta).c_str(),
                      sci2(r.tolerance).c_str(), r.runtime_ms, r.note.c_str());
          std::fflush(stdout);
        }
      },
      threads);
  long failed = 0, asserted = 0;
  for (const auto& r : reports) {
    asserted += r.asserted;
    failed += r.asserted && !r.passed;
  }
  if (!as_json) std::printf("%ld/%ld asserted checks passed\n", asserted - failed, asserted);
  return failed == 0 ? kOk : kVerifyFailed;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) grid.push_back(real_arg(item, "lambda").to_double());
  if (grid.empty()) throw UsageError("empty --lambda-grid");
  return grid;
}

int cmd_bench(const std::string& fn, const std::vector<std::string>& args, int digits_flag, const std::string& grid_text,
              const std::string& format) {
  if (std::find(kLambdaFunctions.begin(), kLambdaFunctions.end(), fn) == kLambdaFunctions.end())
    throw DomainError(fn + " has no free parameter lambda");
  if (fn == "stieltjes" && (args.empty() || args[0] != "0"))
    throw DomainError("only gamma_0 (stieltjes 0 a) depends on lambda");
  const int digits = digits_from(digits_flag);
  const auto grid = parse_grid(grid_text);
  const auto base = PrecisionContext::for_digits(digits);
  for (double lam : grid) base.with_lambda(lam).validate();

  struct Row {
    double lambda;
    ApproxValue v;
    long ms;
  };
  std::vector<Row> rows;
  for (double lam : grid) {
    auto ctx = base.with_lambda(lam);
    const auto t0 = std::chrono::steady_clock::now();
    ApproxValue v = dispatch(fn, args, ctx);
    rows.push_back({lam, std::move(v), elapsed_ms(t0)});
  }
  std::vector<std::string> names;
  for (const auto& r : rows)
    for (const auto& p : r.v.parts)
      if (std::find(names.begin(), names.end(), p.name) == names.end()) names.push_back(p.name);
  auto total = [](const ApproxValue& v) {
    long t = 0;
    for (const auto& p : v.parts) t += p.terms;
    return v.parts.empty() ? v.terms_used : t;
  };
  const Row* best = &rows.front();
  for (const auto& r : rows)
    if (total(r.v) < total(best->v)) best = &r;

  if (format == "json") {
    for (const auto& r : rows) {
      json j;
      j["function"] = fn;
      j["args"] = args;
      j["lambda"] = r.lambda;
      j["digits"] = digits;
      json parts = json::object();
      for (const auto& n : names) parts[n] = r.v.part_terms(n);
      j["parts"] = parts;
      j["total_terms"] = total(r.v);
      j["runtime_ms"] = r.ms;
      std::cout << j.dump() << "\n";
    }
    json s;
    s["best_lambda"] = best->lambda;
    s["total_terms"] = total(best->v);
    std::cout << s.dump() << "\n";
    return kOk;
  }
  std::printf("%-8s", "lambda");
  for (const auto& n : names) std::printf(" %16s", n.c_str());
  std::printf(" %10s %8s\n", "total", "ms");
  for (const auto& r : rows) {
    std::printf("%-8g", r.lambda);
    for (const auto& n : names) std::printf(" %16ld", r.v.part_terms(n));
    std::printf(" %10ld %8ld\n", total(r.v), r.ms);
  }
  std::printf("fewest terms at lambda = %g (%ld terms, %d digits)\n", best->lambda, total(best->v), digits);
  return kOk;
}

int exit_for(const ZetaError& e) {
  switch (e.kind()) {
    case ErrorKind::Domain:
    case ErrorKind::Pole:
    case ErrorKind::TailBoundUnavailable:
      return kDomain;
    case ErrorKind::PrecisionLoss:
    case ErrorKind::MaxTermsExceeded:
    case ErrorKind::QuadratureFailure:
    case ErrorKind::ConvergenceFailure:
      return kPrecision;
  }
  return kPrecision;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetakit: Hurwitz zeta, Stieltjes constants and incomplete Gamma derivatives"};
  app.require_subcommand(1);

  std::string fn, format = "text", suite, grid = "0.5,1,2,4,6";
  std::vector<std::string> args;
  int digits = 0;
  double lambda = 1.0;
  unsigned threads = 0;

  auto* compute = app.add_subcommand("compute", "evaluate one function");
  compute->add_option("function", fn, "function name")->required()->check(CLI::IsMember(kFunctions));
  compute->add_option("args", args, "arguments as decimal or complex literals (a, a+bi)")->required();
  compute->add_option("--digits,-d", digits, "decimal digits (default: $ZETAKIT_DIGITS or 30)");
  compute->add_option("--lambda,-l", lambda, "free parameter of the splitting series");
  compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "run identity checks");
  ver->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"identities", "stieltjes", "gamma", "contour", "all"}));
  ver->add_option("--digits,-d", digits, "decimal digits (default: $ZETAKIT_DIGITS or 30)");
  ver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--threads", threads, "worker threads (0: hardware concurrency)");

  auto* bench = app.add_subcommand("bench", "term counts and timing across lambda");
  bench->add_option("--function,-f", fn, "function name")->required()->check(CLI::IsMember(kFunctions));
  bench->add_option("args", args, "arguments as decimal or complex literals")->required();
  bench->add_option("--digits,-d", digits, "decimal digits (default: $ZETAKIT_DIGITS or 30)");
  bench->add_option("--lambda-grid", grid, "comma-separated lambda values");
  bench->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*compute) return cmd_compute(fn, args, digits, lambda, format);
    if (*ver) return cmd_verify(suite, digits, format, threads);
    if (*bench) return cmd_bench(fn, args, digits, grid, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ZetaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return kParse;
}
