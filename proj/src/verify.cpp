#include "zetakit/verify.hpp"

#include "zetakit/contour.hpp"
#include "zetakit/hypergeom.hpp"
#include "zetakit/oracles.hpp"
#include "zetakit/polynomials.hpp"
#include "zetakit/stieltjes.hpp"
#include "zetakit/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <limits>
#include <thread>

namespace zetakit::verify {

namespace {

using Reports = std::vector<VerificationReport>;

double delta(const Complex& a, const Complex& b) { return std::exp2(mp::log2_abs(a - b)); }

VerificationReport compare(std::string id, Complex lhs, Complex rhs, double tol) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.abs_delta = delta(lhs, rhs);
  r.tolerance = tol;
  r.passed = r.abs_delta <= tol;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

VerificationReport digits_check(std::string id, Complex lhs, Complex rhs, int digits, const PrecisionContext& ctx) {
  const double tol = relative_tolerance(digits, ctx, rhs);
  return compare(std::move(id), std::move(lhs), std::move(rhs), tol);
}

// Exact identities: lhs counts the failing cases out of rhs checked.
VerificationReport exact_count(std::string id, long failures, long cases) {
  VerificationReport r = compare(std::move(id), Complex(failures), Complex(0), 0.0);
  r.note = std::to_string(cases) + " exact cases";
  return r;
}

std::string num(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Complex rat(long p, long q) { return Complex(Real(mpq_class(p, q))); }

// ------------------------------------------------------------ identities

Reports eta_special(const PrecisionContext& base) {
  const auto ctx = base.with_lambda(1.0);
  mp::PrecisionScope scope(ctx.working_bits);
  const Real eps("1e-30");
  Reports out;
  for (int j = 0; j <= 20; ++j) {
    Complex avg = (eta(Complex(Real(-j) + eps), ctx).value + eta(Complex(Real(-j) - eps), ctx).value) / 2L;
    // (-1)^j E_j(0)/2
    mpq_class exact = euler_at_zero(j) / 2;
    if (j % 2 == 1) exact = -exact;
    double tol = std::pow(10.0, -std::min(45, base.target_digits - 5));
    out.push_back(compare("prop-1-eta-negint-" + std::to_string(j), avg, Complex(Real(exact)), tol));
    out.back().note = "symmetric average at -j +/- 1e-30";
  }
  return out;
}

struct GridPoint {
  const char* s;
  const char* a;
};
constexpr GridPoint kGrid[] = {{"-2.5", "0.3"}, {"-2.5", "1"}, {"-2.5", "2.7"}, {"0.25", "0.3"}, {"0.25", "1"},
                               {"0.25", "2.7"}, {"2+3i", "0.3"}, {"2+3i", "1"}, {"2+3i", "2.7"}};

Reports lambda_invariance(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  for (const auto& g : kGrid) {
    const Complex s = mp::parse_complex(g.s), a = mp::parse_complex(g.a);
    const Complex ref = hurwitz_zeta(s, a, ctx.with_lambda(1.0)).value;
    Complex worst = ref;
    for (double lam : {0.5, 3.0, 6.0}) {
      Complex v = hurwitz_zeta(s, a, ctx.with_lambda(lam)).value;
      if (delta(v, ref) >= delta(worst, ref)) worst = v;
    }
    out.push_back(digits_check(std::string("lambda-invariance-s") + g.s + "-a" + g.a, worst, ref, 45, ctx));
    out.back().note = "worst of lambda in {0.5, 3, 6} against lambda = 1";
  }
  return out;
}

Reports oracle_agreement(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  for (const auto& g : kGrid) {
    const Complex s = mp::parse_complex(g.s), a = mp::parse_complex(g.a);
    out.push_back(digits_check(std::string("hurwitz-vs-em-s") + g.s + "-a" + g.a, hurwitz_zeta(s, a, ctx).value,
                               oracle::zeta_em(s, a, ctx).value, 45, ctx));
  }
  return out;
}

Reports corollary1(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  const double tol = std::pow(10.0, -std::min(40, ctx.target_digits - 5));
  const Real base = mp::log(Real(1) + mp::exp(Real(1))) - 1L;
  Reports out;
  out.push_back(compare("eq-1.4a", Complex(base + euler_zero_sum(1)), Complex(mp::log(Real(2))), tol));
  const Real li2 = polylog(Complex(2), -mp::exp(Real(-1)), ctx).real();
  out.push_back(compare("eq-1.4b", Complex(base - li2 + euler_zero_sum(2)), Complex(mp::zeta_ui(2) / 2L), tol));
  return out;
}

Reports corollary2(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  auto hz = [&](const Complex& s, const Complex& a) { return hurwitz_zeta(s, a, ctx).value; };
  // (1.5)
  for (auto [sv, av] : {std::pair{"-1.5", "0.4"}, {"0.5", "1.25"}, {"3+2i", "2.2"}}) {
    const Complex s = mp::parse_complex(sv), a = mp::parse_complex(av);
    out.push_back(digits_check(std::string("eq-1.5-s") + sv + "-a" + av, hz(s, a),
                               hz(s, a + Complex(1)) + mp::pow(a.re(), -s), 45, ctx));
  }
  // (1.6) by central differences
  const Real h = mp::ldexp(Real(1), -40);
  for (auto [sv, av] : {std::pair{"-1.5", "0.4"}, {"2.5", "1.7"}}) {
    const Complex s = mp::parse_complex(sv), a = mp::parse_complex(av);
    Complex fd = (hz(s, a + Complex(h)) - hz(s, a - Complex(h))) / (h * 2L);
    out.push_back(digits_check(std::string("eq-1.6-s") + sv + "-a" + av, fd, -s * hz(s + Complex(1), a), 20, ctx));
  }
  // (1.7)
  for (double sv : {-1.5, 2.5}) {
    for (int q : {2, 3, 5}) {
      const Complex s(sv);
      Complex sum;
      for (int r = 1; r < q; ++r) sum += hz(s, rat(r, q));
      Complex rhs = (mp::pow(Real(q), s) - Complex(1)) * riemann_zeta(s, ctx).value;
      out.push_back(digits_check("eq-1.7-q" + std::to_string(q) + "-s" + num(sv), sum, rhs, 40, ctx));
    }
  }
  // (1.8): int_0^1 = 1/(1-s) + int_1^2 by the shift relation
  for (double sv : {-0.5, 0.25}) {
    const Complex s(sv);
    Complex smooth = gauss_legendre_integrate([&](const Real& a) { return hz(s, Complex(a)); }, Real(1), Real(2), 48);
    out.push_back(compare("eq-1.8-s" + num(sv), smooth + inverse(Complex(1) - s), Complex(0), 1e-20));
  }
  return out;
}

Reports polynomial_identities(const PrecisionContext&) {
  Reports out;
  const std::vector<mpq_class> points{0, mpq_class(1, 3), mpq_class(-7, 5), mpq_class(22, 7), mpq_class(1, 1000)};
  auto power = [](const mpq_class& x, int n) {
    mpq_class p = 1;
    for (int j = 0; j < n; ++j) p *= x;
    return p;
  };
  long bad = 0, n = 0;
  for (int m = 1; m <= 30; ++m)
    for (const auto& a : points) {
      ++n;
      bad += bernoulli_polynomial(m)(mpq_class(a + 1)) - bernoulli_polynomial(m)(a) != m * power(a, m - 1);
    }
  out.push_back(exact_count("bernoulli-difference", bad, n));

  bad = n = 0;
  for (int m = 1; m <= 30; ++m, ++n) bad += bernoulli_polynomial(m).integrate(0, 1) != 0;
  out.push_back(exact_count("bernoulli-mean-zero", bad, n));

  bad = n = 0;
  for (int m = 0; m <= 30; ++m)
    for (const auto& a : points) {
      ++n;
      mpq_class sym = bernoulli_polynomial(m)(mpq_class(1 - a));
      if (m % 2 == 1) sym = -sym;
      bad += sym != bernoulli_polynomial(m)(a);
    }
  out.push_back(exact_count("bernoulli-reflection", bad, n));

  bad = n = 0;
  for (int q = 2; q <= 8; ++q)
    for (int m = 0; m <= 20; ++m) {
      ++n;
      mpq_class s = 0;
      for (int r = 1; r < q; ++r) s += bernoulli_polynomial(m)(mpq_class(r, q));
      const mpq_class factor = m >= 1 ? mpq_class(1) / power(q, m - 1) : mpq_class(q);
      bad += s != (factor - 1) * bernoulli_number(m);
    }
  out.push_back(exact_count("bernoulli-multiplication", bad, n));

  bad = n = 0;
  for (int m = 0; m <= 30; ++m)
    for (const auto& x : points) {
      ++n;
      bad += euler_polynomial(m)(mpq_class(x + 1)) + euler_polynomial(m)(x) != 2 * power(x, m);
    }
  out.push_back(exact_count("euler-shift", bad, n));

  bad = n = 0;
  for (int m = 0; m <= 40; ++m, ++n) bad += euler_polynomial(m)(mpq_class(0)) != euler_at_zero(m);
  out.push_back(exact_count("euler-at-zero", bad, n));

  // B_n(x) is monic and E_n(x) is monic
  bad = n = 0;
  for (int m = 0; m <= 30; ++m, n += 2)
    bad += (bernoulli_polynomial(m).leading() != 1) + (euler_polynomial(m).leading() != 1);
  out.push_back(exact_count("monic", bad, n));
  return out;
}

// ------------------------------------------------------------- stieltjes

Reports stieltjes_laurent_checks(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  for (const char* a : {"1", "0.5", "2"}) {
    const Complex A = mp::parse_complex(a);
    for (int k = 0; k <= 2; ++k)
      out.push_back(digits_check("prop-3-gamma" + std::to_string(k) + "-a" + a, stieltjes(k, A, ctx).value,
                                 oracle::stieltjes_laurent(k, A, ctx).value, 25, ctx));
  }
  return out;
}

Reports gamma0_digamma(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  for (const char* a : {"1", "0.5", "2"}) {
    const Complex A = mp::parse_complex(a);
    out.push_back(digits_check(std::string("gamma0-digamma-a") + a, gamma0(A, ctx).value,
                               -oracle::digamma_ref(A, ctx).value, 45, ctx));
  }
  return out;
}

Reports lemma1(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  const Real e = mp::exp(Real(1));
  out.push_back(digits_check("eq-1.14", -bernoulli_sum_closed(Complex(1), ctx).value, Complex(Real(1) - mp::log(e - 1L)),
                             40, ctx));
  for (const char* a : {"1", "1.5"}) {
    const Complex A = mp::parse_complex(a);
    out.push_back(digits_check(std::string("eq-1.13-a") + a, bernoulli_sum_closed(A, ctx).value,
                               bernoulli_sum_direct(1, A, Real(-1), ctx).value, 40, ctx));
    for (const char* t : {"-0.5", "-2"}) {
      const Real T(t);
      out.push_back(digits_check(std::string("eq-1.15-a") + a + "-t" + t, bernoulli_sum_t(A, T, ctx).value,
                                 bernoulli_sum_direct(1, A, T, ctx).value, 40, ctx));
    }
    out.push_back(digits_check(std::string("eq-1.16-a") + a, bernoulli_sum_dilog(A, Real(-1), ctx).value,
                               bernoulli_sum_direct(2, A, Real(-1), ctx).value, 15, ctx));
    out.push_back(digits_check(std::string("eq-1.17-a") + a, gamma0_integral_form(A, ctx).value,
                               incomplete_gamma_zero_sum(A, ctx).value, 15, ctx));
  }
  return out;
}

// ----------------------------------------------------------------- gamma

constexpr std::pair<double, double> kGammaPoints[] = {{0.5, 1.0}, {2.0, 3.0}, {1.0, 0.25}};

std::string point_id(double s, double x) { return "-s" + num(s) + "-x" + num(x); }

Reports eq_1_9(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  for (auto [s, x] : kGammaPoints)
    out.push_back(digits_check("eq-1.9" + point_id(s, x), gamma_inc_param_deriv(1, Complex(s), Real(x), ctx).value,
                               oracle::gamma_inc_quad(Complex(s), Real(x), ctx, 1).value, 30, ctx));
  return out;
}

// (3.2): ln^m x Gamma(a,x) + m x sum_i (m-1)!/(m-1-i)! ln^{m-1-i} x T(3+i, a, x)
Complex eq_3_2(int m, const Complex& a, const Real& x, const PrecisionContext& ctx) {
  const Real lx = mp::log(x);
  Complex sum;
  Real perm(1);
  for (int i = 0; i < m; ++i) {
    sum += t_function(3 + i, a, x, ctx).value * (perm * mp::pow(lx, static_cast<long>(m - 1 - i)));
    perm *= static_cast<long>(m - 1 - i);
  }
  return upper_gamma(a, x, ctx).value * mp::pow(lx, static_cast<long>(m)) + sum * (x * static_cast<long>(m));
}

Reports incomplete_gamma_relations(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  for (auto [s, x] : kGammaPoints) {
    const Complex a(s);
    const Real X(x), lx = mp::log(X);
    const Complex q1 = oracle::gamma_inc_quad(a, X, ctx, 1).value;
    const Complex q2 = oracle::gamma_inc_quad(a, X, ctx, 2).value;
    const Complex g = upper_gamma(a, X, ctx).value;
    const Complex t3 = t_function(3, a, X, ctx).value, t4 = t_function(4, a, X, ctx).value;
    out.push_back(digits_check("eq-3.1a" + point_id(s, x), t3 * X + g * lx, q1, 15, ctx));
    out.push_back(digits_check("eq-3.1b" + point_id(s, x), g * (lx * lx) + (t3 * lx + t4) * (X * 2L), q2, 15, ctx));
    for (int m = 1; m <= 3; ++m)
      out.push_back(digits_check("eq-3.2-m" + std::to_string(m) + point_id(s, x), eq_3_2(m, a, X, ctx),
                                 oracle::gamma_inc_quad(a, X, ctx, m).value, 15, ctx));
  }
  const Real h = mp::ldexp(Real(1), -40);
  const Complex a(0.5);
  const Real z(2);
  for (int m = 3; m <= 5; ++m) {
    Complex da = (t_function(m, a + Complex(h), z, ctx).value - t_function(m, a - Complex(h), z, ctx).value) / (h * 2L);
    Complex ra = t_function(m, a, z, ctx).value * mp::log(z) + t_function(m + 1, a, z, ctx).value * static_cast<long>(m - 1);
    out.push_back(digits_check("eq-3.3a-m" + std::to_string(m), da, ra, 15, ctx));
    Complex dz = (t_function(m, a, z + h, ctx).value - t_function(m, a, z - h, ctx).value) / (h * 2L);
    Complex rz = -(t_function(m - 1, a, z, ctx).value + t_function(m, a, z, ctx).value) / Complex(z);
    out.push_back(digits_check("eq-3.3b-m" + std::to_string(m), dz, rz, 15, ctx));
  }
  return out;
}

Reports lemma2(const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  Reports out;
  const Complex s(0.5);
  for (int m : {2, 3}) {
    std::vector<double> rel;
    Complex last_as, last_dr;
    for (double x : {20.0, 35.0, 50.0}) {
      last_as = pfp_unit_asymptotic_unchecked(m, s, Real(x), ctx).value;
      last_dr = pfp_unit(m, s, Real(x), ctx).value;
      rel.push_back(std::exp2(mp::log2_abs((last_as - last_dr) / last_dr)));
    }
    double rise = 0.0;
    for (std::size_t i = 1; i < rel.size(); ++i) rise = std::max(rise, rel[i] - rel[i - 1]);
    VerificationReport mono = compare("lemma-2-m" + std::to_string(m) + "-decreasing", Complex(rel.back()),
                                      Complex(rel.front()), 0.0);
    mono.abs_delta = rise;
    mono.passed = rise <= 0.0;
    mono.note = "relative errors at x = 20, 35, 50: " + sci(rel[0]) + ", " + sci(rel[1]) + ", " + sci(rel[2]);
    out.push_back(mono);
    VerificationReport at50 = compare("lemma-2-m" + std::to_string(m) + "-x50", last_as, last_dr, 0.0);
    at50.tolerance = 1e-10 * std::exp2(mp::log2_abs(last_dr));
    at50.passed = at50.abs_delta <= at50.tolerance;
    out.push_back(at50);
  }
  return out;
}

// ---------------------------------------------------------------- contour

Reports prop4(const PrecisionContext& ctx) {
  using contour::IntegrandKind;
  struct Cell {
    const char* id;
    IntegrandKind kind;
    double c, T, x;
  };
  const Cell cells[] = {{"prop-4-I-c0.5", IntegrandKind::Zeta, 0.5, 1000, 0.0},
                        {"prop-4-I-c2", IntegrandKind::Zeta, 2.0, 500, 0.0},
                        {"prop-4-Ia-c0", IntegrandKind::Eta, 0.0, 500, 0.0},
                        {"prop-4-Ia-c0.5", IntegrandKind::Eta, 0.5, 500, 0.0},
                        {"prop-4-IL-c1-x0.5", IntegrandKind::Polylog, 1.0, 300, 0.5},
                        {"prop-4-IL-c-1-x0.5", IntegrandKind::Polylog, -1.0, 300, 0.5}};
  Reports out;
  for (const auto& c : cells) {
    auto v = contour::evaluate(contour::make_spec(c.kind, c.c, c.T, c.x), ctx);
    const double expected = contour::expected_value(c.kind, c.c, c.x);
    out.push_back(compare(c.id, v.value, Complex(expected), 5e-3));
    out.back().note = "T = " + num(c.T) + ", err " + sci(v.err);
  }
  return out;
}

Reports remark_powers(const PrecisionContext& ctx) {
  const double pi = 3.14159265358979323846;
  Reports out;
  for (auto [c, p] : {std::pair{0.5, 2}, {0.25, 3}}) {
    auto v = contour::evaluate_power(c, p, 500, ctx);
    const double re = v.value.re().to_double();
    const double target = std::fabs(re + pi) < std::fabs(re + 2 * pi) ? -pi : -2 * pi;
    VerificationReport r = compare("remark-power-p" + std::to_string(p) + "-c" + num(c), v.value, Complex(target), v.err);
    r.asserted = false;
    r.note = "|v + pi| " + sci(std::fabs(re + pi)) + ", |v + 2pi| " + sci(std::fabs(re + 2 * pi)) +
             (r.passed ? ", nearest within err" : ", neither within err");
    out.push_back(r);
  }
  return out;
}

std::vector<Check> build_registry() {
  return {
      {"prop-1-eta-negint", "identities", 1, eta_special},
      {"lambda-invariance", "identities", 2, lambda_invariance},
      {"hurwitz-vs-em", "identities", 3, oracle_agreement},
      {"corollary-1", "identities", 4, corollary1},
      {"corollary-2", "identities", 5, corollary2},
      {"polynomial-identities", "identities", 11, polynomial_identities},
      {"prop-3-laurent", "stieltjes", 6, stieltjes_laurent_checks},
      {"gamma0-digamma", "stieltjes", 6, gamma0_digamma},
      {"lemma-1", "stieltjes", 7, lemma1},
      {"eq-1.9", "gamma", 8, eq_1_9},
      {"eq-3.x", "gamma", 8, incomplete_gamma_relations},
      {"lemma-2", "gamma", 9, lemma2},
      {"prop-4", "contour", 10, prop4},
      {"remark-powers", "contour", 10, remark_powers},
  };
}

}  // namespace

double relative_tolerance(int digits, const PrecisionContext& ctx, const Complex& rhs) {
  const int d = std::max(1, std::min(digits, ctx.target_digits - 5));
  return std::pow(10.0, -d) * std::max(1.0, std::exp2(mp::log2_abs(rhs)));
}

Real euler_zero_sum(int shift, long terms) {
  EulerScaled e(Real(0));
  Real sum;
  for (long n = 0; n < terms; ++n) sum += e(n) / Real(n + shift);
  return sum / 2L;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "stieltjes", "gamma", "contour"};
  return names;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = build_registry();
  return checks;
}

std::vector<const Check*> checks_for_suite(const std::string& suite) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw DomainError("unknown suite '" + suite + "'");
  std::vector<const Check*> out;
  for (const auto& c : registry())
    if (suite == "all" || c.suite == suite) out.push_back(&c);
  return out;
}

std::vector<const Check*> checks_for_criterion(int criterion) {
  std::vector<const Check*> out;
  for (const auto& c : registry())
    if (c.criterion == criterion) out.push_back(&c);
  return out;
}

std::vector<VerificationReport> run_checks(const std::vector<const Check*>& checks, const PrecisionContext& ctx,
                                           const std::function<void(const VerificationReport&)>& emit,
                                           unsigned threads) {
  ctx.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, checks.size())));

  std::vector<Reports> results(checks.size());
  auto run_one = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    Reports r;
    try {
      r = checks[i]->run(ctx);
    } catch (const std::exception& e) {
      VerificationReport fail;
      fail.identity_id = checks[i]->id;
      fail.abs_delta = std::numeric_limits<double>::infinity();
      fail.note = e.what();
      r.push_back(fail);
    }
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    for (auto& rep : r) {
      rep.runtime_ms = ms;
      rep.context_echo = ctx;
    }
    results[i] = std::move(r);
  };

  std::vector<VerificationReport> all;
  auto flush = [&](Reports& r) {
    for (auto& rep : r) {
      if (emit) emit(rep);
      all.push_back(std::move(rep));
    }
  };
  if (threads == 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      run_one(i);
      flush(results[i]);
    }
    return all;
  }
  {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  for (auto& r : results) flush(r);
  return all;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return !r.asserted || r.passed; });
}

}  // namespace zetakit::verify
