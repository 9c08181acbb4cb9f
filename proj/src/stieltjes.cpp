#include "zetakit/stieltjes.hpp"

#include "detail.hpp"
#include "zetakit/hypergeom.hpp"
#include "zetakit/oracles.hpp"
#include "zetakit/polynomials.hpp"
#include "zetakit/zeta.hpp"

#include <cmath>
#include <numbers>

namespace zetakit {

using namespace detail;

namespace {

constexpr double kPi = std::numbers::pi;

Real real_param(const Complex& a, const char* what) {
  if (!a.im().is_zero()) throw DomainError(std::string(what) + ": only real a is supported");
  if (a.re() <= 0L) throw DomainError(std::string(what) + ": a must have positive real part");
  return a.re();
}

void check_lambda(const PrecisionContext& ctx, const char* what) {
  if (!(ctx.lambda > 0.0 && ctx.lambda < 2.0 * kPi))
    throw DomainError(std::string(what) + ": lambda must lie in (0, 2 pi)");
}

// a = a0 + shift with a0 in (1, 2] when a > 2
long reduce(const Real& a, Real& a0) {
  a0 = a;
  if (a <= 2L) return 0;
  const long shift = mp::ceil(a - 2L).to_long();
  a0 = a - Real(shift);
  return shift;
}

// sum_{m>=1} [B_m(a)/m!] t^m / m^power.  With a = a0 + K, a0 in (0, 1],
// |B_j(a)|/j! <= 4/(2 pi)^j + K a^{j-1}/(j-1)!.
ApproxValue bernoulli_series(int power, const Real& a, const Real& t, const PrecisionContext& ctx) {
  const double at = std::fabs(t.to_double());
  if (!(at < 2.0 * kPi)) throw DomainError("Bernoulli series needs |t| < 2 pi");
  const double ad = a.to_double();
  const double shifts = std::max(0.0, std::ceil(ad) - 1.0);
  BernoulliScaled b(a);
  Real pw(1);
  TermGenerator term = [&](long m) {
    pw *= t;
    return Complex(b(m) * pw / mp::pow(Real(m), static_cast<long>(power)));
  };
  const double r = at / (2.0 * kPi);
  AnalyticTailRule rule{[=](long m, const Complex&) {
    const double lead = -power * std::log(static_cast<double>(m + 1));
    const double geo = std::log(4.0) + (m + 1) * std::log(r) - std::log1p(-r);
    double tail = std::exp(lead + geo);
    if (shifts > 0.0 && ad * at > 0.0)
      tail += std::exp(lead + std::log(shifts * at) + m * std::log(ad * at) + ad * at -
                       std::lgamma(static_cast<double>(m) + 1.0));
    return tail;
  }};
  SeriesOptions opts;
  opts.first_index = 1;
  opts.check_cancellation = false;
  return sum_series(term, rule, ctx, opts);
}

// 2F1(1, a; a+1; w) = sum_j a w^j / (a+j), 0 <= w < 1; terms fall by at least w.
ApproxValue f21_sum(const Real& a, const Real& w, const PrecisionContext& ctx) {
  const double wd = w.to_double();
  Real pw(1);
  double last = 1.0;
  TermGenerator term = [&](long j) {
    if (j > 0) pw *= w;
    Real v = a * pw / (a + Real(j));
    last = v.to_double();
    return Complex(v);
  };
  AnalyticTailRule rule{[&](long, const Complex&) { return last * wd / (1.0 - wd); }};
  SeriesOptions opts;
  opts.check_cancellation = false;
  return sum_series(term, rule, ctx, opts);
}

Real f21_value(const Real& a, const Real& w, const PrecisionContext& ctx) { return f21_sum(a, w, ctx).value.re(); }

// e^{at} 2F1(1,a;a+1;e^t) + a(gamma + ln(-t) + psi(a)) for t < 0.  Near t = 0
// the logarithmic expansion of 2F1 about w = 1 removes the cancellation:
//   a(gamma+psi(a))(1 - e^{at}) + a ln(-t/(1-e^t))
//     + a e^{at} sum_{k>=1} (a)_k/k! [psi(k+1) - psi(a+k)] (1-e^t)^k.
Real bracket(const Real& a, const Real& t, const Real& g, const Real& psi_a, const PrecisionContext& ctx) {
  if (t < Real(-0.5)) return mp::exp(a * t) * f21_value(a, mp::exp(t), ctx) + a * (g + mp::log(-t) + psi_a);
  const Real u = -mp::expm1(t);
  Real sum;
  Real coef(1);       // (a)_k / k!
  Real d = -g - psi_a;  // psi(k+1) - psi(a+k)
  Real upow(1);
  const long bits = mp::current_bits();
  for (long k = 1; k < 100000; ++k) {
    coef = coef * (a + Real(k - 1)) / Real(k);
    d += Real(1) / Real(k) - Real(1) / (a + Real(k - 1));
    upow *= u;
    sum += coef * d * upow;
    // the bracket is O(u); d grows like ln k
    const double bound = (coef * upow).log2_abs() + std::log2(1.0 + std::fabs(d.to_double()));
    if (k > 4 && bound < u.log2_abs() - static_cast<double>(bits) - 8.0) break;
  }
  return a * (g + psi_a) * (-mp::expm1(a * t)) + a * mp::log(-t / u) + a * mp::exp(a * t) * sum;
}

// sum_{n>=0} Gamma(0, n+a)/(n+a) with Gamma(0, x) <= e^{-x}/x.
ApproxValue gamma_zero_sum(const Real& a, const PrecisionContext& ctx) {
  const double ad = a.to_double();
  TermGenerator term = [&](long n) {
    Real x = a + Real(n);
    return upper_gamma(Complex(0), x, ctx).value / Complex(x);
  };
  AnalyticTailRule rule{[=](long n, const Complex&) {
    const double x = static_cast<double>(n + 1) + ad;
    return std::exp(-x - 2.0 * std::log(x)) / (1.0 - std::exp(-1.0));
  }};
  SeriesOptions opts;
  opts.check_cancellation = false;
  return sum_series(term, rule, ctx, opts);
}

void add(Raw& r, const ApproxValue& v, double weight = 1.0) {
  r.err += v.err * weight;
  r.terms += v.terms_used;
  r.peak_log2 = std::max(r.peak_log2, std::log2(std::max(v.peak_magnitude, 1e-300)) + std::log2(weight));
  r.note(v.value);
}

// gamma_k(a) = gamma_k(a0) - sum_{j<K} ln^k(a0+j)/(a0+j)
void unshift(Raw& r, int k, const Real& a0, long shift) {
  for (long j = 0; j < shift; ++j) {
    Real x = a0 + Real(j);
    Real t = mp::pow(mp::log(x), static_cast<long>(k)) / x;
    r.note(Complex(t));
    r.value -= Complex(t);
  }
  r.note(r.value);
}

// gamma_1(a0) assembled at the current precision
Raw gamma1_raw(const Real& a, const PrecisionContext& inner, std::vector<SeriesPart>& parts) {
  const Real g = oracle::euler_gamma();
  const Real psi = oracle::digamma(a);
  ApproxValue s0 = gamma_zero_sum(a, inner);
  ApproxValue b2 = bernoulli_series(2, a, Real(-1), inner);
  Raw r;
  Real c = g * g / 2L + g * psi + oracle::zeta2() / 2L;
  r.note(Complex(c));
  r.value = Complex(c) - s0.value + b2.value;
  add(r, s0);
  add(r, b2);
  parts = {{"incomplete_gamma", s0.terms_used}, {"bernoulli", b2.terms_used}};
  return r;
}

ApproxValue with_parts(ApproxValue v, std::vector<SeriesPart> parts) {
  v.parts = std::move(parts);
  return v;
}

}  // namespace

// ------------------------------------------------------------ constants

ApproxValue gamma0(const Complex& a_in, const PrecisionContext& ctx) {
  ctx.validate();
  check_lambda(ctx, "gamma0");
  const Real a = real_param(a_in, "gamma0");
  std::vector<SeriesPart> parts;
  ApproxValue v = guarded(ctx, 0.0, "gamma0", [&](const PrecisionContext& inner) {
    Real a0;
    const long shift = reduce(a, a0);
    const Real lambda(ctx.lambda);
    // -psi(a) = ln lambda + gamma + e^{-lambda a} Phi(e^{-lambda}, 1, a) + sum (-1)^m B_m(a) lambda^m/(m m!)
    ApproxValue phi = lerch_phi(Complex(mp::exp(-lambda)), Complex(1), Complex(a0), inner);
    ApproxValue bs = bernoulli_series(1, a0, -lambda, inner);
    Raw r;
    Complex head = Complex(mp::log(lambda) + oracle::euler_gamma());
    Complex lead = Complex(mp::exp(-lambda * a0)) * phi.value;
    r.note(head);
    r.value = head + lead + bs.value;
    add(r, phi, mag(lead) / std::max(mag(phi.value), 1e-300));
    add(r, bs);
    parts = {{"lerch", phi.terms_used}, {"bernoulli", bs.terms_used}};
    unshift(r, 0, a0, shift);
    return r;
  });
  return with_parts(std::move(v), parts);
}

ApproxValue gamma1(const Complex& a_in, const PrecisionContext& ctx) {
  ctx.validate();
  const Real a = real_param(a_in, "gamma1");
  std::vector<SeriesPart> parts;
  ApproxValue v = guarded(ctx, 0.0, "gamma1", [&](const PrecisionContext& inner) {
    Real a0;
    const long shift = reduce(a, a0);
    Raw r = gamma1_raw(a0, inner, parts);
    unshift(r, 1, a0, shift);
    return r;
  });
  return with_parts(std::move(v), parts);
}

ApproxValue gamma2(const Complex& a_in, const PrecisionContext& ctx) {
  ctx.validate();
  const Real a = real_param(a_in, "gamma2");
  const double cut = pfp_asymptotic_switch(ctx);
  std::vector<SeriesPart> parts;
  ApproxValue v = guarded(ctx, 0.0, "gamma2", [&](const PrecisionContext& inner) {
    Real a0;
    const long shift = reduce(a, a0);
    const Real g = oracle::euler_gamma();
    const Real z2 = oracle::zeta2();
    const Real z3 = oracle::zeta3();
    const Real psi = oracle::digamma(a0);

    // sum_n { -3F3(1,1,1;2,2,2;-(n+a)) + [gamma L + gamma^2/2 + zeta(2)/2 + L^2/2]/(n+a) },
    // each summand equal to the exponentially small part of the 3F3
    Complex braces;
    double braces_err = 0.0;
    long n = 0;
    long pfp_terms = 0;
    double peak = 0.0;
    for (;; ++n) {
      Real x = a0 + Real(n);
      const double xd = x.to_double();
      if (xd >= cut) {
        braces_err += std::exp(-xd - 3.0 * std::log(xd)) / (1.0 - std::exp(-1.0));
        break;
      }
      ApproxValue f = pfp_unit(3, Complex(1), x, inner);
      Real L = mp::log(x);
      Real alg = (g * L + g * g / 2L + z2 / 2L + L * L / 2L) / x;
      braces += Complex(alg) - f.value;
      braces_err += f.err;
      pfp_terms += f.terms_used;
      peak = std::max(peak, alg.to_double());
    }
    ApproxValue b3 = bernoulli_series(3, a0, Real(-1), inner);
    std::vector<SeriesPart> g1_parts;
    Raw g1 = gamma1_raw(a0, inner, g1_parts);

    // gamma_2(a)/2 = RHS + gamma^3/6 + gamma zeta(2)/2 + (gamma^2/2 + zeta(2)/2) psi(a) - gamma gamma_1(a) + zeta(3)/3
    Real consts = g * g * g / 6L + g * z2 / 2L + (g * g / 2L + z2 / 2L) * psi + z3 / 3L;
    Raw r;
    r.value = (braces + b3.value + Complex(consts) - Complex(g) * g1.value) * 2L;
    r.err = 2.0 * (braces_err + b3.err + g1.err * g.to_double());
    r.peak_log2 = std::max({std::log2(std::max(peak, 1e-300)) + 1.0, g1.peak_log2 + 1.0});
    r.note(Complex(consts) * 2L);
    add(r, b3, 2.0);
    r.terms = pfp_terms + b3.terms_used + g1.terms;
    parts = {{"pfp3", n}, {"bernoulli", b3.terms_used}, {"incomplete_gamma", g1_parts[0].terms}};
    unshift(r, 2, a0, shift);
    return r;
  });
  return with_parts(std::move(v), parts);
}

ApproxValue stieltjes(int k, const Complex& a, const PrecisionContext& ctx) {
  switch (k) {
    case 0: return gamma0(a, ctx);
    case 1: return gamma1(a, ctx);
    case 2: return gamma2(a, ctx);
    default: throw DomainError("stieltjes: only k = 0, 1, 2 are available");
  }
}

// -------------------------------------------------------------- Lemma 1

ApproxValue hyp2f1_unit(const Complex& a_in, const Real& w, const PrecisionContext& ctx) {
  ctx.validate();
  const Real a = real_param(a_in, "hyp2f1_unit");
  if (w < 0L || w >= 1L) throw DomainError("hyp2f1_unit: w must lie in [0, 1)");
  return guarded(ctx, 0.0, "hyp2f1_unit", [&](const PrecisionContext& inner) {
    ApproxValue s = f21_sum(a, w, inner);
    Raw r;
    r.value = s.value;
    add(r, s);
    return r;
  });
}

ApproxValue bernoulli_sum_direct(int power, const Complex& a_in, const Real& t, const PrecisionContext& ctx) {
  ctx.validate();
  const Real a = real_param(a_in, "bernoulli_sum_direct");
  if (power < 1) throw DomainError("bernoulli_sum_direct: power must be >= 1");
  const double extra = a.to_double() * std::fabs(t.to_double()) * kLog2E;
  return guarded(ctx, extra, "bernoulli_sum_direct", [&](const PrecisionContext& inner) {
    ApproxValue s = bernoulli_series(power, a, t, inner);
    Raw r;
    r.value = s.value;
    add(r, s);
    return r;
  });
}

ApproxValue bernoulli_sum_closed(const Complex& a, const PrecisionContext& ctx) {
  return bernoulli_sum_t(a, Real(-1), ctx);
}

ApproxValue bernoulli_sum_t(const Complex& a_in, const Real& t, const PrecisionContext& ctx) {
  ctx.validate();
  const Real a = real_param(a_in, "bernoulli_sum_t");
  if (t >= 0L) throw DomainError("bernoulli_sum_t: t must be negative");
  return guarded(ctx, 8.0, "bernoulli_sum_t", [&](const PrecisionContext& inner) {
    const Real g = oracle::euler_gamma();
    const Real psi = oracle::digamma(a);
    Raw r;
    Real b = bracket(a, t, g, psi, inner);
    r.value = Complex(-b / a);
    r.note(Complex(g + psi));
    r.note(Complex(mp::log(-t)));
    r.note(r.value);
    return r;
  });
}

ApproxValue bernoulli_sum_dilog(const Complex& a_in, const Real& z, const PrecisionContext& ctx) {
  ctx.validate();
  const Real a = real_param(a_in, "bernoulli_sum_dilog");
  if (z > 0L) throw DomainError("bernoulli_sum_dilog: z must be negative");
  if (z.is_zero()) {
    ApproxValue out;
    out.terms_used = 0;
    return out;
  }
  return guarded(ctx, 8.0, "bernoulli_sum_dilog", [&](const PrecisionContext& inner) {
    const Real g = oracle::euler_gamma();
    const Real psi = oracle::digamma(a);
    // -(1/a) int_0^z bracket(t)/t dt = (1/a) int_z^0 bracket(t)/t dt
    auto f = [&](const Real& t) { return Complex(bracket(a, t, g, psi, inner) / t); };
    const double tol = std::exp2(-static_cast<double>(ctx.working_bits) + 4);
    ApproxValue q = tanh_sinh(f, z, Real(0), inner, tol, 0.0, 14);
    Raw r;
    r.value = q.value / a;
    r.err = q.err / a.to_double();
    r.terms = q.terms_used;
    r.note(r.value);
    return r;
  });
}

ApproxValue incomplete_gamma_zero_sum(const Complex& a_in, const PrecisionContext& ctx) {
  ctx.validate();
  const Real a = real_param(a_in, "incomplete_gamma_zero_sum");
  return guarded(ctx, 0.0, "incomplete_gamma_zero_sum", [&](const PrecisionContext& inner) {
    ApproxValue s = gamma_zero_sum(a, inner);
    Raw r;
    r.value = s.value;
    add(r, s);
    return r;
  });
}

ApproxValue gamma0_integral_form(const Complex& a_in, const PrecisionContext& ctx) {
  ctx.validate();
  const Real a = real_param(a_in, "gamma0_integral_form");
  return guarded(ctx, 8.0, "gamma0_integral_form", [&](const PrecisionContext& inner) {
    const Real am1 = a - 1L;
    auto f = [&](const Real& u) { return Complex(mp::pow(u, am1) * f21_value(a, u, inner) / mp::log(u)); };
    const double tol = std::exp2(-static_cast<double>(ctx.working_bits) + 4);
    ApproxValue q = tanh_sinh(f, Real(0), mp::exp(Real(-1)), inner, tol, 0.0, 14);
    Raw r;
    r.value = -q.value / a;
    r.err = q.err / a.to_double();
    r.terms = q.terms_used;
    r.note(r.value);
    return r;
  });
}

// ------------------------------------------------------------ ln Gamma

ApproxValue log_gamma_series(const Complex& x_in, const PrecisionContext& ctx) {
  ctx.validate();
  check_lambda(ctx, "log_gamma_series");
  const Real x = real_param(x_in, "log_gamma_series");
  std::vector<SeriesPart> parts;
  ApproxValue v = guarded(ctx, 0.0, "log_gamma_series", [&](const PrecisionContext& inner) {
    Real x0;
    const long shift = reduce(x, x0);
    const double lam = ctx.lambda;
    const Real lambda(lam);
    const double c = std::min(x0.to_double(), 1.0);

    // sum_n { Gamma[0, lambda(n+x)] - Gamma[0, lambda(n+1)] }, each below e^{-y}/y, y = lambda(n+c)
    TermGenerator gterm = [&](long n) {
      return upper_gamma(Complex(0), lambda * (x0 + Real(n)), inner).value -
             upper_gamma(Complex(0), lambda * Real(n + 1), inner).value;
    };
    AnalyticTailRule grule{[=](long n, const Complex&) {
      const double y = lam * (static_cast<double>(n + 1) + c);
      return 2.0 * std::exp(-y - std::log(y)) / (-std::expm1(-lam));
    }};
    SeriesOptions gopts;
    gopts.check_cancellation = false;
    ApproxValue gs = sum_series(gterm, grule, inner, gopts);

    // sum_{m>=2} (-1)^m [B_m(x) - B_m] lambda^{m-1} / ((m-1) m!)
    BernoulliScaled bx(x0);
    BernoulliScaled b0(Real(0));
    Real pw(1);
    TermGenerator bterm = [&](long m) {
      pw = mp::pow(lambda, m - 1);
      Real t = (bx(m) - b0(m)) * pw / Real(m - 1);
      return Complex(m % 2 == 1 ? -t : t);
    };
    // |B_j(x) - B_j|/j! <= 8/(2 pi)^j + 1/(j-1)! for 0 < x <= 2
    const double r = lam / (2.0 * kPi);
    AnalyticTailRule brule{[=](long m, const Complex&) {
      const double geo = std::log(8.0) + (m + 1) * std::log(r) - std::log1p(-r);
      const double fac = (m + 1) * std::log(lam) + lam - std::lgamma(static_cast<double>(m) + 1.0);
      return (std::exp(geo) + std::exp(fac)) / (lam * static_cast<double>(m));
    }};
    SeriesOptions bopts;
    bopts.first_index = 2;
    bopts.check_cancellation = false;
    ApproxValue bs = sum_series(bterm, brule, inner, bopts);

    Raw rr;
    Real head = oracle::euler_gamma() * (Real(1) - x0) - mp::log(lambda) * (x0 - 1L);
    rr.note(Complex(head));
    rr.value = Complex(head) + gs.value + bs.value;
    add(rr, gs);
    add(rr, bs);
    parts = {{"incomplete_gamma", gs.terms_used}, {"bernoulli", bs.terms_used}};
    for (long j = 0; j < shift; ++j) rr.value += Complex(mp::log(x0 + Real(j)));
    rr.note(rr.value);
    return rr;
  });
  return with_parts(std::move(v), parts);
}

}  // namespace zetakit
