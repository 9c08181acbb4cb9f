#include "zetakit/zeta.hpp"

#include "detail.hpp"
#include "zetakit/hypergeom.hpp"
#include "zetakit/oracles.hpp"
#include "zetakit/polynomials.hpp"

#include <cmath>
#include <numbers>

namespace zetakit {

using namespace detail;

namespace {

constexpr double kPi = std::numbers::pi;

Real real_shift(const Complex& a, const char* what) {
  if (!a.im().is_zero())
    throw DomainError(std::string(what) + ": complex a needs Gamma(s, x) at complex x, which is not supported");
  if (a.re() <= 0L) throw DomainError(std::string(what) + ": a must have positive real part");
  return a.re();
}

void check_lambda(const PrecisionContext& ctx, double upper, const char* what) {
  if (!(ctx.lambda > 0.0 && ctx.lambda < upper))
    throw DomainError(std::string(what) + ": lambda must lie in (0, " + (upper > 4.0 ? "2 pi" : "pi") + ")");
}

void check_pole(const Complex& s, const char* what) {
  Complex d = s - Complex(1);
  if (mag(d) < 1e-3) throw PoleError(std::string(what) + ": |s - 1| < 1e-3, use the Laurent data instead");
}

// sum_{n>=0} (+-1)^n Gamma(s, lambda (n+a)) / (n+a)^s with the bound
// Gamma(sigma, x) <= x^{sigma-1} e^{-x} / (1 - max(0, sigma-1)/x), which
// decreases at least by e^{-lambda} per step once x > max(0, sigma-1).
ApproxValue gamma_sum(const Complex& s, const Real& a, bool alternate, const PrecisionContext& ctx,
                      double abs_floor) {
  const double sigma = s.re().to_double();
  const double lam = ctx.lambda;
  const double ad = a.to_double();
  const Real lambda(lam);
  TermGenerator term = [&](long n) {
    Real w = a + Real(n);
    Complex t = upper_gamma(s, lambda * w, ctx).value / mp::pow(w, s);
    return (alternate && n % 2 == 1) ? -t : t;
  };
  AnalyticTailRule rule{[=](long n, const Complex&) {
    const double w = static_cast<double>(n + 1) + ad;
    const double x = lam * w;
    const double c = std::max(0.0, sigma - 1.0);
    if (x <= c + 1.0) return -1.0;
    const double lb = (sigma - 1.0) * std::log(x) - x - std::log1p(-c / x) - sigma * std::log(w);
    return std::exp(lb) / (-std::expm1(-lam));
  }};
  SeriesOptions opts;
  opts.abs_floor = abs_floor;
  opts.check_cancellation = false;
  return sum_series(term, rule, ctx, opts);
}

// lambda^{s-1} sum_m (-1)^m [B_m(a)/m!] lambda^m / (m+s-1), 0 < a <= 2.
ApproxValue bernoulli_sum(const Complex& s, const Real& a, const PrecisionContext& ctx) {
  const double sigma = s.re().to_double();
  const double lam = ctx.lambda;
  const Real lambda(lam);
  BernoulliScaled b(a);
  Real pw(1);
  TermGenerator term = [&](long m) {
    if (m > 0) pw *= lambda;
    Complex t = Complex(b(m) * pw) / (s + Complex(m - 1));
    return (m % 2 == 1) ? -t : t;
  };
  // |B_j(a)|/j! <= 4/(2 pi)^j + 1/(j-1)! for 0 < a <= 2, j >= 1
  const double r = lam / (2.0 * kPi);
  AnalyticTailRule rule{[=](long m, const Complex&) {
    const double d = static_cast<double>(m) + sigma;
    if (d <= 0.5) return -1.0;
    const double geo = std::log(4.0) + (m + 1) * std::log(r) - std::log1p(-r);
    const double fac = (m + 1) * std::log(lam) + lam - std::lgamma(static_cast<double>(m) + 1.0);
    return std::exp(-std::log(d)) * (std::exp(geo) + std::exp(fac));
  }};
  SeriesOptions opts;
  opts.check_cancellation = false;
  ApproxValue out = sum_series(term, rule, ctx, opts);
  Complex scale = mp::pow(lambda, s - Complex(1));
  out.value *= scale;
  const double f = mag(scale);
  out.err *= f;
  out.peak_magnitude *= f;
  return out;
}

// (1/2) lambda^s sum_n [E_n(x)/n!] lambda^n / (n+s), -1 <= x < 1.
ApproxValue euler_sum(const Complex& s, const Real& x, const PrecisionContext& ctx) {
  const double sigma = s.re().to_double();
  const double lam = ctx.lambda;
  const Real lambda(lam);
  EulerScaled e(x);
  Real pw(1);
  TermGenerator term = [&](long n) {
    if (n > 0) pw *= lambda;
    return Complex(e(n) * pw) / (s + Complex(n));
  };
  // |E_j(x)|/j! <= 5/pi^{j+1} + 2/j! for -1 <= x <= 1
  const double r = lam / kPi;
  AnalyticTailRule rule{[=](long n, const Complex&) {
    const double d = static_cast<double>(n + 1) + sigma;
    if (d <= 0.5) return -1.0;
    const double geo = std::log(5.0 / kPi) + (n + 1) * std::log(r) - std::log1p(-r);
    const double fac = std::log(2.0) + (n + 1) * std::log(lam) + lam - std::lgamma(static_cast<double>(n) + 2.0);
    return (std::exp(geo) + std::exp(fac)) / d;
  }};
  SeriesOptions opts;
  opts.check_cancellation = false;
  ApproxValue out = sum_series(term, rule, ctx, opts);
  Complex scale = mp::pow(lambda, s) / 2L;
  out.value *= scale;
  const double f = mag(scale);
  out.err *= f;
  out.peak_magnitude *= f;
  return out;
}

// Gamma(s) times the target, from one polynomial sum and one incomplete-Gamma sum.
Raw splitting(const Complex& s, const Real& a, bool alternating, const PrecisionContext& inner,
              std::vector<SeriesPart>& parts) {
  ApproxValue poly = alternating ? euler_sum(s, Real(1) - a, inner) : bernoulli_sum(s, a, inner);
  ApproxValue gam = gamma_sum(s, a, alternating, inner, mag(poly.value));
  Raw r;
  r.value = gam.value + poly.value;
  r.err = gam.err + poly.err;
  r.peak_log2 = std::log2(std::max({gam.peak_magnitude, poly.peak_magnitude, 1e-300}));
  r.note(gam.value);
  r.note(poly.value);
  r.terms = gam.terms_used + poly.terms_used;
  parts = {{"incomplete_gamma", gam.terms_used}, {alternating ? "euler" : "bernoulli", poly.terms_used}};
  return r;
}

// Divides a Gamma-weighted Raw by Gamma(s), scaling the bookkeeping with it.
void divide_gamma(Raw& r, const Complex& s) {
  Complex g = oracle::gamma(s);
  const double gl = lmag(g);
  r.value /= g;
  r.err /= std::exp2(gl);
  r.peak_log2 -= gl;
}

ApproxValue with_parts(ApproxValue v, std::vector<SeriesPart> parts) {
  v.parts = std::move(parts);
  return v;
}

Real bernoulli_at(long n, const Real& a) {
  // exact polynomial, extra bits for the a^n growth
  const double grow = static_cast<double>(n) * std::max(1.0, std::log2(std::max(1.0, a.to_double()))) + 32.0;
  const mp::Bits bits = mp::current_bits();
  mp::PrecisionScope scope(bits + static_cast<long>(grow));
  return bernoulli_polynomial(static_cast<int>(n))(a).rounded(bits);
}

Real euler_at(long n, const Real& x) {
  const double grow = static_cast<double>(n) * std::max(1.0, std::log2(std::max(1.0, mp::abs(x).to_double()))) + 32.0;
  const mp::Bits bits = mp::current_bits();
  mp::PrecisionScope scope(bits + static_cast<long>(grow));
  return euler_polynomial(static_cast<int>(n))(x).rounded(bits);
}

ApproxValue exact_value(const Real& v, const PrecisionContext& ctx) {
  ApproxValue out;
  out.value = Complex(v.rounded(ctx.working_bits));
  out.err = std::exp2(v.log2_abs() - static_cast<double>(ctx.working_bits));
  out.terms_used = 1;
  out.peak_magnitude = mag(out.value);
  return out;
}

}  // namespace

// ------------------------------------------------------------------ zeta

ApproxValue hurwitz_zeta(const Complex& s, const Complex& a_in, const PrecisionContext& ctx) {
  ctx.validate();
  check_lambda(ctx, 2.0 * kPi, "hurwitz_zeta");
  const Real a = real_shift(a_in, "hurwitz_zeta");
  check_pole(s, "hurwitz_zeta");

  if (is_nonpositive_integer(s)) {
    // the polar Bernoulli term is the only survivor of the splitting
    mp::PrecisionScope scope(ctx.working_bits);
    const long k = -s.re().to_long();
    return exact_value(-bernoulli_at(k + 1, a) / (k + 1), ctx);
  }

  std::vector<SeriesPart> parts;
  ApproxValue v = guarded(ctx, 0.0, "hurwitz_zeta", [&](const PrecisionContext& inner) {
    // zeta(s, a) = zeta(s, a0) - sum_{j<K} (a0 + j)^{-s}, a0 in (1, 2]
    long shift = 0;
    Real a0 = a;
    if (a > 2L) {
      shift = mp::ceil(a - 2L).to_long();
      a0 = a - Real(shift);
    }
    Raw r = splitting(s, a0, false, inner, parts);
    divide_gamma(r, s);
    for (long j = 0; j < shift; ++j) {
      Complex t = mp::pow(a0 + Real(j), -s);
      r.note(t);
      r.value -= t;
    }
    r.note(r.value);
    return r;
  });
  if (!parts.empty()) parts.push_back({"shift", a > 2L ? mp::ceil(a - 2L).to_long() : 0});
  return with_parts(std::move(v), parts);
}

ApproxValue riemann_zeta(const Complex& s, const PrecisionContext& ctx) { return hurwitz_zeta(s, Complex(1), ctx); }

ApproxValue riemann_zeta_via_eta(const Complex& s, const PrecisionContext& ctx) {
  check_pole(s, "riemann_zeta_via_eta");
  mp::PrecisionScope scope(ctx.working_bits + 16);
  Complex f = Complex(1) - mp::pow(Real(2), Complex(1) - s);
  if (mag(f) <= 1e-3) throw DomainError("riemann_zeta_via_eta: 1 - 2^{1-s} is too close to zero");
  ApproxValue e = eta(s, ctx);
  e.value = rounded(e.value / f, ctx.working_bits);
  e.err /= mag(f);
  e.peak_magnitude /= mag(f);
  return e;
}

// ------------------------------------------------------------------- eta

mpq_class eta_negint(int j) {
  if (j < 0) throw DomainError("eta_negint: j must be >= 0");
  mpq_class v = euler_at_zero(j) / 2;
  if (j % 2 == 1) v = -v;
  v.canonicalize();
  return v;
}

ApproxValue eta(const Complex& s, const PrecisionContext& ctx) {
  ctx.validate();
  check_lambda(ctx, kPi, "eta");
  if (is_nonpositive_integer(s)) {
    mp::PrecisionScope scope(ctx.working_bits);
    return exact_value(Real(eta_negint(static_cast<int>(-s.re().to_long()))), ctx);
  }
  std::vector<SeriesPart> parts;
  ApproxValue v = guarded(ctx, 0.0, "eta", [&](const PrecisionContext& inner) {
    Raw r = splitting(s, Real(1), true, inner, parts);
    divide_gamma(r, s);
    return r;
  });
  return with_parts(std::move(v), parts);
}

// --------------------------------------------------------- half difference

ApproxValue alternating_hurwitz(const Complex& s, const Complex& a_in, const PrecisionContext& ctx) {
  ctx.validate();
  check_lambda(ctx, kPi, "alternating_hurwitz");
  const Real a = real_shift(a_in, "alternating_hurwitz");
  if (is_nonpositive_integer(s)) {
    mp::PrecisionScope scope(ctx.working_bits);
    const long j = -s.re().to_long();
    return exact_value(euler_at(j, a) / 2L, ctx);
  }
  std::vector<SeriesPart> parts;
  ApproxValue v = guarded(ctx, 0.0, "alternating_hurwitz", [&](const PrecisionContext& inner) {
    // F(a) = (a-1)^{-s} - F(a-1) brings a into (0, 2]
    long shift = 0;
    Real a0 = a;
    if (a > 2L) {
      shift = mp::ceil(a - 2L).to_long();
      a0 = a - Real(shift);
    }
    Raw r = splitting(s, a0, true, inner, parts);
    divide_gamma(r, s);
    for (long j = 0; j < shift; ++j) {
      Complex t = mp::pow(a0 + Real(j), -s);
      r.note(t);
      r.value = t - r.value;
    }
    r.note(r.value);
    return r;
  });
  return with_parts(std::move(v), parts);
}

ApproxValue hurwitz_half_diff(const Complex& s, const Complex& a, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(s)) throw PoleError("hurwitz_half_diff: Gamma(s) has a pole at nonpositive integers");
  ApproxValue f = alternating_hurwitz(s, a, ctx);
  mp::PrecisionScope scope(ctx.working_bits + 16);
  Complex g = oracle::gamma(s);
  f.value = rounded(f.value * g, ctx.working_bits);
  f.err *= mag(g);
  f.peak_magnitude *= mag(g);
  return f;
}

// -------------------------------------------------------- direct series

ApproxValue lerch_phi(const Complex& z, const Complex& s, const Complex& a, const PrecisionContext& ctx) {
  ctx.validate();
  const double zm = mag(z);
  if (zm >= 1.0 - 1e-6) throw DomainError("lerch_phi: |z| must be below 1 - 1e-6");
  if (a.re() <= 0L) throw DomainError("lerch_phi: a must have positive real part");
  if (z.is_zero()) {
    mp::PrecisionScope scope(ctx.working_bits);
    ApproxValue out;
    out.value = mp::pow(a, -s);
    out.err = mag(out.value) * std::exp2(-static_cast<double>(ctx.working_bits));
    out.terms_used = 1;
    out.peak_magnitude = mag(out.value);
    out.parts = {{"direct", 1}};
    return out;
  }
  const double sigma = s.re().to_double();
  const double tau = std::fabs(s.im().to_double());
  const double ar = a.re().to_double();
  const double ai = a.im().to_double();
  ApproxValue v = with_adaptive_guard(ctx, [&](const PrecisionContext& c) {
    mp::PrecisionScope scope(c.working_bits);
    double last = 0.0;
    Complex zp(1);
    TermGenerator term = [&](long n) {
      if (n > 0) zp *= z;
      Complex t = zp * mp::pow(a + Complex(n), -s);
      last = mag(t);
      return t;
    };
    // |t_{j+1}/t_j| <= |z| (1 + 1/|j+a|)^{max(0,-sigma)} e^{|Im s|/|j+a|}, decreasing in j
    AnalyticTailRule rule{[&](long n, const Complex&) {
      const double w = std::hypot(static_cast<double>(n) + ar, ai);
      const double q = zm * std::pow(1.0 + 1.0 / w, std::max(0.0, -sigma)) * std::exp(tau / w);
      if (q >= 1.0) return -1.0;
      return last * q / (1.0 - q);
    }};
    return sum_series(term, rule, c);
  });
  v.value = rounded(v.value, ctx.working_bits);
  v.parts = {{"direct", v.terms_used}};
  return v;
}

ApproxValue polylog(const Complex& s, const Real& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (std::fabs(x.to_double()) >= 1.0 - 1e-6) throw DomainError("polylog: |x| must be below 1 - 1e-6");
  if (x.is_zero()) {
    ApproxValue out;
    out.terms_used = 1;
    out.parts = {{"direct", 0}};
    return out;
  }
  // Li_s(x) = x Phi(x, s, 1)
  ApproxValue v = lerch_phi(Complex(x), s, Complex(1), ctx);
  mp::PrecisionScope scope(ctx.working_bits);
  v.value = v.value * Complex(x);
  const double xm = std::fabs(x.to_double());
  v.err *= xm;
  v.peak_magnitude *= xm;
  return v;
}

}  // namespace zetakit
