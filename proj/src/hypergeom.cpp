#include "zetakit/hypergeom.hpp"

#include "detail.hpp"

#include "zetakit/oracles.hpp"
#include "zetakit/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace zetakit {

using namespace detail;

namespace {

// ---------------------------------------------------------- Gamma(s, x)

Raw gamma_closed_form(long n, const Real& x) {
  // Gamma(n, x) = (n-1)! e^{-x} sum_{m<n} x^m/m!
  Raw r;
  Real term(1), sum(0);
  for (long m = 0; m < n; ++m) {
    if (m > 0) term = term * x / m;
    sum += term;
  }
  r.value = Complex(mp::factorial(static_cast<unsigned long>(n - 1)) * mp::exp(-x) * sum);
  r.terms = n;
  return r;
}

Raw gamma_continued_fraction(const Complex& s, const Real& x, const PrecisionContext& ctx) {
  // Gamma(s,x) = e^{-x} x^s / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(x+5-s - ...)))
  const Real tiny = mp::ldexp(Real(1), -static_cast<long>(ctx.working_bits) * 4);
  const double eps_log2 = -static_cast<double>(ctx.working_bits) - 2.0;
  const Complex xs(x);
  Complex f = xs + Complex(1) - s;
  if (f.is_zero()) f = Complex(tiny);
  Complex C = f;
  Complex D;
  Raw r;
  for (long i = 1; i <= ctx.max_terms; ++i) {
    Complex a = -(Complex(Real(i)) * (Complex(Real(i)) - s));
    Complex b = xs + Complex(Real(2 * i + 1)) - s;
    D = b + a * D;
    if (D.is_zero()) D = Complex(tiny);
    C = b + a / C;
    if (C.is_zero()) C = Complex(tiny);
    D = mp::inverse(D);
    Complex delta = C * D;
    f *= delta;
    const double dl = lmag(delta - Complex(1));
    if (dl < eps_log2) {
      r.value = mp::exp(-x) * mp::pow(x, s) / f;
      r.err = mag(r.value) * std::exp2(dl) * 4.0;
      r.terms = i;
      return r;
    }
  }
  throw MaxTermsExceeded("incomplete Gamma continued fraction did not converge");
}

// sum_j (-x)^j / (j! (s+j)), Re s >= 1/2
ApproxValue lower_series(const Complex& s, const Real& x, const PrecisionContext& ctx) {
  Real p(1);
  double last = 0.0;
  const double ax = std::fabs(x.to_double());
  auto term = [&](long j) {
    if (j > 0) p = p * (-x) / j;
    Complex t = Complex(p) / (s + Complex(Real(j)));
    last = mag(t);
    return t;
  };
  AnalyticTailRule rule{[&](long k, const Complex&) {
    const double r = ax / (k + 2.0);
    if (r >= 0.75) return -1.0;
    return last * r / (1.0 - r);
  }};
  SeriesOptions opts;
  opts.check_cancellation = false;
  return sum_series(term, rule, ctx, opts);
}

Raw upper_gamma_raw(const Complex& s, const Real& x, const PrecisionContext& ctx);

Raw gamma_series(const Complex& s, const Real& x, const PrecisionContext& ctx) {
  // Gamma(s) - x^s sum_j (-x)^j/(j!(s+j))
  Raw r;
  ApproxValue S = lower_series(s, x, ctx);
  Complex g = oracle::gamma(s);
  Complex xs = mp::pow(x, s);
  Complex tail = xs * S.value;
  r.value = g - tail;
  r.note(g);
  r.note(xs * Complex(Real(S.peak_magnitude)));
  r.err = mag(xs) * S.err;
  r.terms = S.terms_used;
  return r;
}

Raw exponential_integral(const Real& x, const PrecisionContext& ctx) {
  // Gamma(0, x) = E1(x) = -gamma - ln x - sum_{j>=1} (-x)^j/(j j!)
  Real p(1);
  double last = 0.0;
  const double ax = x.to_double();
  auto term = [&](long j) {
    p = p * (-x) / j;
    Complex t(p / j);
    last = mag(t);
    return t;
  };
  AnalyticTailRule rule{[&](long k, const Complex&) {
    const double r = ax / (k + 2.0);
    if (r >= 0.75) return -1.0;
    return last * r / (1.0 - r);
  }};
  SeriesOptions opts;
  opts.first_index = 1;
  opts.check_cancellation = false;
  ApproxValue S = sum_series(term, rule, ctx, opts);
  Raw r;
  Real g = mp::euler_gamma();
  Real lx = mp::log(x);
  r.value = Complex(-g - lx) - S.value;
  r.note(Complex(g));
  r.note(Complex(lx));
  r.note(Complex(Real(S.peak_magnitude)));
  r.err = S.err;
  r.terms = S.terms_used;
  return r;
}

Raw downward(Raw r, const Complex& s_top, long steps, const Real& x) {
  // Gamma(sigma, x) = (Gamma(sigma+1, x) - x^sigma e^{-x}) / sigma
  const Real ex = mp::exp(-x);
  for (long k = 1; k <= steps; ++k) {
    Complex sigma = s_top - Complex(Real(k));
    Complex inh = mp::pow(x, sigma) * ex;
    r.note(r.value);
    r.note(inh);
    r.value = (r.value - inh) / sigma;
    const double inv = 1.0 / std::max(mag(sigma), 1e-300);
    r.err *= inv;
    r.peak_log2 -= std::log2(std::max(mag(sigma), 1e-300));
  }
  return r;
}

Raw upper_gamma_raw(const Complex& s, const Real& x, const PrecisionContext& ctx) {
  long n = 0;
  if (is_positive_integer(s, n) && n <= 1000) return gamma_closed_form(n, x);
  if (x.to_double() >= upper_gamma_switch(s)) return gamma_continued_fraction(s, x, ctx);
  if (is_nonpositive_integer(s)) {
    const long k = -s.re().to_long();
    Raw r = exponential_integral(x, ctx);
    return downward(r, Complex(0), k, x);
  }
  if (s.re() >= Real(0.5)) return gamma_series(s, x, ctx);
  const long K = static_cast<long>(std::ceil(0.5 - s.re().to_double()));
  const Complex top = s + Complex(Real(K));
  Raw r = (is_positive_integer(top, n) && n <= 1000) ? gamma_closed_form(n, x) : gamma_series(top, x, ctx);
  return downward(r, top, K, x);
}

// ---------------------------------------------------------- pFp

void require_pfp_parameter(const Complex& s) {
  if (is_nonpositive_integer(s))
    throw DomainError("unit-shift hypergeometric series requires s not a nonpositive integer");
}

ApproxValue pfp_series(int m, const Complex& s, const Real& x, const PrecisionContext& ctx) {
  Real p(1);
  double last = 0.0;
  const double ax = std::fabs(x.to_double());
  const double res = s.re().to_double();
  auto term = [&](long j) {
    if (j > 0) p = p * (-x) / j;
    Complex ratio = s / (s + Complex(Real(j)));
    Complex t = mp::pow(ratio, static_cast<long>(m)) * p;
    last = mag(t);
    return t;
  };
  AnalyticTailRule rule{[&](long k, const Complex&) {
    // |s+j|/|s+j+1| <= 1 once Re(s+j) >= -1/2
    if (res + k + 1 < 0.5) return -1.0;
    const double r = ax / (k + 2.0);
    if (r >= 0.75) return -1.0;
    return last * r / (1.0 - r);
  }};
  return sum_series(term, rule, ctx);
}

Raw asymptotic_raw(int m, const Complex& s, const Real& x) {
  Raw r;
  Complex g = oracle::gamma(s);
  Complex psi = oracle::digamma(s);
  Complex lx(mp::log(x));
  Complex xms = mp::pow(x, -s);
  Complex sm = mp::pow(s, static_cast<long>(m));
  Complex expo = sm * Complex(mp::exp(-x) / mp::pow(x, static_cast<long>(m)));
  Complex algebraic;
  if (m == 2) {
    algebraic = xms * sm * g * (lx - psi);
    r.value = expo + algebraic;
  } else {
    Complex psi1 = oracle::trigamma(s);
    algebraic = xms * sm / 2L * g * (lx * lx - Complex(2) * lx * psi + psi * psi + psi1);
    r.value = algebraic - expo;
  }
  r.note(algebraic);
  r.note(expo);
  const double as = mag(s);
  r.err = std::exp(-x.to_double()) * std::pow(as, m) * (m + as) / std::pow(x.to_double(), m + 1);
  return r;
}

// d^n/dt^n [Gamma(a-t) z^{t-1}] at t = 0 via the Bell recurrence on
// h(t) = ln Gamma(a-t) + (t-1) ln z.
Complex gamma_shift_derivative(int n, const Complex& a, const Real& z) {
  std::vector<Complex> h(n + 1);  // h[k] = h^{(k)}(0), k >= 1
  if (n >= 1) h[1] = Complex(mp::log(z)) - oracle::digamma(a);
  for (int k = 2; k <= n; ++k) {
    Complex v = oracle::polygamma(k - 1, a);
    h[k] = (k % 2 == 0) ? v : -v;
  }
  std::vector<Complex> Y(n + 1);
  Y[0] = Complex(1);
  for (int j = 0; j < n; ++j) {
    Complex acc;
    for (int k = 0; k <= j; ++k) acc += Complex(Real(binomial(j, k))) * Y[j - k] * h[k + 1];
    Y[j + 1] = acc;
  }
  return oracle::gamma(a) / Complex(z) * Y[n];
}

Raw t_function_raw(int m, const Complex& a, const Real& z, const PrecisionContext& ctx) {
  Raw r;
  Complex d = gamma_shift_derivative(m - 2, a, z) / mp::factorial(static_cast<unsigned long>(m - 2));
  if (m % 2 == 1) d = -d;
  ApproxValue F = pfp_series(m - 1, a, z, ctx.with_extra_bits(static_cast<long>(std::ceil(z.to_double() * kLog2E)) + 10));
  Complex h = mp::pow(z, a - Complex(1)) * mp::inverse(mp::pow(a, static_cast<long>(m - 1))) * F.value;
  if (m % 2 == 0) h = -h;
  r.value = d + h;
  r.note(d);
  r.note(h);
  r.err = mag(h) / std::max(mag(F.value), 1e-300) * F.err;
  r.terms = F.terms_used;
  return r;
}

void require_deriv_parameter(const Complex& a, const char* what) {
  if (a.is_zero() || is_nonpositive_integer(a))
    throw DomainError(std::string(what) + " requires the parameter to be neither zero nor a negative integer");
}

}  // namespace

double upper_gamma_switch(const Complex& s) { return std::max(10.0, mag(s) + 10.0); }

ApproxValue upper_gamma(const Complex& s, const Real& x, const PrecisionContext& ctx) {
  if (x < 0L) throw DomainError("upper_gamma requires x >= 0");
  if (x.is_zero()) {
    if (is_nonpositive_integer(s)) throw PoleError("Gamma(s, 0) = Gamma(s) has a pole at nonpositive integer s");
    mp::PrecisionScope scope(ctx.working_bits);
    ApproxValue out;
    out.value = oracle::gamma(s);
    out.err = mag(out.value) * std::exp2(-static_cast<double>(ctx.target_bits()) - 4);
    out.terms_used = 1;
    out.peak_magnitude = mag(out.value);
    return out;
  }
  const double xd = x.to_double();
  const double extra = xd < upper_gamma_switch(s) ? xd * kLog2E + kGuardSafetyBits : 0.0;
  return guarded(ctx, extra, "upper_gamma", [&](const PrecisionContext& c) { return upper_gamma_raw(s, x, c); });
}

ApproxValue pfp_unit(int m, const Complex& s, const Real& x, const PrecisionContext& ctx) {
  if (m < 1 || m > 5) throw DomainError("pfp_unit supports 1 <= m <= 5");
  require_pfp_parameter(s);
  if (x.is_zero()) {
    ApproxValue out;
    out.value = Complex(1);
    out.terms_used = 1;
    out.peak_magnitude = 1.0;
    return out;
  }
  const long guard = x > 0L ? static_cast<long>(std::ceil(x.to_double() * kLog2E)) + kGuardSafetyBits : 0L;
  ApproxValue v = pfp_series(m, s, x, ctx.with_extra_bits(guard));
  v.value = rounded(v.value, ctx.working_bits);
  v.err += mag(v.value) * std::exp2(-static_cast<double>(ctx.working_bits));
  return v;
}

double pfp_asymptotic_switch(const PrecisionContext& ctx) {
  return std::max(40.0, 2.0 * ctx.target_digits * std::log(10.0));
}

ApproxValue pfp_unit_asymptotic_unchecked(int m, const Complex& s, const Real& x, const PrecisionContext& ctx) {
  if (m != 2 && m != 3) throw DomainError("asymptotic form is available for m = 2, 3");
  require_pfp_parameter(s);
  if (x <= 0L) throw DomainError("asymptotic form requires x > 0");
  return guarded(ctx, 0.0, "pfp_unit_asymptotic", [&](const PrecisionContext&) { return asymptotic_raw(m, s, x); });
}

ApproxValue pfp_unit_asymptotic(int m, const Complex& s, const Real& x, const PrecisionContext& ctx) {
  if (x.to_double() < pfp_asymptotic_switch(ctx))
    throw DomainError("asymptotic form requires x >= max(40, 2 D ln 10) = " +
                      std::to_string(pfp_asymptotic_switch(ctx)));
  return pfp_unit_asymptotic_unchecked(m, s, x, ctx);
}

ApproxValue t_function(int m, const Complex& a, const Real& z, const PrecisionContext& ctx) {
  if (m < 2 || m > 6) throw DomainError("t_function supports 2 <= m <= 6");
  require_deriv_parameter(a, "t_function");
  if (z <= 0L) throw DomainError("t_function requires z > 0");
  const double extra = z.to_double() * kLog2E + kGuardSafetyBits;
  return guarded(ctx, extra, "t_function", [&](const PrecisionContext& c) { return t_function_raw(m, a, z, c); });
}

ApproxValue gamma_inc_param_deriv_via_t(int order, const Complex& s, const Real& x, const PrecisionContext& ctx) {
  if (order < 1 || order > 4) throw DomainError("gamma_inc_param_deriv supports orders 1..4");
  require_deriv_parameter(s, "gamma_inc_param_deriv");
  if (x <= 0L) throw DomainError("gamma_inc_param_deriv requires x > 0");
  const double extra = x.to_double() * kLog2E + kGuardSafetyBits;
  return guarded(ctx, extra, "gamma_inc_param_deriv", [&](const PrecisionContext& c) {
    Raw r;
    const Complex lx(mp::log(x));
    Raw g = upper_gamma_raw(s, x, c);
    r.value = mp::pow(lx, static_cast<long>(order)) * g.value;
    r.note(r.value);
    r.err = mag(mp::pow(lx, static_cast<long>(order))) * g.err;
    // m x sum_i P_i^{m-1} ln^{m-i-1} x T(3+i, s, x)
    Complex sum;
    for (int i = 0; i < order; ++i) {
      Raw t = t_function_raw(3 + i, s, x, c);
      Real p = mp::factorial(order - 1) / mp::factorial(order - 1 - i);
      Complex term = p * mp::pow(lx, static_cast<long>(order - i - 1)) * t.value;
      sum += term;
      r.peak_log2 = std::max(r.peak_log2, t.peak_log2 + lmag(term) - lmag(t.value));
      r.err += mag(term) / std::max(mag(t.value), 1e-300) * t.err;
      r.terms += t.terms;
    }
    Complex tail = sum * Complex(x * static_cast<long>(order));
    r.value += tail;
    r.note(tail);
    return r;
  });
}

ApproxValue gamma_inc_param_deriv(int order, const Complex& s, const Real& x, const PrecisionContext& ctx) {
  if (order != 1) return gamma_inc_param_deriv_via_t(order, s, x, ctx);
  require_deriv_parameter(s, "gamma_inc_param_deriv");
  if (x <= 0L) throw DomainError("gamma_inc_param_deriv requires x > 0");
  const double extra = x.to_double() * kLog2E + kGuardSafetyBits;
  return guarded(ctx, extra, "gamma_inc_param_deriv", [&](const PrecisionContext& c) {
    // x^s/s^2 2F2(s,s;s+1,s+1;-x) + Gamma(s)[psi(s) - ln x] + ln x Gamma(s,x)
    Raw r;
    ApproxValue F = pfp_series(2, s, x, c.with_extra_bits(static_cast<long>(extra)));
    Complex a = mp::pow(x, s) / (s * s) * F.value;
    Complex lx(mp::log(x));
    Complex b = oracle::gamma(s) * (oracle::digamma(s) - lx);
    Raw g = upper_gamma_raw(s, x, c);
    Complex cterm = lx * g.value;
    r.value = a + b + cterm;
    r.note(a);
    r.note(b);
    r.note(cterm);
    r.err = mag(a) / std::max(mag(F.value), 1e-300) * F.err + mag(lx) * g.err;
    r.terms = F.terms_used + g.terms;
    return r;
  });
}

}  // namespace zetakit
