#include "zetakit/oracles.hpp"

#include "zetakit/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace zetakit::oracle {

namespace {

constexpr long kStirlingGuard = 24;

double mag(const Complex& z) {
  const double l = mp::log2_abs(z);
  return l == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp2(std::min(l, 1000.0));
}

void check_pole(const Complex& z, const char* what) {
  if (z.im().is_zero() && z.re().is_integer() && z.re() <= 0L)
    throw PoleError(std::string(what) + " has a pole at nonpositive integers");
}

struct Shifted {
  Complex w;  // z + N
  long N = 0;
};

Shifted shift_for_stirling(const Complex& z) {
  const double bits = static_cast<double>(mp::current_bits());
  const double target = std::max(20.0, 0.12 * bits + 5.0);
  Shifted sh;
  const double re = z.re().to_double();
  if (re < target) sh.N = static_cast<long>(std::ceil(target - re));
  sh.w = z + Complex(Real(sh.N));
  return sh;
}

struct Estimate {
  Complex value;
  double err = 0.0;
};

// Stirling tail: sum_k coef(k) * w^{-(2k + offset)} with coef(k) = B_2k * scale(k),
// summed until the terms reach the rounding level or start to grow.
template <typename Scale>
Estimate stirling_tail(const Complex& w, long offset, Scale scale) {
  const double eps_log2 = -static_cast<double>(mp::current_bits()) - 4.0;
  Complex inv = mp::inverse(w);
  Complex inv2 = inv * inv;
  Complex p = mp::pow(inv, offset);
  Estimate out;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 2000; ++k) {
    p *= inv2;
    Complex term = Complex(Real(bernoulli_number(2 * k)) * scale(k)) * p;
    const double tl = mp::log2_abs(term);
    if (tl > prev) {
      out.err = std::exp2(prev);
      return out;
    }
    out.value += term;
    prev = tl;
    if (tl < eps_log2 + std::max(0.0, mp::log2_abs(out.value))) {
      out.err = std::exp2(tl);
      return out;
    }
  }
  out.err = std::exp2(prev);
  return out;
}

Estimate lngamma_est(const Complex& z) {
  check_pole(z, "ln Gamma");
  const mp::Bits bits = mp::current_bits();
  mp::PrecisionScope scope(bits + kStirlingGuard);
  Shifted sh = shift_for_stirling(z);
  const Complex& w = sh.w;
  // (w - 1/2) ln w - w + ln(2 pi)/2 + sum B_2k / (2k (2k-1) w^{2k-1})
  Estimate est = stirling_tail(w, -1, [](int k) { return Real(1) / Real(static_cast<long>(2 * k) * (2 * k - 1)); });
  Complex v = (w - Complex(0.5)) * mp::log(w) - w + Complex(mp::log(mp::pi() * 2L) / 2L) + est.value;
  for (long j = 0; j < sh.N; ++j) v -= mp::log(z + Complex(Real(j)));
  est.value = Complex(v.re().rounded(bits), v.im().rounded(bits));
  return est;
}

Estimate polygamma_est(int n, const Complex& z) {
  check_pole(z, "polygamma");
  const mp::Bits bits = mp::current_bits();
  mp::PrecisionScope scope(bits + kStirlingGuard);
  Shifted sh = shift_for_stirling(z);
  const Complex& w = sh.w;
  Complex v;
  Estimate est;
  if (n == 0) {
    est = stirling_tail(w, 0, [](int k) { return Real(-1) / Real(2L * k); });
    v = mp::log(w) - mp::inverse(w) / 2L + est.value;
    for (long j = 0; j < sh.N; ++j) v -= mp::inverse(z + Complex(Real(j)));
  } else {
    // (-1)^{n+1} [ (n-1)!/w^n + n!/(2 w^{n+1}) + sum B_2k (2k+n-1)!/((2k)! w^{2k+n}) ]
    const Real nf = mp::factorial(n);
    est = stirling_tail(w, n, [n](int k) {
      return mp::factorial(2 * k + n - 1) / mp::factorial(2 * k);
    });
    Complex inner = mp::factorial(n - 1) * mp::inverse(mp::pow(w, static_cast<long>(n))) +
                    nf * mp::inverse(mp::pow(w, static_cast<long>(n + 1))) / 2L + est.value;
    v = (n % 2 == 1) ? inner : -inner;
    // psi^{(n)}(z) = psi^{(n)}(z+N) - (-1)^n n! sum_j (z+j)^{-(n+1)}
    Complex corr;
    for (long j = 0; j < sh.N; ++j) corr += mp::inverse(mp::pow(z + Complex(Real(j)), static_cast<long>(n + 1)));
    corr *= nf;
    if (n % 2 == 0) v -= corr;
    else v += corr;
  }
  est.value = Complex(v.re().rounded(bits), v.im().rounded(bits));
  return est;
}

ApproxValue to_approx(const Estimate& e, const PrecisionContext& ctx) {
  ApproxValue out;
  out.value = e.value;
  out.err = e.err + mag(e.value) * std::exp2(-static_cast<double>(ctx.working_bits) + 4);
  out.terms_used = 1;
  out.peak_magnitude = mag(e.value);
  return out;
}

}  // namespace

Complex lngamma(const Complex& z) { return lngamma_est(z).value; }
Complex gamma(const Complex& z) {
  check_pole(z, "Gamma");
  if (z.is_real()) return Complex(gamma(z.re()));
  mp::PrecisionScope scope(mp::current_bits() + 16);
  Complex v = mp::exp(lngamma(z));
  return v;
}
Complex digamma(const Complex& z) { return polygamma_est(0, z).value; }
Complex trigamma(const Complex& z) { return polygamma_est(1, z).value; }
Complex polygamma(int n, const Complex& z) { return polygamma_est(n, z).value; }

Real lngamma(const Real& x) {
  // ln|Gamma(x)| for real x
  if (x > 0L) return lngamma(Complex(x)).re();
  check_pole(Complex(x), "ln Gamma");
  return mp::log(mp::abs(gamma(x)));
}

Real gamma(const Real& x) {
  check_pole(Complex(x), "Gamma");
  const mp::Bits bits = mp::current_bits();
  mp::PrecisionScope scope(bits + 16);
  if (x > 0L) return mp::exp(lngamma(Complex(x)).re()).rounded(bits);
  // shift up: Gamma(x) = Gamma(x + n) / (x (x+1) ... (x+n-1))
  long n = static_cast<long>(std::ceil(1.0 - x.to_double()));
  Real prod(1);
  for (long j = 0; j < n; ++j) prod *= x + Real(j);
  return (mp::exp(lngamma(Complex(x + Real(n))).re()) / prod).rounded(bits);
}

Real digamma(const Real& x) { return digamma(Complex(x)).re(); }
Real trigamma(const Real& x) { return trigamma(Complex(x)).re(); }
Real polygamma(int n, const Real& x) { return polygamma(n, Complex(x)).re(); }

ApproxValue digamma_ref(const Complex& a, const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  return to_approx(polygamma_est(0, a), ctx);
}
ApproxValue trigamma_ref(const Complex& a, const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  return to_approx(polygamma_est(1, a), ctx);
}
ApproxValue lngamma_ref(const Complex& a, const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  return to_approx(lngamma_est(a), ctx);
}

Real euler_gamma() { return mp::euler_gamma(); }
Real zeta2() { return mp::pow(mp::pi(), 2L) / 6L; }
Real zeta3() { return mp::zeta_ui(3); }

// ----------------------------------------------------------- zeta

ApproxValue zeta_em(const Complex& s, const Complex& a, long N, int M, const PrecisionContext& ctx) {
  if (s.im().is_zero() && s.re() == 1L) throw PoleError("zeta(s, a) has a pole at s = 1");
  if (a.re() <= 0L) throw DomainError("zeta_em requires Re a > 0");
  if (M < 0 || M > 30) throw DomainError("zeta_em requires 0 <= M <= 30");
  if (N < 1) throw DomainError("zeta_em requires N >= 1");
  // the direct sum grows like N^{1-Re s}
  const double growth = std::max(0.0, 1.0 - s.re().to_double()) * std::log2(static_cast<double>(N) + mag(a) + 1.0);
  const mp::Bits bits = ctx.working_bits + 20 + static_cast<long>(std::ceil(growth));
  mp::PrecisionScope scope(bits);
  const Complex one(1);
  Complex sum;
  double peak = 0.0;
  for (long n = 0; n < N; ++n) {
    sum += mp::pow(a + Complex(Real(n)), -s);
    peak = std::max(peak, mag(sum));
  }
  const Complex w = a + Complex(Real(N));
  const Complex w_s = mp::pow(w, -s);
  sum += w * w_s / (s - one);
  sum += w_s / 2L;
  // B_2k/(2k)! (s)_{2k-1} w^{-s-2k+1}
  Complex poch = s;  // (s)_{2k-1}
  Complex wp = w_s / w;
  Complex winv2 = mp::inverse(w * w);
  Complex last;
  for (int k = 1; k <= M + 1; ++k) {
    Complex term = Complex(Real(bernoulli_number(2 * k)) / mp::factorial(2 * k)) * poch * wp;
    if (k == M + 1) {
      last = term;
      break;
    }
    sum += term;
    poch *= (s + Complex(Real(2L * k - 1))) * (s + Complex(Real(2L * k)));
    wp *= winv2;
  }
  ApproxValue out;
  const double denom = s.re().to_double() + 2.0 * M + 1.0;
  const double factor = denom > 0 ? std::max(1.0, mag(s + Complex(Real(2L * M + 1))) / denom) : 10.0;
  out.err = mag(last) * factor + peak * std::exp2(-static_cast<double>(bits - 8));
  out.value = Complex(sum.re().rounded(ctx.working_bits), sum.im().rounded(ctx.working_bits));
  out.terms_used = N + M;
  out.peak_magnitude = peak;
  return out;
}

ApproxValue zeta_em(const Complex& s, const Complex& a, const PrecisionContext& ctx) {
  const int M = 30;
  const double abs_s = mag(s);
  const double D = ctx.target_digits + 5.0;
  long N = static_cast<long>(std::ceil((abs_s + 2.0 * M) * std::pow(10.0, D / (2.0 * M)) / (2.0 * M_PI)));
  N = std::max(N, static_cast<long>(std::ceil(std::abs(s.im().to_double()))) + 10);
  for (int attempt = 0; attempt < 6; ++attempt) {
    ApproxValue v = zeta_em(s, a, N, M, ctx);
    if (v.err <= std::pow(10.0, -D) * std::max(1.0, mag(v.value))) return v;
    N *= 2;
  }
  throw ConvergenceFailure("Euler-Maclaurin remainder did not reach the target");
}

std::complex<double> zeta_em_double(std::complex<double> s, double a) {
  static const std::vector<double> coef = [] {
    std::vector<double> c;
    mp::PrecisionScope scope(128);
    for (int k = 1; k <= 24; ++k) c.push_back((Real(bernoulli_number(2 * k)) / mp::factorial(2 * k)).to_double());
    return c;
  }();
  const long N = static_cast<long>(std::abs(s) / M_PI) + 20;
  std::complex<double> sum = 0.0;
  for (long n = 0; n < N; ++n) sum += std::exp(-s * std::log(n + a));
  const double w = N + a;
  const double lw = std::log(w);
  const std::complex<double> w_s = std::exp(-s * lw);
  sum += w * w_s / (s - 1.0) + 0.5 * w_s;
  std::complex<double> poch = s;
  std::complex<double> wp = w_s / w;
  for (int k = 1; k <= 24; ++k) {
    std::complex<double> term = coef[k - 1] * poch * wp;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    wp /= w * w;
  }
  return sum;
}

// ----------------------------------------------------- incomplete gamma

ApproxValue gamma_inc_quad(const Complex& s, const Real& x, const PrecisionContext& ctx, int log_power) {
  if (x < 0L) throw DomainError("gamma_inc_quad requires x >= 0");
  if (x.is_zero() && s.re() <= 0L) throw DomainError("gamma_inc_quad at x = 0 requires Re s > 0");
  const mp::Bits bits = ctx.working_bits + 16;
  PrecisionContext inner = ctx;
  inner.working_bits = bits;
  mp::PrecisionScope scope(bits);
  const Complex sm1 = s - Complex(1);
  auto integrand = [&](const Real& t) {
    Complex v = mp::pow(t, sm1) * mp::exp(-t);
    if (log_power > 0) v *= mp::pow(mp::log(t), static_cast<long>(log_power));
    return v;
  };
  const double tol = std::pow(10.0, -(ctx.target_digits + 4));
  const double peak_t = std::max(0.0, s.re().to_double() - 1.0);
  ApproxValue out;
  Real lo = x;
  Real width(1);
  long evals = 0;
  for (int piece = 0; piece < 200; ++piece) {
    Real hi = lo + width;
    const double floor = mag(out.value) * tol;
    ApproxValue part = tanh_sinh(integrand, lo, hi, inner, tol, floor);
    out.value += part.value;
    out.err += part.err;
    evals += part.terms_used;
    lo = hi;
    width *= 2L;
    const double end_mag = mag(integrand(lo));
    if (lo.to_double() > 2.0 * peak_t + 2.0 && end_mag * 4.0 * (1.0 + lo.to_double()) < tol * mag(out.value)) {
      out.err += end_mag * 4.0 * (1.0 + lo.to_double());
      out.terms_used = evals;
      out.value = Complex(out.value.re().rounded(ctx.working_bits), out.value.im().rounded(ctx.working_bits));
      return out;
    }
  }
  throw QuadratureFailure("incomplete Gamma quadrature did not reach its tail");
}

// ----------------------------------------------------------- Stieltjes

ApproxValue stieltjes_laurent(int k, const Complex& a, const PrecisionContext& ctx) {
  if (k < 0 || k > 2) throw DomainError("stieltjes_laurent supports k = 0, 1, 2");
  if (a.re() <= 0L) throw DomainError("stieltjes_laurent requires Re a > 0");
  PrecisionContext zctx = ctx.with_extra_bits(16);
  zctx.target_digits = ctx.target_digits + 4;
  mp::PrecisionScope scope(zctx.working_bits);
  const Real r = Real(1) / 4L;
  const Real two_pi = mp::pi() * 2L;
  // node values f(s_j) r^{-k} e^{-i k theta_j} for the current level
  std::vector<Complex> g;
  auto node = [&](long j, long n) {
    Real th = two_pi * j / Real(n);
    Real sn, cs;
    mp::sin_cos(th, sn, cs);
    Complex e(cs, sn);
    Complex d = e * r;  // s - 1
    Complex s = Complex(1) + d;
    Complex f = zeta_em(s, a, zctx).value - mp::inverse(d);
    return f * mp::pow(mp::inverse(d), static_cast<long>(k));
  };
  long n = 32;
  for (long j = 0; j < n; ++j) g.push_back(node(j, n));
  auto estimate = [&]() {
    Complex sum;
    for (const auto& v : g) sum += v;
    Complex c = sum / Real(static_cast<long>(g.size()));
    Complex gk = c * mp::factorial(k);
    return (k % 2 == 0) ? gk : -gk;
  };
  Complex prev = estimate();
  const double tol = std::pow(10.0, -(ctx.target_digits + 2));
  while (n < 1024) {
    // refine: odd nodes of the doubled grid, interleaved in index order
    std::vector<Complex> next;
    next.reserve(2 * n);
    for (long j = 0; j < n; ++j) {
      next.push_back(std::move(g[j]));
      next.push_back(node(2 * j + 1, 2 * n));
    }
    g = std::move(next);
    n *= 2;
    Complex cur = estimate();
    const double diff = mag(cur - prev);
    if (diff <= tol * std::max(1.0, mag(cur))) {
      ApproxValue out;
      out.value = Complex(cur.re().rounded(ctx.working_bits), cur.im().rounded(ctx.working_bits));
      out.err = diff + std::pow(10.0, -(ctx.target_digits + 4));
      out.terms_used = n;
      out.peak_magnitude = mag(cur);
      return out;
    }
    prev = std::move(cur);
  }
  throw ConvergenceFailure("Laurent oracle needs more than 1024 nodes");
}

LimitEstimate stieltjes_limit(int k, double a, long N) {
  auto bracket = [k, a](long n_max) {
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (long n = 0; n <= n_max; ++n) {
      const long double t = static_cast<long double>(n) + a;
      const long double lt = std::log(t);
      long double term = std::pow(lt, static_cast<long double>(k)) / t;
      if (n == n_max) term /= 2;  // trapezoidal end correction
      const long double y = term - comp;
      const long double u = sum + y;
      comp = (u - sum) - y;
      sum = u;
    }
    const long double lN = std::log(static_cast<long double>(n_max) + a);
    return sum - std::pow(lN, static_cast<long double>(k + 1)) / (k + 1);
  };
  const long double s1 = bracket(N);
  const long double s2 = bracket(2 * N);
  const long double s4 = bracket(4 * N);
  const long double r1 = (4 * s2 - s1) / 3;
  const long double r2 = (4 * s4 - s2) / 3;
  LimitEstimate out;
  out.value = static_cast<double>(r2);
  out.err = static_cast<double>(std::fabs(r2 - r1));
  return out;
}

}  // namespace zetakit::oracle
