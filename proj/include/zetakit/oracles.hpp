#pragma once

// Reference implementations by methods disjoint from the series in zeta,
// hypergeom and stieltjes: Euler-Maclaurin, Stirling, quadrature and Cauchy
// circles.  They are slow and meant for validation.

#include "zetakit/numerics.hpp"

#include <complex>

namespace zetakit::oracle {

// ------------------------------------------------------ gamma family

/// ln Gamma(z) continued from the positive real axis (sum of principal logs
/// over the shift, then Stirling).  PoleError at nonpositive integers.
Complex lngamma(const Complex& z);
Complex gamma(const Complex& z);
Complex digamma(const Complex& z);
Complex trigamma(const Complex& z);
/// psi^{(n)}(z), n >= 0.
Complex polygamma(int n, const Complex& z);

Real lngamma(const Real& x);
Real gamma(const Real& x);
Real digamma(const Real& x);
Real trigamma(const Real& x);
Real polygamma(int n, const Real& x);

/// ApproxValue wrappers with the Stirling remainder as err.
ApproxValue digamma_ref(const Complex& a, const PrecisionContext& ctx);
ApproxValue trigamma_ref(const Complex& a, const PrecisionContext& ctx);
ApproxValue lngamma_ref(const Complex& a, const PrecisionContext& ctx);

// ------------------------------------------------------ constants

Real euler_gamma();
Real zeta2();
Real zeta3();

// ------------------------------------------------------ Hurwitz zeta

/// Euler-Maclaurin with N direct terms and M Bernoulli corrections.
ApproxValue zeta_em(const Complex& s, const Complex& a, long N, int M, const PrecisionContext& ctx);
/// zeta_em with N chosen for ctx.target_digits (M = 30) and doubled until
/// the remainder bound is met.
ApproxValue zeta_em(const Complex& s, const Complex& a, const PrecisionContext& ctx);

/// Double-precision Euler-Maclaurin zeta(s, a) for heights up to a few
/// thousand (contour quadrature).
std::complex<double> zeta_em_double(std::complex<double> s, double a = 1.0);

// ------------------------------------------------------ incomplete gamma

/// int_x^inf t^{s-1} ln^k t e^{-t} dt by quadrature (x >= 0, Re s > 0 when x = 0).
ApproxValue gamma_inc_quad(const Complex& s, const Real& x, const PrecisionContext& ctx, int log_power = 0);

// ------------------------------------------------------ Stieltjes

/// gamma_k(a) from the Laurent coefficients of zeta(s,a) - 1/(s-1) on the
/// circle |s-1| = 1/4 (trapezoidal rule, nodes doubled 32..1024).
ApproxValue stieltjes_laurent(int k, const Complex& a, const PrecisionContext& ctx);

/// Limit formula at N, 2N, 4N with Richardson extrapolation (long double).
struct LimitEstimate {
  double value = 0.0;
  double err = 0.0;
};
LimitEstimate stieltjes_limit(int k, double a, long N);

}  // namespace zetakit::oracle
