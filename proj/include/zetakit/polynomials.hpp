#pragma once

#include "zetakit/mp.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zetakit {

using mp::Complex;
using mp::Real;

/// Polynomial with exact rational coefficients in ascending degree.
struct RationalPolynomial {
  std::vector<mpq_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const mpq_class& leading() const { return coeffs.back(); }

  mpq_class operator()(const mpq_class& x) const;
  Real operator()(const Real& x) const;
  Complex operator()(const Complex& x) const;

  /// Exact antiderivative value over [lo, hi].
  mpq_class integrate(const mpq_class& lo, const mpq_class& hi) const;
  std::string to_string() const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs == b.coeffs; }
};

/// Degree above which exact tables are not kept (numeric routines switch to
/// Fourier expansions).
inline constexpr int kPolynomialCacheCap = 256;

mpq_class bernoulli_number(int n);
RationalPolynomial bernoulli_polynomial(int n);
RationalPolynomial euler_polynomial(int n);
/// E_n(0) = -2(2^{n+1}-1) B_{n+1}/(n+1) for n >= 1, and 1 for n = 0.
mpq_class euler_at_zero(int n);

/// C(n, k) as an exact integer.
mpz_class binomial(long n, long k);

/// Lazily filled B_m(a)/m! at the current precision for a fixed real a.
/// Exact coefficients are used up to the cache cap, the Fourier series beyond.
class BernoulliScaled {
 public:
  explicit BernoulliScaled(Real a);
  const Real& operator()(long m);
  const Real& a() const { return a_; }

 private:
  Real a_;
  std::vector<Real> values_;
  std::vector<Real> pow_over_fact_;  // a^j / j!
};

/// Lazily filled E_n(x)/n! at the current precision for a fixed real x.
class EulerScaled {
 public:
  explicit EulerScaled(Real x);
  const Real& operator()(long n);

 private:
  Real x_;
  std::vector<Real> values_;
  std::vector<Real> pow_over_fact_;
};

/// B_m(a)/m! and E_n(x)/n! evaluated directly (no caching of the sequence).
Real bernoulli_scaled_value(long m, const Real& a);
Real euler_scaled_value(long n, const Real& x);

}  // namespace zetakit
