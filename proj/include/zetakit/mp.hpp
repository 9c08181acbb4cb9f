#pragma once

// Thin RAII layer over MPFR.  Every value owns its own precision; newly
// created values (including operator results) take the calling thread's
// current working precision, which PrecisionScope adjusts.

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace zetakit::mp {

using Bits = mpfr_prec_t;

/// Precision (in bits) used for new values on this thread.
Bits current_bits() noexcept;

/// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(Bits bits) noexcept;
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Bits saved_;
};

class Real {
 public:
  Real() noexcept;
  Real(int v) noexcept;            // NOLINT(google-explicit-constructor)
  Real(long v) noexcept;           // NOLINT(google-explicit-constructor)
  Real(double v) noexcept;         // NOLINT(google-explicit-constructor)
  explicit Real(const mpq_class& q);
  explicit Real(const mpz_class& z);
  /// Parses a decimal literal ("0.3", "-1e-20"); throws std::invalid_argument.
  explicit Real(std::string_view decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits precision() const noexcept { return mpfr_get_prec(v_); }
  /// Same value rounded to `bits`.
  Real rounded(Bits bits) const;

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }
  /// log2|x| as a double; -inf for zero.
  double log2_abs() const noexcept;
  /// Decimal string with `digits` significant digits, round-half-even.
  std::string to_string(int digits) const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Real& x);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(const Real& x, Real& s, Real& c);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real ceil(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real pi();
Real euler_gamma();
Real log2_const();
/// Riemann zeta at a positive integer (MPFR's own evaluation).
Real zeta_ui(unsigned long n);
/// n! as an exact integer rounded to working precision.
Real factorial(unsigned long n);
/// 2^-bits at the current precision: unit roundoff scale.
Real epsilon();

class Complex {
 public:
  Complex() = default;
  Complex(Real re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Complex(double re, double im) : re_(re), im_(im) {}
  Complex(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Complex(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  Real& re() noexcept { return re_; }
  Real& im() noexcept { return im_; }

  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

  Complex operator-() const { return {-re_, -im_}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& b);
  friend Complex operator*(const Real& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Real& b);
  friend Complex operator*(const Complex& a, long b);
  friend Complex operator*(long a, const Complex& b);
  friend Complex operator/(const Complex& a, long b);

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);
/// x^w for real x > 0 via exp(w ln x).
Complex pow(const Real& x, const Complex& w);
Complex inverse(const Complex& z);

/// log2|z|, -inf for zero.
double log2_abs(const Complex& z);

/// Parses "a", "a+bi", "a-bi", "bi" (no spaces).  Throws std::invalid_argument.
Complex parse_complex(std::string_view text);

}  // namespace zetakit::mp
