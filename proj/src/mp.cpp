#include "zetakit/mp.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace zetakit::mp {

namespace {
thread_local Bits tl_bits = 128;
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
}  // namespace

Bits current_bits() noexcept { return tl_bits; }

PrecisionScope::PrecisionScope(Bits bits) noexcept : saved_(tl_bits) {
  tl_bits = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}
PrecisionScope::~PrecisionScope() { tl_bits = saved_; }

// ---------------------------------------------------------------- Real

Real::Real() noexcept {
  mpfr_init2(v_, tl_bits);
  mpfr_set_zero(v_, 1);
}
Real::Real(int v) noexcept {
  mpfr_init2(v_, tl_bits);
  mpfr_set_si(v_, v, kRnd);
}
Real::Real(long v) noexcept {
  mpfr_init2(v_, tl_bits);
  mpfr_set_si(v_, v, kRnd);
}
Real::Real(double v) noexcept {
  mpfr_init2(v_, tl_bits);
  mpfr_set_d(v_, v, kRnd);
}
Real::Real(const mpq_class& q) {
  mpfr_init2(v_, tl_bits);
  mpfr_set_q(v_, q.get_mpq_t(), kRnd);
}
Real::Real(const mpz_class& z) {
  mpfr_init2(v_, tl_bits);
  mpfr_set_z(v_, z.get_mpz_t(), kRnd);
}
Real::Real(std::string_view decimal) {
  mpfr_init2(v_, tl_bits);
  std::string s(decimal);
  char* end = nullptr;
  bool ok = !s.empty();
  if (ok) {
    mpfr_strtofr(v_, s.c_str(), &end, 10, kRnd);
    ok = end == s.c_str() + s.size() && mpfr_number_p(v_);
  }
  if (!ok) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
}
Real::Real(Real&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}
Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (v_[0]._mpfr_d == nullptr) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
  } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
  }
  mpfr_set(v_, other.v_, kRnd);
  return *this;
}
Real& Real::operator=(Real&& other) noexcept {
  std::swap(v_[0], other.v_[0]);
  return *this;
}
Real::~Real() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

Real Real::rounded(Bits bits) const {
  PrecisionScope scope(bits);
  Real r;
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

double Real::log2_abs() const noexcept {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  if (!mpfr_number_p(v_)) return std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, kRnd);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  if (digits < 1) digits = 1;
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  bool neg = false;
  if (!mant.empty() && mant[0] == '-') {
    neg = true;
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // value = 0.mant * 10^e
  std::string out;
  const long exp10 = static_cast<long>(e);
  if (exp10 > -6 && exp10 <= digits) {
    if (exp10 <= 0) {
      out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
    } else if (static_cast<size_t>(exp10) >= mant.size()) {
      out = mant + std::string(static_cast<size_t>(exp10) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(exp10)) + "." + mant.substr(static_cast<size_t>(exp10));
    }
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp10 - 1);
  }
  return neg ? "-" + out : out;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}
Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r;
  mpfr_mul_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
  Real r;
  mpfr_div_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r;
  mpfr_si_div(r.v_, a, b.v_, kRnd);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r;
  mpfr_add_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(const Real& a, long b) {
  Real r;
  mpfr_sub_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r;
  mpfr_si_sub(r.v_, a, b.v_, kRnd);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_string(static_cast<int>(static_cast<double>(x.precision()) * 0.30103) + 1);
}

#define ZK_UNARY(name, fn)           \
  Real name(const Real& x) {         \
    Real r;                          \
    fn(r.raw(), x.raw(), kRnd);      \
    return r;                        \
  }
ZK_UNARY(abs, mpfr_abs)
ZK_UNARY(sqrt, mpfr_sqrt)
ZK_UNARY(exp, mpfr_exp)
ZK_UNARY(expm1, mpfr_expm1)
ZK_UNARY(log, mpfr_log)
ZK_UNARY(log1p, mpfr_log1p)
ZK_UNARY(sin, mpfr_sin)
ZK_UNARY(cos, mpfr_cos)
ZK_UNARY(atan, mpfr_atan)
#undef ZK_UNARY

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}
Real ceil(const Real& x) {
  Real r;
  mpfr_ceil(r.raw(), x.raw());
  return r;
}
Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), kRnd);
  return r;
}
Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
  return r;
}
void sin_cos(const Real& x, Real& s, Real& c) {
  Real ss, cc;
  mpfr_sin_cos(ss.raw(), cc.raw(), x.raw(), kRnd);
  s = std::move(ss);
  c = std::move(cc);
}
Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), kRnd);
  return r;
}
Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.raw(), x.raw(), y.raw(), kRnd);
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.raw(), x.raw(), e, kRnd);
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi() {
  Real r;
  mpfr_const_pi(r.raw(), kRnd);
  return r;
}
Real euler_gamma() {
  Real r;
  mpfr_const_euler(r.raw(), kRnd);
  return r;
}
Real log2_const() {
  Real r;
  mpfr_const_log2(r.raw(), kRnd);
  return r;
}
Real zeta_ui(unsigned long n) {
  Real r;
  mpfr_zeta_ui(r.raw(), n, kRnd);
  return r;
}
Real factorial(unsigned long n) {
  Real r;
  mpfr_fac_ui(r.raw(), n, kRnd);
  return r;
}
Real epsilon() {
  Real r(1);
  mpfr_mul_2si(r.raw(), r.raw(), -static_cast<long>(current_bits()), kRnd);
  return r;
}

// ---------------------------------------------------------------- Complex

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}
Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}
Complex& Complex::operator/=(const Real& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
Complex operator*(const Complex& a, const Complex& b) {
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}
Complex operator/(const Complex& a, const Complex& b) {
  if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
  Real d = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}
Complex operator*(const Complex& a, const Real& b) { return {a.re_ * b, a.im_ * b}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.re_, a * b.im_}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re_ / b, a.im_ / b}; }
Complex operator*(const Complex& a, long b) { return {a.re_ * b, a.im_ * b}; }
Complex operator*(long a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, long b) { return {a.re_ / b, a.im_ / b}; }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }
Real abs(const Complex& z) {
  if (z.im().is_zero()) return abs(z.re());
  return hypot(z.re(), z.im());
}
Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }
Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  if (z.im().is_zero()) return Complex(m);
  Real s, c;
  sin_cos(z.im(), s, c);
  return {m * c, m * s};
}
Complex log(const Complex& z) {
  if (z.im().is_zero() && z.re().sign() > 0) return Complex(log(z.re()));
  return {log(abs(z)), arg(z)};
}
Complex sqrt(const Complex& z) {
  if (z.im().is_zero() && z.re().sign() >= 0) return Complex(sqrt(z.re()));
  Real r = abs(z);
  Real a = sqrt((r + abs(z.re())) / 2L);
  if (z.re().sign() >= 0) return {a, z.im() / (a * 2L)};
  Real b = z.im().sign() >= 0 ? a : -a;
  return {abs(z.im()) / (a * 2L), b};
}
Complex pow(const Complex& z, const Complex& w) {
  if (z.is_zero()) {
    if (w.re().sign() > 0) return Complex();
    return {Real(std::numeric_limits<double>::infinity()), Real(0)};
  }
  if (z.is_real() && z.re().sign() > 0) return pow(z.re(), w);
  return exp(w * log(z));
}
Complex pow(const Complex& z, long n) {
  if (n < 0) return inverse(pow(z, -n));
  Complex result(1);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}
Complex pow(const Real& x, const Complex& w) {
  if (w.im().is_zero()) return Complex(pow(x, w.re()));
  return exp(w * log(x));
}
Complex inverse(const Complex& z) { return Complex(1) / z; }

double log2_abs(const Complex& z) {
  if (z.im().is_zero()) return z.re().log2_abs();
  if (z.re().is_zero()) return z.im().log2_abs();
  const double a = z.re().log2_abs();
  const double b = z.im().log2_abs();
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + 0.5 * std::log2(1.0 + std::exp2(2.0 * (lo - hi)));
}

Complex parse_complex(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return Complex(Real(std::string_view(s)));
  std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not part of an exponent or the leading sign
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [](const std::string& t) {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    return Real(std::string_view(t));
  };
  if (split == std::string::npos) return {Real(0), imag_of(body)};
  return {Real(std::string_view(body.substr(0, split))), imag_of(body.substr(split))};
}

}  // namespace zetakit::mp
