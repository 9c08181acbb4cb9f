#include "zetakit/polynomials.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace zetakit {

namespace {

std::mutex g_exact_mu;
std::vector<mpq_class> g_bernoulli{mpq_class(1)};

// Extra bits for the Appell sums, which lose up to ~20 bits for |a| <= 2.
constexpr long kAppellGuard = 32;

const mpq_class& bernoulli_locked(int n) {
  while (static_cast<int>(g_bernoulli.size()) <= n) {
    const int m = static_cast<int>(g_bernoulli.size());
    if (m >= 3 && m % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    // sum_{k<m} C(m+1,k) B_k = -(m+1) B_m
    mpq_class acc = 0;
    mpz_class c = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      if (sgn(g_bernoulli[k]) != 0) acc += c * g_bernoulli[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    mpq_class b = -acc / (m + 1);
    b.canonicalize();
    g_bernoulli.push_back(b);
  }
  return g_bernoulli[n];
}

struct NumericTables {
  std::vector<Real> bernoulli;  // B_k / k!
  std::vector<Real> euler0;     // E_k(0) / k!
};

const NumericTables& numeric_tables(mp::Bits bits) {
  static std::mutex mu;
  static std::map<mp::Bits, std::unique_ptr<NumericTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[bits];
  if (slot) return *slot;
  auto t = std::make_unique<NumericTables>();
  mp::PrecisionScope scope(bits);
  mpz_class fact = 1;
  for (int k = 0; k <= kPolynomialCacheCap; ++k) {
    if (k > 0) fact *= k;
    mpq_class b;
    {
      std::lock_guard<std::mutex> exact(g_exact_mu);
      b = bernoulli_locked(k);
    }
    t->bernoulli.emplace_back(mpq_class(b / fact));
    t->euler0.emplace_back(mpq_class(euler_at_zero(k) / fact));
  }
  slot = std::move(t);
  return *slot;
}

// -2 sum_k cos(2 pi k a - pi m/2)/(2 pi k)^m, 0 <= a <= 1, m >= 2.
Real bernoulli_fourier(long m, const Real& a) {
  const Real two_pi = mp::pi() * 2L;
  const double bits = static_cast<double>(mp::current_bits()) + 10.0;
  const long kmax = std::max(1L, static_cast<long>(std::ceil(std::exp2(bits / static_cast<double>(m)))));
  Real sum;
  for (long k = 1; k <= kmax; ++k) {
    Real phase = two_pi * k * a;
    Real c;
    switch (m % 4) {
      case 0: c = mp::cos(phase); break;
      case 1: c = mp::sin(phase); break;
      case 2: c = -mp::cos(phase); break;
      default: c = -mp::sin(phase); break;
    }
    sum += c / mp::pow(Real(k), m);
  }
  return Real(-2) * sum / mp::pow(two_pi, m);
}

// (4/pi^{n+1}) sum_k sin((2k+1) pi x - pi n/2)/(2k+1)^{n+1}, 0 <= x <= 1, n >= 1.
Real euler_fourier(long n, const Real& x) {
  const Real pi = mp::pi();
  const double bits = static_cast<double>(mp::current_bits()) + 10.0;
  const long kmax = std::max(1L, static_cast<long>(std::ceil(std::exp2(bits / static_cast<double>(n + 1)) / 2.0)));
  Real sum;
  for (long k = 0; k <= kmax; ++k) {
    const long odd = 2 * k + 1;
    Real phase = pi * odd * x;
    Real c;
    switch (n % 4) {
      case 0: c = mp::sin(phase); break;
      case 1: c = -mp::cos(phase); break;
      case 2: c = -mp::sin(phase); break;
      default: c = mp::cos(phase); break;
    }
    sum += c / mp::pow(Real(odd), n + 1);
  }
  return Real(4) * sum / mp::pow(pi, n + 1);
}

Real pow_over_factorial(const Real& x, long j) {
  if (j < 0) return Real(0);
  return mp::pow(x, j) / mp::factorial(static_cast<unsigned long>(j));
}

Real bernoulli_large(long m, const Real& a) {
  if (a < 0L) return bernoulli_large(m, a + 1L) - pow_over_factorial(a, m - 1);
  if (a > 1L) return bernoulli_large(m, a - 1L) + pow_over_factorial(a - 1L, m - 1);
  return bernoulli_fourier(m, a);
}

Real euler_large(long n, const Real& x) {
  if (x < 0L) return pow_over_factorial(x, n) * 2L - euler_large(n, x + 1L);
  if (x > 1L) return pow_over_factorial(x - 1L, n) * 2L - euler_large(n, x - 1L);
  return euler_fourier(n, x);
}

void extend_powers(std::vector<Real>& p, const Real& x, long upto) {
  if (p.empty()) p.emplace_back(1);
  while (static_cast<long>(p.size()) <= upto) {
    const long j = static_cast<long>(p.size());
    p.push_back(p.back() * x / j);
  }
}

Real appell_sum(const std::vector<Real>& base, const std::vector<Real>& pw, long n) {
  Real s;
  for (long k = 0; k <= n; ++k) {
    if (base[k].is_zero()) continue;
    s += base[k] * pw[n - k];
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- exact

mpz_class binomial(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpq_class bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: n must be >= 0");
  std::lock_guard<std::mutex> lock(g_exact_mu);
  return bernoulli_locked(n);
}

RationalPolynomial bernoulli_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_polynomial: n must be >= 0");
  RationalPolynomial p;
  p.coeffs.resize(n + 1);
  std::lock_guard<std::mutex> lock(g_exact_mu);
  for (int k = 0; k <= n; ++k) p.coeffs[n - k] = mpq_class(binomial(n, k)) * bernoulli_locked(k);
  return p;
}

RationalPolynomial euler_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("euler_polynomial: n must be >= 0");
  // E_n(x) = 2/(n+1) [B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)]
  RationalPolynomial b = bernoulli_polynomial(n + 1);
  RationalPolynomial e;
  e.coeffs.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1 - j));
    mpq_class c = b.coeffs[j] * (1 - mpq_class(scale)) * 2 / (n + 1);
    c.canonicalize();
    e.coeffs[j] = c;
  }
  return e;
}

mpq_class euler_at_zero(int n) {
  if (n < 0) throw std::invalid_argument("euler_at_zero: n must be >= 0");
  if (n == 0) return 1;
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
  mpq_class r = mpq_class(-2) * mpq_class(p - 1) * bernoulli_number(n + 1) / (n + 1);
  r.canonicalize();
  return r;
}

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  r.canonicalize();
  return r;
}

Real RationalPolynomial::operator()(const Real& x) const {
  Real r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + Real(*it);
  return r;
}

Complex RationalPolynomial::operator()(const Complex& x) const {
  Complex r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + Complex(Real(*it));
  return r;
}

mpq_class RationalPolynomial::integrate(const mpq_class& lo, const mpq_class& hi) const {
  RationalPolynomial anti;
  anti.coeffs.resize(coeffs.size() + 1);
  for (size_t j = 0; j < coeffs.size(); ++j) anti.coeffs[j + 1] = coeffs[j] / static_cast<unsigned long>(j + 1);
  return anti(hi) - anti(lo);
}

std::string RationalPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const mpq_class& c = coeffs[j];
    if (sgn(c) == 0 && !(j == 0 && first)) continue;
    mpq_class mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    if (j == 0 || mag != 1) os << mag.get_str();
    if (j > 0) os << "x";
    if (j > 1) os << "^" << j;
    first = false;
  }
  return os.str();
}

// -------------------------------------------------------------- numeric

BernoulliScaled::BernoulliScaled(Real a) : a_(std::move(a)) {}

const Real& BernoulliScaled::operator()(long m) {
  while (static_cast<long>(values_.size()) <= m) {
    const long k = static_cast<long>(values_.size());
    const mp::Bits out_bits = mp::current_bits();
    if (k <= kPolynomialCacheCap) {
      mp::PrecisionScope scope(out_bits + kAppellGuard);
      const auto& tab = numeric_tables(out_bits + kAppellGuard);
      extend_powers(pow_over_fact_, a_, k);
      values_.push_back(appell_sum(tab.bernoulli, pow_over_fact_, k).rounded(out_bits));
    } else {
      values_.push_back(bernoulli_scaled_value(k, a_));
    }
  }
  return values_[m];
}

EulerScaled::EulerScaled(Real x) : x_(std::move(x)) {}

const Real& EulerScaled::operator()(long n) {
  while (static_cast<long>(values_.size()) <= n) {
    const long k = static_cast<long>(values_.size());
    const mp::Bits out_bits = mp::current_bits();
    if (k <= kPolynomialCacheCap) {
      mp::PrecisionScope scope(out_bits + kAppellGuard);
      const auto& tab = numeric_tables(out_bits + kAppellGuard);
      extend_powers(pow_over_fact_, x_, k);
      values_.push_back(appell_sum(tab.euler0, pow_over_fact_, k).rounded(out_bits));
    } else {
      values_.push_back(euler_scaled_value(k, x_));
    }
  }
  return values_[n];
}

Real bernoulli_scaled_value(long m, const Real& a) {
  const mp::Bits out_bits = mp::current_bits();
  mp::PrecisionScope scope(out_bits + kAppellGuard);
  if (m <= kPolynomialCacheCap) {
    std::vector<Real> pw;
    extend_powers(pw, a, m);
    return appell_sum(numeric_tables(out_bits + kAppellGuard).bernoulli, pw, m).rounded(out_bits);
  }
  return bernoulli_large(m, a).rounded(out_bits);
}

Real euler_scaled_value(long n, const Real& x) {
  const mp::Bits out_bits = mp::current_bits();
  mp::PrecisionScope scope(out_bits + kAppellGuard);
  if (n <= kPolynomialCacheCap) {
    std::vector<Real> pw;
    extend_powers(pw, x, n);
    return appell_sum(numeric_tables(out_bits + kAppellGuard).euler0, pw, n).rounded(out_bits);
  }
  return euler_large(n, x).rounded(out_bits);
}

}  // namespace zetakit
