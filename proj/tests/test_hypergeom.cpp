#include "doctest.h"
#include "support.hpp"
#include "zetakit/hypergeom.hpp"
#include "zetakit/oracles.hpp"

using namespace zetakit;
using testing::dec;
using testing::digits_agree;

namespace {

// gamma + Gamma(0, 1), computed independently with mpmath.
const char* kF22At1 = "0.79659959929705313428367586554252408007320662934683";
const char* kGamma01 = "0.21938393439552027367716377546012164903104729340691";

Complex upper(const Complex& s, const Real& x, const PrecisionContext& ctx) { return upper_gamma(s, x, ctx).value; }

}  // namespace

TEST_CASE("upper_gamma examples") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  CHECK(digits_agree(upper(Complex(1), Real(2), ctx), mp::exp(Real(-2))) > 40);
  CHECK(digits_agree(upper(Complex(2.5, 1.0), Real(0), ctx), oracle::gamma(Complex(2.5, 1.0))) > 40);
  CHECK(digits_agree(upper(Complex(0), Real(1), ctx), dec(kGamma01)) > 40);
  CHECK_THROWS_AS(upper_gamma(Complex(-2), Real(0), ctx), PoleError);
  CHECK_THROWS_AS(upper_gamma(Complex(1), Real(-1), ctx), DomainError);
}

TEST_CASE("upper_gamma agrees with the quadrature oracle") {
  auto ctx = PrecisionContext::for_digits(35);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int i = 0; i < 24; ++i) {
    const double re = testing::uniform(-3.5, 6.0);
    const double im = i % 3 == 0 ? testing::uniform(-4.0, 4.0) : 0.0;
    Complex s{Real(re), Real(im)};
    Real x(testing::uniform(0.05, 30.0));
    auto v = upper_gamma(s, x, ctx);
    auto q = oracle::gamma_inc_quad(s, x, ctx);
    CAPTURE(re);
    CAPTURE(im);
    CAPTURE(x.to_double());
    CHECK(digits_agree(v.value, q.value) > 33);
  }
  // exact nonpositive integers and near-pole parameters
  for (int k = 0; k <= 4; ++k) {
    for (double x : {0.3, 2.0, 7.5, 25.0}) {
      auto v = upper_gamma(Complex(-k), Real(x), ctx);
      auto q = oracle::gamma_inc_quad(Complex(-k), Real(x), ctx);
      CHECK(digits_agree(v.value, q.value) > 33);
      Complex near = Complex(Real(-k) + mp::ldexp(Real(1), -90));
      CHECK(digits_agree(upper_gamma(near, Real(x), ctx).value, v.value) > 25);
    }
  }
}

TEST_CASE("incomplete Gamma recurrence and x-derivative") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int i = 0; i < 20; ++i) {
    Complex a(Real(testing::uniform(-3.0, 5.0)), Real(i % 2 ? testing::uniform(-2.0, 2.0) : 0.0));
    Real x(testing::uniform(0.1, 20.0));
    Complex lhs = a * upper(a, x, ctx);
    Complex rhs = upper(a + Complex(1), x, ctx) - mp::pow(x, a) * mp::exp(-x);
    CHECK(testing::abs_diff(lhs, rhs) < 1e-38 * std::max(1.0, std::exp2(mp::log2_abs(rhs))));

    Real h = mp::ldexp(Real(1), -40);
    Complex fd = (upper(a, x + h, ctx) - upper(a, x - h, ctx)) / (h * 2L);
    Complex exact = -mp::pow(x, a - Complex(1)) * mp::exp(-x);
    CHECK(digits_agree(fd, exact) > 20);
  }
}

TEST_CASE("finite Bernoulli-free incomplete Gamma sum") {
  // sum_m (-1)^{m+1} a^m lam^{m+s} / (m!(m+s)) = a^{-s}[Gamma(s, a lam) - Gamma(s)]
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits + 40);
  for (double a : {0.5, 1.0, 2.5}) {
    for (double lam : {0.5, 1.0, 3.0}) {
      for (double sv : {0.5, 1.7, -0.3}) {
        Real A(a), L(lam);
        Complex s(sv);
        Complex sum;
        Real p(1);
        for (int m = 0; m < 400; ++m) {
          if (m > 0) p = p * A * L / m;
          Complex t = p * mp::pow(L, s) / (s + Complex(m));
          if (m % 2 == 0) sum -= t;
          else sum += t;
        }
        Complex rhs = mp::pow(A, -s) * (upper(s, A * L, ctx) - oracle::gamma(s));
        CHECK(digits_agree(sum, rhs) > 28);
      }
    }
  }
}

TEST_CASE("pfp_unit") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int m = 1; m <= 3; ++m) CHECK(digits_agree(pfp_unit(m, Complex(0.7), Real(0), ctx).value, Real(1)) > 40);
  CHECK(digits_agree(pfp_unit(2, Complex(1), Real(1), ctx).value, dec(kF22At1)) > 40);
  // Gamma(1/2, 1) = Gamma(1/2) - 2 1F1(1/2; 3/2; -1)
  Complex f11 = pfp_unit(1, Complex(0.5), Real(1), ctx).value;
  Complex viaF = Complex(mp::sqrt(mp::pi())) - f11 * 2L;
  CHECK(digits_agree(viaF, oracle::gamma_inc_quad(Complex(0.5), Real(1), ctx).value) > 38);
  CHECK_THROWS_AS(pfp_unit(2, Complex(-1), Real(1), ctx), DomainError);
  CHECK_NOTHROW(pfp_unit(2, Complex(0.5), Real(30), ctx));
}

TEST_CASE("Lemma 2 asymptotic forms") {
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits);
  const Complex s(0.5);
  const Real x(50);
  Complex g = oracle::gamma(s), psi = oracle::digamma(s), psi1 = oracle::trigamma(s);
  Complex lx(mp::log(x));
  Complex alg2 = mp::pow(x, -s) * s * s * g * (lx - psi);
  Complex alg3 = mp::pow(x, -s) * s * s * s / 2L * g * (lx * lx - Complex(2) * lx * psi + psi * psi + psi1);
  Complex e = Complex(mp::exp(-x));
  auto a2 = pfp_unit_asymptotic_unchecked(2, s, x, ctx).value;
  auto a3 = pfp_unit_asymptotic_unchecked(3, s, x, ctx).value;
  CHECK(digits_agree(a2, alg2 + e * s * s / (x * x)) > 30);
  CHECK(digits_agree(a3, alg3 - e * s * s * s / (x * x * x)) > 30);

  auto loose = PrecisionContext::for_digits(10);
  CHECK(pfp_asymptotic_switch(loose) < 50.0);
  auto checked = pfp_unit_asymptotic(2, s, x, loose);
  auto direct = pfp_unit(2, s, x, PrecisionContext::for_digits(90));
  CHECK(std::exp2(mp::log2_abs((checked.value - direct.value) / direct.value)) < 1e-10);
  CHECK_THROWS_AS(pfp_unit_asymptotic(2, s, x, ctx), DomainError);

  double prev[2] = {1.0, 1.0};
  for (double xv : {20.0, 35.0, 50.0}) {
    for (int m : {2, 3}) {
      auto as = pfp_unit_asymptotic_unchecked(m, s, Real(xv), ctx);
      auto dr = pfp_unit(m, s, Real(xv), ctx);
      const double rel = std::exp2(mp::log2_abs((as.value - dr.value) / dr.value));
      CHECK(rel < prev[m - 2]);
      prev[m - 2] = rel;
    }
  }
  CHECK(prev[0] <= 1e-10);
  CHECK(prev[1] <= 1e-10);
}

TEST_CASE("T function relations") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  for (double a : {0.5, 1.0, 2.3, -1.5}) {
    for (double z : {0.25, 1.0, 2.0, 6.0}) {
      Complex A(a);
      Real Z(z);
      CHECK(digits_agree(t_function(2, A, Z, ctx).value * Z, upper(A, Z, ctx)) > 38);
      Complex d1 = gamma_inc_param_deriv(1, A, Z, ctx).value;
      CHECK(digits_agree(t_function(3, A, Z, ctx).value * Z, d1 - Complex(mp::log(Z)) * upper(A, Z, ctx)) > 36);
    }
  }
  // dT/dz = -[T(m-1) + T(m)]/z and dT/da = ln z T(m) + (m-1) T(m+1)
  const Real h = mp::ldexp(Real(1), -45);
  for (int m = 3; m <= 5; ++m) {
    Complex a(0.5);
    Real z(2);
    Complex dz = (t_function(m, a, z + h, ctx).value - t_function(m, a, z - h, ctx).value) / (h * 2L);
    Complex rz = -(t_function(m - 1, a, z, ctx).value + t_function(m, a, z, ctx).value) / Complex(z);
    CHECK(digits_agree(dz, rz) > 20);
    Complex da = (t_function(m, a + Complex(h), z, ctx).value - t_function(m, a - Complex(h), z, ctx).value) / (h * 2L);
    Complex ra = Complex(mp::log(z)) * t_function(m, a, z, ctx).value + t_function(m + 1, a, z, ctx).value * static_cast<long>(m - 1);
    CHECK(digits_agree(da, ra) > 20);
  }
  CHECK_THROWS_AS(t_function(3, Complex(-2), Real(1), ctx), DomainError);
  CHECK_THROWS_AS(t_function(3, Complex(0), Real(1), ctx), DomainError);
}

TEST_CASE("incomplete Gamma parameter derivatives") {
  SUBCASE("first derivative against the log-weighted quadrature oracle") {
    auto ctx = PrecisionContext::for_digits(40);
    mp::PrecisionScope scope(ctx.working_bits);
    for (auto [s, x] : {std::pair{0.5, 1.0}, {2.0, 3.0}, {1.0, 0.25}, {3.3, 12.0}}) {
      auto v = gamma_inc_param_deriv(1, Complex(s), Real(x), ctx);
      auto q = oracle::gamma_inc_quad(Complex(s), Real(x), ctx, 1);
      CHECK(digits_agree(v.value, q.value) > 38);
      CHECK(digits_agree(gamma_inc_param_deriv_via_t(1, Complex(s), Real(x), ctx).value, q.value) > 36);
    }
  }
  SUBCASE("small x tends to -gamma") {
    auto ctx = PrecisionContext::for_digits(40);
    mp::PrecisionScope scope(ctx.working_bits);
    Real x = Real(1) / 1000L;
    auto v = gamma_inc_param_deriv(1, Complex(1), x, ctx);
    auto head = tanh_sinh([](const Real& t) { return Complex(mp::log(t) * mp::exp(-t)); }, Real(0), x, ctx, 1e-42);
    CHECK(digits_agree(v.value + head.value, -mp::euler_gamma()) > 38);
  }
  SUBCASE("finite differences in s") {
    auto ctx = PrecisionContext::for_digits(60);
    mp::PrecisionScope scope(ctx.working_bits);
    Real h = dec("1e-25");
    Complex s(0.5);
    Real x(1);
    Complex fd1 = (upper(s + Complex(h), x, ctx) - upper(s - Complex(h), x, ctx)) / (h * 2L);
    CHECK(digits_agree(gamma_inc_param_deriv(1, s, x, ctx).value, fd1) > 30);

    Real h2 = dec("1e-15");
    Complex s1(1);
    Complex fd2 = (upper(s1 + Complex(h2), x, ctx) - upper(s1, x, ctx) * 2L + upper(s1 - Complex(h2), x, ctx)) / (h2 * h2);
    CHECK(digits_agree(gamma_inc_param_deriv(2, s1, x, ctx).value, fd2) > 25);
  }
  SUBCASE("higher orders are derivatives of lower ones") {
    auto ctx = PrecisionContext::for_digits(40);
    mp::PrecisionScope scope(ctx.working_bits);
    const Real h = mp::ldexp(Real(1), -45);
    for (int m = 2; m <= 4; ++m) {
      for (auto [s, x] : {std::pair{0.5, 1.0}, {2.0, 3.0}, {1.0, 0.25}}) {
        Complex S(s);
        Real X(x);
        Complex fd = (gamma_inc_param_deriv(m - 1, S + Complex(h), X, ctx).value -
                      gamma_inc_param_deriv(m - 1, S - Complex(h), X, ctx).value) / (h * 2L);
        CHECK(digits_agree(gamma_inc_param_deriv(m, S, X, ctx).value, fd) > 20);
      }
    }
  }
}

TEST_CASE("2F2 integral is additive") {
  // int_x^b Gamma(s,t)/t dt = x^s/s^2 F(x) - b^s/s^2 F(b) + Gamma(s)(ln b - ln x)
  auto ctx = PrecisionContext::for_digits(25);
  mp::PrecisionScope scope(ctx.working_bits);
  auto integral = [&](const Complex& s, const Real& lo, const Real& hi) {
    return mp::pow(lo, s) / (s * s) * pfp_unit(2, s, lo, ctx).value -
           mp::pow(hi, s) / (s * s) * pfp_unit(2, s, hi, ctx).value +
           oracle::gamma(s) * Complex(mp::log(hi) - mp::log(lo));
  };
  for (double sv : {0.5, 1.5, 3.0}) {
    Complex s(sv);
    Real x(0.5), c(2), b(6);
    Complex whole = integral(s, x, b);
    CHECK(digits_agree(integral(s, x, c) + integral(s, c, b), whole) > 24);
    auto q = tanh_sinh([&](const Real& t) { return upper(s, t, ctx) / Complex(t); }, x, b, ctx, 1e-24);
    CHECK(digits_agree(q.value, whole) > 22);
  }
}
