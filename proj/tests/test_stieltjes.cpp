#include "doctest.h"
#include "support.hpp"
#include "zetakit/oracles.hpp"
#include "zetakit/stieltjes.hpp"
#include "zetakit/zeta.hpp"

using namespace zetakit;
using testing::dec;
using testing::digits_agree;

namespace {

// gamma_1 and gamma_2, computed independently with mpmath.
const char* kGamma1 = "-0.0728158454836767248605863758749013191377363383343";
const char* kGamma2 = "-0.00969036319287231848453038603521252935";

Complex A(const char* s) { return Complex(dec(s)); }

}  // namespace

TEST_CASE("gamma0 examples and digamma identity") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  const Real g = oracle::euler_gamma();
  CHECK(digits_agree(gamma0(A("1"), ctx).value, g) > 40);
  CHECK(digits_agree(gamma0(A("0.5"), ctx).value, g + mp::log(Real(2)) * 2L) > 40);
  CHECK(digits_agree(gamma0(A("2"), ctx).value, g - 1L) > 40);
  for (const char* a : {"1", "0.5", "2", "3.7", "0.05", "11.25"}) {
    CAPTURE(a);
    CHECK(digits_agree(gamma0(A(a), ctx).value, -oracle::digamma(dec(a))) > 38);
  }
}

TEST_CASE("gamma0 is independent of lambda") {
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int i = 0; i < 8; ++i) {
    Complex a(testing::uniform(0.05, 5.0));
    Complex base = gamma0(a, ctx).value;
    for (double lam : {0.5, 3.0, 6.0}) {
      CAPTURE(a.re().to_double());
      CAPTURE(lam);
      CHECK(digits_agree(gamma0(a, ctx.with_lambda(lam)).value, base) > 28);
    }
  }
}

TEST_CASE("gamma1 and gamma2 examples") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  CHECK(digits_agree(gamma1(A("1"), ctx).value, dec(kGamma1)) > 40);
  CHECK(digits_agree(gamma1(A("2"), ctx).value, dec(kGamma1)) > 40);
  const Real g = oracle::euler_gamma();
  const Real l2 = mp::log(Real(2));
  CHECK(digits_agree(gamma1(A("0.5"), ctx).value, dec(kGamma1) - g * l2 * 2L - l2 * l2) > 40);
  CHECK(digits_agree(gamma2(A("1"), ctx).value, dec(kGamma2)) > 38);
  CHECK(digits_agree(gamma2(A("2"), ctx).value, dec(kGamma2)) > 38);
  CHECK_THROWS_AS(gamma1(A("0"), ctx), DomainError);
  CHECK_THROWS_AS(gamma2(Complex(1.0, 1.0), ctx), DomainError);
  CHECK_THROWS_AS(stieltjes(3, A("1"), ctx), DomainError);
}

TEST_CASE("Stieltjes constants agree with the Laurent oracle") {
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits);
  for (const char* a : {"0.5", "1.3", "2.75", "4.1"}) {
    for (int k = 0; k <= 2; ++k) {
      CAPTURE(a);
      CAPTURE(k);
      CHECK(digits_agree(stieltjes(k, A(a), ctx).value, oracle::stieltjes_laurent(k, A(a), ctx).value) > 25);
    }
  }
}

TEST_CASE("shift relation for gamma_k") {
  // gamma_k(a) = gamma_k(a+1) + ln^k(a)/a
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int i = 0; i < 4; ++i) {
    Real a(testing::uniform(0.2, 3.0));
    for (int k = 0; k <= 2; ++k) {
      Complex rhs = stieltjes(k, Complex(a + 1L), ctx).value + Complex(mp::pow(mp::log(a), static_cast<long>(k)) / a);
      CHECK(digits_agree(stieltjes(k, Complex(a), ctx).value, rhs) > 28);
    }
  }
}

TEST_CASE("Lemma 1 closed forms") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  // -sum B_m/(m m!) = 1 - ln(e - 1)
  Real e = mp::exp(Real(1));
  CHECK(digits_agree(-bernoulli_sum_closed(A("1"), ctx).value, Real(1) - mp::log(e - 1L)) > 40);
  for (const char* a : {"1", "1.5"})
    CHECK(digits_agree(bernoulli_sum_closed(A(a), ctx).value, bernoulli_sum_direct(1, A(a), Real(-1), ctx).value) > 40);
  // t = -1 is the closed form
  CHECK(digits_agree(bernoulli_sum_t(A("1"), Real(-1), ctx).value, bernoulli_sum_closed(A("1"), ctx).value) > 40);
  CHECK(digits_agree(bernoulli_sum_t(A("1"), dec("-0.5"), ctx).value,
                     bernoulli_sum_direct(1, A("1"), dec("-0.5"), ctx).value) > 40);
  CHECK(digits_agree(bernoulli_sum_t(A("0.5"), Real(-2), ctx).value,
                     bernoulli_sum_direct(1, A("0.5"), Real(-2), ctx).value) > 40);
  CHECK_THROWS_AS(bernoulli_sum_t(A("1"), Real(0), ctx), DomainError);
  CHECK(bernoulli_sum_dilog(A("1"), Real(0), ctx).value.is_zero());

  // Phi(1/e, 1, a) = 2F1(1, a; a+1; 1/e)/a
  for (const char* a : {"0.3", "1", "2.5"}) {
    Real w = mp::exp(Real(-1));
    CHECK(digits_agree(lerch_phi(Complex(w), Complex(1), A(a), ctx).value * Complex(dec(a)),
                       hyp2f1_unit(A(a), w, ctx).value) > 40);
  }
}

TEST_CASE("Lemma 1 against direct Bernoulli summation on random a") {
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int i = 0; i < 8; ++i) {
    Complex a(testing::uniform(0.05, 3.0));
    Real t(testing::uniform(-5.5, -0.01));
    CAPTURE(a.re().to_double());
    CAPTURE(t.to_double());
    CHECK(digits_agree(bernoulli_sum_closed(a, ctx).value, bernoulli_sum_direct(1, a, Real(-1), ctx).value) > 28);
    CHECK(digits_agree(bernoulli_sum_t(a, t, ctx).value, bernoulli_sum_direct(1, a, t, ctx).value) > 27);
    Real z(testing::uniform(-3.0, -0.1));
    CAPTURE(z.to_double());
    CHECK(digits_agree(bernoulli_sum_dilog(a, z, ctx).value, bernoulli_sum_direct(2, a, z, ctx).value) > 25);
  }
}

TEST_CASE("incomplete Gamma sum and its integral form") {
  auto ctx = PrecisionContext::for_digits(35);
  mp::PrecisionScope scope(ctx.working_bits);
  for (const char* a : {"1", "0.5", "2.2"}) {
    CAPTURE(a);
    Complex direct = incomplete_gamma_zero_sum(A(a), ctx).value;
    CHECK(digits_agree(gamma0_integral_form(A(a), ctx).value, direct) > 30);
    // the same sum recovered from gamma_1
    const Real g = oracle::euler_gamma();
    Complex from_g1 = Complex(g * g / 2L + g * oracle::digamma(dec(a)) + oracle::zeta2() / 2L) -
                      oracle::stieltjes_laurent(1, A(a), ctx).value +
                      bernoulli_sum_direct(2, A(a), Real(-1), ctx).value;
    CHECK(digits_agree(from_g1, direct) > 25);
  }
}

TEST_CASE("log_gamma_series") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  CHECK(testing::abs_diff(log_gamma_series(A("1"), ctx).value, Complex(0)) < 1e-40);
  CHECK(digits_agree(log_gamma_series(A("0.5"), ctx).value, mp::log(mp::sqrt(mp::pi()))) > 40);
  CHECK(digits_agree(log_gamma_series(A("3"), ctx).value, mp::log(Real(2))) > 40);
  for (int i = 0; i < 8; ++i) {
    Real x(testing::uniform(0.01, 9.0));
    const double lam = testing::uniform(0.3, 6.0);
    CAPTURE(x.to_double());
    CAPTURE(lam);
    CHECK(digits_agree(log_gamma_series(Complex(x), ctx.with_lambda(lam)).value, oracle::lngamma(x)) > 38);
  }
  CHECK_THROWS_AS(log_gamma_series(A("-1"), ctx), DomainError);
  CHECK_THROWS_AS(log_gamma_series(A("1"), ctx.with_lambda(7.0)), DomainError);
}
