#include "doctest.h"
#include "support.hpp"
#include "zetakit/oracles.hpp"
#include "zetakit/polynomials.hpp"
#include "zetakit/zeta.hpp"

using namespace zetakit;
using testing::dec;
using testing::digits_agree;

namespace {

// Li_2(-1/e), computed independently with mpmath.
const char* kLi2MinusInvE = "-0.338647996403452179821413739726926209661";

Complex hz(const Complex& s, const Complex& a, const PrecisionContext& ctx) { return hurwitz_zeta(s, a, ctx).value; }

Complex hz(double s, double a, const PrecisionContext& ctx) { return hz(Complex(s), Complex(a), ctx); }

Complex hzq(double s, const mpq_class& a, const PrecisionContext& ctx) { return hz(Complex(s), Complex(Real(a)), ctx); }

// (1/2) sum_n E_n(0) / (n! (n + shift)), the Euler sums of Corollary 1
Real euler_zero_sum(int shift, const PrecisionContext& ctx) {
  mp::PrecisionScope scope(ctx.working_bits);
  EulerScaled e(Real(0));
  Real sum;
  for (long n = 0; n < 400; ++n) sum += e(n) / Real(n + shift);
  return sum / 2L;
}

}  // namespace

TEST_CASE("hurwitz_zeta and riemann_zeta examples") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  CHECK(digits_agree(hz(Complex(0), Complex(dec("0.3")), ctx), dec("0.2")) > 40);
  CHECK(digits_agree(hz(2, 1, ctx), oracle::zeta2()) > 40);
  CHECK(digits_agree(hz(-1, 1, ctx), Real(-1) / 12L) > 40);
  CHECK(digits_agree(riemann_zeta(Complex(2), ctx).value, oracle::zeta2()) > 40);
  CHECK(digits_agree(riemann_zeta(Complex(0), ctx).value, Real(-1) / 2L) > 40);
  CHECK(digits_agree(riemann_zeta(Complex(-1), ctx).value, Real(-1) / 12L) > 40);
  CHECK(digits_agree(riemann_zeta(Complex(3), ctx).value, oracle::zeta3()) > 40);
  // nonpositive integers through the splitting limit against the polynomial formula
  for (int k = 0; k <= 6; ++k) {
    Real a = dec("0.37");
    Real expect = -bernoulli_polynomial(k + 1)(a) / Real(k + 1);
    CHECK(digits_agree(hz(Complex(-k), Complex(a), ctx), expect) > 40);
    Complex near = Complex(Real(-k) + dec("1e-25"));
    CHECK(digits_agree(hz(near, Complex(a), ctx), expect) > 20);
  }
}

TEST_CASE("zeta errors") {
  auto ctx = PrecisionContext::for_digits(20);
  CHECK_THROWS_AS(hurwitz_zeta(Complex(1), Complex(1), ctx), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(Complex(1.0005), Complex(1), ctx), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(Complex(2), Complex(0), ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(Complex(2), Complex(-0.5), ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(Complex(2), Complex(1.0, 0.5), ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(Complex(2), Complex(1), ctx.with_lambda(6.3)), DomainError);
  CHECK_THROWS_AS(eta(Complex(2), ctx.with_lambda(3.2)), DomainError);
  CHECK_THROWS_AS(hurwitz_half_diff(Complex(2), Complex(1), ctx.with_lambda(3.2)), DomainError);
  CHECK_THROWS_AS(hurwitz_half_diff(Complex(-2), Complex(1), ctx), PoleError);
  CHECK_THROWS_AS(lerch_phi(Complex(0.9999999), Complex(1), Complex(1), ctx), DomainError);
  CHECK_THROWS_AS(lerch_phi(Complex(0.5), Complex(1), Complex(0), ctx), DomainError);
  CHECK_THROWS_AS(polylog(Complex(2), Real(-1), ctx), DomainError);
  CHECK_THROWS_AS(riemann_zeta_via_eta(Complex(1.0, 2.0 * 3.14159265358979323846 / std::log(2.0)), ctx),
                  DomainError);
}

TEST_CASE("eta examples and special values") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  CHECK(eta_negint(0) == mpq_class(1, 2));
  CHECK(eta_negint(1) == mpq_class(1, 4));
  CHECK(eta_negint(2) == 0);
  CHECK(eta_negint(3) == mpq_class(-1, 8));
  CHECK(digits_agree(eta(Complex(0), ctx).value, Real(1) / 2L) > 40);
  CHECK(digits_agree(eta(Complex(1), ctx).value, mp::log(Real(2))) > 40);
  CHECK(digits_agree(eta(Complex(2), ctx).value, mp::pi() * mp::pi() / 12L) > 40);
  // the series itself, approached symmetrically
  for (int j = 0; j <= 12; ++j) {
    Real e = dec("1e-30");
    Complex avg = (eta(Complex(Real(-j) + e), ctx).value + eta(Complex(Real(-j) - e), ctx).value) / 2L;
    CAPTURE(j);
    CHECK(testing::abs_diff(avg, Real(eta_negint(j))) < 1e-38);
  }
}

TEST_CASE("eta and zeta are consistent") {
  auto ctx = PrecisionContext::for_digits(35);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int i = 0; i < 10; ++i) {
    Complex s(Real(testing::uniform(-4.0, 5.0)), Real(i % 2 ? testing::uniform(-6.0, 6.0) : 0.0));
    if (testing::abs_diff(s, Complex(1)) < 0.05) continue;
    Complex factor = Complex(1) - mp::pow(Real(2), Complex(1) - s);
    CAPTURE(s.re().to_double());
    CAPTURE(s.im().to_double());
    CHECK(digits_agree(factor * riemann_zeta(s, ctx).value, eta(s, ctx).value) > 33);
    CHECK(digits_agree(riemann_zeta_via_eta(s, ctx).value, riemann_zeta(s, ctx).value) > 32);
  }
}

TEST_CASE("hurwitz_zeta is independent of lambda") {
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits);
  for (const char* sv : {"-2.5", "0.25", "2+3i"}) {
    for (const char* av : {"0.3", "1", "2.7"}) {
      Complex s = mp::parse_complex(sv);
      Complex a = mp::parse_complex(av);
      Complex base = hz(s, a, ctx.with_lambda(1.0));
      for (double lam : {0.5, 3.0, 6.0}) {
        CAPTURE(sv);
        CAPTURE(av);
        CAPTURE(lam);
        CHECK(digits_agree(hz(s, a, ctx.with_lambda(lam)), base) > 25);
      }
    }
  }
}

TEST_CASE("hurwitz_zeta agrees with Euler-Maclaurin") {
  auto ctx = PrecisionContext::for_digits(35);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int i = 0; i < 16; ++i) {
    Complex s(Real(testing::uniform(-5.0, 6.0)), Real(i % 4 == 0 ? testing::uniform(-10.0, 10.0) : 0.0));
    if (testing::abs_diff(s, Complex(1)) < 0.01) continue;
    Complex a(testing::uniform(0.05, 6.0));
    CAPTURE(s.re().to_double());
    CAPTURE(s.im().to_double());
    CAPTURE(a.re().to_double());
    CHECK(digits_agree(hz(s, a, ctx), oracle::zeta_em(s, a, ctx).value) > 33);
  }
}

TEST_CASE("shift relation and parameter derivative") {
  auto ctx = PrecisionContext::for_digits(35);
  mp::PrecisionScope scope(ctx.working_bits);
  for (int i = 0; i < 12; ++i) {
    Complex s(Real(testing::uniform(-4.0, 4.0)), Real(i % 3 == 0 ? testing::uniform(-3.0, 3.0) : 0.0));
    if (testing::abs_diff(s, Complex(1)) < 0.01 || testing::abs_diff(s, Complex(0)) < 0.01) continue;
    Real a(testing::uniform(0.1, 4.0));
    Complex lhs = hz(s, Complex(a), ctx);
    Complex rhs = hz(s, Complex(a + 1L), ctx) + mp::pow(a, -s);
    CHECK(digits_agree(lhs, rhs) > 33);

    // d/da zeta(s, a) = -s zeta(s+1, a), central differences
    if (testing::abs_diff(s, Complex(0)) < 0.05) continue;
    Real h = mp::ldexp(Real(1), -36);
    Complex fd = (hz(s, Complex(a + h), ctx) - hz(s, Complex(a - h), ctx)) / (h * 2L);
    CHECK(digits_agree(fd, -s * hz(s + Complex(1), Complex(a), ctx)) > 20);
  }
}

TEST_CASE("multiplication formula") {
  auto ctx = PrecisionContext::for_digits(45);
  mp::PrecisionScope scope(ctx.working_bits);
  for (double sv : {-1.5, 0.3, 2.5}) {
    for (int q : {2, 3, 5}) {
      Complex sum;
      for (int r = 1; r < q; ++r) sum += hzq(sv, mpq_class(r, q), ctx);
      Complex s(sv);
      Complex rhs = (mp::pow(Real(q), s) - Complex(1)) * riemann_zeta(s, ctx).value;
      CAPTURE(sv);
      CAPTURE(q);
      CHECK(digits_agree(sum, rhs) > 42);
    }
  }
}

TEST_CASE("integral over a vanishes for Re s < 1") {
  // int_0^1 zeta(s,a) da = 1/(1-s) + int_1^2 zeta(s,a) da
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits);
  for (double sv : {-0.5, 0.25}) {
    Complex s(sv);
    Complex smooth = gauss_legendre_integrate([&](const Real& a) { return hz(s, Complex(a), ctx); }, Real(1), Real(2), 40);
    Complex total = smooth + inverse(Complex(1) - s);
    CAPTURE(sv);
    CHECK(testing::abs_diff(total, Complex(0)) < 1e-25);
  }
}

TEST_CASE("reciprocity relation") {
  auto ctx = PrecisionContext::for_digits(35);
  mp::PrecisionScope scope(ctx.working_bits);
  struct Case {
    int p, q;
    mpq_class b;
  };
  for (const Case& c : {Case{1, 2, 0}, Case{2, 3, mpq_class(1, 4)}}) {
    for (double sv : {-1.3, 0.7, 3.0}) {
      Complex lhs, rhs;
      for (int r = 1; r <= c.q; ++r) lhs += hzq(sv, mpq_class(c.p * r, c.q) - c.b, ctx);
      for (int l = 0; l < c.p; ++l) rhs += hzq(sv, mpq_class(l * c.q + c.p, c.p) - c.q * c.b / c.p, ctx);
      rhs *= mp::pow(Real(mpq_class(c.q, c.p)), Complex(sv));
      CAPTURE(c.p);
      CAPTURE(c.q);
      CAPTURE(sv);
      CHECK(digits_agree(lhs, rhs) > 33);
    }
  }
}

TEST_CASE("Corollary 1 identities") {
  auto ctx = PrecisionContext::for_digits(45);
  mp::PrecisionScope scope(ctx.working_bits);
  Real base = mp::log(Real(1) + mp::exp(Real(1))) - 1L;
  Real ln2 = base + euler_zero_sum(1, ctx);
  CHECK(testing::abs_diff(ln2, mp::log(Real(2))) < 1e-43);
  Real li2 = polylog(Complex(2), -mp::exp(Real(-1)), ctx).real();
  CHECK(digits_agree(li2, dec(kLi2MinusInvE)) > 38);
  Real half_zeta2 = base - li2 + euler_zero_sum(2, ctx);
  CHECK(testing::abs_diff(half_zeta2, oracle::zeta2() / 2L) < 1e-43);
}

TEST_CASE("half difference and alternating sums") {
  auto ctx = PrecisionContext::for_digits(35);
  mp::PrecisionScope scope(ctx.working_bits);
  // a = 1, s = 2: (pi^2/2 - pi^2/6)/4
  Real pi2 = mp::pi() * mp::pi();
  CHECK(digits_agree(hurwitz_half_diff(Complex(2), Complex(1), ctx).value, pi2 / 12L) > 33);
  // no pole at s = 0 once the Gamma factor is removed
  CHECK(digits_agree(alternating_hurwitz(Complex(0), Complex(0.7), ctx).value, Real(1) / 2L) > 33);
  CHECK(digits_agree(alternating_hurwitz(Complex(dec("1e-20")), Complex(0.7), ctx).value, Real(1) / 2L) > 18);
  for (int i = 0; i < 10; ++i) {
    Complex s(Real(testing::uniform(-3.0, 4.0)), Real(i % 3 == 0 ? testing::uniform(-3.0, 3.0) : 0.0));
    Real a(testing::uniform(0.1, 4.5));
    CAPTURE(s.re().to_double());
    CAPTURE(a.to_double());
    // definition through the Hurwitz function
    Complex diff = mp::pow(Real(2), -s) * (hz(s, Complex(a / 2L), ctx) - hz(s, Complex((a + 1L) / 2L), ctx));
    CHECK(digits_agree(alternating_hurwitz(s, Complex(a), ctx).value, diff) > 32);
    // a = 1 is eta
    CHECK(digits_agree(alternating_hurwitz(s, Complex(1), ctx).value, eta(s, ctx).value) > 33);
    // F(s, a) + F(s, a + 1) = a^{-s}
    Complex sum = alternating_hurwitz(s, Complex(a), ctx).value + alternating_hurwitz(s, Complex(a + 1L), ctx).value;
    CHECK(digits_agree(sum, mp::pow(a, -s)) > 32);
    if (!s.im().is_zero() || testing::abs_diff(s, Complex(std::round(s.re().to_double()))) > 0.05)
      CHECK(digits_agree(hurwitz_half_diff(s, Complex(a), ctx).value,
                         oracle::gamma(s) * alternating_hurwitz(s, Complex(a), ctx).value) > 32);
  }
  // s = -j: E_j(a)/2
  for (int j = 0; j <= 5; ++j) {
    Real a = dec("0.8");
    CHECK(digits_agree(alternating_hurwitz(Complex(-j), Complex(a), ctx).value, euler_polynomial(j)(a) / 2L) > 33);
  }
}

TEST_CASE("lerch_phi and polylog") {
  auto ctx = PrecisionContext::for_digits(40);
  mp::PrecisionScope scope(ctx.working_bits);
  Complex a(1.7, 0.4), s(1.3, -0.8);
  CHECK(digits_agree(lerch_phi(Complex(0), s, a, ctx).value, mp::pow(a, -s)) > 40);
  Real z = mp::exp(Real(-1));
  CHECK(digits_agree(lerch_phi(Complex(z), Complex(1), Complex(1), ctx).value, -mp::log(Real(1) - z) / z) > 40);
  CHECK(digits_agree(lerch_phi(Complex(0.5), Complex(2), Complex(1), ctx).value,
                     polylog(Complex(2), Real(0.5), ctx).value * 2L) > 40);
  CHECK(polylog(Complex(3), Real(0), ctx).value.is_zero());
  CHECK(digits_agree(polylog(Complex(1), Real(0.5), ctx).value, mp::log(Real(2))) > 40);
  // Li_2(1/2) = pi^2/12 - ln^2(2)/2
  Real l2 = mp::log(Real(2));
  CHECK(digits_agree(polylog(Complex(2), Real(0.5), ctx).value, mp::pi() * mp::pi() / 12L - l2 * l2 / 2L) > 40);
  for (int i = 0; i < 12; ++i) {
    Complex zz(Real(testing::uniform(-0.9, 0.9)), Real(testing::uniform(-0.4, 0.4)));
    Complex ss(Real(testing::uniform(-3.0, 4.0)), Real(testing::uniform(-2.0, 2.0)));
    Complex aa(Real(testing::uniform(0.2, 3.0)), Real(testing::uniform(-1.0, 1.0)));
    // Phi(z, s, a) = a^{-s} + z Phi(z, s, a + 1)
    Complex lhs = lerch_phi(zz, ss, aa, ctx).value;
    Complex rhs = mp::pow(aa, -ss) + zz * lerch_phi(zz, ss, aa + Complex(1), ctx).value;
    CHECK(digits_agree(lhs, rhs) > 37);
  }
}

TEST_CASE("term counts are reported per part") {
  auto ctx = PrecisionContext::for_digits(30);
  mp::PrecisionScope scope(ctx.working_bits);
  auto small = hurwitz_zeta(Complex(0.5), Complex(1), ctx.with_lambda(0.5));
  auto large = hurwitz_zeta(Complex(0.5), Complex(1), ctx.with_lambda(5.0));
  CHECK(small.part_terms("incomplete_gamma") > large.part_terms("incomplete_gamma"));
  CHECK(small.part_terms("bernoulli") < large.part_terms("bernoulli"));
  CHECK(eta(Complex(0.5), ctx).part_terms("euler") > 0);
  CHECK(small.terms_used == small.part_terms("incomplete_gamma") + small.part_terms("bernoulli"));
}
