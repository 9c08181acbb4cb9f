#pragma once

#include "zetakit/numerics.hpp"

namespace zetakit {

// Real a > 0 throughout; complex a raises DomainError.  a > 2 is reduced
// into (1, 2] with gamma_k(a) = gamma_k(a+1) + ln^k(a)/a.

/// gamma_0(a) = -psi(a) from the splitting with free parameter ctx.lambda in (0, 2 pi).
ApproxValue gamma0(const Complex& a, const PrecisionContext& ctx);
/// gamma_1(a) from the lambda = 1 expansion about s = 1.
ApproxValue gamma1(const Complex& a, const PrecisionContext& ctx);
/// gamma_2(a) from the lambda = 1 expansion about s = 1; the 3F3 sum stops
/// at n + a >= pfp_asymptotic_switch(ctx), where each summand is below
/// e^{-(n+a)}/(n+a)^3.
ApproxValue gamma2(const Complex& a, const PrecisionContext& ctx);
/// gamma_k(a) for k in {0, 1, 2}.
ApproxValue stieltjes(int k, const Complex& a, const PrecisionContext& ctx);

/// 2F1(1, a; a+1; w) = sum_j a w^j / (a + j), 0 <= w < 1.
ApproxValue hyp2f1_unit(const Complex& a, const Real& w, const PrecisionContext& ctx);

/// sum_{m>=1} B_m(a) t^m / (m^power m!) summed directly, |t| < 2 pi, power >= 1.
ApproxValue bernoulli_sum_direct(int power, const Complex& a, const Real& t, const PrecisionContext& ctx);

/// sum_{m>=1} (-1)^m B_m(a) / (m m!) from -(1/a)[e^{-a} 2F1(1,a;a+1;1/e) + a(gamma + psi(a))].
ApproxValue bernoulli_sum_closed(const Complex& a, const PrecisionContext& ctx);

/// sum_{m>=1} B_m(a) t^m / (m m!) from the 2F1 closed form, t < 0.
ApproxValue bernoulli_sum_t(const Complex& a, const Real& t, const PrecisionContext& ctx);

/// sum_{m>=1} B_m(a) z^m / (m^2 m!) by quadrature of the t-form over [z, 0], z < 0.
ApproxValue bernoulli_sum_dilog(const Complex& a, const Real& z, const PrecisionContext& ctx);

/// sum_{n>=0} Gamma(0, n+a) / (n+a) summed directly.
ApproxValue incomplete_gamma_zero_sum(const Complex& a, const PrecisionContext& ctx);

/// The same sum as -(1/a) int_0^{1/e} u^{a-1} 2F1(1,a;1+a;u) / ln u du.
ApproxValue gamma0_integral_form(const Complex& a, const PrecisionContext& ctx);

/// ln Gamma(x) for real x > 0 from the incomplete-Gamma and Bernoulli sums
/// with free parameter ctx.lambda in (0, 2 pi).
ApproxValue log_gamma_series(const Complex& x, const PrecisionContext& ctx);

}  // namespace zetakit
