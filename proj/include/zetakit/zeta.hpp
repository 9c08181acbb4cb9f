#pragma once

#include "zetakit/numerics.hpp"

#include <gmpxx.h>

namespace zetakit {

/// zeta(s, a) for s != 1 from the incomplete-Gamma splitting with free
/// parameter ctx.lambda in (0, 2 pi).  Real a > 0 only; a > 2 is reduced
/// into (1, 2] first.  PoleError for |s - 1| < 1e-3.
ApproxValue hurwitz_zeta(const Complex& s, const Complex& a, const PrecisionContext& ctx);

/// eta(s) = sum (-1)^{n-1} n^{-s} for all s, lambda in (0, pi).  Exact
/// nonpositive integers return eta_negint.
ApproxValue eta(const Complex& s, const PrecisionContext& ctx);

/// (-1)^j E_j(0) / 2.
mpq_class eta_negint(int j);

/// hurwitz_zeta(s, 1).
ApproxValue riemann_zeta(const Complex& s, const PrecisionContext& ctx);
/// eta(s) / (1 - 2^{1-s}); DomainError when |1 - 2^{1-s}| <= 1e-3.
ApproxValue riemann_zeta_via_eta(const Complex& s, const PrecisionContext& ctx);

/// 2^{-s} Gamma(s) [zeta(s, a/2) - zeta(s, (a+1)/2)] = Gamma(s) sum_{m>=0} (-1)^m (m+a)^{-s},
/// lambda in (0, pi).  PoleError at nonpositive integers s (the Gamma factor).
ApproxValue hurwitz_half_diff(const Complex& s, const Complex& a, const PrecisionContext& ctx);

/// sum_{m>=0} (-1)^m (m+a)^{-s}: the half-difference without the Gamma
/// factor, finite for every s.  At s = -j it equals E_j(a)/2.
ApproxValue alternating_hurwitz(const Complex& s, const Complex& a, const PrecisionContext& ctx);

/// Phi(z, s, a) = sum_{n>=0} z^n (n+a)^{-s}, |z| < 1 - 1e-6, Re a > 0.
ApproxValue lerch_phi(const Complex& z, const Complex& s, const Complex& a, const PrecisionContext& ctx);

/// Li_s(x) = sum_{n>=1} x^n n^{-s}, real |x| < 1 - 1e-6.
ApproxValue polylog(const Complex& s, const Real& x, const PrecisionContext& ctx);

}  // namespace zetakit
