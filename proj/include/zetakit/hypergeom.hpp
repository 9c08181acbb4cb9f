#pragma once

#include "zetakit/numerics.hpp"

namespace zetakit {

/// Gamma(s, x) for x >= 0.  Closed form for positive integer s, Legendre
/// continued fraction for x >= max(10, |s| + 10), otherwise the
/// hypergeometric series (shifted to Re s >= 1/2 and brought back by the
/// downward recurrence).  Cancellation triggers automatic guard-bit retries.
ApproxValue upper_gamma(const Complex& s, const Real& x, const PrecisionContext& ctx);

/// Switch point between the series and the continued fraction.
double upper_gamma_switch(const Complex& s);

/// mFm(s,...,s; s+1,...,s+1; -x) = sum_j [s/(s+j)]^m (-x)^j / j!, 1 <= m <= 5.
/// Adds x log2(e) + 10 guard bits for x > 0; PrecisionLoss if that is not enough.
ApproxValue pfp_unit(int m, const Complex& s, const Real& x, const PrecisionContext& ctx);

/// Smallest x accepted by pfp_unit_asymptotic: max(40, 2 D ln 10).
double pfp_asymptotic_switch(const PrecisionContext& ctx);

/// Large-x form of pfp_unit for m = 2, 3: algebraic part plus the leading
/// exponential term.  DomainError below the switch point.
ApproxValue pfp_unit_asymptotic(int m, const Complex& s, const Real& x, const PrecisionContext& ctx);
/// The same expression without the switch-point check (for convergence studies).
ApproxValue pfp_unit_asymptotic_unchecked(int m, const Complex& s, const Real& x, const PrecisionContext& ctx);

/// T(m, a, z) for 2 <= m <= 6, z > 0, a not zero or a negative integer.
ApproxValue t_function(int m, const Complex& a, const Real& z, const PrecisionContext& ctx);

/// d^order/ds^order Gamma(s, x) for 1 <= order <= 4, x > 0.  Order 1 uses the
/// 2F2 form; higher orders are assembled from T(3..order+2, s, x).
ApproxValue gamma_inc_param_deriv(int order, const Complex& s, const Real& x, const PrecisionContext& ctx);
/// Order 1 through T(3, s, x) instead of the 2F2 form (cross-check).
ApproxValue gamma_inc_param_deriv_via_t(int order, const Complex& s, const Real& x, const PrecisionContext& ctx);

}  // namespace zetakit
