#pragma once

// Vertical-line integrals int_{-inf}^{inf} F(c+it)/(c+it)^p dt for
// F = zeta, eta, Li_s(x), evaluated in double precision.

#include "zetakit/numerics.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace zetakit::contour {

using cplx = std::complex<double>;

enum class IntegrandKind { Zeta, Eta, Polylog, ZetaPower };

const char* to_string(IntegrandKind kind) noexcept;
/// "zeta", "eta", "polylog", "zeta_power"; DomainError otherwise.
IntegrandKind parse_kind(const std::string& name);

/// coef/s^p, or coef/((s-1) s^p) when `polar`.
struct AnalyticPart {
  std::string name;
  double coef = 1.0;
  int p = 1;
  bool polar = false;
  /// Principal-value integral over the whole line.
  double full_line = 0.0;

  cplx operator()(cplx s) const;
  /// 2 Re int_T^inf of the part along Re s = c.
  double tail(double c, double T) const;
};

struct LineIntegralSpec {
  IntegrandKind kind = IntegrandKind::Zeta;
  double c = 2.0;
  double T = 500.0;
  double quad_tol = 1e-8;
  /// Polylog argument.
  double x = 0.0;
  /// Power of s in the denominator (ZetaPower; 1 otherwise).
  int p = 1;
  std::vector<AnalyticPart> analytic_parts;

  /// Throws DomainError for invalid parameters and TailBoundUnavailable
  /// for (kind, c) combinations without a usable tail expansion.
  void validate() const;
};

/// Spec with the analytic parts for `kind` and `c` filled in.
LineIntegralSpec make_spec(IntegrandKind kind, double c, double T, double x = 0.0, int p = 1);

/// Closed-form value of the integral; DomainError outside the stated regimes.
double expected_value(IntegrandKind kind, double c, std::optional<double> x = std::nullopt);

/// Analytic parts over the full line + adaptive Gauss-Kronrod on [-T, T] for
/// the remainder + tail expansion of the Dirichlet remainder beyond |t| = T.
/// parts: "panels" (accepted quadrature panels), "evaluations".
ApproxValue evaluate(const LineIntegralSpec& spec, const PrecisionContext& ctx);

/// int zeta(c+it)/(c+it)^p dt, 0 < c < 1, p >= 1 (reported, not asserted).
ApproxValue evaluate_power(double c, int p, double T, const PrecisionContext& ctx);

/// The numerator F(s) of the integrand.
cplx numerator(const LineIntegralSpec& spec, cplx s);

}  // namespace zetakit::contour
