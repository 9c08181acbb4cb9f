#pragma once

#include "zetakit/mp.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace zetakit {

using mp::Complex;
using mp::Real;

// ------------------------------------------------------------------ errors

enum class ErrorKind {
  Domain,
  Pole,
  PrecisionLoss,
  MaxTermsExceeded,
  QuadratureFailure,
  ConvergenceFailure,
  TailBoundUnavailable,
};

const char* to_string(ErrorKind kind) noexcept;

class ZetaError : public std::runtime_error {
 public:
  ZetaError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DomainError : ZetaError {
  explicit DomainError(const std::string& w) : ZetaError(ErrorKind::Domain, w) {}
};
struct PoleError : ZetaError {
  explicit PoleError(const std::string& w) : ZetaError(ErrorKind::Pole, w) {}
};
struct MaxTermsExceeded : ZetaError {
  explicit MaxTermsExceeded(const std::string& w) : ZetaError(ErrorKind::MaxTermsExceeded, w) {}
};
struct QuadratureFailure : ZetaError {
  explicit QuadratureFailure(const std::string& w) : ZetaError(ErrorKind::QuadratureFailure, w) {}
};
struct ConvergenceFailure : ZetaError {
  explicit ConvergenceFailure(const std::string& w) : ZetaError(ErrorKind::ConvergenceFailure, w) {}
};
struct TailBoundUnavailable : ZetaError {
  explicit TailBoundUnavailable(const std::string& w) : ZetaError(ErrorKind::TailBoundUnavailable, w) {}
};

/// Raised when cancellation ate more bits than the guard budget.  Carries
/// the number of extra bits a retry would need.
class PrecisionLoss : public ZetaError {
 public:
  PrecisionLoss(const std::string& w, int needed_bits)
      : ZetaError(ErrorKind::PrecisionLoss, w), needed_bits_(needed_bits) {}
  int needed_bits() const noexcept { return needed_bits_; }

 private:
  int needed_bits_;
};

// --------------------------------------------------------------- precision

/// Fixed safety margin added on top of any measured cancellation.
inline constexpr int kGuardSafetyBits = 10;

/// ceil(log2(peak/target)) + safety margin.  Requires peak >= target > 0.
int guard_bits_for(double peak, double target);
/// Same, with peak/target given as log2 ratio (for magnitudes beyond double range).
int guard_bits_for_log2(double log2_ratio);

struct GuardPolicy {
  int base_bits = 32;
  int safety_bits = kGuardSafetyBits;
  int bits_for(double log2_cancellation) const;
};

/// Precision and truncation settings threaded through every evaluation.
struct PrecisionContext {
  int target_digits = 30;
  long working_bits = 0;
  GuardPolicy guard;
  long max_terms = 200000;
  double tail_tol = 0.0;
  double lambda = 1.0;

  /// Context for `digits` decimal digits with the default guard policy.
  static PrecisionContext for_digits(int digits, double lambda = 1.0);

  long target_bits() const;
  /// 10^-target_digits
  double target_tolerance() const;
  /// Copy with `bits` more working precision (tail_tol unchanged).
  PrecisionContext with_extra_bits(long bits) const;
  PrecisionContext with_lambda(double l) const;
  /// Throws DomainError if an invariant is broken.
  void validate() const;
};

/// Named term count of one constituent sum, for benchmarking.
struct SeriesPart {
  std::string name;
  long terms = 0;
};

/// A value with an engineering error estimate and summation diagnostics.
struct ApproxValue {
  Complex value;
  double err = 0.0;
  long terms_used = 0;
  double peak_magnitude = 0.0;
  std::vector<SeriesPart> parts;

  const Real& real() const { return value.re(); }
  long part_terms(const std::string& name) const;
};

// ----------------------------------------------------------------- series

/// |t_{k+1}| <= ratio * |t_k| from the current index onwards.
struct GeometricRule {
  double ratio = 0.5;
};
/// Terms alternate in sign with decreasing magnitude.  With `accelerate`,
/// the magnitudes must form a totally monotone sequence and the
/// Cohen-Rodriguez Villegas-Zagier weights are applied (terms are still
/// consumed in ascending order).
struct AlternatingRule {
  bool accelerate = false;
};
/// Caller-supplied bound on sum_{j>k} |t_j| given the partial sum through k.
/// Returning a negative value means "no bound yet".
struct AnalyticTailRule {
  std::function<double(long k, const Complex& partial)> tail_after;
};
using StopRule = std::variant<GeometricRule, AlternatingRule, AnalyticTailRule>;

struct SeriesOptions {
  long first_index = 0;
  long min_terms = 1;
  /// Absolute scale below which relative tests are replaced by absolute ones.
  double abs_floor = 0.0;
  /// Disables the PrecisionLoss check (caller handles cancellation).
  bool check_cancellation = true;
};

using TermGenerator = std::function<Complex(long k)>;

/// Sums terms in strictly ascending index order at ctx.working_bits.
ApproxValue sum_series(const TermGenerator& term, const StopRule& rule, const PrecisionContext& ctx,
                       const SeriesOptions& opts = {});

/// Runs `compute` and retries with more guard bits while it throws
/// PrecisionLoss (at most `attempts` times).
ApproxValue with_adaptive_guard(const PrecisionContext& ctx,
                                const std::function<ApproxValue(const PrecisionContext&)>& compute,
                                int attempts = 4);

// ------------------------------------------------------------- quadrature

using RealIntegrand = std::function<Complex(const Real& x)>;

/// Double-exponential (tanh-sinh) rule on [a, b] with level doubling until two
/// levels agree to `rel_tol` (relative to max(|I|, abs_floor)).  Endpoint
/// singularities are allowed; the integrand is never evaluated at a or b.
ApproxValue tanh_sinh(const RealIntegrand& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                      double rel_tol, double abs_floor = 0.0, int max_level = 12);

/// Gauss-Legendre nodes and weights on [-1, 1] at the current precision.
struct GaussLegendreRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

/// n-point Gauss-Legendre on [a, b].
Complex gauss_legendre_integrate(const RealIntegrand& f, const Real& a, const Real& b, int n);

}  // namespace zetakit
