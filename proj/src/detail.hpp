#pragma once

// Shared helpers for evaluations that assemble cancelling sums under a
// guard-bit budget.  Internal to the library.

#include "zetakit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace zetakit::detail {

inline constexpr double kLog2E = 1.4426950408889634;

inline double mag(const Complex& z) {
  const double l = mp::log2_abs(z);
  if (l == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp2(std::clamp(l, -1000.0, 1000.0));
}

inline double lmag(const Complex& z) { return mp::log2_abs(z); }

inline bool is_nonpositive_integer(const Complex& s) {
  return s.im().is_zero() && s.re().is_integer() && s.re() <= 0L;
}

inline bool is_positive_integer(const Complex& s, long& n) {
  if (!s.im().is_zero() || !s.re().is_integer() || s.re() <= 0L) return false;
  n = s.re().to_long();
  return true;
}

inline Complex rounded(const Complex& z, long bits) { return {z.re().rounded(bits), z.im().rounded(bits)}; }

// Intermediate result: value, absolute error, and the largest magnitude that
// entered a cancelling sum (log2).
struct Raw {
  Complex value;
  double err = 0.0;
  double peak_log2 = -std::numeric_limits<double>::infinity();
  long terms = 0;
  void note(const Complex& z) { peak_log2 = std::max(peak_log2, lmag(z)); }
};

inline ApproxValue finish(const Raw& r, const PrecisionContext& inner, const PrecisionContext& outer, const char* what) {
  const double vl = lmag(r.value);
  if (vl != -std::numeric_limits<double>::infinity() && r.peak_log2 > vl) {
    const double lost = r.peak_log2 - vl;
    const double available = static_cast<double>(inner.working_bits - outer.target_bits() - outer.guard.safety_bits);
    if (lost > available) {
      throw PrecisionLoss(std::string(what) + ": cancellation of " + std::to_string(static_cast<int>(lost)) +
                              " bits exceeds the guard budget",
                          static_cast<int>(std::ceil(lost - available)) + outer.guard.safety_bits);
    }
  }
  ApproxValue out;
  out.value = rounded(r.value, outer.working_bits);
  const double peak = std::isfinite(r.peak_log2) ? std::exp2(std::min(r.peak_log2, 1000.0)) : mag(r.value);
  out.err = r.err + std::max(peak * std::exp2(-static_cast<double>(inner.working_bits) + 6),
                             mag(r.value) * std::exp2(-static_cast<double>(outer.working_bits)));
  out.terms_used = r.terms;
  out.peak_magnitude = peak;
  return out;
}

template <typename Body>
ApproxValue guarded(const PrecisionContext& ctx, double extra_bits, const char* what, Body body) {
  return with_adaptive_guard(ctx, [&](const PrecisionContext& c) {
    PrecisionContext inner = c.with_extra_bits(static_cast<long>(std::ceil(std::max(0.0, extra_bits))));
    // truncation must keep pace with the bits spent on cancellation
    inner.tail_tol = std::min(c.tail_tol, std::max(1e-300, std::exp2(-static_cast<double>(inner.working_bits) + 8)));
    mp::PrecisionScope scope(inner.working_bits);
    Raw r = body(inner);
    return finish(r, inner, c, what);
  });
}

}  // namespace zetakit::detail
