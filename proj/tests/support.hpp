#pragma once

#include "zetakit/numerics.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace testing {

using zetakit::Complex;
using zetakit::Real;

// Number of matching decimal digits, relative to max(|b|, 1).
inline double digits_agree(const Complex& a, const Complex& b) {
  const double d = zetakit::mp::log2_abs(a - b);
  if (d == -std::numeric_limits<double>::infinity()) return 1000.0;
  const double scale = std::max(zetakit::mp::log2_abs(b), 0.0);
  return (scale - d) * std::log10(2.0);
}

inline double abs_diff(const Complex& a, const Complex& b) {
  return std::exp2(zetakit::mp::log2_abs(a - b));
}

inline Real dec(const char* s) { return Real(std::string_view(s)); }

// Fixed-seed generator so property tests are reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20120917);
  return g;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace testing
