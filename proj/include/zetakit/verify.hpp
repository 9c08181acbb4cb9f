#pragma once

// Named identity checks shared by `zetakit verify` and the acceptance runner.

#include "zetakit/numerics.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetakit::verify {

struct VerificationReport {
  std::string identity_id;
  Complex lhs;
  Complex rhs;
  double abs_delta = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// false for exploratory values that are reported but never fail a suite.
  bool asserted = true;
  long runtime_ms = 0;
  PrecisionContext context_echo;
  std::string note;
};

struct Check {
  std::string id;
  std::string suite;
  int criterion = 0;
  std::function<std::vector<VerificationReport>(const PrecisionContext&)> run;
};

/// "identities", "stieltjes", "gamma", "contour".
const std::vector<std::string>& suite_names();
/// Every registered check in a fixed order.
const std::vector<Check>& registry();

/// Checks for a suite name ("all" selects everything); DomainError for unknown names.
std::vector<const Check*> checks_for_suite(const std::string& suite);
std::vector<const Check*> checks_for_criterion(int criterion);

/// Runs `checks` on up to `threads` workers; `emit` is called in registry
/// order from the calling thread.  Exceptions inside a check become failed
/// reports carrying the message.
std::vector<VerificationReport> run_checks(const std::vector<const Check*>& checks, const PrecisionContext& ctx,
                                           const std::function<void(const VerificationReport&)>& emit = {},
                                           unsigned threads = 0);

/// True when every asserted report passed.
bool all_passed(const std::vector<VerificationReport>& reports);

/// Tolerance 10^-min(digits, D - 5) relative to max(1, |rhs|).
double relative_tolerance(int digits, const PrecisionContext& ctx, const Complex& rhs);

/// (1/2) sum_{n<terms} E_n(0) / (n! (n + shift)) at the current precision.
Real euler_zero_sum(int shift, long terms = 400);

}  // namespace zetakit::verify
