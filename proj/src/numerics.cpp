#include "zetakit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace zetakit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::PrecisionLoss: return "PrecisionLoss";
    case ErrorKind::MaxTermsExceeded: return "MaxTermsExceeded";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::TailBoundUnavailable: return "TailBoundUnavailable";
  }
  return "ZetaError";
}

int guard_bits_for(double peak, double target) {
  return guard_bits_for_log2(std::log2(peak / target));
}

int guard_bits_for_log2(double log2_ratio) {
  const double r = std::max(0.0, log2_ratio);
  // exact powers of two must not round up
  return static_cast<int>(std::ceil(r - 1e-12)) + kGuardSafetyBits;
}

int GuardPolicy::bits_for(double log2_cancellation) const {
  if (!(log2_cancellation > 0)) return safety_bits;
  return static_cast<int>(std::ceil(log2_cancellation)) + safety_bits;
}

// ------------------------------------------------------------------ context

PrecisionContext PrecisionContext::for_digits(int digits, double lambda) {
  PrecisionContext c;
  c.target_digits = digits;
  c.working_bits = c.target_bits() + c.guard.base_bits;
  c.tail_tol = std::pow(10.0, -(digits + 3));
  c.lambda = lambda;
  return c;
}

long PrecisionContext::target_bits() const {
  return static_cast<long>(std::ceil(target_digits * std::log2(10.0)));
}

double PrecisionContext::target_tolerance() const { return std::pow(10.0, -target_digits); }

PrecisionContext PrecisionContext::with_extra_bits(long bits) const {
  PrecisionContext c = *this;
  c.working_bits += std::max(0L, bits);
  return c;
}

PrecisionContext PrecisionContext::with_lambda(double l) const {
  PrecisionContext c = *this;
  c.lambda = l;
  return c;
}

void PrecisionContext::validate() const {
  if (target_digits < 1 || target_digits > 280) throw DomainError("target_digits must be in [1, 280]");
  if (working_bits < target_bits() + guard.safety_bits)
    throw DomainError("working_bits below target precision plus guard bits");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw DomainError("tail_tol must lie in (0, 1)");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
}

long ApproxValue::part_terms(const std::string& name) const {
  for (const auto& p : parts)
    if (p.name == name) return p.terms;
  return 0;
}

// ------------------------------------------------------------------- series

namespace {

double mag(const Complex& z) {
  const double l = mp::log2_abs(z);
  if (l == -std::numeric_limits<double>::infinity()) return 0.0;
  if (l > 1020) return std::numeric_limits<double>::max();
  return std::exp2(l);
}

struct Accumulator {
  Complex sum;
  double peak = 0.0;
  void add(const Complex& t) {
    sum += t;
    peak = std::max({peak, mag(sum), mag(t)});
  }
};

void check_cancellation(const ApproxValue& out, const PrecisionContext& ctx, const SeriesOptions& opts) {
  if (!opts.check_cancellation) return;
  const double value = std::max(mag(out.value), opts.abs_floor);
  if (value <= 0.0 || out.peak_magnitude <= 0.0) return;
  const double lost = std::log2(out.peak_magnitude / value);
  const double budget = static_cast<double>(ctx.working_bits - ctx.target_bits() - ctx.guard.safety_bits);
  if (lost > budget) {
    throw PrecisionLoss("series cancellation of " + std::to_string(static_cast<int>(lost)) +
                            " bits exceeds guard budget of " + std::to_string(static_cast<int>(budget)),
                        static_cast<int>(std::ceil(lost - budget)) + ctx.guard.safety_bits);
  }
}

double rounding_err(const Accumulator& acc, long terms, const PrecisionContext& ctx) {
  return acc.peak * std::exp2(-static_cast<double>(ctx.working_bits)) * static_cast<double>(terms + 1);
}

ApproxValue sum_accelerated(const TermGenerator& term, const PrecisionContext& ctx, const SeriesOptions& opts) {
  // Cohen, Rodriguez Villegas, Zagier, Algorithm 1.
  const double rate = std::log10(3.0 + std::sqrt(8.0));
  const long n = static_cast<long>(std::ceil((ctx.target_digits + 4) / rate)) + 2;
  if (n > ctx.max_terms) throw MaxTermsExceeded("accelerated alternating series needs more than max_terms");
  Real d = mp::pow(Real(3) + mp::sqrt(Real(8)), n);
  d = (d + Real(1) / d) / 2L;
  Real b(-1);
  Real c = -d;
  Complex s;
  Accumulator acc;
  Complex first;
  for (long k = 0; k < n; ++k) {
    Complex t = term(opts.first_index + k);
    if (k == 0) first = t;
    // a_k = (-1)^k t_k
    Complex a = (k % 2 == 0) ? t : -t;
    c = b - c;
    Complex contrib = a * c;
    s += contrib;
    acc.peak = std::max({acc.peak, mag(s), mag(contrib)});
    b = b * ((k + n) * (k - n)) / ((Real(k) + Real(0.5)) * (k + 1));
  }
  ApproxValue out;
  out.value = s / d;
  out.terms_used = n;
  out.peak_magnitude = acc.peak / d.to_double();
  out.err = 2.0 * mag(first) / d.to_double() + rounding_err(acc, n, ctx) / d.to_double();
  check_cancellation(out, ctx, opts);
  return out;
}

}  // namespace

ApproxValue sum_series(const TermGenerator& term, const StopRule& rule, const PrecisionContext& ctx,
                       const SeriesOptions& opts) {
  mp::PrecisionScope scope(ctx.working_bits);
  if (const auto* alt = std::get_if<AlternatingRule>(&rule); alt != nullptr && alt->accelerate)
    return sum_accelerated(term, ctx, opts);

  Accumulator acc;
  long count = 0;
  Complex next;
  bool have_next = false;
  for (long k = opts.first_index; count < ctx.max_terms; ++k) {
    Complex t = have_next ? std::move(next) : term(k);
    have_next = false;
    acc.add(t);
    ++count;
    double bound = -1.0;
    std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, GeometricRule>) {
            if (!t.is_zero() && r.ratio < 1.0) bound = mag(t) * r.ratio / (1.0 - r.ratio);
          } else if constexpr (std::is_same_v<R, AlternatingRule>) {
            next = term(k + 1);
            have_next = true;
            bound = mag(next);
          } else {
            bound = r.tail_after(k, acc.sum);
          }
        },
        rule);
    if (count < opts.min_terms || bound < 0.0) continue;
    const double scale = std::max(mag(acc.sum), opts.abs_floor);
    if (bound <= ctx.tail_tol * scale) {
      ApproxValue out;
      out.value = std::move(acc.sum);
      out.terms_used = count;
      out.peak_magnitude = acc.peak;
      out.err = bound + rounding_err(acc, count, ctx);
      check_cancellation(out, ctx, opts);
      return out;
    }
  }
  throw MaxTermsExceeded("series did not meet its stop rule within " + std::to_string(ctx.max_terms) +
                         " terms (divergent, or splitting parameter out of range)");
}

ApproxValue with_adaptive_guard(const PrecisionContext& ctx,
                                const std::function<ApproxValue(const PrecisionContext&)>& compute,
                                int attempts) {
  PrecisionContext c = ctx;
  for (int i = 0;; ++i) {
    try {
      return compute(c);
    } catch (const PrecisionLoss& e) {
      if (i + 1 >= attempts) throw;
      c = c.with_extra_bits(std::max(e.needed_bits(), 16));
    }
  }
}

// --------------------------------------------------------------- quadrature

ApproxValue tanh_sinh(const RealIntegrand& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                      double rel_tol, double abs_floor, int max_level) {
  mp::PrecisionScope scope(ctx.working_bits);
  const Real half_width = (b - a) / 2L;
  const Real width = b - a;
  const Real half_pi = mp::pi() / 2L;
  const double eps_log2 = -static_cast<double>(ctx.working_bits) - 10.0;

  // Contribution of abscissa t (and -t when t > 0).
  auto node_pair = [&](const Real& t, bool include_mirror) {
    Real sh, ch;
    Real et = mp::exp(t);
    Real eti = Real(1) / et;
    sh = (et - eti) / 2L;
    ch = (et + eti) / 2L;
    Real u = half_pi * sh;
    Real e2u = mp::exp(u * 2L);
    // 1 - tanh(u) = 2/(e^{2u}+1); cosh^2(u) = (e^{2u}+2+e^{-2u})/4
    Real delta = width / (e2u + 1L);                       // distance to the endpoint
    Real cosh2 = (e2u + 2L + Real(1) / e2u) / 4L;
    Real w = half_width * half_pi * ch / cosh2;
    Complex sum;
    if (delta.is_zero()) return sum;
    if (t.is_zero()) return Complex(f(a + half_width) * w);
    sum += f(b - delta) * w;
    if (include_mirror) sum += f(a + delta) * w;
    return sum;
  };

  auto level_sum = [&](const Real& h, long start, long step, long& evals) {
    Complex s;
    int small = 0;
    for (long k = start;; k += step) {
      Real t = h * k;
      Complex c = node_pair(t, k != 0);
      s += c;
      evals += (k == 0) ? 1 : 2;
      // integrable endpoint singularities decay slower than the weights,
      // so stop on the contributions themselves
      small = (mp::log2_abs(c) < eps_log2 + mp::log2_abs(s)) ? small + 1 : 0;
      if (t >= 1L && small >= 2) break;
      if (t > 8L) break;
    }
    return s;
  };

  long evals = 0;
  Real h(1);
  Complex total = level_sum(h, 0, 1, evals);
  Complex estimate = total * h;
  double last_diff = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    h /= 2L;
    total += level_sum(h, 1, 2, evals);
    Complex next = total * h;
    const double diff = std::exp2(mp::log2_abs(next - estimate));
    const double scale = std::max(std::exp2(mp::log2_abs(next)), abs_floor);
    estimate = std::move(next);
    if (level >= 3 && (diff <= rel_tol * scale || diff == 0.0)) {
      ApproxValue out;
      out.value = estimate;
      // quadratic convergence: the next difference is about diff^2/last_diff
      out.err = std::isfinite(last_diff) && last_diff > 0 ? std::min(diff, diff * diff / last_diff * 10) : diff;
      out.err = std::max(out.err, std::exp2(mp::log2_abs(estimate) - ctx.target_bits()));
      out.terms_used = evals;
      return out;
    }
    last_diff = diff;
  }
  throw QuadratureFailure("tanh-sinh did not converge within " + std::to_string(max_level) + " levels");
}

const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, std::unique_ptr<GaussLegendreRule>> cache;
  const long bits = mp::current_bits();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, bits}];
  if (slot) return *slot;
  auto rule = std::make_unique<GaussLegendreRule>();
  mp::PrecisionScope scope(bits + 16);
  const Real eps = mp::ldexp(Real(1), -(bits + 8));
  for (int i = 1; i <= n; ++i) {
    Real x(std::cos(M_PI * (i - 0.25) / (n + 0.5)));
    Real dp;
    for (int it = 0; it < 100; ++it) {
      Real p0(1), p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2L * k - 1) * x * p1 - (k - 1L) * p0) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = static_cast<long>(n) * (x * p1 - p0) / (x * x - 1L);
      Real dx = p1 / dp;
      x -= dx;
      if (mp::abs(dx) < eps) break;
    }
    {
      Real p0(1), p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2L * k - 1) * x * p1 - (k - 1L) * p0) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = static_cast<long>(n) * (x * p1 - p0) / (x * x - 1L);
    }
    Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
    rule->nodes.push_back(x.rounded(bits));
    rule->weights.push_back(w.rounded(bits));
  }
  slot = std::move(rule);
  return *slot;
}

Complex gauss_legendre_integrate(const RealIntegrand& f, const Real& a, const Real& b, int n) {
  const auto& rule = gauss_legendre(n);
  const Real mid = (a + b) / 2L;
  const Real half = (b - a) / 2L;
  Complex sum;
  for (size_t i = 0; i < rule.nodes.size(); ++i) sum += f(mid + half * rule.nodes[i]) * rule.weights[i];
  return sum * half;
}

}  // namespace zetakit
