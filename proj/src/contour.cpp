#include "zetakit/contour.hpp"

#include "zetakit/oracles.hpp"

#include <array>
#include <cmath>

namespace zetakit::contour {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 15-point Kronrod nodes on [0, 1] (symmetric) and the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  cplx value;
  double err;
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = f(mid);
  cplx kron = fc * kWgk[7];
  cplx gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx pair = f(mid - dx) + f(mid + dx);
    kron += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {kron * half, std::abs((kron - gauss) * half)};
}

struct Quadrature {
  cplx value = 0.0;
  double err = 0.0;
  long panels = 0;
};

template <class F>
void adaptive(const F& f, double a, double b, double tol, int depth, Quadrature& out) {
  const Panel p = gk15(f, a, b);
  if (p.err <= tol || depth == 0) {
    if (p.err > tol && p.err > 1e3 * tol)
      throw QuadratureFailure("contour panel [" + std::to_string(a) + ", " + std::to_string(b) +
                              "] did not converge");
    out.value += p.value;
    out.err += p.err;
    ++out.panels;
    return;
  }
  const double m = 0.5 * (a + b);
  adaptive(f, a, m, 0.5 * tol, depth - 1, out);
  adaptive(f, m, b, 0.5 * tol, depth - 1, out);
}

// 20-point Gauss-Legendre on [-1, 1] in double.
struct GLDouble {
  std::vector<double> x, w;
};

const GLDouble& gl20() {
  static const GLDouble rule = [] {
    GLDouble r;
    mp::PrecisionScope scope(64);
    const auto& g = gauss_legendre(20);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      r.x.push_back(g.nodes[i].to_double());
      r.w.push_back(g.weights[i].to_double());
    }
    return r;
  }();
  return rule;
}

cplx li_direct(cplx s, double x, double power_log) {
  // sum_{n>=2} x^n n^{-s} / ln^power_log n
  cplx sum = 0.0;
  double xn = x;
  for (long n = 2; n < 100000; ++n) {
    xn *= x;
    const double ln = std::log(static_cast<double>(n));
    const cplx term = xn * std::exp(-s * ln) / std::pow(ln, power_log);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum)) && std::abs(xn) * std::pow(n, -s.real()) < 1e-18)
      break;
  }
  return sum;
}

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// 2 Re int_T^inf (c+it)^{-k} dt
double power_tail(double c, int k, double T) {
  if (k == 1) return 2.0 * std::atan(c / T);
  const cplx sT(c, T);
  return 2.0 * (std::pow(sT, 1 - k) / cplx(0.0, k - 1.0)).real();
}

// leading Dirichlet coefficient a_1
double leading(const LineIntegralSpec& spec) { return spec.kind == IntegrandKind::Polylog ? spec.x : 1.0; }

// D(s) = F(s) - a_1 = sum_{n>=2} a_n n^{-s}
cplx dirichlet_rest(const LineIntegralSpec& spec, cplx s) {
  if (spec.kind == IntegrandKind::Polylog) return li_direct(s, spec.x, 0.0);
  return numerator(spec, s) - 1.0;
}

// P_k(s) = sum_{n>=2} a_n n^{-s} / ln^k n = int_0^inf u^{k-1}/(k-1)! D(s+u) du
cplx dirichlet_primitive(const LineIntegralSpec& spec, cplx s, int k, long& evals) {
  if (spec.kind == IntegrandKind::Polylog) return li_direct(s, spec.x, k);
  const auto& g = gl20();
  cplx sum = 0.0;
  double lo = 0.0;
  for (double hi = 0.25; hi <= 128.0; hi *= 2.0) {
    const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const double u = mid + half * g.x[i];
      const double weight = k == 1 ? 1.0 : std::pow(u, k - 1) / std::tgamma(k);
      sum += half * g.w[i] * weight * dirichlet_rest(spec, s + u);
      ++evals;
    }
    lo = hi;
  }
  return sum;
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

const char* to_string(IntegrandKind kind) noexcept {
  switch (kind) {
    case IntegrandKind::Zeta: return "zeta";
    case IntegrandKind::Eta: return "eta";
    case IntegrandKind::Polylog: return "polylog";
    case IntegrandKind::ZetaPower: return "zeta_power";
  }
  return "?";
}

IntegrandKind parse_kind(const std::string& name) {
  if (name == "zeta") return IntegrandKind::Zeta;
  if (name == "eta") return IntegrandKind::Eta;
  if (name == "polylog") return IntegrandKind::Polylog;
  if (name == "zeta_power") return IntegrandKind::ZetaPower;
  throw DomainError("unknown integrand kind '" + name + "'");
}

cplx AnalyticPart::operator()(cplx s) const {
  cplx v = coef / std::pow(s, p);
  if (polar) v /= s - 1.0;
  return v;
}

double AnalyticPart::tail(double c, double T) const {
  if (!polar) return coef * power_tail(c, p, T);
  // 1/((s-1)s^p) = 1/(s-1) - sum_{k=1}^p 1/s^k
  double t = 2.0 * std::atan((c - 1.0) / T);
  for (int k = 1; k <= p; ++k) t -= power_tail(c, k, T);
  return coef * t;
}

void LineIntegralSpec::validate() const {
  check_finite(c, "c");
  check_finite(T, "T");
  if (!(T >= 50.0)) throw DomainError("contour height T must be >= 50");
  if (!(quad_tol > 0.0)) throw DomainError("quad_tol must be positive");
  if (p < 1) throw DomainError("power p must be >= 1");
  if (kind != IntegrandKind::ZetaPower && p != 1) throw DomainError("p != 1 requires the zeta_power kind");
  switch (kind) {
    case IntegrandKind::Zeta:
    case IntegrandKind::ZetaPower:
      if (c == 0.0) throw DomainError("zeta integrand needs c != 0");
      if (c == 1.0) throw DomainError("zeta integrand needs c != 1");
      if (c < 0.0) throw TailBoundUnavailable("zeta integrand: no tail expansion for c < 0");
      break;
    case IntegrandKind::Eta:
      if (c < 0.0) throw TailBoundUnavailable("eta integrand: no tail expansion for c < 0");
      break;
    case IntegrandKind::Polylog:
      check_finite(x, "x");
      if (!(std::fabs(x) < 1.0) || x == 0.0) throw DomainError("polylog integrand needs 0 < |x| < 1");
      if (c == 0.0) throw DomainError("polylog integrand needs c != 0");
      break;
  }
}

LineIntegralSpec make_spec(IntegrandKind kind, double c, double T, double x, int p) {
  LineIntegralSpec spec;
  spec.kind = kind;
  spec.c = c;
  spec.T = T;
  spec.x = x;
  spec.p = p;
  spec.validate();
  const double one_over_s = p == 1 ? kPi * sign(c) : 0.0;
  switch (kind) {
    case IntegrandKind::Zeta:
    case IntegrandKind::ZetaPower:
      spec.analytic_parts.push_back({"1/s^p", 1.0, p, false, one_over_s});
      // 1/((s-1)s^p) = 1/(s-1) - sum 1/s^k; only the k = 1 term survives over the full line
      if (c < 1.0) spec.analytic_parts.push_back({"1/((s-1)s^p)", 1.0, p, true, kPi * sign(c - 1.0) - kPi * sign(c)});
      break;
    case IntegrandKind::Eta:
      // at c = 0 the pole eta(0)/s is taken as a principal value
      if (c == 0.0)
        spec.analytic_parts.push_back({"eta(0)/s", 0.5, 1, false, 0.0});
      else
        spec.analytic_parts.push_back({"1/s", 1.0, 1, false, one_over_s});
      break;
    case IntegrandKind::Polylog:
      spec.analytic_parts.push_back({"x/s", x, 1, false, x * one_over_s});
      break;
  }
  return spec;
}

double expected_value(IntegrandKind kind, double c, std::optional<double> x) {
  check_finite(c, "c");
  switch (kind) {
    case IntegrandKind::Zeta:
      if (c > 0.0 && c < 1.0) return -kPi;
      if (c > 1.0) return kPi;
      throw DomainError("I(c) is stated for 0 < c < 1 and c > 1");
    case IntegrandKind::Eta:
      if (c == 0.0) return 2.0 * kPi;
      if (c > 0.0) return kPi;
      throw DomainError("I_a(c) is stated for c >= 0");
    case IntegrandKind::Polylog: {
      if (!x || !(std::fabs(*x) < 1.0)) throw DomainError("I_L needs real |x| < 1");
      if (c > 0.0) return kPi * *x;
      if (c < 0.0) return -kPi * *x * (1.0 + *x) / (1.0 - *x);
      throw DomainError("I_L(c) is stated for c != 0");
    }
    case IntegrandKind::ZetaPower:
      throw DomainError("no closed form is stated for the zeta_power kind");
  }
  throw DomainError("unknown kind");
}

cplx numerator(const LineIntegralSpec& spec, cplx s) {
  switch (spec.kind) {
    case IntegrandKind::Zeta:
    case IntegrandKind::ZetaPower:
      return oracle::zeta_em_double(s);
    case IntegrandKind::Eta:
      return (1.0 - std::exp((1.0 - s) * std::log(2.0))) * oracle::zeta_em_double(s);
    case IntegrandKind::Polylog:
      return spec.x + li_direct(s, spec.x, 0.0);
  }
  return 0.0;
}

ApproxValue evaluate(const LineIntegralSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  (void)ctx;
  const double c = spec.c;
  const double T = spec.T;
  long evals = 0;

  double full_line = 0.0;
  for (const auto& part : spec.analytic_parts) full_line += part.full_line;

  auto remainder = [&](double t) {
    ++evals;
    const cplx s(c, t);
    cplx v = numerator(spec, s) / std::pow(s, spec.p);
    for (const auto& part : spec.analytic_parts) v -= part(s);
    return v;
  };

  // panels of width <= pi/2, error budget spread uniformly over [-T, T]
  Quadrature quad;
  const long n_panels = static_cast<long>(std::ceil(T / (kPi / 2.0)));
  const double width = T / static_cast<double>(n_panels);
  const double panel_tol = spec.quad_tol * width / (2.0 * T);
  for (long i = 0; i < n_panels; ++i) {
    adaptive(remainder, i * width, (i + 1) * width, panel_tol, 12, quad);
    adaptive(remainder, -(i + 1) * width, -i * width, panel_tol, 12, quad);
  }

  // Tail beyond |t| = T.  Remainder = D(s)/s^p + a_1/s^p - sum parts.  The
  // Dirichlet part is integrated by parts against P_k(s) = sum a_n n^{-s}/ln^k n:
  // int_T^inf D/s^p dt = sum_k (-1)^k i (p)_{k-1} P_k(s_T) s_T^{1-p-k}.
  const cplx sT(c, T);
  const int p = spec.p;
  const cplx I(0.0, 1.0);
  std::array<cplx, 3> terms;
  double poch = 1.0;
  for (int k = 1; k <= 3; ++k) {
    const double sgn = k % 2 == 0 ? 1.0 : -1.0;
    terms[k - 1] = sgn * I * poch * dirichlet_primitive(spec, sT, k, evals) / std::pow(sT, p + k - 1);
    poch *= p + k - 1;
  }
  double tail = 2.0 * (terms[0] + terms[1] + terms[2]).real();
  tail += leading(spec) * power_tail(c, p, T);
  for (const auto& part : spec.analytic_parts) tail -= part.tail(c, T);
  // the expansion is asymptotic; the last retained term bounds the rest
  const double tail_err = 2.0 * std::abs(terms[2]) + 1e-12;

  ApproxValue out;
  out.value = Complex(Real(full_line + quad.value.real() + tail), Real(quad.value.imag()));
  out.err = quad.err + tail_err + 1e-13 * (1.0 + std::abs(full_line));
  out.terms_used = evals;
  out.peak_magnitude = std::abs(full_line);
  out.parts = {{"panels", quad.panels}, {"evaluations", evals}};
  return out;
}

ApproxValue evaluate_power(double c, int p, double T, const PrecisionContext& ctx) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("evaluate_power needs 0 < c < 1");
  if (p < 1) throw DomainError("evaluate_power needs p >= 1");
  return evaluate(make_spec(IntegrandKind::ZetaPower, c, T, 0.0, p), ctx);
}

}  // namespace zetakit::contour
