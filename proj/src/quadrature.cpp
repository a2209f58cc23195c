#include "dblab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "dblab/error.hpp"
#include "dblab/fit.hpp"

namespace dblab::quad {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

GaussRule make_gauss_legendre(std::size_t n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

PanelResult gk15(const RealToComplex& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<cplx, 15> fv;
  PanelResult out;
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }
  out.evaluations = 15;

  cplx kron = kWgk[7] * fv[7];
  cplx gauss = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    const cplx pair = fv[j] + fv[14 - j];
    kron += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const cplx mean = 0.5 * kron;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));

  for (const auto& v : fv) out.max_abs = std::max(out.max_abs, std::abs(v));

  out.value = kron * half;
  resasc *= std::abs(half);
  resabs *= std::abs(half);
  double err = std::abs((kron - gauss) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(50.0 * kEps * resabs, err);
  out.error = err;
  out.abs_integral = resabs;
  return out;
}

PanelResult adaptive_gk15(const RealToComplex& f, double a, double b, double tol_density,
                          int max_depth) {
  struct Pending {
    double a, b;
    int depth;
  };
  PanelResult total;
  // Depth-first with the left half processed first keeps the summation order fixed.
  std::vector<Pending> stack{{a, b, 0}};
  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    const PanelResult r = gk15(f, p.a, p.b);
    total.evaluations += r.evaluations;
    total.max_abs = std::max(total.max_abs, r.max_abs);
    const double allowed = tol_density * std::abs(p.b - p.a);
    const bool at_roundoff = r.error <= 100.0 * kEps * r.abs_integral;
    if (r.error <= allowed || at_roundoff || p.depth >= max_depth || !std::isfinite(r.error)) {
      total.value += r.value;
      total.error += r.error;
      total.abs_integral += r.abs_integral;
      continue;
    }
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back({mid, p.b, p.depth + 1});
    stack.push_back({p.a, mid, p.depth + 1});
  }
  return total;
}

PanelResult integrate_panels(const RealToComplex& f, double a, double b, double panel_width,
                             double tol_density, int max_depth) {
  PanelResult total;
  if (b <= a) return total;
  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / panel_width));
  const double h = (b - a) / static_cast<double>(std::max<std::size_t>(panels, 1));
  for (std::size_t i = 0; i < std::max<std::size_t>(panels, 1); ++i) {
    const double lo = a + h * static_cast<double>(i);
    const double hi = (i + 1 == panels) ? b : lo + h;
    const PanelResult r = adaptive_gk15(f, lo, hi, tol_density, max_depth);
    total.value += r.value;
    total.error += r.error;
    total.abs_integral += r.abs_integral;
    total.max_abs = std::max(total.max_abs, r.max_abs);
    total.evaluations += r.evaluations;
  }
  return total;
}

LineIntegral integrate_real_line(const RealToComplex& f, const LineOptions& opts) {
  LineIntegral out;
  const double t0 = opts.initial_half_width;

  // Mass estimate for the panel tolerance.
  double mass = 0.0;
  {
    const auto panels = static_cast<std::size_t>(std::ceil(2.0 * t0 / opts.panel_width));
    const double h = 2.0 * t0 / static_cast<double>(panels);
    for (std::size_t i = 0; i < panels; ++i) {
      const PanelResult r = gk15(
          [&](double t) { return cplx(std::abs(f(t)), 0.0); }, -t0 + h * i, -t0 + h * (i + 1));
      mass += r.value.real();
      out.evaluations += r.evaluations;
    }
  }
  const double tol_density =
      std::max(opts.unit_tol * mass / (2.0 * t0), std::numeric_limits<double>::min());

  const PanelResult core = integrate_panels(f, -0.5 * t0, 0.5 * t0, opts.panel_width, tol_density, opts.max_depth);
  const PanelResult wing_r = integrate_panels(f, 0.5 * t0, t0, opts.panel_width, tol_density, opts.max_depth);
  const PanelResult wing_l = integrate_panels(f, -t0, -0.5 * t0, opts.panel_width, tol_density, opts.max_depth);
  cplx integral = core.value + wing_l.value + wing_r.value;
  double quad_error = core.error + wing_l.error + wing_r.error;
  out.evaluations += core.evaluations + wing_l.evaluations + wing_r.evaluations;

  // Envelope: integral of |f| over each octave, which behaves like T^(1-p)
  // when |f| ~ t^-p on average. Narrow peaks that do not decay in height but
  // shrink in width are then classified by their actual mass.
  std::vector<double> log_t{std::log(t0)};
  std::vector<double> log_env{std::log(wing_l.abs_integral + wing_r.abs_integral)};

  double half_width = t0;
  cplx previous_estimate = integral;
  int consecutive_ok = 0;
  for (int octave = 1;; ++octave) {
    if (2.0 * half_width > opts.max_half_width) break;
    const PanelResult right =
        integrate_panels(f, half_width, 2.0 * half_width, opts.panel_width, tol_density, opts.max_depth);
    const PanelResult left =
        integrate_panels(f, -2.0 * half_width, -half_width, opts.panel_width, tol_density, opts.max_depth);
    const cplx delta = left.value + right.value;
    integral += delta;
    quad_error += left.error + right.error;
    out.evaluations += left.evaluations + right.evaluations;
    half_width *= 2.0;

    log_t.push_back(std::log(half_width));
    log_env.push_back(std::log(left.abs_integral + right.abs_integral));

    // Decay exponent from the last (up to) four octaves.
    const std::size_t k = std::min<std::size_t>(4, log_t.size());
    double p = 50.0;
    bool vanished = false;
    for (std::size_t i = log_env.size() - k; i < log_env.size(); ++i)
      if (!std::isfinite(log_env[i])) vanished = true;
    if (!vanished) {
      const LineFit fit = fit_line(std::span(log_t).last(k), std::span(log_env).last(k));
      p = 1.0 - fit.slope;
    }
    out.decay_exponent = p;
    out.octaves = octave;
    out.cutoff = half_width;

    if (octave >= opts.min_octaves && p < opts.decay_threshold)
      throw Error(ErrorKind::NonConvergentTail,
                  "integrand envelope decays like t^-" + std::to_string(p) + " at t = " +
                      std::to_string(half_width));

    const double rho = std::pow(2.0, 1.0 - std::max(p, opts.decay_threshold));
    const cplx estimate = integral + delta * (rho / (1.0 - rho));
    const double change = std::abs(estimate - previous_estimate);
    previous_estimate = estimate;
    out.value = estimate;
    out.error = change + quad_error;

    if (octave >= opts.min_octaves &&
        change <= std::max(opts.abs_tol, opts.rel_tol * std::max(std::abs(estimate), mass))) {
      if (++consecutive_ok >= 2) {
        out.converged = true;
        break;
      }
    } else {
      consecutive_ok = 0;
    }
  }
  if (out.octaves == 0) {
    out.value = integral;
    out.error = quad_error;
    out.cutoff = half_width;
  }
  return out;
}

}  // namespace dblab::quad
