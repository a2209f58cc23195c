#include "dblab/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dblab/error.hpp"
#include "dblab/fit.hpp"
#include "dblab/parallel.hpp"

namespace dblab {

using FE = FunctionExpr;

namespace {

FE linear_factor(cplx root) { return FE::polynomial({-root, 1.0}); }

std::vector<double> geometric(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1));
  return out;
}

bool pole_hit(const FE& f, cplx z, cplx& out) {
  try {
    out = evaluate(f, z).value;
    return false;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PoleHit) throw;
    return true;
  }
}

// lim y q(iy), extrapolated from the last two samples; nullopt when the
// samples have not settled.
std::optional<double> limit_yq(const FE& q, double y_min, double y_max) {
  const std::vector<double> ys = geometric(y_min, y_max, 16);
  std::vector<cplx> w;
  for (double y : ys) w.push_back(y * evaluate(q, cplx(0.0, y)).value);
  const cplx w1 = w[w.size() - 2], w2 = w.back();
  if (!std::isfinite(std::abs(w2)) || std::abs(w2 - w1) > 1e-3 * (1.0 + std::abs(w2))) return std::nullopt;
  const double y1 = ys[ys.size() - 2], y2 = ys.back();
  return ((y2 * w2 - y1 * w1) / (y2 - y1)).real();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

// --- inner functions ----------------------------------------------------------

InnerFunction InnerFunction::ratio(const FE& E, double alpha) {
  InnerFunction t;
  t.kind_ = Kind::Ratio;
  t.expr_ = std::exp(cplx(0.0, -2.0 * alpha)) * FE::quotient(sharp(E), E);
  t.E_ = E;
  t.alpha_ = alpha;
  t.label_ = "ratio";
  return t;
}

InnerFunction InnerFunction::exponential(double a) {
  if (!(a >= 0.0)) throw Error(ErrorKind::InvalidArgument, "e^{iaz} is inner only for a >= 0");
  InnerFunction t;
  t.kind_ = Kind::Exponential;
  t.expr_ = FE::exp(cplx(0.0, a));
  t.label_ = "exp";
  return t;
}

InnerFunction InnerFunction::blaschke(std::vector<cplx> zeros, cplx gamma) {
  if (std::abs(std::abs(gamma) - 1.0) > 1e-12) throw Error(ErrorKind::InvalidArgument, "Blaschke constant must be unimodular");
  std::vector<FE> factors{FE::constant(gamma)};
  for (const cplx& a : zeros) {
    if (!(a.imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, "Blaschke zeros must lie in the upper half-plane");
    factors.push_back(FE::quotient(linear_factor(a), linear_factor(std::conj(a))));
  }
  InnerFunction t;
  t.kind_ = Kind::Blaschke;
  t.expr_ = FE::product(std::move(factors));
  t.zeros_ = std::move(zeros);
  t.gamma_ = gamma;
  t.label_ = "blaschke";
  return t;
}

InnerFunction InnerFunction::constant(cplx c) {
  if (std::abs(c) > 1.0 + 1e-15) throw Error(ErrorKind::InvalidArgument, "constant exceeds 1 in modulus");
  InnerFunction t;
  t.kind_ = Kind::Constant;
  t.expr_ = FE::constant(c);
  t.gamma_ = c;
  t.label_ = "constant";
  return t;
}

InnerFunction InnerFunction::general(const FE& theta, std::string label) {
  InnerFunction t;
  t.kind_ = Kind::General;
  t.expr_ = theta;
  t.label_ = std::move(label);
  return t;
}

cplx InnerFunction::operator()(cplx z) const { return evaluate(expr_, z).value; }

InnerCheck check_inner(const InnerFunction& theta, double boundary_tol) {
  InnerCheck c;
  for (double y : {0.05, 0.3, 1.0, 3.0, 10.0})
    for (int k = 0; k <= 16; ++k) {
      cplx v;
      if (!pole_hit(theta.expr(), cplx(-20.0 + 2.5 * k, y), v)) c.max_interior = std::max(c.max_interior, std::abs(v));
    }
  using K = InnerFunction::Kind;
  c.boundary_checked = theta.kind() == K::Ratio || theta.kind() == K::Exponential || theta.kind() == K::Blaschke;
  if (c.boundary_checked)
    for (int k = 0; k <= 200; ++k) {
      cplx v;
      if (!pole_hit(theta.expr(), cplx(-50.0 + 0.5 * k, 0.0), v))
        c.boundary_deviation = std::max(c.boundary_deviation, std::abs(std::abs(v) - 1.0));
    }
  c.ok = c.max_interior < 1.0 && c.boundary_deviation <= boundary_tol;
  return c;
}

// --- Cayley transforms ------------------------------------------------------------

std::string to_string(CayleyVariant v) { return v == CayleyVariant::Plus ? "plus" : "i-minus"; }

CayleyVariant parse_cayley_variant(const std::string& s) {
  if (s == "plus") return CayleyVariant::Plus;
  if (s == "i-minus") return CayleyVariant::IMinus;
  throw Error(ErrorKind::InvalidArgument, "unknown Cayley variant '" + s + "' (plus | i-minus)");
}

FE cayley_q_from_theta(const InnerFunction& theta, CayleyVariant variant) {
  const cplx pole = variant == CayleyVariant::Plus ? 1.0 : -1.0;
  bool degenerate = true;
  for (const cplx z : {cplx(0.3, 0.7), cplx(-2.0, 1.5), cplx(5.0, 0.2), cplx(0.0, 4.0)}) {
    cplx v;
    if (pole_hit(theta.expr(), z, v) || std::abs(v - pole) > 1e-14) degenerate = false;
  }
  if (degenerate)
    throw Error(ErrorKind::DegenerateInner, "Theta is identically " + std::string(variant == CayleyVariant::Plus ? "1" : "-1"));

  const FE one = FE::constant(1.0);
  if (theta.kind() == InnerFunction::Kind::Constant) {
    const cplx c = theta.gamma();
    return FE::constant(variant == CayleyVariant::Plus ? (1.0 + c) / (1.0 - c) : kI * (1.0 - c) / (1.0 + c));
  }
  if (variant == CayleyVariant::Plus) return (one + theta.expr()) / (one - theta.expr());
  return kI * ((one - theta.expr()) / (one + theta.expr()));
}

FE theta_from_q(const FE& q, CayleyVariant variant) {
  const FE one = FE::constant(1.0);
  if (variant == CayleyVariant::Plus) return (q - one) / (q + one);
  const FE i = FE::constant(kI);
  return (i - q) / (i + q);
}

// --- Herglotz data ------------------------------------------------------------------

HerglotzData herglotz_extract(const FE& q, const HerglotzOptions& opts) {
  if (opts.grid_points < 2 || !(opts.half_width > 0.0) || !(opts.delta > 0.0) || opts.mass_deltas.size() < 2 ||
      !(opts.far_y_min > 0.0) || !(opts.far_y_max > opts.far_y_min))
    throw Error(ErrorKind::InvalidArgument, "invalid Herglotz grid configuration");

  for (double y : {1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0})
    for (int k = 0; k <= 40; ++k) {
      const cplx z(-10.0 + 0.5 * k, y);
      cplx v;
      if (pole_hit(q, z, v)) continue;
      if (v.real() < -1e-9 * (1.0 + std::abs(v)))
        throw Error(ErrorKind::NegativeRealPart, "Re q(" + fmt(z.real()) + " + " + fmt(y) + "i) = " + fmt(v.real()));
    }

  HerglotzData d;
  const std::vector<double> ys = geometric(opts.far_y_min, opts.far_y_max, 16);
  std::vector<double> re;
  for (double y : ys) re.push_back(evaluate(q, cplx(0.0, y)).value.real());
  d.p = std::max(0.0, fit_line(ys, re).slope);
  d.im_at_i = evaluate(q, kI).value.imag();

  const double step = 2.0 * opts.half_width / (opts.grid_points - 1);
  std::vector<double> locations;
  for (int k = 0; k < opts.grid_points; ++k) {
    const double t = -opts.half_width + step * k;
    locations.push_back(t);
    cplx v;
    if (!pole_hit(q, cplx(t, opts.delta), v)) d.density.push_back({t, v.real()});
  }
  for (double t : opts.mass_candidates)
    if (std::none_of(locations.begin(), locations.end(), [&](double s) { return std::abs(s - t) < 1e-9; }))
      locations.push_back(t);

  for (double t : locations) {
    double lo = kInf, hi = 0.0, last = 0.0;
    bool hit = false;
    for (double delta : opts.mass_deltas) {
      cplx v;
      if (pole_hit(q, cplx(t, delta), v)) {
        hit = true;
        break;
      }
      last = delta * std::abs(v);
      lo = std::min(lo, last);
      hi = std::max(hi, last);
    }
    if (!hit && lo > 1e-12 && (hi - lo) < opts.mass_stability * hi) d.masses.push_back({t, kPi * last});
  }
  std::sort(d.masses.begin(), d.masses.end(), [](const PointMass& a, const PointMass& b) { return a.location < b.location; });

  d.class_c1 = d.p <= opts.class_tol;
  if (const auto l = limit_yq(q, opts.far_y_min, opts.far_y_max); l && d.class_c1) {
    d.limit_yq = *l;
    d.total_mass = kPi * *l;
    d.class_c0 = true;
  }
  return d;
}

// --- weak-type superlevel sets ------------------------------------------------------

std::string to_string(SuperlevelMeasure m) { return m == SuperlevelMeasure::Lebesgue ? "lebesgue" : "poisson"; }

SuperlevelMeasure parse_superlevel_measure(const std::string& s) {
  if (s == "lebesgue") return SuperlevelMeasure::Lebesgue;
  if (s == "poisson") return SuperlevelMeasure::Poisson;
  throw Error(ErrorKind::InvalidArgument, "unknown measure '" + s + "' (lebesgue | poisson)");
}

std::string WeakTypeReport::csv() const {
  std::ostringstream os;
  os << "a,measure,bound\n";
  for (const WeakTypeRow& r : rows) os << fmt(r.a) << ',' << fmt(r.measure) << ',' << fmt(r.bound) << '\n';
  return os.str();
}

namespace {

struct SideEdge {
  double x = 1.0;        // |x| beyond which the superlevel set is certified empty (or full)
  bool unbounded = false;
};

// Far-field behaviour of g on one side, from probes at s*2^k.
SideEdge side_edge(const std::vector<double>& probes, double slope, double env_const, double a,
                   const std::optional<double>& user_env) {
  const int top = static_cast<int>(probes.size()) - 1;
  SideEdge e;
  if (probes[top] > a) {
    if (slope < -1e-3)
      throw Error(ErrorKind::EnvelopeNotDecaying, "decaying envelope still exceeds a=" + fmt(a) + " at the last probe");
    int k0 = top;
    while (k0 > 0 && probes[k0 - 1] > a) --k0;
    e.x = std::ldexp(1.0, k0);
    e.unbounded = true;
    return e;
  }
  int k1 = top;
  while (k1 >= 0 && probes[k1] <= a) --k1;
  e.x = std::ldexp(1.0, k1 + 1);
  if (slope < -1e-3) e.x = std::max(e.x, std::pow(env_const / a, -1.0 / slope));
  if (user_env) e.x = std::max(e.x, *user_env / a);
  e.x = std::min(e.x, std::ldexp(1.0, top));
  return e;
}

}  // namespace

WeakTypeReport weak_type_test(const FE& q, double y0, std::vector<double> a_grid, SuperlevelMeasure measure,
                              const WeakTypeOptions& opts) {
  if (!(y0 > 0.0)) throw Error(ErrorKind::InvalidArgument, "y0 must be positive");
  if (a_grid.empty() || std::any_of(a_grid.begin(), a_grid.end(), [](double a) { return !(a > 0.0); }))
    throw Error(ErrorKind::InvalidArgument, "a-grid must be nonempty and positive");
  std::sort(a_grid.begin(), a_grid.end());

  WeakTypeReport rep;
  rep.y0 = y0;
  rep.measure = measure;
  rep.constant = opts.constant;
  if (const auto l = limit_yq(q, defaults::kHerglotzFarYMin, defaults::kHerglotzFarYMax)) rep.limit_yq = *l;

  auto g = [&](double x) { return std::abs(evaluate(q, cplx(x, y0)).value); };

  const int top = opts.probe_octaves;
  std::vector<double> probes[2];
  double slope[2], env[2];
  for (int s = 0; s < 2; ++s) {
    std::vector<double> lx, ly;
    for (int k = 0; k <= top; ++k) {
      const double x = std::ldexp(1.0, k);
      const double v = g(s == 0 ? -x : x);
      probes[s].push_back(v);
      if (k >= top - 10 && v > 0.0) {
        lx.push_back(std::log(x));
        ly.push_back(std::log(v));
      }
    }
    if (lx.size() >= 2) {
      const LineFit f = fit_line(lx, ly);
      slope[s] = f.slope;
      // constant K with v <= K x^slope at every fitted probe
      double k = 0.0;
      for (std::size_t i = 0; i < lx.size(); ++i) k = std::max(k, ly[i] - f.slope * lx[i]);
      env[s] = std::exp(k);
    } else {
      slope[s] = -kInf;
      env[s] = 0.0;
    }
  }

  std::vector<SideEdge> edges[2];
  double reach[2] = {1.0, 1.0};
  for (double a : a_grid)
    for (int s = 0; s < 2; ++s) {
      const SideEdge e = side_edge(probes[s], slope[s], env[s], a, opts.envelope_constant);
      if (e.unbounded && measure == SuperlevelMeasure::Lebesgue)
        throw Error(ErrorKind::EnvelopeNotDecaying,
                    "superlevel set for a=" + fmt(a) + " is unbounded; its Lebesgue measure cannot be certified");
      edges[s].push_back(e);
      reach[s] = std::max(reach[s], e.x);
    }

  // Scan grid: uniform near the origin, geometric beyond.
  const double h = y0 / opts.steps_per_y0;
  const double dense = opts.dense_half_width * y0;
  for (int s = 0; s < 2; ++s)
    for (const SideEdge& e : edges[s])
      if (e.unbounded) reach[s] = std::max({reach[s], dense, 2 * e.x});
  std::vector<double> xs;
  auto add_side = [&](double sign, double extent) {
    std::vector<double> pts;
    double x = h;
    while (x < std::min(dense, extent)) {
      pts.push_back(x);
      x += h;
    }
    const double ratio = 1.0 + 1.0 / opts.steps_per_y0;
    while (x < extent) {
      pts.push_back(x);
      x *= ratio;
    }
    pts.push_back(extent);
    for (double p : pts) xs.push_back(sign * p);
  };
  add_side(-1.0, reach[0]);
  xs.push_back(0.0);
  add_side(1.0, reach[1]);
  std::sort(xs.begin(), xs.end());
  const std::vector<double> gs = parallel_map<double>(xs.size(), [&](std::size_t i) { return g(xs[i]); });

  auto mass = [&](double lo, double hi) {
    return measure == SuperlevelMeasure::Lebesgue ? hi - lo : std::atan(hi) - std::atan(lo);
  };
  auto crossing = [&](double lo, double hi, double a) {
    // g(lo) and g(hi) lie on opposite sides of a
    const bool lo_above = g(lo) > a;
    while (hi - lo > opts.bisection_tol * std::max(1.0, std::abs(lo))) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if ((g(mid) > a) == lo_above) lo = mid;
      else hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  for (std::size_t ia = 0; ia < a_grid.size(); ++ia) {
    const double a = a_grid[ia];
    double total = 0.0;
    bool inside = gs[0] > a;
    double start = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const bool above = gs[i] > a;
      if (above == inside) continue;
      const double x = crossing(xs[i - 1], xs[i], a);
      if (above) start = x;
      else total += mass(start, x);
      inside = above;
    }
    if (inside) total += mass(start, xs.back());
    // Unresolved Poisson tail, weighted by the share of the outermost scanned octave above a.
    auto share = [&](int side) {
      const double sign = side == 0 ? -1.0 : 1.0;
      int in = 0, n = 0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (sign * xs[i] >= reach[side] / 2 && sign * xs[i] <= reach[side]) {
          ++n;
          in += gs[i] > a;
        }
      return n ? static_cast<double>(in) / n : 1.0;
    };
    if (edges[0][ia].unbounded) total += share(0) * (std::atan(xs.front()) + kPi / 2);
    if (edges[1][ia].unbounded) total += share(1) * (kPi / 2 - std::atan(xs.back()));

    WeakTypeRow row;
    row.a = a;
    row.measure = total;
    row.product = a * total;
    if (measure == SuperlevelMeasure::Lebesgue) {
      row.bound = opts.constant * rep.limit_yq;
      row.holds = row.product <= row.bound * (1.0 + 1e-12);
    }
    rep.all_hold = rep.all_hold && row.holds;
    rep.rows.push_back(row);
  }

  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].measure > rep.rows[i - 1].measure * (1.0 + 1e-12) + 1e-15) rep.monotone = false;

  const std::size_t half = rep.rows.size() / 2;
  bool decreasing = true;
  for (std::size_t i = half + 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].product > rep.rows[i - 1].product * (1.0 + 1e-9) + 1e-15) decreasing = false;
  const double first = rep.rows[half].product, last = rep.rows.back().product;
  rep.tail_to_zero = decreasing && (last <= 1e-12 || last <= 0.5 * first);
  return rep;
}

// --- model space K_Theta ------------------------------------------------------

FE clark_kernel(const InnerFunction& theta, cplx z) {
  if (!(z.imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, "the kernel point must lie in the upper half-plane");
  const cplx c = std::conj(theta(z));
  const FE num = FE::constant(1.0) - c * theta.expr();
  return cplx(0.0, 1.0 / (2.0 * kPi)) * FE::quotient(num, linear_factor(std::conj(z)));
}

ClarkMeasure clark_measure(const InnerFunction& b) {
  if (b.kind() != InnerFunction::Kind::Blaschke)
    throw Error(ErrorKind::InvalidArgument, "Clark measures are computed for finite Blaschke products only");
  const std::vector<cplx>& zs = b.zeros();
  const double g0 = std::arg(b.gamma());
  auto phase = [&](double t) {
    double s = g0;
    for (const cplx& a : zs) s += 2.0 * std::atan2(-a.imag(), t - a.real());
    return s;
  };
  auto dphase = [&](double t) {
    double s = 0.0;
    for (const cplx& a : zs) s += 2.0 * a.imag() / ((t - a.real()) * (t - a.real()) + a.imag() * a.imag());
    return s;
  };

  ClarkMeasure mu;
  const double n = static_cast<double>(zs.size());
  mu.mass_at_infinity = std::abs(std::remainder(g0, 2.0 * kPi)) < 1e-12;
  // phase runs over (g0 - 2 pi n, g0); Theta = 1 where it crosses a multiple of 2 pi
  const long m_lo = static_cast<long>(std::floor((g0 - 2.0 * kPi * n) / (2.0 * kPi))) + 1;
  for (long m = m_lo; 2.0 * kPi * m < g0 - 1e-12; ++m) {
    const double target = 2.0 * kPi * m;
    if (target <= g0 - 2.0 * kPi * n + 1e-12) continue;
    double lo = -1.0, hi = 1.0;
    while (phase(lo) >= target) lo *= 2.0;
    while (phase(hi) <= target) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      (phase(mid) < target ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    mu.masses.push_back({t, 2.0 * kPi / dphase(t)});
  }
  return mu;
}

cplx clark_reconstruct(const ClarkMeasure& mu, const InnerFunction& theta, const FE& f, cplx z) {
  cplx s = 0.0;
  for (const PointMass& m : mu.masses) s += evaluate(f, m.location).value * m.weight / (m.location - z);
  return (1.0 - theta(z)) / cplx(0.0, 2.0 * kPi) * s;
}

double clark_norm2(const ClarkMeasure& mu, const FE& f) {
  double s = 0.0;
  for (const PointMass& m : mu.masses) s += std::norm(evaluate(f, m.location).value) * m.weight;
  return s;
}

std::string A60Scan::csv() const {
  std::ostringstream os;
  os << "r,measure,ratio\n";
  for (const A60Row& r : rows) os << fmt(r.r) << ',' << fmt(r.measure) << ',' << fmt(r.ratio) << '\n';
  return os.str();
}

A60Scan theorem_a60_scan(const InnerFunction& theta, double y0, double c, const std::vector<double>& r_grid,
                         const std::optional<FE>& f, int samples_per_r) {
  if (!(y0 > 0.0)) throw Error(ErrorKind::InvalidArgument, "y0 must be positive");
  if (samples_per_r < 1) throw Error(ErrorKind::InvalidArgument, "samples per r must be positive");
  struct Cell {
    A60Row row;
    double min_one_plus = kInf;
  };
  const std::vector<Cell> cells = parallel_map<Cell>(r_grid.size(), [&](std::size_t i) {
    Cell cell;
    const double r = r_grid[i];
    std::size_t count = 0;
    for (int k = 0; k < samples_per_r; ++k) {
      const cplx z(r + (k + 0.5) * r / samples_per_r, y0);
      const cplx th = theta(z);
      if (std::abs(1.0 - th) <= c / std::abs(z)) ++count;
      cell.min_one_plus = std::min(cell.min_one_plus, std::abs(1.0 + th));
    }
    cell.row.r = r;
    cell.row.measure = r * static_cast<double>(count) / samples_per_r;
    cell.row.ratio = r > 0.0 ? cell.row.measure / r : 0.0;
    return cell;
  });

  A60Scan scan;
  for (const Cell& cell : cells) {
    scan.rows.push_back(cell.row);
    scan.min_abs_one_plus_theta = std::min(scan.min_abs_one_plus_theta, cell.min_one_plus);
  }
  if (f)
    for (double r : r_grid)
      for (double x : {r, 1.5 * r, 2.0 * r}) {
        const cplx z(x, y0);
        scan.residual.push_back({x, std::abs(evaluate(*f, z).value + 1.0 - theta(z)) * std::abs(z)});
      }
  return scan;
}

DecompositionExperiment decomposition_experiment(const ClarkMeasure& mu, const InnerFunction& theta, const FE& f,
                                                 double cutoff, const std::vector<cplx>& points) {
  DecompositionExperiment ex;
  ex.cutoff = cutoff;
  std::vector<PointMass> kept;
  std::vector<cplx> fv;
  for (const PointMass& m : mu.masses)
    if (std::abs(m.location) > cutoff) {
      if (m.location == 0.0) throw Error(ErrorKind::InvalidArgument, "a retained mass sits at t = 0");
      kept.push_back({m.location, m.weight / (2.0 * kPi)});
      fv.push_back(evaluate(f, m.location).value);
    }
  for (std::size_t j = 0; j < kept.size(); ++j) {
    ex.tail_integral += std::abs(fv[j]) / std::abs(kept[j].location) * kept[j].weight;
    ex.tail_mass += kept[j].weight;
  }
  for (const cplx& z : points) {
    cplx direct = 0.0, constant = 0.0, slope = 0.0;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const double t = kept[j].location, w = kept[j].weight;
      direct += fv[j] * w / (t - z);
      constant += fv[j] / t * w;
      slope += fv[j] / t * w / (t - z);
    }
    const cplx factor = (1.0 - theta(z)) / kI;
    DecompositionRow row{z, factor * direct, cplx{}, constant + z * slope};
    row.f_eps_split = factor * row.gamma_eps;
    ex.max_split_mismatch = std::max(ex.max_split_mismatch, std::abs(row.f_eps - row.f_eps_split) / (1.0 + std::abs(row.f_eps)));
    ex.rows.push_back(row);
  }
  return ex;
}

}  // namespace dblab
