#include "dblab/db_space.hpp"

#include <cmath>

#include "dblab/defaults.hpp"
#include "dblab/error.hpp"
#include "dblab/fit.hpp"
#include "dblab/parallel.hpp"

namespace dblab {

DbSpace DbSpace::from_E(FunctionExpr e, double order, double exp_type) {
  DbSpace s;
  s.E = e;
  s.E_sharp = sharp(e);
  s.A = cplx(0.5, 0.0) * (s.E + s.E_sharp);
  s.B = cplx(0.0, 0.5) * (s.E - s.E_sharp);
  s.declared_order = order;
  s.declared_exp_type = exp_type;
  if (e.kind() == FunctionExpr::Kind::CanonicalProduct)
    s.zeros = std::make_shared<const ZeroSequence>(*e.zeros());
  return s;
}

std::vector<cplx> standard_hb_grid() {
  std::vector<cplx> grid;
  grid.reserve(100);
  for (int i = 0; i < 10; ++i) {
    const double y = 0.1 * std::pow(100.0, i / 9.0);
    for (int j = 0; j < 10; ++j) grid.emplace_back(-10.0 + 20.0 * j / 9.0, y);
  }
  return grid;
}

HbReport hb_check(DbSpace& space, const std::vector<cplx>& grid) {
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
  for (const cplx& z : grid)
    if (!(z.imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid points must lie in the upper half-plane");
  struct Sample {
    double log_e, log_es;
  };
  const auto samples = parallel_map<Sample>(grid.size(), [&](std::size_t i) {
    return Sample{log_modulus(space.E, grid[i]), log_modulus(space.E_sharp, grid[i])};
  });
  HbReport r;
  r.points = grid.size();
  r.hermite_biehler = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = samples[i].log_e, b = samples[i].log_es;
    const double log_margin = a - b;
    const double margin = a == -kInf ? (b == -kInf ? 0.0 : -std::exp(b)) : std::exp(a) * -std::expm1(b - a);
    if (!(log_margin > 0.0)) r.hermite_biehler = false;
    if (margin < r.worst_margin) {
      r.worst_margin = margin;
      r.worst_point = grid[i];
    }
    r.worst_log_margin = std::min(r.worst_log_margin, log_margin);
  }
  space.hb_verified = r.hermite_biehler;
  return r;
}

cplx kernel(const DbSpace& space, cplx w, cplx z) {
  const cplx zeta = std::conj(w);
  const double switch_radius = defaults::kKernelSwitch * (1.0 + std::abs(z));
  if (std::abs(zeta - z) >= switch_radius) {
    const cplx num = evaluate(space.E, z).value * evaluate(space.E_sharp, zeta).value -
                     evaluate(space.E, zeta).value * evaluate(space.E_sharp, z).value;
    return num / (cplx(0.0, 2.0 * kPi) * (zeta - z));
  }
  // N(z) = E(z)E#(zeta) - E(zeta)E#(z) vanishes at zeta; K = -N(z)/(2 pi i (z - zeta)).
  const cplx e = evaluate(space.E, zeta).value;
  const cplx es = evaluate(space.E_sharp, zeta).value;
  const cplx e1 = derivative(space.E, zeta, 1).value;
  const cplx es1 = derivative(space.E_sharp, zeta, 1).value;
  const cplx e2 = derivative(space.E, zeta, 2).value;
  const cplx es2 = derivative(space.E_sharp, zeta, 2).value;
  const cplx n1 = e1 * es - e * es1;
  const cplx n2 = e2 * es - e * es2;
  return -(n1 + 0.5 * n2 * (z - zeta)) / cplx(0.0, 2.0 * kPi);
}

double log_nabla(const DbSpace& space, cplx z) {
  if (z.imag() < 0.0) throw Error(ErrorKind::InvalidArgument, "nabla needs Im z >= 0");
  const double y = z.imag();
  if (y < defaults::kKernelSwitch * (1.0 + std::abs(z))) {
    const double k = kernel(space, z, z).real();
    if (k < -defaults::kNablaNegativeSlack)
      throw Error(ErrorKind::NonHermiteBiehler, "negative kernel diagonal at a real point");
    return 0.5 * std::log(std::max(k, 0.0));
  }
  const double a = log_modulus(space.E, z);
  const double b = log_modulus(space.E, std::conj(z));
  if (a == -kInf) {
    if (b == -kInf) return -kInf;
    throw Error(ErrorKind::NonHermiteBiehler, "E vanishes in the upper half-plane");
  }
  const double rad = -std::expm1(2.0 * (b - a));
  // rad is the radicand divided by |E(z)|^2 / (4 pi y).
  const double radicand_scale = std::exp(2.0 * a) / (4.0 * kPi * y);
  if (rad < 0.0 && rad * (std::isfinite(radicand_scale) ? radicand_scale : 1.0) < -defaults::kNablaNegativeSlack)
    throw Error(ErrorKind::NonHermiteBiehler, "negative radicand in the nabla formula");
  if (rad <= 0.0) return -kInf;
  return 0.5 * (2.0 * a + std::log(rad) - std::log(4.0 * kPi * y));
}

double nabla(const DbSpace& space, cplx z) { return std::exp(log_nabla(space, z)); }

FunctionExpr kernel_function(const DbSpace& space, cplx w) {
  const cplx zeta = std::conj(w);
  const cplx es = evaluate(space.E_sharp, zeta).value;
  const cplx e = evaluate(space.E, zeta).value;
  const FunctionExpr num = es * space.E - e * space.E_sharp;
  const FunctionExpr den = FunctionExpr::polynomial({cplx(0.0, 2.0 * kPi) * zeta, cplx(0.0, -2.0 * kPi)});
  return num / den;
}

double phase_constant(const DbSpace& space) {
  // Wide radii make polynomial corrections to the ratio negligible; no floor,
  // since the ratio decays exponentially whenever the constant is positive.
  const RadiusGrid grid{1e3, 1e7, 40};
  const LogModulus ratio = [&](cplx z) { return log_modulus(space.E_sharp, z) - log_modulus(space.E, z); };
  return -0.5 * mean_type(ratio, 0.5 * kPi, grid, 0.0, -kInf).value;
}

double phase_derivative_zero_sum(std::span<const cplx> zeros, double t, double a) {
  double sum = 0.0, c = 0.0;
  for (const cplx& zn : zeros) {
    const double term = std::abs(zn.imag()) / std::norm(t - zn);
    // Neumaier compensation
    const double s = sum + term;
    c += std::abs(sum) >= term ? (sum - s) + term : (term - s) + sum;
    sum = s;
  }
  return a + sum + c;
}

double phase_derivative(const DbSpace& space, double t, PhaseRoute route) {
  if (route == PhaseRoute::Kernel) {
    const EvalResult e = evaluate(space.E, t);
    if (std::abs(e.value) == 0.0 || std::abs(e.value) <= e.abs_error)
      throw Error(ErrorKind::ZeroOnAxis, "E vanishes at t = " + std::to_string(t));
    return kPi * kernel(space, t, t).real() / std::norm(e.value);
  }
  if (!space.zeros) throw Error(ErrorKind::MissingZeroData, "space carries no zero sequence");
  return phase_derivative_zero_sum(space.zeros->points(), t, phase_constant(space));
}

InnerProduct inner_product(const DbSpace& space, const FunctionExpr& f, const FunctionExpr& g,
                           const InnerProductOptions& opts) {
  const bool same = &f == &g;
  auto integrand = [&](double t) -> cplx {
    const ScaledValue fv = evaluate_scaled(f, t);
    const ScaledValue gv = same ? fv : evaluate_scaled(g, t);
    if (fv.mantissa == cplx{} || gv.mantissa == cplx{}) return {};
    const double le = log_modulus(space.E, t);
    if (le == -kInf) throw Error(ErrorKind::ZeroOnAxis, "E vanishes on the real line");
    return fv.mantissa * std::conj(gv.mantissa) * std::exp(fv.log_scale + gv.log_scale - 2.0 * le);
  };
  quad::LineOptions lo;
  lo.rel_tol = opts.rel_tol;
  lo.max_half_width = opts.max_half_width;
  lo.decay_threshold = opts.decay_threshold;
  lo.max_depth = opts.max_depth;
  const quad::LineIntegral li = quad::integrate_real_line(integrand, lo);
  return {li.value, li.error, li.cutoff, li.decay_exponent, li.converged};
}

std::vector<double> RadiusGrid::radii() const {
  if (count < 2 || !(r_min > 0.0) || !(r_max > r_min))
    throw Error(ErrorKind::InvalidArgument, "radius grid needs 0 < r_min < r_max and count >= 2");
  std::vector<double> r(count);
  const double ratio = std::log(r_max / r_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) r[i] = r_min * std::exp(ratio * static_cast<double>(i));
  r.back() = r_max;
  return r;
}

MeanTypeEstimate mean_type(const LogModulus& log_abs, double theta, const RadiusGrid& grid, cplx base,
                           double log_floor) {
  if (!(theta > 0.0 && theta < kPi)) throw Error(ErrorKind::InvalidArgument, "ray direction must lie in (0, pi)");
  const std::vector<double> all = grid.radii();
  const std::vector<double> upper(all.begin() + static_cast<long>(all.size() / 2), all.end());
  const cplx dir = std::polar(1.0, theta);
  const auto values = parallel_map<double>(upper.size(), [&](std::size_t i) {
    try {
      return log_abs(base + upper[i] * dir);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PoleHit) return -kInf;
      throw;
    }
  });
  MeanTypeEstimate out;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < log_floor) {
      ++out.discarded;
      continue;
    }
    x.push_back(upper[i] * std::sin(theta));
    y.push_back(values[i]);
    out.radii.push_back(upper[i]);
  }
  if (x.size() < 2) throw Error(ErrorKind::AllPointsDiscarded, "fewer than two usable radii on the ray");
  const LineFit fit = fit_line(x, y);
  out.value = fit.slope;
  out.residual = fit.residual;
  out.slope_error = fit.slope_error;
  return out;
}

MeanTypeEstimate mean_type(const FunctionExpr& f, double theta, const RadiusGrid& grid, cplx base) {
  return mean_type([&](cplx z) { return log_modulus(f, z); }, theta, grid, base);
}

MeanTypeEstimate mean_type_ratio(const FunctionExpr& f, const FunctionExpr& g, double theta,
                                 const RadiusGrid& grid, cplx base) {
  return mean_type(
      [&](cplx z) {
        const double lf = log_modulus(f, z);
        if (lf == -kInf) return -kInf;
        return lf - log_modulus(g, z);
      },
      theta, grid, base);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::In: return "in";
    case Verdict::Out: return "out";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

MembershipReport membership(const DbSpace& space, const FunctionExpr& f, const MembershipOptions& opts) {
  MembershipReport r;
  const FunctionExpr fs = sharp(f);
  r.mean_type_f = mean_type_ratio(f, space.E, 0.5 * kPi, opts.grid);
  r.mean_type_sharp = mean_type_ratio(fs, space.E, 0.5 * kPi, opts.grid);

  enum class Check { Pass, Fail, Band };
  auto classify = [&](const MeanTypeEstimate& m) {
    if (m.value <= opts.tol) return Check::Pass;
    if (m.value - opts.tol > 2.0 * m.slope_error) return Check::Fail;
    return Check::Band;
  };
  const Check c1 = classify(r.mean_type_f);
  const Check c2 = classify(r.mean_type_sharp);
  if (c1 == Check::Fail || c2 == Check::Fail) {
    r.verdict = Verdict::Out;
    r.norm_status = "skipped";
    r.reason = c1 == Check::Fail ? "positive mean type of F/E" : "positive mean type of F#/E";
    return r;
  }

  Check c3 = Check::Band;
  try {
    const InnerProduct ip = inner_product(space, f, f, opts.quadrature);
    if (ip.converged || ip.decay_exponent >= opts.quadrature.decay_threshold + opts.exponent_margin) {
      r.norm_squared = ip.value.real();
      r.norm_status = "finite";
      c3 = Check::Pass;
    } else {
      r.norm_status = "unresolved";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonConvergentTail) throw;
    r.norm_status = "non-convergent-tail";
    c3 = Check::Fail;
  }
  if (c3 == Check::Fail) {
    r.verdict = Verdict::Out;
    r.reason = "F/E is not square integrable on the real line";
  } else if (c1 == Check::Pass && c2 == Check::Pass && c3 == Check::Pass) {
    r.verdict = Verdict::In;
    r.reason = "nonpositive mean types and finite norm";
  } else {
    r.verdict = Verdict::Undecided;
    r.reason = c3 == Check::Band ? "norm quadrature did not settle" : "mean-type slope within the tolerance band";
  }
  return r;
}

}  // namespace dblab
