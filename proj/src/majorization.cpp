#include "dblab/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dblab/error.hpp"
#include "dblab/fit.hpp"
#include "dblab/parallel.hpp"

namespace dblab {

namespace {

std::vector<double> geometric(double a, double b, double ratio) {
  std::vector<double> out;
  for (double x = a; x < b * (1.0 - 1e-12); x *= ratio) out.push_back(x);
  out.push_back(b);
  return out;
}

// Nodes on [lo, hi]: geometric for |s| >= 1, uniform with the linear step on [-1, 1].
std::vector<double> axis_nodes(double lo, double hi, const GridSpec& g) {
  if (!(hi > lo)) throw Error(ErrorKind::InvalidArgument, "empty sampling interval");
  if (!(g.ratio > 1.0) || !(g.linear_step > 0.0))
    throw Error(ErrorKind::InvalidArgument, "grid needs ratio > 1 and a positive linear step");
  std::vector<double> nodes;
  if (lo < -1.0) {
    std::vector<double> neg = geometric(std::max(1.0, -hi), -lo, g.ratio);
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) nodes.push_back(-*it);
  }
  const double a = std::max(lo, -1.0), b = std::min(hi, 1.0);
  if (a < b) {
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / g.linear_step - 1e-9)));
    for (int k = 0; k <= n; ++k) nodes.push_back(a + (b - a) * k / n);
  }
  if (hi > 1.0) {
    for (double x : geometric(std::max(1.0, lo), hi, g.ratio)) nodes.push_back(x);
  }
  std::vector<double> out;
  for (double x : nodes)
    if (out.empty() || x > out.back() + 1e-12 * (1.0 + std::abs(x))) out.push_back(x);
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

SampledDomain SampledDomain::ray(double beta, double h, GridSpec grid) {
  if (!(beta > 0.0 && beta <= 1.0) || h < 0.0)
    throw Error(ErrorKind::InvalidArgument, "ray needs beta in (0, 1] and h >= 0");
  SampledDomain d;
  d.kind = Kind::Ray;
  d.beta = beta;
  d.h = h;
  d.grid = grid;
  return d;
}

SampledDomain SampledDomain::line(double h, GridSpec grid) {
  if (h < 0.0) throw Error(ErrorKind::InvalidArgument, "line needs h >= 0");
  SampledDomain d;
  d.kind = h == 0.0 ? Kind::RealAxis : Kind::Line;
  d.h = h;
  d.grid = grid;
  return d;
}

SampledDomain SampledDomain::real_axis(GridSpec grid) { return line(0.0, grid); }

SampledDomain SampledDomain::horizontal_ray(double y0, double h, GridSpec grid) {
  if (y0 < 0.0) throw Error(ErrorKind::InvalidArgument, "horizontal ray needs y0 >= 0");
  SampledDomain d;
  d.kind = Kind::HorizontalRay;
  d.y0 = y0;
  d.h = h;
  d.grid = grid;
  return d;
}

SampledDomain SampledDomain::union_of(std::vector<SampledDomain> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "empty union");
  SampledDomain d;
  d.kind = Kind::Union;
  for (auto& p : parts) {
    if (p.kind == Kind::Union)
      d.parts.insert(d.parts.end(), p.parts.begin(), p.parts.end());
    else
      d.parts.push_back(std::move(p));
  }
  return d;
}

std::vector<DomainSegment> SampledDomain::segments() const {
  const double r = grid.r_max;
  switch (kind) {
    case Kind::Ray: {
      if (!(r > h)) throw Error(ErrorKind::InvalidArgument, "ray start beyond r_max");
      DomainSegment s;
      s.r_max = r;
      s.direction = std::polar(1.0, kPi * beta);
      s.params = axis_nodes(h, r, grid);
      return {s};
    }
    case Kind::Line:
    case Kind::RealAxis: {
      DomainSegment s;
      s.r_max = r;
      s.origin = cplx(0.0, h);
      s.params = axis_nodes(-r, r, grid);
      s.ends = 2;
      return {s};
    }
    case Kind::HorizontalRay: {
      if (!(r > h)) throw Error(ErrorKind::InvalidArgument, "horizontal ray start beyond r_max");
      DomainSegment s;
      s.r_max = r;
      s.origin = cplx(0.0, y0);
      s.params = axis_nodes(h, r, grid);
      return {s};
    }
    case Kind::Union: {
      std::vector<DomainSegment> out;
      for (const SampledDomain& p : parts)
        for (DomainSegment& s : p.segments()) out.push_back(std::move(s));
      return out;
    }
  }
  return {};
}

std::vector<cplx> SampledDomain::samples() const {
  std::vector<cplx> out;
  for (const DomainSegment& s : segments())
    for (double p : s.params) out.push_back(s.origin + s.direction * p);
  return out;
}

std::string SampledDomain::label() const {
  switch (kind) {
    case Kind::Ray: return "ray(beta=" + fmt(beta) + ",h=" + fmt(h) + ")";
    case Kind::Line: return "line(h=" + fmt(h) + ")";
    case Kind::RealAxis: return "real-axis";
    case Kind::HorizontalRay: return "horizontal-ray(y0=" + fmt(y0) + ",h=" + fmt(h) + ")";
    case Kind::Union: {
      std::string s = "union(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].label();
      return s + ")";
    }
  }
  return "";
}

double Majorant::log_value(cplx z) const {
  const double ls = std::log(scale);
  switch (kind) {
    case Kind::Nabla:
      return log_nabla(*space, z) + ls;
    case Kind::MS:
      return std::max(log_modulus(base, z), log_modulus(base_sharp, z)) - std::log(std::abs(z + kI)) + ls;
    case Kind::Modulus:
      return log_modulus(base, z) + ls;
    case Kind::Zero:
      return -kInf;
  }
  return -kInf;
}

double Majorant::value(cplx z) const { return std::exp(log_value(z)); }

std::string Majorant::label() const {
  switch (kind) {
    case Kind::Nabla: return "nabla";
    case Kind::MS: return "m_S";
    case Kind::Modulus: return "modulus";
    case Kind::Zero: return "zero";
  }
  return "";
}

Majorant nabla_majorant(const DbSpace& space, const SampledDomain& d) {
  Majorant m;
  m.kind = Majorant::Kind::Nabla;
  m.domain = d;
  m.space = std::make_shared<const DbSpace>(space);
  for (const RealZero& rz : space.real_zeros) m.zero_divisor.push_back({cplx(rz.point, 0.0), rz.multiplicity});
  return m;
}

Majorant mS_majorant(const FunctionExpr& s, const SampledDomain& d, std::vector<DivisorPoint> divisor) {
  Majorant m;
  m.kind = Majorant::Kind::MS;
  m.domain = d;
  m.base = s;
  m.base_sharp = sharp(s);
  m.zero_divisor = std::move(divisor);
  return m;
}

Majorant modulus_majorant(const FunctionExpr& f, const SampledDomain& d, std::vector<DivisorPoint> divisor) {
  Majorant m;
  m.kind = Majorant::Kind::Modulus;
  m.domain = d;
  m.base = f;
  m.zero_divisor = std::move(divisor);
  return m;
}

Majorant zero_majorant(const SampledDomain& d) {
  Majorant m;
  m.kind = Majorant::Kind::Zero;
  m.domain = d;
  m.divisor_infinite = true;
  return m;
}

Majorant scaled(Majorant m, double c) {
  if (!(c > 0.0)) throw Error(ErrorKind::InvalidArgument, "majorant scale must be positive");
  m.scale *= c;
  return m;
}

std::string_view to_string(MajorizationVerdict v) {
  switch (v) {
    case MajorizationVerdict::Majorized: return "majorized";
    case MajorizationVerdict::NotMajorized: return "not-majorized";
    case MajorizationVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::string MajorizationReport::csv() const {
  std::ostringstream os;
  os << "re,im,ratio,log_ratio\n";
  char buf[128];
  for (const RatioSample& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.z.real(), r.z.imag(), std::exp(r.log_ratio),
                  r.log_ratio);
    os << buf;
  }
  return os.str();
}

namespace {

struct CellResult {
  double s = 0.0;
  cplx z{};
  double log_ratio = -kInf;
  bool any = false;  // at least one non-excluded sample
  std::size_t excluded = 0;
};

}  // namespace

MajorizationReport test_majorization(const FunctionExpr& f, const Majorant& m, const MajorizationOptions& opts) {
  const FunctionExpr fs = sharp(f);
  const std::vector<DomainSegment> segs = m.domain.segments();

  struct Cell {
    std::size_t seg;
    std::size_t k;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t k = 0; k + 1 < segs[i].params.size(); ++k) cells.push_back({i, k});

  auto excluded = [&](cplx z) {
    for (const DivisorPoint& p : m.zero_divisor)
      if (std::abs(z - p.point) < opts.exclusion) return true;
    return false;
  };
  // NaN marks an excluded point.
  auto log_ratio = [&](cplx z) -> double {
    if (excluded(z)) return std::nan("");
    const double lf = std::max(log_modulus(f, z), log_modulus(fs, z));
    if (lf == -kInf) return -kInf;
    const double lm = m.log_value(z);
    if (lm == -kInf) return kInf;
    return lf - lm;
  };

  const int sub = std::max(1, opts.subsamples);
  const std::vector<CellResult> results = parallel_map<CellResult>(cells.size(), [&](std::size_t c) {
    const DomainSegment& seg = segs[cells[c].seg];
    const std::size_t k = cells[c].k;
    const double a = seg.params[k], b = seg.params[k + 1];
    const double step = (b - a) / sub;
    const bool last = k + 2 == seg.params.size();
    CellResult r;
    auto consider = [&](double s) {
      const cplx z = seg.origin + seg.direction * s;
      const double v = log_ratio(z);
      if (std::isnan(v)) {
        ++r.excluded;
        return v;
      }
      if (!r.any || v > r.log_ratio) {
        r.any = true;
        r.log_ratio = v;
        r.s = s;
        r.z = z;
      }
      return v;
    };
    for (int j = 0; j < sub; ++j) consider(a + step * j);
    if (last) consider(b);
    if (!r.any || !std::isfinite(r.log_ratio)) return r;

    // Golden-section refinement around the best sub-sample.
    double lo = std::max(a, r.s - step), hi = std::min(b, r.s + step);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    auto val = [&](double s) {
      const double v = log_ratio(seg.origin + seg.direction * s);
      return std::isnan(v) ? -kInf : v;
    };
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = val(x1), f2 = val(x2);
    for (int it = 0; it < opts.refine_iterations; ++it) {
      if (f1 >= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = val(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = val(x2);
      }
    }
    const double s_best = f1 >= f2 ? x1 : x2;
    const double v_best = std::max(f1, f2);
    if (v_best > r.log_ratio && std::isfinite(v_best)) {
      r.log_ratio = v_best;
      r.s = s_best;
      r.z = seg.origin + seg.direction * s_best;
    }
    return r;
  });

  MajorizationReport rep;
  bool any = false, infinite = false;
  double sup = -kInf;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const CellResult& r = results[c];
    rep.excluded += r.excluded;
    if (!r.any) continue;
    any = true;
    rep.rows.push_back({r.z, r.log_ratio});
    if (r.log_ratio == kInf) infinite = true;
    if (r.log_ratio > sup) {
      sup = r.log_ratio;
      rep.sup_point = r.z;
    }
  }
  if (!any) throw Error(ErrorKind::AllPointsExcluded, "every sample lies in the zero-divisor exclusion zone");
  rep.sup_ratio = std::exp(sup);

  if (infinite) {
    rep.slope = kInf;
    rep.verdict = MajorizationVerdict::NotMajorized;
    return rep;
  }

  // Tail slopes per unbounded end over the last two octaves.
  double slope = -kInf;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (int sign : {1, -1}) {
      if (sign < 0 && segs[i].ends < 2) continue;
      std::vector<double> xs, ys;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].seg != i || !results[c].any || !std::isfinite(results[c].log_ratio)) continue;
        if (results[c].s * sign <= 0.0 || std::abs(results[c].z) < 0.25 * segs[i].r_max) continue;
        xs.push_back(std::log(std::abs(results[c].z)));
        ys.push_back(results[c].log_ratio);
      }
      if (xs.size() < 3) continue;
      slope = std::max(slope, fit_line(xs, ys).slope);
    }
  }
  if (slope == -kInf) throw Error(ErrorKind::InvalidArgument, "domain too short for a tail fit; raise r_max");
  rep.slope = slope;

  if (slope >= opts.slope_not_majorized)
    rep.verdict = MajorizationVerdict::NotMajorized;
  else if (slope <= opts.slope_majorized && rep.sup_ratio < opts.sup_ratio_cap)
    rep.verdict = MajorizationVerdict::Majorized;
  else
    rep.verdict = MajorizationVerdict::Undecided;
  return rep;
}

AdmissibilityReport admissibility_check(const Majorant& m, const std::vector<FunctionExpr>& witnesses,
                                        const DbSpace& space, const MembershipOptions& mopts,
                                        const MajorizationOptions& opts) {
  if (witnesses.empty()) throw Error(ErrorKind::InvalidArgument, "admissibility needs at least one witness");
  AdmissibilityReport rep;
  rep.adm1 = !m.divisor_infinite &&
             std::all_of(m.zero_divisor.begin(), m.zero_divisor.end(),
                         [](const DivisorPoint& p) { return p.point.imag() == 0.0; });
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    WitnessCheck w;
    w.name = "witness-" + std::to_string(i);
    w.membership = membership(space, witnesses[i], mopts).verdict;
    w.majorization = test_majorization(witnesses[i], m, opts).verdict;
    if (w.membership == Verdict::In && w.majorization == MajorizationVerdict::Majorized) rep.adm2 = true;
    rep.witnesses.push_back(w);
  }
  rep.admissible = rep.adm1 && rep.adm2;
  return rep;
}

double estimate_zero_order(const Majorant& m, double t0) {
  std::vector<double> xs, ys;
  for (int k = 0; k <= 12; ++k) {
    const double eps = 1e-3 * std::pow(10.0, -0.25 * k);
    const double lv = m.log_value(cplx(t0 + eps, 0.0));
    if (!std::isfinite(lv)) continue;
    xs.push_back(std::log(eps));
    ys.push_back(lv);
  }
  if (xs.size() < 3) throw Error(ErrorKind::AllPointsDiscarded, "majorant not finite near the point");
  return fit_line(xs, ys).slope;
}

}  // namespace dblab
