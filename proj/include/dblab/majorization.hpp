#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dblab/db_space.hpp"
#include "dblab/defaults.hpp"

namespace dblab {

/// A parametrized piece z = origin + direction * s with strictly increasing s.
struct DomainSegment {
  cplx origin{};
  cplx direction{1.0, 0.0};
  std::vector<double> params;
  int ends = 1;  // unbounded directions: 1 for rays, 2 for full lines
  double r_max = 0.0;
};

struct GridSpec {
  double ratio = defaults::kGridRatio;
  double r_max = defaults::kGridRMax;
  double linear_step = defaults::kGridLinearStep;
};

/// Ray e^{i pi beta}[h, inf), line R + ih, real axis, horizontal ray
/// i y0 + [h, inf), or a union of these.
struct SampledDomain {
  enum class Kind { Ray, Line, RealAxis, HorizontalRay, Union };

  Kind kind = Kind::RealAxis;
  double beta = 0.5;
  double h = 0.0;
  double y0 = 0.0;
  GridSpec grid{};
  std::vector<SampledDomain> parts;

  static SampledDomain ray(double beta, double h, GridSpec grid = {});
  static SampledDomain line(double h, GridSpec grid = {});
  static SampledDomain real_axis(GridSpec grid = {});
  static SampledDomain horizontal_ray(double y0, double h, GridSpec grid = {});
  static SampledDomain union_of(std::vector<SampledDomain> parts);

  std::vector<DomainSegment> segments() const;
  std::vector<cplx> samples() const;
  std::string label() const;
};

struct DivisorPoint {
  cplx point{};
  int multiplicity = 1;
};

struct Majorant {
  enum class Kind { Nabla, MS, Modulus, Zero };

  Kind kind = Kind::Zero;
  SampledDomain domain{};
  std::vector<DivisorPoint> zero_divisor;
  bool divisor_infinite = false;
  std::shared_ptr<const DbSpace> space;  // Nabla
  FunctionExpr base;                     // S for MS, f for Modulus
  FunctionExpr base_sharp;
  double scale = 1.0;

  double log_value(cplx z) const;
  double value(cplx z) const;
  std::string label() const;
};

Majorant nabla_majorant(const DbSpace& space, const SampledDomain& d);
/// max(|S|, |S#|) / |z + i|.
Majorant mS_majorant(const FunctionExpr& s, const SampledDomain& d, std::vector<DivisorPoint> divisor = {});
Majorant modulus_majorant(const FunctionExpr& f, const SampledDomain& d, std::vector<DivisorPoint> divisor = {});
Majorant zero_majorant(const SampledDomain& d);
Majorant scaled(Majorant m, double c);

enum class MajorizationVerdict { Majorized, NotMajorized, Undecided };
std::string_view to_string(MajorizationVerdict v);

struct RatioSample {
  cplx z{};
  double log_ratio = 0.0;  // log max(|F|, |F#|) - log m at the cell maximum
};

struct MajorizationOptions {
  int subsamples = defaults::kGridSubsamples;
  double exclusion = defaults::kZeroExclusion;
  double slope_majorized = defaults::kSlopeMajorized;
  double slope_not_majorized = defaults::kSlopeNotMajorized;
  double sup_ratio_cap = defaults::kSupRatioCap;
  int refine_iterations = 48;
};

struct MajorizationReport {
  double sup_ratio = 0.0;
  cplx sup_point{};
  double slope = 0.0;  // largest tail slope of the log-ratio against log|z| over all unbounded ends
  MajorizationVerdict verdict = MajorizationVerdict::Undecided;
  std::size_t excluded = 0;
  std::vector<RatioSample> rows;  // one per grid cell, in domain order

  std::string csv() const;
};

/// Cell maxima of max(|F|, |F#|)/m: each grid cell is sampled at `subsamples`
/// points and the best one is refined by golden-section search. The slope is
/// fitted over the cells with |z| in [r_max/4, r_max] separately for each end.
MajorizationReport test_majorization(const FunctionExpr& f, const Majorant& m,
                                     const MajorizationOptions& opts = {});

struct WitnessCheck {
  std::string name;
  Verdict membership = Verdict::Undecided;
  MajorizationVerdict majorization = MajorizationVerdict::Undecided;
};

struct AdmissibilityReport {
  bool adm1 = false;  // zero divisor finite and supported on the real line
  bool adm2 = false;  // some witness lies in the space and is majorized
  bool admissible = false;
  std::vector<WitnessCheck> witnesses;
};

AdmissibilityReport admissibility_check(const Majorant& m, const std::vector<FunctionExpr>& witnesses,
                                        const DbSpace& space, const MembershipOptions& mopts = {},
                                        const MajorizationOptions& opts = {});

/// Log-log slope of m(t0 + eps) as eps shrinks from 1e-3 to 1e-6; close to the
/// zero order of m at the real point t0.
double estimate_zero_order(const Majorant& m, double t0);

}  // namespace dblab
