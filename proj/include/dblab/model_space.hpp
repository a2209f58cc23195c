#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblab/defaults.hpp"
#include "dblab/expr.hpp"

namespace dblab {

// Inner functions on the upper half-plane.
class InnerFunction {
 public:
  enum class Kind { Ratio, Exponential, Blaschke, Constant, General };

  /// e^{-2i alpha} E#/E for an Hermite-Biehler E.
  static InnerFunction ratio(const FunctionExpr& E, double alpha = 0.0);
  /// e^{iaz}, a >= 0.
  static InnerFunction exponential(double a);
  /// gamma * prod (z - a_k)/(z - conj a_k) with Im a_k > 0 and |gamma| = 1.
  static InnerFunction blaschke(std::vector<cplx> zeros, cplx gamma = 1.0);
  /// A constant of modulus <= 1; not inner unless |c| = 1, but useful as test input.
  static InnerFunction constant(cplx c);
  /// Any expression the caller asserts to be inner (no boundary check).
  static InnerFunction general(const FunctionExpr& theta, std::string label = "general");

  Kind kind() const { return kind_; }
  const FunctionExpr& expr() const { return expr_; }
  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx gamma() const { return gamma_; }
  const std::string& label() const { return label_; }
  const FunctionExpr& ratio_E() const { return E_; }  // Ratio kind only
  double ratio_alpha() const { return alpha_; }
  cplx operator()(cplx z) const;

 private:
  Kind kind_ = Kind::Constant;
  FunctionExpr expr_;
  std::vector<cplx> zeros_;
  cplx gamma_{1.0, 0.0};
  FunctionExpr E_;
  double alpha_ = 0.0;
  std::string label_;
};

struct InnerCheck {
  double max_interior = 0.0;       // largest |Theta| at the sampled upper half-plane points
  double boundary_deviation = 0.0; // largest ||Theta(t)| - 1| on the real samples (0 if skipped)
  bool boundary_checked = false;
  bool ok = false;
};

/// |Theta| < 1 on a fixed upper half-plane grid and, for Ratio, Exponential and
/// Blaschke kinds, |Theta(t)| = 1 within `boundary_tol` on a real grid.
InnerCheck check_inner(const InnerFunction& theta, double boundary_tol = 1e-8);

enum class CayleyVariant {
  Plus,    // q = (1 + Theta)/(1 - Theta), Re q >= 0
  IMinus,  // q = i (1 - Theta)/(1 + Theta), Im q >= 0
};

std::string to_string(CayleyVariant v);
CayleyVariant parse_cayley_variant(const std::string& s);

/// Throws Error(DegenerateInner) when Theta is identically 1 (Plus) or -1 (IMinus).
FunctionExpr cayley_q_from_theta(const InnerFunction& theta, CayleyVariant variant);
FunctionExpr theta_from_q(const FunctionExpr& q, CayleyVariant variant);

// --- Herglotz data ------------------------------------------------------------
//
// q(z) = -ipz + i Im q(i) + (i/pi) int (1/(z-t) + t/(1+t^2)) dmu(t)

struct PointMass {
  double location = 0.0;
  double weight = 0.0;
};

struct DensitySample {
  double t = 0.0;
  double value = 0.0;  // Re q(t + i delta)
};

struct HerglotzOptions {
  double half_width = defaults::kHerglotzHalfWidth;
  int grid_points = defaults::kHerglotzGridPoints;
  double delta = defaults::kBoundaryDelta;
  std::vector<double> mass_deltas{1e-3, 1e-4, 1e-5};
  double mass_stability = defaults::kPointMassStability;
  std::vector<double> mass_candidates;  // extra locations probed for point masses
  double far_y_min = defaults::kHerglotzFarYMin;
  double far_y_max = defaults::kHerglotzFarYMax;
  double class_tol = defaults::kHerglotzClassTol;
};

struct HerglotzData {
  double p = 0.0;
  double im_at_i = 0.0;
  std::vector<DensitySample> density;
  std::vector<PointMass> masses;
  double total_mass = kInf;  // pi lim y q(iy), +inf when the limit does not exist
  double limit_yq = kInf;    // lim y q(iy)
  bool class_c0 = false;
  bool class_c1 = false;
};

/// Throws Error(NegativeRealPart) when Re q < -1e-9 somewhere on the probe grid.
HerglotzData herglotz_extract(const FunctionExpr& q, const HerglotzOptions& opts = {});

// --- weak-type superlevel sets ----------------------------------------------------

enum class SuperlevelMeasure { Lebesgue, Poisson };
std::string to_string(SuperlevelMeasure m);
SuperlevelMeasure parse_superlevel_measure(const std::string& s);

struct WeakTypeOptions {
  double dense_half_width = defaults::kWeakTypeDenseHalfWidth;
  int steps_per_y0 = defaults::kWeakTypeStepsPerY0;
  int probe_octaves = defaults::kWeakTypeProbeOctaves;
  double bisection_tol = defaults::kBisectionTol;
  double constant = defaults::kWeakTypeConstant;
  /// |q(x + i y0)| <= envelope_constant / |x| for |x| >= 1, when supplied.
  std::optional<double> envelope_constant;
};

struct WeakTypeRow {
  double a = 0.0;
  double measure = 0.0;  // of {x : |q(x + i y0)| > a}; +inf for unbounded Lebesgue sets
  double product = 0.0;  // a * measure
  double bound = kInf;   // A lim y q(iy) (Lebesgue only)
  bool holds = true;
};

struct WeakTypeReport {
  double y0 = 1.0;
  SuperlevelMeasure measure = SuperlevelMeasure::Lebesgue;
  double constant = defaults::kWeakTypeConstant;
  double limit_yq = kInf;
  std::vector<WeakTypeRow> rows;  // sorted by a
  bool all_hold = true;
  bool monotone = true;          // measures nonincreasing in a
  bool tail_to_zero = false;     // a * measure decreasing toward 0 on the upper half of the a-grid
  std::string csv() const;       // a,measure,bound
};

/// Throws Error(EnvelopeNotDecaying) when a Lebesgue superlevel set cannot be
/// certified bounded, or when the far-field probes cross a non-monotonically.
WeakTypeReport weak_type_test(const FunctionExpr& q, double y0, std::vector<double> a_grid,
                              SuperlevelMeasure measure, const WeakTypeOptions& opts = {});

// --- model space K_Theta ---------------------------------------------------------

/// k_z(zeta) = (i/2pi)(1 - conj(Theta(z)) Theta(zeta))/(zeta - conj z).
FunctionExpr clark_kernel(const InnerFunction& theta, cplx z);

/// Point masses of the measure mu in the Plus-variant representation of
/// (1 + Theta)/(1 - Theta) for a finite Blaschke product: the real points
/// where Theta = 1, with weights 2pi / phi'(t). `mass_at_infinity` is set when
/// Theta(infinity) = 1, in which case p > 0 and the finite masses do not span K_Theta.
struct ClarkMeasure {
  std::vector<PointMass> masses;
  bool mass_at_infinity = false;
};
ClarkMeasure clark_measure(const InnerFunction& blaschke);

/// (1 - Theta(z))/(2 pi i) sum f(t_j) mu_j / (t_j - z).
cplx clark_reconstruct(const ClarkMeasure& mu, const InnerFunction& theta, const FunctionExpr& f, cplx z);
/// sum |f(t_j)|^2 mu_j, the squared norm in L^2(mu).
double clark_norm2(const ClarkMeasure& mu, const FunctionExpr& f);

struct A60Row {
  double r = 0.0;
  double measure = 0.0;  // of {x in [r, 2r] : |1 - Theta(x + i y0)| <= c / |x + i y0|}
  double ratio = 0.0;    // measure / r
};

struct A60Residual {
  double x = 0.0;
  double value = 0.0;  // |f + 1 - Theta| |x + i y0| at x + i y0
};

struct A60Scan {
  std::vector<A60Row> rows;
  std::vector<A60Residual> residual;
  double min_abs_one_plus_theta = kInf;  // diagnostic for the i-minus convention
  std::string csv() const;               // r,measure,ratio
};

A60Scan theorem_a60_scan(const InnerFunction& theta, double y0, double c, const std::vector<double>& r_grid,
                         const std::optional<FunctionExpr>& f = std::nullopt,
                         int samples_per_r = defaults::kA60SamplesPerR);

/// Splitting of f in K_Theta through the tail of its Clark measure.
struct DecompositionRow {
  cplx z;
  cplx f_eps;         // (1 - Theta(z))/i * int f(t)/(t - z) dmu_eps(t)
  cplx f_eps_split;   // (1 - Theta(z))/i * (int f/t dmu_eps + z int f/(t (t - z)) dmu_eps)
  cplx gamma_eps;     // the bracket of the split form
};

struct DecompositionExperiment {
  double cutoff = 0.0;          // M: mu_eps = mu restricted to |t| > M, divided by 2 pi
  double tail_integral = 0.0;   // int |f(t)|/|t| dmu_eps
  double tail_mass = 0.0;       // mu_eps(R)
  std::vector<DecompositionRow> rows;
  double max_split_mismatch = 0.0;
};

/// Throws Error(InvalidArgument) when a retained mass sits at t = 0.
DecompositionExperiment decomposition_experiment(const ClarkMeasure& mu, const InnerFunction& theta,
                                                 const FunctionExpr& f, double cutoff,
                                                 const std::vector<cplx>& points);

}  // namespace dblab
