#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dblab/defaults.hpp"
#include "dblab/expr.hpp"
#include "dblab/quadrature.hpp"

namespace dblab {

struct RealZero {
  double point = 0.0;
  int multiplicity = 1;
};

/// Hermite-Biehler structure function with its derived companions.
struct DbSpace {
  FunctionExpr E;
  FunctionExpr E_sharp;
  FunctionExpr A;  // (E + E#) / 2
  FunctionExpr B;  // i (E - E#) / 2
  std::shared_ptr<const ZeroSequence> zeros;  // zeros of E, when known
  std::vector<RealZero> real_zeros;           // declared zeros of E on the real line
  double declared_order = 1.0;
  double declared_exp_type = 0.0;
  bool hb_verified = false;

  static DbSpace from_E(FunctionExpr e, double order = 1.0, double exp_type = 0.0);
};

struct HbReport {
  bool hermite_biehler = false;
  double worst_margin = kInf;      // min |E(z)| - |E#(z)|
  double worst_log_margin = kInf;  // min log|E(z)| - log|E#(z)|
  cplx worst_point{};
  std::size_t points = 0;
};

/// 100 points, Im z in [0.1, 10], Re z in [-10, 10], on a fixed lattice.
std::vector<cplx> standard_hb_grid();

/// Checks |E#| < |E| at every grid point and records the result in the space.
HbReport hb_check(DbSpace& space, const std::vector<cplx>& grid);

/// K(w, z). Near the diagonal the removable singularity is replaced by a
/// second-order Taylor expansion in z about conj(w).
cplx kernel(const DbSpace& space, cplx w, cplx z);

/// log of sqrt(K(z, z)), usable where K itself overflows. Requires Im z >= 0.
double log_nabla(const DbSpace& space, cplx z);
double nabla(const DbSpace& space, cplx z);

/// z -> K(w, z) as an expression (a quotient with a removable singularity at conj(w)).
FunctionExpr kernel_function(const DbSpace& space, cplx w);

enum class PhaseRoute { Kernel, ZeroSum };

/// The phase constant for the zero-sum route: half the decay rate of E#/E
/// along the positive imaginary axis.
double phase_constant(const DbSpace& space);

double phase_derivative(const DbSpace& space, double t, PhaseRoute route);
/// a + sum_n |Im z_n| / |t - z_n|^2.
double phase_derivative_zero_sum(std::span<const cplx> zeros, double t, double a);

struct InnerProduct {
  cplx value{};
  double error = 0.0;
  double cutoff = 0.0;
  double decay_exponent = 0.0;
  bool converged = false;
};

struct InnerProductOptions {
  double rel_tol = 1e-8;
  double max_half_width = 1048576.0;
  double decay_threshold = 1.05;
  int max_depth = 30;
};

/// Integral over the real line of F conj(G) / |E|^2.
InnerProduct inner_product(const DbSpace& space, const FunctionExpr& f, const FunctionExpr& g,
                           const InnerProductOptions& opts = {});

struct RadiusGrid {
  double r_min = 1.0;
  double r_max = 1e4;
  std::size_t count = 40;  // geometric, at least 20
  std::vector<double> radii() const;
};

struct MeanTypeEstimate {
  double value = 0.0;
  double residual = 0.0;     // RMS misfit of log|f| about the fitted line
  double slope_error = 0.0;  // standard error of the fitted slope
  std::vector<double> radii;  // radii used in the fit
  std::size_t discarded = 0;
};

using LogModulus = std::function<double(cplx)>;

/// Slope of log|f(base + r e^{i theta})| against r sin(theta) over the upper
/// half of the radius grid, skipping points with log|f| below `log_floor`
/// (default: |f| < 1e-300).
MeanTypeEstimate mean_type(const LogModulus& log_abs, double theta, const RadiusGrid& grid = {},
                           cplx base = 0.0, double log_floor = -690.7755278982137);
MeanTypeEstimate mean_type(const FunctionExpr& f, double theta, const RadiusGrid& grid = {},
                           cplx base = 0.0);
/// Mean type of f / g computed from the two log-moduli.
MeanTypeEstimate mean_type_ratio(const FunctionExpr& f, const FunctionExpr& g, double theta,
                                 const RadiusGrid& grid = {}, cplx base = 0.0);

enum class Verdict { In, Out, Undecided };
std::string_view to_string(Verdict v);

struct MembershipOptions {
  double tol = defaults::kMembershipTol;
  RadiusGrid grid{};
  InnerProductOptions quadrature{defaults::kLineRelTol, defaults::kMembershipMaxHalfWidth,
                                 defaults::kLineDecayThreshold, defaults::kMembershipMaxDepth};
  /// An unsettled norm quadrature still counts as finite when the fitted
  /// envelope exponent exceeds the decay threshold by this margin.
  double exponent_margin = defaults::kMembershipExponentMargin;
};

struct MembershipReport {
  Verdict verdict = Verdict::Undecided;
  MeanTypeEstimate mean_type_f;      // of F / E on the imaginary axis
  MeanTypeEstimate mean_type_sharp;  // of F# / E on the imaginary axis
  std::optional<double> norm_squared;
  std::string norm_status;  // "finite", "non-convergent-tail", "unresolved", "skipped"
  std::string reason;
};

MembershipReport membership(const DbSpace& space, const FunctionExpr& f,
                            const MembershipOptions& opts = {});

}  // namespace dblab
