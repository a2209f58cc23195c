#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dblab/types.hpp"

namespace dblab::quad {

using RealToComplex = std::function<cplx(double)>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(std::size_t n);

struct PanelResult {
  cplx value{};
  double error = 0.0;
  double abs_integral = 0.0;  // Kronrod estimate of the integral of |f|
  double max_abs = 0.0;       // largest |f| seen at any node
  std::size_t evaluations = 0;
};

/// Single 7/15-point Gauss-Kronrod panel with the QUADPACK error heuristic.
PanelResult gk15(const RealToComplex& f, double a, double b);

/// Bisects until each panel's error is below `tol_density * width`.
PanelResult adaptive_gk15(const RealToComplex& f, double a, double b,
                          double tol_density, int max_depth = 30);

/// Splits [a, b] into panels of at most `panel_width` and runs adaptive_gk15 on
/// each; panel results are summed left to right.
PanelResult integrate_panels(const RealToComplex& f, double a, double b,
                             double panel_width, double tol_density, int max_depth = 30);

struct LineOptions {
  double panel_width = 4.0;
  double initial_half_width = 8.0;
  double max_half_width = 1048576.0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  double unit_tol = 1e-12;  // per-unit-length panel tolerance relative to the initial |f| mass
  int min_octaves = 3;
  double decay_threshold = 1.05;
  int max_depth = 30;  // bisection depth per panel
};

struct LineIntegral {
  cplx value{};
  double error = 0.0;
  double cutoff = 0.0;          // final half-width T
  double decay_exponent = 0.0;  // fitted p with octave mass of |f| ~ T^(1-p)
  int octaves = 0;
  bool converged = false;
  std::size_t evaluations = 0;
};

/// Integral over the real line. The half-width doubles octave by octave; the
/// tail beyond the current cutoff is extrapolated geometrically from the last
/// octave using the decay exponent fitted to the octave masses of |f|. Throws
/// Error(NonConvergentTail) when that exponent is below decay_threshold.
LineIntegral integrate_real_line(const RealToComplex& f, const LineOptions& opts = {});

}  // namespace dblab::quad
