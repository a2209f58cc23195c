#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace dblab {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;      // root-mean-square of the fit residuals
  double slope_error = 0.0;   // standard error of the slope
  std::size_t count = 0;
};

/// Ordinary least squares y ~ slope*x + intercept.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  LineFit fit;
  const std::size_t n = x.size();
  fit.count = n;
  if (n == 0) return fit;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(n));
  if (n > 2 && sxx > 0.0) fit.slope_error = std::sqrt(ss / static_cast<double>(n - 2) / sxx);
  return fit;
}

}  // namespace dblab
