#pragma once

#include <complex>
#include <limits>
#include <numbers>

namespace dblab {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr cplx kI{0.0, 1.0};

}  // namespace dblab
