#pragma once

#include <cstddef>
#include <string_view>

namespace dblab::defaults {

/// Bumped whenever a value below changes; printed by `dblab defaults`.
inline constexpr std::string_view kVersion = "1.0.0";

// entire-core
inline constexpr double kPoleExclusion = 1e-9;       // times (1 + |z|)
inline constexpr double kPoleProbeThreshold = 1e-6;  // |den| below this triggers the Newton distance probe
inline constexpr double kCauchyRadius = 1e-3;        // times (1 + |z|)
inline constexpr int kCauchyNodes = 64;

// db-space
inline constexpr double kKernelSwitch = 1e-6;  // times (1 + |z|)
inline constexpr double kNablaNegativeSlack = 1e-12;
inline constexpr double kMeanTypeRMin = 1.0;
inline constexpr double kMeanTypeRMax = 1e4;
inline constexpr std::size_t kMeanTypeRadii = 40;
inline constexpr double kMeanTypeFloor = 1e-300;
inline constexpr double kMembershipTol = 5e-3;
inline constexpr double kLineRelTol = 1e-8;
inline constexpr double kLinePanelWidth = 4.0;
inline constexpr double kLineDecayThreshold = 1.05;
inline constexpr double kMembershipMaxHalfWidth = 16384.0;
inline constexpr int kMembershipMaxDepth = 10;
inline constexpr double kMembershipExponentMargin = 0.5;
inline constexpr double kHbMinImag = 0.01;

// majorization
inline constexpr double kGridRatio = 1.05;
inline constexpr double kGridRMax = 1e4;
inline constexpr double kGridLinearStep = 0.05;
inline constexpr int kGridSubsamples = 16;
inline constexpr double kZeroExclusion = 1e-3;
inline constexpr double kSlopeMajorized = 0.02;
inline constexpr double kSlopeNotMajorized = 0.10;
inline constexpr double kSupRatioCap = 1e8;

// examples
inline constexpr std::size_t kA38Truncation = 1000000;
inline constexpr std::size_t kA41Truncation = 100000;
inline constexpr std::size_t kA45Truncation = 100000;

// model-space
inline constexpr double kBoundaryDelta = 1e-4;
inline constexpr double kPointMassStability = 0.01;
inline constexpr double kBisectionTol = 1e-8;
inline constexpr double kWeakTypeConstant = 16.5183429657676;  // pi * sqrt(2) * (1 + e)
inline constexpr double kHerglotzHalfWidth = 10.0;       // density grid [-10, 10]
inline constexpr int kHerglotzGridPoints = 201;
inline constexpr double kHerglotzFarYMin = 1e3;         // y-range for p and lim y q(iy)
inline constexpr double kHerglotzFarYMax = 1e6;
inline constexpr double kHerglotzClassTol = 1e-6;
inline constexpr double kWeakTypeDenseHalfWidth = 1e3;  // uniform scan region, in units of y0
inline constexpr int kWeakTypeStepsPerY0 = 32;
inline constexpr int kWeakTypeProbeOctaves = 40;        // envelope probes at +-2^k, k <= 40
inline constexpr int kA60SamplesPerR = 4096;

}  // namespace dblab::defaults
