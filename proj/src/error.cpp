#include "dblab/error.hpp"

namespace dblab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleHit: return "pole-hit";
    case ErrorKind::TruncationBudgetExceeded: return "truncation-budget-exceeded";
    case ErrorKind::RadiusTooLarge: return "radius-too-large";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NonHermiteBiehler: return "non-hermite-biehler";
    case ErrorKind::ZeroOnAxis: return "zero-on-axis";
    case ErrorKind::MissingZeroData: return "missing-zero-data";
    case ErrorKind::NonConvergentTail: return "non-convergent-tail";
    case ErrorKind::AllPointsDiscarded: return "all-points-discarded";
    case ErrorKind::AllPointsExcluded: return "all-points-excluded";
    case ErrorKind::NegativeRealPart: return "negative-real-part";
    case ErrorKind::DegenerateInner: return "degenerate-inner";
    case ErrorKind::EnvelopeNotDecaying: return "envelope-not-decaying";
    case ErrorKind::UnknownInstance: return "unknown-instance";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace dblab
