#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dblab {

enum class ErrorKind {
  PoleHit,
  TruncationBudgetExceeded,
  RadiusTooLarge,
  InvalidArgument,
  NonHermiteBiehler,
  ZeroOnAxis,
  MissingZeroData,
  NonConvergentTail,
  AllPointsDiscarded,
  AllPointsExcluded,
  NegativeRealPart,
  DegenerateInner,
  EnvelopeNotDecaying,
  UnknownInstance,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind; the CLI maps it to {kind, detail}.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace dblab
