#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblab/majorization.hpp"

namespace dblab {

struct VerifyRow {
  std::string witness;
  std::string role;  // "member" (in L) or "complement" (in H, not in L)
  std::string majorant;
  std::string domain;
  std::optional<MajorizationVerdict> expected;  // empty when the statement makes no prediction
  MajorizationVerdict actual = MajorizationVerdict::Undecided;
  double sup_ratio = 0.0;
  double slope = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string theorem;
  std::string instance;
  std::vector<VerifyRow> rows;
  bool passed = false;
};

/// A10, A12, A13, A15, A18, A37, A48, A54.
std::vector<std::string> theorem_ids();
/// Instances whose hypotheses the theorem's statement covers ("a20", "poly").
std::vector<std::string> theorem_instances(const std::string& theorem);

/// Runs the witness table of a theorem on a shipped instance. Throws
/// Error(UnknownInstance) for instances outside the theorem's hypotheses and
/// Error(InvalidArgument) for unknown theorem ids.
VerifyReport verify_theorem(const std::string& theorem, const std::string& instance,
                            const MajorizationOptions& opts = {});

/// Every theorem on every supported instance, in theorem_ids() order.
std::vector<VerifyReport> verify_all(const MajorizationOptions& opts = {});

}  // namespace dblab
