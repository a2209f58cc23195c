#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dblab/types.hpp"

namespace dblab {

/// Named generators for the infinite sequences used by the shipped examples.
enum class SequenceFamily {
  Explicit,        // finite user-supplied list
  ShiftedSquares,  // n^2 - i,            n = 1..N
  DampedSquares,   // n^2 - i n,          n = 1..N
  LogSpaced,       // sign(n) log|n| + i / (|n| log^2|n|),  2 <= |n| <= N
  SymmetricPower,  // poles k^alpha with weight 2 k^(2 alpha - 2), k = 1..N (n and -n merged)
};

std::string_view to_string(SequenceFamily family);
SequenceFamily sequence_family_from_string(std::string_view name);

/// Sums over the omitted indices n > N, used to correct and bound truncated
/// products and series. `first`/`second` are signed sums of the generator's
/// correction terms; `remainder` bounds the first term not corrected for.
struct TailSums {
  cplx first{};              // sum over omitted n of g1(n)
  cplx second{};             // sum over omitted n of g2(n)
  double first_abs = 0.0;    // bound on sum |g1(n)|
  double remainder = 0.0;    // bound on sum |g3(n)|
  double quadrature_error = 0.0;  // Euler-Maclaurin estimate of the error in `first`
  double min_modulus = kInf;      // lower bound of |z_n| over omitted n
};

/// Zeros of a canonical product. Genus 0 uses the factors (1 - z/z_n), genus 1
/// the factors (1 - z/z_n) exp(z/z_n).
class ZeroSequence {
 public:
  static ZeroSequence explicit_points(std::vector<cplx> points, int genus = 0);
  static ZeroSequence shifted_squares(std::size_t n_max, int genus = 0);
  static ZeroSequence damped_squares(std::size_t n_max, int genus = 0);
  static ZeroSequence log_spaced(std::size_t n_max);

  SequenceFamily family() const { return family_; }
  int genus() const { return genus_; }
  std::size_t truncation() const { return truncation_; }
  bool conjugated() const { return conjugated_; }
  std::span<const cplx> points() const { return points_; }

  /// Same family with every zero replaced by its complex conjugate.
  ZeroSequence conjugate() const;
  /// Same family truncated at a different index.
  ZeroSequence with_truncation(std::size_t n_max) const;
  /// Explicit sequence holding the current truncation and no tail.
  ZeroSequence finite() const;

  /// Tail sums for the product correction: for genus 0, g1 = 1/z_n,
  /// g2 = 1/z_n^2, g3 = |z_n|^-3; for genus 1 the powers shift by one.
  const TailSums& tail() const { return tail_; }
  bool has_tail() const { return family_ != SequenceFamily::Explicit; }

  /// Bound on |log of the omitted tail product| on |z| <= radius, without any
  /// tail correction. Infinite when radius exceeds half the smallest omitted
  /// zero modulus. Nonincreasing in the truncation index.
  double tail_log_bound(double radius) const;

  /// Partial sums of sum 1/|z_n| at N, 2N, 4N, ... (up to `doublings`) for the
  /// genus-0 convergence check; returns true when successive increments drop
  /// below `tol` and keep shrinking.
  bool genus0_partial_sums_stabilize(double tol, int doublings = 6) const;

 private:
  ZeroSequence() = default;
  void build();

  SequenceFamily family_ = SequenceFamily::Explicit;
  int genus_ = 0;
  std::size_t truncation_ = 0;
  bool conjugated_ = false;
  std::vector<cplx> points_;
  TailSums tail_;
};

/// Poles and weights of the series sum_n w_n (1/(p_n - z) - 1/p_n).
class PoleSequence {
 public:
  static PoleSequence explicit_poles(std::vector<cplx> poles, std::vector<cplx> weights);
  static PoleSequence symmetric_power(double alpha, std::size_t n_max);

  SequenceFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  std::size_t truncation() const { return truncation_; }
  bool conjugated() const { return conjugated_; }
  std::span<const cplx> poles() const { return poles_; }
  std::span<const cplx> weights() const { return weights_; }

  PoleSequence conjugate() const;
  PoleSequence with_truncation(std::size_t n_max) const;

  /// g1 = w/p^2, g2 = w/p^3, g3 = |w|/|p|^4 over the omitted indices.
  const TailSums& tail() const { return tail_; }
  bool has_tail() const { return family_ != SequenceFamily::Explicit; }

 private:
  PoleSequence() = default;
  void build();

  SequenceFamily family_ = SequenceFamily::Explicit;
  double alpha_ = 0.0;
  std::size_t truncation_ = 0;
  bool conjugated_ = false;
  std::vector<cplx> poles_;
  std::vector<cplx> weights_;
  TailSums tail_;
};

}  // namespace dblab
