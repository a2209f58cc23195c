#pragma once

#include <memory>
#include <vector>

#include "dblab/sequence.hpp"
#include "dblab/types.hpp"

namespace dblab {

/// Value with an absolute error estimate (truncation plus roundoff).
struct EvalResult {
  cplx value{};
  double abs_error = 0.0;
};

/// value = mantissa * exp(log_scale), abs error = error * exp(log_scale).
/// The mantissa is unimodular or zero, so |f| never overflows.
struct ScaledValue {
  cplx mantissa{1.0, 0.0};
  double log_scale = 0.0;
  double error = 0.0;

  double log_abs() const;  // -inf for an exact zero
  cplx value() const;
};

/// Immutable expression tree for an entire (or meromorphic) function.
/// Copies share nodes; evaluation is pure and thread-safe.
class FunctionExpr {
 public:
  enum class Kind {
    Constant,
    Identity,
    Exp,         // exp(c z)
    Sin,
    Cos,
    Sinc,        // sin z / z, entire
    Polynomial,  // sum_k coeffs[k] z^k
    Affine,      // child(a z + b)
    Sum,
    Product,
    Quotient,
    Power,       // child^n, n >= 0
    Sharp,       // conj(child(conj z))
    CanonicalProduct,
    PartialFractions,
  };

  struct Node;

  FunctionExpr();  // the constant 0

  static FunctionExpr constant(cplx c);
  static FunctionExpr identity();
  static FunctionExpr exp(cplx c);
  static FunctionExpr sin();
  static FunctionExpr cos();
  static FunctionExpr sinc();
  static FunctionExpr polynomial(std::vector<cplx> coeffs);
  static FunctionExpr affine(cplx a, cplx b, FunctionExpr inner);
  static FunctionExpr sum(std::vector<FunctionExpr> terms);
  static FunctionExpr product(std::vector<FunctionExpr> factors);
  static FunctionExpr quotient(FunctionExpr num, FunctionExpr den);
  static FunctionExpr power(FunctionExpr base, int exponent);
  static FunctionExpr sharp_node(FunctionExpr inner);
  static FunctionExpr canonical_product(ZeroSequence zeros);
  static FunctionExpr canonical_product(std::shared_ptr<const ZeroSequence> zeros);
  static FunctionExpr partial_fractions(PoleSequence poles);
  static FunctionExpr partial_fractions(std::shared_ptr<const PoleSequence> poles);

  Kind kind() const;
  cplx param_a() const;  // Constant value, Exp rate, Affine slope
  cplx param_b() const;  // Affine offset
  int exponent() const;
  const std::vector<cplx>& coefficients() const;
  const std::vector<FunctionExpr>& children() const;
  const ZeroSequence* zeros() const;
  const PoleSequence* poles() const;

  /// True when the node is the literal constant `c`.
  bool is_constant(cplx c) const;

 private:
  friend struct FunctionExprAccess;
  explicit FunctionExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

FunctionExpr operator+(const FunctionExpr& f, const FunctionExpr& g);
FunctionExpr operator-(const FunctionExpr& f, const FunctionExpr& g);
FunctionExpr operator-(const FunctionExpr& f);
FunctionExpr operator*(const FunctionExpr& f, const FunctionExpr& g);
FunctionExpr operator/(const FunctionExpr& f, const FunctionExpr& g);
FunctionExpr operator*(cplx c, const FunctionExpr& f);

/// f(a z + b).
FunctionExpr compose_affine(const FunctionExpr& f, cplx a, cplx b);

/// Throws Error(PoleHit) when z is within the exclusion radius of a zero of a
/// quotient denominator or of a series pole, and Error(TruncationBudgetExceeded)
/// when |z| is too large for the tail correction of a truncated product.
EvalResult evaluate(const FunctionExpr& f, cplx z);
ScaledValue evaluate_scaled(const FunctionExpr& f, cplx z);
double log_modulus(const FunctionExpr& f, cplx z);

/// Structural conjugation: coefficients and zero/pole sets are conjugated, so
/// the result evaluates to conj(f(conj z)). sharp(sharp(f)) rebuilds f.
FunctionExpr sharp(const FunctionExpr& f);

struct DerivativeOptions {
  double radius_factor = 1e-3;  // r = radius_factor * (1 + |z|)
  int nodes = 64;
};

/// order-th derivative (1 or 2) by the trapezoid rule on a circle. The error
/// estimate compares against the rule with half the nodes. Throws
/// Error(RadiusTooLarge) when the circle meets an excluded pole.
EvalResult derivative(const FunctionExpr& f, cplx z, int order, const DerivativeOptions& opts = {});

/// log(1 + w) accurate for small |w|.
cplx log1p_complex(cplx w);

}  // namespace dblab
