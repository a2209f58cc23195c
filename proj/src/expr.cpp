#include "dblab/expr.hpp"

#include <cmath>
#include <string>

#include "dblab/defaults.hpp"
#include "dblab/error.hpp"

namespace dblab {

struct FunctionExpr::Node {
  Kind kind = Kind::Constant;
  cplx a{};
  cplx b{};
  int exponent = 0;
  std::vector<cplx> coeffs;
  std::vector<FunctionExpr> children;
  std::shared_ptr<const ZeroSequence> zeros;
  std::shared_ptr<const PoleSequence> poles;
};

namespace {

using Node = FunctionExpr::Node;
using Kind = FunctionExpr::Kind;

std::shared_ptr<Node> make(Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

// Compensated summation (Neumaier) applied to each component.
class CompensatedSum {
 public:
  void add(cplx x) {
    add_one(re_, cre_, x.real());
    add_one(im_, cim_, x.imag());
  }
  cplx value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_one(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

ScaledValue normalized(cplx m, double s, double err) {
  const double a = std::abs(m);
  if (a == 0.0 || !std::isfinite(a)) return {m, s, err};
  return {m / a, s + std::log(a), err / a};
}

// e^{iz} and e^{-iz} divided by e^{|Im z|}.
void scaled_exponentials(cplx z, cplx& plus, cplx& minus, double& scale) {
  const double x = z.real(), y = z.imag();
  scale = std::abs(y);
  plus = std::polar(std::exp(-y - scale), x);
  minus = std::polar(std::exp(y - scale), -x);
}

ScaledValue scaled_sin(cplx z) {
  const double err = kEps * (1.0 + std::abs(z));
  if (std::abs(z.imag()) < 1.0) return normalized(std::sin(z), 0.0, err * std::cosh(z.imag()));
  cplx p, m;
  double s;
  scaled_exponentials(z, p, m, s);
  return normalized((p - m) / cplx(0.0, 2.0), s, err);
}

ScaledValue scaled_cos(cplx z) {
  const double err = kEps * (1.0 + std::abs(z));
  if (std::abs(z.imag()) < 1.0) return normalized(std::cos(z), 0.0, err * std::cosh(z.imag()));
  cplx p, m;
  double s;
  scaled_exponentials(z, p, m, s);
  return normalized(0.5 * (p + m), s, err);
}

ScaledValue scaled_sinc(cplx z) {
  if (std::abs(z) < 0.1) {
    const cplx z2 = z * z;
    // Taylor series of sin z / z through z^10.
    const cplx v =
        1.0 + z2 * (-1.0 / 6 + z2 * (1.0 / 120 + z2 * (-1.0 / 5040 +
                                                        z2 * (1.0 / 362880 + z2 * (-1.0 / 39916800)))));
    return normalized(v, 0.0, 2.0 * kEps);
  }
  ScaledValue s = scaled_sin(z);
  const double az = std::abs(z);
  return normalized(s.mantissa / z, s.log_scale, s.error / az + kEps / az);
}

ScaledValue eval_node(const Node& n, cplx z);

ScaledValue eval_expr(const FunctionExpr& f, cplx z);

void check_denominator(const FunctionExpr& den, const ScaledValue& d, cplx z) {
  if (d.mantissa == cplx{}) throw Error(ErrorKind::PoleHit, "denominator vanishes at the evaluation point");
  const double modulus = std::exp(d.log_abs());
  if (modulus >= defaults::kPoleProbeThreshold) return;
  // Newton distance |den / den'| to the nearest denominator zero.
  EvalResult slope;
  try {
    slope = derivative(den, z, 1);
  } catch (const Error&) {
    throw Error(ErrorKind::PoleHit, "denominator nearly vanishes and its slope is not computable");
  }
  const double dist = std::abs(slope.value) > 0.0 ? modulus / std::abs(slope.value) : 0.0;
  if (dist < defaults::kPoleExclusion * (1.0 + std::abs(z)))
    throw Error(ErrorKind::PoleHit, "point lies within the exclusion radius of a denominator zero");
}

ScaledValue eval_canonical(const ZeroSequence& seq, cplx z) {
  const double az = std::abs(z);
  if (seq.has_tail()) {
    if (!std::isfinite(seq.tail().first_abs))
      throw Error(ErrorKind::TruncationBudgetExceeded,
                  "zero family has no summable tail; evaluate its finite truncation instead");
    if (az > 0.5 * seq.tail().min_modulus)
      throw Error(ErrorKind::TruncationBudgetExceeded,
                  "|z| = " + std::to_string(az) + " exceeds half the first omitted zero modulus");
  }
  const int genus = seq.genus();
  CompensatedSum sum;
  double abs_sum = 0.0;
  for (const cplx& p : seq.points()) {
    const cplx u = z / p;
    if (u == cplx(1.0, 0.0)) return {cplx{}, 0.0, 0.0};
    cplx term;
    if (genus == 0) {
      term = log1p_complex(-u);
    } else if (std::abs(u) < 1e-3) {
      cplx acc{}, pw = u;
      for (int k = 2; k <= 8; ++k) {
        pw *= u;
        acc += pw / static_cast<double>(k);
      }
      term = -acc;
    } else {
      term = log1p_complex(-u) + u;
    }
    sum.add(term);
    abs_sum += std::abs(term);
  }

  double log_error = 0.0;
  double tail_abs = 0.0;
  if (seq.has_tail()) {
    const TailSums& t = seq.tail();
    const int m = genus + 1;
    const cplx zm = std::pow(z, m);
    sum.add(-zm * t.first / static_cast<double>(m));
    sum.add(-zm * z * t.second / static_cast<double>(m + 1));
    const double q = az / t.min_modulus;
    const double azm = std::pow(az, m);
    log_error += azm * az * az * t.remainder / ((m + 2) * (1.0 - q));
    log_error += azm * (1.0 + az) * t.quadrature_error;
    tail_abs = 2.0 * azm * t.first_abs / m;
  }
  const cplx log_value = sum.value();
  log_error += 4.0 * kEps * (abs_sum + tail_abs + std::abs(log_value));
  return {std::polar(1.0, log_value.imag()), log_value.real(), std::expm1(log_error)};
}

ScaledValue eval_partial_fractions(const PoleSequence& seq, cplx z) {
  const double az = std::abs(z);
  const double excl = defaults::kPoleExclusion * (1.0 + az);
  if (seq.has_tail() && az > 0.5 * seq.tail().min_modulus)
    throw Error(ErrorKind::TruncationBudgetExceeded,
                "|z| = " + std::to_string(az) + " exceeds half the first omitted pole modulus");
  CompensatedSum sum;
  double abs_sum = 0.0;
  const auto poles = seq.poles();
  const auto weights = seq.weights();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const cplx p = poles[i];
    if (std::abs(z - p) < excl) throw Error(ErrorKind::PoleHit, "point lies on a series pole");
    const cplx term = weights[i] * z / (p * (p - z));
    sum.add(term);
    abs_sum += std::abs(term);
  }
  double err = 0.0;
  double tail_abs = 0.0;
  if (seq.has_tail()) {
    const TailSums& t = seq.tail();
    sum.add(z * t.first);
    sum.add(z * z * t.second);
    const double q = az / t.min_modulus;
    err += az * az * az * t.remainder / (1.0 - q);
    err += az * (1.0 + az) * t.quadrature_error;
    tail_abs = 2.0 * az * t.first_abs;
  }
  const cplx v = sum.value();
  err += 4.0 * kEps * (abs_sum + tail_abs + std::abs(v));
  return normalized(v, 0.0, err);
}

ScaledValue eval_node(const Node& n, cplx z) {
  switch (n.kind) {
    case Kind::Constant:
      return normalized(n.a, 0.0, 0.0);
    case Kind::Identity:
      return normalized(z, 0.0, 0.0);
    case Kind::Exp: {
      const cplx w = n.a * z;
      return {std::polar(1.0, w.imag()), w.real(), kEps * (1.0 + std::abs(w))};
    }
    case Kind::Sin:
      return scaled_sin(z);
    case Kind::Cos:
      return scaled_cos(z);
    case Kind::Sinc:
      return scaled_sinc(z);
    case Kind::Polynomial: {
      cplx v{};
      double bound = 0.0;
      const double az = std::abs(z);
      for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) {
        v = v * z + *it;
        bound = bound * az + std::abs(*it);
      }
      const double err = 2.0 * static_cast<double>(n.coeffs.size() + 1) * kEps * bound;
      return normalized(v, 0.0, err);
    }
    case Kind::Affine: {
      const cplx w = n.a * z + n.b;
      ScaledValue r = eval_expr(n.children[0], w);
      r.error += kEps * (1.0 + std::abs(w)) * std::abs(r.mantissa);
      return r;
    }
    case Kind::Sum: {
      std::vector<ScaledValue> parts;
      parts.reserve(n.children.size());
      double top = -kInf;
      for (const auto& c : n.children) {
        parts.push_back(eval_expr(c, z));
        if (parts.back().mantissa != cplx{}) top = std::max(top, parts.back().log_scale);
      }
      if (top == -kInf) {
        // Every term is an exact zero.
        double err = 0.0;
        for (const auto& p : parts) err += p.error * std::exp(p.log_scale);
        return {cplx{}, 0.0, err};
      }
      CompensatedSum s;
      double err = 0.0, mag = 0.0;
      for (const auto& p : parts) {
        const double w = std::exp(p.log_scale - top);
        s.add(p.mantissa * w);
        err += p.error * w;
        mag += std::abs(p.mantissa) * w;
      }
      return normalized(s.value(), top, err + kEps * mag);
    }
    case Kind::Product: {
      cplx m{1.0, 0.0};
      double s = 0.0, err = 0.0, rel = 0.0;
      bool zero = false;
      for (const auto& c : n.children) {
        const ScaledValue r = eval_expr(c, z);
        if (r.mantissa == cplx{}) {
          zero = true;
          err += r.error;  // absolute error in units of the other factors' scale; approximate
        }
        m *= r.mantissa;
        s += r.log_scale;
        rel += r.mantissa == cplx{} ? 0.0 : r.error;
      }
      if (zero) return {cplx{}, s, err};
      return normalized(m, s, rel + static_cast<double>(n.children.size()) * kEps);
    }
    case Kind::Quotient: {
      const ScaledValue d = eval_expr(n.children[1], z);
      check_denominator(n.children[1], d, z);
      const ScaledValue num = eval_expr(n.children[0], z);
      const cplx m = num.mantissa / d.mantissa;
      const double dm = std::abs(d.mantissa);
      const double err = (num.error + std::abs(m) * d.error) / dm + kEps * std::abs(m);
      return normalized(m, num.log_scale - d.log_scale, err);
    }
    case Kind::Power: {
      const ScaledValue r = eval_expr(n.children[0], z);
      const int k = n.exponent;
      if (k == 0) return {cplx{1.0, 0.0}, 0.0, 0.0};
      const cplx m = std::pow(r.mantissa, k);
      return normalized(m, k * r.log_scale, k * r.error + k * kEps * std::abs(m));
    }
    case Kind::Sharp: {
      ScaledValue r = eval_expr(n.children[0], std::conj(z));
      r.mantissa = std::conj(r.mantissa);
      return r;
    }
    case Kind::CanonicalProduct:
      return eval_canonical(*n.zeros, z);
    case Kind::PartialFractions:
      return eval_partial_fractions(*n.poles, z);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expression node");
}

}  // namespace

// ------------------------------------------------------------- ScaledValue

double ScaledValue::log_abs() const {
  const double a = std::abs(mantissa);
  return a == 0.0 ? -kInf : log_scale + std::log(a);
}

cplx ScaledValue::value() const {
  if (mantissa == cplx{}) return {};
  return mantissa * std::exp(log_scale);
}

// ------------------------------------------------------------ FunctionExpr

struct FunctionExprAccess {
  static const Node& node(const FunctionExpr& f);
};

namespace {
ScaledValue eval_expr(const FunctionExpr& f, cplx z);
}

FunctionExpr::FunctionExpr() : node_(make(Kind::Constant)) {}

FunctionExpr FunctionExpr::constant(cplx c) {
  auto n = make(Kind::Constant);
  n->a = c;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::identity() { return FunctionExpr(make(Kind::Identity)); }
FunctionExpr FunctionExpr::exp(cplx c) {
  auto n = make(Kind::Exp);
  n->a = c;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::sin() { return FunctionExpr(make(Kind::Sin)); }
FunctionExpr FunctionExpr::cos() { return FunctionExpr(make(Kind::Cos)); }
FunctionExpr FunctionExpr::sinc() { return FunctionExpr(make(Kind::Sinc)); }

FunctionExpr FunctionExpr::polynomial(std::vector<cplx> coeffs) {
  auto n = make(Kind::Polynomial);
  n->coeffs = std::move(coeffs);
  return FunctionExpr(n);
}

FunctionExpr FunctionExpr::affine(cplx a, cplx b, FunctionExpr inner) {
  auto n = make(Kind::Affine);
  n->a = a;
  n->b = b;
  n->children = {std::move(inner)};
  return FunctionExpr(n);
}

FunctionExpr FunctionExpr::sum(std::vector<FunctionExpr> terms) {
  if (terms.empty()) return constant(0.0);
  if (terms.size() == 1) return terms.front();
  auto n = make(Kind::Sum);
  n->children = std::move(terms);
  return FunctionExpr(n);
}

FunctionExpr FunctionExpr::product(std::vector<FunctionExpr> factors) {
  if (factors.empty()) return constant(1.0);
  if (factors.size() == 1) return factors.front();
  auto n = make(Kind::Product);
  n->children = std::move(factors);
  return FunctionExpr(n);
}

FunctionExpr FunctionExpr::quotient(FunctionExpr num, FunctionExpr den) {
  auto n = make(Kind::Quotient);
  n->children = {std::move(num), std::move(den)};
  return FunctionExpr(n);
}

FunctionExpr FunctionExpr::power(FunctionExpr base, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidArgument, "power exponent must be nonnegative");
  auto n = make(Kind::Power);
  n->exponent = exponent;
  n->children = {std::move(base)};
  return FunctionExpr(n);
}

FunctionExpr FunctionExpr::sharp_node(FunctionExpr inner) {
  auto n = make(Kind::Sharp);
  n->children = {std::move(inner)};
  return FunctionExpr(n);
}

FunctionExpr FunctionExpr::canonical_product(ZeroSequence zeros) {
  return canonical_product(std::make_shared<const ZeroSequence>(std::move(zeros)));
}

FunctionExpr FunctionExpr::canonical_product(std::shared_ptr<const ZeroSequence> zeros) {
  auto n = make(Kind::CanonicalProduct);
  n->zeros = std::move(zeros);
  return FunctionExpr(n);
}

FunctionExpr FunctionExpr::partial_fractions(PoleSequence poles) {
  return partial_fractions(std::make_shared<const PoleSequence>(std::move(poles)));
}

FunctionExpr FunctionExpr::partial_fractions(std::shared_ptr<const PoleSequence> poles) {
  auto n = make(Kind::PartialFractions);
  n->poles = std::move(poles);
  return FunctionExpr(n);
}

FunctionExpr::Kind FunctionExpr::kind() const { return node_->kind; }
cplx FunctionExpr::param_a() const { return node_->a; }
cplx FunctionExpr::param_b() const { return node_->b; }
int FunctionExpr::exponent() const { return node_->exponent; }
const std::vector<cplx>& FunctionExpr::coefficients() const { return node_->coeffs; }
const std::vector<FunctionExpr>& FunctionExpr::children() const { return node_->children; }
const ZeroSequence* FunctionExpr::zeros() const { return node_->zeros.get(); }
const PoleSequence* FunctionExpr::poles() const { return node_->poles.get(); }

bool FunctionExpr::is_constant(cplx c) const {
  return node_->kind == Kind::Constant && node_->a == c;
}

const Node& FunctionExprAccess::node(const FunctionExpr& f) { return *f.node_; }

namespace {
ScaledValue eval_expr(const FunctionExpr& f, cplx z) {
  return eval_node(FunctionExprAccess::node(f), z);
}
}  // namespace

// --------------------------------------------------------------- operators

FunctionExpr operator+(const FunctionExpr& f, const FunctionExpr& g) {
  if (f.is_constant(0.0)) return g;
  if (g.is_constant(0.0)) return f;
  return FunctionExpr::sum({f, g});
}

FunctionExpr operator-(const FunctionExpr& f) { return cplx(-1.0, 0.0) * f; }

FunctionExpr operator-(const FunctionExpr& f, const FunctionExpr& g) { return f + (-g); }

FunctionExpr operator*(const FunctionExpr& f, const FunctionExpr& g) {
  if (f.is_constant(1.0)) return g;
  if (g.is_constant(1.0)) return f;
  return FunctionExpr::product({f, g});
}

FunctionExpr operator/(const FunctionExpr& f, const FunctionExpr& g) {
  return FunctionExpr::quotient(f, g);
}

FunctionExpr operator*(cplx c, const FunctionExpr& f) {
  if (c == cplx(1.0, 0.0)) return f;
  return FunctionExpr::product({FunctionExpr::constant(c), f});
}

FunctionExpr compose_affine(const FunctionExpr& f, cplx a, cplx b) {
  return FunctionExpr::affine(a, b, f);
}

// -------------------------------------------------------------- evaluation

EvalResult evaluate(const FunctionExpr& f, cplx z) {
  const ScaledValue s = evaluate_scaled(f, z);
  EvalResult r;
  r.value = s.value();
  r.abs_error = s.error * std::exp(s.log_scale);
  if (!std::isfinite(r.abs_error)) r.abs_error = std::numeric_limits<double>::max();
  return r;
}

ScaledValue evaluate_scaled(const FunctionExpr& f, cplx z) { return eval_expr(f, z); }

double log_modulus(const FunctionExpr& f, cplx z) { return evaluate_scaled(f, z).log_abs(); }

cplx log1p_complex(cplx w) {
  if (std::abs(w) >= 0.5) return std::log(1.0 + w);
  const double x = w.real(), y = w.imag();
  return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

FunctionExpr sharp(const FunctionExpr& f) {
  switch (f.kind()) {
    case Kind::Constant:
      return FunctionExpr::constant(std::conj(f.param_a()));
    case Kind::Identity:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Sinc:
      return f;
    case Kind::Exp:
      return FunctionExpr::exp(std::conj(f.param_a()));
    case Kind::Polynomial: {
      std::vector<cplx> c = f.coefficients();
      for (auto& v : c) v = std::conj(v);
      return FunctionExpr::polynomial(std::move(c));
    }
    case Kind::Affine:
      return FunctionExpr::affine(std::conj(f.param_a()), std::conj(f.param_b()),
                                  sharp(f.children()[0]));
    case Kind::Sum:
    case Kind::Product: {
      std::vector<FunctionExpr> c;
      c.reserve(f.children().size());
      for (const auto& ch : f.children()) c.push_back(sharp(ch));
      return f.kind() == Kind::Sum ? FunctionExpr::sum(std::move(c))
                                   : FunctionExpr::product(std::move(c));
    }
    case Kind::Quotient:
      return FunctionExpr::quotient(sharp(f.children()[0]), sharp(f.children()[1]));
    case Kind::Power:
      return FunctionExpr::power(sharp(f.children()[0]), f.exponent());
    case Kind::Sharp:
      return f.children()[0];
    case Kind::CanonicalProduct:
      return FunctionExpr::canonical_product(f.zeros()->conjugate());
    case Kind::PartialFractions:
      return FunctionExpr::partial_fractions(f.poles()->conjugate());
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expression node");
}

EvalResult derivative(const FunctionExpr& f, cplx z, int order, const DerivativeOptions& opts) {
  if (order < 1 || order > 2) throw Error(ErrorKind::InvalidArgument, "derivative order must be 1 or 2");
  const int m = opts.nodes;
  if (m < 4 || m % 2 != 0) throw Error(ErrorKind::InvalidArgument, "node count must be even and >= 4");
  const double r = opts.radius_factor * (1.0 + std::abs(z));
  std::vector<cplx> values(static_cast<std::size_t>(m));
  double max_abs = 0.0, max_err = 0.0;
  for (int j = 0; j < m; ++j) {
    const cplx w = std::polar(1.0, 2.0 * kPi * j / m);
    EvalResult e;
    try {
      e = evaluate(f, z + r * w);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::PoleHit)
        throw Error(ErrorKind::RadiusTooLarge, "derivative circle meets a pole: " + err.detail());
      throw;
    }
    // Multiply by w^{-order} now so both node counts reuse the samples.
    values[static_cast<std::size_t>(j)] = e.value * std::pow(std::conj(w), order);
    max_abs = std::max(max_abs, std::abs(e.value));
    max_err = std::max(max_err, e.abs_error);
  }
  CompensatedSum full, half, mean;
  for (int j = 0; j < m; ++j) {
    full.add(values[static_cast<std::size_t>(j)]);
    if (j % 2 == 0) half.add(values[static_cast<std::size_t>(j)]);
    mean.add(values[static_cast<std::size_t>(j)] * std::pow(std::polar(1.0, 2.0 * kPi * j / m), order));
  }
  // A pole inside the circle breaks the mean-value identity.
  const EvalResult centre = evaluate(f, z);
  const cplx mean_value = mean.value() / static_cast<double>(m);
  if (std::abs(mean_value - centre.value) > 1e-6 * max_abs + 4.0 * (max_err + centre.abs_error))
    throw Error(ErrorKind::RadiusTooLarge, "derivative circle encloses a pole");
  const double factorial = order == 1 ? 1.0 : 2.0;
  const double scale = factorial / std::pow(r, order);
  const cplx d_full = full.value() * (scale / m);
  const cplx d_half = half.value() * (scale / (m / 2));
  EvalResult out;
  out.value = d_full;
  out.abs_error = std::abs(d_full - d_half) + scale * (max_err + 4.0 * kEps * max_abs);
  return out;
}

}  // namespace dblab
