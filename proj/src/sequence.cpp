#include "dblab/sequence.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "dblab/error.hpp"
#include "dblab/quadrature.hpp"

namespace dblab {

namespace {

using Curve = std::function<cplx(double)>;

// Sum over n > N of g(n) by Euler-Maclaurin: the integral from N to infinity
// (mapped to (0, 1] by x = N/u) minus g(N)/2 minus g'(N)/12.
struct EmSum {
  cplx value;
  double error;
};

EmSum em_tail(const Curve& g, const Curve& dg, double n0, double decay_power) {
  // The first kEmOffset omitted terms are summed directly so the neglected
  // Euler-Maclaurin term is small even for short truncations.
  constexpr int kEmOffset = 1000;
  cplx direct{};
  for (int k = kEmOffset; k >= 1; --k) direct += g(n0 + k);
  const double n = n0 + kEmOffset;
  const auto& rule = quad::gauss_legendre(48);
  cplx integral{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    integral += 0.5 * rule.weights[i] * g(n / u) * (n / (u * u));
  }
  const cplx d1 = dg(n);
  EmSum out;
  out.value = direct + (integral - 0.5 * g(n) - d1 / 12.0);
  const double s = decay_power;
  out.error = std::abs(d1) * (s + 1.0) * (s + 2.0) / (720.0 * n * n) + 64.0 * kEps * std::abs(integral);
  return out;
}

// Continuous interpolation of the generator and its derivative in n.
cplx generator(SequenceFamily f, double x, bool conj) {
  cplx z = f == SequenceFamily::ShiftedSquares ? cplx(x * x, -1.0) : cplx(x * x, -x);
  return conj ? std::conj(z) : z;
}

cplx generator_derivative(SequenceFamily f, double x, bool conj) {
  cplx d = f == SequenceFamily::ShiftedSquares ? cplx(2.0 * x, 0.0) : cplx(2.0 * x, -1.0);
  return conj ? std::conj(d) : d;
}

cplx log_spaced_point(long n) {
  const double an = std::abs(static_cast<double>(n));
  const double l = std::log(an);
  return {n > 0 ? l : -l, 1.0 / (an * l * l)};
}

}  // namespace

std::string_view to_string(SequenceFamily family) {
  switch (family) {
    case SequenceFamily::Explicit: return "explicit";
    case SequenceFamily::ShiftedSquares: return "shifted_squares";
    case SequenceFamily::DampedSquares: return "damped_squares";
    case SequenceFamily::LogSpaced: return "log_spaced";
    case SequenceFamily::SymmetricPower: return "symmetric_power";
  }
  return "explicit";
}

SequenceFamily sequence_family_from_string(std::string_view name) {
  for (auto f : {SequenceFamily::Explicit, SequenceFamily::ShiftedSquares,
                 SequenceFamily::DampedSquares, SequenceFamily::LogSpaced,
                 SequenceFamily::SymmetricPower})
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::Parse, "unknown sequence family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- zeros

ZeroSequence ZeroSequence::explicit_points(std::vector<cplx> points, int genus) {
  if (genus != 0 && genus != 1) throw Error(ErrorKind::InvalidArgument, "genus must be 0 or 1");
  for (const cplx& p : points)
    if (p == cplx{}) throw Error(ErrorKind::InvalidArgument, "canonical product zero at the origin");
  ZeroSequence s;
  s.family_ = SequenceFamily::Explicit;
  s.genus_ = genus;
  s.truncation_ = points.size();
  s.points_ = std::move(points);
  return s;
}

ZeroSequence ZeroSequence::shifted_squares(std::size_t n_max, int genus) {
  ZeroSequence s;
  s.family_ = SequenceFamily::ShiftedSquares;
  s.genus_ = genus;
  s.truncation_ = n_max;
  s.build();
  return s;
}

ZeroSequence ZeroSequence::damped_squares(std::size_t n_max, int genus) {
  ZeroSequence s;
  s.family_ = SequenceFamily::DampedSquares;
  s.genus_ = genus;
  s.truncation_ = n_max;
  s.build();
  return s;
}

ZeroSequence ZeroSequence::log_spaced(std::size_t n_max) {
  ZeroSequence s;
  s.family_ = SequenceFamily::LogSpaced;
  s.genus_ = 0;
  s.truncation_ = n_max;
  s.build();
  return s;
}

void ZeroSequence::build() {
  if (genus_ != 0 && genus_ != 1) throw Error(ErrorKind::InvalidArgument, "genus must be 0 or 1");
  tail_ = TailSums{};
  if (family_ == SequenceFamily::Explicit) {
    for (auto& p : points_) p = std::conj(p);
    return;
  }
  points_.clear();
  const auto n_max = static_cast<long>(truncation_);
  if (family_ == SequenceFamily::LogSpaced) {
    if (n_max < 2) throw Error(ErrorKind::InvalidArgument, "log_spaced needs N >= 2");
    points_.reserve(2 * static_cast<std::size_t>(n_max - 1));
    for (long n = -n_max; n <= -2; ++n) points_.push_back(log_spaced_point(n));
    for (long n = 2; n <= n_max; ++n) points_.push_back(log_spaced_point(n));
    if (conjugated_)
      for (auto& p : points_) p = std::conj(p);
    // The reciprocal moduli are not summable; no tail correction exists.
    tail_.first_abs = kInf;
    tail_.remainder = kInf;
    tail_.min_modulus = std::log(static_cast<double>(n_max + 1));
    return;
  }
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "truncation must be positive");
  points_.reserve(truncation_);
  for (long n = 1; n <= n_max; ++n) points_.push_back(generator(family_, static_cast<double>(n), conjugated_));

  const double big_n = static_cast<double>(n_max);
  const SequenceFamily fam = family_;
  const bool cj = conjugated_;
  auto power_sum = [&](int k) {
    const Curve g = [=](double x) { return std::pow(generator(fam, x, cj), -k); };
    const Curve dg = [=](double x) {
      return -static_cast<double>(k) * generator_derivative(fam, x, cj) *
             std::pow(generator(fam, x, cj), -k - 1);
    };
    return em_tail(g, dg, big_n, 2.0 * k);
  };
  auto abs_sum = [&](int k) {
    const Curve g = [=](double x) { return cplx(std::pow(std::abs(generator(fam, x, cj)), -k), 0.0); };
    const Curve dg = [=](double x) {
      const double m = std::abs(generator(fam, x, cj));
      const double dm = std::real(std::conj(generator(fam, x, cj)) * generator_derivative(fam, x, cj)) / m;
      return cplx(-k * std::pow(m, -k - 1) * dm, 0.0);
    };
    const EmSum s = em_tail(g, dg, big_n, 2.0 * k);
    return s.value.real() + s.error;
  };
  const int k1 = genus_ + 1;
  const EmSum first = power_sum(k1);
  const EmSum second = power_sum(k1 + 1);
  tail_.first = first.value;
  tail_.second = second.value;
  tail_.quadrature_error = first.error + second.error;
  tail_.first_abs = abs_sum(k1);
  tail_.remainder = abs_sum(k1 + 2);
  tail_.min_modulus = std::abs(generator(family_, big_n + 1.0, conjugated_));
}

ZeroSequence ZeroSequence::conjugate() const {
  ZeroSequence s = *this;
  s.conjugated_ = !conjugated_;
  s.build();
  return s;
}

ZeroSequence ZeroSequence::with_truncation(std::size_t n_max) const {
  if (family_ == SequenceFamily::Explicit)
    throw Error(ErrorKind::InvalidArgument, "explicit sequences have a fixed length");
  ZeroSequence s = *this;
  s.truncation_ = n_max;
  s.build();
  return s;
}

ZeroSequence ZeroSequence::finite() const {
  return explicit_points(points_, genus_);
}

double ZeroSequence::tail_log_bound(double radius) const {
  if (!has_tail()) return 0.0;
  if (!std::isfinite(tail_.first_abs) || radius > 0.5 * tail_.min_modulus) return kInf;
  const double q = radius / tail_.min_modulus;
  const int m = genus_ + 1;
  return std::pow(radius, m) * tail_.first_abs / (m * (1.0 - q));
}

bool ZeroSequence::genus0_partial_sums_stabilize(double tol, int doublings) const {
  if (family_ == SequenceFamily::Explicit) return true;
  auto point = [&](long n) -> cplx {
    if (family_ == SequenceFamily::LogSpaced) return log_spaced_point(n);
    return generator(family_, static_cast<double>(n), conjugated_);
  };
  double sum = 0.0;
  for (const cplx& p : points_) sum += 1.0 / std::abs(p);
  double last_increment = kInf;
  long n = static_cast<long>(truncation_);
  for (int d = 0; d < doublings; ++d) {
    double increment = 0.0;
    for (long k = n + 1; k <= 2 * n; ++k) {
      increment += 1.0 / std::abs(point(k));
      if (family_ == SequenceFamily::LogSpaced) increment += 1.0 / std::abs(point(-k));
    }
    sum += increment;
    if (increment > last_increment) return false;
    last_increment = increment;
    n *= 2;
  }
  return last_increment < tol * std::max(sum, 1.0);
}

// ---------------------------------------------------------------- poles

PoleSequence PoleSequence::explicit_poles(std::vector<cplx> poles, std::vector<cplx> weights) {
  if (poles.size() != weights.size())
    throw Error(ErrorKind::InvalidArgument, "pole and weight lists differ in length");
  for (const cplx& p : poles)
    if (p == cplx{}) throw Error(ErrorKind::InvalidArgument, "pole at the origin");
  PoleSequence s;
  s.family_ = SequenceFamily::Explicit;
  s.truncation_ = poles.size();
  s.poles_ = std::move(poles);
  s.weights_ = std::move(weights);
  return s;
}

PoleSequence PoleSequence::symmetric_power(double alpha, std::size_t n_max) {
  if (!(alpha > 1.0)) throw Error(ErrorKind::InvalidArgument, "alpha must exceed 1");
  PoleSequence s;
  s.family_ = SequenceFamily::SymmetricPower;
  s.alpha_ = alpha;
  s.truncation_ = n_max;
  s.build();
  return s;
}

void PoleSequence::build() {
  tail_ = TailSums{};
  if (family_ == SequenceFamily::Explicit) {
    for (auto& p : poles_) p = std::conj(p);
    for (auto& w : weights_) w = std::conj(w);
    return;
  }
  if (truncation_ < 1) throw Error(ErrorKind::InvalidArgument, "truncation must be positive");
  poles_.resize(truncation_);
  weights_.resize(truncation_);
  for (std::size_t k = 1; k <= truncation_; ++k) {
    const double kd = static_cast<double>(k);
    poles_[k - 1] = std::pow(kd, alpha_);
    weights_[k - 1] = 2.0 * std::pow(kd, 2.0 * alpha_ - 2.0);
  }
  // Real poles and weights: conjugation leaves the series unchanged.
  const double n = static_cast<double>(truncation_);
  // Sum over k > N of 2 k^-s.
  auto power_tail = [&](double s) {
    const Curve g = [=](double x) { return cplx(2.0 * std::pow(x, -s), 0.0); };
    const Curve dg = [=](double x) { return cplx(-2.0 * s * std::pow(x, -s - 1.0), 0.0); };
    return em_tail(g, dg, n, s);
  };
  const EmSum first = power_tail(2.0);
  const EmSum second = power_tail(alpha_ + 2.0);
  const EmSum rem = power_tail(2.0 * alpha_ + 2.0);
  tail_.first = first.value;
  tail_.second = second.value;
  tail_.first_abs = first.value.real() + first.error;
  tail_.remainder = rem.value.real() + rem.error;
  tail_.quadrature_error = first.error + second.error;
  tail_.min_modulus = std::pow(n + 1.0, alpha_);
}

PoleSequence PoleSequence::conjugate() const {
  PoleSequence s = *this;
  s.conjugated_ = !conjugated_;
  s.build();
  return s;
}

PoleSequence PoleSequence::with_truncation(std::size_t n_max) const {
  if (family_ == SequenceFamily::Explicit)
    throw Error(ErrorKind::InvalidArgument, "explicit sequences have a fixed length");
  PoleSequence s = *this;
  s.truncation_ = n_max;
  s.build();
  return s;
}

}  // namespace dblab
