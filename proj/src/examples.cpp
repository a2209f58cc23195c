#include "dblab/examples.hpp"

#include <cmath>
#include <mutex>

#include "dblab/error.hpp"

namespace dblab {

using FE = FunctionExpr;

namespace {

double param(const std::map<std::string, double>& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::size_t truncation_param(const std::map<std::string, double>& p, std::size_t fallback) {
  const double n = param(p, "N", static_cast<double>(fallback));
  if (!(n >= 2.0) || n != std::floor(n)) throw Error(ErrorKind::InvalidArgument, "truncation N must be an integer >= 2");
  return static_cast<std::size_t>(n);
}

DbSpace pw_space(double a) { return DbSpace::from_E(FE::exp(cplx(0.0, -a)), 1.0, a); }

// sin(pi sqrt w) / (pi sqrt w), entire in w.
cplx sine_ratio(cplx w) {
  if (std::abs(w) < 1e-8) return 1.0 - kPi * kPi * w / 6.0;
  const cplx r = kPi * std::sqrt(w);
  return std::sin(r) / r;
}

}  // namespace

std::vector<std::string> example_ids() { return {"pw", "a20", "a38", "a41", "a45", "poly"}; }

ExampleInstance build_example(const std::string& id, const std::map<std::string, double>& p) {
  if (id == "pw") return build_pw(param(p, "a", 1.0));
  if (id == "a20") return build_a20(param(p, "h", 1.0));
  if (id == "a38") return build_a38(truncation_param(p, defaults::kA38Truncation));
  if (id == "a41")
    return build_a41(param(p, "alpha", 2.0), param(p, "y0", 1.0), truncation_param(p, defaults::kA41Truncation));
  if (id == "a45") return build_a45(truncation_param(p, defaults::kA45Truncation));
  if (id == "poly") return build_poly();
  throw Error(ErrorKind::UnknownInstance, "no shipped example named '" + id + "'");
}

FE pw_kernel(double a, double x) { return cplx(a / kPi, 0.0) * compose_affine(FE::sinc(), a, -a * x); }

ExampleInstance build_pw(double a) {
  if (!(a > 0.0)) throw Error(ErrorKind::InvalidArgument, "PW_a needs a > 0");
  ExampleInstance ex;
  ex.id = "pw";
  ex.parameters = {{"a", a}};
  ex.space = pw_space(a);
  hb_check(*ex.space, standard_hb_grid());
  for (double x : {0.0, kPi / a, 1.3, -2.7})
    ex.functions.push_back({"kernel(" + std::to_string(x) + ")", pw_kernel(a, x), true, std::nullopt});
  const FE half = compose_affine(FE::sinc(), a / 2, 0.0);
  ex.functions.push_back({"sinc(az/2)^2", half * half, true, std::nullopt});
  ex.functions.push_back({"cos(az)", compose_affine(FE::cos(), a, 0.0), false, std::nullopt});
  ex.functions.push_back({"sin(2az)/(2 pi z)", cplx(0.5, 0.0) * pw_kernel(2.0 * a, 0.0), false, std::nullopt});
  ex.majorants.push_back(nabla_majorant(*ex.space, SampledDomain::real_axis()));
  return ex;
}

FE a20_E() {
  const FE z = FE::identity();
  return FE::cos() - cplx(0.0, 1.0) * (z * FE::cos() + FE::sin());
}

ExampleInstance build_a20(double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "the line R + ih needs h > 0");
  ExampleInstance ex;
  ex.id = "a20";
  ex.parameters = {{"h", h}};
  ex.space = DbSpace::from_E(a20_E(), 1.0, 1.0);
  hb_check(*ex.space, standard_hb_grid());
  ex.subspace = pw_space(1.0);
  hb_check(*ex.subspace, standard_hb_grid());
  ex.functions.push_back({"sin(z)/(pi z)", pw_kernel(1.0, 0.0), true, true});
  ex.functions.push_back({"kernel(pi)", pw_kernel(1.0, kPi), true, true});
  ex.functions.push_back({"cos(z)", FE::cos(), true, false});
  ex.functions.push_back({"sin(2z)/(2 pi z)", cplx(0.5, 0.0) * pw_kernel(2.0, 0.0), false, false});
  ex.objects["A"] = FE::cos();
  ex.objects["B"] = FE::identity() * FE::cos() + FE::sin();
  const SampledDomain line = SampledDomain::line(h);
  ex.majorants.push_back(nabla_majorant(*ex.subspace, line));
  ex.majorants.push_back(mS_majorant(FE::exp(cplx(0.0, -1.0)), line));
  ex.notes.push_back("(A, B) = (cos z, sin z) [[1, z], [0, 1]]");
  ex.notes.push_back("H = PW_1 + span{cos z}, an orthogonal sum");
  return ex;
}

cplx a38_constant_closed_form() { return sine_ratio(cplx(0.0, 1.0)); }

EvalResult a38_constant(std::size_t n_max) {
  static std::mutex mu;
  static std::map<std::size_t, EvalResult> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto it = cache.find(n_max);
  if (it != cache.end()) return it->second;
  // prod n^2/(n^2 - i) is the product with zeros n^2 - i at z = -i.
  const EvalResult g = evaluate(FE::canonical_product(ZeroSequence::shifted_squares(n_max)), cplx(0.0, -1.0));
  const EvalResult c{1.0 / g.value, g.abs_error / std::norm(g.value)};
  cache.emplace(n_max, c);
  return c;
}

cplx a38_G_closed_form(cplx z) { return sine_ratio(z + cplx(0.0, 1.0)) / a38_constant_closed_form(); }

ExampleInstance build_a38(std::size_t n_max) {
  if (n_max < 1000) throw Error(ErrorKind::InvalidArgument, "the order-1/2 products need N >= 1000");
  ExampleInstance ex;
  ex.id = "a38";
  ex.parameters = {{"N", static_cast<double>(n_max)}};
  const FE g = FE::canonical_product(ZeroSequence::shifted_squares(n_max));
  const FE gt = FE::canonical_product(ZeroSequence::damped_squares(n_max));
  const FE e0 = FE::polynomial({cplx(0.0, 1.0), 1.0}) * FE::power(gt, 2);
  ex.objects["G"] = g;
  ex.objects["G_tilde"] = gt;
  ex.objects["E0"] = e0;
  ex.space = DbSpace::from_E(e0, 0.5, 0.0);
  hb_check(*ex.space, standard_hb_grid());
  const EvalResult c = a38_constant(n_max);
  ex.parameters.push_back({"c.re", c.value.real()});
  ex.parameters.push_back({"c.im", c.value.imag()});
  ex.parameters.push_back({"c.error", c.abs_error});
  ex.notes.push_back("G(z) = sin(pi sqrt(z+i)) / (pi sqrt(z+i)) / c with c = prod (n^2 - i)/n^2");
  ex.notes.push_back("|G~(x^2)| is comparable to 1/x for x > 1");
  return ex;
}

double A41Data::im_q(double x) const { return evaluate(q, cplx(x, y0)).value.imag(); }

double A41Data::bracket_bound(double x) const {
  if (x < 1.0) return 0.0;
  double k = std::floor(std::pow(x, 1.0 / alpha));
  while (std::pow(k + 1.0, alpha) <= x) k += 1.0;
  while (k > 1.0 && std::pow(k, alpha) > x) k -= 1.0;
  const double d = x - std::pow(k, alpha);
  return 2.0 * y0 * std::pow(k, 2.0 * alpha - 2.0) / (d * d + y0 * y0);
}

A41Data a41_data(double alpha, double y0, std::size_t n_max) {
  if (!(alpha > 1.0)) throw Error(ErrorKind::InvalidArgument, "alpha must exceed 1");
  if (!(y0 > 0.0)) throw Error(ErrorKind::InvalidArgument, "y0 must be positive");
  A41Data d;
  d.alpha = alpha;
  d.y0 = y0;
  d.n_max = n_max;
  d.q = FE::partial_fractions(PoleSequence::symmetric_power(alpha, n_max));
  const FE i = FE::constant(cplx(0.0, 1.0));
  d.theta = (i - d.q) / (i + d.q);
  return d;
}

double a41_weight_sum(double alpha, std::size_t n_max) {
  double s = 0.0;
  for (std::size_t k = n_max; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    s += 2.0 * std::pow(kk, 2.0 * alpha - 2.0) / std::pow(kk, 2.0 * alpha);
  }
  return s;
}

ExampleInstance build_a41(double alpha, double y0, std::size_t n_max) {
  const A41Data d = a41_data(alpha, y0, n_max);
  ExampleInstance ex;
  ex.id = "a41";
  ex.parameters = {{"alpha", alpha}, {"y0", y0}, {"N", static_cast<double>(n_max)}};
  ex.objects["q"] = d.q;
  ex.objects["Theta"] = d.theta;
  // k^(2a-2) / ((k+1)^a - k^a)^2 >= 1 / (a^2 4^(a-1)) for k >= 1
  ex.parameters.push_back({"bracket_constant", 2.0 * y0 / (alpha * alpha * std::pow(4.0, alpha - 1.0) + y0 * y0)});
  ex.notes.push_back("q = i (1 - Theta)/(1 + Theta)");
  return ex;
}

double a45_term(std::size_t n, double x) {
  const double nn = static_cast<double>(n);
  const double l = std::log(nn);
  const double d = x - l;
  return 1.0 / (nn * l * l * (d * d + 1.0 / (nn * nn * l * l * l * l)));
}

double a45_phase_derivative(std::size_t n_max, double x) {
  const ZeroSequence zs = ZeroSequence::log_spaced(n_max);
  return phase_derivative_zero_sum(zs.points(), x, 0.0);
}

double a45_bound(double x) {
  const double l2 = std::log(2.0);
  return std::expm1(x) / (x * x) / (1.0 + 1.0 / (l2 * l2 * l2 * l2));
}

ExampleInstance build_a45(std::size_t n_max) {
  if (n_max < 1000) throw Error(ErrorKind::InvalidArgument, "the log-spaced zero set needs N >= 1000");
  ExampleInstance ex;
  ex.id = "a45";
  ex.parameters = {{"N", static_cast<double>(n_max)}, {"largest_zero_real_part", std::log(static_cast<double>(n_max))}};
  ex.notes.push_back("phi' is evaluated from the zero set only; E itself is not constructed");
  ex.notes.push_back("the truncated series lacks zeros beyond log N, so the growth bound can only hold for x below about log N");
  return ex;
}

ExampleInstance build_poly() {
  ExampleInstance ex;
  ex.id = "poly";
  const FE zi = FE::polynomial({cplx(0.0, 1.0), 1.0});
  ex.space = DbSpace::from_E(FE::power(zi, 3), 0.0, 0.0);
  hb_check(*ex.space, standard_hb_grid());
  ex.subspace = DbSpace::from_E(FE::power(zi, 2), 0.0, 0.0);
  hb_check(*ex.subspace, standard_hb_grid());
  ex.functions.push_back({"1", FE::constant(1.0), true, true});
  ex.functions.push_back({"z", FE::identity(), true, true});
  ex.functions.push_back({"z^2", FE::polynomial({0.0, 0.0, 1.0}), true, false});
  ex.functions.push_back({"z^3", FE::polynomial({0.0, 0.0, 0.0, 1.0}), false, false});
  ex.notes.push_back("L is represented by (z+i)^2, whose norm is equivalent to the norm inherited from H");
  return ex;
}

}  // namespace dblab
