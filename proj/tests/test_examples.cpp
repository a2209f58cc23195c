#include <cmath>
#include <random>

#include "doctest.h"
#include "dblab/error.hpp"
#include "dblab/examples.hpp"
#include "dblab/fit.hpp"

using namespace dblab;
using FE = FunctionExpr;

namespace {

void check_shipped_verdicts(const ExampleInstance& ex) {
  for (const ShippedFunction& s : ex.functions) {
    INFO(ex.id << ": " << s.name);
    const Verdict in_h = membership(*ex.space, s.f).verdict;
    CHECK(in_h == (s.in_space ? Verdict::In : Verdict::Out));
    if (ex.subspace && s.in_subspace) {
      const Verdict in_l = membership(*ex.subspace, s.f).verdict;
      CHECK(in_l == (*s.in_subspace ? Verdict::In : Verdict::Out));
    }
  }
}

}  // namespace

TEST_CASE("Paley-Wiener instances") {
  const ExampleInstance p1 = build_pw(1.0);
  CHECK(p1.space->hb_verified);
  CHECK(std::abs(kernel(*p1.space, 0.0, 0.0) - 1 / kPi) < 1e-12);
  for (double t : {-30.0, -1.0, 0.0, 2.2, 77.0})
    CHECK(std::abs(phase_derivative(*p1.space, t, PhaseRoute::Kernel) - 1.0) < 1e-10);
  check_shipped_verdicts(p1);

  const ExampleInstance p2 = build_pw(2.0);
  CHECK(membership(*p2.space, pw_kernel(2.0, 0.0)).verdict == Verdict::In);
  CHECK_THROWS_AS(build_pw(0.0), Error);
}

TEST_CASE("the A20 space") {
  const ExampleInstance ex = build_a20();
  CHECK(ex.space->hb_verified);
  CHECK(ex.subspace->hb_verified);
  CHECK(membership(*ex.space, FE::cos()).verdict == Verdict::In);
  CHECK(membership(*ex.subspace, FE::cos()).verdict == Verdict::Out);
  check_shipped_verdicts(ex);

  // E = A - iB with A = cos z, B = z cos z + sin z
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-6, 6), v(0, 4);
  const FE& a = ex.objects.at("A");
  const FE& b = ex.objects.at("B");
  for (int i = 0; i < 100; ++i) {
    const cplx z(u(rng), v(rng));
    const cplx e = evaluate(ex.space->E, z).value;
    const cplx ab = evaluate(a, z).value - cplx(0, 1) * evaluate(b, z).value;
    CHECK(std::abs(std::norm(e) - std::norm(ab)) <= 1e-12 * (1 + std::norm(e)));
    CHECK(std::abs(evaluate(ex.space->A, z).value - evaluate(a, z).value) <= 1e-12 * (1 + std::abs(e)));
    CHECK(std::abs(evaluate(ex.space->B, z).value - evaluate(b, z).value) <= 1e-12 * (1 + std::abs(e)));
  }
  REQUIRE(ex.majorants.size() == 2);
  CHECK(std::abs(ex.majorants[0].value(cplx(3, 1)) - std::sqrt(std::sinh(2.0) / (2 * kPi))) < 1e-12);
  CHECK(std::abs(ex.majorants[1].value(cplx(0, 1)) - std::exp(1.0) / 2) < 1e-12);
}

TEST_CASE("the order-1/2 products") {
  const ExampleInstance ex = build_a38();
  const FE& g = ex.objects.at("G");
  const FE& gt = ex.objects.at("G_tilde");
  CHECK(evaluate(g, 0.0).value == cplx(1.0, 0.0));
  CHECK(evaluate(gt, 0.0).value == cplx(1.0, 0.0));
  CHECK(ex.space->hb_verified);

  const EvalResult c = a38_constant();
  CHECK(std::abs(c.value - a38_constant_closed_form()) <= 1e-9 * std::abs(c.value));

  const double x = 7.3;
  const cplx closed = a38_G_closed_form(x * x);
  CHECK(std::abs(evaluate(g, x * x).value - closed) <= 1e-6 * std::abs(closed));

  double lo = kInf, hi = 0.0;
  for (int k = 0; k <= 480; ++k) {
    const double xx = 2.0 + 0.1 * k;
    const double v = xx * std::abs(evaluate(gt, xx * xx).value);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo < 10.0);

  std::vector<double> lx, ly;
  for (int k = 0; k < 200; ++k) {
    const double xx = 5.0 * std::pow(10.0, k / 199.0);
    lx.push_back(std::log(xx));
    ly.push_back(std::log(std::abs(evaluate(gt, xx * xx).value)));
  }
  CHECK(std::abs(fit_line(lx, ly).slope + 1.0) <= 0.1);
}

TEST_CASE("the order-1/2 product has zero mean type") {
  const FE gt = FE::canonical_product(ZeroSequence::damped_squares(defaults::kA38Truncation));
  const MeanTypeEstimate near = mean_type(gt, kPi / 2, RadiusGrid{1.0, 1e4, 40});
  const MeanTypeEstimate far = mean_type(gt, kPi / 2, RadiusGrid{1.0, 1e5, 40});
  CHECK(far.value < 1e-2);
  CHECK(far.value < near.value);
  CHECK(far.value >= 0.0);
}

TEST_CASE("the partial-fraction function with poles |n|^alpha") {
  CHECK(std::abs(a41_weight_sum(2.0, 100000) - kPi * kPi / 3) <= 2.0 / 100000 * 1.01);
  CHECK(std::abs(a41_weight_sum(2.0, 1000) - kPi * kPi / 3) > std::abs(a41_weight_sum(2.0, 100000) - kPi * kPi / 3));

  const A41Data d = a41_data(2.0, 1.0);
  const ExampleInstance ex = build_a41();
  double c = 0.0;
  for (const auto& [k, v] : ex.parameters)
    if (k == "bracket_constant") c = v;
  CHECK(c > 0.1);
  for (int k = 0; k < 100; ++k) {
    const double x = std::pow(10.0, 4.0 * k / 99.0);
    const double iq = d.im_q(x);
    CHECK(iq >= d.bracket_bound(x));
    CHECK(d.bracket_bound(x) >= c);
    CHECK(iq > 0.1);
  }

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-50, 500);
  for (int k = 0; k < 50; ++k) {
    const cplx z(u(rng), 1.0);
    const cplx th = evaluate(d.theta, z).value;
    const double lhs = evaluate(d.q, z).value.imag();
    const double rhs = (1 - std::norm(th)) / std::norm(1.0 + th);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("the log-spaced zero set") {
  const double l2 = std::log(2.0);
  CHECK(std::abs(a45_term(2, l2) - 2 * l2 * l2) <= 1e-14);
  const double x = std::log(10.0);
  CHECK(a45_phase_derivative(100000, x) >= a45_bound(x));
  for (double t : {0.7, 3.0, 9.2, 11.0, 14.0}) CHECK(a45_phase_derivative(10000, t) <= a45_phase_derivative(100000, t));

  // The truncated series has no zeros with real part beyond log N.
  const double top = std::log(100000.0);
  for (int k = 0; k < 50; ++k) {
    const double t = l2 * std::pow((top - 0.5) / l2, k / 49.0);
    CHECK(a45_phase_derivative(100000, t) >= a45_bound(t));
  }
  CHECK(a45_phase_derivative(100000, top + 0.3) < a45_bound(top + 0.3));
}

TEST_CASE("phase derivative routes agree on finite log-spaced products") {
  const ZeroSequence zs = ZeroSequence::log_spaced(30);
  std::vector<cplx> lower;
  for (const cplx& p : zs.points()) lower.push_back(std::conj(p));
  const DbSpace s = DbSpace::from_E(FE::canonical_product(ZeroSequence::explicit_points(lower)), 0.0, 0.0);
  for (double t : {-2.9, -0.9, 0.0, 0.3, 0.9, 1.25, 2.9, 4.0}) {
    const double k = phase_derivative(s, t, PhaseRoute::Kernel);
    const double z = phase_derivative(s, t, PhaseRoute::ZeroSum);
    CHECK(std::abs(k - z) <= 1e-6 * k);
  }
}

TEST_CASE("polynomial spaces") {
  const ExampleInstance ex = build_poly();
  CHECK(ex.space->hb_verified);
  check_shipped_verdicts(ex);
}

TEST_CASE("instance registry") {
  for (const std::string& id : {"pw", "a20", "a41", "poly"}) CHECK(build_example(id).id == id);
  CHECK(build_example("a45", {{"N", 2000}}).id == "a45");
  try {
    build_example("nope");
    FAIL("expected unknown-instance");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownInstance);
  }
}
