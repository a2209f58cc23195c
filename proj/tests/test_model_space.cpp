#include <cmath>
#include <random>

#include "doctest.h"
#include "dblab/error.hpp"
#include "dblab/examples.hpp"
#include "dblab/model_space.hpp"
#include "dblab/quadrature.hpp"

using namespace dblab;
using FE = FunctionExpr;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

std::vector<cplx> upper_points(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> x(-10, 10), y(0.1, 5);
  std::vector<cplx> out;
  for (int i = 0; i < n; ++i) out.emplace_back(x(rng), y(rng));
  return out;
}

const FE kIOverZ = FE::quotient(FE::constant(kI), FE::identity());
const FE kMinusIZ = FE::polynomial({0.0, -kI});

}  // namespace

TEST_CASE("inner functions") {
  CHECK(check_inner(InnerFunction::exponential(1.0)).ok);
  CHECK(check_inner(InnerFunction::blaschke({{0.0, 1.0}, {2.0, 0.5}}, -1.0)).ok);
  CHECK(check_inner(InnerFunction::ratio(FE::polynomial({kI, 1.0}))).ok);
  CHECK(check_inner(InnerFunction::ratio(a20_E(), 0.3)).ok);
  CHECK(!check_inner(InnerFunction::constant(1.0)).ok);
  CHECK(kind_of([] { InnerFunction::blaschke({{1.0, -1.0}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { InnerFunction::exponential(-1.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Cayley transforms in both conventions") {
  const InnerFunction e = InnerFunction::exponential(1.0);
  const FE q = cayley_q_from_theta(e, CayleyVariant::Plus);
  const double em1 = std::exp(-1.0);
  CHECK(std::abs(evaluate(q, kI).value - (1 + em1) / (1 - em1)) < 1e-14);
  CHECK(std::abs(evaluate(q, kI).value.real() - 2.1640) < 1e-4);
  CHECK(evaluate(cayley_q_from_theta(InnerFunction::constant(0.0), CayleyVariant::Plus), 3.0).value == cplx(1.0, 0.0));

  const InnerFunction b = InnerFunction::blaschke({{0.5, 1.0}, {-1.0, 2.0}}, cplx(0.0, 1.0));
  for (const InnerFunction& th : {e, b})
    for (CayleyVariant v : {CayleyVariant::Plus, CayleyVariant::IMinus}) {
      const FE qv = cayley_q_from_theta(th, v);
      const FE back = theta_from_q(qv, v);
      for (const cplx& z : upper_points(100, 5)) {
        const cplx t = th(z);
        CHECK(std::abs(evaluate(back, z).value - t) <= 1e-12);
        const cplx qz = evaluate(qv, z).value;
        CHECK((v == CayleyVariant::Plus ? qz.real() : qz.imag()) >= -1e-12);
      }
    }

  CHECK(kind_of([] { cayley_q_from_theta(InnerFunction::constant(1.0), CayleyVariant::Plus); }) == ErrorKind::DegenerateInner);
  CHECK(kind_of([] { cayley_q_from_theta(InnerFunction::constant(-1.0), CayleyVariant::IMinus); }) == ErrorKind::DegenerateInner);
  CHECK_NOTHROW(cayley_q_from_theta(InnerFunction::constant(-1.0), CayleyVariant::Plus));
  CHECK(parse_cayley_variant(to_string(CayleyVariant::IMinus)) == CayleyVariant::IMinus);
}

TEST_CASE("Herglotz data of the shipped functions") {
  const HerglotzData lin = herglotz_extract(kMinusIZ);
  CHECK(std::abs(lin.p - 1.0) < 1e-4);
  CHECK(lin.masses.empty());
  CHECK(lin.total_mass == kInf);
  CHECK(!lin.class_c1);

  const HerglotzData pole = herglotz_extract(kIOverZ);
  CHECK(pole.p < 1e-4);
  REQUIRE(pole.masses.size() == 1);
  CHECK(std::abs(pole.masses[0].location) < 1e-12);
  CHECK(std::abs(pole.masses[0].weight - kPi) < 1e-4);
  CHECK(std::abs(pole.total_mass - kPi) < 1e-4);
  CHECK(pole.class_c0);

  const HerglotzData one = herglotz_extract(FE::constant(1.0));
  CHECK(one.p < 1e-4);
  CHECK(one.masses.empty());
  CHECK(one.total_mass == kInf);
  CHECK(one.class_c1);
  for (const DensitySample& s : one.density) CHECK(std::abs(s.value - 1.0) < 1e-14);

  CHECK(kind_of([] { herglotz_extract(FE::constant(-1.0)); }) == ErrorKind::NegativeRealPart);
}

TEST_CASE("p detects whether 1 - Theta lies in the model space") {
  // e^{iz}: 1 - Theta does not decay, p = 0; Clark masses 2 pi at 2 pi k
  HerglotzOptions ho;
  ho.mass_candidates = {2 * kPi, -2 * kPi};
  const HerglotzData e = herglotz_extract(cayley_q_from_theta(InnerFunction::exponential(1.0), CayleyVariant::Plus), ho);
  CHECK(e.p < 1e-4);
  CHECK(e.masses.size() == 3);
  for (const PointMass& m : e.masses) CHECK(std::abs(m.weight - 2 * kPi) < 1e-3);

  const std::vector<cplx> zs{{0.5, 1.0}, {-1.0, 2.0}, {3.0, 0.5}};
  // Theta(infinity) = -1: p = 0 and the finite masses carry everything
  const InnerFunction bm = InnerFunction::blaschke(zs, -1.0);
  const ClarkMeasure mu = clark_measure(bm);
  CHECK(!mu.mass_at_infinity);
  REQUIRE(mu.masses.size() == 3);
  HerglotzOptions hb;
  for (const PointMass& m : mu.masses) hb.mass_candidates.push_back(m.location);
  const HerglotzData d = herglotz_extract(cayley_q_from_theta(bm, CayleyVariant::Plus), hb);
  CHECK(d.p < 1e-4);
  CHECK(d.class_c0);
  double total = 0.0;
  for (const PointMass& m : mu.masses) {
    total += m.weight;
    CHECK(std::abs(bm(m.location) - 1.0) < 1e-12);
  }
  CHECK(std::abs(d.total_mass - total) < 1e-4 * total);
  REQUIRE(d.masses.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(d.masses[j].weight - mu.masses[j].weight) < 1e-3 * mu.masses[j].weight);

  // Theta(infinity) = 1: 1 - Theta = O(1/z) lies in the model space and p > 0
  const InnerFunction bp = InnerFunction::blaschke(zs, 1.0);
  const ClarkMeasure mp = clark_measure(bp);
  CHECK(mp.mass_at_infinity);
  CHECK(mp.masses.size() == 2);
  CHECK(herglotz_extract(cayley_q_from_theta(bp, CayleyVariant::Plus)).p > 0.01);
}

TEST_CASE("weak-type superlevel measures") {
  std::vector<double> as;
  for (int k = 1; k <= 20; ++k) as.push_back(0.1 * k);
  const WeakTypeReport r = weak_type_test(kIOverZ, 1.0, as, SuperlevelMeasure::Lebesgue);
  CHECK(std::abs(r.limit_yq - 1.0) < 1e-9);
  REQUIRE(r.rows.size() == as.size());
  for (const WeakTypeRow& row : r.rows) {
    const double exact = 2 * std::sqrt(std::max(0.0, 1 / (row.a * row.a) - 1));
    CHECK(std::abs(row.measure - exact) < 1e-6);
    CHECK(row.product <= 16.52);
    CHECK(row.holds);
  }
  CHECK(r.all_hold);
  CHECK(r.monotone);
  CHECK(r.csv().rfind("a,measure,bound\n", 0) == 0);

  const WeakTypeReport one = weak_type_test(FE::constant(1.0), 1.0, {1.5, 2.0, 4.0}, SuperlevelMeasure::Lebesgue);
  for (const WeakTypeRow& row : one.rows) CHECK(row.measure == 0.0);

  std::vector<double> big;
  for (int k = 0; k < 12; ++k) big.push_back(std::pow(2.0, k));
  const WeakTypeReport c1 = weak_type_test(kIOverZ, 1.0, big, SuperlevelMeasure::Poisson);
  CHECK(c1.tail_to_zero);
  const WeakTypeReport lin = weak_type_test(kMinusIZ, 1.0, big, SuperlevelMeasure::Poisson);
  CHECK(!lin.tail_to_zero);
  CHECK(lin.monotone);
  for (const WeakTypeRow& row : lin.rows) {
    const double exact = row.a <= 1 ? kPi : kPi - 2 * std::atan(std::sqrt(row.a * row.a - 1));
    CHECK(std::abs(row.measure - exact) < 1e-6);
  }
  CHECK(std::abs(lin.rows.back().product - 2.0) < 1e-3);

  // |q| oscillates without decay; reference values from a fine Riemann sum over |x| <= 2e5
  const FE qe = cayley_q_from_theta(InnerFunction::exponential(1.0), CayleyVariant::Plus);
  const WeakTypeReport osc = weak_type_test(qe, 1.0, {1.0, 2.0}, SuperlevelMeasure::Poisson);
  CHECK(std::abs(osc.rows[0].measure - 2.278065) < 5e-3);
  CHECK(std::abs(osc.rows[1].measure - 0.798980) < 5e-3);

  CHECK(kind_of([] { weak_type_test(kMinusIZ, 1.0, {2.0}, SuperlevelMeasure::Lebesgue); }) ==
        ErrorKind::EnvelopeNotDecaying);
}

TEST_CASE("Clark kernels") {
  const cplx z0(0.4, 0.8);
  const FE k0 = clark_kernel(InnerFunction::constant(0.0), z0);
  for (const cplx& w : upper_points(5, 3))
    CHECK(std::abs(evaluate(k0, w).value - cplx(0, 1 / (2 * kPi)) / (w - std::conj(z0))) < 1e-15);

  const InnerFunction e = InnerFunction::exponential(1.0);
  const InnerFunction b = InnerFunction::blaschke({{0.5, 1.0}, {-1.0, 2.0}, {3.0, 0.5}}, -1.0);
  for (const InnerFunction& th : {e, b})
    for (const cplx& z : upper_points(100, 9)) {
      const double diag = evaluate(clark_kernel(th, z), z).value.real();
      CHECK(diag > 0.0);
      CHECK(std::abs(diag - (1 - std::norm(th(z))) / (4 * kPi * z.imag())) <= 1e-12 * diag);
    }

  const std::vector<cplx> pts = upper_points(20, 11);
  quad::LineOptions lo;
  lo.rel_tol = 1e-8;
  lo.max_half_width = 65536;
  lo.max_depth = 12;
  for (int i = 0; i < 10; ++i) {
    const cplx w = pts[2 * i], z = pts[2 * i + 1];
    const FE kw = clark_kernel(e, w), kz = clark_kernel(e, z);
    const auto ip = quad::integrate_real_line(
        [&](double t) { return evaluate(kw, t).value * std::conj(evaluate(kz, t).value); }, lo);
    INFO("cutoff " << ip.cutoff << " converged " << ip.converged);
    const cplx expect = evaluate(kw, z).value;
    CHECK(std::abs(ip.value - expect) <= 1e-5 * std::abs(expect));
  }
  CHECK_THROWS_AS(clark_kernel(e, cplx(1, 0)), Error);
}

TEST_CASE("Clark measures of finite Blaschke products") {
  const InnerFunction b = InnerFunction::blaschke({{0.5, 1.0}, {-1.0, 2.0}, {3.0, 0.5}}, -1.0);
  const ClarkMeasure mu = clark_measure(b);
  for (const cplx& w : upper_points(10, 21)) {
    const FE kw = clark_kernel(b, w);
    const double self = evaluate(kw, w).value.real();
    CHECK(std::abs(clark_norm2(mu, kw) - self) <= 1e-10 * self);
    for (const cplx& z : upper_points(5, 22))
      CHECK(std::abs(clark_reconstruct(mu, b, kw, z) - evaluate(kw, z).value) <= 1e-10 * (1 + std::abs(evaluate(kw, z).value)));
  }

  // splitting through the tail of the measure
  const FE f = clark_kernel(b, cplx(0.2, 1.0));
  const std::vector<cplx> pts = upper_points(8, 30);
  const DecompositionExperiment all = decomposition_experiment(mu, b, f, 0.0, pts);
  for (const DecompositionRow& row : all.rows) CHECK(std::abs(row.f_eps - evaluate(f, row.z).value) < 1e-10);
  CHECK(all.max_split_mismatch < 1e-12);
  double cut = 0.0;
  for (const PointMass& m : mu.masses) cut = std::max(cut, std::abs(m.location));
  const DecompositionExperiment none = decomposition_experiment(mu, b, f, cut, pts);
  CHECK(none.tail_mass == 0.0);
  for (const DecompositionRow& row : none.rows) CHECK(row.f_eps == cplx(0.0, 0.0));
  const DecompositionExperiment some = decomposition_experiment(mu, b, f, 0.5 * cut, pts);
  CHECK(some.tail_integral < all.tail_integral);
  CHECK(kind_of([] { clark_measure(InnerFunction::exponential(1.0)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("scan of the sets M_r") {
  const InnerFunction e = InnerFunction::exponential(1.0);
  std::vector<double> rs;
  for (int k = 0; k <= 7; ++k) rs.push_back(std::pow(2.0, k));
  const A60Scan s = theorem_a60_scan(e, 1.0, 10.0, rs, FE::constant(0.0));
  for (const A60Row& row : s.rows)
    if (row.r > 10.0 / (1 - std::exp(-1.0))) CHECK(row.ratio == 0.0);
  CHECK(s.rows.front().ratio > 0.0);
  CHECK(s.residual.size() == 3 * rs.size());
  for (const A60Row& row : theorem_a60_scan(e, 1.0, 0.0, rs).rows) CHECK(row.measure == 0.0);

  // the i-minus Theta of the partial-fraction example sits near -1
  const A41Data d = a41_data(2.0, 1.0, 2000);
  const A60Scan t = theorem_a60_scan(InnerFunction::general(d.theta), 1.0, 1.0, {10.0, 100.0, 1000.0}, std::nullopt, 512);
  MESSAGE("min |1 + Theta| = " << t.min_abs_one_plus_theta);
  CHECK(t.min_abs_one_plus_theta < 0.1);
}
