#include <cmath>
#include <random>

#include "doctest.h"
#include "dblab/error.hpp"
#include "dblab/expr.hpp"

using namespace dblab;
using FE = FunctionExpr;

namespace {

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// prod_{n>=1} (1 - w/n^2) = sin(pi sqrt w)/(pi sqrt w)
cplx sine_product(cplx w) {
  const cplx r = std::sqrt(w);
  return std::sin(kPi * r) / (kPi * r);
}

std::vector<FE> sample_functions() {
  const FE z = FE::identity();
  std::vector<FE> fs;
  fs.push_back(FE::exp(cplx(0, -1)));
  fs.push_back(FE::cos() - cplx(0, 1) * (z * FE::cos() + FE::sin()));
  fs.push_back(FE::polynomial({cplx(-1, -1), 1.0, cplx(0.5, 2)}));
  fs.push_back(compose_affine(FE::sinc(), cplx(2, 0.3), cplx(-1, 0.5)));
  fs.push_back(FE::power(z + FE::constant(cplx(0, 1)), 3) * FE::exp(cplx(0.2, -1.5)));
  fs.push_back(FE::canonical_product(ZeroSequence::damped_squares(2000)));
  fs.push_back(FE::canonical_product(ZeroSequence::explicit_points({cplx(1, -2), cplx(-3, -0.5)}, 1)));
  fs.push_back(FE::partial_fractions(PoleSequence::explicit_poles({cplx(20, -1)}, {cplx(2, 1)})));
  fs.push_back(FE::sharp_node(FE::exp(cplx(1, 2)) * z));
  return fs;
}

}  // namespace

TEST_CASE("closed-form evaluations") {
  const FE e = FE::exp(cplx(0, -1));
  CHECK(std::abs(evaluate(e, cplx(0, 1)).value - std::exp(1.0)) < 1e-15);

  const FE g = FE::canonical_product(ZeroSequence::shifted_squares(1000));
  const EvalResult at0 = evaluate(g, 0.0);
  CHECK(at0.value == cplx(1.0, 0.0));
  CHECK(at0.abs_error >= 0.0);
}

TEST_CASE("shifted-squares product matches the sine closed form at N = 1e6") {
  const FE g = FE::canonical_product(ZeroSequence::shifted_squares(1000000));
  const cplx c = sine_product(cplx(0, 1));  // prod (1 - i/n^2) = prod (n^2 - i)/n^2
  for (cplx z : {cplx(4, 0), cplx(53.29, 0), cplx(-7, 3), cplx(2500, 0)}) {
    const EvalResult r = evaluate(g, z);
    const cplx oracle = sine_product(z + cplx(0, 1)) / c;
    CHECK(rel_err(r.value, oracle) <= 1e-8);
    CHECK(std::isfinite(r.abs_error));
    CHECK(r.abs_error <= 1e-8 * std::abs(oracle));
  }
}

TEST_CASE("tail sums agree with direct summation") {
  for (std::size_t n : {100u, 1000u, 100000u}) {
    const ZeroSequence s = ZeroSequence::shifted_squares(n);
    // Direct summation to M, smallest terms first, plus the integral remainder.
    const double m = 1e7;
    cplx oracle = 1.0 / m - 0.5 / (m * m);
    for (double k = m; k > double(n); k -= 1.0) oracle += 1.0 / cplx(k * k, -1.0);
    CHECK(std::abs(s.tail().first - oracle) <= 1e-10 * std::abs(oracle));
  }
}

TEST_CASE("sharp conjugation") {
  const FE e = FE::exp(cplx(0, -1));
  const FE es = sharp(e);
  CHECK(es.kind() == FE::Kind::Exp);
  CHECK(es.param_a() == cplx(0, 1));
  CHECK(std::abs(evaluate(es, cplx(0, 1)).value - std::exp(-1.0)) < 1e-15);

  CHECK(sharp(FE::cos()).kind() == FE::Kind::Cos);

  const FE p = FE::polynomial({cplx(-1, -1), 1.0});
  const FE ps = sharp(p);
  CHECK(ps.coefficients()[0] == cplx(-1, 1));
  CHECK(ps.coefficients()[1] == cplx(1, 0));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const FE& f : sample_functions()) {
    const FE fs = sharp(f);
    const FE fss = sharp(fs);
    for (int i = 0; i < 500; ++i) {
      cplx z;
      do z = cplx(10 * u(rng), 10 * u(rng));
      while (std::abs(z) > 10.0);
      const cplx v = evaluate(f, z).value;
      CHECK(std::abs(evaluate(fss, z).value - v) <= 1e-12 * (1.0 + std::abs(v)));
      const cplx w = std::conj(evaluate(f, std::conj(z)).value);
      CHECK(std::abs(evaluate(fs, z).value - w) <= 1e-12 * (1.0 + std::abs(w)));
    }
  }
}

TEST_CASE("Cauchy derivatives") {
  const FE z = FE::identity();
  CHECK(std::abs(derivative(FE::exp(cplx(0, -1)), 0.0, 1).value - cplx(0, -1)) < 1e-10);
  CHECK(std::abs(derivative(z * z, 3.0, 2).value - 2.0) < 1e-8);

  const FE gt = FE::canonical_product(ZeroSequence::damped_squares(1000000));
  const double h = 1e-4;
  const cplx fd = (evaluate(gt, 1.0 + h).value - evaluate(gt, 1.0 - h).value) / (2 * h);
  const cplx cd = derivative(gt, 1.0, 1).value;
  CHECK(rel_err(cd, fd) <= 1e-5);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const FE& f : sample_functions()) {
    for (int i = 0; i < 20; ++i) {
      const cplx p(u(rng), u(rng));
      const double step = 1e-4;
      const cplx fd1 = (evaluate(f, p + step).value - evaluate(f, p - step).value) / (2 * step);
      const cplx cd1 = derivative(f, p, 1).value;
      CHECK(std::abs(cd1 - fd1) <= 1e-6 * std::max(1.0, std::abs(cd1)));
    }
  }
}

TEST_CASE("truncation error estimate is nonincreasing in N") {
  for (auto make : {&ZeroSequence::shifted_squares, &ZeroSequence::damped_squares}) {
    for (cplx z : {cplx(3, 1), cplx(-20, 5), cplx(100, -3), cplx(0.5, 0.5)}) {
      double previous = kInf;
      for (std::size_t n = 500; n <= 64000; n *= 2) {
        const FE g = FE::canonical_product(make(n, 0));
        const double e = evaluate(g, z).abs_error;
        CHECK(e <= previous);
        previous = e;
      }
    }
  }
  double previous = kInf;
  for (std::size_t n = 100; n <= 100000; n *= 10) {
    const double b = ZeroSequence::shifted_squares(n).tail_log_bound(30.0);
    CHECK(b <= previous);
    previous = b;
  }
}

TEST_CASE("genus-0 summability check") {
  CHECK(ZeroSequence::shifted_squares(1000).genus0_partial_sums_stabilize(1e-3));
  CHECK_FALSE(ZeroSequence::log_spaced(1000).genus0_partial_sums_stabilize(1e-3));
}

TEST_CASE("scaled evaluation survives overflow") {
  CHECK(std::abs(log_modulus(FE::sin(), cplx(0, 2000)) - (2000 - std::log(2.0))) < 1e-9);
  CHECK(std::abs(log_modulus(FE::exp(cplx(0, -1)) / FE::cos(), cplx(3, 5000)) - std::log(2.0)) < 1e-9);
}

TEST_CASE("pole handling") {
  const FE f = FE::constant(1.0) / (FE::identity() - FE::constant(1.0));
  CHECK_THROWS_AS(evaluate(f, 1.0), Error);
  try {
    evaluate(f, cplx(1.0 + 1e-12, 0.0));
    FAIL("expected a pole hit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleHit);
  }
  CHECK(std::abs(evaluate(f, 3.0).value - 0.5) < 1e-15);
  try {
    derivative(f, cplx(1.0 + 1e-3, 0.0), 1);
    FAIL("expected radius-too-large");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RadiusTooLarge);
  }
}

TEST_CASE("complex log1p") {
  const cplx w(1e-12, -3e-13);
  const cplx l = log1p_complex(w);
  CHECK(std::abs(l - (w - w * w / 2.0)) < 1e-28);
}
