#include <cmath>
#include <random>

#include "doctest.h"
#include "dblab/db_space.hpp"
#include "dblab/error.hpp"

using namespace dblab;
using FE = FunctionExpr;

namespace {

DbSpace pw(double a) { return DbSpace::from_E(FE::exp(cplx(0, -a)), 1.0, a); }
DbSpace linear() { return DbSpace::from_E(FE::polynomial({cplx(0, 1), 1.0}), 0.0, 0.0); }

// sin(a(z - x)) / (pi (z - x))
FE pw_kernel(double a, double x) { return cplx(a / kPi, 0) * compose_affine(FE::sinc(), a, -a * x); }

double pw1_nabla(double h) { return std::sqrt(std::sinh(2 * h) / (2 * kPi * h)); }

}  // namespace

TEST_CASE("hb_check") {
  DbSpace s = pw(1);
  std::vector<cplx> grid;
  for (int i = 0; i < 100; ++i) grid.emplace_back(-5.0 + 0.1 * i, 0.1 + 0.099 * i);
  HbReport r = hb_check(s, grid);
  CHECK(r.hermite_biehler);
  CHECK(r.worst_margin > 0.0);
  CHECK(s.hb_verified);

  DbSpace l = linear();
  CHECK(hb_check(l, standard_hb_grid()).hermite_biehler);

  DbSpace bad = DbSpace::from_E(FE::exp(cplx(0, 1)));
  const HbReport rb = hb_check(bad, grid);
  CHECK_FALSE(rb.hermite_biehler);
  CHECK(rb.worst_log_margin < 0.0);
  // every grid point fails
  for (const cplx& z : grid) CHECK(log_modulus(bad.E, z) < log_modulus(bad.E_sharp, z));
}

TEST_CASE("A and B are real on the real line") {
  const FE z = FE::identity();
  for (const DbSpace& s : {pw(1), linear(), DbSpace::from_E(FE::cos() - cplx(0, 1) * (z * FE::cos() + FE::sin()))}) {
    for (double t = -20; t <= 20; t += 0.37) {
      const cplx a = evaluate(s.A, t).value, b = evaluate(s.B, t).value;
      CHECK(std::abs(a.imag()) <= 1e-10 * (1 + std::abs(a) + std::abs(b)));
      CHECK(std::abs(b.imag()) <= 1e-10 * (1 + std::abs(a) + std::abs(b)));
      const cplx e = evaluate(s.E, t).value;
      CHECK(std::abs(e - (a - cplx(0, 1) * b)) <= 1e-12 * (1 + std::abs(e)));
    }
  }
}

TEST_CASE("kernel values") {
  CHECK(std::abs(kernel(pw(1), 0.0, 0.0) - 1.0 / kPi) < 1e-12);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5), v(0, 5);
  const DbSpace l = linear();
  const DbSpace p = pw(1);
  for (int i = 0; i < 100; ++i) {
    const cplx w(u(rng), v(rng)), z(u(rng), v(rng));
    CHECK(std::abs(kernel(l, w, z) - 1.0 / kPi) < 1e-12);
    CHECK(std::abs(kernel(p, w, z) - std::conj(kernel(p, z, w))) < 1e-10 * (1 + std::abs(kernel(p, w, z))));
    // closed form sin(z - conj w) / (pi (z - conj w))
    const cplx d = z - std::conj(w);
    CHECK(std::abs(kernel(p, w, z) - std::sin(d) / (kPi * d)) < 1e-10 * (1 + std::abs(std::sin(d) / d)));
  }
}

TEST_CASE("kernel is continuous across the diagonal switch") {
  const DbSpace p = pw(1);
  const FE zz = FE::identity();
  const DbSpace a20 = DbSpace::from_E(FE::cos() - cplx(0, 1) * (zz * FE::cos() + FE::sin()));
  for (const DbSpace* s : {&p, &a20}) {
    for (cplx w : {cplx(0.3, 0.2), cplx(-2, 1), cplx(1.3, 0)}) {
      const cplx z0 = std::conj(w);
      const double r = 1e-6 * (1 + std::abs(z0));
      const cplx inside = kernel(*s, w, z0 + 0.999 * r);
      const cplx outside = kernel(*s, w, z0 + 1.001 * r);
      CHECK(std::abs(inside - outside) <= 1e-8 * std::abs(inside));
    }
  }
}

TEST_CASE("nabla") {
  const DbSpace p = pw(1);
  for (double h : {0.01, 0.5, 1.0, 3.0, 40.0})
    for (double x : {-7.0, 0.0, 2.5})
      CHECK(std::abs(nabla(p, cplx(x, h)) - pw1_nabla(h)) <= 1e-10 * pw1_nabla(h));
  for (double t : {-3.0, 0.0, 11.0}) CHECK(std::abs(nabla(p, t) - 1 / std::sqrt(kPi)) < 1e-12);
  for (double x : {-1.0, 0.4, 8.0})
    CHECK(std::abs(nabla(p, cplx(x, 1e-6)) - nabla(p, x)) <= 1e-4 * nabla(p, x));
  CHECK(std::abs(log_nabla(p, cplx(0, 2000)) - 0.5 * (4000 - std::log(2 * kPi * 2000 * 2))) < 1e-9);
  CHECK_THROWS_AS(nabla(DbSpace::from_E(FE::exp(cplx(0, 1))), cplx(0, 1)), Error);
}

TEST_CASE("phase derivative") {
  for (double a : {0.5, 1.0, 3.0})
    for (double t : {-4.0, 0.0, 1.7})
      CHECK(std::abs(phase_derivative(pw(a), t, PhaseRoute::Kernel) - a) < 1e-10 * a);
  for (double t : {-4.0, 0.0, 1.7})
    CHECK(std::abs(phase_derivative(linear(), t, PhaseRoute::Kernel) - 1 / (t * t + 1)) < 1e-10);
  CHECK(std::abs(phase_constant(pw(2.0)) - 2.0) < 1e-9);
  CHECK_THROWS_AS(phase_derivative(pw(1), 0.0, PhaseRoute::ZeroSum), Error);

  // finite product with zeros in the lower half-plane; zero-sum route against kernel route
  const std::vector<cplx> zs{cplx(1, -0.5), cplx(-2, -1), cplx(0.3, -0.05)};
  std::vector<cplx> factors;
  const DbSpace s = DbSpace::from_E(FE::canonical_product(ZeroSequence::explicit_points(zs)));
  CHECK(std::abs(phase_constant(s)) < 1e-9);
  for (double t : {-3.0, 0.0, 0.3, 2.0}) {
    const double k = phase_derivative(s, t, PhaseRoute::Kernel);
    const double z = phase_derivative(s, t, PhaseRoute::ZeroSum);
    CHECK(std::abs(k - z) <= 1e-8 * k);
  }
}

TEST_CASE("inner products") {
  const DbSpace p = pw(1);
  const FE k0 = pw_kernel(1, 0), kpi = pw_kernel(1, kPi);
  const InnerProduct n0 = inner_product(p, k0, k0);
  CHECK(n0.converged);
  CHECK(std::abs(n0.value - 1 / kPi) < 1e-8);
  const InnerProduct cross = inner_product(p, k0, kpi);
  CHECK(std::abs(cross.value) < 1e-8);
  const InnerProduct zero = inner_product(p, FE::constant(0.0), FE::constant(0.0));
  CHECK(zero.value == cplx(0.0, 0.0));
  CHECK_THROWS_AS(inner_product(p, FE::cos(), FE::cos()), Error);
}

TEST_CASE("reproducing property") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3), v(0.1, 2);
  for (const DbSpace& s : {pw(1), linear()}) {
    for (int i = 0; i < 20; ++i) {
      const cplx w(u(rng), v(rng)), w2(u(rng), v(rng));
      const FE f = kernel_function(s, w2);
      const FE kw = kernel_function(s, w);
      const cplx lhs = inner_product(s, f, kw).value;
      const cplx rhs = evaluate(f, w).value;
      CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(rhs));
    }
  }
}

TEST_CASE("mean type") {
  for (double a : {0.5, 2.0}) {
    const MeanTypeEstimate m = mean_type(FE::exp(cplx(0, a)), kPi / 2);
    CHECK(std::abs(m.value + a) < 1e-6);
    CHECK(m.residual < 1e-6);
  }
  const MeanTypeEstimate c = mean_type(FE::cos() * FE::exp(cplx(0, 1)), kPi / 2);
  CHECK(std::abs(c.value) < 1e-3);
  CHECK(c.radii.size() == 20);
  CHECK_THROWS_AS(mean_type(FE::constant(0.0), kPi / 2), Error);
}

TEST_CASE("membership in PW1") {
  const DbSpace p = pw(1);
  const MembershipReport in = membership(p, pw_kernel(1, 0));
  CHECK(in.verdict == Verdict::In);
  REQUIRE(in.norm_squared.has_value());
  CHECK(std::abs(*in.norm_squared - 1 / kPi) < 1e-8);

  const MembershipReport c = membership(p, FE::cos());
  CHECK(c.verdict == Verdict::Out);
  CHECK(c.norm_status == "non-convergent-tail");

  const MembershipReport wide = membership(p, pw_kernel(2, 0) * FE::constant(0.5));
  CHECK(wide.verdict == Verdict::Out);
  CHECK(std::abs(wide.mean_type_f.value - 1.0) < 0.05);

  const MembershipReport pw2 = membership(pw(2), pw_kernel(2, 0));
  CHECK(pw2.verdict == Verdict::In);
}

TEST_CASE("Schwarz bound for Paley-Wiener members") {
  const DbSpace p = pw(1);
  const std::vector<FE> members{pw_kernel(1, 0), pw_kernel(1, kPi), pw_kernel(1, 1.3), pw_kernel(1, -2.7),
                                compose_affine(FE::sinc(), 0.5, 0.0) * compose_affine(FE::sinc(), 0.5, 0.0)};
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-20, 20), uy(0, 6);
  for (const FE& f : members) {
    const InnerProduct n = inner_product(p, f, f);
    REQUIRE(n.converged);
    const double norm = std::sqrt(n.value.real());
    for (int k = 0; k < 200; ++k) {
      const cplx z(ux(rng), k % 10 == 0 ? 0.0 : uy(rng));
      CHECK(std::abs(evaluate(f, z).value) <= (1 + 1e-6) * norm * nabla(p, z));
    }
  }
  // equality at the kernel's own point
  const double n0 = std::sqrt(inner_product(p, pw_kernel(1, 0), pw_kernel(1, 0)).value.real());
  CHECK(std::abs(evaluate(pw_kernel(1, 0), 0.0).value) == doctest::Approx(n0 * nabla(p, 0.0)).epsilon(1e-7));
}

TEST_CASE("upper sandwich bound and positive diagonal") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-30, 30), ly(-4, 2);
  for (const DbSpace& s : {pw(1), linear()})
    for (int k = 0; k < 200; ++k) {
      const cplx z(ux(rng), std::pow(10.0, ly(rng)));
      const double lhs = nabla(s, z) / std::abs(evaluate(s.E, z).value);
      CHECK(lhs <= (1 + 1e-9) / (2 * std::sqrt(kPi * z.imag())));
      CHECK(kernel(s, z, z).real() > 0.0);
    }
}
