#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "dblab/error.hpp"
#include "dblab/majorization.hpp"

using namespace dblab;
using FE = FunctionExpr;
using MV = MajorizationVerdict;

namespace {

DbSpace pw(double a) { return DbSpace::from_E(FE::exp(cplx(0, -a)), 1.0, a); }
FE pw_kernel(double a, double x) { return cplx(a / kPi, 0) * compose_affine(FE::sinc(), a, -a * x); }
double pw1_nabla(double h) { return std::sqrt(std::sinh(2 * h) / (2 * kPi * h)); }

}  // namespace

TEST_CASE("domains sample the closed upper half-plane on monotone grids") {
  const SampledDomain ds[] = {SampledDomain::ray(0.25, 0.0), SampledDomain::line(1.5), SampledDomain::real_axis(),
                              SampledDomain::horizontal_ray(1.0, -30.0),
                              SampledDomain::union_of({SampledDomain::real_axis(), SampledDomain::ray(0.5, 0.0)})};
  for (const SampledDomain& d : ds) {
    for (const cplx& z : d.samples()) CHECK(z.imag() >= 0.0);
    for (const DomainSegment& s : d.segments())
      for (std::size_t i = 1; i < s.params.size(); ++i) CHECK(s.params[i] > s.params[i - 1]);
  }
  const std::vector<DomainSegment> line = SampledDomain::line(1.0).segments();
  REQUIRE(line.size() == 1);
  CHECK(line[0].params.front() == -1e4);
  CHECK(line[0].params.back() == 1e4);
  // geometric ratio 1.05 outside [-1, 1]
  const auto& p = line[0].params;
  CHECK(std::abs(p[p.size() - 2] * 1.05 - 1e4) <= 0.05 * 1e4);
  CHECK(SampledDomain::union_of({SampledDomain::real_axis(), SampledDomain::ray(0.5, 0.0)}).segments().size() == 2);
}

TEST_CASE("nabla majorants") {
  for (double h : {0.5, 1.0, 2.0}) {
    const Majorant m = nabla_majorant(pw(1), SampledDomain::line(h));
    for (double x : {-100.0, 0.0, 3.3}) CHECK(std::abs(m.value(cplx(x, h)) - pw1_nabla(h)) <= 1e-10);
  }
  const Majorant r = nabla_majorant(pw(1), SampledDomain::real_axis());
  CHECK(std::abs(r.value(2.0) - 1 / std::sqrt(kPi)) < 1e-12);
  const Majorant lin = nabla_majorant(DbSpace::from_E(FE::polynomial({cplx(0, 1), 1.0}), 0, 0), SampledDomain::line(1));
  for (cplx z : {cplx(0, 1), cplx(5, 2), cplx(-40, 0.1)}) CHECK(std::abs(lin.value(z) - 1 / std::sqrt(kPi)) < 1e-12);
}

TEST_CASE("m_S majorants") {
  const Majorant m = mS_majorant(FE::exp(cplx(0, -1)), SampledDomain::real_axis());
  for (double t : {-5.0, 0.0, 12.0}) CHECK(std::abs(m.value(t) - 1 / std::sqrt(t * t + 1)) < 1e-14);
  const Majorant one = mS_majorant(FE::constant(1.0), SampledDomain::ray(0.5, 0.0));
  CHECK(std::abs(one.value(cplx(0, 1)) - 0.5) < 1e-15);
}

TEST_CASE("cos z against nabla of PW1 on horizontal lines") {
  const FE f = FE::cos();
  for (double h : {0.5, 1.0, 2.0}) {
    const MajorizationReport r = test_majorization(f, nabla_majorant(pw(1), SampledDomain::line(h)));
    CHECK(r.verdict == MV::Majorized);
    const double expected = std::cosh(h) / pw1_nabla(h);
    CHECK(std::abs(r.sup_ratio - expected) <= 1e-6 * expected);
  }
}

TEST_CASE("cos z against nabla of PW1 on the imaginary axis") {
  const MajorizationReport r = test_majorization(FE::cos(), nabla_majorant(pw(1), SampledDomain::ray(0.5, 1.0)));
  CHECK(r.verdict == MV::NotMajorized);
  CHECK(std::abs(r.slope - 0.5) < 0.02);
  // the ratio follows sqrt(pi y)
  for (const RatioSample& s : r.rows) {
    if (s.z.imag() < 100) continue;
    CHECK(std::abs(s.log_ratio - 0.5 * std::log(kPi * s.z.imag())) < 1e-2);
  }
}

TEST_CASE("kernels are majorized by their own nabla with the norm as constant") {
  const DbSpace p = pw(1);
  for (const SampledDomain& d : {SampledDomain::real_axis(), SampledDomain::line(1.0), SampledDomain::ray(0.5, 0.0),
                                 SampledDomain::ray(0.25, 0.0)}) {
    for (double x : {0.0, kPi, 1.3}) {
      const FE f = pw_kernel(1, x);
      const MajorizationReport r = test_majorization(f, nabla_majorant(p, d));
      CHECK(r.verdict == MV::Majorized);
      const double norm = 1 / std::sqrt(kPi);
      CHECK(r.sup_ratio <= norm * (1 + 1e-6));
    }
  }
}

TEST_CASE("verdicts do not depend on the majorant's scale") {
  const Majorant base = nabla_majorant(pw(1), SampledDomain::ray(0.5, 1.0));
  const Majorant line = nabla_majorant(pw(1), SampledDomain::line(1.0));
  for (double c : {1e-3, 1.0, 1e3}) {
    CHECK(test_majorization(FE::cos(), scaled(base, c)).verdict == MV::NotMajorized);
    CHECK(test_majorization(FE::cos(), scaled(line, c)).verdict == MV::Majorized);
    CHECK(test_majorization(pw_kernel(1, 0), scaled(base, c)).verdict == MV::Majorized);
  }
}

TEST_CASE("a larger majorant keeps majorized functions majorized") {
  const SampledDomain d = SampledDomain::real_axis();
  const Majorant m1 = mS_majorant(FE::exp(cplx(0, -1)), d);  // 1/|t+i|
  const Majorant m2 = nabla_majorant(pw(1), d);               // 1/sqrt(pi) >= m1 / sqrt(pi)
  for (const cplx& z : d.samples()) CHECK(m1.value(z) <= std::sqrt(kPi) * m2.value(z));
  const FE f = pw_kernel(1, 0);
  CHECK(test_majorization(f, m1).verdict == MV::Majorized);
  CHECK(test_majorization(f, m2).verdict == MV::Majorized);
}

TEST_CASE("members of PW_1/2 are majorized by its nabla on the real line") {
  const DbSpace half = pw(0.5);
  const Majorant m = nabla_majorant(half, SampledDomain::real_axis());
  for (double x : {0.0, 2 * kPi, 1.3}) CHECK(test_majorization(pw_kernel(0.5, x), m).verdict == MV::Majorized);
  CHECK(test_majorization(pw_kernel(0.5, 0) * pw_kernel(0.5, 1.0), m).verdict == MV::Majorized);
}

TEST_CASE("exclusion around declared zeros") {
  const FE z2 = FE::polynomial({0.0, 0.0, 1.0});
  const Majorant m = modulus_majorant(z2, SampledDomain::real_axis(), {{0.0, 2}});
  const MajorizationReport r = test_majorization(FE::polynomial({0.0, 0.0, 3.0}), m);
  CHECK(r.excluded > 0);
  CHECK(r.verdict == MV::Majorized);
  CHECK(std::abs(r.sup_ratio - 3.0) < 1e-9);
  CHECK(std::abs(estimate_zero_order(m, 0.0) - 2.0) < 1e-3);

  // every sample of a short ray starting at the divisor point is excluded
  const Majorant t = modulus_majorant(z2, SampledDomain::ray(0.5, 0.0, {1.05, 5e-4, 1e-4}), {{0.0, 1}});
  CHECK_THROWS_AS(test_majorization(FE::constant(1.0), t), Error);
}

TEST_CASE("admissibility") {
  const DbSpace p1 = pw(1);
  const AdmissibilityReport a = admissibility_check(nabla_majorant(p1, SampledDomain::real_axis()), {pw_kernel(1, 0)}, p1);
  CHECK(a.adm1);
  CHECK(a.adm2);
  CHECK(a.admissible);

  const AdmissibilityReport z = admissibility_check(zero_majorant(SampledDomain::real_axis()), {pw_kernel(1, 0)}, p1);
  CHECK_FALSE(z.adm1);
  CHECK_FALSE(z.adm2);
  CHECK_FALSE(z.admissible);

  const AdmissibilityReport e1 =
      admissibility_check(mS_majorant(FE::exp(cplx(0, -1)), SampledDomain::real_axis()), {pw_kernel(1, 0)}, pw(2));
  CHECK(e1.admissible);

  Majorant off = mS_majorant(FE::exp(cplx(0, -1)), SampledDomain::real_axis(), {{cplx(0, 1), 1}});
  CHECK_FALSE(admissibility_check(off, {pw_kernel(1, 0)}, p1).adm1);
}

TEST_CASE("CSV rows") {
  const MajorizationReport r = test_majorization(FE::cos(), nabla_majorant(pw(1), SampledDomain::line(1.0)));
  const std::string csv = r.csv();
  CHECK(csv.rfind("re,im,ratio,log_ratio\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.rows.size() + 1);
}
