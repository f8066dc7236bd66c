#include "doctest.h"

#include <cmath>

#include "hm13/numeric.hpp"
#include "hm13/qseries.hpp"

using namespace hm13;

namespace {

// Numeric evaluation of a truncated series at a point, for cross-checking
// the two independent evaluation paths.
Complex eval_series(const PuiseuxSeries& s, Complex z) {
  Complex acc{0.0, 0.0};
  for (const auto& [e, c] : s.terms())
    acc += to_double(c) * detail::q_power(z, to_double(Rat(e)));
  return acc;
}

}  // namespace

TEST_CASE("sample points demand a safe height") {
  CHECK_NOTHROW(SamplePoint({0.0, 0.2}));
  CHECK_THROWS_AS(SamplePoint({0.0, 0.1}), Error);
  CHECK(default_sample_points().size() == 3);
}

TEST_CASE("eta at i matches the gamma-function closed form") {
  // eta(i) = Gamma(1/4) / (2 pi^{3/4}).
  const double gamma_quarter = 3.6256099082219083119;
  const double expected =
      gamma_quarter / (2.0 * std::pow(std::numbers::pi, 0.75));
  Complex v = eta_point({0.0, 1.0});
  CHECK(std::abs(v.real() - expected) < 1e-9);
  CHECK(std::abs(v.imag()) < 1e-15);
}

TEST_CASE("theta constants: direct summation agrees with the q-expansion") {
  const Complex z{0.0, 3.0};
  for (int i = 1; i <= 6; ++i) {
    Complex direct = a_point(i, z);
    Complex via_series = eval_series(a_series(i, Rat(30)), z);
    CHECK(std::abs(direct - via_series) < 1e-10);
  }
  Complex eta_direct = eta_point(z);
  Complex eta_via = eval_series(eta_series(1, Rat(30)), z);
  CHECK(std::abs(eta_direct - eta_via) < 1e-10);
}

TEST_CASE("the fourth theta constant is negative on the imaginary axis") {
  Complex v = a_point(4, {0.0, 2.0});
  CHECK(v.real() < 0.0);
  CHECK(std::abs(v.imag()) < 1e-15);
}

TEST_CASE("points too close to the real axis are rejected") {
  CHECK_THROWS_AS((void)eta_point({0.0, 0.001}), TailBoundExceeded);
  CHECK_THROWS_AS((void)theta_constant_point(13, 1, {0.0, 0.001}),
                  TailBoundExceeded);
  CHECK_THROWS_AS((void)a_point(7, {0.0, 1.0}), UnknownSeries);
}

TEST_CASE("transformation laws under the two group generators") {
  auto n1 = verify_numeric_identity("N1");
  INFO(n1.detail);
  CHECK(n1.pass);
  auto n2 = verify_numeric_identity("N2");
  INFO(n2.detail);
  CHECK(n2.pass);
  CHECK(n1.suite == "numeric");
  // The inversion point z = i is fixed by z -> -1/z.
  auto fixed = verify_numeric_identity("N2", {SamplePoint({0.0, 1.0})});
  CHECK(fixed.pass);
}

TEST_CASE("cubic period radicals and quadrant signs") {
  auto r = verify_numeric_identity("N3");
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("sign resolution is exact-square guarded") {
  CHECK(resolve_sign(constant("r1"), Quad(Rat(-13), Rat(-2)),
                     HalfPlane::im_positive) == 1);
  CHECK(resolve_sign(-constant("r1"), Quad(Rat(-13), Rat(-2)),
                     HalfPlane::im_positive) == -1);
  CHECK(resolve_sign(sqrt13_cyc(), Quad(Rat(13), Rat(0)),
                     HalfPlane::re_positive) == 1);
  CHECK_THROWS_AS((void)resolve_sign(constant("r1"), Quad(Rat(-13), Rat(2)),
                                     HalfPlane::im_positive),
                  ExactSquareMismatch);
  // A purely imaginary value cannot be signed by its real part.
  CHECK_THROWS_AS((void)resolve_sign(constant("r1"), Quad(Rat(-13), Rat(-2)),
                                     HalfPlane::re_positive),
                  AmbiguousSign);
  auto r = verify_numeric_identity("N4");
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("eta-quotient sum formulas for the partition congruences") {
  auto r = verify_numeric_identity("N5");
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("sine product gives the fundamental unit of Q(sqrt 13)") {
  auto r = verify_numeric_identity("N6");
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("unknown numeric ids are rejected") {
  CHECK_THROWS_AS((void)verify_numeric_identity("N9"), UnknownId);
  CHECK_THROWS_AS((void)verify_numeric_identity("N1", {}), Error);
}

TEST_CASE("the full numeric catalog passes at tight tolerance") {
  for (const auto& id : numeric_identity_ids()) {
    auto r = verify_numeric_identity(id);
    INFO(id << ": " << r.detail);
    CHECK(r.pass);
  }
}
