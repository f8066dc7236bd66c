#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "hm13/constants.hpp"
#include "hm13/cyclotomic.hpp"
#include "hm13/quad.hpp"
#include "hm13/rational.hpp"

using namespace hm13;

namespace {

Cyc random_cyc(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Cyc v;
  for (int k = 0; k < Cyc::kDim; ++k) v.coeff(k) = rat(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, 3) + rat(2, 5) == rat(11, 15));
  CHECK_THROWS_AS(rat(1, 0), DivisionByZero);
}

TEST_CASE("power basis reduction") {
  // z^13 == 1 and z^12 folds onto the basis via the vanishing sum of all
  // thirteenth roots of unity.
  CHECK(Cyc::zeta_pow(13) == Cyc::one());
  CHECK(Cyc::zeta_pow(-1) == Cyc::zeta_pow(12));
  Cyc all;
  for (int k = 0; k <= 12; ++k) all += Cyc::zeta_pow(k);
  CHECK(all.is_zero());
  // z^6 * z^7 == 1 exercises the fold in multiplication.
  CHECK(Cyc::zeta_pow(6) * Cyc::zeta_pow(7) == Cyc::one());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 24; ++trial) {
    Cyc a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyc::one());
      CHECK((a * b) / a == b);
    }
  }
  CHECK_THROWS_AS(Cyc::zero().inverse(), DivisionByZero);
}

TEST_CASE("square root of thirteen") {
  const Cyc& s = sqrt13_cyc();
  CHECK(s * s == Cyc(13));
  // Positive real embedding.
  Complex sc = s.to_complex();
  CHECK(std::abs(sc - Complex{std::sqrt(13.0), 0.0}) < 1e-12);
}

TEST_CASE("quadratic subfield embedding is a ring map") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-8, 8);
  for (int trial = 0; trial < 20; ++trial) {
    Quad x{rat(d(rng), 3), rat(d(rng), 2)};
    Quad y{rat(d(rng), 5), rat(d(rng), 7)};
    CHECK(embed(x + y) == embed(x) + embed(y));
    CHECK(embed(x * y) == embed(x) * embed(y));
    REQUIRE(as_quad(embed(x)).has_value());
    CHECK(*as_quad(embed(x)) == x);
  }
  CHECK(!as_quad(Cyc::zeta()).has_value());
}

TEST_CASE("cubic period symmetric functions") {
  Cyc t1 = constant("theta1"), t2 = constant("theta2");
  Cyc t3 = constant("theta3"), t4 = constant("theta4");
  CHECK(t1 + t2 + t3 + t4 == Cyc(-1));
  CHECK(t1 * t2 + t1 * t3 + t1 * t4 + t2 * t3 + t2 * t4 + t3 * t4 == Cyc(2));
  CHECK(t1 * t2 * t3 + t1 * t2 * t4 + t1 * t3 * t4 + t2 * t3 * t4 == Cyc(4));
  CHECK(t1 * t2 * t3 * t4 == Cyc(3));

  // Each period is a root of w^4 + w^3 + 2w^2 - 4w + 3.
  for (const Cyc& t : {t1, t2, t3, t4}) {
    Cyc v = t * t * t * t + t * t * t + Rat(2) * t * t - Rat(4) * t + Cyc(3);
    CHECK(v.is_zero());
  }
}

TEST_CASE("quartic splits into conjugate quadratics over Q(sqrt13)") {
  const Cyc& s = sqrt13_cyc();
  auto quadratic = [&](const Cyc& w, int sign) {
    Cyc half_lin = (Cyc(1) + Rat(sign) * s) / Rat(2);
    Cyc half_con = (Cyc(5) + Rat(sign) * s) / Rat(2);
    return w * w + half_lin * w + half_con;
  };
  // theta1, theta3 share the +sqrt13 factor; theta2, theta4 the other.
  CHECK(quadratic(constant("theta1"), -1).is_zero());
  CHECK(quadratic(constant("theta3"), -1).is_zero());
  CHECK(quadratic(constant("theta2"), 1).is_zero());
  CHECK(quadratic(constant("theta4"), 1).is_zero());
}

TEST_CASE("signed period combinations") {
  Cyc t1 = constant("theta1"), t2 = constant("theta2");
  Cyc t3 = constant("theta3"), t4 = constant("theta4");
  const Cyc& s = sqrt13_cyc();
  CHECK(t1 + t3 + t2 + t4 == Cyc(-1));
  CHECK(t1 + t3 - t2 - t4 == s);
  // The two remaining combinations square to -13 -+ 2 sqrt13.
  Cyc u = t1 - t3 - t2 + t4;
  Cyc v = t1 - t3 + t2 - t4;
  CHECK(u * u == Cyc(-13) + Rat(2) * s);
  CHECK(v * v == Cyc(-13) - Rat(2) * s);
}

TEST_CASE("radical square identities for the r constants") {
  const Cyc& s = sqrt13_cyc();
  Cyc r1 = constant("r1"), r2 = constant("r2");
  Cyc r3 = constant("r3"), r4 = constant("r4");
  CHECK(r1 * r1 == Cyc(-13) - Rat(2) * s);
  CHECK(r2 * r2 == (Cyc(-13) + Rat(3) * s) / Rat(2));
  CHECK(r3 * r3 == Cyc(-13) + Rat(2) * s);
  CHECK(r4 * r4 == (Cyc(-13) - Rat(3) * s) / Rat(2));
  // Upper-half-plane choices (full numeric pinning lives in the
  // floating-point suite; this is the cheap guard).
  for (const Cyc& r : {r1, r2, r3, r4}) CHECK(r.to_complex().imag() > 0);
}

TEST_CASE("period-difference scaling constants") {
  Cyc r0 = constant("r0"), rinf = constant("rinf");
  Cyc t13 = constant("theta1") - constant("theta3");
  Cyc t24 = constant("theta2") - constant("theta4");
  CHECK(r0 == Rat(2) * t13 - Rat(3) * t24);
  CHECK(rinf == -Rat(2) * t24 - Rat(3) * t13);
}

TEST_CASE("p constants collapse to sqrt13 times period pairs") {
  const Cyc& s = sqrt13_cyc();
  auto pair = [](int a) { return Cyc::zeta_pow(a) + Cyc::zeta_pow(13 - a); };
  CHECK(constant("p1") == s * pair(2));
  CHECK(constant("p2") == s * pair(9));
  CHECK(constant("p3") == s * pair(6));
  CHECK(constant("p4") == s * pair(5));
  CHECK(constant("p5") == s * pair(3));
  CHECK(constant("p6") == s * pair(1));
}

TEST_CASE("alpha beta gamma sum to sqrt13") {
  CHECK(constant("alpha") + constant("beta") + constant("gamma") ==
        sqrt13_cyc());
}

TEST_CASE("complex embedding agrees with radical expressions") {
  double s13 = std::sqrt(13.0);
  Complex t1{0.25 * (-1 + s13), 0.25 * std::sqrt(26 - 6 * s13)};
  Complex t2{0.25 * (-1 - s13), 0.25 * std::sqrt(26 + 6 * s13)};
  CHECK(ComplexApprox{t1, 1e-12}.matches(constant("theta1").to_complex()));
  CHECK(ComplexApprox{t2, 1e-12}.matches(constant("theta2").to_complex()));
  CHECK(ComplexApprox{std::conj(t1), 1e-12}.matches(
      constant("theta3").to_complex()));
  CHECK(ComplexApprox{std::conj(t2), 1e-12}.matches(
      constant("theta4").to_complex()));
}

TEST_CASE("unknown constant names are rejected") {
  CHECK_THROWS_AS(constant("theta5"), UnknownConstant);
  CHECK_THROWS_AS(constant("bogus"), UnknownConstant);
}
