#include "doctest.h"

#include "hm13/qidentities.hpp"

using namespace hm13;

namespace {

PuiseuxSeries brute_eta(const Rat& order) {
  PuiseuxSeries p = PuiseuxSeries::monomial(rat(1, 24), Rat(1), order);
  for (long n = 1; Rat(n) < order + 1; ++n) {
    p = p * (PuiseuxSeries::constant(Rat(1), order) -
             PuiseuxSeries::monomial(Rat(n), Rat(1), order));
    p.truncate_to(order);
  }
  return p;
}

}  // namespace

TEST_CASE("series arithmetic respects truncation windows") {
  PuiseuxSeries a = PuiseuxSeries::monomial(rat(1, 2), Rat(3), Rat(5));
  CHECK(a.coeff(rat(1, 2)) == 3);
  CHECK(a.coeff(Rat(2)) == 0);
  CHECK(a.trunc() == 5);

  PuiseuxSeries b = a + PuiseuxSeries::monomial(Rat(2), Rat(-1), Rat(4));
  CHECK(b.trunc() == 4);
  CHECK(b.coeff(Rat(2)) == -1);

  // (3 q^{1/2}) * (3 q^{1/2}) known below 5 + 1/2.
  PuiseuxSeries sq = a * a;
  CHECK(sq.coeff(Rat(1)) == 9);
  CHECK(sq.trunc() == rat(11, 2));

  PuiseuxSeries neg = -a;
  CHECK((a + neg).is_zero());
}

TEST_CASE("series inverse, quotient, and integer powers") {
  // 1/(1 - q) = 1 + q + q^2 + ...
  PuiseuxSeries one_minus_q =
      PuiseuxSeries::constant(Rat(1), Rat(8)) -
      PuiseuxSeries::monomial(Rat(1), Rat(1), Rat(8));
  PuiseuxSeries geom = one_minus_q.inverse();
  for (long n = 0; n < 8; ++n) CHECK(geom.coeff(Rat(n)) == 1);

  PuiseuxSeries q = PuiseuxSeries::monomial(Rat(1), Rat(2), Rat(6));
  PuiseuxSeries qinv = q.inverse();
  CHECK(qinv.coeff(Rat(-1)) == rat(1, 2));
  // Truncation of the reciprocal retreats by twice the leading exponent.
  CHECK(qinv.trunc() == Rat(4));

  CHECK(q.pow(3).coeff(Rat(3)) == 8);
  CHECK(q.pow(-2).coeff(Rat(-2)) == rat(1, 4));
  CHECK(q.pow(0).coeff(Rat(0)) == 1);

  // Negative leading exponents keep a tight window under powers:
  // (q^{-1} + ...) known below T has cube known below T - 2.
  PuiseuxSeries laurent =
      PuiseuxSeries::monomial(Rat(-1), Rat(1), Rat(10)) +
      PuiseuxSeries::monomial(Rat(0), Rat(1), Rat(10));
  CHECK(laurent.pow(3).trunc() == Rat(8));
  CHECK(laurent.pow(3).coeff(Rat(-3)) == 1);
  CHECK(laurent.pow(3).coeff(Rat(-2)) == 3);

  PuiseuxSeries empty(Rat(3));
  CHECK_THROWS_AS((void)empty.inverse(), DivisionByLeadingZero);
}

TEST_CASE("dilation scales exponents and the truncation bound") {
  PuiseuxSeries s = PuiseuxSeries::monomial(rat(1, 24), Rat(1), Rat(2));
  PuiseuxSeries d = s.dilate(13);
  CHECK(d.coeff(rat(13, 24)) == 1);
  CHECK(d.trunc() == Rat(26));
  CHECK_THROWS_AS((void)s.dilate(0), Error);
}

TEST_CASE("eta series matches the finite product definition") {
  CHECK(eta_series(1, Rat(16)) == brute_eta(Rat(16)));
  // Discriminant coefficients: tau(1)=1, tau(2)=-24, tau(3)=252.
  PuiseuxSeries delta = eta_series(1, Rat(5)).pow(24);
  CHECK(delta.coeff(Rat(1)) == 1);
  CHECK(delta.coeff(Rat(2)) == -24);
  CHECK(delta.coeff(Rat(3)) == 252);
  CHECK_THROWS_AS((void)eta_series(13, rat(1, 2)), OrderTooSmall);
}

TEST_CASE("partition generating series and progression extraction") {
  PuiseuxSeries p = partition_series(12);
  CHECK(p.coeff(Rat(0)) == 1);
  CHECK(p.coeff(Rat(4)) == 5);
  CHECK(p.coeff(Rat(9)) == 30);
  CHECK(p.coeff(Rat(11)) == 56);

  PuiseuxSeries p5 = extract_progression(partition_series(30), 5, 4);
  CHECK(p5.coeff(Rat(0)) == 5);
  CHECK(p5.coeff(Rat(1)) == 30);
  CHECK(p5.coeff(Rat(2)) == 135);

  PuiseuxSeries p13 = extract_progression(partition_series(40), 13, 6);
  CHECK(p13.coeff(Rat(0)) == 11);
  CHECK(p13.coeff(Rat(1)) == 490);

  CHECK_THROWS_AS((void)extract_progression(p, 5, 7), Error);
}

TEST_CASE("theta constants: direct sum equals the triple product") {
  CHECK(verify_q_identity("Q21", Rat(12)).pass);
  // Leading behaviour of the six theta constants.
  static const long ell[6] = {11, 7, 5, 3, 9, 1};
  for (int i = 1; i <= 6; ++i) {
    auto ld = a_series(i, Rat(6)).leading();
    REQUIRE(ld.has_value());
    CHECK(ld->first == rat(ell[i - 1] * ell[i - 1], 104));
    CHECK(ld->second == (i == 4 ? -1 : 1));
  }
  CHECK_THROWS_AS((void)a_series(7, Rat(6)), UnknownSeries);
}

TEST_CASE("two-variable theta function of Ramanujan") {
  // f(-q, -q^2) = (q; q)_infty by Euler.
  PuiseuxSeries f = ramanujan_theta_f(Rat(1), Rat(2), Rat(15));
  PuiseuxSeries poch = pochhammer_series(Rat(1), Rat(1), Rat(15));
  CHECK((f - poch).is_zero());
}

TEST_CASE("j-function expansion") {
  PuiseuxSeries j = j_series(3);
  CHECK(j.coeff(Rat(-1)) == 1);
  CHECK(j.coeff(Rat(0)) == 744);
  CHECK(j.coeff(Rat(1)) == 196884);
  CHECK(j.coeff(Rat(2)) == 21493760);
}

TEST_CASE("evaluating polynomial forms on series arguments") {
  // A0 = z1 z4 + z2 z5 + z3 z6 on constants (1..6) gives 4+10+18 = 32.
  std::vector<PuiseuxSeries> args;
  for (long v = 1; v <= 6; ++v)
    args.push_back(PuiseuxSeries::constant(Rat(v), Rat(4)));
  PuiseuxSeries val = evaluate_form(form_a(0), args, Rat(4));
  CHECK(val.coeff(Rat(0)) == 32);

  std::vector<PuiseuxSeries> wrong(2, PuiseuxSeries::constant(Rat(1), Rat(4)));
  CHECK_THROWS_AS((void)evaluate_form(form_a(0), wrong, Rat(4)), SizeMismatch);
  // Forms with irrational coefficients cannot be evaluated on rational
  // series.
  CHECK_THROWS_AS((void)evaluate_form(form_phi_inf(), args, Rat(4)), Error);
}

TEST_CASE("every q-expansion identity in the catalog verifies") {
  for (const auto& id : q_identity_ids()) {
    auto r = verify_q_identity(id);
    INFO(id << ": " << r.detail);
    CHECK(r.pass);
    CHECK(r.suite == "qseries");
  }
}

TEST_CASE("identity checks fail loudly when the order is too small") {
  CHECK_THROWS_AS((void)verify_q_identity("Q1", Rat(1)), OrderTooSmall);
  CHECK_THROWS_AS((void)verify_q_identity("Q99"), UnknownId);
}

TEST_CASE("a sharper order can be requested explicitly") {
  auto r = verify_q_identity("Q15", Rat(25));
  CHECK(r.pass);
}
