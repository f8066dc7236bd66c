#include <string>
#include <vector>

#include "doctest.h"
#include "hm13/identities.hpp"

using namespace hm13;

namespace {

MultiPoly senary_mono(std::initializer_list<int> e, long c) {
  return MultiPoly::monomial(6, Expo(e), Cyc(c));
}

}  // namespace

TEST_CASE("form constructors match their displayed term lists") {
  CHECK(form_a(1) == senary_mono({2, 0, 0, 0, 0, 0}, 1) +
                         senary_mono({0, 0, 1, 1, 0, 0}, -2));
  CHECK(form_d(5) == senary_mono({0, 0, 0, 3, 0, 0}, -1) +
                         senary_mono({0, 0, 2, 0, 1, 0}, 1) +
                         senary_mono({0, 0, 1, 0, 0, 2}, -2) +
                         senary_mono({0, 1, 0, 0, 1, 1}, 1) +
                         senary_mono({1, 0, 0, 1, 0, 1}, 3));
  CHECK(form_g(0) == form_d(0) * form_d(0) + form_d(13) * form_d(13));
  CHECK(form_psi2() == form_a(0) * form_a(0) + form_a(1) * form_a(5) +
                           form_a(2) * form_a(3) + form_a(4) * form_a(6));
  CHECK(form_delta_inf() == senary_mono({2, 2, 2, 0, 0, 0}, 169) +
                                senary_mono({0, 0, 0, 2, 2, 2}, 169));
  CHECK(form_phi_inf() == sqrt13_cyc() * form_a(0));
  CHECK_THROWS_AS(build_form("nope"), const UnknownForm&);
  CHECK_THROWS_AS(form_a(7), const UnknownForm&);
  CHECK_THROWS_AS(form_g(13), const UnknownForm&);
}

TEST_CASE("substitution basics") {
  MultiPoly a0 = form_a(0);
  CHECK(a0.substitute(CycMatrix::identity(6)) == a0);
  // The diagonal shift fixes A0 because paired exponents sum to thirteen.
  CHECK(a0.substitute(matrix_t6()) == a0);
  CHECK_THROWS_AS(a0.substitute(CycMatrix::identity(7)),
                  const SizeMismatch&);
}

TEST_CASE("invariance scalar distinguishes fixed and moved forms") {
  auto l = invariance_scalar(form_phi4(), matrix_s6());
  REQUIRE(l.has_value());
  CHECK(*l == Cyc(1));
  CHECK_FALSE(invariance_scalar(form_f6(), matrix_s6()).has_value());
  // A form scaled by a root of unity is still proportional.
  MultiPoly d1 = form_d(1);
  auto l2 = invariance_scalar(d1, matrix_t6());
  REQUIRE(l2.has_value());
  CHECK(*l2 == Cyc::zeta());
}

TEST_CASE("express_in_basis solves exactly and detects non-membership") {
  std::vector<MultiPoly> dbasis;
  for (int k = 0; k <= 13; ++k) dbasis.push_back(form_d(k));

  auto unit = express_in_basis(form_d(0), dbasis);
  REQUIRE(unit.has_value());
  for (int k = 0; k <= 13; ++k)
    CHECK((*unit)[k] == (k == 0 ? Cyc(1) : Cyc::zero()));

  // A cubic monomial outside the fourteen-dimensional span.
  CHECK_FALSE(express_in_basis(senary_mono({3, 0, 0, 0, 0, 0}, 1), dbasis)
                  .has_value());

  // The first row of the induced involution carries the named half-period
  // constants in the documented pattern.
  MultiPoly image = (Rat(-13) * sqrt13_cyc()) * form_d(0).substitute(
                        matrix_s6());
  auto row = express_in_basis(image, dbasis);
  REQUIRE(row.has_value());
  const char* expected[14] = {"r0", "r1", "r2", "r1", "r3", "r2", "r2",
                              "r4", "r4", "r1", "r3", "r4", "r3", "rinf"};
  for (int k = 0; k < 14; ++k) CHECK((*row)[k] == constant(expected[k]));
}

TEST_CASE("quadratic family row expansion carries the period constants") {
  std::vector<MultiPoly> abasis;
  for (int i = 0; i <= 6; ++i) abasis.push_back(form_a(i));
  MultiPoly image = Rat(13) * form_a(1).substitute(matrix_s6());
  auto row = express_in_basis(image, abasis);
  REQUIRE(row.has_value());
  CHECK((*row)[0] == Rat(2) * sqrt13_cyc());
  for (int j = 1; j <= 6; ++j)
    CHECK((*row)[j] == constant("p" + std::to_string(j)));
}

TEST_CASE("univariate arithmetic and the resolvent polynomials") {
  MultiPoly q5 = build_form("tau_quadratic_5");
  CHECK(q5 == detail::univariate({Quad(1), Quad(5), Quad(13)}));
  CHECK(q5.pow(2) == q5 * q5);
  MultiPoly tau = MultiPoly::monomial(1, {1}, Cyc(1));
  CHECK(q5 - q5 == MultiPoly(1));
  CHECK((tau + MultiPoly::constant(1, Cyc(2))) *
            (tau + MultiPoly::constant(1, Cyc(3))) ==
        detail::univariate({Quad(1), Quad(5), Quad(6)}));
}

TEST_CASE("every identity in the symbolic catalogue verifies") {
  for (const auto& id : symbolic_identity_ids()) {
    auto r = verify_symbolic_identity(id);
    INFO(id, ": ", r.detail);
    CHECK(r.pass);
    CHECK(r.suite == "symbolic");
  }
}

TEST_CASE("unknown identity ids are rejected") {
  CHECK_THROWS_AS(verify_symbolic_identity("P99"), const UnknownId&);
}

TEST_CASE("printed involution audit lists exactly the suspected typos") {
  auto errata = printed_s14_errata();
  REQUIRE(errata.size() == 2);
  CHECK(errata[0].find("expanded rows") != std::string::npos);
  CHECK(errata[0].find("row D9") != std::string::npos);
  // The standalone block display is clean.
  CHECK(s14_errata(printed_s14(), "block display").empty());
}
