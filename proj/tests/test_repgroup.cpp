#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "hm13/fourteen.hpp"
#include "hm13/group.hpp"
#include "hm13/matrices.hpp"
#include "hm13/relations.hpp"
#include "hm13/sl2word.hpp"

using namespace hm13;

TEST_CASE("projective comparison recovers the lift scalar") {
  CycMatrix i6 = CycMatrix::identity(6);
  CycMatrix neg = -i6;
  auto lambda = neg.projective_scalar(i6);
  REQUIRE(lambda.has_value());
  CHECK(*lambda == Cyc(-1));
  CHECK(projective_eq(neg, i6));
  CHECK(neg.canonical() == i6.canonical());

  CycMatrix t = matrix_t6();
  CHECK_FALSE(projective_eq(t, i6));
  CHECK_FALSE(t.projective_scalar(i6).has_value());
}

TEST_CASE("scaled matrices share a canonical representative") {
  CycMatrix s = matrix_s6();
  CycMatrix scaled = (Cyc::zeta_pow(5) * Rat(3, 7)) * s;
  CHECK(scaled.canonical() == s.canonical());
  auto lambda = scaled.projective_scalar(s);
  REQUIRE(lambda.has_value());
  CHECK(*lambda == Cyc::zeta_pow(5) * Cyc(Rat(3, 7)));
}

TEST_CASE("word evaluation in the unimodular group") {
  Mat2z s = sl2_s(), t = sl2_t();
  CHECK(s * s == Mat2z{{-1, 0, 0, -1}});
  CHECK((s * t).pow(3) == Mat2z{{-1, 0, 0, -1}});
  CHECK(t.pow(-1) * t == Mat2z::identity());
  CHECK(sl2_p().det() == 1);
  CHECK(sl2_q().det() == 1);
  Mat2z w = sl2_word_eval({{'s', 1}, {'s', 1}});
  CHECK(w == Mat2z{{-1, 0, 0, -1}});
  CHECK(sl2_word_eval({{'q', 2}, {'p', -1}}) ==
        sl2_q() * sl2_q() * sl2_p().inverse_unimodular());
  CHECK_THROWS_AS(sl2_word_eval({{'x', 1}}), const Error&);
}

TEST_CASE("closure enumeration finds the order-13 cyclic group") {
  auto g = enumerate_group({matrix_t6()}, {"t"});
  CHECK(g.order() == 13);
}

TEST_CASE("closure enumeration honors the safety cap") {
  CHECK_THROWS_AS(enumerate_group({matrix_s6(), matrix_t6()}, {"s", "t"}, 50),
                  const CapExceeded&);
}

TEST_CASE("triangular subgroup closure contains its generators") {
  auto g = enumerate_group({matrix_h(), matrix_t6()}, {"h", "t"});
  REQUIRE(g.order() == 78);
  auto contains = [&](const CycMatrix& m) {
    std::string k = m.canonical().key();
    return std::any_of(g.elements.begin(), g.elements.end(),
                       [&](const CycMatrix& e) {
                         return e.canonical().key() == k;
                       });
  };
  CHECK(contains(matrix_h()));
  CHECK(contains(matrix_t6()));
  CHECK(contains(matrix_h() * matrix_t6()));
  CHECK_FALSE(contains(matrix_s6()));
}

TEST_CASE("matrix catalogue") {
  CHECK(build_matrix("S6").size() == 6);
  CHECK(build_matrix("S14").size() == 14);
  CHECK(build_matrix("ST") == matrix_s6() * matrix_t6());
  CHECK_THROWS_AS(build_matrix("nope"), const UnknownMatrix&);
}

TEST_CASE("every relation in the group catalogue verifies") {
  for (const auto& id : group_relation_ids()) {
    auto r = verify_group_relation(id);
    INFO(id, ": ", r.detail);
    CHECK(r.pass);
    CHECK(r.suite == "group");
  }
}

TEST_CASE("unknown relation ids are rejected") {
  CHECK_THROWS_AS(verify_group_relation("G99"), const UnknownId&);
}

TEST_CASE("block structure of the six-dimensional involution") {
  CycMatrix m = period_block_m(), n = period_block_n();
  CycMatrix mn = m * n;
  // The two circulant blocks commute and multiply to -sqrt(13) times the
  // identity, which is what makes the involution square to minus one.
  CHECK(mn == n * m);
  CHECK(mn == (-sqrt13_cyc()) * CycMatrix::identity(3));
  CycMatrix s = matrix_s6();
  CHECK(s * s == -CycMatrix::identity(6));
}
