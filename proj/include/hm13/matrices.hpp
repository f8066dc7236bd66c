#pragma once

#include <array>
#include <string>

#include "hm13/constants.hpp"
#include "hm13/matrix.hpp"

namespace hm13 {

namespace detail {

// Matrix whose (i,j) entry is z^a - z^b for the given exponent pairs,
// scaled by -1/sqrt(13).  All the printed six-dimensional group elements
// have this shape.
template <size_t N>
CycMatrix diff_matrix(const std::array<std::array<std::array<int, 2>, N>, N>&
                          pairs) {
  CycMatrix m(static_cast<int>(N));
  const Cyc scale = Rat(-1, 13) * sqrt13_cyc();  // -1/sqrt(13)
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          scale *
          (Cyc::zeta_pow(pairs[i][j][0]) - Cyc::zeta_pow(pairs[i][j][1]));
  return m;
}

inline CycMatrix diag(std::initializer_list<int> zeta_exponents) {
  CycMatrix m(static_cast<int>(zeta_exponents.size()));
  int i = 0;
  for (int e : zeta_exponents) {
    m.at(i, i) = Cyc::zeta_pow(e);
    ++i;
  }
  return m;
}

}  // namespace detail

// Circulant 3x3 blocks on the residue and non-residue period differences.
inline CycMatrix period_block_m() {
  CycMatrix m(3);
  const int top[3] = {1, 3, 9};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int k = top[(i + j) % 3];
      m.at(i, j) = Cyc::zeta_pow(k) - Cyc::zeta_pow(13 - k);
    }
  return m;
}

inline CycMatrix period_block_n() {
  CycMatrix m(3);
  const int top[3] = {5, 2, 6};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int k = top[(i + j) % 3];
      m.at(i, j) = Cyc::zeta_pow(k) - Cyc::zeta_pow(13 - k);
    }
  return m;
}

// Six-dimensional involution: -(1/sqrt13) [[-M, N], [N, M]] in terms of the
// circulant period blocks.
inline CycMatrix matrix_s6() {
  CycMatrix M = period_block_m(), N = period_block_n();
  CycMatrix s(6);
  const Cyc scale = Rat(-1, 13) * sqrt13_cyc();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      s.at(i, j) = scale * (-M.at(i, j));
      s.at(i, j + 3) = scale * N.at(i, j);
      s.at(i + 3, j) = scale * N.at(i, j);
      s.at(i + 3, j + 3) = scale * M.at(i, j);
    }
  return s;
}

inline CycMatrix matrix_t6() { return detail::diag({7, 11, 8, 6, 2, 5}); }

inline CycMatrix matrix_t7() { return detail::diag({0, 1, 4, 9, 3, 12, 10}); }

inline CycMatrix matrix_t14() {
  return detail::diag({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 0});
}

// Seven-dimensional involution: first row all ones, first column twos, and
// a Latin square of period pairs z^a + z^(13-a), all over sqrt(13).
inline CycMatrix matrix_s7() {
  CycMatrix s(7);
  const Cyc scale = Rat(1, 13) * sqrt13_cyc();  // 1/sqrt(13)
  auto pair = [](int a) { return Cyc::zeta_pow(a) + Cyc::zeta_pow(13 - a); };
  static const int latin[6][6] = {{2, 9, 6, 5, 3, 1}, {9, 5, 1, 3, 6, 2},
                                  {6, 1, 5, 2, 9, 3}, {5, 3, 2, 6, 1, 9},
                                  {3, 6, 9, 1, 2, 5}, {1, 2, 3, 9, 5, 6}};
  for (int j = 0; j < 7; ++j) s.at(0, j) = scale;
  for (int i = 1; i < 7; ++i) {
    s.at(i, 0) = Rat(2) * scale;
    for (int j = 1; j < 7; ++j) s.at(i, j) = scale * pair(latin[i - 1][j - 1]);
  }
  return s;
}

// Signed permutation of order 12 (order 6 projectively) generating the
// normalizer of the diagonal torus together with T.
inline CycMatrix matrix_h() {
  CycMatrix h(6);
  h.at(0, 5) = Cyc(1);
  h.at(1, 3) = Cyc(1);
  h.at(2, 4) = Cyc(1);
  h.at(3, 2) = Cyc(-1);
  h.at(4, 0) = Cyc(-1);
  h.at(5, 1) = Cyc(-1);
  return h;
}

// ---- printed forms of derived six-dimensional elements, kept verbatim so
// ---- the word computations can be checked entry by entry.

using Pairs6 = std::array<std::array<std::array<int, 2>, 6>, 6>;

inline CycMatrix printed_st() {
  static const Pairs6 p = {{
      {{{{6, 8}}, {{8, 1}}, {{12, 4}}, {{11, 1}}, {{4, 0}}, {{11, 12}}}},
      {{{{4, 10}}, {{2, 7}}, {{7, 9}}, {{8, 4}}, {{8, 9}}, {{10, 0}}}},
      {{{{11, 3}}, {{10, 12}}, {{5, 11}}, {{12, 0}}, {{7, 10}}, {{7, 3}}}},
      {{{{12, 2}}, {{0, 9}}, {{1, 2}}, {{7, 5}}, {{5, 12}}, {{1, 9}}}},
      {{{{9, 5}}, {{4, 5}}, {{0, 3}}, {{9, 3}}, {{11, 6}}, {{6, 4}}}},
      {{{{0, 1}}, {{3, 6}}, {{10, 6}}, {{2, 10}}, {{3, 1}}, {{8, 2}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix printed_st_inverse() {
  static const Pairs6 p = {{
      {{{{5, 7}}, {{3, 9}}, {{10, 2}}, {{11, 1}}, {{8, 4}}, {{12, 0}}}},
      {{{{12, 5}}, {{6, 11}}, {{1, 3}}, {{4, 0}}, {{8, 9}}, {{7, 10}}}},
      {{{{9, 1}}, {{4, 6}}, {{2, 8}}, {{11, 12}}, {{10, 0}}, {{7, 3}}}},
      {{{{12, 2}}, {{9, 5}}, {{0, 1}}, {{8, 6}}, {{10, 4}}, {{3, 11}}}},
      {{{{0, 9}}, {{4, 5}}, {{3, 6}}, {{1, 8}}, {{7, 2}}, {{12, 10}}}},
      {{{{1, 2}}, {{0, 3}}, {{10, 6}}, {{4, 12}}, {{9, 7}}, {{11, 5}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix printed_q3() {
  static const Pairs6 p = {{
      {{{{11, 1}}, {{12, 8}}, {{0, 1}}, {{6, 4}}, {{4, 11}}, {{0, 8}}}},
      {{{{0, 9}}, {{8, 9}}, {{4, 7}}, {{0, 7}}, {{2, 10}}, {{10, 8}}}},
      {{{{10, 11}}, {{0, 3}}, {{7, 3}}, {{12, 7}}, {{0, 11}}, {{5, 12}}}},
      {{{{9, 7}}, {{2, 9}}, {{5, 0}}, {{2, 12}}, {{1, 5}}, {{0, 12}}}},
      {{{{6, 0}}, {{3, 11}}, {{5, 3}}, {{0, 4}}, {{5, 4}}, {{9, 6}}}},
      {{{{6, 1}}, {{2, 0}}, {{1, 8}}, {{3, 2}}, {{0, 10}}, {{6, 10}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix printed_p4() {
  static const Pairs6 p = {{
      {{{{7, 0}}, {{2, 7}}, {{6, 8}}, {{2, 11}}, {{5, 6}}, {{8, 11}}}},
      {{{{2, 7}}, {{11, 0}}, {{5, 11}}, {{7, 8}}, {{5, 8}}, {{6, 2}}}},
      {{{{6, 8}}, {{5, 11}}, {{8, 0}}, {{2, 5}}, {{11, 7}}, {{6, 7}}}},
      {{{{2, 11}}, {{7, 8}}, {{2, 5}}, {{6, 0}}, {{11, 6}}, {{7, 5}}}},
      {{{{5, 6}}, {{5, 8}}, {{11, 7}}, {{11, 6}}, {{2, 0}}, {{8, 2}}}},
      {{{{8, 11}}, {{6, 2}}, {{6, 7}}, {{7, 5}}, {{8, 2}}, {{5, 0}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix printed_q3p4() {
  static const Pairs6 p = {{
      {{{{7, 5}}, {{2, 9}}, {{10, 5}}, {{6, 3}}, {{3, 7}}, {{10, 9}}}},
      {{{{12, 6}}, {{11, 6}}, {{5, 3}}, {{12, 3}}, {{2, 1}}, {{1, 11}}}},
      {{{{6, 1}}, {{4, 2}}, {{8, 2}}, {{9, 8}}, {{4, 1}}, {{5, 9}}}},
      {{{{10, 7}}, {{6, 10}}, {{4, 3}}, {{6, 8}}, {{11, 4}}, {{3, 8}}}},
      {{{{10, 1}}, {{12, 11}}, {{2, 12}}, {{1, 7}}, {{2, 7}}, {{8, 10}}}},
      {{{{5, 4}}, {{12, 9}}, {{4, 8}}, {{7, 12}}, {{9, 11}}, {{5, 11}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix printed_q3p4_squared() {
  static const Pairs6 p = {{
      {{{{8, 6}}, {{7, 1}}, {{12, 7}}, {{6, 3}}, {{12, 3}}, {{9, 8}}}},
      {{{{4, 11}}, {{7, 2}}, {{11, 9}}, {{3, 7}}, {{2, 1}}, {{4, 1}}}},
      {{{{8, 3}}, {{10, 8}}, {{11, 5}}, {{10, 9}}, {{1, 11}}, {{5, 9}}}},
      {{{{10, 7}}, {{10, 1}}, {{5, 4}}, {{5, 7}}, {{6, 12}}, {{1, 6}}}},
      {{{{6, 10}}, {{12, 11}}, {{12, 9}}, {{9, 2}}, {{6, 11}}, {{2, 4}}}},
      {{{{4, 3}}, {{2, 12}}, {{4, 8}}, {{5, 10}}, {{3, 5}}, {{2, 8}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix printed_q5p2() {
  static const Pairs6 p = {{
      {{{{8, 5}}, {{4, 8}}, {{2, 1}}, {{4, 6}}, {{9, 2}}, {{1, 6}}}},
      {{{{5, 9}}, {{7, 6}}, {{10, 7}}, {{9, 2}}, {{10, 2}}, {{3, 5}}}},
      {{{{12, 11}}, {{6, 3}}, {{11, 2}}, {{1, 6}}, {{3, 5}}, {{12, 5}}}},
      {{{{7, 9}}, {{11, 4}}, {{7, 12}}, {{5, 8}}, {{9, 5}}, {{11, 12}}}},
      {{{{11, 4}}, {{11, 3}}, {{8, 10}}, {{8, 4}}, {{6, 7}}, {{3, 6}}}},
      {{{{7, 12}}, {{8, 10}}, {{8, 1}}, {{1, 2}}, {{7, 10}}, {{2, 11}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix printed_p2q6p8() {
  static const Pairs6 p = {{
      {{{{8, 5}}, {{12, 3}}, {{4, 3}}, {{2, 4}}, {{12, 5}}, {{10, 2}}}},
      {{{{10, 1}}, {{7, 6}}, {{4, 1}}, {{12, 5}}, {{5, 10}}, {{4, 6}}}},
      {{{{10, 9}}, {{12, 9}}, {{11, 2}}, {{10, 2}}, {{4, 6}}, {{6, 12}}}},
      {{{{9, 11}}, {{8, 1}}, {{11, 3}}, {{5, 8}}, {{1, 10}}, {{9, 10}}}},
      {{{{8, 1}}, {{3, 8}}, {{7, 9}}, {{3, 12}}, {{6, 7}}, {{9, 12}}}},
      {{{{11, 3}}, {{7, 9}}, {{1, 7}}, {{3, 4}}, {{1, 4}}, {{2, 11}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix printed_h_word_prefix() {
  // Q^5 P^2 * P^2 Q^6 P^8 * Q^5 P^2
  static const Pairs6 p = {{
      {{{{7, 6}}, {{8, 5}}, {{11, 2}}, {{4, 9}}, {{12, 1}}, {{10, 3}}}},
      {{{{8, 5}}, {{11, 2}}, {{7, 6}}, {{12, 1}}, {{10, 3}}, {{4, 9}}}},
      {{{{11, 2}}, {{7, 6}}, {{8, 5}}, {{10, 3}}, {{4, 9}}, {{12, 1}}}},
      {{{{4, 9}}, {{12, 1}}, {{10, 3}}, {{6, 7}}, {{5, 8}}, {{2, 11}}}},
      {{{{12, 1}}, {{10, 3}}, {{4, 9}}, {{5, 8}}, {{2, 11}}, {{6, 7}}}},
      {{{{10, 3}}, {{4, 9}}, {{12, 1}}, {{2, 11}}, {{6, 7}}, {{5, 8}}}},
  }};
  return detail::diff_matrix(p);
}

inline CycMatrix embed3(const CycMatrix& b) {
  CycMatrix m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = b.at(i, j);
  return m;
}

// The fourteen-dimensional involution is produced from the cubic-form
// update coefficients; its construction lives with the form machinery
// (fourteen.hpp), which defines this function.
CycMatrix derived_s14();

// Named catalogue used by the CLI and the relation checks.  P and Q are the
// standard word generators P = S T^{-1} S and Q = S T^3.
inline CycMatrix build_matrix(const std::string& name) {
  if (name == "S6") return matrix_s6();
  if (name == "T6") return matrix_t6();
  if (name == "S7") return matrix_s7();
  if (name == "T7") return matrix_t7();
  if (name == "T14") return matrix_t14();
  if (name == "H") return matrix_h();
  if (name == "M3") return period_block_m();
  if (name == "N3") return period_block_n();
  if (name == "P") {
    CycMatrix s = matrix_s6(), t = matrix_t6();
    return s * t.inverse() * s;
  }
  if (name == "Q") return matrix_s6() * matrix_t6().pow(3);
  if (name == "ST") return matrix_s6() * matrix_t6();
  if (name == "S14") return derived_s14();
  throw UnknownMatrix(name);
}

}  // namespace hm13
