#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "hm13/constants.hpp"
#include "hm13/poly.hpp"

namespace hm13 {

namespace detail {

// Convenience builder for integer combinations of senary monomials.
struct Mono {
  long coeff;
  Expo e;  // six exponents
};

inline MultiPoly senary(std::initializer_list<Mono> monos) {
  MultiPoly p(6);
  for (const auto& m : monos) p.add_term(m.e, Cyc(m.coeff));
  return p;
}

inline MultiPoly univariate(std::initializer_list<Quad> coeffs_desc) {
  // Coefficients from the highest degree down, in the real quadratic
  // subfield (embedded into the cyclotomic coefficient field).
  MultiPoly p(1);
  int deg = static_cast<int>(coeffs_desc.size()) - 1;
  int i = 0;
  for (const auto& c : coeffs_desc) {
    p.add_term({deg - i}, embed(c));
    ++i;
  }
  return p;
}

}  // namespace detail

// Quadratic forms carrying the seven-dimensional representation.
inline MultiPoly form_a(int i) {
  using detail::senary;
  switch (i) {
    case 0:
      return senary({{1, {1, 0, 0, 1, 0, 0}},
                     {1, {0, 1, 0, 0, 1, 0}},
                     {1, {0, 0, 1, 0, 0, 1}}});
    case 1:
      return senary({{1, {2, 0, 0, 0, 0, 0}}, {-2, {0, 0, 1, 1, 0, 0}}});
    case 2:
      return senary({{-1, {0, 0, 0, 0, 2, 0}}, {-2, {0, 1, 0, 1, 0, 0}}});
    case 3:
      return senary({{1, {0, 2, 0, 0, 0, 0}}, {-2, {1, 0, 0, 0, 1, 0}}});
    case 4:
      return senary({{1, {0, 0, 2, 0, 0, 0}}, {-2, {0, 1, 0, 0, 0, 1}}});
    case 5:
      return senary({{-1, {0, 0, 0, 2, 0, 0}}, {-2, {1, 0, 0, 0, 0, 1}}});
    case 6:
      return senary({{-1, {0, 0, 0, 0, 0, 2}}, {-2, {0, 0, 1, 0, 1, 0}}});
    default:
      throw UnknownForm("A" + std::to_string(i));
  }
}

// Cubic forms carrying the fourteen-dimensional representation; index 13
// stands for the form attached to the cusp.
inline MultiPoly form_d(int i) {
  using detail::senary;
  switch (i) {
    case 0:
      return senary({{1, {1, 1, 1, 0, 0, 0}}});
    case 1:
      return senary({{2, {0, 1, 2, 0, 0, 0}},
                     {1, {0, 2, 0, 0, 0, 1}},
                     {-1, {0, 0, 0, 2, 1, 0}},
                     {1, {1, 0, 0, 0, 1, 1}}});
    case 2:
      return senary({{-1, {0, 0, 0, 0, 0, 3}},
                     {1, {0, 2, 0, 1, 0, 0}},
                     {-2, {0, 1, 0, 0, 2, 0}},
                     {1, {1, 0, 0, 1, 1, 0}},
                     {3, {0, 0, 1, 0, 1, 1}}});
    case 3:
      return senary({{2, {1, 2, 0, 0, 0, 0}},
                     {1, {2, 0, 0, 0, 1, 0}},
                     {-1, {0, 0, 0, 1, 0, 2}},
                     {1, {0, 0, 1, 1, 1, 0}}});
    case 4:
      return senary({{-1, {0, 2, 1, 0, 0, 0}},
                     {1, {1, 0, 0, 0, 0, 2}},
                     {-2, {0, 0, 0, 2, 0, 1}},
                     {-1, {1, 0, 1, 0, 1, 0}}});
    case 5:
      return senary({{-1, {0, 0, 0, 3, 0, 0}},
                     {1, {0, 0, 2, 0, 1, 0}},
                     {-2, {0, 0, 1, 0, 0, 2}},
                     {1, {0, 1, 0, 0, 1, 1}},
                     {3, {1, 0, 0, 1, 0, 1}}});
    case 6:
      return senary({{-1, {0, 0, 0, 0, 3, 0}},
                     {1, {2, 0, 0, 0, 0, 1}},
                     {-2, {1, 0, 0, 2, 0, 0}},
                     {1, {0, 0, 1, 1, 0, 1}},
                     {3, {0, 1, 0, 1, 1, 0}}});
    case 7:
      return senary({{-1, {0, 3, 0, 0, 0, 0}},
                     {1, {0, 0, 1, 2, 0, 0}},
                     {-1, {1, 0, 1, 0, 0, 1}},
                     {-3, {1, 1, 0, 0, 1, 0}},
                     {2, {2, 0, 0, 1, 0, 0}}});
    case 8:
      return senary({{-1, {3, 0, 0, 0, 0, 0}},
                     {1, {0, 1, 0, 0, 0, 2}},
                     {-1, {0, 1, 1, 0, 1, 0}},
                     {-3, {1, 0, 1, 1, 0, 0}},
                     {2, {0, 0, 2, 0, 0, 1}}});
    case 9:
      return senary({{2, {2, 0, 1, 0, 0, 0}},
                     {1, {0, 0, 2, 1, 0, 0}},
                     {-1, {0, 0, 0, 0, 2, 1}},
                     {1, {0, 1, 0, 1, 0, 1}}});
    case 10:
      return senary({{-1, {1, 0, 2, 0, 0, 0}},
                     {1, {0, 1, 0, 2, 0, 0}},
                     {-2, {0, 0, 0, 1, 2, 0}},
                     {-1, {1, 1, 0, 0, 0, 1}}});
    case 11:
      return senary({{-1, {0, 0, 3, 0, 0, 0}},
                     {1, {1, 0, 0, 0, 2, 0}},
                     {-1, {1, 1, 0, 1, 0, 0}},
                     {-3, {0, 1, 1, 0, 0, 1}},
                     {2, {0, 2, 0, 0, 1, 0}}});
    case 12:
      return senary({{-1, {2, 1, 0, 0, 0, 0}},
                     {1, {0, 0, 1, 0, 2, 0}},
                     {-2, {0, 0, 0, 0, 1, 2}},
                     {-1, {0, 1, 1, 1, 0, 0}}});
    case 13:  // cusp form
      return senary({{1, {0, 0, 0, 1, 1, 1}}});
    default:
      throw UnknownForm("D" + std::to_string(i));
  }
}

// The sextic family is quadratic in the cubic family; this structure is
// exposed so transformed sextics can be assembled from transformed cubics
// without re-expanding degree-six substitutions.
struct CubicPairTerm {
  long coeff;
  int m, n;  // indices into the cubic family, 13 = cusp form
};

inline const std::vector<CubicPairTerm>& sextic_structure(int i) {
  static const std::vector<CubicPairTerm> table[13] = {
      /* 0 */ {{1, 0, 0}, {1, 13, 13}},
      /* 1 */
      {{-1, 7, 7}, {2, 0, 1}, {10, 13, 1}, {2, 2, 12}, {-2, 3, 11},
       {-4, 4, 10}, {-2, 9, 5}},
      /* 2 */
      {{-2, 1, 1}, {-4, 0, 2}, {6, 13, 2}, {-2, 4, 11}, {2, 5, 10},
       {-2, 6, 9}, {-2, 7, 8}},
      /* 3 */
      {{-1, 8, 8}, {2, 0, 3}, {10, 13, 3}, {2, 6, 10}, {-2, 9, 7},
       {-4, 12, 4}, {-2, 1, 2}},
      /* 4 */
      {{-1, 2, 2}, {10, 0, 4}, {-2, 13, 4}, {2, 5, 12}, {-2, 9, 8},
       {-4, 1, 3}, {-2, 10, 7}},
      /* 5 */
      {{-2, 9, 9}, {-4, 0, 5}, {6, 13, 5}, {-2, 10, 8}, {2, 6, 12},
       {-2, 2, 3}, {-2, 11, 7}},
      /* 6 */
      {{-2, 3, 3}, {-4, 0, 6}, {6, 13, 6}, {-2, 12, 7}, {2, 2, 4},
       {-2, 5, 1}, {-2, 8, 11}},
      /* 7 */
      {{-2, 10, 10}, {6, 0, 7}, {4, 13, 7}, {-2, 1, 6}, {-2, 2, 5},
       {-2, 8, 12}, {-2, 9, 11}},
      /* 8 */
      {{-2, 4, 4}, {6, 0, 8}, {4, 13, 8}, {-2, 3, 5}, {-2, 6, 2},
       {-2, 11, 10}, {-2, 1, 7}},
      /* 9 */
      {{-1, 11, 11}, {2, 0, 9}, {10, 13, 9}, {2, 5, 4}, {-2, 1, 8},
       {-4, 10, 12}, {-2, 3, 6}},
      /* 10 */
      {{-1, 5, 5}, {10, 0, 10}, {-2, 13, 10}, {2, 6, 4}, {-2, 3, 7},
       {-4, 9, 1}, {-2, 12, 11}},
      /* 11 */
      {{-2, 12, 12}, {6, 0, 11}, {4, 13, 11}, {-2, 9, 2}, {-2, 5, 6},
       {-2, 7, 4}, {-2, 3, 8}},
      /* 12 */
      {{-1, 6, 6}, {10, 0, 12}, {-2, 13, 12}, {2, 2, 10}, {-2, 1, 11},
       {-4, 3, 9}, {-2, 4, 8}},
  };
  if (i < 0 || i > 12) throw UnknownForm("G" + std::to_string(i));
  return table[i];
}

inline MultiPoly form_g(int i) {
  MultiPoly r(6);
  for (const auto& t : sextic_structure(i))
    r += Rat(t.coeff) * (form_d(t.m) * form_d(t.n));
  return r;
}

inline MultiPoly form_phi4() {
  using detail::senary;
  return senary({{1, {0, 0, 1, 3, 0, 0}},
                 {1, {1, 0, 0, 0, 3, 0}},
                 {1, {0, 1, 0, 0, 0, 3}},
                 {-1, {3, 0, 0, 0, 0, 1}},
                 {-1, {0, 3, 0, 1, 0, 0}},
                 {-1, {0, 0, 3, 0, 1, 0}},
                 {3, {1, 1, 0, 1, 1, 0}},
                 {3, {0, 1, 1, 0, 1, 1}},
                 {3, {1, 0, 1, 1, 0, 1}}});
}

inline MultiPoly form_psi2() {
  return form_a(0) * form_a(0) + form_a(1) * form_a(5) +
         form_a(2) * form_a(3) + form_a(4) * form_a(6);
}

inline MultiPoly form_phi12() {
  MultiPoly s = Rat(7 * 169) * (form_g(0) * form_g(0));
  for (int k = 1; k <= 6; ++k) s += form_g(k) * form_g(13 - k);
  return Rat(-1, 26) * s;
}

inline MultiPoly form_f6() {
  using detail::senary;
  return senary({{1, {2, 1, 0, 2, 1, 0}},
                 {1, {0, 2, 1, 0, 2, 1}},
                 {1, {1, 0, 2, 1, 0, 2}},
                 {-1, {1, 1, 1, 1, 1, 1}}});
}

inline MultiPoly form_g6() {
  using detail::senary;
  return senary({{1, {2, 0, 1, 2, 0, 1}},
                 {1, {1, 2, 0, 1, 2, 0}},
                 {1, {0, 1, 2, 0, 1, 2}},
                 {4, {1, 1, 1, 1, 1, 1}}});
}

inline MultiPoly form_h6() {
  using detail::senary;
  return senary({{1, {0, 0, 0, 2, 2, 2}},
                 {-1, {2, 2, 2, 0, 0, 0}},
                 {3, {1, 1, 1, 1, 1, 1}}});
}

// sqrt(13) * (z1 z4 + z2 z5 + z3 z6): the cusp member of the degree-14
// family of quadrics.
inline MultiPoly form_phi_inf() { return sqrt13_cyc() * form_a(0); }

// 169 * (z1^2 z2^2 z3^2 + z4^2 z5^2 z6^2): the cusp member of the exotic
// degree-14 family of sextics.
inline MultiPoly form_delta_inf() {
  using detail::senary;
  return senary({{169, {2, 2, 2, 0, 0, 0}}, {169, {0, 0, 0, 2, 2, 2}}});
}

// Degree-12 icosahedral invariant in two variables.
inline MultiPoly form_f_icosa() {
  MultiPoly p(2);
  p.add_term({11, 1}, Cyc(1));
  p.add_term({6, 6}, Cyc(11));
  p.add_term({1, 11}, Cyc(-1));
  return p;
}

// Degree-6 invariant of the simple group of order 168, in three variables.
inline MultiPoly form_phi6_klein() {
  MultiPoly p(3);
  p.add_term({1, 5, 0}, Cyc(1));
  p.add_term({0, 1, 5}, Cyc(1));
  p.add_term({5, 0, 1}, Cyc(1));
  p.add_term({2, 2, 2}, Cyc(-5));
  return p;
}

inline MultiPoly build_form(const std::string& name) {
  auto index_after = [&](size_t prefix) {
    return std::stoi(name.substr(prefix));
  };
  try {
    if (name.size() >= 2 && name[0] == 'A' && std::isdigit(name[1]))
      return form_a(index_after(1));
    if (name == "Dinf") return form_d(13);
    if (name.size() >= 2 && name[0] == 'D' && std::isdigit(name[1]))
      return form_d(index_after(1));
    if (name.size() >= 2 && name[0] == 'G' && std::isdigit(name[1]))
      return form_g(index_after(1));
  } catch (const std::invalid_argument&) {
    throw UnknownForm(name);
  }
  if (name == "Phi4") return form_phi4();
  if (name == "Psi2") return form_psi2();
  if (name == "Phi12") return form_phi12();
  if (name == "f6") return form_f6();
  if (name == "g6") return form_g6();
  if (name == "h6") return form_h6();
  if (name == "f_icosa") return form_f_icosa();
  if (name == "Phi6_klein") return form_phi6_klein();
  if (name == "phi_inf") return form_phi_inf();
  if (name == "delta_inf") return form_delta_inf();
  using detail::univariate;
  if (name == "tau_quadratic_5")
    return univariate({Quad(1), Quad(5), Quad(13)});
  if (name == "tau_quadratic_6")
    return univariate({Quad(1), Quad(6), Quad(13)});
  if (name == "tau_quartic_13")
    return univariate({Quad(1), Quad(7), Quad(20), Quad(19), Quad(1)});
  if (name == "tau_quartic_247")
    return univariate(
        {Quad(1), Quad(247), Quad(3380), Quad(15379), Quad(28561)});
  if (name == "tau_sextic")
    return univariate({Quad(1), Quad(10), Quad(46), Quad(108), Quad(122),
                       Quad(38), Quad(-1)});
  throw UnknownForm(name);
}

}  // namespace hm13
