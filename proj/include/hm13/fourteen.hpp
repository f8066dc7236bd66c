#pragma once

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "hm13/basis.hpp"
#include "hm13/constants.hpp"
#include "hm13/forms.hpp"
#include "hm13/matrices.hpp"

namespace hm13 {

// The involution of the fourteen-dimensional representation, computed from
// first principles: row j holds the coordinates of D_j composed with the
// six-dimensional involution, expressed back on the cubic-form basis
// (D_0, ..., D_12, D_cusp).  This derived matrix is the ground truth; the
// printed version below is kept only to be audited against it.
inline CycMatrix derived_s14() {
  static const CycMatrix cached = [] {
    const CycMatrix s6 = matrix_s6();
    std::vector<MultiPoly> dbasis;
    for (int k = 0; k <= 13; ++k) dbasis.push_back(form_d(k));
    CycMatrix m(14);
    for (int j = 0; j <= 13; ++j) {
      auto coords = express_in_basis(dbasis[j].substitute(s6), dbasis);
      if (!coords)
        throw Error("cubic-form image does not lie in the cubic-form span");
      for (int k = 0; k <= 13; ++k) m.at(j, k) = (*coords)[k];
    }
    return m;
  }();
  return cached;
}

namespace detail {

// Entries of the printed fourteen-dimensional involution, as multiples of
// the named constants (prefactor -1/(13 sqrt 13) applied separately).
// Parsed from short strings: optional sign and integer, then a constant
// name, e.g. "-2q5", "13r1", "rinf".
inline Cyc symbolic_entry(const std::string& spec) {
  size_t i = 0;
  long sign = 1;
  if (spec[i] == '-') {
    sign = -1;
    ++i;
  }
  long mult = 1;
  if (std::isdigit(static_cast<unsigned char>(spec[i]))) {
    size_t used = 0;
    mult = std::stol(spec.substr(i), &used);
    i += used;
  }
  return Rat(sign * mult) * constant(spec.substr(i));
}

}  // namespace detail

namespace detail {

inline CycMatrix symbolic_s14(const char* const table[14][14]) {
  CycMatrix m(14);
  // -1/(13 sqrt 13) = -sqrt(13)/169
  const Cyc scale = Rat(-1, 169) * sqrt13_cyc();
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j)
      m.at(i, j) = scale * symbolic_entry(table[i][j]);
  return m;
}

}  // namespace detail

inline CycMatrix printed_s14() {
  // Rows D0..D12, Dcusp; the four 7x7 printed blocks flattened.
  static const char* table[14][14] = {
      {"r0", "r1", "r2", "r1", "r3", "r2", "r2",
       "r4", "r4", "r1", "r3", "r4", "r3", "rinf"},
      {"13r1", "q1", "q2", "q3", "q4", "q5", "q6",
       "q7", "q8", "q9", "q10", "q11", "q12", "-13r3"},
      {"26r2", "2q2", "-q4", "2q6", "2q8", "-q10", "-q12",
       "q1", "q3", "2q5", "2q7", "q9", "2q11", "-26r4"},
      {"13r1", "q3", "q6", "q9", "q12", "q2", "q5",
       "q8", "q11", "q1", "q4", "q7", "q10", "-13r3"},
      {"13r3", "q4", "q8", "q12", "-q3", "q7", "q11",
       "-q2", "-q6", "q10", "-q1", "-q5", "-q9", "13r1"},
      {"26r2", "2q5", "-q10", "2q2", "2q7", "-q12", "-q4",
       "q9", "q1", "2q6", "2q11", "q3", "2q8", "-26r4"},
      {"26r2", "2q6", "-q12", "2q5", "2q11", "-q4", "-q10",
       "q3", "q9", "2q2", "2q8", "q1", "2q7", "-26r4"},
      {"26r4", "2q7", "q1", "2q8", "-2q2", "q9", "q3",
       "q10", "q4", "2q11", "-2q5", "q12", "-2q6", "26r2"},
      {"26r4", "2q8", "q3", "2q11", "-2q6", "q1", "q9",
       "q4", "q12", "2q7", "-2q2", "q10", "-2q5", "26r2"},
      {"13r1", "q9", "q5", "q1", "q10", "q6", "q2",
       "q11", "q7", "q3", "q12", "q8", "q4", "-13r3"},
      {"13r3", "q10", "q7", "q4", "-q1", "q11", "q8",
       "-q5", "-q2", "q12", "-q9", "-q6", "-q3", "13r1"},
      {"26r4", "2q11", "q9", "2q7", "-2q5", "q3", "q1",
       "q12", "q10", "2q8", "-2q6", "q4", "-2q2", "26r2"},
      {"13r3", "q12", "q11", "q10", "-q9", "q8", "q7",
       "-q6", "-q5", "q4", "-q3", "-q2", "-q1", "13r1"},
      {"rinf", "-r3", "-r4", "-r3", "r1", "-r4", "-r4",
       "r2", "r2", "-r3", "r1", "r2", "r1", "-r0"},
  };
  return detail::symbolic_s14(table);
}

// The same involution as printed in the expanded row-by-row update
// formulas.  It agrees with the block display everywhere except the D9
// row, which the expanded text prints differently -- the audit below
// decides which one matches the actual action.
inline CycMatrix printed_s14_rowtext() {
  static const char* d9_row[14] = {"13r1", "q9", "q5", "q1",  "q10",
                                   "q6",   "q2", "q1", "q7",  "q8",
                                   "q12",  "q8", "q4", "-13r3"};
  CycMatrix m = printed_s14();
  const Cyc scale = Rat(-1, 169) * sqrt13_cyc();
  for (int j = 0; j < 14; ++j)
    m.at(9, j) = scale * detail::symbolic_entry(d9_row[j]);
  return m;
}

// Entry-by-entry audit of a printed involution table against the derived
// one.  Returns a list of mismatch descriptions; empty means the table is
// free of typos.
inline std::vector<std::string> s14_errata(const CycMatrix& printed,
                                           const std::string& which) {
  const CycMatrix want = derived_s14();
  std::vector<std::string> errata;
  auto label = [](int i) {
    return i == 13 ? std::string("Dcusp") : "D" + std::to_string(i);
  };
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j)
      if (printed.at(i, j) != want.at(i, j))
        errata.push_back(which + ": row " + label(i) + ", col " + label(j) +
                         " differs from the derived action");
  return errata;
}

inline std::vector<std::string> printed_s14_errata() {
  std::vector<std::string> all = s14_errata(printed_s14(), "block display");
  auto rows = s14_errata(printed_s14_rowtext(), "expanded rows");
  all.insert(all.end(), rows.begin(), rows.end());
  return all;
}

}  // namespace hm13
