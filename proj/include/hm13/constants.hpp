#pragma once

#include <string>

#include "hm13/cyclotomic.hpp"
#include "hm13/quad.hpp"

namespace hm13 {

namespace detail {

inline Cyc periods(std::initializer_list<int> plus,
                   std::initializer_list<int> minus = {}) {
  Cyc s;
  for (int k : plus) s += Cyc::zeta_pow(k);
  for (int k : minus) s -= Cyc::zeta_pow(k);
  return s;
}

// z^k - z^(13-k), the building block of the cubic update coefficients.
inline Cyc diff(int k) { return Cyc::zeta_pow(k) - Cyc::zeta_pow(13 - k); }

// Integer combination c1*(z-z^12) + c5*(z^5-z^8) + c3*(z^3-z^10) +
// c2*(z^2-z^11) + c9*(z^9-z^4) + c6*(z^6-z^7).
inline Cyc diff_combo(long c1, long c5, long c3, long c2, long c9, long c6) {
  return Rat(c1) * diff(1) + Rat(c5) * diff(5) + Rat(c3) * diff(3) +
         Rat(c2) * diff(2) + Rat(c9) * diff(9) + Rat(c6) * diff(6);
}

}  // namespace detail

// Cubic Gaussian periods: the orbit of z under multiplication by 3.
inline Cyc theta(int i) {
  using detail::periods;
  switch (i) {
    case 1:
      return periods({1, 3, 9});
    case 2:
      return periods({2, 6, 5});
    case 3:
      return periods({4, 12, 10});
    case 4:
      return periods({8, 11, 7});
    default:
      throw UnknownConstant("theta" + std::to_string(i));
  }
}

// Named exact constants used throughout the matrix and form catalogues.
// The r1..r4 values are square roots of elements of the real quadratic
// subfield; they are pinned down as explicit combinations of the cubic
// periods whose squares are checked exactly and whose sign (upper half
// plane) is checked numerically in the floating-point suite.
inline Cyc constant(const std::string& name) {
  using detail::diff_combo;
  using detail::periods;

  if (name == "zeta") return Cyc::zeta();
  if (name == "sqrt13") return sqrt13_cyc();

  if (name.size() == 6 && name.compare(0, 5, "theta") == 0 &&
      name[5] >= '1' && name[5] <= '4')
    return theta(name[5] - '0');

  if (name == "alpha") return periods({1, 12}, {5, 8});
  if (name == "beta") return periods({3, 10}, {2, 11});
  if (name == "gamma") return periods({9, 4}, {6, 7});

  if (name == "p1")
    return periods({2, 11}) - Cyc(2) + Rat(2) * periods({1, 12}, {9, 4});
  if (name == "p2")
    return Cyc(2) - periods({9, 4}) + Rat(2) * periods({5, 8}, {2, 11});
  if (name == "p3")
    return periods({6, 7}) - Cyc(2) + Rat(2) * periods({3, 10}, {1, 12});
  if (name == "p4")
    return periods({5, 8}) - Cyc(2) + Rat(2) * periods({9, 4}, {3, 10});
  if (name == "p5")
    return Cyc(2) - periods({3, 10}) + Rat(2) * periods({6, 7}, {5, 8});
  if (name == "p6")
    return Cyc(2) - periods({1, 12}) + Rat(2) * periods({2, 11}, {6, 7});

  if (name == "q1") return diff_combo(-2, -2, 6, -1, 4, 2);
  if (name == "q2") return diff_combo(-4, 3, 3, -1, -2, 0);
  if (name == "q3") return diff_combo(6, -1, 4, 2, -2, -2);
  if (name == "q4") return diff_combo(-2, 4, 2, -2, 1, 6);
  if (name == "q5") return diff_combo(-2, 0, -4, 3, 3, -1);
  if (name == "q6") return diff_combo(3, -1, -2, 0, -4, 3);
  if (name == "q7") return diff_combo(1, 3, 0, -2, -3, -4);
  if (name == "q8") return diff_combo(0, -2, -3, -4, 1, 3);
  if (name == "q9") return diff_combo(4, 2, -2, -2, 6, -1);
  if (name == "q10") return diff_combo(1, 6, -2, 4, 2, -2);
  if (name == "q11") return diff_combo(-3, -4, 1, 3, 0, -2);
  if (name == "q12") return diff_combo(2, -2, 1, 6, -2, 4);

  if (name == "r0")
    return Rat(2) * (theta(1) - theta(3)) - Rat(3) * (theta(2) - theta(4));
  if (name == "rinf")
    return Rat(2) * (theta(4) - theta(2)) - Rat(3) * (theta(1) - theta(3));
  if (name == "r1") return theta(1) - theta(3) + theta(2) - theta(4);
  if (name == "r2") return theta(1) - theta(3);
  if (name == "r3") return -(theta(1) - theta(3) - theta(2) + theta(4));
  if (name == "r4") return theta(2) - theta(4);

  throw UnknownConstant(name);
}

}  // namespace hm13
