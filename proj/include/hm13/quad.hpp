#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "hm13/cyclotomic.hpp"
#include "hm13/rational.hpp"

namespace hm13 {

// Element a + b*sqrt(13) of the real quadratic subfield.
struct Quad {
  Rat a;  // rational part
  Rat b;  // coefficient of sqrt(13)

  Quad() = default;
  Quad(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit Quad(long n) : a(n) {}

  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

  friend Quad operator+(const Quad& x, const Quad& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend Quad operator-(const Quad& x) { return {-x.a, -x.b}; }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return {x.a * y.a + 13 * x.b * y.b, x.a * y.b + x.b * y.a};
  }

  Quad conj() const { return {a, -b}; }

  Rat norm() const { return a * a - 13 * b * b; }

  Quad inverse() const {
    Rat n = norm();
    if (n == 0) throw DivisionByZero{};
    return {a / n, -b / n};
  }

  friend Quad operator/(const Quad& x, const Quad& y) {
    return x * y.inverse();
  }

  double to_double() const {
    return hm13::to_double(a) + hm13::to_double(b) * std::sqrt(13.0);
  }

  std::string str() const {
    return a.get_str() + (b >= 0 ? "+" : "") + b.get_str() + "*sqrt13";
  }
};

// sqrt(13) as a cyclotomic element: the quadratic Gauss sum attached to the
// residue character mod 13.  Quadratic residues {1,3,4,9,10,12} carry +1 and
// non-residues {2,5,6,7,8,11} carry -1.
inline const Cyc& sqrt13_cyc() {
  static const Cyc v = [] {
    Cyc s;
    for (int k : {1, 3, 4, 9, 10, 12}) s += Cyc::zeta_pow(k);
    for (int k : {2, 5, 6, 7, 8, 11}) s -= Cyc::zeta_pow(k);
    return s;
  }();
  return v;
}

inline Cyc embed(const Quad& q) {
  return Cyc(q.a) + q.b * sqrt13_cyc();
}

// Attempts to write a cyclotomic element as a + b*sqrt(13).  On the power
// basis the Gauss sum reads -1 - 2z^2 - 2z^5 - 2z^6 - 2z^7 - 2z^8 - 2z^11,
// so b is read off the z^2 coordinate and the rest is cross-checked.
inline std::optional<Quad> as_quad(const Cyc& v) {
  Rat b = -v.coeff(2) / 2;
  Rat a = v.coeff(0) + b;
  Quad q{a, b};
  if (embed(q) == v) return q;
  return std::nullopt;
}

}  // namespace hm13
