#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "hm13/errors.hpp"

namespace hm13 {

// Integer 2x2 matrix with determinant one; enough for evaluating words in
// the classical generators of the modular group.
struct Mat2z {
  std::array<mpz_class, 4> e;  // row major: a b / c d

  static Mat2z identity() { return {{1, 0, 0, 1}}; }

  friend Mat2z operator*(const Mat2z& x, const Mat2z& y) {
    return {{x.e[0] * y.e[0] + x.e[1] * y.e[2],
             x.e[0] * y.e[1] + x.e[1] * y.e[3],
             x.e[2] * y.e[0] + x.e[3] * y.e[2],
             x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
  }

  friend bool operator==(const Mat2z& x, const Mat2z& y) { return x.e == y.e; }

  mpz_class det() const { return e[0] * e[3] - e[1] * e[2]; }

  // Valid for determinant-one matrices only.
  Mat2z inverse_unimodular() const { return {{e[3], -e[1], -e[2], e[0]}}; }

  Mat2z pow(long k) const {
    Mat2z base = k < 0 ? inverse_unimodular() : *this;
    if (k < 0) k = -k;
    Mat2z r = identity();
    while (k > 0) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }
};

inline Mat2z sl2_s() { return {{0, -1, 1, 0}}; }
inline Mat2z sl2_t() { return {{1, 1, 0, 1}}; }
// p = s t^{-1} s and q = s t^3, the letters used in the long word checks.
inline Mat2z sl2_p() { return sl2_s() * sl2_t().pow(-1) * sl2_s(); }
inline Mat2z sl2_q() { return sl2_s() * sl2_t().pow(3); }

struct WordFactor {
  char letter;  // one of 's','t','p','q'
  long exponent = 1;
};

// Evaluates a word over {s,t,p,q} in SL(2,Z).
inline Mat2z sl2_word_eval(const std::vector<WordFactor>& word) {
  Mat2z r = Mat2z::identity();
  for (const auto& f : word) {
    Mat2z base;
    switch (f.letter) {
      case 's': base = sl2_s(); break;
      case 't': base = sl2_t(); break;
      case 'p': base = sl2_p(); break;
      case 'q': base = sl2_q(); break;
      default: throw Error(std::string("unknown word letter: ") + f.letter);
    }
    r = r * base.pow(f.exponent);
  }
  return r;
}

}  // namespace hm13
