#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

#include "hm13/errors.hpp"

namespace hm13 {

// Arbitrary-precision rational, always stored in lowest terms.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw DivisionByZero{};
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

using Complex = std::complex<double>;

// Tolerance-based comparison used by floating-point cross-checks.
struct ComplexApprox {
  Complex value;
  double tol = 1e-9;

  bool matches(const Complex& other) const {
    return std::abs(value - other) <= tol;
  }
};

}  // namespace hm13
