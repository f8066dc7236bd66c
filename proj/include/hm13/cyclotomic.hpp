#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "hm13/rational.hpp"

namespace hm13 {

// Element of the degree-12 field extension generated by a primitive 13th
// root of unity z, stored on the canonical power basis {1, z, ..., z^11}.
// z^12 is eliminated eagerly through 1 + z + ... + z^12 = 0, so equality
// is plain coefficient comparison.
class Cyc {
 public:
  static constexpr int kDim = 12;

  Cyc() = default;

  explicit Cyc(const Rat& constant) { c_[0] = constant; }
  explicit Cyc(long constant) { c_[0] = constant; }

  static Cyc zero() { return Cyc{}; }
  static Cyc one() { return Cyc{1}; }

  // z^k for any integer k (reduced mod 13).
  static Cyc zeta_pow(long k) {
    long e = k % 13;
    if (e < 0) e += 13;
    Cyc r;
    if (e < kDim) {
      r.c_[e] = 1;
    } else {  // e == 12
      for (auto& v : r.c_) v = -1;
    }
    return r;
  }

  static Cyc zeta() { return zeta_pow(1); }

  const Rat& coeff(int k) const { return c_[k]; }
  Rat& coeff(int k) { return c_[k]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (int k = 1; k < kDim; ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  // The rational part when the element lies in the prime field.
  std::optional<Rat> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
  }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc& operator+=(const Cyc& o) {
    for (int k = 0; k < kDim; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Cyc& operator-=(const Cyc& o) {
    for (int k = 0; k < kDim; ++k) c_[k] -= o.c_[k];
    return *this;
  }

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }

  friend Cyc operator-(const Cyc& a) {
    Cyc r;
    for (int k = 0; k < kDim; ++k) r.c_[k] = -a.c_[k];
    return r;
  }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    // Accumulate on the redundant basis {1, ..., z^12}, then fold the
    // z^12 column back with z^12 = -(1 + z + ... + z^11).  Zero
    // coefficients are skipped; most field elements arising from the
    // matrix and form calculations are sparse.
    std::array<Rat, 13> acc{};
    for (int i = 0; i < kDim; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < kDim; ++j) {
        if (b.c_[j] == 0) continue;
        int e = i + j;
        if (e >= 13) e -= 13;
        acc[e] += a.c_[i] * b.c_[j];
      }
    }
    Cyc r;
    for (int k = 0; k < kDim; ++k) r.c_[k] = acc[k] - acc[12];
    return r;
  }

  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  friend Cyc operator*(const Rat& s, Cyc a) {
    for (auto& v : a.c_) v *= s;
    return a;
  }
  friend Cyc operator*(Cyc a, const Rat& s) { return s * a; }

  Cyc& operator*=(const Rat& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Cyc& operator/=(const Rat& s) {
    if (s == 0) throw DivisionByZero{};
    for (auto& v : c_) v /= s;
    return *this;
  }
  friend Cyc operator/(Cyc a, const Rat& s) { return a /= s; }

  // Multiplicative inverse via an exact 12x12 linear solve: the columns
  // of the system are z^k * (*this) expressed on the power basis.
  Cyc inverse() const {
    if (is_zero()) throw DivisionByZero{};
    std::array<std::array<Rat, kDim + 1>, kDim> m{};
    Cyc col = *this;
    for (int k = 0; k < kDim; ++k) {
      for (int r = 0; r < kDim; ++r) m[r][k] = col.c_[r];
      col = col * zeta();
    }
    m[0][kDim] = 1;  // right-hand side is the unit element

    for (int p = 0; p < kDim; ++p) {
      int pivot = -1;
      for (int r = p; r < kDim; ++r)
        if (m[r][p] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw DivisionByZero{};
      if (pivot != p) std::swap(m[pivot], m[p]);
      Rat inv_p = Rat(1) / m[p][p];
      for (int c = p; c <= kDim; ++c) m[p][c] *= inv_p;
      for (int r = 0; r < kDim; ++r) {
        if (r == p || m[r][p] == 0) continue;
        Rat f = m[r][p];
        for (int c = p; c <= kDim; ++c) m[r][c] -= f * m[p][c];
      }
    }
    Cyc r;
    for (int k = 0; k < kDim; ++k) r.c_[k] = m[k][kDim];
    return r;
  }

  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
  Cyc& operator/=(const Cyc& o) { return *this = *this / o; }

  // Image under the complex embedding z -> exp(2*pi*i/13).
  Complex to_complex() const {
    Complex s{0.0, 0.0};
    for (int k = 0; k < kDim; ++k) {
      if (c_[k] == 0) continue;
      double arg = 2.0 * std::numbers::pi * k / 13.0;
      s += to_double(c_[k]) * Complex{std::cos(arg), std::sin(arg)};
    }
    return s;
  }

  // Stable textual key, used both for printing and for hashing group
  // elements.
  std::string key() const {
    std::string s;
    for (int k = 0; k < kDim; ++k) {
      s += c_[k].get_str();
      s += ',';
    }
    return s;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k < kDim; ++k) {
      if (c_[k] == 0) continue;
      const bool neg = c_[k] < 0;
      Rat a = neg ? Rat(-c_[k]) : c_[k];
      if (s.empty()) {
        if (neg) s += '-';
      } else {
        s += neg ? " - " : " + ";
      }
      const bool unit = (a == 1) && k > 0;
      if (!unit) s += a.get_str();
      if (k > 0) {
        if (!unit) s += '*';
        s += 'z';
        if (k > 1) s += '^' + std::to_string(k);
      }
    }
    return s;
  }

 private:
  std::array<Rat, kDim> c_{};
};

}  // namespace hm13
