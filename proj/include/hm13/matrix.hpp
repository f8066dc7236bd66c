#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hm13/cyclotomic.hpp"

namespace hm13 {

// Dense square matrix over the cyclotomic field, used for the 2-, 3-, 6-,
// 7- and 14-dimensional representations.
class CycMatrix {
 public:
  CycMatrix() = default;
  explicit CycMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  static CycMatrix identity(int n) {
    CycMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyc::one();
    return m;
  }

  int size() const { return n_; }

  Cyc& at(int r, int c) { return e_[static_cast<size_t>(r) * n_ + c]; }
  const Cyc& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * n_ + c];
  }

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) {
    return !(a == b);
  }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.n_ != b.n_) throw SizeMismatch("matrix product size mismatch");
    CycMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const Cyc& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) += aik * b.at(k, j);
        }
      }
    return r;
  }

  friend CycMatrix operator*(const Cyc& s, CycMatrix m) {
    for (auto& v : m.e_) v = s * v;
    return m;
  }
  friend CycMatrix operator*(const Rat& s, CycMatrix m) {
    for (auto& v : m.e_) v *= s;
    return m;
  }

  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    if (a.n_ != b.n_) throw SizeMismatch("matrix sum size mismatch");
    CycMatrix r(a.n_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  friend CycMatrix operator-(const CycMatrix& a) {
    CycMatrix r(a.n_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = -a.e_[i];
    return r;
  }

  CycMatrix transpose() const {
    CycMatrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  CycMatrix inverse() const {
    CycMatrix a = *this;
    CycMatrix inv = identity(n_);
    for (int p = 0; p < n_; ++p) {
      int pivot = -1;
      for (int r = p; r < n_; ++r)
        if (!a.at(r, p).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw DivisionByZero{};
      if (pivot != p)
        for (int c = 0; c < n_; ++c) {
          std::swap(a.at(pivot, c), a.at(p, c));
          std::swap(inv.at(pivot, c), inv.at(p, c));
        }
      Cyc f = a.at(p, p).inverse();
      for (int c = 0; c < n_; ++c) {
        a.at(p, c) *= f;
        inv.at(p, c) *= f;
      }
      for (int r = 0; r < n_; ++r) {
        if (r == p || a.at(r, p).is_zero()) continue;
        Cyc g = a.at(r, p);
        for (int c = 0; c < n_; ++c) {
          a.at(r, c) -= g * a.at(p, c);
          inv.at(r, c) -= g * inv.at(p, c);
        }
      }
    }
    return inv;
  }

  CycMatrix pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycMatrix r = identity(n_);
    CycMatrix b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  Cyc trace() const {
    Cyc t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  // Projective normal form: scale so the first nonzero entry in row-major
  // order becomes 1.  Two matrices represent the same projective
  // transformation iff their normal forms coincide.
  CycMatrix canonical() const {
    for (const auto& v : e_)
      if (!v.is_zero()) return v.inverse() * *this;
    return *this;
  }

  // If *this == lambda * other for a nonzero scalar lambda, returns lambda.
  std::optional<Cyc> projective_scalar(const CycMatrix& other) const {
    if (n_ != other.n_) return std::nullopt;
    Cyc lambda;
    bool found = false;
    for (size_t i = 0; i < e_.size(); ++i) {
      if (other.e_[i].is_zero()) {
        if (!e_[i].is_zero()) return std::nullopt;
        continue;
      }
      if (!found) {
        lambda = e_[i] / other.e_[i];
        if (lambda.is_zero()) return std::nullopt;
        found = true;
      } else if (e_[i] != lambda * other.e_[i]) {
        return std::nullopt;
      }
    }
    if (!found) return std::nullopt;
    return lambda;
  }

  std::string key() const {
    std::string s = std::to_string(n_) + ";";
    for (const auto& v : e_) s += v.key();
    return s;
  }

 private:
  int n_ = 0;
  std::vector<Cyc> e_;
};

inline bool projective_eq(const CycMatrix& a, const CycMatrix& b) {
  return a.projective_scalar(b).has_value();
}

}  // namespace hm13
