#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hm13/matrix.hpp"

namespace hm13 {

using Expo = std::vector<int>;

// Graded lexicographic order: compare total degree first, then exponents.
struct GradedLex {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
  }
};

// Sparse polynomial in a fixed number of variables with cyclotomic
// coefficients.  Zero coefficients are removed eagerly, so equality is map
// comparison.
class MultiPoly {
 public:
  using Terms = std::map<Expo, Cyc, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly monomial(int nvars, const Expo& e, Cyc c) {
    MultiPoly p(nvars);
    p.add_term(e, std::move(c));
    return p;
  }

  static MultiPoly constant(int nvars, Cyc c) {
    return monomial(nvars, Expo(nvars, 0), std::move(c));
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return t_; }
  size_t term_count() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Expo& e, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.t_ == b.t_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    return a += b;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    return a -= b;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.nvars_);
    Expo e(a.nvars_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator*(const Cyc& s, const MultiPoly& p) {
    MultiPoly r(p.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.t_) r.t_.emplace(e, s * c);
    return r;
  }
  friend MultiPoly operator*(const Rat& s, const MultiPoly& p) {
    return Cyc(s) * p;
  }

  MultiPoly pow(int k) const {
    if (k < 0) throw Error("negative polynomial power");
    MultiPoly r = constant(nvars_, Cyc::one());
    MultiPoly b = *this;
    while (k > 0) {
      if (k & 1) r *= b;
      if (k >>= 1) b *= b;
    }
    return r;
  }

  // Leading term in graded lex order.
  std::pair<Expo, Cyc> leading() const {
    if (t_.empty()) throw Error("leading term of zero polynomial");
    auto it = std::prev(t_.end());
    return {it->first, it->second};
  }

  // f(m * z): every variable z_i is replaced by the linear form given by
  // row i of m.  Uses a per-variable power cache, plus a fast path when m
  // is a monomial matrix (one nonzero per row), which covers the diagonal
  // and signed-permutation generators.
  MultiPoly substitute(const CycMatrix& m) const {
    if (m.size() != nvars_) throw SizeMismatch("substitution size mismatch");

    bool monomial_rows = true;
    std::vector<int> col(nvars_);
    std::vector<Cyc> val(nvars_);
    for (int i = 0; i < nvars_ && monomial_rows; ++i) {
      int nz = -1;
      for (int j = 0; j < nvars_; ++j) {
        if (m.at(i, j).is_zero()) continue;
        if (nz >= 0) {
          monomial_rows = false;
          break;
        }
        nz = j;
      }
      if (nz < 0) monomial_rows = false;
      if (monomial_rows) {
        col[i] = nz;
        val[i] = m.at(i, nz);
      }
    }
    if (monomial_rows) {
      MultiPoly r(nvars_);
      Expo e(nvars_);
      for (const auto& [ea, ca] : t_) {
        std::fill(e.begin(), e.end(), 0);
        Cyc c = ca;
        for (int i = 0; i < nvars_; ++i) {
          if (ea[i] == 0) continue;
          e[col[i]] += ea[i];
          Cyc f = val[i];
          for (int k = 1; k < ea[i]; ++k) f *= val[i];
          c *= f;
        }
        r.add_term(e, c);
      }
      return r;
    }

    std::vector<MultiPoly> rows(nvars_, MultiPoly(nvars_));
    for (int i = 0; i < nvars_; ++i) {
      Expo e(nvars_, 0);
      for (int j = 0; j < nvars_; ++j) {
        if (m.at(i, j).is_zero()) continue;
        e[j] = 1;
        rows[i].add_term(e, m.at(i, j));
        e[j] = 0;
      }
    }
    // cache[i][k] = rows[i]^k, filled lazily.
    std::vector<std::vector<MultiPoly>> cache(nvars_);
    auto row_pow = [&](int i, int k) -> const MultiPoly& {
      auto& c = cache[i];
      if (c.empty()) c.push_back(constant(nvars_, Cyc::one()));
      while (static_cast<int>(c.size()) <= k) c.push_back(c.back() * rows[i]);
      return c[k];
    };
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : t_) {
      MultiPoly term = constant(nvars_, ca);
      for (int i = 0; i < nvars_; ++i)
        if (ea[i] > 0) term *= row_pow(i, ea[i]);
      r += term;
    }
    return r;
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.str() + ")";
      for (int i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        s += "*" + vars[i];
        if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
      }
    }
    return s;
  }

 private:
  void check(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw SizeMismatch("variable count mismatch");
  }

  int nvars_ = 0;
  Terms t_;
};

// lambda with f == lambda*g, if the two polynomials are proportional.
inline std::optional<Cyc> proportionality(const MultiPoly& f,
                                          const MultiPoly& g) {
  if (f.is_zero() && g.is_zero()) return Cyc::one();
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  if (f.term_count() != g.term_count()) return std::nullopt;
  auto [e, c] = g.leading();
  auto [ef, cf] = f.leading();
  if (e != ef) return std::nullopt;
  Cyc lambda = cf / c;
  if (f == lambda * g) return lambda;
  return std::nullopt;
}

}  // namespace hm13
