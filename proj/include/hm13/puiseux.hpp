#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hm13/errors.hpp"
#include "hm13/rational.hpp"

namespace hm13 {

// Truncated series in q with exact rational exponents and coefficients.
// The series is known exactly for all exponents strictly below `trunc`;
// arithmetic propagates the tightest provable truncation bound.  Negative
// exponents are allowed (Laurent-type behaviour for j, tau, 1/R^5).
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;
  explicit PuiseuxSeries(Rat trunc) : trunc_(std::move(trunc)) {}

  static PuiseuxSeries monomial(const Rat& e, const Rat& c, Rat trunc) {
    PuiseuxSeries s(std::move(trunc));
    s.add_term(e, c);
    return s;
  }

  static PuiseuxSeries constant(const Rat& c, Rat trunc) {
    return monomial(Rat(0), c, std::move(trunc));
  }

  const Rat& trunc() const { return trunc_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<Rat, Rat>& terms() const { return t_; }

  void add_term(const Rat& e, const Rat& c) {
    if (c == 0 || e >= trunc_) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Rat coeff(const Rat& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rat(0) : it->second;
  }

  // Leading (lowest-exponent) term, if any term is known.
  std::optional<std::pair<Rat, Rat>> leading() const {
    if (t_.empty()) return std::nullopt;
    return *t_.begin();
  }

  // Exponent below which a factor contributes: the leading exponent, or
  // the truncation bound for a series with no known terms.
  Rat lead_bound() const { return t_.empty() ? trunc_ : t_.begin()->first; }

  PuiseuxSeries& truncate_to(const Rat& t) {
    if (t < trunc_) {
      trunc_ = t;
      t_.erase(t_.lower_bound(t), t_.end());
    }
    return *this;
  }

  friend PuiseuxSeries operator+(const PuiseuxSeries& a,
                                 const PuiseuxSeries& b) {
    PuiseuxSeries r(std::min(a.trunc_, b.trunc_));
    for (const auto& [e, c] : a.t_) r.add_term(e, c);
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }

  friend PuiseuxSeries operator-(const PuiseuxSeries& a,
                                 const PuiseuxSeries& b) {
    PuiseuxSeries r(std::min(a.trunc_, b.trunc_));
    for (const auto& [e, c] : a.t_) r.add_term(e, c);
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
  }

  friend PuiseuxSeries operator-(const PuiseuxSeries& a) {
    PuiseuxSeries r(a.trunc_);
    for (const auto& [e, c] : a.t_) r.add_term(e, -c);
    return r;
  }

  PuiseuxSeries& operator+=(const PuiseuxSeries& o) {
    return *this = *this + o;
  }
  PuiseuxSeries& operator-=(const PuiseuxSeries& o) {
    return *this = *this - o;
  }

  friend PuiseuxSeries operator*(const PuiseuxSeries& a,
                                 const PuiseuxSeries& b) {
    PuiseuxSeries r(
        std::min(a.trunc_ + b.lead_bound(), b.trunc_ + a.lead_bound()));
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Rat e = ea + eb;
        if (e >= r.trunc_) break;  // exponents ascend within b
        r.add_term(e, ca * cb);
      }
    return r;
  }

  friend PuiseuxSeries operator*(const Rat& s, const PuiseuxSeries& a) {
    PuiseuxSeries r(a.trunc_);
    if (s != 0)
      for (const auto& [e, c] : a.t_) r.add_term(e, s * c);
    return r;
  }

  // Formal reciprocal by leading-term peeling.  For leading term c q^l the
  // result is known below trunc - 2l.
  PuiseuxSeries inverse() const {
    auto ld = leading();
    if (!ld) throw DivisionByLeadingZero();
    const Rat l = ld->first;
    const Rat c = ld->second;
    const Rat window = trunc_ - l;  // validity window of the tail
    if (window <= 0)
      throw EmptyTruncationWindow();
    // u = this / (c q^l) - 1 has positive leading exponent; sum the
    // geometric series 1 - u + u^2 - ... until the next power leaves the
    // window entirely.
    PuiseuxSeries u(window);
    for (const auto& [e, coef] : t_) u.add_term(e - l, coef / c);
    u.add_term(Rat(0), Rat(-1));
    PuiseuxSeries acc = PuiseuxSeries::constant(Rat(1), window);
    PuiseuxSeries upow = PuiseuxSeries::constant(Rat(1), window);
    while (true) {
      upow = upow * (-u);
      upow.truncate_to(window);
      if (upow.is_zero()) break;
      acc += upow;
    }
    PuiseuxSeries r(window - l);
    for (const auto& [e, coef] : acc.terms()) r.add_term(e - l, coef / c);
    return r;
  }

  friend PuiseuxSeries operator/(const PuiseuxSeries& a,
                                 const PuiseuxSeries& b) {
    return a * b.inverse();
  }

  // Binary exponentiation built from the base itself, so the product
  // truncation rule stays tight (x^k known below trunc + (k-1) * lead).
  PuiseuxSeries pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return constant(Rat(1), trunc_);
    PuiseuxSeries base = *this;
    std::optional<PuiseuxSeries> r;
    while (k > 0) {
      if (k & 1) r = r ? *r * base : base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return *r;
  }

  // z -> m z, i.e. q -> q^m: exponents and the truncation bound scale.
  PuiseuxSeries dilate(long m) const {
    if (m <= 0) throw Error("dilate requires a positive integer");
    PuiseuxSeries r(trunc_ * m);
    for (const auto& [e, c] : t_) r.add_term(e * m, c);
    return r;
  }

  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a.trunc_ == b.trunc_ && a.t_ == b.t_;
  }

  std::string str(size_t max_terms = 12) const {
    if (t_.empty()) return "O(q^" + to_string(trunc_) + ")";
    std::string s;
    size_t shown = 0;
    for (const auto& [e, c] : t_) {
      if (shown == max_terms) {
        s += " + ...";
        break;
      }
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0)
        s += "-";
      Rat ac = abs(c);
      if (ac != 1 || e == 0) s += to_string(ac);
      if (e != 0) {
        if (ac != 1) s += "*";
        s += "q^" + to_string(e);
      }
      ++shown;
    }
    s += " + O(q^" + to_string(trunc_) + ")";
    return s;
  }

 private:
  std::map<Rat, Rat> t_;
  Rat trunc_;
};

}  // namespace hm13
