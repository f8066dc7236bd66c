#pragma once

#include <string>
#include <vector>

#include "hm13/forms.hpp"
#include "hm13/puiseux.hpp"
#include "hm13/relations.hpp"

namespace hm13 {

// Dedekind eta of m*z via Euler's pentagonal number theorem, exact to the
// requested order: q^{m/24} * prod (1 - q^{mn}).
inline PuiseuxSeries eta_series(long m, const Rat& order) {
  if (order <= Rat(m, 24))
    throw OrderTooSmall("eta series needs order > m/24");
  Rat base = order / m;
  PuiseuxSeries s(base);
  const Rat shift = rat(1, 24);
  for (long k = 0;; ++k) {
    Rat e1 = Rat(k * (3 * k - 1)) / 2 + shift;
    Rat e2 = Rat(k * (3 * k + 1)) / 2 + shift;
    if (e1 >= base && e2 >= base && k > 0) break;
    Rat sign = (k % 2 == 0) ? 1 : -1;
    s.add_term(e1, sign);
    if (k > 0) s.add_term(e2, sign);
  }
  return m == 1 ? s : s.dilate(m);
}

// Phase-stripped theta constant: q^{l^2/8k} sum_n (-1)^n q^{(k n^2 + l n)/2}
// for odd k >= 5 and odd l with 1 <= l <= k-2.
inline PuiseuxSeries theta_constant_series(long k, long l, const Rat& order) {
  if (order <= Rat(l * l, 8 * k))
    throw OrderTooSmall("theta series needs order > l^2/8k");
  PuiseuxSeries s(order);
  const Rat shift = Rat(l * l, 8 * k);
  for (long n = 0;; ++n) {
    Rat ep = Rat(k * n * n + l * n, 2) + shift;
    Rat em = Rat(k * n * n - l * n, 2) + shift;
    if (ep >= order && em >= order && n > 0) break;
    Rat sign = (n % 2 == 0) ? 1 : -1;
    s.add_term(ep, sign);
    if (n > 0) s.add_term(em, sign);
  }
  return s;
}

// The six level-thirteen theta constants (index 1..6); the fourth carries
// an extra minus sign by definition.
inline PuiseuxSeries a_series(int i, const Rat& order) {
  static const long ell[6] = {11, 7, 5, 3, 9, 1};
  if (i < 1 || i > 6) throw UnknownSeries("a" + std::to_string(i));
  PuiseuxSeries s = theta_constant_series(13, ell[i - 1], order);
  return i == 4 ? -s : s;
}

// Ramanujan's theta function specialized with negated arguments:
// f(-q^alpha, -q^beta) = sum_n (-1)^n q^{alpha n(n+1)/2 + beta n(n-1)/2}.
inline PuiseuxSeries ramanujan_theta_f(const Rat& alpha, const Rat& beta,
                                       const Rat& order) {
  if (alpha + beta <= 0) throw Error("theta f requires alpha + beta > 0");
  PuiseuxSeries s(order);
  for (long n = 0;; ++n) {
    Rat tri = Rat(n * (n + 1)) / 2, tri2 = Rat(n * (n - 1)) / 2;
    Rat ep = alpha * tri + beta * tri2;   // index n
    Rat em = alpha * tri2 + beta * tri;   // index -n
    if (ep >= order && em >= order && n > 0) break;
    Rat sign = (n % 2 == 0) ? 1 : -1;
    s.add_term(ep, sign);
    if (n > 0) s.add_term(em, sign);
  }
  return s;
}

// Infinite product prod_{m >= 0} (1 - q^{a + m*step}) truncated below
// `order`; implements the (x; q^step) Pochhammer factors.
inline PuiseuxSeries pochhammer_series(const Rat& a, const Rat& step,
                                       const Rat& order) {
  PuiseuxSeries s = PuiseuxSeries::constant(Rat(1), order);
  for (Rat e = a; e < order; e += step) {
    PuiseuxSeries f = PuiseuxSeries::constant(Rat(1), order);
    f.add_term(e, Rat(-1));
    s = s * f;
    s.truncate_to(order);
  }
  return s;
}

// Generating function of the partition numbers, sum p(n) q^n.
inline PuiseuxSeries partition_series(long order) {
  if (order < 1) throw OrderTooSmall("partition series needs order >= 1");
  // Reciprocal of the pentagonal-number expansion of prod (1 - q^n).
  PuiseuxSeries euler(Rat(order + 1));
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (e1 > order && e2 > order && k > 0) break;
    Rat sign = (k % 2 == 0) ? 1 : -1;
    euler.add_term(Rat(e1), sign);
    if (k > 0) euler.add_term(Rat(e2), sign);
  }
  return euler.inverse();
}

// Sub-series on an arithmetic progression of integer exponents,
// re-indexed: term c q^{m n + r} becomes c q^n.
inline PuiseuxSeries extract_progression(const PuiseuxSeries& s, long modulus,
                                         long residue) {
  if (modulus < 1 || residue < 0 || residue >= modulus)
    throw Error("extract_progression needs 0 <= residue < modulus");
  PuiseuxSeries r((s.trunc() - residue) / modulus);
  for (const auto& [e, c] : s.terms()) {
    if (e.get_den() != 1) continue;
    mpz_class n = e.get_num() - residue;
    if (n % modulus != 0 || n < 0) continue;
    r.add_term(Rat(n / modulus), c);
  }
  return r;
}

// Klein's j-function as E4^3 / Delta.
inline PuiseuxSeries j_series(long order) {
  if (order < 0) throw OrderTooSmall("j series needs order >= 0");
  const Rat work(order + 3);
  PuiseuxSeries e4 = PuiseuxSeries::constant(Rat(1), work);
  for (long n = 1; n < order + 3; ++n) {
    long sigma3 = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sigma3 += d * d * d;
    e4.add_term(Rat(n), Rat(240) * sigma3);
  }
  PuiseuxSeries delta = eta_series(1, work).pow(24);
  PuiseuxSeries j = (e4 * e4 * e4) / delta;
  j.truncate_to(Rat(order));
  return j;
}

// Evaluates a polynomial with rational coefficients on series arguments.
inline PuiseuxSeries evaluate_form(const MultiPoly& f,
                                   const std::vector<PuiseuxSeries>& args,
                                   const Rat& order) {
  if (static_cast<int>(args.size()) != f.nvars())
    throw SizeMismatch("form arity does not match argument count");
  PuiseuxSeries r(order);
  for (const auto& [e, c] : f.terms()) {
    auto q = c.as_rational();
    if (!q)
      throw Error("form has non-rational coefficients; cannot evaluate on "
                  "rational series");
    PuiseuxSeries term = PuiseuxSeries::constant(*q, order);
    for (size_t i = 0; i < args.size(); ++i)
      for (int k = 0; k < e[i]; ++k) {
        term = term * args[i];
        term.truncate_to(order);
      }
    r += term;
  }
  r.truncate_to(order);
  return r;
}

}  // namespace hm13
