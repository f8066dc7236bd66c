#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hm13/qseries.hpp"

namespace hm13 {

namespace detail {

// A residual must vanish identically below `upto`; the truncation bound of
// the computed difference must actually reach that far.
inline void require_zero_below(CheckList& c, const PuiseuxSeries& resid,
                               const Rat& upto, const std::string& label) {
  if (resid.trunc() < upto)
    throw OrderTooSmall(label + ": residual only known below q^" +
                        to_string(resid.trunc()) + ", need q^" +
                        to_string(upto));
  if (resid.is_zero()) {
    c.note(label + ": zero below q^" + to_string(upto));
    return;
  }
  auto ld = *resid.leading();
  c.require(false, label + ": residual leading term " +
                       to_string(ld.second) + " q^" + to_string(ld.first));
}

inline void require_leading(CheckList& c, const PuiseuxSeries& s,
                            const Rat& e, const Rat& coeff,
                            const std::string& label) {
  auto ld = s.leading();
  if (!ld) {
    c.require(false, label + ": no terms known");
    return;
  }
  c.require(ld->first == e && ld->second == coeff,
            label + ": leading term " + to_string(ld->second) + " q^" +
                to_string(ld->first) + ", expected " + to_string(coeff) +
                " q^" + to_string(e));
}

// The six theta constants, evaluated once per order.
inline std::vector<PuiseuxSeries> a_tuple(const Rat& order) {
  std::vector<PuiseuxSeries> v;
  for (int i = 1; i <= 6; ++i) v.push_back(a_series(i, order));
  return v;
}

// The cubic family evaluated on the theta tuple.
inline std::vector<PuiseuxSeries> d_tuple(const std::vector<PuiseuxSeries>& a,
                                          const Rat& order) {
  std::vector<PuiseuxSeries> v;
  for (int k = 0; k <= 13; ++k)
    v.push_back(evaluate_form(form_d(k), a, order));
  return v;
}

// The sextic family assembled from cubic values via its quadratic
// structure (no degree-six expansion needed).
inline std::vector<PuiseuxSeries> g_tuple(const std::vector<PuiseuxSeries>& d,
                                          const Rat& order) {
  std::vector<PuiseuxSeries> v;
  for (int k = 0; k <= 12; ++k) {
    PuiseuxSeries s(order);
    for (const auto& t : sextic_structure(k)) {
      PuiseuxSeries prod = d[t.m] * d[t.n];
      prod.truncate_to(order);
      s += Rat(t.coeff) * prod;
    }
    v.push_back(std::move(s));
  }
  return v;
}

// The degree-twelve invariant on the theta tuple, through the cubic and
// sextic stages.
inline PuiseuxSeries phi12_on(const std::vector<PuiseuxSeries>& a,
                              const Rat& order) {
  auto g = g_tuple(d_tuple(a, order), order);
  PuiseuxSeries s = Rat(7 * 169) * (g[0] * g[0]);
  for (int k = 1; k <= 6; ++k) s += g[k] * g[13 - k];
  s.truncate_to(order);
  return rat(-1, 26) * s;
}

// Hauptmodul tau = (eta(z)/eta(13 z))^2 with enough guard so that
// tau-polynomial composition stays valid below `order`.
inline PuiseuxSeries tau_series(const Rat& order, long guard) {
  PuiseuxSeries num = eta_series(1, order + guard);
  PuiseuxSeries den = eta_series(13, order + guard);
  return (num / den).pow(2);
}

// Horner evaluation of a univariate polynomial (rational coefficients,
// descending by construction of the builders) on a series.
inline PuiseuxSeries eval_univariate(const MultiPoly& p,
                                     const PuiseuxSeries& x,
                                     const Rat& order) {
  std::vector<PuiseuxSeries> arg = {x};
  return evaluate_form(p, arg, order);
}

}  // namespace detail

inline Rat default_q_order(const std::string& id) {
  if (id == "Q1" || id == "Q2") return Rat(10);
  if (id == "Q3") return Rat(8);
  if (id == "Q8" || id == "Q9") return Rat(12);
  if (id == "Q7" || id == "Q22") return Rat(30);
  if (id == "Q23") return Rat(5);
  return Rat(20);
}

inline VerificationReport verify_q_identity(
    const std::string& id, std::optional<Rat> order_opt = std::nullopt) {
  using detail::CheckList;
  using detail::require_leading;
  using detail::require_zero_below;
  using detail::timed_report;

  const Rat order = order_opt.value_or(default_q_order(id));
  if (order < 2) throw OrderTooSmall(id + ": order must be at least 2");

  if (id == "Q1")
    return timed_report(id, "qseries", [&](CheckList& c) {
      long n = order.get_num().get_si() + 1;
      PuiseuxSeries p5 = extract_progression(partition_series(5 * n + 4), 5, 4);
      for (const auto& [e, coef] : p5.terms())
        c.require(coef.get_den() == 1 && coef.get_num() % 5 == 0,
                  "p(5n+4) coefficient not divisible by 5");
      Rat work = order + 2;
      PuiseuxSeries lhs =
          PuiseuxSeries::monomial(rat(19, 24), Rat(1), work) * p5;
      PuiseuxSeries rhs =
          Rat(5) * (eta_series(5, work).pow(5) / eta_series(1, work).pow(6));
      require_zero_below(c, lhs - rhs, order, "p(5n+4) eta quotient");
    });

  if (id == "Q2")
    return timed_report(id, "qseries", [&](CheckList& c) {
      long n = order.get_num().get_si() + 1;
      PuiseuxSeries p7 = extract_progression(partition_series(7 * n + 5), 7, 5);
      for (const auto& [e, coef] : p7.terms())
        c.require(coef.get_den() == 1 && coef.get_num() % 7 == 0,
                  "p(7n+5) coefficient not divisible by 7");
      Rat work = order + 2;
      PuiseuxSeries lhs =
          PuiseuxSeries::monomial(rat(17, 24), Rat(1), work) * p7;
      PuiseuxSeries rhs =
          Rat(7) * (eta_series(7, work).pow(3) / eta_series(1, work).pow(4)) +
          Rat(49) * (eta_series(7, work).pow(7) / eta_series(1, work).pow(8));
      require_zero_below(c, lhs - rhs, order, "p(7n+5) eta quotients");
    });

  if (id == "Q3")
    return timed_report(id, "qseries", [&](CheckList& c) {
      long n = order.get_num().get_si() + 1;
      PuiseuxSeries p13 =
          extract_progression(partition_series(13 * n + 6), 13, 6);
      c.require(p13.coeff(Rat(0)) == 11, "p(6) != 11");
      Rat work = order + 2;
      PuiseuxSeries lhs =
          PuiseuxSeries::monomial(rat(11, 24), Rat(1), work) * p13;
      PuiseuxSeries e1 = eta_series(1, work), e13 = eta_series(13, work);
      static const long coeffs[7] = {11, 36 * 13, 38 * 169, 20 * 2197,
                                     6 * 28561, 371293, 371293};
      PuiseuxSeries rhs(work);
      for (int k = 0; k < 7; ++k)
        rhs += Rat(coeffs[k]) *
               (e13.pow(2 * k + 1) / e1.pow(2 * k + 2));
      require_zero_below(c, lhs - rhs, order, "p(13n+6) eta quotients");
    });

  if (id == "Q4")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      PuiseuxSeries a = theta_constant_series(5, 3, work);
      PuiseuxSeries b = theta_constant_series(5, 1, work);
      PuiseuxSeries r5 = (a / b).pow(5);
      PuiseuxSeries lhs = r5.inverse() - PuiseuxSeries::constant(Rat(11),
                                                                 work) -
                          r5;
      PuiseuxSeries rhs = (eta_series(1, work) / eta_series(5, work)).pow(6);
      require_zero_below(c, lhs - rhs, order,
                         "continued-fraction fifth-power law");
    });

  if (id == "Q5")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      PuiseuxSeries a = theta_constant_series(5, 3, work);
      PuiseuxSeries b = theta_constant_series(5, 1, work);
      PuiseuxSeries f = evaluate_form(form_f_icosa(), {a, b}, work);
      PuiseuxSeries lhs = (eta_series(1, work) / eta_series(5, work)).pow(6);
      PuiseuxSeries rhs = -(f / (a.pow(6) * b.pow(6)));
      require_zero_below(c, lhs - rhs, order,
                         "icosahedral decomposition at level 5");
    });

  if (id == "Q6")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      PuiseuxSeries a = -theta_constant_series(7, 5, work);
      PuiseuxSeries b = theta_constant_series(7, 3, work);
      PuiseuxSeries cs = theta_constant_series(7, 1, work);
      PuiseuxSeries phi6 = evaluate_form(form_phi6_klein(), {a, b, cs}, work);
      PuiseuxSeries lhs = (eta_series(1, work) / eta_series(7, work)).pow(4);
      PuiseuxSeries rhs = phi6 / (a.pow(2) * b.pow(2) * cs.pow(2));
      require_zero_below(c, lhs - rhs, order,
                         "Klein decomposition at level 7");
    });

  if (id == "Q7")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      auto a = detail::a_tuple(work);
      PuiseuxSeries phi12 = detail::phi12_on(a, work);
      PuiseuxSeries eta1 = eta_series(1, work);
      require_zero_below(c, phi12 - eta1.pow(12), order,
                         "degree-12 invariant on theta constants = eta^12");
      PuiseuxSeries prod = PuiseuxSeries::constant(Rat(1), work);
      for (const auto& ai : a) {
        prod = prod * ai;
        prod.truncate_to(work);
      }
      PuiseuxSeries rhs =
          eta1.pow(2) * eta_series(13, work).pow(10);
      require_zero_below(c, prod * prod - rhs, order,
                         "(product of theta constants)^2 = eta^2 eta13^10");
      // Together these give [eta^2/eta13^2]^5 = Phi12(a)/prod(a)^2 without
      // extracting a fifth root.
    });

  if (id == "Q8")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 16;
      PuiseuxSeries tau = detail::tau_series(work, 14);
      PuiseuxSeries num =
          detail::eval_univariate(build_form("tau_quadratic_5"), tau, work) *
          detail::eval_univariate(build_form("tau_quartic_247"), tau, work)
              .pow(3);
      PuiseuxSeries rhs = num / tau.pow(13);
      PuiseuxSeries j = j_series(order.get_num().get_si() + 1);
      require_zero_below(c, j - rhs, order, "j(z) from the Hauptmodul");
    });

  if (id == "Q9")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 16;
      PuiseuxSeries tau = detail::tau_series(work, 14);
      PuiseuxSeries num =
          detail::eval_univariate(build_form("tau_quadratic_5"), tau, work) *
          detail::eval_univariate(build_form("tau_quartic_13"), tau, work)
              .pow(3);
      PuiseuxSeries rhs = num / tau;
      long jorder = order.get_num().get_si() / 13 + 2;
      PuiseuxSeries j13 = j_series(jorder).dilate(13);
      require_zero_below(c, j13 - rhs, order, "j(13z) from the Hauptmodul");
    });

  if (id == "Q10")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 2;
      auto a = detail::a_tuple(work);
      PuiseuxSeries phi4 = evaluate_form(form_phi4(), a, work);
      require_zero_below(c, phi4, order,
                         "quartic invariant vanishes on theta constants");
      PuiseuxSeries psi2 = evaluate_form(form_psi2(), a, work);
      require_zero_below(c, psi2, order,
                         "quadric invariant vanishes on theta constants");
    });

  if (id == "Q11" || id == "Q12" || id == "Q13")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      auto a = detail::a_tuple(work);
      PuiseuxSeries eta1 = eta_series(1, work), eta13 = eta_series(13, work);
      PuiseuxSeries small = eta1 * eta13.pow(5);
      PuiseuxSeries big = eta1.pow(3) * eta13.pow(3);
      auto pair = [&](int i, int j) {
        PuiseuxSeries p = a[i - 1] * a[j - 1];
        p.truncate_to(work);
        return p;
      };
      PuiseuxSeries p14 = pair(1, 4), p25 = pair(2, 5), p36 = pair(3, 6);
      PuiseuxSeries lhs(work), rhs(work);
      if (id == "Q11") {
        lhs = p14 * p14 * p25 + p25 * p25 * p36 + p36 * p36 * p14;
        rhs = -small - big;
      } else if (id == "Q12") {
        lhs = p14 * p14 * p36 + p25 * p25 * p14 + p36 * p36 * p25;
        rhs = Rat(4) * small + big;
      } else {
        lhs = pair(4, 5) * pair(5, 6) * pair(4, 6) -
              pair(1, 2) * pair(2, 3) * pair(1, 3);
        rhs = Rat(3) * small + big;
      }
      lhs.truncate_to(work);
      require_zero_below(c, lhs - rhs, order, "theta sextet eta quotient");
    });

  if (id == "Q14")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      auto a = detail::a_tuple(work);
      PuiseuxSeries sum = (a[0] * a[3]).inverse() + (a[1] * a[4]).inverse() +
                          (a[2] * a[5]).inverse();
      require_zero_below(c, sum, order,
                         "reciprocal theta pairs sum to zero");
    });

  if (id == "Q15")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 2;
      auto a = detail::a_tuple(work);
      PuiseuxSeries prod = PuiseuxSeries::constant(Rat(1), work);
      for (const auto& ai : a) {
        prod = prod * ai;
        prod.truncate_to(work);
      }
      PuiseuxSeries rhs = -(eta_series(1, work) * eta_series(13, work).pow(5));
      require_zero_below(c, prod - rhs, order,
                         "product of theta constants = -eta eta13^5");
    });

  if (id == "Q16" || id == "Q17" || id == "Q18")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      auto a = detail::a_tuple(work);
      const MultiPoly f = id == "Q16"   ? form_f6()
                          : id == "Q17" ? form_g6()
                                        : form_h6();
      PuiseuxSeries lhs = evaluate_form(f, a, work);
      PuiseuxSeries rhs =
          eta_series(1, work).pow(3) * eta_series(13, work).pow(3);
      if (id == "Q16") rhs = -rhs;
      require_zero_below(c, lhs - rhs, order, "sextet eta-cube identity");
    });

  if (id == "Q19")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      auto f = [&](long x, long y) {
        return ramanujan_theta_f(Rat(x), Rat(y), work);
      };
      auto mono = [&](long num13) {
        return PuiseuxSeries::monomial(rat(num13, 13), Rat(1), work);
      };
      PuiseuxSeries mu1 = f(4, 9) / (mono(7) * f(2, 11));
      PuiseuxSeries mu2 = f(6, 7) / (mono(6) * f(3, 10));
      PuiseuxSeries mu3 = f(2, 11) / (mono(5) * f(1, 12));
      PuiseuxSeries mu4 = f(5, 8) / (mono(2) * f(4, 9));
      PuiseuxSeries mu5 = mono(5) * f(3, 10) / f(5, 8);
      PuiseuxSeries mu6 = mono(15) * f(1, 12) / f(6, 7);
      PuiseuxSeries all = mu1 * mu2 * mu3 * mu4 * mu5 * mu6;
      require_zero_below(c, all - PuiseuxSeries::constant(Rat(1), work),
                         order, "six-fold quotient product = 1");
      PuiseuxSeries kernel =
          f(1, 2).pow(2) /
          (PuiseuxSeries::monomial(Rat(1), Rat(1), work) *
           ramanujan_theta_f(Rat(13), Rat(26), work).pow(2));
      PuiseuxSeries one = PuiseuxSeries::constant(Rat(1), work);
      require_zero_below(
          c, (one + kernel) - (mu1 * mu2 - mu3 * mu5 - mu4 * mu6), order,
          "first modular equation of degree 13");
      require_zero_below(
          c,
          (Rat(-4) * one - kernel) -
              ((mu1 * mu2).inverse() - (mu3 * mu5).inverse() -
               (mu4 * mu6).inverse()),
          order, "second modular equation of degree 13");
      require_zero_below(
          c, (Rat(3) * one + kernel) - (mu2 * mu3 * mu4 - mu1 * mu5 * mu6),
          order, "third modular equation of degree 13");
    });

  if (id == "Q20")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 2;
      auto poch4 = [&](long k1, long k2, long k3, long k4) {
        return pochhammer_series(rat(k1, 13), Rat(1), work) *
               pochhammer_series(rat(k2, 13), Rat(1), work) *
               pochhammer_series(rat(k3, 13), Rat(1), work) *
               pochhammer_series(rat(k4, 13), Rat(1), work);
      };
      PuiseuxSeries lhs = poch4(2, 3, 10, 11).inverse() +
                          PuiseuxSeries::monomial(rat(1, 13), Rat(1), work) *
                              poch4(4, 6, 7, 9).inverse();
      PuiseuxSeries rhs = poch4(1, 5, 8, 12).inverse();
      require_zero_below(c, lhs - rhs, order,
                         "Pochhammer reciprocal identity in q^{1/13}");
    });

  if (id == "Q21")
    return timed_report(id, "qseries", [&](CheckList& c) {
      static const long ell[6] = {11, 7, 5, 3, 9, 1};
      Rat work = order + 2;
      for (int i = 1; i <= 6; ++i) {
        long l = ell[i - 1];
        PuiseuxSeries sum = a_series(i, work);
        PuiseuxSeries prod =
            PuiseuxSeries::monomial(rat(l * l, 104), Rat(i == 4 ? -1 : 1),
                                    work) *
            pochhammer_series(Rat((13 - l) / 2), Rat(13), work) *
            pochhammer_series(Rat((13 + l) / 2), Rat(13), work) *
            pochhammer_series(Rat(13), Rat(13), work);
        require_zero_below(c, sum - prod, order,
                           "triple product form of theta constant " +
                               std::to_string(i));
      }
    });

  if (id == "Q22")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order + 3;
      PuiseuxSeries eta1 = eta_series(1, work);
      std::vector<PuiseuxSeries> x;
      for (const auto& ai : detail::a_tuple(work)) {
        PuiseuxSeries xi = eta1 * ai;
        xi.truncate_to(work);
        x.push_back(std::move(xi));
      }
      PuiseuxSeries phi12 = detail::phi12_on(x, work);
      PuiseuxSeries delta = eta1.pow(24);
      require_zero_below(c, phi12 - delta, order,
                         "weight-12 cusp value is the discriminant");
      PuiseuxSeries prod = PuiseuxSeries::constant(Rat(1), work);
      for (const auto& xi : x) {
        prod = prod * xi;
        prod.truncate_to(work);
      }
      PuiseuxSeries rhs = -(eta1.pow(7) * eta_series(13, work).pow(5));
      require_zero_below(c, prod - rhs, order,
                         "product of weight-one forms = -eta^7 eta13^5");
    });

  if (id == "Q23")
    return timed_report(id, "qseries", [&](CheckList& c) {
      Rat work = order;
      auto a = detail::a_tuple(work);
      static const long anum[7] = {26, 34, 58, 98, 50, 18, 2};
      static const long acoef[7] = {1, 2, 2, 1, -1, -1, -1};
      for (int i = 0; i <= 6; ++i)
        require_leading(c, evaluate_form(form_a(i), a, work),
                        rat(anum[i], 104), Rat(acoef[i]),
                        "quadric value A" + std::to_string(i));
      PuiseuxSeries prod = PuiseuxSeries::constant(Rat(1), work);
      for (int i = 1; i <= 6; ++i) {
        prod = prod * evaluate_form(form_a(i), a, work);
        prod.truncate_to(work);
      }
      require_leading(c, prod, rat(5, 2), Rat(-4), "product of quadrics");
      PuiseuxSeries a0pow = evaluate_form(form_a(0), a, work).pow(6);
      require_leading(c, -a0pow, rat(3, 2), Rat(-1),
                      "minus sixth power of the first quadric");
      c.note("the two degree-twelve values differ, witnessing the strict "
             "inequality");

      auto d = detail::d_tuple(a, work);
      static const long dnum[14] = {195, 99, 3,  11, 19, 27, 35,
                                    43,  51, 59, 67, 75, 83, 91};
      static const long dcoef[14] = {1, 2, -1, 1, -2, -1, -1,
                                     1, 3, -2, 1, -4, -1, -1};
      for (int k = 0; k < 14; ++k)
        require_leading(c, d[k], rat(dnum[k], 104), Rat(dcoef[k]),
                        "cubic value index " + std::to_string(k));
      auto g = detail::g_tuple(d, work);
      static const long gnum[13] = {182, 86, 94, 102, 6,  14, 22,
                                    30,  38, 46, 54,  62, 70};
      static const long gcoef[13] = {1, 13, -22, -21, -1, 2, 2,
                                     -2, -8, 6,   1,   -8, 17};
      for (int k = 0; k < 13; ++k)
        require_leading(c, g[k], rat(gnum[k], 104), Rat(gcoef[k]),
                        "sextic value index " + std::to_string(k));
    });

  throw UnknownId(id);
}

inline std::vector<std::string> q_identity_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 23; ++i) ids.push_back("Q" + std::to_string(i));
  return ids;
}

}  // namespace hm13
