#pragma once

#include <array>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "hm13/forms.hpp"
#include "hm13/fourteen.hpp"
#include "hm13/matrices.hpp"
#include "hm13/relations.hpp"

namespace hm13 {

// Scalar lambda with f(m z) = lambda * f(z), or nullopt when the image is
// not proportional to f at all.
inline std::optional<Cyc> invariance_scalar(const MultiPoly& f,
                                            const CycMatrix& m) {
  return proportionality(f.substitute(m), f);
}

namespace detail {

inline const std::vector<MultiPoly>& a_forms() {
  static const std::vector<MultiPoly> cached = [] {
    std::vector<MultiPoly> v;
    for (int i = 0; i <= 6; ++i) v.push_back(form_a(i));
    return v;
  }();
  return cached;
}

inline const std::vector<MultiPoly>& g_forms() {
  static const std::vector<MultiPoly> cached = [] {
    std::vector<MultiPoly> v;
    for (int i = 0; i <= 12; ++i) v.push_back(form_g(i));
    return v;
  }();
  return cached;
}

// delta_nu = delta_inf composed with S T^nu, computed by substitution.
inline const std::vector<MultiPoly>& delta_forms() {
  static const std::vector<MultiPoly> cached = [] {
    std::vector<MultiPoly> v;
    const CycMatrix s = matrix_s6(), t = matrix_t6();
    const MultiPoly dinf = form_delta_inf();
    for (int nu = 0; nu < 13; ++nu) v.push_back(dinf.substitute(s * t.pow(nu)));
    return v;
  }();
  return cached;
}

// phi_nu = phi_inf composed with S T^nu, computed by substitution.
inline const std::vector<MultiPoly>& phi_forms() {
  static const std::vector<MultiPoly> cached = [] {
    std::vector<MultiPoly> v;
    const CycMatrix s = matrix_s6(), t = matrix_t6();
    const MultiPoly pinf = form_phi_inf();
    for (int nu = 0; nu < 13; ++nu) v.push_back(pinf.substitute(s * t.pow(nu)));
    return v;
  }();
  return cached;
}

// All pairwise products of the cubic family, shared by the sextic
// congruence transform below.
inline const std::vector<std::vector<MultiPoly>>& cubic_pair_products() {
  static const std::vector<std::vector<MultiPoly>> cached = [] {
    std::vector<MultiPoly> d;
    for (int k = 0; k <= 13; ++k) d.push_back(form_d(k));
    std::vector<std::vector<MultiPoly>> p(14,
                                          std::vector<MultiPoly>(14,
                                                                 MultiPoly(6)));
    for (int a = 0; a < 14; ++a)
      for (int b = a; b < 14; ++b) {
        p[a][b] = d[a] * d[b];
        if (b != a) p[b][a] = p[a][b];
      }
    return p;
  }();
  return cached;
}

// Image of the k-th sextic under the six-dimensional involution, assembled
// without any degree-six substitution: the sextic is a quadratic form in
// the cubics, each cubic maps to the row of the fourteen-dimensional
// involution, so the image is a congruence transform of that quadratic
// form evaluated on precomputed cubic pair products.
inline MultiPoly sextic_image_under_involution(int k) {
  const CycMatrix s = derived_s14();
  std::array<std::array<Cyc, 14>, 14> cp{};
  for (const auto& t : sextic_structure(k))
    for (int a = 0; a < 14; ++a) {
      Cyc sa = Rat(t.coeff) * s.at(t.m, a);
      if (sa.is_zero()) continue;
      for (int b = 0; b < 14; ++b) {
        if (s.at(t.n, b).is_zero()) continue;
        cp[a][b] += sa * s.at(t.n, b);
      }
    }
  MultiPoly r(6);
  const auto& dd = cubic_pair_products();
  for (int a = 0; a < 14; ++a)
    for (int b = 0; b < 14; ++b)
      if (!cp[a][b].is_zero()) r += cp[a][b] * dd[a][b];
  return r;
}

// Image of the degree-twelve invariant under the involution, via the
// sextic images above (a direct substitution would be prohibitively
// expensive on a dense degree-twelve polynomial).
inline MultiPoly phi12_image_under_involution() {
  std::vector<std::future<MultiPoly>> tasks;
  tasks.push_back(std::async(std::launch::async, [] {
    MultiPoly g0 = sextic_image_under_involution(0);
    return Rat(7 * 169) * (g0 * g0);
  }));
  for (int k = 1; k <= 6; ++k)
    tasks.push_back(std::async(std::launch::async, [k] {
      return sextic_image_under_involution(k) *
             sextic_image_under_involution(13 - k);
    }));
  MultiPoly sum(6);
  for (auto& t : tasks) sum += t.get();
  return rat(-1, 26) * sum;
}

}  // namespace detail

inline VerificationReport verify_symbolic_identity(const std::string& id) {
  using detail::CheckList;
  using detail::timed_report;

  if (id == "P1")
    return timed_report(id, "symbolic", [](CheckList& c) {
      c.require(form_psi2() == Rat(2) * form_phi4(),
                "quartic bridge: quadric in the A-family != 2 * Phi4");
    });

  if (id == "P2")
    return timed_report(id, "symbolic", [](CheckList& c) {
      const CycMatrix s = matrix_s6(), t = matrix_t6();
      const auto& a = detail::a_forms();
      static const int expo[6] = {1, 4, 9, 3, 12, 10};
      for (int nu = 0; nu < 13; ++nu) {
        MultiPoly lhs = sqrt13_cyc() * a[0].substitute(s * t.pow(nu));
        MultiPoly rhs = a[0];
        for (int j = 1; j <= 6; ++j)
          rhs += Cyc::zeta_pow(static_cast<long>(expo[j - 1]) * nu) * a[j];
        c.require(lhs == rhs, "sqrt13 * (A0 o S T^" + std::to_string(nu) +
                                  ") misses the root-of-unity expansion");
      }
    });

  if (id == "P3")
    return timed_report(id, "symbolic", [](CheckList& c) {
      const CycMatrix s = matrix_s6();
      const auto& a = detail::a_forms();
      static const int perm[6][6] = {{1, 2, 3, 4, 5, 6}, {2, 4, 6, 5, 3, 1},
                                     {3, 6, 4, 1, 2, 5}, {4, 5, 1, 3, 6, 2},
                                     {5, 3, 2, 6, 1, 4}, {6, 1, 5, 2, 4, 3}};
      for (int i = 1; i <= 6; ++i) {
        MultiPoly lhs = Rat(13) * a[i].substitute(s);
        MultiPoly rhs = (Rat(2) * sqrt13_cyc()) * a[0];
        for (int j = 1; j <= 6; ++j)
          rhs += constant("p" + std::to_string(perm[i - 1][j - 1])) * a[j];
        c.require(lhs == rhs, "13 * (A" + std::to_string(i) +
                                  " o S) misses the displayed row");
      }
      // Induced seven-dimensional involution: rows recovered from the
      // substitution action must reproduce the verbatim matrix.
      CycMatrix derived(7);
      for (int j = 0; j <= 6; ++j) {
        auto coords = express_in_basis(a[j].substitute(s), a);
        c.require(coords.has_value(),
                  "A" + std::to_string(j) + " image leaves the span");
        if (!coords) return;
        for (int k = 0; k <= 6; ++k) derived.at(j, k) = (*coords)[k];
      }
      c.require(derived == matrix_s7(),
                "induced 7x7 involution differs from the verbatim matrix");
    });

  if (id == "P4")
    return timed_report(id, "symbolic", [](CheckList& c) {
      const auto& g = detail::g_forms();
      const auto& deltas = detail::delta_forms();
      for (int nu = 0; nu < 13; ++nu) {
        MultiPoly rhs = Rat(-13) * g[0];
        for (int k = 1; k <= 12; ++k)
          rhs += Cyc::zeta_pow(static_cast<long>(k) * nu) * g[k];
        c.require(deltas[nu] == rhs,
                  "delta_" + std::to_string(nu) +
                      " != -13 G0 + sum of zeta^{k nu} G_k");
      }
    });

  if (id == "P5")
    return timed_report(id, "symbolic", [](CheckList& c) {
      // Sanity: the derived matrix really is the involution of a
      // fourteen-dimensional representation (else the audit is vacuous).
      const CycMatrix s = derived_s14();
      c.require_projective(s * s, CycMatrix::identity(14),
                           "derived 14-dim involution squared");
      c.require(s.trace() == Cyc::zero(), "trace of involution != 0");
      c.require((s * matrix_t14()).trace() == Cyc(-2),
                "trace of involution * shift != -2");
      auto errata = printed_s14_errata();
      if (errata.empty()) {
        c.note("printed displays match the derived matrix entry for entry");
      } else {
        c.note("suspected typos in the printed displays: " +
               std::to_string(errata.size()));
        for (const auto& e : errata) c.note(e);
      }
    });

  if (id == "P6")
    return timed_report(id, "symbolic", [](CheckList& c) {
      MultiPoly sum = form_delta_inf();
      for (const auto& d : detail::delta_forms()) sum += d;
      c.require(sum.is_zero(),
                "cusp sextic plus its thirteen translates != 0");
    });

  if (id == "P7")
    return timed_report(id, "symbolic", [](CheckList& c) {
      const auto& deltas = detail::delta_forms();
      const MultiPoly dinf = form_delta_inf();
      std::vector<std::future<MultiPoly>> tasks;
      tasks.push_back(
          std::async(std::launch::async, [&] { return dinf * dinf; }));
      for (int nu = 0; nu < 13; ++nu)
        tasks.push_back(std::async(std::launch::async, [&, nu] {
          return deltas[nu] * deltas[nu];
        }));
      MultiPoly lhs(6);
      for (auto& t : tasks) lhs += t.get();
      const auto& g = detail::g_forms();
      MultiPoly rhs = Rat(7 * 169) * (g[0] * g[0]);
      for (int k = 1; k <= 6; ++k) rhs += g[k] * g[13 - k];
      rhs = Rat(26) * rhs;
      c.require(lhs == rhs, "sum of squared translates != 26 * (7*13^2 G0^2 "
                            "+ G1 G12 + ... + G6 G7)");
    });

  if (id == "P8")
    return timed_report(id, "symbolic", [](CheckList& c) {
      const CycMatrix s = matrix_s6(), t = matrix_t6();
      auto check = [&c](const char* fname, const MultiPoly& f,
                        const char* mname, const MultiPoly& image) {
        auto lambda = proportionality(image, f);
        if (!lambda) {
          c.require(false, std::string(fname) + " not proportional to its " +
                               mname + "-image");
          return;
        }
        c.require(*lambda == Cyc(1),
                  std::string(fname) + " " + mname + "-scalar != 1");
        c.note(std::string(fname) + " o " + mname +
               ": lambda=" + lambda->str());
      };
      MultiPoly phi4 = form_phi4(), psi2 = form_psi2(), phi12 = form_phi12();
      check("Phi4", phi4, "S", phi4.substitute(s));
      check("Phi4", phi4, "T", phi4.substitute(t));
      check("Psi2", psi2, "S", psi2.substitute(s));
      check("Psi2", psi2, "T", psi2.substitute(t));
      check("Phi12", phi12, "T", phi12.substitute(t));
      // Cross-validate the congruence route for the sextic images on an
      // instance where direct substitution is still affordable.
      c.require(detail::sextic_image_under_involution(0) ==
                    form_g(0).substitute(s),
                "congruence transform disagrees with direct substitution");
      check("Phi12", phi12, "S", detail::phi12_image_under_involution());
    });

  if (id == "P9")
    return timed_report(id, "symbolic", [](CheckList& c) {
      MultiPoly a0 = form_a(0);
      MultiPoly prod = detail::senary({{1, {2, 2, 2, 2, 2, 2}}});
      const MultiPoly forms[3] = {a0 * a0, form_g(0), prod};
      const char* fnames[3] = {"A0^2", "G0", "(z1...z6)^2"};
      const CycMatrix mats[2] = {matrix_h(), matrix_t6()};
      const char* mnames[2] = {"H", "T"};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) {
          auto lambda = invariance_scalar(forms[i], mats[j]);
          c.require(lambda.has_value() && *lambda == Cyc(1),
                    std::string(fnames[i]) + " not fixed by " + mnames[j]);
          if (lambda)
            c.note(std::string(fnames[i]) + " o " + mnames[j] +
                   ": lambda=" + lambda->str());
        }
    });

  if (id == "P10")
    return timed_report(id, "symbolic", [](CheckList& c) {
      const MultiPoly pinf = form_phi_inf();
      MultiPoly lhs = pinf * pinf;
      for (const auto& p : detail::phi_forms()) lhs += p * p;
      const auto& a = detail::a_forms();
      MultiPoly rhs =
          Rat(26) * (a[0] * a[0] + a[1] * a[5] + a[2] * a[3] + a[4] * a[6]);
      c.require(lhs == rhs, "sum of squared quadric translates != 26 * "
                            "(A0^2 + A1 A5 + A2 A3 + A4 A6)");
    });

  if (id == "P11")
    return timed_report(id, "symbolic", [](CheckList& c) {
      const CycMatrix s = matrix_s6();
      const MultiPoly forms[3] = {form_f6(), form_g6(), form_h6()};
      const char* names[3] = {"f6", "g6", "h6"};
      for (int i = 0; i < 3; ++i) {
        auto lambda = invariance_scalar(forms[i], s);
        c.require(!lambda.has_value(),
                  std::string(names[i]) +
                      " unexpectedly proportional to its image");
        if (!lambda) c.note(std::string(names[i]) + ": not proportional");
      }
    });

  if (id == "P12")
    return timed_report(id, "symbolic", [](CheckList& c) {
      MultiPoly lhs = build_form("tau_quadratic_5") *
                      build_form("tau_quartic_13").pow(3);
      MultiPoly rhs = build_form("tau_quadratic_6") *
                      build_form("tau_sextic").pow(2);
      MultiPoly tau1728 = MultiPoly::monomial(1, {1}, Cyc(1728));
      c.require(lhs - rhs == tau1728,
                "degree-14 resolvent triple misses 1728 tau");
    });

  if (id == "P13")
    return timed_report(id, "symbolic", [](CheckList& c) {
      using detail::univariate;
      auto half = [](long a, long b) { return Quad(rat(a, 2), rat(b, 2)); };
      auto split_quadratic = [&](Quad c1, Quad c0) {
        return univariate({Quad(1), c1, c0}) *
               univariate({Quad(1), c1.conj(), c0.conj()});
      };
      c.require(univariate({Quad(1), Quad(1), Quad(2), Quad(-4), Quad(3)}) ==
                    split_quadratic(half(1, 1), half(5, 1)),
                "period quartic does not split over the quadratic field");
      c.require(build_form("tau_quartic_13") ==
                    split_quadratic(half(7, 1), half(11, 3)),
                "small tau quartic does not split over the quadratic field");
      c.require(build_form("tau_quartic_247") ==
                    split_quadratic(half(247, 65), half(1859, 507)),
                "large tau quartic does not split over the quadratic field");
      MultiPoly cubic_a =
          univariate({Quad(1), Quad(5), half(21, -1), half(3, 1)});
      MultiPoly cubic_b =
          univariate({Quad(1), Quad(5), half(21, 1), half(3, -1)});
      c.require(build_form("tau_sextic") == cubic_a * cubic_b,
                "tau sextic does not split over the quadratic field");
    });

  throw UnknownId(id);
}

inline std::vector<std::string> symbolic_identity_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 13; ++i) ids.push_back("P" + std::to_string(i));
  return ids;
}

}  // namespace hm13
