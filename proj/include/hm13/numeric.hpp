#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hm13/constants.hpp"
#include "hm13/matrices.hpp"
#include "hm13/relations.hpp"

namespace hm13 {

// A point of the upper half-plane at which series are summed directly.
// The imaginary-part floor keeps every truncated tail below 1e-15.
struct SamplePoint {
  Complex z;
  explicit SamplePoint(Complex value) : z(value) {
    if (z.imag() < 0.2)
      throw Error("sample point needs Im(z) >= 0.2");
  }
};

inline std::vector<SamplePoint> default_sample_points() {
  return {SamplePoint({0.0, 1.0}), SamplePoint({0.5, 1.0}),
          SamplePoint({-1.0 / 3.0, 1.5})};
}

namespace detail {

// q^e = exp(2 pi i e z) for real exponent e.
inline Complex q_power(Complex z, double e) {
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  return std::exp(two_pi_i * e * z);
}

// Largest exponent that still contributes above 1e-18 at this height.
inline double exponent_bound(Complex z, const char* what) {
  if (z.imag() < 0.02)
    throw TailBoundExceeded(std::string(what) +
                            ": point too close to the real axis");
  return 42.0 / (2.0 * std::numbers::pi * z.imag());
}

}  // namespace detail

// Dedekind eta by its lacunary (pentagonal-number) expansion,
// eta(z) = sum_k (-1)^k q^{1/24 + k(3k-1)/2}.
inline Complex eta_point(Complex z) {
  const double bound = detail::exponent_bound(z, "eta");
  Complex s{0.0, 0.0};
  double sign = 1.0;
  for (long k = 0;; ++k) {
    const double e_pos = 1.0 / 24.0 + 0.5 * k * (3.0 * k - 1.0);
    const double e_neg = 1.0 / 24.0 + 0.5 * k * (3.0 * k + 1.0);
    if (k > 0 && e_pos > bound && e_neg > bound) break;
    if (k > 1000) throw TailBoundExceeded("eta: tail did not close");
    s += sign * detail::q_power(z, e_pos);
    if (k > 0) s += sign * detail::q_power(z, e_neg);
    sign = -sign;
  }
  return s;
}

// Phase-normalized theta constant q^{l^2/8k} sum_n (-1)^n q^{(kn^2+ln)/2}.
inline Complex theta_constant_point(long k, long l, Complex z) {
  const double bound = detail::exponent_bound(z, "theta");
  const double lead = static_cast<double>(l * l) / (8.0 * k);
  Complex s{0.0, 0.0};
  for (long n = 0;; ++n) {
    const double e_pos = lead + 0.5 * (static_cast<double>(k) * n * n + l * n);
    const double e_neg = lead + 0.5 * (static_cast<double>(k) * n * n - l * n);
    if (n > 0 && e_pos > bound && e_neg > bound) break;
    if (n > 1000) throw TailBoundExceeded("theta: tail did not close");
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    s += sign * detail::q_power(z, e_pos);
    if (n > 0) s += sign * detail::q_power(z, e_neg);
  }
  return s;
}

// The six level-13 theta constants (the fourth one carries a minus sign).
inline Complex a_point(int i, Complex z) {
  static const long ell[6] = {11, 7, 5, 3, 9, 1};
  if (i < 1 || i > 6) throw UnknownSeries("a" + std::to_string(i));
  Complex v = theta_constant_point(13, ell[i - 1], z);
  return i == 4 ? -v : v;
}

inline std::vector<Complex> a_vector(Complex z) {
  std::vector<Complex> v;
  for (int i = 1; i <= 6; ++i) v.push_back(a_point(i, z));
  return v;
}

namespace detail {

inline std::vector<Complex> apply_embedded(const CycMatrix& m,
                                           const std::vector<Complex>& v) {
  std::vector<Complex> r(v.size(), Complex{0.0, 0.0});
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      r[i] += m.at(i, j).to_complex() * v[j];
    }
  return r;
}

inline double max_component_gap(const std::vector<Complex>& a,
                                const std::vector<Complex>& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

}  // namespace detail

// Which half-plane the complex embedding of an exact element must land in.
enum class HalfPlane { re_positive, im_positive };

// One-bit branch resolution: the candidate squares exactly to the target
// element of Q(sqrt 13); the returned sign is the one whose embedding lies
// in the stated half-plane.  This is the only place a floating-point value
// influences an exact choice, and it is pinned by the exact precondition.
inline int resolve_sign(const Cyc& candidate, const Quad& target_square,
                        HalfPlane expected) {
  if (candidate * candidate != embed(target_square))
    throw ExactSquareMismatch();
  const Complex v = candidate.to_complex();
  const double part =
      expected == HalfPlane::re_positive ? v.real() : v.imag();
  if (std::abs(part) < 1e-9) throw AmbiguousSign();
  return part > 0 ? 1 : -1;
}

inline VerificationReport verify_numeric_identity(
    const std::string& id,
    const std::vector<SamplePoint>& samples = default_sample_points(),
    std::optional<double> tol_opt = std::nullopt) {
  using detail::apply_embedded;
  using detail::CheckList;
  using detail::fmt;
  using detail::max_component_gap;
  using detail::timed_report;

  if (samples.empty()) throw Error("need at least one sample point");

  if (id == "N1") {
    const double tol = tol_opt.value_or(1e-9);
    return timed_report(id, "numeric", [&](CheckList& c) {
      // A(z+1) = e^{-3 pi i/4} T A(z).
      const Complex phase = std::polar(1.0, -3.0 * std::numbers::pi / 4.0);
      const CycMatrix t = matrix_t6();
      double worst = 0.0;
      for (const auto& p : samples) {
        std::vector<Complex> rhs = apply_embedded(t, a_vector(p.z));
        for (auto& x : rhs) x *= phase;
        worst = std::max(worst,
                         max_component_gap(a_vector(p.z + 1.0), rhs));
      }
      c.require(worst < tol, "translation law residual " + fmt(worst) +
                                 " exceeds " + fmt(tol));
      c.note("translation law max residual " + fmt(worst));
    });
  }

  if (id == "N2") {
    const double tol = tol_opt.value_or(1e-9);
    return timed_report(id, "numeric", [&](CheckList& c) {
      // A(-1/z) = e^{pi i/4} sqrt(z) S A(z), branch 0 < arg sqrt(z) <= pi/2.
      const Complex phase = std::polar(1.0, std::numbers::pi / 4.0);
      const CycMatrix s = matrix_s6();
      double worst = 0.0;
      for (const auto& p : samples) {
        std::vector<Complex> rhs = apply_embedded(s, a_vector(p.z));
        const Complex factor = phase * std::sqrt(p.z);
        for (auto& x : rhs) x *= factor;
        worst = std::max(worst,
                         max_component_gap(a_vector(-1.0 / p.z), rhs));
      }
      c.require(worst < tol, "inversion law residual " + fmt(worst) +
                                 " exceeds " + fmt(tol));
      c.note("inversion law max residual " + fmt(worst));

      // Composing the two laws must match direct evaluation along the
      // two-letter word: A(-1/(z+1)) via the inversion law applied after
      // the translation law.
      const CycMatrix t = matrix_t6();
      const Complex tphase = std::polar(1.0, -3.0 * std::numbers::pi / 4.0);
      double comp = 0.0;
      for (const auto& p : samples) {
        std::vector<Complex> rhs = apply_embedded(t, a_vector(p.z));
        const Complex factor =
            phase * std::sqrt(p.z + 1.0) * tphase;
        rhs = apply_embedded(s, rhs);
        for (auto& x : rhs) x *= factor;
        comp = std::max(comp,
                        max_component_gap(a_vector(-1.0 / (p.z + 1.0)), rhs));
      }
      c.require(comp < tol, "composed word residual " + fmt(comp) +
                                " exceeds " + fmt(tol));
      c.note("composed two-letter word max residual " + fmt(comp));
    });
  }

  if (id == "N3") {
    const double tol = tol_opt.value_or(1e-12);
    return timed_report(id, "numeric", [&](CheckList& c) {
      // Closed radical values of the four cubic Gaussian periods, with
      // their quadrant signs.
      const double s13 = std::sqrt(13.0);
      const Complex rad_plus = std::sqrt(Complex(-26.0 + 6.0 * s13, 0.0));
      const Complex rad_minus = std::sqrt(Complex(-26.0 - 6.0 * s13, 0.0));
      const Complex expected[4] = {
          0.25 * (Complex(-1.0 + s13, 0.0) + rad_plus),
          0.25 * (Complex(-1.0 - s13, 0.0) + rad_minus),
          0.25 * (Complex(-1.0 + s13, 0.0) - rad_plus),
          0.25 * (Complex(-1.0 - s13, 0.0) - rad_minus)};
      static const int re_sign[4] = {1, -1, 1, -1};
      static const int im_sign[4] = {1, 1, -1, -1};
      double worst = 0.0;
      for (int i = 1; i <= 4; ++i) {
        const Complex v = theta(i).to_complex();
        worst = std::max(worst, std::abs(v - expected[i - 1]));
        c.require(v.real() * re_sign[i - 1] > 0 &&
                      v.imag() * im_sign[i - 1] > 0,
                  "period " + std::to_string(i) + " in wrong quadrant");
      }
      c.require(worst < tol, "period radical residual " + fmt(worst) +
                                 " exceeds " + fmt(tol));
      c.note("period radicals max residual " + fmt(worst));
    });
  }

  if (id == "N4")
    return timed_report(id, "numeric", [&](CheckList& c) {
      // Branch record for the square roots used by the exact layer.  Each
      // candidate squares exactly to its target; the numeric embedding
      // only picks the sign.
      auto record = [&](const std::string& name, const Quad& square,
                        HalfPlane hp, const char* hp_name) {
        const Cyc cand = constant(name);
        const int sign = resolve_sign(cand, square, hp);
        c.note(name + ": sqrt branch with " + hp_name + " is " +
               (sign > 0 ? "+1" : "-1"));
        c.require(resolve_sign(-cand, square, hp) == -sign,
                  name + ": negated candidate must flip the sign");
        return sign;
      };
      // r1^2 = -13 - 2 sqrt(13), upper half-plane.
      c.require(record("r1", Quad(Rat(-13), Rat(-2)),
                       HalfPlane::im_positive, "Im > 0") == 1,
                "r1 branch should be +1");
      // r3^2 = -13 + 2 sqrt(13), upper half-plane.
      c.require(record("r3", Quad(Rat(-13), Rat(2)),
                       HalfPlane::im_positive, "Im > 0") == 1,
                "r3 branch should be +1");
      // r2^2 = (-13 + 3 sqrt(13))/2 and r4^2 = (-13 - 3 sqrt(13))/2; the
      // branch is whatever the period combinations give, recorded here.
      record("r2", Quad(rat(-13, 2), rat(3, 2)), HalfPlane::im_positive,
             "Im > 0");
      record("r4", Quad(rat(-13, 2), rat(-3, 2)), HalfPlane::im_positive,
             "Im > 0");
      // theta1 + theta3 - theta2 - theta4 = sqrt(13), positive branch.
      const Cyc s13 = theta(1) + theta(3) - theta(2) - theta(4);
      c.require(resolve_sign(s13, Quad(Rat(13), Rat(0)),
                             HalfPlane::re_positive) == 1,
                "period combination for sqrt(13) should be +1");
      // The exact-square precondition must reject a wrong target.
      try {
        (void)resolve_sign(constant("r1"), Quad(Rat(-13), Rat(2)),
                           HalfPlane::im_positive);
        c.require(false, "mismatched square was not rejected");
      } catch (const ExactSquareMismatch&) {
        c.note("mismatched square rejected");
      }
    });

  if (id == "N5") {
    const double tol = tol_opt.value_or(1e-8);
    return timed_report(id, "numeric", [&](CheckList& c) {
      // Eta-quotient rewrites of the partition congruence generating
      // functions, summed over translates (z + 24 lambda)/p.
      auto check_level = [&](long p, const std::vector<double>& coeffs,
                             const std::string& label) {
        double worst = 0.0;
        for (const auto& pt : samples) {
          const Complex ep = eta_point(static_cast<double>(p) * pt.z);
          Complex lhs{0.0, 0.0};
          for (long lam = 0; lam < p; ++lam)
            lhs += ep / eta_point((pt.z + 24.0 * lam) /
                                  static_cast<double>(p));
          const Complex ratio = ep / eta_point(pt.z);
          Complex rhs{0.0, 0.0};
          Complex power{1.0, 0.0};
          for (size_t k = 0; k < coeffs.size(); ++k) {
            power *= ratio * ratio;
            rhs += coeffs[k] * power;
          }
          worst = std::max(worst, std::abs(lhs - rhs));
        }
        c.require(worst < tol, label + " residual " + fmt(worst) +
                                   " exceeds " + fmt(tol));
        c.note(label + " max residual " + fmt(worst));
      };
      check_level(5, {0.0, 0.0, 25.0}, "level 5 sum");
      check_level(7, {0.0, 49.0, 0.0, 343.0}, "level 7 sum");
      check_level(13,
                  {11.0 * 13, 36.0 * 169, 38.0 * 2197, 20.0 * 28561,
                   6.0 * 371293, 4826809.0, 4826809.0},
                  "level 13 sum");
    });
  }

  if (id == "N6") {
    const double tol = tol_opt.value_or(1e-12);
    return timed_report(id, "numeric", [&](CheckList& c) {
      const double pi = std::numbers::pi;
      const double ratio =
          (std::sin(2 * pi / 13) * std::sin(5 * pi / 13) *
           std::sin(6 * pi / 13)) /
          (std::sin(pi / 13) * std::sin(3 * pi / 13) * std::sin(4 * pi / 13));
      const double unit = (3.0 + std::sqrt(13.0)) / 2.0;
      c.require(std::abs(ratio - unit) < tol,
                "sine product misses (3+sqrt(13))/2 by " +
                    fmt(std::abs(ratio - unit)));
      c.note("sine product = " + fmt(ratio));
      // (3+sqrt 13)/2 is a unit: its field norm is exactly -1.
      const Quad u(rat(3, 2), rat(1, 2));
      c.require(u.norm() == -1, "norm of the unit is not -1");
      c.note("field norm of the unit is -1");
    });
  }

  throw UnknownId(id);
}

inline std::vector<std::string> numeric_identity_ids() {
  return {"N1", "N2", "N3", "N4", "N5", "N6"};
}

}  // namespace hm13
