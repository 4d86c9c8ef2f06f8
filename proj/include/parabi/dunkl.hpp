#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parabi/errors.hpp"
#include "parabi/families.hpp"
#include "parabi/params.hpp"
#include "parabi/poly.hpp"

namespace parabi {

/// Dunkl-difference operator of one family.
///
/// N = 2j (P0, P2): D_beta = A T+ + B T- + C R + D T+R - (A+B+C+D) I + beta E(x) (I - R).
/// N = 2j+1 (P1, P3): L = F (I - R) + G (T+R - I).
/// T+- f(x) = f(x +- 1), R f(x) = f(-x) and T+R f(x) = f(-x-1).
class OperatorSpec {
public:
  OperatorSpec(const ParamSet& p, Rational beta = 0) : params_(p), beta_(std::move(beta)) {
    const Rational& a = p.a();
    const Rational& b = p.b();
    const int j = p.j();
    rho1_ = p.rho1();
    if (p.family() == FamilyCase::P0) {
      rho2_ = (b - j - 1 - a) / 4;
      omega_ = (2 * rho1_ + j) * (2 * rho2_ + j) - 4 * (1 + rho1_) * (rho1_ + rho2_ + j);
    } else if (p.family() == FamilyCase::P2) {
      r1_ = -(b - j - 1 - a) / 4;
      omega_ = 4 * (1 + rho1_ - r1_) * Rational(1 - j, 2) + 4 * r1_ * (1 - r1_) - j;
    }
  }

  FamilyCase family() const { return params_.family(); }
  const Rational& beta() const { return beta_; }
  /// Constant omega inside C(x); zero for P1/P3, which have no such constant.
  const Rational& omega() const { return omega_; }

  /// Points where a coefficient denominator vanishes.
  bool is_pole(const Rational& x) const {
    if (has_odd_size(family())) return x == 0 || 2 * x + 1 == 0;
    return x == 0 || x + 1 == 0 || 2 * x + 1 == 0 || 2 * x - 1 == 0;
  }

  /// (operator f)(x), exact.
  Rational apply(const Poly& f, const Rational& x) const {
    if (is_pole(x)) throw PoleError("operator evaluated at a pole x=" + to_string(x));
    const Rational fx = f(x);
    const Rational fr = f(-x);
    const Rational ftr = f(-x - 1);
    if (has_odd_size(family())) {
      const auto [F, G] = odd_coefficients(x);
      return F * (fx - fr) + G * (ftr - fx);
    }
    const auto c = even_coefficients(x);
    return c.A * f(x + 1) + c.B * f(x - 1) + c.C * fr + c.D * ftr - (c.A + c.B + c.C + c.D) * fx +
           beta_ * c.E * (fx - fr);
  }

  struct EvenCoefficients {
    Rational A, B, C, D, E;
  };

  EvenCoefficients even_coefficients(const Rational& x) const {
    const int j = params_.j();
    EvenCoefficients c;
    if (family() == FamilyCase::P0) {
      const Rational& r1 = rho1_;
      const Rational& r2 = rho2_;
      const Rational up = (x + r1 + 1) * (2 * x - 2 * r1 - j) * (2 * x - 2 * r2 - j);
      c.A = up * (x + r2 + 1) / (8 * (x + 1) * (2 * x + 1));
      c.B = (x - r2) * (x - r1 - 1) * (2 * x + 2 * r1 + j) * (2 * x + 2 * r2 + j) / (8 * x * (2 * x - 1));
      c.C = (x - r2) * (4 * x * x + omega_) / (8 * x) - (x - r2) * up / (8 * x * (2 * x + 1)) - c.B;
      c.D = r2 * up / (8 * x * (x + 1) * (2 * x + 1));
      c.E = (x - r2) / (2 * x);
    } else {
      const Rational& r1 = rho1_;
      const Rational& s = r1_;
      const Rational shift = x + r1 + Rational(j + 1, 2);
      const Rational up = (x + r1 + 1) * (2 * x - 2 * s + 1) * (2 * x + 2 * s - j);
      c.A = up * (x - r1 + Rational(1 - j, 2)) / (8 * (x + 1) * (2 * x + 1));
      c.B = shift * (x - r1 - 1) * (2 * x + 2 * s - 1) * (2 * x - 2 * s + j) / (8 * x * (2 * x - 1));
      c.C = shift * (4 * x * x + omega_) / (8 * x) - shift * up / (8 * x * (2 * x + 1)) - c.B;
      c.D = -(2 * r1 + j + 1) * up / (16 * x * (x + 1) * (2 * x + 1));
      c.E = (4 * x + params_.b() + params_.a() + j + 1) / (8 * x);
    }
    return c;
  }

  std::pair<Rational, Rational> odd_coefficients(const Rational& x) const {
    const Rational& a = params_.a();
    const Rational& b = params_.b();
    const int j = params_.j();
    if (family() == FamilyCase::P1) {
      Rational G = (4 * x + 1 + a - b - j) * (4 * x + 1 - a - b - j) / (16 * (2 * x + 1));
      Rational F = (4 * x + 1 + j + a - b) * (4 * x + 1 + j - a - b) / (32 * x);
      return {std::move(F), std::move(G)};
    }
    Rational G = (4 * x + 1 + b - a - j) * (4 * x + 1 + a - b - j) / (16 * (2 * x + 1));
    Rational F = (4 * x + j + 1 - a - b) * (4 * x + j + 1 + a + b) / (32 * x);
    return {std::move(F), std::move(G)};
  }

private:
  ParamSet params_;
  Rational beta_;
  Rational rho1_;
  Rational rho2_ = 0;
  Rational r1_ = 0;
  Rational omega_ = 0;
};

/// Displayed eigenvalue of degree n: n(n-j) / n(n+1-j)+beta for N = 2j, n / j-n for N = 2j+1 (half-degree n).
inline Rational eigenvalue(FamilyCase c, int j, int n, const Rational& beta) {
  if (n < 0) throw ArgumentError("negative degree");
  const int h = n / 2;
  if (has_odd_size(c)) return n % 2 == 0 ? Rational(h) : Rational(j - h);
  if (n % 2 == 0) return Rational(h * (h - j));
  return Rational(h * (h + 1 - j)) + beta;
}

struct BispectralityRow {
  int n = 0;
  Rational eigenvalue;
  std::vector<Rational> samples;
  bool holds = false;
};

struct BispectralityReport {
  std::vector<BispectralityRow> rows;
  bool all_hold() const {
    for (const auto& r : rows)
      if (!r.holds) return false;
    return true;
  }
};

/// Non-pole rational sample points: 1/3, -2/5, 3/7, ... skipping poles.
inline std::vector<Rational> sample_points(const OperatorSpec& op, int count) {
  std::vector<Rational> pts;
  for (int i = 1; static_cast<int>(pts.size()) < count; ++i) {
    Rational x = Rational(i % 2 == 1 ? i : -i, 2 * i + 1) + Rational(i, 3);
    if (!op.is_pole(x)) pts.push_back(std::move(x));
  }
  return pts;
}

/// Checks op P_n = eigenvalue(n) P_n at extra_points + deg + 1 sample points, n = 0..N.
/// Polynomials default to the recurrence for p.
inline BispectralityReport verify_bispectrality(const ParamSet& p, const Rational& beta, int extra_points,
                                                const std::vector<Poly>& polys) {
  const OperatorSpec op(p, beta);
  BispectralityReport rep;
  for (int n = 0; n <= p.N(); ++n) {
    BispectralityRow row;
    row.n = n;
    row.eigenvalue = eigenvalue(p.family(), p.j(), n, beta);
    row.samples = sample_points(op, n + 1 + extra_points);
    row.holds = true;
    const Poly& f = polys.at(static_cast<std::size_t>(n));
    for (const auto& x : row.samples) {
      if (op.apply(f, x) != row.eigenvalue * f(x)) {
        row.holds = false;
        break;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline BispectralityReport verify_bispectrality(const ParamSet& p, const Rational& beta, int extra_points = 2) {
  return verify_bispectrality(p, beta, extra_points, generate_polys(p, p.N()));
}

}  // namespace parabi
