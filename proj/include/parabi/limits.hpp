#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "parabi/errors.hpp"
#include "parabi/families.hpp"
#include "parabi/general_cbi.hpp"
#include "parabi/params.hpp"
#include "parabi/poly.hpp"
#include "parabi/qpararacah.hpp"
#include "parabi/spectra.hpp"

namespace parabi {

// q -> -1

inline QParaRacahParams qpr_params_for(const ParamSet& target, double eps) {
  const double a = to_double(target.a());
  const double b = to_double(target.b());
  const int j = target.j();
  const Complex I(0.0, 1.0);
  QParaRacahParams q;
  q.q = -std::exp(eps);
  q.c = I * std::exp(eps * (a + b - j) / 2.0);
  q.d = I * std::exp(eps * (-a + b - j) / 2.0);
  q.alpha = to_double(target.alpha());
  q.j = j;
  return q;
}

struct ScaledCoeffs {
  Complex diag;
  Complex u;  // zero for n = 0
};

/// Affinely rescaled q-para-Racah diagonal and off-diagonal entries at q = -e^eps.
inline ScaledCoeffs qpr_scaled_coeffs(const ParamSet& target, double eps, int n) {
  if (!(eps > 0)) throw ArgumentError("epsilon must be positive");
  if (n < 0 || n > target.N()) throw ArgumentError("index out of range");
  const QParaRacahParams q = qpr_params_for(target, eps);
  const Complex s = Complex(0.0, 2.0 * eps);
  const auto cur = qpr_coeffs(q, n);
  ScaledCoeffs out;
  out.diag = (q.c + 1.0 / q.c) / (2.0 * s) - 0.25 - (cur.A + cur.C) / s;
  out.u = n == 0 ? Complex(0.0) : (qpr_coeffs(q, n - 1).A / s) * (cur.C / s);
  return out;
}

struct LimitRow {
  double epsilon = 0;
  double max_dev_diag = 0;
  double max_dev_offdiag = 0;
  double max_imag = 0;
  double max_dev() const { return std::max(max_dev_diag, max_dev_offdiag); }
};

struct LimitStudy {
  ParamSet target;
  std::vector<LimitRow> rows;
  /// Least-squares slope of log(max_dev) against log(epsilon); NaN with fewer than two usable rows.
  double fitted_order() const {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows)
      if (r.max_dev() > 0) pts.emplace_back(std::log(r.epsilon), std::log(r.max_dev()));
    if (pts.size() < 2) return std::nan("");
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) mx += x, my += y;
    mx /= pts.size();
    my /= pts.size();
    double sxy = 0, sxx = 0;
    for (const auto& [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
    return sxx == 0 ? std::nan("") : sxy / sxx;
  }
};

inline LimitRow limit_row(const ParamSet& target, const Recurrence& exact, double eps) {
  LimitRow r;
  r.epsilon = eps;
  for (int n = 0; n <= target.N(); ++n) {
    const ScaledCoeffs s = qpr_scaled_coeffs(target, eps, n);
    r.max_dev_diag = std::max(r.max_dev_diag, std::abs(s.diag.real() - to_double(exact.diag(n))));
    r.max_imag = std::max(r.max_imag, std::abs(s.diag.imag()));
    if (n >= 1) {
      r.max_dev_offdiag = std::max(r.max_dev_offdiag, std::abs(s.u.real() - to_double(exact.u(n))));
      r.max_imag = std::max(r.max_imag, std::abs(s.u.imag()));
    }
  }
  return r;
}

inline LimitStudy limit_study(const ParamSet& target, const std::vector<double>& epsilons) {
  if (epsilons.empty()) throw ArgumentError("epsilon list is empty");
  const auto exact = Recurrence::of(target);
  LimitStudy st{target, {}};
  for (double e : epsilons) st.rows.push_back(limit_row(target, exact, e));
  return st;
}

// general CBI / BI at b = 0

inline GeneralCBIParams single_lattice_cbi_params(const ParamSet& p) {
  const Rational& a = p.a();
  const int j = p.j();
  return GeneralCBIParams{-(j + 1 - a) / 4, -(j + 1 + a) / 4, (j + 1 - a) / 4, (j + 1 + a) / 4, p.alpha()};
}

struct ReductionReport {
  int checked_up_to = -1;
  int first_mismatch = -1;
  bool holds() const { return first_mismatch < 0; }
};

namespace detail {

inline ReductionReport compare_polys(const std::vector<Poly>& lhs, const std::vector<Poly>& rhs, int up_to) {
  ReductionReport r;
  r.checked_up_to = up_to;
  for (int n = 0; n <= up_to; ++n)
    if (lhs.at(static_cast<std::size_t>(n)) != rhs.at(static_cast<std::size_t>(n))) {
      r.first_mismatch = n;
      break;
    }
  return r;
}

inline void require_single_lattice(const ParamSet& p) {
  if (p.b() != 0 || p.alpha() != Rational(1, 2))
    throw ArgumentError("single-lattice identification needs b = 0 and alpha = 1/2");
}

}  // namespace detail

/// P0_n(x; a, 0, 1/2, 2j) against I_n(x; -(j+1-a)/4, -(j+1+a)/4, (j+1-a)/4, (j+1+a)/4), n <= N.
inline ReductionReport reduction_general_cbi(const ParamSet& p) {
  detail::require_single_lattice(p);
  if (p.family() != FamilyCase::P0) throw ArgumentError("CBI identification applies to P0");
  return detail::compare_polys(generate_polys(p, p.N()), general_cbi_polys(single_lattice_cbi_params(p), p.N()), p.N());
}

/// P1_n against the Geronimus companion B_n at the same parameters, n <= 2j+1.
inline ReductionReport reduction_general_bi(const ParamSet& p) {
  detail::require_single_lattice(p);
  const ParamSet p1 = p.with_family(FamilyCase::P1);
  const auto g = single_lattice_cbi_params(p1);
  return detail::compare_polys(generate_polys(p1, p1.N()), general_bi_polys(g, p1.N()), p1.N());
}

// Krawtchouk

/// Monic Krawtchouk K_n(x; p, N): diagonal p(N-n) + n(1-p), off-diagonal n p (1-p)(N-n+1).
inline std::vector<Poly> krawtchouk_monic_all(int up_to, const Rational& p, int N) {
  if (up_to < 0 || up_to > N + 1) throw ArgumentError("Krawtchouk degree out of range");
  if (p <= 0 || p >= 1) throw ArgumentError("Krawtchouk parameter p must lie in (0, 1)");
  std::vector<Poly> K{Poly::constant(1)};
  for (int n = 0; n < up_to; ++n) {
    Poly next = Poly::linear_factor(p * (N - n) + n * (1 - p)) * K.back();
    if (n > 0) next -= (n * p * (1 - p) * (N - n + 1)) * K[static_cast<std::size_t>(n - 1)];
    K.push_back(std::move(next));
  }
  return K;
}

inline Poly krawtchouk_monic(int n, const Rational& p, int N) {
  if (n < 0 || n > N) throw ArgumentError("Krawtchouk degree out of range");
  return krawtchouk_monic_all(n, p, N).back();
}

/// P_n(x; -j-1, 0, 1/2) = 2^{-n} K_n(2x + N - j; 1/2, N) for P0 (N = 2j) or P1 (N = 2j+1).
inline ReductionReport reduction_krawtchouk(const ParamSet& p) {
  if (p.a() != -(p.j() + 1) || p.b() != 0 || p.alpha() != Rational(1, 2))
    throw ArgumentError("Krawtchouk identification needs a = -j-1, b = 0, alpha = 1/2");
  if (p.family() != FamilyCase::P0 && p.family() != FamilyCase::P1)
    throw ArgumentError("Krawtchouk identification applies to P0 and P1");
  const int N = p.N();
  const auto K = krawtchouk_monic_all(N, Rational(1, 2), N);
  std::vector<Poly> rhs;
  for (int n = 0; n <= N; ++n)
    rhs.push_back(Rational(1, 1) / pow2(n) * K[static_cast<std::size_t>(n)].compose_affine(2, N - p.j()));
  return detail::compare_polys(generate_polys(p, N), rhs, N);
}

// lattice geometry

struct LatticeSpacings {
  Rational c;
  Rational d1, d2, d3, d4;  // closed forms
  Rational endpoint;        // (2j + b + c)/4
  std::vector<Rational> negative_gaps;  // outward from the nearest negative point
  std::vector<Rational> positive_gaps;  // outward from the nearest non-negative point
  Rational measured_d1, measured_d2;
  bool matches = false;
};

/// Gaps of the P0 bi-lattice with a = -(c+j+1), c >= 0, |b| <= 1, measured and closed form.
inline LatticeSpacings lattice_spacings(const ParamSet& p) {
  if (p.family() != FamilyCase::P0) throw RegimeError("lattice spacings are described for P0");
  LatticeSpacings L;
  L.c = -p.a() - p.j() - 1;
  if (L.c < 0 || abs(p.b()) > 1) throw RegimeError("parameters outside the depicted regime");
  const Rational& b = p.b();
  L.d1 = (L.c + 2 - b) / 4;
  L.d2 = (b + L.c) / 4;
  L.d3 = (1 + b) / 2;
  L.d4 = (1 - b) / 2;
  L.endpoint = (2 * p.j() + b + L.c) / 4;
  const auto pts = grid(p).sorted();
  std::vector<Rational> neg, pos;
  for (const auto& x : pts) (x < 0 ? neg : pos).push_back(x);
  std::reverse(neg.begin(), neg.end());
  if (neg.empty() || pos.empty()) throw RegimeError("grid does not straddle the origin");
  L.measured_d1 = -neg.front();
  L.measured_d2 = pos.front();
  for (std::size_t i = 1; i < neg.size(); ++i) L.negative_gaps.push_back(neg[i - 1] - neg[i]);
  for (std::size_t i = 1; i < pos.size(); ++i) L.positive_gaps.push_back(pos[i] - pos[i - 1]);
  bool ok = L.measured_d1 == L.d1 && L.measured_d2 == L.d2;
  for (std::size_t i = 0; i < L.negative_gaps.size(); ++i) ok = ok && L.negative_gaps[i] == (i % 2 == 0 ? L.d3 : L.d4);
  for (std::size_t i = 0; i < L.positive_gaps.size(); ++i) ok = ok && L.positive_gaps[i] == (i % 2 == 0 ? L.d4 : L.d3);
  ok = ok && neg.back() == -L.endpoint && pos.back() == L.endpoint;
  L.matches = ok;
  return L;
}

}  // namespace parabi
