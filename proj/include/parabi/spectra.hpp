#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parabi/errors.hpp"
#include "parabi/families.hpp"
#include "parabi/params.hpp"
#include "parabi/poly.hpp"
#include "parabi/rational.hpp"

namespace parabi {

/// Grid points in index order x_0, x_1, ..., x_N (interlaced, not increasing).
class Grid {
public:
  Grid() = default;
  explicit Grid(std::vector<Rational> pts) : points_(std::move(pts)) {
    std::vector<Rational> s = points_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw DegenerateSpectrumError("grid has a repeated point");
  }

  const std::vector<Rational>& points() const& { return points_; }
  std::vector<Rational> points() && { return std::move(points_); }
  std::size_t size() const { return points_.size(); }
  const Rational& operator[](std::size_t s) const { return points_[s]; }

  /// Sublists x_{4s+r}, r = 0..3.
  std::array<std::vector<Rational>, 4> quadri_lattice() const {
    std::array<std::vector<Rational>, 4> q;
    for (std::size_t s = 0; s < points_.size(); ++s) q[s % 4].push_back(points_[s]);
    return q;
  }

  std::vector<Rational> sorted() const {
    std::vector<Rational> s = points_;
    std::sort(s.begin(), s.end());
    return s;
  }

private:
  std::vector<Rational> points_;
};

inline Grid grid(const ParamSet& p) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const int j = p.j();
  const Rational q = Rational(1, 4);
  std::vector<Rational> pts(static_cast<std::size_t>(p.N() + 1));
  if (p.family() == FamilyCase::P0 || p.family() == FamilyCase::P1) {
    for (int s = 0; s <= j; ++s) {
      const int sg = s % 2 == 0 ? 1 : -1;
      pts[2 * s] = -sg * (2 * s - j - b + a) / 4 - q;
      if (2 * s + 1 <= p.N()) pts[2 * s + 1] = -sg * (2 * s - j - b - a) / 4 - q;
    }
  } else {
    for (int s = 0; 4 * s <= p.N(); ++s) {
      pts[4 * s] = -(4 * s - j + a - b) / 4 - q;
      if (4 * s + 1 <= p.N()) pts[4 * s + 1] = (4 * s - j - a - b) / 4 - q;
      if (4 * s + 2 <= p.N()) pts[4 * s + 2] = (4 * s + 2 - j + a - b) / 4 - q;
      if (4 * s + 3 <= p.N()) pts[4 * s + 3] = -(4 * s + 2 - j - a - b) / 4 - q;
    }
  }
  return Grid(std::move(pts));
}

/// Product form of P_{2j+1} for P0.
inline Poly char_poly_product(const ParamSet& p) {
  if (p.family() != FamilyCase::P0) throw ArgumentError("product form is available for P0 only");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const int j = p.j();
  Poly r = Poly::constant(1);
  for (int k = 0; k <= j; ++k) {
    const int sg = k % 2 == 0 ? 1 : -1;
    r = r * Poly::linear_factor(-(sg * (2 * k - j - b + a) / 4) - Rational(1, 4));
    if (k < j) r = r * Poly::linear_factor(-(sg * (2 * k - j - b - a) / 4) - Rational(1, 4));
  }
  return r;
}

/// u_1 ... u_n for n = 0..N.
inline std::vector<Rational> u_products(const Recurrence& rec, int N) {
  std::vector<Rational> h2{Rational(1)};
  for (int n = 1; n <= N; ++n) h2.push_back(h2.back() * rec.u(n));
  return h2;
}

/// w_s = u_1...u_N / (P_N(x_s) P'_{N+1}(x_s)).
inline std::vector<Rational> weights_direct(const ParamSet& p, const Grid& g, const std::vector<Poly>& polys,
                                            const Rational& uprod) {
  const int N = p.N();
  const Poly d = polys.at(static_cast<std::size_t>(N + 1)).derivative();
  std::vector<Rational> w;
  for (const auto& x : g.points()) {
    const Rational den = polys[static_cast<std::size_t>(N)](x) * d(x);
    if (den == 0) throw InternalError("weight denominator vanishes at x=" + to_string(x));
    w.push_back(uprod / den);
  }
  return w;
}

inline std::vector<Rational> weights_direct(const ParamSet& p) {
  const auto rec = Recurrence::of(p);
  return weights_direct(p, grid(p), generate_polys(rec, p.N() + 1), u_products(rec, p.N()).back());
}

/// factor * sqrt(radicand). P0/P1 have radicand 1.
struct ClosedWeight {
  Rational factor;
  Rational radicand = 1;

  Rational squared() const { return factor * factor * radicand; }
  int sign() const { return parabi::sign(factor); }
};

namespace detail {

inline Rational checked_poch(const Rational& x, int k) {
  const Rational v = poch(x, k);
  if (v == 0) throw SingularParameterError("vanishing Pochhammer symbol in a weight denominator");
  return v;
}

}  // namespace detail

/// Closed-form h_m^2 (squares of the displayed norms; tails 1, 2 alpha, 4 alpha(1-alpha)).
inline Rational h2_closed(const ParamSet& p, int m) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& al = p.alpha();
  const int j = p.j();
  const int n = m / 2;
  const bool odd = m % 2 == 1;
  const Rational hj(j, 2);
  Rational v;
  Rational t;
  switch (p.family()) {
    case FamilyCase::P0:
      if (!odd) {
        v = poch(-j, n) * poch(1, n) * poch((1 + b - j) / 2, n) * poch((1 - b - j) / 2, n) *
            poch(-(j + a) / 2, n) * poch((2 + a - j) / 2, n) / (pow2(4 * n) * poch(Rational(1 - j, 2), n) * poch(Rational(1 - j, 2), n));
        t = n < hj ? Rational(1) : (n == hj ? 2 * al : 4 * al * (1 - al));
      } else {
        v = -poch(-j, n + 1) * poch(1, n) * poch((1 + b - j) / 2, n + 1) * poch((1 - b - j) / 2, n) *
            poch(-(j + a) / 2, n + 1) * poch((2 + a - j) / 2, n) /
            (pow2(4 * n + 2) * poch(Rational(1 - j, 2), n) * poch(Rational(1 - j, 2), n + 1));
        t = n < hj ? Rational(1) : 4 * al * (1 - al);
      }
      break;
    case FamilyCase::P1:
      if (!odd) {
        v = poch(-j, n) * poch(1, n) * poch((1 - b - j) / 2, n) * poch((1 + b - j) / 2, n) *
            poch(-(j + a) / 2, n) * poch(-(j - a) / 2, n) / (pow2(4 * n) * poch(Rational(1 - j, 2), n) * poch(Rational(1 - j, 2), n));
        t = n <= hj ? Rational(1) : 4 * al * (1 - al);
      } else {
        v = -poch(-j, n) * poch(1, n) * poch((1 - b - j) / 2, n) * poch((1 + b - j) / 2, n) *
            poch(-(j + a) / 2, n + 1) * poch(-(j - a) / 2, n + 1) /
            (pow2(4 * n + 2) * poch(Rational(1 - j, 2), n) * poch(Rational(1 - j, 2), n));
        t = n < hj ? Rational(1) : 4 * al * (1 - al);
      }
      break;
    case FamilyCase::P2: {
      const Rational hb(j - 1, 2);
      if (!odd) {
        v = poch(-j, n) * poch(1, n) * poch((2 + a - j) / 2, n) * poch(-(j + a) / 2, n) * poch((2 + b - j) / 2, n) *
            poch(-(j + b) / 2, n) / (pow2(4 * n) * poch(Rational(2 - j, 2), n) * poch(Rational(-j, 2), n));
        t = n <= hb ? Rational(1) : 4 * al * (1 - al);
      } else {
        v = -poch(-j, n + 1) * poch(1, n) * poch((2 + a - j) / 2, n) * poch(-(j + a) / 2, n + 1) *
            poch((2 + b - j) / 2, n) * poch(-(j + b) / 2, n + 1) /
            (pow2(4 * n + 2) * poch(Rational(2 - j, 2), n) * poch(Rational(-j, 2), n + 1));
        t = n < hb ? Rational(1) : (n == hb ? 2 * al : 4 * al * (1 - al));
      }
      break;
    }
    case FamilyCase::P3: {
      const Rational hb(j + 1, 2);
      if (!odd) {
        v = poch(-j, n) * poch(1, n) * poch(-(j - a) / 2, n) * poch(-(j + a) / 2, n) * poch(-(j - b) / 2, n) *
            poch(-(j + b) / 2, n) / (pow2(4 * n) * poch(Rational(-j, 2), n) * poch(Rational(-j, 2), n));
      } else {
        v = -poch(-j, n) * poch(1, n) * poch(-(j - a) / 2, n + 1) * poch(-(j + a) / 2, n + 1) *
            poch(-(j - b) / 2, n + 1) * poch(-(j + b) / 2, n + 1) /
            (pow2(4 * n + 2) * poch(Rational(-j, 2), n + 1) * poch(Rational(-j, 2), n + 1));
      }
      t = n < hb ? Rational(1) : 4 * al * (1 - al);
      break;
    }
  }
  return v * t;
}

/// Closed-form weights from the Pochhammer displays, in index order.
inline std::vector<ClosedWeight> weights_closed(const ParamSet& p) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& al = p.alpha();
  const int j = p.j();
  const int N = p.N();
  if (al <= 0 || al >= 1) throw ArgumentError("closed-form weights need 0 < alpha < 1");
  using detail::checked_poch;
  std::vector<ClosedWeight> W(static_cast<std::size_t>(N + 1));
  auto put = [&](int idx, Rational f, const Rational& rad) {
    if (idx <= N) W[static_cast<std::size_t>(idx)] = ClosedWeight{std::move(f), rad};
  };
  const Rational one(1);
  if (p.family() == FamilyCase::P0 || p.family() == FamilyCase::P1) {
    const bool p1 = p.family() == FamilyCase::P1;
    const int J = j / 2;
    const Rational h = p1 ? poch(1, j) * poch((1 - b - j) / 2, j) * poch(-(j + a) / 2, j + 1) /
                                (pow2(2 * j + 1) * poch(Rational(1 - j, 2), j))
                          : poch(1, j) * poch((b + 1 - j) / 2, j) * poch(-(j + a) / 2, j) /
                                (pow2(2 * j) * poch(Rational(1 - j, 2), j));
    for (int s = 0; s <= J; ++s) {
      const Rational c = checked_poch(-s, s);
      put(4 * s, 2 * al * h / (c * checked_poch(1, J - s) * checked_poch(-s - a / 2, p1 ? J + 1 : J) *
                               checked_poch(s + (1 + a - b - j) / 2, J) * checked_poch(s + (1 - b - j) / 2, J)), one);
      if (p1 || s < J)
        put(4 * s + 1, -2 * (1 - al) * h /
                           (c * checked_poch(1, p1 ? J - s : J - s - 1) * checked_poch(-s + a / 2, J + 1) *
                            checked_poch(s + (1 - a - b - j) / 2, J) * checked_poch(s + (1 - b - j) / 2, J)), one);
      if (s < J) {
        const int e = p1 ? J + 1 : J;
        put(4 * s + 2, -2 * al * h / (c * checked_poch(1, J - s - 1) * checked_poch(-s - a / 2, J) *
                                      checked_poch(s + (1 + a - b - j) / 2, J + 1) * checked_poch(s + (1 - b - j) / 2, e)), one);
        put(4 * s + 3, 2 * (1 - al) * h / (c * checked_poch(1, J - s - 1) * checked_poch(-s + a / 2, J) *
                                           checked_poch(s + (1 - a - b - j) / 2, e) * checked_poch(s + (1 - b - j) / 2, J + 1)), one);
      }
    }
    return W;
  }
  const bool p3 = p.family() == FamilyCase::P3;
  const int J1 = (j - 1) / 2;
  const int Jp = (j + 1) / 2;
  const Rational rad = h2_closed(p.with_alpha(Rational(1, 2)), N);
  for (int s = 0; s <= J1; ++s) {
    const Rational c = checked_poch(-s, s) * checked_poch(1, J1 - s);
    put(4 * s, 2 * al / (c * checked_poch(-s + (1 - a) / 2, p3 ? Jp : J1) * checked_poch(s + (1 + a - b - j) / 2, Jp) *
                         checked_poch(s - (b + j) / 2, Jp)), rad);
    put(4 * s + 1, 2 * (1 - al) / (c * checked_poch(-s + (1 + a) / 2, Jp) * checked_poch(s + (1 - a - b - j) / 2, p3 ? Jp : J1) *
                                   checked_poch(s - (b + j) / 2, Jp)), rad);
    put(4 * s + 2, -2 * al / (c * checked_poch(-s - (1 + a) / 2, Jp) * checked_poch(s + (1 + a - b - j) / 2, Jp) *
                              checked_poch(s + (2 - b - j) / 2, p3 ? Jp : J1)), rad);
    if (p3)
      put(4 * s + 3, -2 * (1 - al) / (c * checked_poch(-s - (1 - a) / 2, Jp) * checked_poch(s + (1 - a - b - j) / 2, Jp) *
                                      checked_poch(s + (2 - b - j) / 2, Jp)), rad);
  }
  if (!p3) {
    const int J3 = (j - 3) / 2;
    for (int s = 0; s <= J3; ++s)
      put(4 * s + 3, -2 * (1 - al) / (checked_poch(-s, s) * checked_poch(1, J3 - s) * checked_poch(-s - (1 - a) / 2, Jp) *
                                      checked_poch(s + (1 - a - b - j) / 2, Jp) * checked_poch(s + (2 - b - j) / 2, Jp)), rad);
  }
  return W;
}

/// True iff closed[s]^2 == direct[s]^2 and the signs agree, for every s.
inline bool closed_matches_direct(const std::vector<ClosedWeight>& closed, const std::vector<Rational>& direct) {
  if (closed.size() != direct.size()) return false;
  for (std::size_t s = 0; s < direct.size(); ++s) {
    if (closed[s].squared() != direct[s] * direct[s]) return false;
    if (closed[s].sign() != sign(direct[s])) return false;
  }
  return true;
}

struct Norms {
  std::vector<Rational> u;   // u_1..u_N
  std::vector<Rational> h2;  // h_0^2..h_N^2
  bool closed_forms_agree = false;
};

inline Norms norms(const ParamSet& p) {
  const auto rec = Recurrence::of(p);
  Norms r;
  for (int n = 1; n <= p.N(); ++n) r.u.push_back(rec.u(n));
  r.h2 = u_products(rec, p.N());
  r.closed_forms_agree = true;
  for (int n = 1; n <= p.N(); ++n)
    if (h2_closed(p, n) != r.h2[static_cast<std::size_t>(n)]) r.closed_forms_agree = false;
  return r;
}

struct OrthogonalityReport {
  /// gram[n][m] = sum_s w_s P_n(x_s) P_m(x_s).
  std::vector<std::vector<Rational>> gram;
  std::vector<Rational> expected_diag;
  std::optional<std::pair<int, int>> first_failure;
  bool holds() const { return !first_failure; }
};

inline OrthogonalityReport verify_orthogonality(const Grid& g, const std::vector<Rational>& w,
                                                const std::vector<Poly>& polys, const std::vector<Rational>& h2, int N) {
  OrthogonalityReport rep;
  rep.expected_diag = h2;
  std::vector<std::vector<Rational>> vals(static_cast<std::size_t>(N + 1));
  for (int n = 0; n <= N; ++n)
    for (const auto& x : g.points()) vals[static_cast<std::size_t>(n)].push_back(polys.at(static_cast<std::size_t>(n))(x));
  rep.gram.assign(static_cast<std::size_t>(N + 1), std::vector<Rational>(static_cast<std::size_t>(N + 1)));
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= N; ++m) {
      Rational sum = 0;
      for (std::size_t s = 0; s < w.size(); ++s)
        sum += w[s] * vals[static_cast<std::size_t>(n)][s] * vals[static_cast<std::size_t>(m)][s];
      const Rational expect = n == m ? h2.at(static_cast<std::size_t>(n)) : Rational(0);
      if (sum != expect && !rep.first_failure) rep.first_failure = std::make_pair(n, m);
      rep.gram[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = std::move(sum);
    }
  }
  return rep;
}

inline OrthogonalityReport verify_orthogonality(const ParamSet& p) {
  const auto rec = Recurrence::of(p);
  const auto polys = generate_polys(rec, p.N() + 1);
  const auto h2 = u_products(rec, p.N());
  return verify_orthogonality(grid(p), weights_direct(p, grid(p), polys, h2.back()), polys, h2, p.N());
}

struct PersymmetryReport {
  bool mirror_coefficients = false;  // A_n = C_{N-n}
  bool mirror_diagonal = false;      // b_n = b_{N-n}
  bool mirror_offdiagonal = false;   // u_n = u_{N+1-n}
  bool squares = false;              // P_N(x_s)^2 = u_1...u_N
  bool alternating_sign = false;     // sign P_N(x_s) = (-1)^s
  bool holds() const { return mirror_coefficients && mirror_diagonal && mirror_offdiagonal && squares && alternating_sign; }
};

/// Mirror conditions and the persymmetric value of P_N on the grid. For even N the sign (-1)^s is (-1)^{N+s}.
inline PersymmetryReport persymmetry_report(const ParamSet& p, const Recurrence& rec, const std::vector<Poly>& polys) {
  if (p.alpha() != Rational(1, 2)) throw ArgumentError("persymmetry check requires alpha = 1/2");
  const int N = p.N();
  PersymmetryReport r;
  r.mirror_coefficients = r.mirror_diagonal = r.mirror_offdiagonal = true;
  for (int n = 0; n <= N; ++n) {
    if (rec.A(n) != rec.C(N - n)) r.mirror_coefficients = false;
    if (rec.diag(n) != rec.diag(N - n)) r.mirror_diagonal = false;
    if (n >= 1 && rec.u(n) != rec.u(N + 1 - n)) r.mirror_offdiagonal = false;
  }
  const Rational uprod = u_products(rec, N).back();
  const Grid g = grid(p);
  r.squares = r.alternating_sign = true;
  for (std::size_t s = 0; s < g.size(); ++s) {
    const Rational v = polys.at(static_cast<std::size_t>(N))(g[s]);
    if (v * v != uprod) r.squares = false;
    if (sign(v) != (s % 2 == 0 ? 1 : -1)) r.alternating_sign = false;
  }
  return r;
}

inline PersymmetryReport persymmetry_report(const ParamSet& p) {
  const auto rec = Recurrence::of(p);
  return persymmetry_report(p, rec, generate_polys(rec, p.N()));
}

inline bool persymmetry_check(const ParamSet& p) { return persymmetry_report(p).holds(); }

/// w_s(alpha) / w_s(1/2); expected 2 alpha for even s and 2(1 - alpha) for odd s.
inline std::vector<Rational> deformation_ratios(const ParamSet& p) {
  const auto w = weights_direct(p);
  const auto w0 = weights_direct(p.with_alpha(Rational(1, 2)));
  std::vector<Rational> r;
  for (std::size_t s = 0; s < w.size(); ++s) r.push_back(w[s] / w0[s]);
  return r;
}

inline bool deformation_factorizes(const ParamSet& p) {
  const auto r = deformation_ratios(p);
  for (std::size_t s = 0; s < r.size(); ++s)
    if (r[s] != (s % 2 == 0 ? 2 * p.alpha() : 2 * (1 - p.alpha()))) return false;
  return true;
}

struct SpectralData {
  ParamSet params;
  Grid grid;
  std::vector<Rational> weights;
  std::vector<Rational> u;
  std::vector<Rational> h2;
  Rational even_sum;
  Rational odd_sum;
};

inline SpectralData spectral_data(const ParamSet& p) {
  const auto rec = Recurrence::of(p);
  const auto polys = generate_polys(rec, p.N() + 1);
  SpectralData d{p, grid(p), {}, {}, u_products(rec, p.N()), 0, 0};
  for (int n = 1; n <= p.N(); ++n) d.u.push_back(rec.u(n));
  d.weights = weights_direct(p, d.grid, polys, d.h2.back());
  for (std::size_t s = 0; s < d.weights.size(); ++s) (s % 2 == 0 ? d.even_sum : d.odd_sum) += d.weights[s];
  return d;
}

}  // namespace parabi
