#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parabi/errors.hpp"
#include "parabi/families.hpp"
#include "parabi/poly.hpp"
#include "parabi/rational.hpp"

namespace parabi {

/// Parameters of the untruncated complementary Bannai-Ito family I_n and its
/// Geronimus partner, the Bannai-Ito family B_n.
///
/// When truncation_alpha is set, coefficients are the t -> 0 limit along
/// r1 -> r1 - (1-alpha) t, r2 -> r2 - alpha t. This resolves the 0/0 that the
/// para truncation j + g + 1 = 0 produces at n = j; away from a vanishing
/// denominator the limit equals the plain value.
struct GeneralCBIParams {
  Rational rho1;
  Rational rho2;
  Rational r1;
  Rational r2;
  std::optional<Rational> truncation_alpha;

  Rational g() const { return rho1 + rho2 - r1 - r2; }
};

namespace detail {

/// num(t)/den(t) as t -> 0, with num and den polynomials in t.
inline Rational limit_at_zero(const Poly& num, const Poly& den, int n) {
  if (den.is_zero()) throw SingularParameterError("general CBI denominator vanishes identically at n=" + std::to_string(n));
  if (num.is_zero()) return 0;
  const int on = num.lowest_order();
  const int od = den.lowest_order();
  if (on > od) return 0;
  if (on < od) throw SingularParameterError("general CBI coefficient diverges at n=" + std::to_string(n));
  return num.coeff(on) / den.coeff(od);
}

}  // namespace detail

/// Coefficients (A_n, C_n) of the general CBI recurrence, n >= -1.
inline CoeffPair general_cbi_coeffs(const GeneralCBIParams& p, int n) {
  if (n < -1) throw ArgumentError("general CBI index must be >= -1");
  const Rational al = p.truncation_alpha.value_or(Rational(0));
  const Rational dt = p.truncation_alpha ? Rational(1) : Rational(0);
  // Each factor is c0 + c1 t.
  auto lin = [](const Rational& c0, const Rational& c1) { return Poly({c0, c1}); };
  const Poly den = lin(4 * (n + p.g() + 1), 4 * dt);
  Poly numA, numC;
  if (n % 2 == 0) {
    numA = -(lin(n + 2 * p.rho2 - 2 * p.r2 + 1, 2 * al * dt) *
             lin(n + 2 * p.rho2 - 2 * p.r1 + 1, 2 * (1 - al) * dt));
    numC = lin(n + 2 * p.rho1 - 2 * p.r1 + 1, 2 * (1 - al) * dt) *
           lin(n + 2 * p.rho1 - 2 * p.r2 + 1, 2 * al * dt);
  } else {
    numA = -(lin(Rational(n + 1), 0) * lin(n - 2 * p.r1 - 2 * p.r2 + 1, 2 * dt));
    numC = lin(n + 2 * p.g() + 1, 2 * dt) * lin(n + 2 * p.rho1 + 2 * p.rho2 + 1, 0);
  }
  if (!p.truncation_alpha) {
    const Rational d = den.coeff(0);
    if (d == 0) throw SingularParameterError("general CBI denominator n+g+1 vanishes at n=" + std::to_string(n));
    return {numA.coeff(0) / d, numC.coeff(0) / d};
  }
  return {detail::limit_at_zero(numA, den, n), detail::limit_at_zero(numC, den, n)};
}

/// Monic I_0..I_{up_to} from x I_n = I_{n+1} + (rho1 - A_n - C_n) I_n + A_{n-1} C_n I_{n-1}.
inline std::vector<Poly> general_cbi_polys(const GeneralCBIParams& p, int up_to) {
  if (up_to < 0) throw ArgumentError("negative degree");
  std::vector<Poly> out{Poly::constant(1)};
  std::optional<CoeffPair> prev;
  for (int n = 0; n < up_to; ++n) {
    CoeffPair cur = general_cbi_coeffs(p, n);
    Poly next = Poly::linear_factor(p.rho1 - cur.A - cur.C) * out.back();
    if (n > 0) next -= (prev->A * cur.C) * out[static_cast<std::size_t>(n - 1)];
    out.push_back(std::move(next));
    prev = std::move(cur);
  }
  return out;
}

/// B_n = I_n - A_{n-1} I_{n-1} (Geronimus transform with parameter rho1).
inline std::vector<Poly> general_bi_polys(const GeneralCBIParams& p, int up_to) {
  const auto I = general_cbi_polys(p, up_to);
  std::vector<Poly> out{I.front()};
  for (int n = 1; n <= up_to; ++n) {
    const Rational A = general_cbi_coeffs(p, n - 1).A;
    out.push_back(I[static_cast<std::size_t>(n)] - A * I[static_cast<std::size_t>(n - 1)]);
  }
  return out;
}

/// B_n from its own recurrence x B_n = B_{n+1} + (rho1 - A_{n-1} - C_n) B_n + A_{n-1} C_{n-1} B_{n-1}.
inline std::vector<Poly> general_bi_polys_by_recurrence(const GeneralCBIParams& p, int up_to) {
  if (up_to < 0) throw ArgumentError("negative degree");
  std::vector<Poly> out{Poly::constant(1)};
  for (int n = 0; n < up_to; ++n) {
    const CoeffPair cur = general_cbi_coeffs(p, n);
    const CoeffPair before = general_cbi_coeffs(p, n - 1);
    Poly next = Poly::linear_factor(p.rho1 - before.A - cur.C) * out.back();
    if (n > 0) next -= (before.A * before.C) * out[static_cast<std::size_t>(n - 1)];
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace parabi
