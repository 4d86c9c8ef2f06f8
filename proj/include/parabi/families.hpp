#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parabi/errors.hpp"
#include "parabi/params.hpp"
#include "parabi/poly.hpp"
#include "parabi/rational.hpp"

namespace parabi {

struct CoeffPair {
  Rational A;
  Rational C;
  friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
};

namespace detail {

inline Rational guarded_div(const Rational& num, const Rational& den, const char* where) {
  if (den == 0) throw InternalError(std::string("branch denominator vanished in ") + where);
  return num / den;
}

inline bool is_even(int n) { return n % 2 == 0; }

}  // namespace detail

/// Recurrence coefficients (A_n, C_n) of the para-Bannai-Ito family.
///
/// Domain is -1 <= n <= N+1; n = -1 is admitted so that the truncation
/// product A_{-1} C_0 can be formed from the displayed tables.
/// Branches are selected by parity of n and by n == j (A) or n == j+1 (C);
/// the (n-j) and (n-j-1) denominators only occur in branches where they
/// cannot vanish for the matching j parity.
inline CoeffPair para_coeffs(const ParamSet& p, int n) {
  if (n < -1 || n > p.N() + 1) throw ArgumentError("coefficient index out of range");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& al = p.alpha();
  const int j = p.j();
  const bool even = detail::is_even(n);
  Rational A, C;
  switch (p.family()) {
    case FamilyCase::P0:
      if (even && n != j) {
        A = -(n - j - a) / 4;
        C = (n - j + a) / 4;
      } else if (even) {
        A = (1 - al) * a / 2;
        C = al * a / 2;
      } else {
        A = detail::guarded_div(-Rational(n + 1) * (n - j - b), Rational(4 * (n - j)), "P0 A odd");
        C = detail::guarded_div(Rational(n - 2 * j - 1) * (n - j + b), Rational(4 * (n - j)), "P0 C odd");
      }
      break;
    case FamilyCase::P1:
      if (even && n != j) A = (n - j + a) / 4;
      else if (even) A = al * a / 2;
      else A = detail::guarded_div(Rational(n - 2 * j - 1) * (n - j + b), Rational(4 * (n - j)), "P1 A odd");
      if (even) C = detail::guarded_div(-Rational(n) * (n - j - 1 - b), Rational(4 * (n - j - 1)), "P1 C even");
      else if (n != j + 1) C = -(n - j - 1 - a) / 4;
      else C = (1 - al) * a / 2;
      break;
    case FamilyCase::P2:
      if (even) {
        A = detail::guarded_div(-(n - j - a) * (n - j - b), Rational(4 * (n - j)), "P2 A even");
        C = detail::guarded_div((n - j + a) * (n - j + b), Rational(4 * (n - j)), "P2 C even");
      } else if (n != j) {
        A = -Rational(n + 1) / 4;
        C = Rational(n - 2 * j - 1) / 4;
      } else {
        A = -(1 - al) * (j + 1) / 2;
        C = -al * (j + 1) / 2;
      }
      break;
    case FamilyCase::P3:
      if (even) A = detail::guarded_div((n - j + a) * (n - j + b), Rational(4 * (n - j)), "P3 A even");
      else if (n != j) A = Rational(n - 2 * j - 1) / 4;
      else A = -al * (j + 1) / 2;
      if (even && n != j + 1) C = -Rational(n) / 4;
      else if (even) C = -(1 - al) * (j + 1) / 2;
      else C = detail::guarded_div(-(n - j - 1 - a) * (n - j - 1 - b), Rational(4 * (n - j - 1)), "P3 C odd");
      break;
  }
  return {std::move(A), std::move(C)};
}

/// Which coefficient of a table to address.
enum class CoeffKind { A, C };

/// Tabulated three-term recurrence x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}
/// with b_n = rho1 - A_n - C_n and u_n = A_{n-1} C_n.
class Recurrence {
public:
  Recurrence(Rational rho1, std::vector<Rational> A, std::vector<Rational> C)
      : rho1_(std::move(rho1)), A_(std::move(A)), C_(std::move(C)) {
    if (A_.size() != C_.size() || A_.empty()) throw ArgumentError("malformed recurrence table");
  }

  /// Table for n = -1..N+1 of the para family.
  static Recurrence of(const ParamSet& p) {
    std::vector<Rational> A, C;
    for (int n = -1; n <= p.N() + 1; ++n) {
      auto c = para_coeffs(p, n);
      A.push_back(std::move(c.A));
      C.push_back(std::move(c.C));
    }
    return {p.rho1(), std::move(A), std::move(C)};
  }

  /// Largest index n stored.
  int max_index() const { return static_cast<int>(A_.size()) - 2; }

  const Rational& A(int n) const { return A_.at(slot(n)); }
  const Rational& C(int n) const { return C_.at(slot(n)); }
  const Rational& rho1() const { return rho1_; }

  Rational diag(int n) const { return rho1_ - A(n) - C(n); }
  Rational u(int n) const { return A(n - 1) * C(n); }

  /// Copy with one coefficient shifted by delta (negative-control hook).
  Recurrence perturbed(CoeffKind kind, int n, const Rational& delta) const {
    Recurrence out = *this;
    (kind == CoeffKind::A ? out.A_ : out.C_).at(slot(n)) += delta;
    return out;
  }

private:
  std::size_t slot(int n) const {
    if (n < -1 || n > max_index()) throw ArgumentError("recurrence index out of range");
    return static_cast<std::size_t>(n + 1);
  }

  Rational rho1_;
  std::vector<Rational> A_;  // index n+1
  std::vector<Rational> C_;
};

/// Monic P_0..P_{up_to} from the recurrence. Requires up_to <= max_index().
inline std::vector<Poly> generate_polys(const Recurrence& rec, int up_to) {
  if (up_to < 0 || up_to > rec.max_index()) throw ArgumentError("degree beyond truncation");
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(up_to) + 1);
  out.push_back(Poly::constant(1));
  for (int n = 0; n < up_to; ++n) {
    Poly next = Poly::linear_factor(rec.diag(n)) * out.back();
    if (n > 0) next -= rec.u(n) * out[static_cast<std::size_t>(n - 1)];
    out.push_back(std::move(next));
  }
  return out;
}

inline std::vector<Poly> generate_polys(const ParamSet& p, int up_to) {
  if (up_to > p.N() + 1) throw ArgumentError("degree beyond truncation N+1");
  return generate_polys(Recurrence::of(p), up_to);
}

inline std::vector<Poly> generate_polys(const ParamSet& p) { return generate_polys(p, p.N() + 1); }

struct JacobiMatrix {
  std::vector<Rational> diag;     ///< b_0..b_N
  std::vector<Rational> offdiag;  ///< u_1..u_N (products, not square roots)
};

inline JacobiMatrix jacobi(const Recurrence& rec, int N) {
  JacobiMatrix out;
  for (int n = 0; n <= N; ++n) out.diag.push_back(rec.diag(n));
  for (int n = 1; n <= N; ++n) out.offdiag.push_back(rec.u(n));
  return out;
}

inline JacobiMatrix jacobi(const ParamSet& p) { return jacobi(Recurrence::of(p), p.N()); }

struct PositivityVerdict {
  bool admissible = false;
  std::optional<int> first_violation;  ///< smallest n with u_n <= 0
  bool box_conditions = false;         ///< sufficient parameter box holds
};

/// Sufficient parameter boxes stated for each case (alpha in [0,1] is a ParamSet invariant).
inline bool positivity_box(const ParamSet& p) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const int j = p.j();
  auto abs = [](const Rational& r) { return r.sign() < 0 ? Rational(-r) : r; };
  switch (p.family()) {
    case FamilyCase::P0:
      return (a <= -j - 1 && abs(b) <= 1) || (b >= j && abs(a + 1) <= 1);
    case FamilyCase::P1:
      return abs(a) >= j + 1 && abs(b) <= 1;
    case FamilyCase::P2:
      return (a <= -j && abs(b) <= 1) || (abs(a) <= 1 && b <= -j);
    case FamilyCase::P3:
      return (abs(a) >= j && abs(b) <= 1) || (abs(a) <= 1 && abs(b) >= j);
  }
  return false;
}

inline PositivityVerdict check_positivity(const ParamSet& p) {
  PositivityVerdict v;
  const Recurrence rec = Recurrence::of(p);
  for (int n = 1; n <= p.N(); ++n) {
    if (rec.u(n) <= 0) {
      v.first_violation = n;
      break;
    }
  }
  v.admissible = !v.first_violation.has_value();
  v.box_conditions = positivity_box(p);
  return v;
}

}  // namespace parabi
