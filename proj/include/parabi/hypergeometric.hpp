#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "parabi/errors.hpp"
#include "parabi/families.hpp"
#include "parabi/params.hpp"
#include "parabi/rational.hpp"

namespace parabi {

/// A quantity c * eps^order, used to carry Gamma-function zeros and poles
/// through the branch-split summands. Pochhammer symbols whose truncation
/// limit produces 0 (a factor hits zero) or infinity (a negative-length
/// symbol <1>_{-1} = Gamma(0)) keep the leading coefficient and the order;
/// the orders cancel between normalizer and summand.
class Regularized {
public:
  Regularized() = default;
  Regularized(Rational c, int order = 0) : coeff_(std::move(c)), order_(coeff_ == 0 ? 0 : order) {}  // NOLINT

  const Rational& coeff() const { return coeff_; }
  int order() const { return order_; }
  bool is_zero() const { return coeff_ == 0; }

  /// Value of the eps -> 0 limit. Throws if the quantity still diverges.
  Rational value() const {
    if (is_zero() || order_ > 0) return 0;
    if (order_ < 0) throw SingularParameterError("summand diverges (uncancelled Pochhammer pole)");
    return coeff_;
  }

  friend Regularized operator*(const Regularized& x, const Regularized& y) {
    return {x.coeff_ * y.coeff_, x.order_ + y.order_};
  }
  friend Regularized operator/(const Regularized& x, const Regularized& y) {
    if (y.is_zero()) throw InternalError("division by an exact zero");
    return {x.coeff_ / y.coeff_, x.order_ - y.order_};
  }
  /// Leading-order sum: terms of higher order in eps are dropped.
  friend Regularized operator+(const Regularized& x, const Regularized& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.order_ < y.order_) return x;
    if (y.order_ < x.order_) return y;
    return {x.coeff_ + y.coeff_, x.order_};
  }

private:
  Rational coeff_ = 0;
  int order_ = 0;
};

/// Gamma(base + length) / Gamma(base), any integer length.
inline Regularized rpoch(const Rational& base, int length) {
  Regularized acc(1);
  if (length >= 0) {
    for (int i = 0; i < length; ++i) {
      Rational f = base + i;
      acc = acc * (f == 0 ? Regularized(1, 1) : Regularized(std::move(f)));
    }
  } else {
    for (int i = 1; i <= -length; ++i) {
      Rational f = base - i;
      acc = acc / (f == 0 ? Regularized(1, 1) : Regularized(std::move(f)));
    }
  }
  return acc;
}

enum class SummandBranch { Plain, Deformed };

/// Branch selected for summand index k at a given degree parity.
/// P0: even degree plain iff k <= j/2, odd degree plain iff k < j/2.
/// P2: even degree plain iff k <= (j-1)/2, odd degree plain iff k < (j-1)/2.
inline SummandBranch summand_branch(FamilyCase partner, bool odd_degree, int j, int k) {
  const int boundary = partner == FamilyCase::P0 ? j / 2 : (j - 1) / 2;
  const bool plain = odd_degree ? k < boundary : k <= boundary;
  return plain ? SummandBranch::Plain : SummandBranch::Deformed;
}

/// Branch selected for the normalizer at half-degree n (same boundaries as the summands).
inline SummandBranch normalizer_branch(FamilyCase partner, bool odd_degree, int j, int n) {
  return summand_branch(partner, odd_degree, j, n);
}

/// Summands of the explicit expression of partner family degree 2n or 2n+1 at x.
struct SummandTable {
  FamilyCase partner = FamilyCase::P0;
  bool odd_degree = false;
  int n = 0;  ///< half-degree
  std::vector<Regularized> entries;  ///< k = 0..n
};

struct Normalizer {
  Regularized kappa;  ///< kappa^(1) for even degree, kappa^(2) for odd degree
};

namespace detail {

inline void require_nondegenerate(const Rational& divisor, const char* which) {
  if (divisor == 0)
    throw DegenerateDeformationError(std::string("deformed summand branch divides by ") + which + " = 0");
}

}  // namespace detail

/// Summand table for degree m of the N = 2j partner family (P0 or P2) of p, 0 <= m <= 2j+1.
inline SummandTable summand_table(const ParamSet& p, int m, const Rational& x) {
  const FamilyCase partner = even_partner(p.family());
  const int j = p.j();
  if (m < 0 || m > 2 * j + 1) throw ArgumentError("degree out of range for explicit expression");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& al = p.alpha();
  SummandTable t;
  t.partner = partner;
  t.odd_degree = m % 2 == 1;
  t.n = m / 2;
  const int n = t.n;
  for (int k = 0; k <= n; ++k) {
    const SummandBranch br = summand_branch(partner, t.odd_degree, j, k);
    Regularized term;
    if (partner == FamilyCase::P0 && !t.odd_degree) {
      const int J = j / 2;
      const Rational r = (b - j - 1 - a) / 4;
      const Rational d1 = (1 + b - j) / 2, d2 = -(j + a) / 2, d3 = Rational(-j, 2);
      const Regularized common = rpoch(Rational(-n), k) * rpoch(r + x, k) * rpoch(r - x, k) /
                                 (rpoch(1, k) * rpoch(d1, k) * rpoch(d2, k));
      if (br == SummandBranch::Plain) {
        term = common * rpoch(Rational(n - j), k) / rpoch(d3, k);
      } else {
        detail::require_nondegenerate(1 - al, "1 - alpha");
        term = Regularized(1 / (1 - al)) * common * rpoch(Rational(n - j), j - n) * rpoch(1, n + k - j - 1) /
               (rpoch(d3, J) * rpoch(1, k - J - 1));
      }
    } else if (partner == FamilyCase::P0) {
      const int J = j / 2;
      const Rational r = (b - j + 3 - a) / 4;
      const Rational d1 = (3 + b - j) / 2, d2 = (2 - j - a) / 2, d3 = Rational(2 - j, 2);
      const Regularized common = rpoch(Rational(-n), k) * rpoch(r + x, k) * rpoch(r - x, k) /
                                 (rpoch(1, k) * rpoch(d1, k) * rpoch(d2, k));
      if (br == SummandBranch::Plain) {
        term = common * rpoch(Rational(n + 1 - j), k) / rpoch(d3, k);
      } else {
        detail::require_nondegenerate(1 - al, "1 - alpha");
        term = Regularized(1 / (1 - al)) * common * rpoch(Rational(n + 1 - j), j - n - 1) * rpoch(1, n + k - j) /
               (rpoch(d3, J - 1) * rpoch(1, k - J));
      }
    } else if (!t.odd_degree) {
      const int K = (j - 1) / 2;
      const Rational r = -(b + j + 1 + a) / 4;
      const Rational d1 = -(b + j) / 2, d2 = -(j + a) / 2, d3 = Rational(1 - j, 2);
      const Regularized common = rpoch(Rational(-n), k) * rpoch(r + x, k) * rpoch(r - x, k) /
                                 (rpoch(1, k) * rpoch(d1, k) * rpoch(d2, k));
      if (br == SummandBranch::Plain) {
        term = common * rpoch(Rational(n - j), k) / rpoch(d3, k);
      } else {
        detail::require_nondegenerate(al, "alpha");
        term = Regularized(1 / al) * common * rpoch(Rational(n - j), j - n) * rpoch(1, n + k - j - 1) /
               (rpoch(d3, K) * rpoch(1, k - (j + 1) / 2));
      }
    } else {
      const int K = (j - 1) / 2;
      const Rational r = -(b + j - 3 + a) / 4;
      const Rational d2 = (2 - j - a) / 2, d3 = (2 - j - b) / 2, dq = Rational(3 - j, 2);
      const Regularized common = rpoch(Rational(-n), k) * rpoch(r + x, k) * rpoch(r - x, k) /
                                 (rpoch(1, k) * rpoch(d2, k) * rpoch(d3, k));
      if (br == SummandBranch::Plain) {
        term = common * rpoch(Rational(n + 1 - j), k) / rpoch(dq, k);
      } else {
        detail::require_nondegenerate(al, "alpha");
        term = Regularized(1 / al) * common * rpoch(Rational(n + 1 - j), j - n - 1) * rpoch(1, n + k - j) /
               (rpoch(dq, (j - 3) / 2) * rpoch(1, k - K));
      }
    }
    t.entries.push_back(std::move(term));
  }
  return t;
}

/// Monic normalizer for degree m of the partner family.
inline Normalizer normalizer(const ParamSet& p, int m) {
  const FamilyCase partner = even_partner(p.family());
  const int j = p.j();
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& al = p.alpha();
  const int n = m / 2;
  const bool odd = m % 2 == 1;
  const bool plain = normalizer_branch(partner, odd, j, n) == SummandBranch::Plain;
  Normalizer out;
  if (partner == FamilyCase::P0 && !odd) {
    const int J = j / 2;
    const Rational d1 = (1 + b - j) / 2, d2 = -(j + a) / 2, d3 = Rational(-j, 2);
    if (plain) out.kappa = rpoch(d1, n) * rpoch(d2, n) * rpoch(d3, n) / rpoch(Rational(n - j), n);
    else
      out.kappa = Regularized(1 - al) * rpoch(d1, n) * rpoch(d2, n) * rpoch(d3, J) * rpoch(1, n - J - 1) /
                  (rpoch(Rational(n - j), j - n) * rpoch(1, 2 * n - j - 1));
  } else if (partner == FamilyCase::P0) {
    const int J = j / 2;
    const Rational d1 = (3 + b - j) / 2, d2 = (2 - j - a) / 2, d3 = Rational(2 - j, 2);
    if (plain) out.kappa = rpoch(d1, n) * rpoch(d2, n) * rpoch(d3, n) / rpoch(Rational(n + 1 - j), n);
    else
      out.kappa = Regularized(1 - al) * rpoch(d1, n) * rpoch(d2, n) * rpoch(d3, J - 1) * rpoch(1, n - J) /
                  (rpoch(Rational(n + 1 - j), j - n - 1) * rpoch(1, 2 * n - j));
  } else if (!odd) {
    const int K = (j - 1) / 2;
    const Rational d1 = -(b + j) / 2, d2 = -(j + a) / 2, d3 = Rational(1 - j, 2);
    if (plain) out.kappa = rpoch(d1, n) * rpoch(d2, n) * rpoch(d3, n) / rpoch(Rational(n - j), n);
    else
      out.kappa = Regularized(al) * rpoch(d1, n) * rpoch(d2, n) * rpoch(d3, K) * rpoch(1, n - (j + 1) / 2) /
                  (rpoch(Rational(n - j), j - n) * rpoch(1, 2 * n - j - 1));
  } else {
    const int K = (j - 1) / 2;
    const Rational d1 = (2 - j - a) / 2, d2 = (2 - j - b) / 2, d3 = Rational(3 - j, 2);
    if (plain) out.kappa = rpoch(d1, n) * rpoch(d2, n) * rpoch(d3, n) / rpoch(Rational(n + 1 - j), n);
    else
      out.kappa = Regularized(al) * rpoch(d1, n) * rpoch(d2, n) * rpoch(d3, (j - 3) / 2) * rpoch(1, n - K) /
                  (rpoch(Rational(n + 1 - j), j - n - 1) * rpoch(1, 2 * n - j));
  }
  return out;
}

namespace detail {

/// Explicit value of the N = 2j partner family at degree m <= 2j+1.
inline Rational partner_explicit_eval(const ParamSet& p, int m, const Rational& x) {
  if (m == 0) return 1;
  const SummandTable t = summand_table(p, m, x);
  Regularized sum;
  for (const auto& e : t.entries) sum = sum + e;
  const Rational value = (normalizer(p, m).kappa * sum).value();
  if (!t.odd_degree) return value;
  return (x - p.with_family(even_partner(p.family())).odd_root()) * value;
}

}  // namespace detail

/// P_n(x) from the explicit hypergeometric-type sums, 0 <= n <= N.
/// Odd-N families are the Geronimus combination P_n - C_n P_{n-1} of the N = 2j partner.
inline Rational explicit_eval(const ParamSet& p, int n, const Rational& x) {
  if (n < 0 || n > p.N()) throw ArgumentError("degree out of range for explicit expression");
  if (!has_odd_size(p.family())) return detail::partner_explicit_eval(p, n, x);
  const Rational head = detail::partner_explicit_eval(p, n, x);
  if (n == 0) return head;
  return head - para_coeffs(p, n).C * detail::partner_explicit_eval(p, n - 1, x);
}

/// Terminating sum_{k=0}^{terms} <n1,n2,n3,n4>_k / (<1>_k <d1,d2,d3>_k).
/// Stops early once a numerator Pochhammer vanishes.
inline Rational hypergeo_4F3(const std::array<Rational, 4>& num, const std::array<Rational, 3>& den, int terms) {
  if (terms < 0) throw ArgumentError("negative term count");
  Rational sum = 0;
  Rational term = 1;
  for (int k = 0; k <= terms; ++k) {
    if (k > 0) {
      Rational up = 1, down = k;
      for (const auto& v : num) up *= v + (k - 1);
      if (up == 0) break;
      for (const auto& v : den) {
        Rational f = v + (k - 1);
        if (f == 0) throw SingularParameterError("4F3 denominator Pochhammer vanishes before termination");
        down *= f;
      }
      term = term * up / down;
    }
    sum += term;
  }
  return sum;
}

}  // namespace parabi
