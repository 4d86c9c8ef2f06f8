#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "parabi/errors.hpp"

namespace parabi {

using Complex = std::complex<double>;

/// q-para-Racah parameters for N = 2j+1. Inexact by nature; used only by the q -> -1 study.
struct QParaRacahParams {
  Complex c;
  Complex d;
  double alpha = 0.5;
  int j = 0;
  Complex q;
};

struct ComplexCoeffPair {
  Complex A;
  Complex C;
};

inline constexpr double kQprSingularTolerance = 1e-12;

namespace detail {

inline Complex checked_quotient(Complex num, Complex den, const char* what, int n) {
  if (std::abs(den) < kQprSingularTolerance)
    throw SingularParameterError(std::string("q-para-Racah denominator ") + what + " vanishes at n=" + std::to_string(n));
  return num / den;
}

}  // namespace detail

/// Recurrence coefficients (A_n^R, C_n^R) with the n = j and n = j+1 special branches.
inline ComplexCoeffPair qpr_coeffs(const QParaRacahParams& p, int n) {
  const Complex c = p.c, d = p.d, q = p.q;
  const int j = p.j;
  auto qp = [&](int k) { return std::pow(q, k); };
  const Complex cd2 = 2.0 * c * d;
  ComplexCoeffPair out;
  if (n != j) {
    out.A = detail::checked_quotient((1.0 - c * d * qp(n)) * (d - c * qp(n - j)) * (1.0 - qp(n - 2 * j - 1)),
                                     cd2 * (1.0 - qp(2 * n - 2 * j - 1)) * (1.0 + qp(n - j)), "A", n);
  } else {
    out.A = detail::checked_quotient(p.alpha * (1.0 - c * d * qp(j)) * (d - c) * (1.0 - qp(-j - 1)),
                                     cd2 * (1.0 - 1.0 / q), "A", n);
  }
  if (n != j + 1) {
    out.C = detail::checked_quotient((1.0 - qp(n)) * (c - d * qp(n - j - 1)) * (c * d - qp(n - 2 * j - 1)),
                                     cd2 * (1.0 + qp(n - j - 1)) * (1.0 - qp(2 * n - 2 * j - 1)), "C", n);
  } else {
    out.C = detail::checked_quotient((1.0 - p.alpha) * (1.0 - qp(j + 1)) * (c - d) * (c * d - qp(-j)),
                                     cd2 * (1.0 - q), "C", n);
  }
  return out;
}

}  // namespace parabi
