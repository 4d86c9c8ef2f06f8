#pragma once

#include <string>
#include <string_view>

#include "parabi/rational.hpp"

namespace parabi {

/// The four para-Bannai-Ito families, by parity of N and j.
enum class FamilyCase {
  P0,  ///< N = 2j,   j even
  P1,  ///< N = 2j+1, j even
  P2,  ///< N = 2j,   j odd
  P3,  ///< N = 2j+1, j odd
};

inline bool has_odd_size(FamilyCase c) { return c == FamilyCase::P1 || c == FamilyCase::P3; }
inline bool has_odd_j(FamilyCase c) { return c == FamilyCase::P2 || c == FamilyCase::P3; }

/// The N = 2j family that an N = 2j+1 family is a Geronimus transform of (identity for P0/P2).
inline FamilyCase even_partner(FamilyCase c) {
  switch (c) {
    case FamilyCase::P1: return FamilyCase::P0;
    case FamilyCase::P3: return FamilyCase::P2;
    default: return c;
  }
}

inline std::string to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::P0: return "p0";
    case FamilyCase::P1: return "p1";
    case FamilyCase::P2: return "p2";
    case FamilyCase::P3: return "p3";
  }
  return "?";
}

inline FamilyCase parse_family_case(std::string_view s) {
  if (s == "p0" || s == "P0") return FamilyCase::P0;
  if (s == "p1" || s == "P1") return FamilyCase::P1;
  if (s == "p2" || s == "P2") return FamilyCase::P2;
  if (s == "p3" || s == "P3") return FamilyCase::P3;
  throw ArgumentError("unknown family case '" + std::string(s) + "' (expected p0..p3)");
}

/// Parameters (a, b, alpha, j) of one para-Bannai-Ito family.
class ParamSet {
public:
  ParamSet(FamilyCase c, Rational a, Rational b, Rational alpha, int j)
      : case_(c), a_(std::move(a)), b_(std::move(b)), alpha_(std::move(alpha)), j_(j) {
    if (j_ < 1) throw ArgumentError("j must be >= 1");
    if ((j_ % 2 == 1) != has_odd_j(case_))
      throw ArgumentError("j parity does not match family " + to_string(case_));
    if (alpha_ < 0 || alpha_ > 1) throw ArgumentError("alpha must lie in [0, 1]");
  }

  FamilyCase family() const { return case_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& alpha() const { return alpha_; }
  int j() const { return j_; }
  int N() const { return has_odd_size(case_) ? 2 * j_ + 1 : 2 * j_; }

  /// (b - j - 1 + a)/4, the constant in every diagonal entry.
  Rational rho1() const { return (b_ - j_ - 1 + a_) / 4; }

  /// Root carried by every odd-degree polynomial of the N = 2j partner family.
  Rational odd_root() const {
    if (has_odd_j(case_)) return -(b_ + j_ + 1 + a_) / 4;
    return (b_ - j_ - 1 - a_) / 4;
  }

  ParamSet with_alpha(Rational alpha) const { return {case_, a_, b_, std::move(alpha), j_}; }
  ParamSet with_family(FamilyCase c) const { return {c, a_, b_, alpha_, j_}; }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

private:
  FamilyCase case_;
  Rational a_;
  Rational b_;
  Rational alpha_;
  int j_;
};

}  // namespace parabi
