#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "parabi/dunkl.hpp"
#include "parabi/families.hpp"
#include "parabi/hypergeometric.hpp"
#include "parabi/limits.hpp"
#include "parabi/spectra.hpp"

namespace parabi {

struct Corruption {
  CoeffKind kind = CoeffKind::A;
  int n = 0;
  Rational delta = Rational(1, 1000);
};

struct Section {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Section> sections;
  bool all_passed() const {
    for (const auto& s : sections)
      if (!s.passed) return false;
    return true;
  }
  const Section* first_failure() const {
    for (const auto& s : sections)
      if (!s.passed) return &s;
    return nullptr;
  }
};

/// count deterministic rationals with small numerators and denominators.
inline std::vector<Rational> random_rationals(int count, unsigned seed = 20261014u) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 19);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) out.emplace_back(make_rational(num(gen), den(gen)));
  return out;
}

/// Computed data that every section reads; a corruption perturbs the recurrence before anything is derived.
struct VerifyInputs {
  ParamSet params;
  Recurrence rec;
  std::vector<Poly> polys;  // P_0..P_{N+1}

  static VerifyInputs make(const ParamSet& p, const std::optional<Corruption>& corrupt = std::nullopt) {
    Recurrence rec = Recurrence::of(p);
    if (corrupt) rec = rec.perturbed(corrupt->kind, corrupt->n, corrupt->delta);
    auto polys = generate_polys(rec, p.N() + 1);
    return VerifyInputs{p, std::move(rec), std::move(polys)};
  }
};

namespace checks {

inline Section explicit_matches_recurrence(const VerifyInputs& in) {
  Section s{"recurrence == explicit", true, ""};
  const int N = in.params.N();
  const auto xs = random_rationals(2 * N + 5);
  for (int n = 0; n <= N && s.passed; ++n)
    for (const auto& x : xs)
      if (explicit_eval(in.params, n, x) != in.polys[static_cast<std::size_t>(n)](x)) {
        s.passed = false;
        s.detail = "n=" + std::to_string(n) + " x=" + to_string(x);
        break;
      }
  return s;
}

inline Section spectrum_is_grid(const VerifyInputs& in) {
  Section s{"spectrum = grid", true, ""};
  const Poly& top = in.polys.back();
  const Grid g = grid(in.params);
  for (const auto& x : g.points())
    if (top(x) != 0) {
      s.passed = false;
      s.detail = "P_{N+1}(" + to_string(x) + ") != 0";
      break;
    }
  return s;
}

inline Section product_form(const VerifyInputs& in) {
  Section s{"product form of P_{2j+1}", char_poly_product(in.params) == in.polys.back(), ""};
  if (!s.passed) s.detail = "expanded product differs from the recurrence";
  return s;
}

inline Section orthogonality(const VerifyInputs& in) {
  Section s{"orthogonality", true, ""};
  const int N = in.params.N();
  const auto h2 = u_products(in.rec, N);
  const Grid g = grid(in.params);
  try {
    const auto w = weights_direct(in.params, g, in.polys, h2.back());
    const auto rep = verify_orthogonality(g, w, in.polys, h2, N);
    if (!rep.holds()) {
      s.passed = false;
      s.detail = "pair (" + std::to_string(rep.first_failure->first) + "," + std::to_string(rep.first_failure->second) + ")";
    }
  } catch (const InternalError& e) {
    s.passed = false;
    s.detail = e.what();
  }
  return s;
}

inline Section weight_sums(const VerifyInputs& in) {
  Section s{"weight sums", true, ""};
  const auto h2 = u_products(in.rec, in.params.N());
  try {
    const auto w = weights_direct(in.params, grid(in.params), in.polys, h2.back());
    Rational even = 0, odd = 0;
    bool positive = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      (i % 2 == 0 ? even : odd) += w[i];
      positive = positive && w[i] > 0;
    }
    s.passed = positive && even == in.params.alpha() && odd == 1 - in.params.alpha();
    s.detail = "even_sum=" + to_string(even) + ", odd_sum=" + to_string(odd) + (positive ? "" : ", non-positive weight");
  } catch (const InternalError& e) {
    s.passed = false;
    s.detail = e.what();
  }
  return s;
}

inline Section persymmetry(const VerifyInputs& in) {
  const auto r = persymmetry_report(in.params, in.rec, in.polys);
  Section s{"persymmetry", r.holds(), ""};
  if (!r.mirror_coefficients) s.detail = "A_n != C_{N-n}";
  else if (!r.mirror_diagonal) s.detail = "b_n != b_{N-n}";
  else if (!r.mirror_offdiagonal) s.detail = "u_n != u_{N+1-n}";
  else if (!r.squares) s.detail = "P_N(x_s)^2 != u_1...u_N";
  else if (!r.alternating_sign) s.detail = "sign of P_N(x_s) does not alternate";
  return s;
}

inline Section bispectrality(const VerifyInputs& in, const Rational& beta) {
  Section s{"Dunkl bispectrality", true, ""};
  std::vector<Rational> betas{0};
  if (!has_odd_size(in.params.family()) && beta != 0) betas.push_back(beta);
  for (const auto& bt : betas) {
    const auto rep = verify_bispectrality(in.params, bt, 2, in.polys);
    for (const auto& row : rep.rows)
      if (!row.holds) {
        s.passed = false;
        s.detail = "n=" + std::to_string(row.n) + " beta=" + to_string(bt);
        return s;
      }
  }
  return s;
}

inline Section geronimus(const VerifyInputs& in) {
  Section s{"Geronimus", true, ""};
  const ParamSet partner = in.params.with_family(even_partner(in.params.family()));
  const auto Q = generate_polys(partner, partner.N() + 1);
  for (int n = 1; n <= in.params.N(); ++n) {
    const Poly rhs = Q[static_cast<std::size_t>(n)] - in.rec.C(n) * Q[static_cast<std::size_t>(n - 1)];
    if (rhs != in.polys[static_cast<std::size_t>(n)]) {
      s.passed = false;
      s.detail = "n=" + std::to_string(n);
      break;
    }
  }
  return s;
}

inline Section from_reduction(std::string name, const ReductionReport& r) {
  Section s{std::move(name), r.holds(), ""};
  if (!r.holds()) s.detail = "first mismatch at n=" + std::to_string(r.first_mismatch);
  return s;
}

}  // namespace checks

/// Runs every section that applies to the parameters, in a fixed order.
inline VerifyReport verify(const ParamSet& p, const Rational& beta = 1,
                           const std::optional<Corruption>& corrupt = std::nullopt) {
  const VerifyInputs in = VerifyInputs::make(p, corrupt);
  VerifyReport rep;
  auto run = [&](const std::string& name, const std::function<Section()>& f) {
    try {
      rep.sections.push_back(f());
    } catch (const Error& e) {
      rep.sections.push_back(Section{name, false, e.what()});
    }
  };
  run("recurrence == explicit", [&] { return checks::explicit_matches_recurrence(in); });
  run("spectrum = grid", [&] { return checks::spectrum_is_grid(in); });
  if (p.family() == FamilyCase::P0) run("product form of P_{2j+1}", [&] { return checks::product_form(in); });
  run("orthogonality", [&] { return checks::orthogonality(in); });
  run("weight sums", [&] { return checks::weight_sums(in); });
  if (p.alpha() == Rational(1, 2)) run("persymmetry", [&] { return checks::persymmetry(in); });
  run("Dunkl bispectrality", [&] { return checks::bispectrality(in, beta); });
  if (has_odd_size(p.family())) run("Geronimus", [&] { return checks::geronimus(in); });
  const bool single = p.b() == 0 && p.alpha() == Rational(1, 2);
  if (single && p.family() == FamilyCase::P0) {
    run("general CBI identification", [&] { return checks::from_reduction("general CBI identification", reduction_general_cbi(p)); });
    run("general BI identification", [&] { return checks::from_reduction("general BI identification", reduction_general_bi(p)); });
  }
  if (single && p.a() == -(p.j() + 1) && (p.family() == FamilyCase::P0 || p.family() == FamilyCase::P1))
    run("Krawtchouk identification", [&] { return checks::from_reduction("Krawtchouk identification", reduction_krawtchouk(p)); });
  return rep;
}

}  // namespace parabi
