#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "parabi/parabi.hpp"
#include "support/instances.hpp"

using namespace parabi;
using parabi::testing::make;
using parabi::testing::reference_instances;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << what;
    pass = pass && ok;
  }
};

std::string tag(const ParamSet& p) { return parabi::testing::label(p); }

// 1
void orthogonality(Outcome& o) {
  for (const auto& p : reference_instances()) o.require(verify_orthogonality(p).holds(), "orthogonality fails for " + tag(p));
}

// 2
void spectrum_is_grid(Outcome& o) {
  for (const auto& p : reference_instances()) {
    const auto top = generate_polys(p).back();
    for (const auto& x : grid(p).points()) o.require(top(x) == 0, "P_{N+1} nonzero on grid of " + tag(p));
    if (p.family() == FamilyCase::P0) o.require(char_poly_product(p) == top, "product form differs for " + tag(p));
  }
}

// 3
void explicit_matches(Outcome& o) {
  for (const auto& p : reference_instances()) {
    const auto P = generate_polys(p, p.N());
    for (const auto& x : random_rationals(2 * p.N() + 5))
      for (int n = 0; n <= p.N(); ++n) o.require(explicit_eval(p, n, x) == P[n](x), "explicit differs for " + tag(p));
    if (!has_odd_size(p.family())) {
      bool plain = false, deformed = false;
      for (int m = 0; m <= p.N(); ++m)
        for (int k = 0; k <= m / 2; ++k)
          (summand_branch(p.family(), m % 2 == 1, p.j(), k) == SummandBranch::Plain ? plain : deformed) = true;
      o.require(plain && deformed, "branch coverage incomplete for " + tag(p));
    }
  }
}

// 4
void bispectrality(Outcome& o) {
  for (const auto& p : reference_instances()) {
    const std::vector<Rational> betas = has_odd_size(p.family()) ? std::vector<Rational>{0} : std::vector<Rational>{0, 1};
    for (const auto& beta : betas) {
      const auto rep = verify_bispectrality(p, beta, 2);
      for (const auto& row : rep.rows) {
        o.require(row.holds, "eigenvalue identity fails for " + tag(p));
        o.require(static_cast<int>(row.samples.size()) >= row.n + 3, "too few samples");
      }
    }
    if (!has_odd_size(p.family()))
      for (int n = 0; n <= 2 * p.j(); ++n)
        o.require(eigenvalue(p.family(), p.j(), n, 1) == eigenvalue(p.family(), p.j(), 2 * p.j() - n, 1), "degeneracy fails");
  }
}

// 5
void weight_structure(Outcome& o) {
  for (const auto& p : reference_instances()) {
    const auto w = weights_direct(p);
    Rational even = 0, odd = 0;
    for (std::size_t s = 0; s < w.size(); ++s) {
      o.require(w[s] > 0, "non-positive weight for " + tag(p));
      (s % 2 == 0 ? even : odd) += w[s];
    }
    o.require(even == p.alpha() && odd == 1 - p.alpha(), "weight sums wrong for " + tag(p));
    o.require(deformation_factorizes(p), "deformation ratio wrong for " + tag(p));
    o.require(closed_matches_direct(weights_closed(p), w), "closed-form weights differ for " + tag(p));
  }
}

// 6
void persymmetry(Outcome& o) {
  for (const auto& base : reference_instances()) {
    if (has_odd_size(base.family())) continue;
    const ParamSet p = base.with_alpha(Rational(1, 2));
    const auto rec = Recurrence::of(p);
    const int N = p.N();
    for (int n = 0; n <= N; ++n) o.require(rec.A(n) == rec.C(N - n), "A_n != C_{2j-n} for " + tag(p));
    const auto P = generate_polys(p, N);
    Rational uprod = 1;
    for (int n = 1; n <= N; ++n) uprod *= rec.u(n);
    const Grid g = grid(p);
    for (std::size_t s = 0; s < g.size(); ++s) {
      const Rational v = P[N](g[s]);
      o.require(v * v == uprod, "P_N(x_s)^2 != u_1...u_N for " + tag(p));
      o.require(sign(v) == ((N + static_cast<int>(s)) % 2 == 0 ? 1 : -1), "sign is not (-1)^{N+s} for " + tag(p));
    }
  }
}

// 7
void q_limit(Outcome& o) {
  const ParamSet p = make(FamilyCase::P1, 2, "-4", "0", "1/2");
  const auto st = limit_study(p, {1e-3, 1e-4});
  const double ratio = st.rows[0].max_dev() / st.rows[1].max_dev();
  o.note << "ratio=" << ratio << " ";
  o.require(ratio >= 10.0 / 3.0 && ratio <= 30.0, "deviation ratio outside [10/3, 30]");
  for (const auto& r : st.rows) o.require(r.max_imag <= 10 * r.epsilon, " imaginary residual above 10*eps");
}

// 8
void reductions(Outcome& o) {
  for (int j : {2, 4}) {
    for (const char* a : {"-5", "-7", "-13/2"}) {
      const ParamSet p = make(FamilyCase::P0, j, a, "0", "1/2");
      o.require(reduction_general_cbi(p).holds(), "CBI identification fails for " + tag(p));
      o.require(reduction_general_bi(p).holds(), "BI identification fails for " + tag(p));
    }
    for (auto c : {FamilyCase::P0, FamilyCase::P1})
      o.require(reduction_krawtchouk(ParamSet(c, Rational(-j - 1), 0, Rational(1, 2), j)).holds(), "Krawtchouk identification fails");
  }
  for (int N = 1; N <= 6; ++N) {
    const Rational pr(1, 3);
    const auto K = krawtchouk_monic_all(N, pr, N);
    for (int n = 0; n <= N; ++n)
      for (int m = 0; m <= N; ++m) {
        Rational s = 0, binom = 1;
        for (int x = 0; x <= N; ++x) {
          if (x > 0) binom = binom * (N - x + 1) / x;
          Rational w = binom;
          for (int i = 0; i < x; ++i) w *= pr;
          for (int i = 0; i < N - x; ++i) w *= 1 - pr;
          s += w * K[n](Rational(x)) * K[m](Rational(x));
        }
        if (n != m) o.require(s == 0, "Krawtchouk orthogonality fails");
        else o.require(s > 0, "Krawtchouk norm not positive");
      }
  }
}

// 9
void lattice(Outcome& o) {
  const auto L = lattice_spacings(make(FamilyCase::P0, 2, "-5", "1/2", "1/2"));
  o.require(L.matches, "measured gaps differ from closed forms");
  o.require(L.d1 == Rational(7, 8) && L.d2 == Rational(5, 8) && L.d3 == Rational(3, 4) && L.d4 == Rational(1, 4),
            "closed forms differ from d1..d4 = 7/8, 5/8, 3/4, 1/4");
  const auto E = lattice_spacings(make(FamilyCase::P0, 2, "-5", "0", "1/2"));
  o.require(E.matches && E.d3 == Rational(1, 2) && E.d4 == Rational(1, 2), "b=0 sides not equally spaced");
  for (const auto& g : E.negative_gaps) o.require(g == Rational(1, 2), "b=0 negative side uneven");
  for (const auto& g : E.positive_gaps) o.require(g == Rational(1, 2), "b=0 positive side uneven");
  const auto pts = grid(make(FamilyCase::P0, 2, "-3", "0", "1/2")).sorted();
  for (std::size_t i = 1; i < pts.size(); ++i) o.require(pts[i] - pts[i - 1] == Rational(1, 2), "c=0, b=0 lattice not uniform");
}

// 10
void negative_controls(Outcome& o) {
  int fewest = 4, perturbations = 0;
  for (const auto& p : reference_instances()) {
    for (auto kind : {CoeffKind::A, CoeffKind::C})
      for (int n = 0; n <= p.N(); ++n) {
        const auto in = VerifyInputs::make(p, Corruption{kind, n, Rational(1, 1000)});
        const auto safe = [](const std::function<Section()>& f) {
          try {
            return f().passed;
          } catch (const Error&) {
            return false;
          }
        };
        const int failing = !safe([&] { return checks::orthogonality(in); }) +
                            !safe([&] { return checks::spectrum_is_grid(in); }) +
                            !safe([&] { return checks::explicit_matches_recurrence(in); }) +
                            !safe([&] { return checks::bispectrality(in, 1); });
        fewest = std::min(fewest, failing);
        ++perturbations;
        o.require(failing > 0, "perturbation of " + std::string(kind == CoeffKind::A ? "A_" : "C_") + std::to_string(n) +
                                   " passes criteria 1-4 for " + tag(p));
      }
    for (const char* al : {"0", "1"})
      o.require(!check_positivity(p.with_alpha(parse_rational(al))).admissible, "alpha=" + std::string(al) + " accepted");
  }
  o.note << perturbations << " perturbations, each fails at least " << fewest << " of criteria 1-4 ";
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Outcome&);
};

const std::vector<Criterion> kCriteria = {
    {1, "orthogonality, exact for all n, m <= N", orthogonality},
    {2, "P_{N+1} vanishes on the grid; product form equals P_{2j+1}", spectrum_is_grid},
    {3, "explicit expressions equal the recurrence", explicit_matches},
    {4, "Dunkl eigenvalue identities and degeneracy", bispectrality},
    {5, "weight sums, positivity, deformation ratios, closed forms", weight_structure},
    {6, "persymmetry at alpha = 1/2", persymmetry},
    {7, "q -> -1 deviation ratio 10 within factor 3; imaginary part <= 10 eps", q_limit},
    {8, "general CBI/BI and Krawtchouk identifications", reductions},
    {9, "lattice gaps d1..d4 and both reductions", lattice},
    {10, "negative controls", negative_controls},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
  bool all = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title;
    if (!o.note.str().empty()) std::cout << "  [" << o.note.str() << "]";
    std::cout << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
