#pragma once

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "parabi/families.hpp"
#include "parabi/limits.hpp"
#include "parabi/spectra.hpp"
#include "parabi/verify.hpp"

namespace parabi::io {

using nlohmann::ordered_json;

inline ordered_json strings(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

inline ordered_json params_json(const ParamSet& p) {
  return ordered_json{{"case", to_string(p.family())}, {"j", p.j()},           {"N", p.N()},
                      {"a", to_string(p.a())},         {"b", to_string(p.b())}, {"alpha", to_string(p.alpha())}};
}

// table

inline ordered_json table_json(const ParamSet& p, const std::vector<Poly>& polys) {
  ordered_json rows = ordered_json::array();
  for (std::size_t n = 0; n < polys.size(); ++n)
    rows.push_back(ordered_json{{"n", n}, {"degree", polys[n].degree()}, {"coefficients", strings(polys[n].coefficients())}});
  return ordered_json{{"params", params_json(p)}, {"polynomials", rows}};
}

/// Header n,degree,leading,c0..c_{N+1}; missing high coefficients are 0.
inline std::string table_csv(const std::vector<Poly>& polys) {
  std::ostringstream os;
  const std::size_t width = polys.empty() ? 0 : polys.size();
  os << "n,degree,leading";
  for (std::size_t k = 0; k < width; ++k) os << ",c" << k;
  os << "\n";
  for (std::size_t n = 0; n < polys.size(); ++n) {
    os << n << "," << polys[n].degree() << "," << to_string(polys[n].leading());
    for (std::size_t k = 0; k < width; ++k) os << "," << to_string(polys[n].coeff(static_cast<int>(k)));
    os << "\n";
  }
  return os.str();
}

inline std::string table_text(const std::vector<Poly>& polys) {
  std::ostringstream os;
  for (std::size_t n = 0; n < polys.size(); ++n) os << "P_" << n << "(x) = " << polys[n].str("x") << "\n";
  return os.str();
}

// spectral data

inline std::string weight_sum_line(const SpectralData& d) {
  return "alpha=" + to_string(d.params.alpha()) + ", even_sum=" + to_string(d.even_sum) + ", odd_sum=" + to_string(d.odd_sum);
}

inline ordered_json spectral_json(const SpectralData& d, bool admissible) {
  return ordered_json{{"params", params_json(d.params)},
                      {"admissible", admissible},
                      {"grid", strings(d.grid.points())},
                      {"weights", strings(d.weights)},
                      {"u", strings(d.u)},
                      {"h2", strings(d.h2)},
                      {"weight_sums", ordered_json{{"even", to_string(d.even_sum)},
                                                   {"odd", to_string(d.odd_sum)},
                                                   {"even_target", to_string(d.params.alpha())},
                                                   {"odd_target", to_string(1 - d.params.alpha())}}},
                      {"summary", weight_sum_line(d)}};
}

/// One row per grid point: s,x,w,h2 (h2 of degree s).
inline std::string spectral_csv(const SpectralData& d) {
  std::ostringstream os;
  os << "s,x,w,h2\n";
  for (std::size_t s = 0; s < d.grid.size(); ++s)
    os << s << "," << to_string(d.grid[s]) << "," << (s < d.weights.size() ? to_string(d.weights[s]) : std::string())
       << "," << to_string(d.h2[s]) << "\n";
  return os.str();
}

inline std::string spectral_text(const SpectralData& d) {
  std::ostringstream os;
  for (std::size_t s = 0; s < d.grid.size(); ++s) {
    os << "x_" << s << " = " << to_string(d.grid[s]);
    if (s < d.weights.size()) os << "  w_" << s << " = " << to_string(d.weights[s]);
    os << "\n";
  }
  for (std::size_t n = 0; n < d.h2.size(); ++n) os << "h2_" << n << " = " << to_string(d.h2[n]) << "\n";
  os << weight_sum_line(d) << "\n";
  return os.str();
}

// verify

inline ordered_json verify_json(const ParamSet& p, const VerifyReport& r) {
  ordered_json secs = ordered_json::array();
  for (const auto& s : r.sections) secs.push_back(ordered_json{{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  return ordered_json{{"params", params_json(p)}, {"passed", r.all_passed()}, {"sections", secs}};
}

inline std::string verify_csv(const VerifyReport& r) {
  std::ostringstream os;
  os << "section,passed,detail\n";
  for (const auto& s : r.sections) os << '"' << s.name << "\"," << (s.passed ? "true" : "false") << ",\"" << s.detail << "\"\n";
  return os.str();
}

inline std::string verify_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& s : r.sections) {
    os << (s.passed ? "PASS " : "FAIL ") << s.name;
    if (!s.detail.empty()) os << " (" << s.detail << ")";
    os << "\n";
  }
  return os.str();
}

// limit study

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

inline ordered_json limit_json(const LimitStudy& st) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : st.rows)
    rows.push_back(ordered_json{{"epsilon", r.epsilon},
                                {"max_dev_diag", r.max_dev_diag},
                                {"max_dev_offdiag", r.max_dev_offdiag},
                                {"max_imag", r.max_imag}});
  ordered_json ratios = ordered_json::array();
  for (std::size_t i = 1; i < st.rows.size(); ++i) ratios.push_back(st.rows[i - 1].max_dev() / st.rows[i].max_dev());
  const double order = st.fitted_order();
  return ordered_json{{"params", params_json(st.target)},
                      {"rows", rows},
                      {"deviation_ratios", ratios},
                      {"fitted_order", std::isfinite(order) ? ordered_json(order) : ordered_json(nullptr)}};
}

inline std::string limit_csv(const LimitStudy& st) {
  std::ostringstream os;
  os << "epsilon,max_dev_diag,max_dev_offdiag,max_imag\n";
  for (const auto& r : st.rows)
    os << fmt_double(r.epsilon) << "," << fmt_double(r.max_dev_diag) << "," << fmt_double(r.max_dev_offdiag) << ","
       << fmt_double(r.max_imag) << "\n";
  return os.str();
}

inline std::string limit_text(const LimitStudy& st) {
  std::ostringstream os;
  for (std::size_t i = 0; i < st.rows.size(); ++i) {
    const auto& r = st.rows[i];
    os << "eps=" << fmt_double(r.epsilon) << " diag=" << fmt_double(r.max_dev_diag)
       << " offdiag=" << fmt_double(r.max_dev_offdiag) << " imag=" << fmt_double(r.max_imag);
    if (i > 0) os << " ratio=" << fmt_double(st.rows[i - 1].max_dev() / r.max_dev());
    os << "\n";
  }
  os << "fitted_order=" << fmt_double(st.fitted_order()) << "\n";
  return os.str();
}

}  // namespace parabi::io
