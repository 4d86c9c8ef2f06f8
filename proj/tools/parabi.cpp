#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parabi/diagram.hpp"
#include "parabi/io.hpp"
#include "parabi/parabi.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2 };

struct RunConfig {
  std::string family = "p0";
  int j = 2;
  std::string a = "-4";
  std::string b = "0";
  std::string alpha = "1/2";
  std::string beta = "1";
  std::vector<double> eps;
  std::string format = "text";
  std::string output;
  bool svg = false;
  std::string corrupt;
};

parabi::ParamSet params_of(const RunConfig& c) {
  return parabi::ParamSet(parabi::parse_family_case(c.family), parabi::parse_rational(c.a), parabi::parse_rational(c.b),
                          parabi::parse_rational(c.alpha), c.j);
}

std::string extension(const RunConfig& c) {
  if (c.svg) return "svg";
  return c.format == "text" ? "txt" : c.format;
}

/// Explicit -o wins; otherwise PARABI_OUTPUT_DIR/<command>.<ext>; otherwise stdout.
void emit(const RunConfig& c, const std::string& command, const std::string& body) {
  std::string path = c.output;
  if (path.empty()) {
    if (const char* dir = std::getenv("PARABI_OUTPUT_DIR"); dir && *dir)
      path = (std::filesystem::path(dir) / (command + "." + extension(c))).string();
  }
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parabi::ArgumentError("cannot open output file " + path);
  out << body;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_table(const RunConfig& c) {
  const auto p = params_of(c);
  const auto polys = parabi::generate_polys(p);
  if (c.format == "json") emit(c, "table", dump(parabi::io::table_json(p, polys)));
  else if (c.format == "csv") emit(c, "table", parabi::io::table_csv(polys));
  else emit(c, "table", parabi::io::table_text(polys));
  return kOk;
}

int cmd_spectral(const RunConfig& c) {
  const auto p = params_of(c);
  const auto verdict = parabi::check_positivity(p);
  if (!verdict.admissible)
    std::cerr << "warning: parameters are not admissible (u_" << *verdict.first_violation << " <= 0)\n";
  parabi::SpectralData d{p, parabi::grid(p), {}, {}, {}, 0, 0};
  try {
    d = parabi::spectral_data(p);
  } catch (const parabi::Error& e) {
    std::cerr << "warning: weights unavailable: " << e.what() << "\n";
  }
  if (d.h2.empty()) {
    const auto n = parabi::norms(p);
    d.u = n.u;
    d.h2 = n.h2;
  }
  if (c.format == "json") emit(c, "spectral", dump(parabi::io::spectral_json(d, verdict.admissible)));
  else if (c.format == "csv") emit(c, "spectral", parabi::io::spectral_csv(d));
  else emit(c, "spectral", parabi::io::spectral_text(d));
  return kOk;
}

std::optional<parabi::Corruption> parse_corruption(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  const auto colon = spec.find(':');
  if (colon == std::string::npos || (spec[0] != 'A' && spec[0] != 'C') || colon != 1)
    throw parabi::ArgumentError("corruption must look like A:<n> or C:<n>");
  parabi::Corruption k;
  k.kind = spec[0] == 'A' ? parabi::CoeffKind::A : parabi::CoeffKind::C;
  k.n = std::stoi(spec.substr(colon + 1));
  return k;
}

int cmd_verify(const RunConfig& c) {
  const auto p = params_of(c);
  const auto rep = parabi::verify(p, parabi::parse_rational(c.beta), parse_corruption(c.corrupt));
  if (c.format == "json") emit(c, "verify", dump(parabi::io::verify_json(p, rep)));
  else if (c.format == "csv") emit(c, "verify", parabi::io::verify_csv(rep));
  else emit(c, "verify", parabi::io::verify_text(rep));
  if (const auto* f = rep.first_failure()) {
    std::cerr << "failed: " << f->name << (f->detail.empty() ? "" : " (" + f->detail + ")") << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_diagram(const RunConfig& c) {
  const auto m = parabi::diagram_model(params_of(c));
  emit(c, "diagram", c.svg ? parabi::render_svg(m) : parabi::render_ascii(m));
  return kOk;
}

int cmd_limit(const RunConfig& c) {
  const auto st = parabi::limit_study(params_of(c), c.eps);
  if (c.format == "json") emit(c, "limit", dump(parabi::io::limit_json(st)));
  else if (c.format == "csv") emit(c, "limit", parabi::io::limit_csv(st));
  else emit(c, "limit", parabi::io::limit_text(st));
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--case", c.family, "family p0, p1, p2 or p3")->capture_default_str();
  sub->add_option("-j", c.j, "size parameter j")->capture_default_str();
  sub->add_option("-a", c.a, "parameter a (p/q)")->capture_default_str();
  sub->add_option("-b", c.b, "parameter b (p/q)")->capture_default_str();
  sub->add_option("--alpha", c.alpha, "deformation parameter in [0,1] (p/q)")->capture_default_str();
  sub->add_option("--format", c.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("-o,--output", c.output, "output file (default: $PARABI_OUTPUT_DIR or stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Para-Bannai-Ito polynomials: tables, spectral data, verification, limits and diagrams"};
  app.require_subcommand(1);
  RunConfig c;

  auto* table = app.add_subcommand("table", "monic polynomial coefficients P_0..P_{N+1}");
  auto* spectral = app.add_subcommand("spectral", "grid, weights, u_n and h_n^2");
  auto* verify = app.add_subcommand("verify", "run every identity check; exit 1 on the first failure");
  auto* diagram = app.add_subcommand("diagram", "bi-lattice depiction (ASCII or SVG)");
  auto* limit = app.add_subcommand("limit", "q -> -1 study of the rescaled q-para-Racah recurrence");
  for (auto* s : {table, spectral, verify, diagram, limit}) add_common(s, c);
  verify->add_option("--beta", c.beta, "beta of the Dunkl operator for p0/p2")->capture_default_str();
  verify->add_option("--corrupt", c.corrupt, "test hook: perturb A_n or C_n by 1/1000 (A:<n> or C:<n>)");
  diagram->add_flag("--svg", c.svg, "emit SVG instead of ASCII");
  limit->add_option("--eps", c.eps, "epsilon values")->required()->expected(1, -1)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    if (*table) return cmd_table(c);
    if (*spectral) return cmd_spectral(c);
    if (*verify) return cmd_verify(c);
    if (*diagram) return cmd_diagram(c);
    if (*limit) return cmd_limit(c);
  } catch (const parabi::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const parabi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
