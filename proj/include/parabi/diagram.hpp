#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "parabi/limits.hpp"
#include "parabi/spectra.hpp"

namespace parabi {

enum class DiagramKind { BiLattice, EqualSides, SingleLattice, Generic };

struct GapLabel {
  Rational left, right;  // consecutive points
  std::string name;      // d1..d4, d3, d or empty for a generic plot
  Rational value;
};

struct DiagramModel {
  DiagramKind kind = DiagramKind::Generic;
  std::vector<Rational> points;  // increasing
  std::vector<GapLabel> gaps;
};

/// Points with labelled gaps; parameters outside the regime give an unlabelled generic plot.
inline DiagramModel diagram_model(const ParamSet& p) {
  DiagramModel m;
  m.points = grid(p).sorted();
  std::optional<LatticeSpacings> L;
  try {
    L = lattice_spacings(p);
  } catch (const RegimeError&) {
  }
  if (L && L->matches) {
    m.kind = p.b() != 0 ? DiagramKind::BiLattice : (L->c != 0 ? DiagramKind::EqualSides : DiagramKind::SingleLattice);
  }
  for (std::size_t i = 1; i < m.points.size(); ++i) {
    GapLabel g{m.points[i - 1], m.points[i], "", m.points[i] - m.points[i - 1]};
    if (m.kind != DiagramKind::Generic) {
      const bool across = g.left < 0 && g.right >= 0;
      if (m.kind == DiagramKind::SingleLattice) {
        g.name = "d";
      } else if (m.kind == DiagramKind::EqualSides) {
        g.name = across ? "d1+d2" : "d3";
      } else if (across) {
        g.name = "d1+d2";
      } else if (g.value == L->d3) {
        g.name = "d3";
      } else {
        g.name = "d4";
      }
    }
    m.gaps.push_back(std::move(g));
  }
  return m;
}

inline std::string render_ascii(const DiagramModel& m) {
  std::ostringstream os;
  const std::vector<Rational>& pts = m.points;
  if (pts.empty()) return "";
  const Rational lo = pts.front();
  const Rational span = pts.back() - lo;
  const int width = 72;
  std::string line(width + 1, '-');
  for (const auto& x : pts) {
    const int col = span == 0 ? 0 : static_cast<int>(to_double((x - lo) / span) * width + 0.5);
    line[static_cast<std::size_t>(col)] = 'o';
  }
  if (lo < 0 && pts.back() > 0) {
    const int col = static_cast<int>(to_double(-lo / span) * width + 0.5);
    if (line[static_cast<std::size_t>(col)] != 'o') line[static_cast<std::size_t>(col)] = '|';
  }
  os << line << "\n";
  for (const auto& x : pts) os << "  x = " << to_string(x) << "\n";
  for (const auto& g : m.gaps) {
    os << "  [" << to_string(g.left) << ", " << to_string(g.right) << "] gap " << to_string(g.value);
    if (!g.name.empty()) os << " (" << g.name << ")";
    os << "\n";
  }
  return os.str();
}

/// Deterministic SVG: fixed 800x160 viewBox scaled to the grid span.
inline std::string render_svg(const DiagramModel& m) {
  const double W = 800, H = 160, pad = 40, axis = 80;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H << "\" width=\"" << W
     << "\" height=\"" << H << "\">\n";
  os << "  <line x1=\"" << pad << "\" y1=\"" << axis << "\" x2=\"" << W - pad << "\" y2=\"" << axis
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (!m.points.empty()) {
    const double lo = to_double(m.points.front());
    const double hi = to_double(m.points.back());
    const double span = hi > lo ? hi - lo : 1.0;
    auto X = [&](const Rational& x) { return pad + (to_double(x) - lo) / span * (W - 2 * pad); };
    if (lo < 0 && hi > 0)
      os << "  <line x1=\"" << X(0) << "\" y1=\"" << axis - 12 << "\" x2=\"" << X(0) << "\" y2=\"" << axis + 12
         << "\" stroke=\"gray\" stroke-dasharray=\"2,2\"/>\n";
    for (const auto& x : m.points)
      os << "  <circle cx=\"" << X(x) << "\" cy=\"" << axis << "\" r=\"4\" fill=\"black\"><title>" << to_string(x)
         << "</title></circle>\n";
    for (std::size_t i = 0; i < m.gaps.size(); ++i) {
      const auto& g = m.gaps[i];
      const double mid = (X(g.left) + X(g.right)) / 2;
      const double y = i % 2 == 0 ? axis - 16 : axis + 26;
      const std::string text = g.name.empty() ? to_string(g.value) : g.name + "=" + to_string(g.value);
      os << "  <text x=\"" << mid << "\" y=\"" << y
         << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" << text << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace parabi
