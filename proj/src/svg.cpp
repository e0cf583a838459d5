#include "sadic/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace sadic {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string fractal_svg(const RauzyApprox& approx, int width) {
  const int margin = 20;
  const int strip = 30;
  const int height = 2 * strip + 3 * margin + 20;
  double lo = 0, hi = 0;
  if (!approx.pi0.empty()) {
    lo = *std::min_element(approx.pi0.begin(), approx.pi0.end());
    hi = *std::max_element(approx.pi0.begin(), approx.pi0.end());
  }
  if (hi - lo < 1e-12) hi = lo + 1;
  const int plot = width - 2 * margin;
  std::vector<std::uint8_t> cols(static_cast<std::size_t>(plot), 0);
  for (std::size_t j = 0; j < approx.pi0.size(); ++j) {
    auto c = static_cast<int>((approx.pi0[j] - lo) / (hi - lo) * (plot - 1) + 0.5);
    cols[static_cast<std::size_t>(std::clamp(c, 0, plot - 1))] |= approx.labels[j] == Letter::one ? 1 : 2;
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int label = 0; label < 2; ++label) {
    const int y = margin + label * (strip + margin);
    out << "<g fill=\"" << kPalette[label] << "\">\n";
    for (int c = 0; c < plot;) {
      if (!(cols[static_cast<std::size_t>(c)] & (1 << label))) {
        ++c;
        continue;
      }
      int e = c;
      while (e < plot && (cols[static_cast<std::size_t>(e)] & (1 << label))) ++e;
      out << "<rect x=\"" << margin + c << "\" y=\"" << y << "\" width=\"" << e - c << "\" height=\"" << strip
          << "\"/>\n";
      c = e;
    }
    out << "</g>\n";
    out << "<text x=\"2\" y=\"" << y + strip / 2 + 4 << "\" font-size=\"10\">" << label + 1 << "</text>\n";
  }
  const int axis = height - margin;
  out << "<text x=\"" << margin << "\" y=\"" << axis << "\" font-size=\"10\">" << fmt(lo) << "</text>\n";
  out << "<text x=\"" << width - margin - 40 << "\" y=\"" << axis << "\" font-size=\"10\">" << fmt(hi) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string configuration_svg(const ExplorerReport& report, const DirectionVec& u, const DirectionVec& v, int size) {
  std::int64_t x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  for (const auto& s : report.iterate) {
    for (const Vec2i& p : {s.segment.x, s.segment.end()}) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  const double margin = 20;
  const double span = static_cast<double>(std::max(x1 - x0, y1 - y0));
  const double scale = (size - 2 * margin) / span;
  auto px = [&](double x) { return margin + (x - static_cast<double>(x0)) * scale; };
  auto py = [&](double y) { return size - margin - (y - static_cast<double>(y0)) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Stripe boundaries: points t·u + s·(v₂, −v₁).
  const double ux = u.xd(), uy = u.yd(), vx = v.xd(), vy = v.yd();
  for (const Real& t : {report.stripe.first, report.stripe.second}) {
    const double td = static_cast<double>(t);
    const double reach = 2 * span;
    out << "<line x1=\"" << fmt(px(td * ux - reach * vy)) << "\" y1=\"" << fmt(py(td * uy + reach * vx)) << "\" x2=\""
        << fmt(px(td * ux + reach * vy)) << "\" y2=\"" << fmt(py(td * uy - reach * vx))
        << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const auto& s : report.iterate) {
    const Vec2i a = s.segment.x, b = s.segment.end();
    out << "<line x1=\"" << fmt(px(static_cast<double>(a.x))) << "\" y1=\"" << fmt(py(static_cast<double>(a.y)))
        << "\" x2=\"" << fmt(px(static_cast<double>(b.x))) << "\" y2=\"" << fmt(py(static_cast<double>(b.y)))
        << "\" stroke=\"" << kPalette[s.source % std::size(kPalette)] << "\" stroke-width=\"2\"/>\n";
  }
  for (const auto& [p, h] : report.vertices)
    out << "<circle cx=\"" << fmt(px(static_cast<double>(p.x))) << "\" cy=\"" << fmt(py(static_cast<double>(p.y)))
        << "\" r=\"3\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace sadic
