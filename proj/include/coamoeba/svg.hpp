#pragma once

// SVG pictures of Gamma_+/Gamma_-, the zonotope, and the torus multiplicity map.
// Coordinates are in pi-units, scaled by pixels_per_pi with the y axis flipped.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coamoeba/error.hpp"
#include "coamoeba/geometry.hpp"
#include "coamoeba/report.hpp"

namespace coamoeba {

enum class View { Gamma, Zonotope, Torus };

inline View parse_view(const std::string& s) {
  if (s == "gamma") return View::Gamma;
  if (s == "zonotope") return View::Zonotope;
  if (s == "torus") return View::Torus;
  throw Error(ErrorCode::InvalidArgument, "unknown view '" + s + "' (expected gamma, zonotope or torus)");
}

struct SvgOptions {
  double pixels_per_pi = 120.0;
  std::size_t grid = 400;
};

namespace detail {

class SvgCanvas {
 public:
  SvgCanvas(double xlo, double ylo, double xhi, double yhi, double ppp)
      : xlo_(xlo), yhi_(yhi), ppp_(ppp), width_((xhi - xlo) * ppp), height_((yhi - ylo) * ppp) {}

  [[nodiscard]] double px(double x) const { return (x - xlo_) * ppp_; }
  [[nodiscard]] double py(double y) const { return (yhi_ - y) * ppp_; }
  [[nodiscard]] double scale() const { return ppp_; }

  std::ostringstream body;

  [[nodiscard]] std::string finish(const std::string& style) const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_) << "\" height=\"" << fmt(height_)
        << "\" viewBox=\"0 0 " << fmt(width_) << ' ' << fmt(height_) << "\">\n"
        << "<style>" << style << "</style>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
  }

  [[nodiscard]] std::string points(const std::vector<PiPoint>& pts, bool close) const {
    std::string s;
    auto add = [&](const PiPoint& p) {
      if (!s.empty()) s += ' ';
      s += fmt(px(to_double(p.x))) + "," + fmt(py(to_double(p.y)));
    };
    for (const PiPoint& p : pts) add(p);
    if (close && !pts.empty()) add(pts.front());
    return s;
  }

 private:
  double xlo_, yhi_, ppp_, width_, height_;
};

inline void bounds(const std::vector<PiPoint>& pts, double& xlo, double& ylo, double& xhi, double& yhi) {
  for (const PiPoint& p : pts) {
    xlo = std::min(xlo, to_double(p.x));
    xhi = std::max(xhi, to_double(p.x));
    ylo = std::min(ylo, to_double(p.y));
    yhi = std::max(yhi, to_double(p.y));
  }
}

inline std::string gray(int multiplicity) {
  const int level = std::max(40, 200 - 50 * (multiplicity - 1));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, level);
  return buf;
}

inline std::string render_gamma(const CoamoebaChain& chain, const SvgOptions& opt) {
  const GammaCycles& g = chain.gamma();
  double xlo = -1, ylo = -1, xhi = 1, yhi = 1;
  bounds(g.plus.vertices, xlo, ylo, xhi, yhi);
  bounds(g.minus.vertices, xlo, ylo, xhi, yhi);
  SvgCanvas c(xlo - 0.25, ylo - 0.25, xhi + 0.25, yhi + 0.25, opt.pixels_per_pi);
  c.body << "<rect class=\"fundamental\" x=\"" << SvgCanvas::fmt(c.px(-1)) << "\" y=\"" << SvgCanvas::fmt(c.py(1))
         << "\" width=\"" << SvgCanvas::fmt(2 * c.scale()) << "\" height=\"" << SvgCanvas::fmt(2 * c.scale())
         << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"6,4\"/>\n";
  c.body << "<polyline class=\"gamma-plus\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\""
         << c.points(g.plus.vertices, true) << "\"/>\n";
  c.body << "<polyline class=\"gamma-minus\" fill=\"none\" stroke=\"#2471a3\" stroke-width=\"2\" points=\""
         << c.points(g.minus.vertices, true) << "\"/>\n";
  const PiPoint& p0 = g.p0;
  c.body << "<circle class=\"p0\" cx=\"" << SvgCanvas::fmt(c.px(to_double(p0.x))) << "\" cy=\""
         << SvgCanvas::fmt(c.py(to_double(p0.y))) << "\" r=\"4\" fill=\"#000\"/>\n";
  return c.finish(".gamma-plus{} .gamma-minus{} .p0{}");
}

inline std::string render_zonotope(const CoamoebaChain& chain, const SvgOptions& opt) {
  const Zonotope& z = chain.zonotope();
  double xlo = 0, ylo = 0, xhi = 0, yhi = 0;
  bounds(z.vertex_cycle.vertices, xlo, ylo, xhi, yhi);
  SvgCanvas c(xlo - 0.25, ylo - 0.25, xhi + 0.25, yhi + 0.25, opt.pixels_per_pi);
  c.body << "<polygon class=\"zonotope\" fill=\"#d5e8d4\" stroke=\"#2e7d32\" stroke-width=\"2\" points=\""
         << c.points(z.vertex_cycle.vertices, false) << "\"/>\n";
  c.body << "<circle class=\"q0\" cx=\"" << SvgCanvas::fmt(c.px(to_double(z.q0.x))) << "\" cy=\""
         << SvgCanvas::fmt(c.py(to_double(z.q0.y))) << "\" r=\"4\" fill=\"#000\"/>\n";
  return c.finish(".zonotope{} .q0{}");
}

/// Coamoeba multiplicity at the centre of a grid cell, nudged off the boundary if needed.
inline std::pair<int, int> cell_multiplicities(const CoamoebaChain& chain, long long i, long long j, long long g) {
  for (long long k = 0; k < 64; ++k) {
    const TorusPoint theta(Rat(2 * i + 1, g) + Rat(k, 101 * g), Rat(2 * j + 1, g) + Rat(k, 103 * g));
    try {
      return {chain.torus_multiplicity(theta, ChainKind::Coamoeba), chain.torus_multiplicity(theta, ChainKind::Zonotope)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OnBoundary) throw;
    }
  }
  throw Error(ErrorCode::SamplingFailure, "could not move a grid cell centre off the boundary");
}

inline std::string render_torus(const CoamoebaChain& chain, const SvgOptions& opt) {
  if (opt.grid == 0) throw Error(ErrorCode::InvalidArgument, "grid must be positive");
  SvgCanvas c(0, 0, 2, 2, opt.pixels_per_pi);
  const auto g = static_cast<long long>(opt.grid);
  const double cell = 2.0 * c.scale() / static_cast<double>(g);
  std::vector<int> levels;
  for (long long j = 0; j < g; ++j) {
    int run_class = 0;
    long long run_start = 0;
    auto flush = [&](long long end) {
      if (run_class == 0) return;
      const std::string cls = run_class > 0 ? "cm" + std::to_string(run_class) : "zono";
      const std::string fill = run_class > 0 ? gray(run_class) : "#cfe3f5";
      c.body << "<rect class=\"" << cls << "\" x=\"" << SvgCanvas::fmt(run_start * cell) << "\" y=\""
             << SvgCanvas::fmt((g - 1 - j) * cell) << "\" width=\"" << SvgCanvas::fmt((end - run_start) * cell)
             << "\" height=\"" << SvgCanvas::fmt(cell) << "\" fill=\"" << fill << "\"/>\n";
    };
    for (long long i = 0; i < g; ++i) {
      const auto [cm, zm] = cell_multiplicities(chain, i, j, g);
      const int cls = cm > 0 ? cm : (zm > 0 ? -1 : 0);
      if (cls > 0 && std::find(levels.begin(), levels.end(), cls) == levels.end()) levels.push_back(cls);
      if (cls != run_class) {
        flush(i);
        run_class = cls;
        run_start = i;
      }
    }
    flush(g);
  }
  std::sort(levels.begin(), levels.end());
  std::string style;
  for (int l : levels) style += ".cm" + std::to_string(l) + "{} ";
  return c.finish(style + ".zono{}");
}

}  // namespace detail

inline std::string render_svg(const BMatrix& b, View view, const SvgOptions& opt = {}) {
  const CoamoebaChain chain(b);
  switch (view) {
    case View::Gamma: return detail::render_gamma(chain, opt);
    case View::Zonotope: return detail::render_zonotope(chain, opt);
    case View::Torus: return detail::render_torus(chain, opt);
  }
  throw Error(ErrorCode::Internal, "unhandled view");
}

inline void render_svg(const BMatrix& b, View view, const std::string& path, const SvgOptions& opt = {}) {
  const std::string svg = render_svg(b, view, opt);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "' for writing");
  out << svg;
}

/// Renders a job, taking grid size and scale from its options.
inline void render_svg(const JobSpec& spec, View view, const std::string& path) {
  render_svg(validate_b(spec.b), view, path, SvgOptions{spec.options.pixels_per_pi, spec.options.grid});
}

}  // namespace coamoeba
