#include "aniso/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace aniso {

Projection projection_from_string(const std::string& s) {
  if (s == "xy") return Projection::XY;
  if (s == "xz") return Projection::XZ;
  if (s == "yz") return Projection::YZ;
  if (s == "3d-isometric") return Projection::Isometric3D;
  throw std::invalid_argument("projection must be xy, xz, yz or 3d-isometric");
}

namespace {

struct P2 {
  double u, v;
};

P2 project(const Vec3& x, Projection proj) {
  switch (proj) {
    case Projection::XY: return {x[0], x[1]};
    case Projection::XZ: return {x[0], x[2]};
    case Projection::YZ: return {x[1], x[2]};
    case Projection::Isometric3D:
      return {(x[0] - x[1]) * 0.8660254037844386, (x[0] + x[1]) * 0.5 - x[2]};
  }
  return {0.0, 0.0};
}

const char* axis_labels(Projection proj) {
  switch (proj) {
    case Projection::XY: return "x1 / x2";
    case Projection::XZ: return "x1 / x3";
    case Projection::YZ: return "x2 / x3";
    case Projection::Isometric3D: return "isometric";
  }
  return "";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void write_svg_plot(const std::string& path, const std::vector<TrajectorySample>& samples,
                    Projection proj) {
  if (samples.empty()) throw std::invalid_argument("cannot plot an empty trajectory");

  constexpr double W = 800, H = 600, M = 60;  // canvas and margin
  double ulo = 1e300, uhi = -1e300, vlo = 1e300, vhi = -1e300;
  std::vector<P2> pts;
  pts.reserve(samples.size());
  for (const auto& s : samples) {
    const P2 p = project(s.x, proj);
    pts.push_back(p);
    ulo = std::min(ulo, p.u);
    uhi = std::max(uhi, p.u);
    vlo = std::min(vlo, p.v);
    vhi = std::max(vhi, p.v);
  }
  // equal aspect so circles project as circles
  const double du = std::max(uhi - ulo, 1e-12), dv = std::max(vhi - vlo, 1e-12);
  const double scale = std::min((W - 2 * M) / du, (H - 2 * M) / dv);
  const double ucen = 0.5 * (ulo + uhi), vcen = 0.5 * (vlo + vhi);
  auto sx = [&](double u) { return W / 2 + (u - ucen) * scale; };
  auto sy = [&](double v) { return H / 2 - (v - vcen) * scale; };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  // axes box
  out << "<rect x=\"" << M << "\" y=\"" << M << "\" width=\"" << W - 2 * M << "\" height=\""
      << H - 2 * M << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  // scale labels at the data extremes
  out << "<text x=\"" << M << "\" y=\"" << H - M + 20 << "\" font-size=\"12\">" << fmt(ulo)
      << "</text>\n";
  out << "<text x=\"" << W - M << "\" y=\"" << H - M + 20
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(uhi) << "</text>\n";
  out << "<text x=\"" << M - 6 << "\" y=\"" << H - M
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(vlo) << "</text>\n";
  out << "<text x=\"" << M - 6 << "\" y=\"" << M + 4
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(vhi) << "</text>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"" << H - M + 36
      << "\" font-size=\"13\" text-anchor=\"middle\">" << axis_labels(proj) << "</text>\n";

  out << "<polyline fill=\"none\" stroke=\"#1050c0\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < pts.size(); i++) {
    if (i) out << ' ';
    out << fmt(sx(pts[i].u)) << ',' << fmt(sy(pts[i].v));
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace aniso
