#include "staircase.hpp"

#include <algorithm>
#include <sstream>

namespace midr {

std::vector<StaircaseCorner> staircase_2d(const AfgIdeal& a) {
  require_same_dim(a.dim, 2);
  AfgIdeal v = normalize_sum(a);
  if (v.boxes.empty()) throw value_error("empty region");

  // Surviving boxes form an antichain, so ordering by the x-ray (bound,
  // then closed before open) makes x strictly increase and forces y to
  // strictly decrease.
  std::sort(v.boxes.begin(), v.boxes.end(),
            [](const BoxIdeal& p, const BoxIdeal& q) {
              return ray_compare(p.rays[0], q.rays[0]) < 0;
            });
  std::vector<StaircaseCorner> path;
  path.reserve(v.boxes.size());
  for (const BoxIdeal& b : v.boxes) {
    path.push_back({b.rays[0].alpha.finite_value(),
                    b.rays[1].alpha.finite_value(),
                    b.rays[0].eps == Flag::open, b.rays[1].eps == Flag::open});
  }
  return path;
}

std::string staircase_text(std::span<const StaircaseCorner> path) {
  std::string out;
  for (const StaircaseCorner& c : path) {
    out += "(" + rational_text(c.x);
    if (c.x_open) out += '+';
    out += "," + rational_text(c.y);
    if (c.y_open) out += '+';
    out += ")\n";
  }
  return out;
}

namespace {

double approx(const Rational& q) { return q.get_d(); }

}  // namespace

std::string staircase_svg(std::span<const StaircaseCorner> path) {
  // Math coordinates: x right, y up; region extends up and right of the
  // staircase. One unit of margin beyond the extreme corners.
  double xmax = 1.0, ymax = 1.0;
  for (const StaircaseCorner& c : path) {
    xmax = std::max(xmax, approx(c.x) + 1.0);
    ymax = std::max(ymax, approx(c.y) + 1.0);
  }
  const double scale = 360.0 / std::max(xmax, ymax);
  const double pad = 40.0;
  const double w = xmax * scale + 2 * pad, h = ymax * scale + 2 * pad;
  auto X = [&](double x) { return pad + x * scale; };
  auto Y = [&](double y) { return h - pad - y * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";

  // Shaded membership region clipped to the frame.
  svg << "<polygon fill=\"#cfe3ff\" stroke=\"none\" points=\"";
  svg << X(approx(path.front().x)) << "," << Y(ymax) << " ";
  for (std::size_t i = 0; i < path.size(); ++i) {
    double px = approx(path[i].x), py = approx(path[i].y);
    svg << X(px) << "," << Y(py) << " ";
    double next_x = i + 1 < path.size() ? approx(path[i + 1].x) : xmax;
    svg << X(next_x) << "," << Y(py) << " ";
  }
  svg << X(xmax) << "," << Y(ymax) << "\"/>\n";

  // Axes.
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(xmax)
      << "\" y2=\"" << Y(0) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0)
      << "\" y2=\"" << Y(ymax) << "\" stroke=\"black\"/>\n";

  // Boundary: vertical drop into each corner, horizontal run to the next.
  auto seg = [&](double x1, double y1, double x2, double y2, bool open) {
    svg << "<line x1=\"" << X(x1) << "\" y1=\"" << Y(y1) << "\" x2=\""
        << X(x2) << "\" y2=\"" << Y(y2)
        << "\" stroke=\"#1f4e9c\" stroke-width=\"2\""
        << (open ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
  };
  for (std::size_t i = 0; i < path.size(); ++i) {
    double px = approx(path[i].x), py = approx(path[i].y);
    double top = i == 0 ? ymax : approx(path[i - 1].y);
    seg(px, top, px, py, path[i].x_open);
    double next_x = i + 1 < path.size() ? approx(path[i + 1].x) : xmax;
    seg(px, py, next_x, py, path[i].y_open);
  }

  // Corner dots: hollow when either bound is open.
  for (const StaircaseCorner& c : path) {
    bool closed = !c.x_open && !c.y_open;
    svg << "<circle cx=\"" << X(approx(c.x)) << "\" cy=\"" << Y(approx(c.y))
        << "\" r=\"4\" fill=\"" << (closed ? "#1f4e9c" : "white")
        << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace midr
