#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lexiknot/curvelab.hpp"

namespace lexiknot {

std::string render_svg(const PlaneCurve& c, const CrossingSet& cs, int width, int height) {
  std::vector<double> ts;
  for (const auto& cr : cs.crossings) ts.insert(ts.end(), {cr.t_approx, cr.s_approx});
  for (const auto& f : {cs.left, cs.right})
    if (f) ts.push_back(f->c.approx());
  double t0 = -1, t1 = 1;
  if (!ts.empty()) {
    t0 = *std::min_element(ts.begin(), ts.end());
    t1 = *std::max_element(ts.begin(), ts.end());
  }
  double span = std::max(t1 - t0, 1e-3);
  t0 -= 0.3 * span;
  t1 += 0.3 * span;

  const int samples = 800;
  std::vector<std::pair<double, double>> pts;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (int i = 0; i <= samples; ++i) {
    double t = t0 + (t1 - t0) * i / samples;
    double x = c.x.eval(t), y = c.y.eval(t);
    pts.push_back({x, y});
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  const double pad = 24;
  double sx = (width - 2 * pad) / std::max(xmax - xmin, 1e-9);
  double sy = (height - 2 * pad) / std::max(ymax - ymin, 1e-9);
  auto X = [&](double x) { return pad + (x - xmin) * sx; };
  auto Y = [&](double y) { return height - pad - (y - ymin) * sy; };

  std::ostringstream os;
  os.precision(2);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (const auto& [x, y] : pts) os << X(x) << ',' << Y(y) << ' ';
  os << "\"/>\n";
  for (const auto& cr : cs.crossings) {
    os << "<circle cx=\"" << X(cr.x_approx) << "\" cy=\"" << Y(cr.y_approx)
       << "\" r=\"4\" fill=\"none\" stroke=\"crimson\"/>\n";
    os << "<text x=\"" << X(cr.x_approx) + 5 << "\" y=\"" << Y(cr.y_approx) - 6
       << "\" font-size=\"12\" fill=\"crimson\">" << letter_char(cr.letter) << "</text>\n";
  }
  for (const auto& tp : cs.triple_points)
    os << "<circle cx=\"" << X(tp.x_approx) << "\" cy=\"" << Y(tp.y_approx)
       << "\" r=\"6\" fill=\"none\" stroke=\"navy\"/>\n";
  os << "<text x=\"" << pad << "\" y=\"16\" font-size=\"12\">" << cs.letters() << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace lexiknot
