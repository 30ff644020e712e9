#include "qbn/polygon.hpp"

#include <sstream>
#include <stdexcept>

namespace qbn {

std::string NewtonPolygon::to_tsv() const {
  std::ostringstream os;
  os << "x\ty\n";
  for (const auto& [x, y] : vertices) os << x << "\t" << y.str() << "\n";
  return os.str();
}

std::string NewtonPolygon::to_svg() const {
  // Fixed viewport, y flipped so that larger values are drawn higher.
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  for (const auto& [x, y] : vertices) {
    double yd = (double)y.num / (double)y.den;
    maxx = std::max(maxx, (double)x);
    miny = std::min(miny, yd);
    maxy = std::max(maxy, yd);
  }
  double w = 400, h = 300, pad = 20;
  auto sx = [&](double x) { return pad + (x - minx) / (maxx - minx) * (w - 2 * pad); };
  auto sy = [&](double y) { return h - pad - (y - miny) / (maxy - miny + 1e-12) * (h - 2 * pad); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (const auto& [x, y] : vertices)
    os << sx((double)x) << "," << sy((double)y.num / (double)y.den) << " ";
  os << "\"/>\n</svg>\n";
  return os.str();
}

NewtonPolygon upper_hull_polygon(const std::vector<std::optional<Rat>>& points) {
  std::vector<std::pair<long long, Rat>> pts;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i]) pts.emplace_back((long long)i, *points[i]);
  if (pts.size() < 2) throw std::invalid_argument("upper_hull_polygon: need at least two usable points");
  if (pts.front().first != 0 || pts.front().second.sign() != 0)
    throw std::invalid_argument("upper_hull_polygon: points must include (0,0)");

  // Monotone scan keeping only right turns (concave from above).
  std::vector<std::pair<long long, Rat>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // b above segment a-p <=> cross(a->b, a->p) < 0 for upper hull
      Rat cross = Rat(b.first - a.first) * (p.second - a.second) -
                  (b.second - a.second) * Rat(p.first - a.first);
      if (cross.sign() >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  NewtonPolygon np;
  np.vertices = hull;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    Rat slope = (hull[e + 1].second - hull[e].second) / Rat(hull[e + 1].first - hull[e].first);
    for (long long x = hull[e].first; x < hull[e + 1].first; ++x) np.slopes.push_back(slope);
  }
  return np;
}

NewtonPolygon polygon_from_slopes(const std::vector<Rat>& slopes) {
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i)
    if (slopes[i] < slopes[i + 1])
      throw std::invalid_argument("polygon_from_slopes: slopes must be weakly decreasing");
  NewtonPolygon np;
  np.slopes = slopes;
  np.vertices.emplace_back(0, Rat(0));
  Rat acc;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    acc += slopes[i];
    bool vertex = (i + 1 == slopes.size()) || slopes[i + 1] != slopes[i];
    if (vertex) np.vertices.emplace_back((long long)(i + 1), acc);
  }
  return np;
}

}  // namespace qbn
