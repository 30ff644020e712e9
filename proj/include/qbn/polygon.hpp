#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbn/rational.hpp"

namespace qbn {

/// Graph of a concave piecewise-linear function starting at (0,0), together
/// with its weakly decreasing slope sequence (one slope per unit x-step).
struct NewtonPolygon {
  std::vector<std::pair<long long, Rat>> vertices;
  std::vector<Rat> slopes;

  std::string to_tsv() const;
  std::string to_svg() const;
};

/// Upper convex hull of {(i, y_i)}.  Entries with no value (valuation of 0,
/// i.e. -infinity) are skipped.  points[i] is the value at x = i and
/// points[0] must be 0.
NewtonPolygon upper_hull_polygon(const std::vector<std::optional<Rat>>& points);

/// Polygon through the partial sums of a weakly decreasing slope sequence.
NewtonPolygon polygon_from_slopes(const std::vector<Rat>& slopes);

}  // namespace qbn
