#pragma once

#include <utility>
#include <vector>

#include "keller/core/multipoly.hpp"

namespace keller {

using LatticePoint = std::pair<long, long>;

// Convex lattice polygon, vertices counterclockwise starting from the
// lowest-then-leftmost point. Degenerate cases: one vertex (a point) or two
// (a segment).
struct LatticePolygon {
  std::vector<LatticePoint> vertices;

  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }
  long twice_area() const;
  long boundary_points() const;
  // Pick's theorem: A = I + B/2 - 1.
  long interior_points() const;
  // Directed edges (v_i, v_{i+1}).
  std::vector<std::pair<LatticePoint, LatticePoint>> edges() const;
  bool contains(const LatticePoint& p) const;
  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

LatticePolygon convex_hull(std::vector<LatticePoint> pts);

// Hull of the support of a polynomial in the variables with indices ix, iy
// (all other variables must be absent).
LatticePolygon newton_polygon(const MultiPoly& a, int ix = 0, int iy = 1);

}  // namespace keller
