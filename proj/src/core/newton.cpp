#include "keller/core/newton.hpp"

#include <algorithm>
#include <numeric>

#include "keller/core/errors.hpp"

namespace keller {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

}  // namespace

LatticePolygon convex_hull(std::vector<LatticePoint> pts) {
  // Andrew's monotone chain, ordered by (y, x) so the start is lowest-leftmost.
  auto key = [](const LatticePoint& a, const LatticePoint& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  };
  std::sort(pts.begin(), pts.end(), key);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return {pts};
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return {h};
}

LatticePolygon newton_polygon(const MultiPoly& a, int ix, int iy) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "Newton polygon of zero");
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : a.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v)
      if (static_cast<int>(v) != ix && static_cast<int>(v) != iy && e[v] != 0)
        throw Error(ErrorKind::InvalidArgument, "Newton polygon needs a bivariate polynomial");
    pts.emplace_back(e[ix], e[iy]);
  }
  return convex_hull(std::move(pts));
}

long LatticePolygon::twice_area() const {
  long s = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& p = vertices[i];
    const auto& q = vertices[(i + 1) % vertices.size()];
    s += p.first * q.second - q.first * p.second;
  }
  return std::abs(s);
}

long LatticePolygon::boundary_points() const {
  if (vertices.size() == 1) return 1;
  long b = 0;
  for (const auto& [p, q] : edges()) b += std::gcd(std::abs(q.first - p.first), std::abs(q.second - p.second));
  // A segment is traversed twice.
  return vertices.size() == 2 ? b / 2 + 1 : b;
}

long LatticePolygon::interior_points() const {
  if (vertices.size() <= 2) return 0;
  return (twice_area() - boundary_points() + 2) / 2;
}

std::vector<std::pair<LatticePoint, LatticePoint>> LatticePolygon::edges() const {
  std::vector<std::pair<LatticePoint, LatticePoint>> out;
  if (vertices.size() < 2) return out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return out;
}

bool LatticePolygon::contains(const LatticePoint& p) const {
  if (vertices.size() == 1) return p == vertices[0];
  if (vertices.size() == 2) {
    const auto& [a, b] = std::pair{vertices[0], vertices[1]};
    return cross(a, b, p) == 0 && std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
  }
  for (const auto& [a, b] : edges())
    if (cross(a, b, p) < 0) return false;
  return true;
}

}  // namespace keller
