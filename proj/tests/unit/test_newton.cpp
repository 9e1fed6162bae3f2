#include <doctest.h>

#include "keller/core/errors.hpp"
#include "keller/core/newton.hpp"

using namespace keller;

namespace {

LatticePolygon N(const char* s) { return newton_polygon(parse_poly(s)); }

// Brute-force interior count for the Pick oracle.
long brute_interior(const LatticePolygon& p) {
  long n = 0;
  for (long x = -1; x <= 20; ++x)
    for (long y = -1; y <= 20; ++y) {
      if (!p.contains({x, y})) continue;
      bool on_edge = false;
      for (const auto& [a, b] : p.edges()) {
        long c = (b.first - a.first) * (y - a.second) - (b.second - a.second) * (x - a.first);
        if (c == 0) on_edge = true;
      }
      n += !on_edge;
    }
  return n;
}

}  // namespace

TEST_CASE("Newton polygon examples") {
  LatticePolygon t = N("x^2 + 5*x + y^3");
  CHECK(t.vertices == std::vector<LatticePoint>{{1, 0}, {2, 0}, {0, 3}});

  LatticePolygon s = N("x + y");
  CHECK(s.is_segment());
  CHECK(s.vertices == std::vector<LatticePoint>{{1, 0}, {0, 1}});

  LatticePolygon u = N("x*y + x + y");
  CHECK(u.vertices == std::vector<LatticePoint>{{1, 0}, {1, 1}, {0, 1}});

  CHECK(N("7").is_point());
  CHECK_THROWS_AS(N("0"), Error);
}

TEST_CASE("interior points by Pick agree with enumeration") {
  // Generic member of x^2 + y^3 + c*x has one interior point.
  CHECK(N("x^2 + y^3 + 3*x").interior_points() == 1);
  CHECK(N("x^2 + y^3 + 3*x + 1").interior_points() == 1);
  for (const char* s : {"x^3 + y^3 + 1", "x^4*y + y^5 + x + 1", "x*y^2 + x^3 + y", "1 + x^5 + x*y^4"}) {
    LatticePolygon p = N(s);
    CHECK(p.interior_points() == brute_interior(p));
  }
  CHECK(N("x^2 + x + y").interior_points() == 0);
  CHECK(N("x*y - 1").interior_points() == 0);
}
