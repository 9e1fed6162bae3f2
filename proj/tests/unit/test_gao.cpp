#include <doctest.h>

#include <random>

#include "keller/core/errors.hpp"
#include "keller/core/factor.hpp"
#include "keller/core/linalg.hpp"
#include "keller/pencil/gao.hpp"

using namespace keller;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("absolute factor count examples") {
  CHECK(absolute_factor_count(P("x^2 - y^2")) == 2);
  // (x + i y)(x - i y) = x^2 + y^2 splits only over C.
  CHECK(absolute_factor_count(P("x^2 + y^2")) == 2);
  CHECK(absolute_factor_count(P("x^2 + y^3")) == 1);
  CHECK(absolute_factor_count(P("x*y")) == 2);
  CHECK(absolute_factor_count(P("y^2")) == 1);
  CHECK(absolute_factor_count(P("y - 1")) == 1);
  CHECK(absolute_factor_count(P("x^3 - 2")) == 3);
  CHECK(absolute_factor_count(P("x^4 + y^4")) == 4);
  CHECK(absolute_factor_count(P("x^2 - 2*y^2 + x*y^3")) == 1);
  CHECK_THROWS_AS(absolute_factor_count(P("5")), Error);
}

TEST_CASE("factor count is additive and shear invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto random_poly = [&](int deg) {
    MultiPoly f({"x", "y"});
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j) f.add_term({i, j}, coef(rng));
    return f;
  };
  for (int trial = 0; trial < 6; ++trial) {
    MultiPoly a = random_poly(2), b = random_poly(2);
    if (a.total_degree() < 1 || b.total_degree() < 1) continue;
    auto fa = factor_bivariate_rational(a), fb = factor_bivariate_rational(b);
    if (fa.size() != 1 || fb.size() != 1 || fa[0].multiplicity != 1 || fb[0].multiplicity != 1) continue;
    if (a.normalized() == b.normalized()) continue;
    const int ca = absolute_factor_count(a), cb = absolute_factor_count(b);
    CHECK(absolute_factor_count(a * b) == ca + cb);
    MultiPoly x = MultiPoly::variable({"x", "y"}, "x"), y = MultiPoly::variable({"x", "y"}, "y");
    MultiPoly moved = (a * b).compose({x * Rational(2) + y, x - y * Rational(3)});
    CHECK(absolute_factor_count(moved) == ca + cb);
  }
}

TEST_CASE("determinant of a linear pencil") {
  // det [[t, 1], [2, t - 3]] = t^2 - 3t - 2
  std::vector<std::vector<Integer>> a{{0, 1}, {2, -3}}, b{{1, 0}, {0, 1}};
  auto d = det_linear_pencil(a, b);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == -2);
  CHECK(d[1] == -3);
  CHECK(d[2] == 1);
  // Large entries force several primes.
  Integer big = Integer(1) << 150;
  std::vector<std::vector<Integer>> a2{{big, 1}, {1, big}}, b2{{1, 0}, {0, -1}};
  auto d2 = det_linear_pencil(a2, b2);
  REQUIRE(d2.size() == 3);
  CHECK(d2[0] == big * big - 1);
  CHECK(d2[1] == 0);
  CHECK(d2[2] == -1);
}
