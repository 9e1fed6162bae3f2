#include <doctest.h>

#include <random>

#include "keller/core/factor.hpp"

using namespace keller;

namespace {

MultiPoly P(const char* s, std::vector<std::string> vars = {"x", "y"}) { return parse_poly(s, vars); }

MultiPoly product(const std::vector<Factor>& fs, const std::vector<std::string>& vars) {
  MultiPoly r = MultiPoly::constant(vars, 1);
  for (const auto& f : fs) r *= f.poly.pow(f.multiplicity);
  return r;
}

bool equal_up_to_unit(const MultiPoly& a, const MultiPoly& b) {
  return a.normalized() == b.normalized();
}

}  // namespace

TEST_CASE("univariate factorization examples") {
  // (x^2-2)(x^2+2) expands to x^4-4.
  CHECK((P("x^2-2") * P("x^2+2")) == P("x^4-4"));
  auto f = factor_univariate_rational(P("x^4-4"));
  REQUIRE(f.size() == 2);
  CHECK(((f[0].poly == P("x^2-2") && f[1].poly == P("x^2+2")) ||
         (f[0].poly == P("x^2+2") && f[1].poly == P("x^2-2"))));

  auto g = factor_univariate_rational(P("x^3"));
  REQUIRE(g.size() == 1);
  CHECK(g[0].poly == P("x"));
  CHECK(g[0].multiplicity == 3);

  auto h = factor_univariate_rational(P("x^2+1"));
  REQUIRE(h.size() == 1);
  CHECK(h[0].poly == P("x^2+1"));
  CHECK(h[0].multiplicity == 1);
}

TEST_CASE("Swinnerton-Dyer style polynomial stays irreducible") {
  // x^4 - 10x^2 + 1 splits into linear or quadratic factors modulo every prime.
  auto f = factor_univariate_rational(P("x^4-10*x^2+1"));
  REQUIRE(f.size() == 1);
  CHECK(f[0].poly == P("x^4-10*x^2+1"));
}

TEST_CASE("univariate factorization reconstructs input") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-5, 5), deg(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly a = MultiPoly::constant({"x", "y"}, 1);
    int pieces = 1 + trial % 3;
    for (int k = 0; k < pieces; ++k) {
      MultiPoly f({"x", "y"});
      int d = deg(rng);
      for (int e = 0; e <= d; ++e) f.add_term({e, 0}, coef(rng));
      if (f.degree(0) <= 0) continue;
      a *= f.pow(1 + (trial + k) % 2);
    }
    if (a.is_constant()) continue;
    auto fs = factor_univariate_rational(a);
    CHECK(equal_up_to_unit(product(fs, a.vars()), a));
    for (const auto& f : fs) CHECK(f.poly.degree(0) >= 1);
  }
}

TEST_CASE("large-coefficient product needs lifting") {
  MultiPoly a = P("(123*x^3 - 77*x + 5)*(31*x^2 + 1000*x - 999)*(x^5 - 3)");
  auto fs = factor_univariate_rational(a);
  REQUIRE(fs.size() == 3);
  CHECK(equal_up_to_unit(product(fs, a.vars()), a));
}

TEST_CASE("bivariate factorization") {
  auto f = factor_bivariate_rational(P("x^2-y^2"));
  REQUIRE(f.size() == 2);
  CHECK(equal_up_to_unit(product(f, {"x", "y"}), P("x^2-y^2")));

  auto g = factor_bivariate_rational(P("x^2+y^2"));
  CHECK(g.size() == 1);

  auto h = factor_bivariate_rational(P("(x^2+y^3)^2*(x*y-1)*y"));
  REQUIRE(h.size() == 3);
  CHECK(equal_up_to_unit(product(h, {"x", "y"}), P("(x^2+y^3)^2*(x*y-1)*y")));

  MultiPoly big = P("(x^3*y + 2*x*y^2 - y + 7)*(x^2 - 3*x*y + y^4 + 1)*(x + y^2)");
  auto k = factor_bivariate_rational(big);
  CHECK(k.size() == 3);
  CHECK(equal_up_to_unit(product(k, {"x", "y"}), big));
}

TEST_CASE("bivariate factorization over extra variables") {
  std::vector<std::string> vars{"x", "y", "u", "v"};
  MultiPoly a = parse_poly("u*(u^2 - v^3)*(u - 1)", vars);
  auto f = factor_bivariate_rational(a);
  REQUIRE(f.size() == 3);
  CHECK(equal_up_to_unit(product(f, vars), a));
}
