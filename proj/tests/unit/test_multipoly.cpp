#include <doctest.h>

#include <random>

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"

using namespace keller;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

// Sylvester determinant by cofactor expansion; independent of the
// subresultant code path.
MultiPoly det(std::vector<std::vector<MultiPoly>> m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(vars, 1);
  if (n == 1) return m[0][0];
  MultiPoly acc(vars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    MultiPoly t = m[0][j] * det(minor, vars);
    if (j % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, int var) {
  auto ac = a.coefficients_in(var), bc = b.coefficients_in(var);
  const int m = static_cast<int>(ac.size()) - 1, n = static_cast<int>(bc.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(a.vars())));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = ac[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = bc[n - k];
  return det(s, a.vars());
}

MultiPoly random_poly(std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4);
  MultiPoly p({"x", "y"});
  for (int t = 0; t < terms; ++t) {
    int dx = deg(rng), dy = deg(rng);
    if (dx + dy > max_deg) continue;
    p.add_term({dx, dy}, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("arith examples") {
  CHECK(arith(P("x+y"), P("x-y"), ArithOp::Mul) == P("x^2-y^2"));
  CHECK(arith(P("x^2-y^2"), P("x+y"), ArithOp::ExactDiv) == P("x-y"));
  MultiPoly z = arith(P("x^2+y^3"), P("x^2+y^3"), ArithOp::Sub);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  CHECK_THROWS_AS(exact_div(P("x^2+1"), P("x+y")), Error);
}

TEST_CASE("parser and canonical printing") {
  MultiPoly p = P("x^2 + 3/2*x*y - y^3");
  CHECK(p.to_string() == "-y^3 + x^2 + 3/2*x*y");
  CHECK(P("(x+1)^2") == P("x^2+2*x+1"));
  CHECK(P("  x * ( y - 1 ) / 2 ") == P("1/2*x*y - 1/2*x"));
  try {
    P("x +\n  z");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(P("x/y"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
}

TEST_CASE("gcd examples") {
  CHECK(gcd_poly(P("(x+y)^2"), P("(x+y)*(x-y)")) == P("x+y"));
  // Independent certificate: x^2+y^2 and x+y are coprime since the
  // Sylvester resultant in x is 2y^2 != 0.
  CHECK(sylvester_resultant(P("x^2+y^2"), P("x+y"), 0) == P("2*y^2"));
  CHECK(gcd_poly(P("x^2+y^2"), P("x+y")) == P("1"));
  CHECK(gcd_poly(P("0"), P("x")) == P("x"));
  CHECK(gcd_poly(P("0"), P("0")).is_zero());
  CHECK(gcd_poly(P("6*x^2*y+3*x*y"), P("4*x*y^2")) == P("x*y"));
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P("y^2+x^2"), P("y-x"), "y") == P("2*x^2"));
  CHECK(resultant(P("y^2-x"), P("y^2-x"), "y").is_zero());
  CHECK_THROWS_AS(resultant(P("0"), P("0"), "y"), Error);
  std::vector<std::string> vars{"x", "y", "u", "v"};
  MultiPoly p = parse_poly("x - u", vars), q = parse_poly("y*(x*y-1) - v", vars);
  MultiPoly r = resultant(p, q, "y");
  // P - u has y-degree 0, so Res_y = (x-u)^2: degree 2 in x for every (u, v).
  CHECK(r == parse_poly("(x-u)^2", vars));
  for (int u = -2; u <= 2; ++u)
    CHECK(r.evaluate(2, u).evaluate(3, 3 - u).degree(0) == 2);
}

TEST_CASE("resultant agrees with Sylvester determinant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(rng, 4, 6), b = random_poly(rng, 3, 5);
    if (a.degree(1) <= 0 || b.degree(1) <= 0) continue;
    CHECK(resultant(a, b, 1) == sylvester_resultant(a, b, 1));
  }
}

TEST_CASE("resultant vanishes iff common factor in var") {
  std::mt19937 rng(11);
  int common = 0;
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4);
    if (trial % 2 == 0) {
      MultiPoly c = random_poly(rng, 2, 3);
      if (c.degree(1) <= 0) continue;
      a *= c;
      b *= c;
      ++common;
    }
    if (a.degree(1) <= 0 || b.degree(1) <= 0) continue;
    const bool zero = resultant(a, b, 1).is_zero();
    const bool shares = gcd_poly(a, b).degree(1) > 0;
    CHECK(zero == shares);
  }
  CHECK(common > 5);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4), c = random_poly(rng, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(P("(x+y)^2*(x-y)")) == P("x^2-y^2"));
  CHECK(squarefree_part(P("x^2+y^3")) == P("x^2+y^3"));
  CHECK(squarefree_part(P("y^2")) == P("y"));
  CHECK_THROWS_AS(squarefree_part(P("0")), Error);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    MultiPoly a = random_poly(rng, 2, 3);
    if (a.is_zero() || a.is_constant()) continue;
    MultiPoly f = a * a * P("x+2*y+1");
    MultiPoly s = squarefree_part(f);
    CHECK(divides(s, f));
    CHECK(divides(f, s.pow(3)));
  }
}
