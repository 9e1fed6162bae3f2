#include <doctest.h>

#include "keller/core/complex_roots.hpp"
#include "keller/core/errors.hpp"
#include "keller/core/number_field.hpp"

using namespace keller;

namespace {

QPoly Q(const char* s) { return to_qpoly(parse_poly(s, {"t"}), 0); }

// Independent check: a box contains a root when the interval value of p over
// it contains zero.
bool box_may_contain_root(const QPoly& p, const ComplexBox& b) { return evaluate(p, b).contains_zero(); }

}  // namespace

TEST_CASE("root isolation of small polynomials") {
  RootIsolation r(Q("t^4 - 10*t^2 + 1"));
  REQUIRE(r.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r.is_real(i));
    CHECK(box_may_contain_root(r.poly(), r.box(i)));
  }
  // Largest root is sqrt(2) + sqrt(3) = 3.14626...
  CHECK(r.box(3).re.lo > Rational(3146, 1000));
  CHECK(r.box(3).re.hi < Rational(3147, 1000));

  RootIsolation c(Q("t^2 + 1"));
  REQUIRE(c.size() == 2);
  CHECK(!c.is_real(0));
  CHECK(c.box(0).im.lo > 0);
  CHECK(c.box(1).im.hi < 0);

  RootIsolation m(Q("t^5 - t - 1"), 80);
  REQUIRE(m.size() == 5);
  CHECK(m.is_real(0));
  CHECK(!m.is_real(1));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(!m.box(i).intersects(m.box(j)));
  m.refine(200);
  Rational w(1);
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 200);
  for (const auto& b : m.boxes()) CHECK(b.width() <= w);
}

TEST_CASE("root isolation rejects non-squarefree input") {
  CHECK_THROWS_AS(RootIsolation(Q("(t-1)^2")), Error);
}

TEST_CASE("number field arithmetic") {
  FieldPtr K = make_field(Q("t^2 - 2"));
  KElem a = KElem::generator(K);
  CHECK(a * a == KElem(2));
  KElem b = KElem(1) + a;
  KElem inv = b.inverse();
  CHECK(b * inv == KElem(1));
  CHECK(inv == KElem(K, Q("t - 1")));
  CHECK_THROWS_AS(KElem(K, Q("0")).inverse(), Error);
}

TEST_CASE("factorization over a quadratic field") {
  FieldPtr K = make_field(Q("t^2 - 2"));
  auto fs = factor_over(to_kpoly(Q("t^2 - 2")), K);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first.degree() == 1);
  CHECK(fs[1].first.degree() == 1);
  auto gs = factor_over(to_kpoly(Q("t^4 - 10*t^2 + 1")), K);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].first.degree() == 2);
  KPoly prod = gs[0].first * gs[1].first;
  CHECK(prod == to_kpoly(Q("t^4 - 10*t^2 + 1")));
  auto hs = factor_over(to_kpoly(Q("t^2 + 1")), K);
  CHECK(hs.size() == 1);
}

TEST_CASE("primitive element of Q(sqrt2, sqrt3)") {
  FieldPtr K = make_field(Q("t^2 - 2"));
  Extension e = adjoin_root(K, to_kpoly(Q("t^2 - 3")));
  REQUIRE(e.field);
  CHECK(e.field->degree() == 4);
  CHECK(e.alpha_image * e.alpha_image == KElem(2));
  CHECK(e.root * e.root == KElem(3));
}

TEST_CASE("degree cap names the offending polynomial") {
  try {
    make_field(Q("t^9 - 2"));
    FAIL("expected DegreeCapError");
  } catch (const DegreeCapError& e) {
    CHECK(e.kind() == ErrorKind::DegreeCapExceeded);
    CHECK(std::string(e.what()).find("t^9 - 2") != std::string::npos);
  }
  auto orbits = root_orbits(to_kpoly(Q("(t^2 - 2)*(t - 5)^2")), nullptr);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].orbit_size == 1);
  CHECK(orbits[0].multiplicity == 2);
  CHECK(orbits[1].orbit_size == 2);
}
