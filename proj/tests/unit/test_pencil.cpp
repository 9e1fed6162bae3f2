#include <doctest.h>

#include "keller/core/errors.hpp"
#include "keller/pencil/pencil.hpp"

using namespace keller;

namespace {

PencilMap F(const char* p, const char* q) { return PencilMap::parse(p, q); }
MultiPoly P(const char* s) { return parse_poly(s); }
using K = RationalityVerdict::Kind;

}  // namespace

TEST_CASE("pencil members") {
  CHECK(pencil_member(F("x", "x^2+y^3"), 1, 0) == P("x"));
  CHECK(pencil_member(F("x", "x^2+y^3"), 0, 1) == P("x^2+y^3"));
  CHECK(pencil_member(F("x", "y+x^2"), 1, 1) == P("x+y+x^2"));
  CHECK_THROWS_AS(pencil_member(F("x", "y"), 0, 0), Error);
}

TEST_CASE("rationality verdicts") {
  auto a = rationality_verdict(P("x + y + x^2"));
  CHECK(a.kind == K::Rational);
  auto b = rationality_verdict(P("x^2 + x + y^3"));
  CHECK(b.kind == K::NotRational);
  CHECK(b.genus == 1);
  auto c = rationality_verdict(P("x^2 + y^3"));
  CHECK(c.kind == K::Rational);
  // Nodal cubic with the node at the origin.
  auto d = rationality_verdict(P("y^2 - x^2*(x+1)"));
  CHECK(d.kind != K::NotRational);
  auto e = rationality_verdict(P("x^3 + y^3 + 1"));
  CHECK(e.kind == K::NotRational);
  CHECK(e.genus == 1);
  CHECK_THROWS_AS(rationality_verdict(P("x*y")), Error);
  CHECK(newton_nondegenerate(P("x^2 + x + y^3")));
  // Node at (1, 1), inside the torus.
  CHECK(!newton_nondegenerate(P("(y - 1)^2 - x*(x - 1)^2")));
  CHECK(rationality_verdict(P("(y - 1)^2 - x*(x - 1)^2")).kind != K::NotRational);
}

TEST_CASE("scan of the cubic pencil") {
  auto prof = scan_pencil(F("x", "x^2+y^3"), 50);
  CHECK(prof.sampled.size() == 52);
  for (const auto& s : prof.sampled) CHECK(s.r == 1);
  CHECK(prof.generic_r == 1);
  CHECK(prof.specials.empty());
  CHECK(prof.total_reducibility == 0);
  CHECK(prof.complete);
  CHECK(prof.generic_genus.kind == K::NotRational);
  CHECK(prof.generic_genus.genus == 1);
}

TEST_CASE("scan of (xy, x+y)") {
  auto prof = scan_pencil(F("x*y", "x+y"), 50);
  CHECK(prof.generic_r == 1);
  REQUIRE(prof.specials.size() == 1);
  CHECK(prof.specials[0].lambda.to_string() == "(1:0)");
  CHECK(prof.specials[0].r == 2);
  CHECK(prof.total_reducibility == 1);
  CHECK(prof.complete);
  CHECK(prof.generic_genus.kind == K::Rational);
}

TEST_CASE("reducible locus examples") {
  for (auto [p, q] : {std::pair{"x", "y+x^2"}, std::pair{"x", "y^2"}, std::pair{"x", "y"}}) {
    auto locus = reducible_locus_candidates(F(p, q));
    CHECK(locus.complete);
    for (const auto& mc : locus.checked) CHECK(mc.r <= 1);
  }
  auto sq = scan_pencil(F("x", "y^2"), 20);
  CHECK(sq.total_reducibility == 0);
  CHECK(!sq.all_members_reduced);
  // x^2 + sqrt2 y^2 splits into two lines; its conjugate member too.
  auto mc = count_member(F("x^2", "y^2"), PencilParam::root_of(to_qpoly(parse_poly("t^2 - 2", {"t"}), 0)));
  CHECK(mc.r == 2);
  CHECK(mc.reduced);
}

TEST_CASE("scan is seed independent and rejects degenerate pencils") {
  auto a = scan_pencil(F("x*y", "x+y"), 30, 1), b = scan_pencil(F("x*y", "x+y"), 30, 99);
  CHECK(a.generic_r == b.generic_r);
  CHECK(a.total_reducibility == b.total_reducibility);
  CHECK_THROWS_AS(scan_pencil(F("x+y", "2*x+2*y"), 20), Error);
}
