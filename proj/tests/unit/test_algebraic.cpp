#include <doctest.h>

#include <random>

#include "keller/core/algebraic.hpp"
#include "keller/core/errors.hpp"

using namespace keller;

namespace {

QPoly Q(const char* s) { return to_qpoly(parse_poly(s, {"t"}), 0); }

ComplexBox real_box(Rational lo, Rational hi) { return {{lo, hi}, {0, 0}}; }

// Oracle: expand Res_s(s^2 - 2, (t - s)^2 - 3) by eliminating s by hand.
// (t-s)^2 - 3 = t^2 - 2ts + s^2 - 3 = t^2 - 2ts - 1 modulo s^2 = 2, so
// s = (t^2 - 1) / (2t) and ((t^2 - 1)/(2t))^2 = 2 gives t^4 - 10 t^2 + 1.
QPoly sum_oracle() { return Q("t^4 - 10*t^2 + 1"); }

}  // namespace

TEST_CASE("algebraic arithmetic examples") {
  auto r2 = AlgebraicNumber::in_box(Q("t^2 - 2"), real_box(Rational(13, 10), Rational(15, 10)));
  auto r3 = AlgebraicNumber::in_box(Q("t^2 - 3"), real_box(Rational(16, 10), Rational(18, 10)));
  CHECK((r2 + (-r2)).is_zero());
  CHECK((r2 * r2) == AlgebraicNumber(Rational(2)));

  auto s = r2 + r3;
  CHECK(s.min_poly() == sum_oracle());
  CHECK(s.is_real());
  CHECK(s.box().re.lo > Rational(3146, 1000));
  CHECK(s.box().re.hi < Rational(3147, 1000));

  auto q = r2 / r3;  // sqrt(6)/3
  CHECK(q.min_poly() == Q("t^2 - 2/3"));
  CHECK(q.approx_re() == doctest::Approx(0.8164965809));
  CHECK_THROWS_AS(AlgebraicNumber(Rational(0)).inverse(), Error);
}

TEST_CASE("complex algebraic numbers") {
  auto i = AlgebraicNumber::root_of(Q("t^2 + 1"), 0);
  CHECK(!i.is_real());
  CHECK(i.approx_im() == doctest::Approx(1.0));
  CHECK((i * i) == AlgebraicNumber(Rational(-1)));
  auto w = AlgebraicNumber::root_of(Q("t^2 + t + 1"), 0);
  CHECK((w * w * w) == AlgebraicNumber(Rational(1)));
  CHECK(!(w == AlgebraicNumber::root_of(Q("t^2 + t + 1"), 1)));
  CHECK((w + i).degree() == 4);
}

TEST_CASE("degree cap on algebraic operations") {
  auto a = AlgebraicNumber::root_of(Q("t^3 - 2"), 0);
  auto b = AlgebraicNumber::root_of(Q("t^3 - 3"), 0);
  auto c = AlgebraicNumber::root_of(Q("t^2 - 5"), 0);
  CHECK_THROWS_AS(a + b + c, DegreeCapError);
  CHECK_THROWS_AS(AlgebraicNumber::root_of(Q("t^9 - 2"), 0), DegreeCapError);
}

TEST_CASE("arithmetic agrees with interval arithmetic on isolating boxes") {
  std::vector<AlgebraicNumber> pool{
      AlgebraicNumber::root_of(Q("t^2 - 2"), 1), AlgebraicNumber::root_of(Q("t^2 + 1"), 0),
      AlgebraicNumber::root_of(Q("t^3 - t - 1"), 0), AlgebraicNumber(Rational(-3, 2)),
      AlgebraicNumber::root_of(Q("t^2 - 3"), 0)};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const int op = trial % 3;
    if (op == 2 && b.is_zero()) continue;
    AlgebraicNumber r = op == 0 ? a + b : op == 1 ? a * b : a / b;
    const int bits = 96;
    AlgebraicNumber ar = a.refined(bits), br = b.refined(bits), rr = r.refined(bits);
    ComplexBox enc = op == 0 ? ar.box() + br.box() : op == 1 ? ar.box() * br.box()
                                                             : ar.box() * inverse(br.box());
    CHECK(rr.box().intersects(enc));
    // The result box is a genuine root of the claimed minimal polynomial.
    CHECK(evaluate(rr.min_poly(), rr.box()).contains_zero());
  }
}

TEST_CASE("embedding field elements") {
  FieldPtr K = make_field(Q("t^2 - 2"));
  auto g = AlgebraicNumber::root_of(Q("t^2 - 2"), 1);  // +sqrt2
  auto e = embed(KElem(K, Q("t + 1")), g);
  CHECK(e.min_poly() == Q("t^2 - 2*t - 1"));
  CHECK(e.approx_re() == doctest::Approx(2.41421356));
}
