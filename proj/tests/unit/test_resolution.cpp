#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"
#include "keller/resolve/resolution.hpp"

using namespace keller;

namespace {

PencilMap F(const char* p, const char* q) { return PencilMap::parse(p, q); }
MultiPoly C(const char* s) { return parse_poly(s, kChartVars); }

// Degree-matched homogenizations evaluated at (x : y : 0).
Rational at_infinity(const MultiPoly& p, int d, const Rational& x, const Rational& y) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] == d) {
      Rational t = c;
      for (int i = 0; i < e[0]; ++i) t *= x;
      for (int j = 0; j < e[1]; ++j) t *= y;
      s += t;
    }
  return s;
}

// Independent check that the section pair has no common zero in the chart's
// scope: resultant in v over Q[a], reduced modulo the field.
bool base_point_free(const Chart& c) {
  const auto& g = c.pairs[0];
  if (c.scope == Chart::Scope::Affine) return true;
  if (c.scope == Chart::Scope::Origin) {
    MultiPoly n = g.num.evaluate(0, 0).evaluate(1, 0), d = g.den.evaluate(0, 0).evaluate(1, 0);
    auto nz = [&](const MultiPoly& p) {
      if (p.is_zero()) return false;
      return !c.field || !(to_qpoly(p, 2) % c.field->min_poly()).is_zero();
    };
    return nz(n) || nz(d);
  }
  MultiPoly n = g.num.evaluate(0, 0), d = g.den.evaluate(0, 0);
  if (n.is_zero()) return d.degree(1) == 0;
  if (d.is_zero()) return n.degree(1) == 0;
  MultiPoly r = resultant(n, d, 1);
  if (!c.field) return !r.is_zero();
  return !(to_qpoly(r, 2) % c.field->min_poly()).is_zero();
}

int connected_pieces(const ResolutionTree& t) {
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (const auto& c : t.components) parent[c.id] = c.id;
  for (const auto& [a, b] : t.edges) parent[find(a)] = find(b);
  std::set<int> roots;
  for (const auto& c : t.components) roots.insert(find(c.id));
  return static_cast<int>(roots.size());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(KELLER_GOLDEN_DIR) + "/" + name;
  if (std::getenv("KELLER_UPDATE_GOLDEN")) std::ofstream(path) << text;
  CHECK(read_file(path) == text);
}

}  // namespace

TEST_CASE("base points") {
  auto a = base_points(F("x", "y"));
  REQUIRE(a.affine.size() == 1);
  CHECK(a.affine[0].u.is_zero());
  CHECK(a.affine[0].v.is_zero());
  CHECK(a.at_infinity.empty());

  auto b = base_points(F("x*y", "x+y"));
  CHECK(b.affine.size() == 1);
  REQUIRE(b.at_infinity.size() == 2);
  // (1:0:0) and (0:1:0) kill both top forms; (1:1:0) does not.
  const MultiPoly P = parse_poly("x*y"), Q = parse_poly("x+y");
  CHECK(at_infinity(P, 2, 1, 0) == 0);
  CHECK(at_infinity(P, 2, 0, 1) == 0);
  CHECK(at_infinity(P, 2, 1, 1) != 0);
  CHECK(b.at_infinity[0].chart == "x=1");
  CHECK(b.at_infinity[1].chart == "y=1");

  auto c = base_points(F("x", "x^2+y^3"));
  CHECK(c.affine.size() == 1);
  REQUIRE(c.at_infinity.size() == 1);
  CHECK(c.at_infinity[0].chart == "x=1");
  CHECK(c.at_infinity[0].v.is_zero());
  // x z^2 and x^2 z + y^3 at (1:0:0).
  CHECK(at_infinity(parse_poly("x^2+y^3"), 3, 1, 0) == 0);

  auto d = base_points(F("x^2-2", "y"));
  REQUIRE(d.affine.size() == 1);
  CHECK(d.affine[0].orbit_size == 2);
  auto e = d.affine[0].embedded();
  CHECK(e[0].min_poly() == QPoly(std::vector<Rational>{-2, 0, 1}));
  CHECK(e[1].is_zero());

  CHECK_THROWS_AS(base_points(F("x*y", "x^2")), Error);
  try {
    base_points(F("x", "y^9-x-2"));
    FAIL("expected the degree cap");
  } catch (const DegreeCapError& err) {
    CHECK(err.min_poly() == "t^9 - 2");
  }
}

TEST_CASE("one blow-up of the identity") {
  WorkingSurface s(F("x", "y"));
  auto pts = s.indeterminacy_points();
  REQUIRE(pts.size() == 1);
  auto bad = pts[0];
  bad.v0 = KElem(1);
  bad.point.v = KElem(1);
  CHECK_THROWS_AS(s.blowup_once(bad), Error);
  s.blowup_once(pts[0]);
  CHECK(s.base_point_free());
  const Chart& c = s.charts()[3];
  CHECK(c.name == "E1:1");
  CHECK(c.pairs[0].num == C("1"));
  CHECK(c.pairs[0].den == C("v"));
  CHECK(c.pairs[0].divided == 1);
  const DivisorComponent& e = s.components()[1];
  CHECK(!e.g_constant);
  CHECK(e.type == TypeLabel::I);
  CHECK(e.p_value == ValueKind::Zero);
  CHECK(e.q_value == ValueKind::Zero);
  const DivisorComponent& l = s.components()[0];
  CHECK(l.line_at_infinity);
  CHECK(l.type == TypeLabel::IIa);
  CHECK(l.p_value == ValueKind::Infinity);
}

TEST_CASE("blow-up charts for (x, y + x^2) and (x, x^2 + y^3)") {
  WorkingSurface s(F("x", "y+x^2"));
  s.blowup_once(s.indeterminacy_points()[0]);
  const Chart& c = s.charts()[3];
  CHECK(c.pairs[0].num == C("1"));
  CHECK(c.pairs[0].den == C("v+u"));
  CHECK(!s.components()[1].g_constant);

  WorkingSurface t(F("x", "x^2+y^3"));
  t.blowup_once(t.indeterminacy_points()[0]);
  const Chart& a = t.charts()[3];
  CHECK(a.pairs[0].num == C("1"));
  CHECK(a.pairs[0].den == C("u+u^2*v^3"));
  CHECK(t.components()[1].g_constant);
  const Chart& b = t.charts()[4];
  CHECK(b.pairs[0].num == C("u"));
  CHECK(b.pairs[0].den == C("u^2*v+v^2"));
  CHECK(!t.base_point_free());
}

TEST_CASE("counts on small maps") {
  auto id = resolve_pencil(F("x", "y"));
  CHECK(id.h_infinity == 1);
  REQUIRE(id.h_b.size() == 1);
  CHECK(id.h_b[0] == 1);
  CHECK(id.h_G == 2);
  CHECK(id.m == 2);
  CHECK(id.m_lambda.empty());

  // (0:1:0) is a base point at infinity, so L lies in the fibre of x and
  // three more curves over it are needed: m = 5, all in that fibre.
  auto sh = resolve_pencil(F("x", "y+x^2"));
  CHECK(sh.h_infinity == 1);
  CHECK(sh.h_b[0] == 1);
  CHECK(sh.h_G == 2);
  CHECK(sh.m == 5);
  REQUIRE(sh.m_lambda.size() == 1);
  CHECK(sh.m_lambda[0].lambda == PencilParam::from_ratio(1, 0));
  CHECK(sh.m_lambda[0].m_lambda == 3);

  auto xy = resolve_pencil(F("x*y", "x+y"));
  CHECK(xy.h_infinity + xy.h_b[0] == 3);
  auto fc = fiber_component_counts(xy);
  CHECK(fc.balanced);
  CHECK(fc.m - 3 == fc.sum_m_lambda);

  // Conjugate base points (+-sqrt 2, 0): one orbit, h_G = h_inf + 2 h_b.
  auto conj = resolve_pencil(F("x^2-2", "y"));
  CHECK(conj.h_b[0] == 1);
  CHECK(conj.h_G == 3);
  CHECK(fiber_component_counts(conj).balanced);
}

TEST_CASE("dicritical component of (x, y(xy - 1))") {
  auto t = resolve_pencil(F("x", "y*(x*y-1)"));
  int dicritical = 0, iib = 0;
  for (const auto& c : t.components) {
    if (c.type == TypeLabel::IIb) ++iib;
    if (!c.dicritical) continue;
    ++dicritical;
    CHECK(c.over_infinity());
    CHECK(c.image == parse_poly("u", {"u", "v"}));
    CHECK(c.image_line_through_origin);
    CHECK(c.p_value == ValueKind::Zero);
    CHECK(c.q_value == ValueKind::NonConstant);
    CHECK(c.deg_p == 0);
  }
  CHECK(dicritical == 1);
  CHECK(iib >= 1);
  CHECK(t.h_G == 3);

  // (xy - 1, x) is not proper over v = 0.
  auto s = resolve_pencil(F("x*y-1", "x"));
  std::set<std::string> images;
  for (const auto& c : s.components)
    if (c.dicritical) images.insert(c.image.to_string());
  CHECK(images == std::set<std::string>{"v"});
}

TEST_CASE("tree invariants on the corpus maps") {
  const std::vector<std::pair<const char*, const char*>> maps = {
      {"x", "y"},          {"x", "y+x^2"},  {"y", "x"},         {"x+y^3", "y"},
      {"x", "x^2+y^3"},    {"x", "y^2"},    {"x*y", "x+y"},     {"x", "y*(x*y-1)"},
      {"x^2+y^2-1", "x-y"}, {"x^2+1", "y"}, {"x+y^2", "y+(x+y^2)^2"}};
  for (const auto& [p, q] : maps) {
    CAPTURE(std::string(p));
    CAPTURE(std::string(q));
    WorkingSurface s(F(p, q));
    while (!s.base_point_free()) s.blowup_once(s.indeterminacy_points().front());
    std::map<std::string, int> blown;  // chart name -> conjugate centers blown up there
    for (const auto& b : s.blowups()) blown[b.center.chart] += b.center.orbit_size;
    for (const auto& c : s.charts()) {
      if (!blown.count(c.name)) {
        CHECK(base_point_free(c));
      } else if (c.scope == Chart::Scope::Axis && !c.field) {
        MultiPoly h = gcd_poly(c.pairs[0].num.evaluate(0, 0), c.pairs[0].den.evaluate(0, 0));
        CHECK(squarefree_part(h).total_degree() == blown[c.name]);
      }
    }
    // Ledger: re-multiplying the divided power reconstructs the raw pullback.
    for (const auto& c : s.charts())
      for (const auto& pr : c.pairs) {
        if (c.boundary_var < 0) continue;
        Exponents e(3, 0);
        e[c.boundary_var] = pr.divided;
        MultiPoly w = MultiPoly::monomial(kChartVars, e, 1);
        CHECK(pr.num * w == pr.raw_num);
        CHECK(pr.den * w == pr.raw_den);
      }
    auto t = s.finish();
    CHECK(t.blowups.size() <= 12);
    CHECK(t.h_infinity >= 1);
    for (int h : t.h_b) CHECK(h >= 1);
    int hg = t.h_infinity;
    for (std::size_t b = 0; b < t.h_b.size(); ++b) hg += t.h_b[b] * t.base.affine[b].orbit_size;
    CHECK(t.h_G == hg);
    CHECK(fiber_component_counts(t).balanced);
    CHECK(connected_pieces(t) == 1 + static_cast<int>(t.base.affine.size()));
    bool has_iia = false;
    for (const auto& c : t.components) {
      if (c.type == TypeLabel::IIa) has_iia = true;
      CHECK((c.type == TypeLabel::NotHorizontal) == c.g_constant);
      if (c.type == TypeLabel::I) CHECK(!c.over_infinity());
      if (c.dicritical) CHECK((c.horizontal() || c.image_line_through_origin));
    }
    CHECK(has_iia);
  }
}

TEST_CASE("counts do not depend on the blow-up order") {
  for (const auto& [p, q] : std::vector<std::pair<const char*, const char*>>{
           {"x*y", "x+y"}, {"x", "y*(x*y-1)"}, {"x", "x^2+y^3"}, {"x^2+y^2-1", "x-y"}}) {
    CAPTURE(std::string(p));
    ResolveOptions rev;
    rev.reverse_order = true;
    auto a = resolve_pencil(F(p, q)), b = resolve_pencil(F(p, q), rev);
    CHECK(a.h_infinity == b.h_infinity);
    CHECK(a.h_b == b.h_b);
    CHECK(a.h_G == b.h_G);
    CHECK(a.m == b.m);
  }
}

TEST_CASE("determinism and budget") {
  auto a = resolve_pencil(F("x", "y*(x*y-1)")), b = resolve_pencil(F("x", "y*(x*y-1)"));
  CHECK(dual_graph_json(a) == dual_graph_json(b));
  ResolveOptions tight;
  tight.max_blowups = 2;
  try {
    resolve_pencil(F("x", "x^2+y^3"), tight);
    FAIL("expected the budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BlowupBudgetExceeded);
  }
}

TEST_CASE("Euler bookkeeping") {
  auto check = [](const char* p, const char* q) {
    PencilMap f = F(p, q);
    return euler_bookkeeping(resolve_pencil(f), scan_pencil(f));
  };
  auto a = check("x", "y");
  CHECK(a.left == 0);
  CHECK(a.right == 0);
  CHECK(a.pass);
  auto b = check("x", "y+x^2");
  CHECK(b.pass);
  CHECK(check("x*y", "x+y").pass);
  CHECK(check("x", "y*(x*y-1)").pass);
  CHECK(check("x^2+y^2-1", "x-y").pass);
  try {
    check("x", "x^2+y^3");
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisNotCertified);
  }
}

TEST_CASE("dual graph goldens") {
  check_golden("dual_identity.json", dual_graph_json(resolve_pencil(F("x", "y"))));
  check_golden("dual_shear.json", dual_graph_json(resolve_pencil(F("x", "y+x^2"))));
  check_golden("dual_xy.json", dual_graph_json(resolve_pencil(F("x*y", "x+y"))));
  check_golden("dual_identity.dot", dual_graph_dot(resolve_pencil(F("x", "y"))));
  auto xy = resolve_pencil(F("x*y", "x+y"));
  int horizontal = 0;
  for (const auto& c : xy.components) horizontal += c.horizontal();
  CHECK(horizontal >= 3);
}
