// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "keller/core/errors.hpp"
#include "keller/pencil/gao.hpp"
#include "keller/verify/harness.hpp"

using namespace keller;

namespace {

struct Result {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

CorpusEntry entry(const std::string& name, const std::string& p, const std::string& q) {
  CorpusEntry e;
  e.name = name;
  e.P = p;
  e.Q = q;
  return e;
}

Outcome outcome(const MapReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c.outcome;
  return Outcome::Skipped;
}

const HarnessReport& corpus_report() {
  static const HarnessReport rep = run_corpus(load_corpus(KELLER_CORPUS_FILE), {}, 4);
  return rep;
}

bool computed(const MapReport& m) { return m.status == MapStatus::Ok; }

Result counterexample() {
  Result r;
  PencilMap f = PencilMap::parse("x", "x^2 + y^3");
  auto prof = scan_pencil(f, 50);
  r.require(prof.sampled.size() == 52, "sample count");
  r.require(std::all_of(prof.sampled.begin(), prof.sampled.end(), [](const auto& s) { return s.r == 1; }),
            "some sampled r_lambda != 1");
  r.require(prof.sampled[0].a == 1 && prof.sampled[0].b == 0 && prof.sampled[1].a == 0, "(1:0), (0:1) sampled");
  auto af = nonproper_set(f);
  r.require(af.deg_geo == 3, "deg_geo");
  r.require(af.empty() && af.complete(), "A_F");
  auto p = predicates(f, af.deg_geo, finite_fibres_check(f).finite);
  r.require(p.jacobian == parse_poly("3*y^2"), "Jacobian");
  r.require(p.regular_value == RegularValue::SingularFiber, "origin fibre");
  r.require(!p.invertible, "invertible");
  r.require(prof.generic_genus.kind == RationalityVerdict::Kind::NotRational && prof.generic_genus.genus == 1,
            "generic genus");
  r.note = r.pass ? "r=1 on 52 members, deg_geo=3, A_F empty, J=3*y^2, genus 1" : r.note;
  return r;
}

Result automorphisms() {
  Result r;
  for (auto [p, q] : {std::pair{"x", "y"}, std::pair{"x", "y + x^2"}, std::pair{"y", "x"}, std::pair{"x + y^3", "y"}}) {
    auto m = run_map(entry(std::string(p) + "," + q, p, q));
    const std::string tag = std::string("(") + p + ", " + q + "): ";
    r.require(m.theorem2.applicable && m.theorem2.a && m.theorem2.b && m.theorem2.c, tag + "a=b=c");
    r.require(m.deg_geo == 1, tag + "deg_geo");
    r.require(m.a_f == "∅", tag + "A_F");
    r.require(outcome(m, "reducibility_count") == Outcome::Pass && m.doc["pencil"]["total_reducibility"] == 0 &&
                  *m.h_infinity + *m.sum_h_b - 2 == 0,
              tag + "reducibility count");
    r.require(outcome(m, "two_horizontal") == Outcome::Pass && m.doc["resolution"]["h_G"] == 2, tag + "two horizontal components");
    r.require(m.situation == "ii" && m.doc["resolution"]["base_points"]["affine"].size() == 1, tag + "situation");
  }
  if (r.pass) r.note = "4 maps: a=b=c, deg_geo=1, A_F empty, 0 = 1 + 1 - 2, h_G=2, situation (ii)";
  return r;
}

Result reducible_member() {
  Result r;
  auto m = run_map(entry("ps", "x*y", "x + y"));
  const int tr = m.doc["pencil"]["total_reducibility"];
  r.require(tr == 1, "total_reducibility " + std::to_string(tr));
  r.require(*m.h_infinity + *m.sum_h_b == 3, "h sum");
  r.require(outcome(m, "reducibility_count") == Outcome::Pass, "reducibility check");
  if (r.pass)
    r.note = "total_reducibility=1, h_inf + sum h_b = " + std::to_string(*m.h_infinity) + " + " +
             std::to_string(*m.sum_h_b);
  return r;
}

Result cross_oracle() {
  Result r;
  for (auto [p, q] : {std::pair{"x", "y*(x*y - 1)"}, std::pair{"x", "x^2 + y^3"}, std::pair{"x", "y"},
                      std::pair{"x", "y + x^2"}, std::pair{"y", "x"}, std::pair{"x + y^3", "y"},
                      std::pair{"x*y", "x + y"}}) {
    PencilMap f = PencilMap::parse(p, q);
    auto tree = resolve_pencil(f);
    auto af = nonproper_set(f);
    std::set<std::string> a, b;
    for (const auto& c : tree.components)
      if (c.dicritical) a.insert(c.image.normalized().to_string());
    for (const auto& c : af.components) b.insert(c.poly.normalized().to_string());
    r.require(af.complete() && a == b, std::string("(") + p + ", " + q + ") sets differ");
  }
  PencilMap f = PencilMap::parse("x", "y*(x*y - 1)");
  auto tree = resolve_pencil(f);
  auto af = nonproper_set(f);
  r.require(af.components.size() == 1 && af.components[0].poly == parse_poly("u", {"u", "v"}), "A_F is u = 0");
  r.require(af.components.size() == 1 && af.components[0].is_line_through_origin, "line through origin");
  auto pred = predicates(f, af.deg_geo, true);
  auto v = theorem4_ratio_check(f, tree, af, pred.keller);
  r.require(v.size() == 1 && v[0].forbids_keller && v[0].consistent && !pred.jacobian.is_constant(),
            "Theorem 4 contrapositive");
  if (r.pass) r.note = "7 maps equal; (x, y(xy-1)) gives u = 0 through the origin, J non-constant";
  return r;
}

Result fibre_sums() {
  Result r;
  int maps = 0, excluded = 0;
  for (const auto& m : corpus_report().maps) {
    if (!m.finite.value_or(false)) continue;
    if (!computed(m)) {
      ++excluded;
      continue;
    }
    ++maps;
    r.require(outcome(m, "fibre_sum") == Outcome::Pass, m.name + " fibre sum");
  }
  r.require(maps > 0, "no maps");
  if (r.pass)
    r.note = std::to_string(maps) + " finite-fibre maps, 10 values off A_F each, every A_F component deficient (" +
             std::to_string(excluded) + " cap-exceeding stress maps not computable)";
  return r;
}

Result suzuki() {
  Result r;
  int n = 0;
  for (const auto& m : corpus_report().maps) {
    if (!m.doc.contains("pencil")) continue;
    const auto& p = m.doc["pencil"];
    if (p["generic_r"] != 1 || p["generic_genus"]["verdict"] != "Rational") continue;
    ++n;
    r.require(outcome(m, "suzuki") == Outcome::Pass, m.name + " Suzuki");
  }
  r.require(n >= 4, "only " + std::to_string(n) + " maps certified");
  if (r.pass) r.note = "both sides equal on " + std::to_string(n) + " maps with a certified rational generic member";
  return r;
}

Result lemma2() {
  Result r;
  int n = 0, origin = 0;
  for (const auto& m : corpus_report().maps) {
    if (!m.doc.contains("resolution")) continue;
    ++n;
    r.require(outcome(m, "lemma2a") == Outcome::Pass, m.name + " IIa");
    const Outcome b = outcome(m, "lemma2b");
    r.require(b != Outcome::Fail, m.name + " IIb");
    if (b == Outcome::Pass) ++origin;
    r.require(outcome(m, "lemma2c") == Outcome::Pass, m.name + " dicritical");
  }
  r.require(origin > 0, "no map with (0,0) in A_F");
  if (r.pass)
    r.note = std::to_string(n) + " resolved maps have IIa; " + std::to_string(origin) +
             " maps with (0,0) in A_F, each with IIb; dicriticals horizontal or lines through 0";
  return r;
}

Result gao_counts() {
  Result r;
  const std::vector<std::string> V{"x", "y"};
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> c(-5, 5), pick(0, 5);
  auto nz = [&] {
    int k;
    do k = c(rng);
    while (k == 0);
    return Rational(k);
  };
  auto P = [&](const std::string& s) { return parse_poly(s, V); };
  const MultiPoly x = P("x"), y = P("y");
  auto one = MultiPoly::constant(V, 1);
  // Factor families with known absolute counts.
  auto factor = [&]() -> std::pair<MultiPoly, int> {
    switch (pick(rng)) {
      case 0: return {x * nz() + y * Rational(c(rng)) + one * Rational(c(rng)), 1};
      case 1: return {y - (x.pow(2) * nz() + x * Rational(c(rng)) + one * Rational(c(rng))), 1};
      case 2: return {x - (y.pow(3) * nz() + one * Rational(c(rng))), 1};
      case 3: return {y.pow(2) - x.pow(3) - one * nz(), 1};
      case 4: {
        // Two conjugate lines through (a, b).
        MultiPoly u = x - one * Rational(c(rng)), v = y - one * Rational(c(rng));
        return {u.pow(2) + v.pow(2), 2};
      }
      default: return {x.pow(3) - y.pow(3) * Rational(2), 3};
    }
  };
  int cases = 0;
  const int xy = absolute_factor_count(P("x^2 + y^2"));
  r.require(xy == 2, "x^2 + y^2 counted " + std::to_string(xy));
  ++cases;
  while (cases < 20) {
    const int k = 1 + (cases % 3);
    std::vector<MultiPoly> fs;
    int expect = 0, deg = 0;
    while (static_cast<int>(fs.size()) < k) {
      auto [g, n] = factor();
      if (deg + g.total_degree() > 6) continue;
      if (std::any_of(fs.begin(), fs.end(), [&](const auto& h) { return h.normalized() == g.normalized(); })) continue;
      fs.push_back(g);
      expect += n;
      deg += g.total_degree();
      if (static_cast<int>(fs.size()) < k && deg >= 6) break;
    }
    if (static_cast<int>(fs.size()) < k) continue;
    MultiPoly prod = one;
    for (const auto& g : fs) prod = prod * g;
    const int got = absolute_factor_count(prod);
    r.require(got == expect, prod.to_string() + ": " + std::to_string(got) + " != " + std::to_string(expect));
    ++cases;
  }
  if (r.pass) r.note = "20 products of 1-3 factors (degree <= 6) counted exactly, x^2 + y^2 -> 2";
  return r;
}

Result determinism() {
  Result r;
  auto corpus = load_corpus(KELLER_CORPUS_FILE);
  const std::string a = to_json(run_corpus(corpus, {}, 1)).dump(2);
  const std::string b = to_json(run_corpus(corpus, {}, 4)).dump(2);
  r.require(a == b, "reports differ");
  auto s = run_map(entry("stress", "x", "y^9 - x - 2"));
  r.require(s.exit_code() == 3, "stress exit " + std::to_string(s.exit_code()));
  r.require(s.offending == "t^9 - 2", "offending polynomial '" + s.offending + "'");
  if (r.pass) r.note = "byte-identical reports (" + std::to_string(a.size()) + " bytes); stress map exits 3 naming t^9 - 2";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"counterexample (x, x^2 + y^3)", counterexample},
      {"automorphism suite", automorphisms},
      {"reducibility count with a reducible member", reducible_member},
      {"non-proper set cross-oracle", cross_oracle},
      {"fibre sums", fibre_sums},
      {"Suzuki identity", suzuki},
      {"Lemma 2 suite", lemma2},
      {"absolute factor counting", gao_counts},
      {"determinism and cap failure", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.note = std::string("exception: ") + e.what();
    }
    failed += !r.pass;
    std::printf("criterion %zu %s: %s: %s\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first, r.note.c_str());
  }
  return failed == 0 ? 0 : 1;
}
