#include "keller/pencil/pencil.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"
#include "keller/core/factor.hpp"
#include "keller/core/linalg.hpp"
#include "keller/pencil/gao.hpp"

namespace keller {

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYT{"x", "y", "t"};

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return true;
  return p * q.leading_coefficient() == q * p.leading_coefficient();
}

}  // namespace

PencilMap::PencilMap(MultiPoly p, MultiPoly q) : P(p.with_vars(kXY)), Q(q.with_vars(kXY)) {
  if (P.is_constant() && Q.is_constant())
    throw Error(ErrorKind::DegeneratePencil, "both components are constant");
  degP = std::max(P.total_degree(), 0);
  degQ = std::max(Q.total_degree(), 0);
}

PencilMap PencilMap::parse(std::string_view p, std::string_view q) {
  return PencilMap(parse_poly(p, kXY), parse_poly(q, kXY));
}

std::string PencilMap::to_string() const { return "(" + P.to_string() + ", " + Q.to_string() + ")"; }

PencilParam PencilParam::from_ratio(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::InvalidProjectivePoint, "(0:0) is not a point of P^1");
  PencilParam p;
  if (a == 0) {
    p.at_q = true;
    return p;
  }
  p.min_poly = QPoly(std::vector<Rational>{-b / a, Rational(1)});
  return p;
}

PencilParam PencilParam::root_of(const QPoly& irreducible) {
  PencilParam p;
  p.min_poly = irreducible.monic();
  return p;
}

Rational PencilParam::t() const {
  if (at_q || min_poly.degree() != 1) throw Error(ErrorKind::InvalidArgument, "parameter is not a rational t");
  return -min_poly.coeff(0);
}

std::string PencilParam::to_string() const {
  if (at_q) return "(0:1)";
  if (min_poly.degree() == 1) return "(1:" + keller::to_string(t()) + ")";
  return "(1:t) with " + from_qpoly(min_poly, {"t"}).to_string() + " = 0";
}

MultiPoly pencil_member(const PencilMap& f, const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::InvalidProjectivePoint, "(0:0) is not a point of P^1");
  return f.P * a + f.Q * b;
}

MemberCount count_member(const PencilMap& f, const PencilParam& lambda) {
  MemberCount mc{lambda, 0, true};
  MultiPoly g;
  if (lambda.at_q) {
    g = f.Q;
  } else if (lambda.min_poly.degree() == 1) {
    g = pencil_member(f, 1, lambda.t());
  } else {
    // Norm of P + t Q over Q(t): the union of the conjugate members.
    MultiPoly ft = f.P.with_vars(kXYT) + f.Q.with_vars(kXYT) * MultiPoly::variable(kXYT, "t");
    g = resultant(from_qpoly(lambda.min_poly, kXYT, 2), ft, 2).with_vars(kXY);
  }
  if (g.is_constant()) return mc;
  MultiPoly sf = squarefree_part(g);
  mc.reduced = sf.total_degree() == g.total_degree();
  const int total = absolute_factor_count(sf);
  if (total % lambda.orbit_size() != 0)
    throw Error(ErrorKind::InstabilityDetected, "conjugate members have unequal component counts");
  mc.r = total / lambda.orbit_size();
  return mc;
}

namespace {

// Top-degree coefficient of x after the shear, as a constant.
Rational x_leading(const MultiPoly& p, int m) {
  auto cs = p.coefficients_in(0);
  if (static_cast<int>(cs.size()) <= m) return 0;
  const MultiPoly& c = cs[m];
  if (!c.is_constant()) throw Error(ErrorKind::InvalidArgument, "sheared leading coefficient not constant");
  return c.constant_term();
}

std::vector<std::vector<Integer>> dense(const GaoSystem& s, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> where(s.unknowns, -1);
  for (std::size_t j = 0; j < cols.size(); ++j) where[cols[j]] = static_cast<int>(j);
  std::vector<std::vector<Integer>> m(rows.size(), std::vector<Integer>(cols.size(), Integer(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : s.rows[rows[i]])
      if (where[c] >= 0) m[i][where[c]] = v;
  return m;
}

// rows/cols of a nonsingular (N-1)-minor of A + t0 B modulo p, or false.
bool pick_minor(const GaoSystem& a, const GaoSystem& b, long t0, bool reverse_cols, std::vector<int>* rows,
                std::vector<int>* cols) {
  const std::uint64_t p = large_primes(1)[0];
  const int n = a.unknowns;
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = reverse_cols ? n - 1 - j : j;
  std::vector<std::vector<std::uint64_t>> m(a.equations, std::vector<std::uint64_t>(n, 0));
  const std::uint64_t tm = mod_of(Integer(t0), p);
  for (int i = 0; i < a.equations; ++i) {
    for (const auto& [c, v] : a.rows[i]) m[i][order[c]] = (m[i][order[c]] + mod_of(v, p)) % p;
    for (const auto& [c, v] : b.rows[i])
      m[i][order[c]] = static_cast<std::uint64_t>((m[i][order[c]] + static_cast<unsigned __int128>(mod_of(v, p)) * tm) % p);
  }
  std::vector<int> pc;
  if (rank_mod(std::move(m), p, rows, &pc) != n - 1) return false;
  cols->clear();
  for (int c : pc) cols->push_back(order[c]);
  std::sort(cols->begin(), cols->end());
  return true;
}

QPoly minor_poly(const GaoSystem& a, const GaoSystem& b, const std::vector<int>& rows, const std::vector<int>& cols) {
  auto d = det_linear_pencil(dense(a, rows, cols), dense(b, rows, cols));
  std::vector<Rational> c;
  for (const auto& v : d) c.emplace_back(v);
  return QPoly(std::move(c));
}

}  // namespace

ReducibleLocus reducible_locus_candidates(const PencilMap& f) {
  ReducibleLocus out;
  if (proportional(f.P, f.Q)) throw Error(ErrorKind::DegeneratePencil, "P and Q are proportional");
  if (MultiPoly g = gcd_poly(f.P, f.Q); !g.is_constant())
    throw Error(ErrorKind::DegeneratePencil, "every member contains " + g.normalized().to_string() + " = 0");
  const int d = f.degree();

  // Shear so that both sections have constant x-leading coefficients.
  Rational c = 0;
  bool found = false;
  for (int k = 0; k < 64 && !found; ++k) {
    c = k % 2 ? Rational((k + 1) / 2) : Rational(-(k / 2));
    MultiPoly ps = shear(f.P, c), qs = shear(f.Q, c);
    found = (f.degP == 0 || ps.degree(0) == f.degP) && (f.degQ == 0 || qs.degree(0) == f.degQ);
  }
  MultiPoly ps = shear(f.P, c).with_vars(kXYT), qs = shear(f.Q, c).with_vars(kXYT);
  Integer scale = 1;
  for (const auto* p : {&ps, &qs})
    for (const auto& [e, v] : p->terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  ps *= Rational(scale);
  qs *= Rational(scale);
  MultiPoly t = MultiPoly::variable(kXYT, "t");
  MultiPoly ft = ps + qs * t;
  const int m = d, n = ft.degree(1);

  std::vector<QPoly> pieces;
  // x-degree drop: the x^d coefficient a + b t vanishes.
  {
    Rational a = x_leading(ps, m), b = x_leading(qs, m);
    if (b != 0) pieces.emplace_back(std::vector<Rational>{a, b});
  }
  // y-degree drop: the y^n coefficient c_P(x) + t c_Q(x) vanishes identically.
  {
    auto cp = ps.coefficients_in(1), cq = qs.coefficients_in(1);
    MultiPoly yp = static_cast<int>(cp.size()) > n ? cp[n] : MultiPoly(kXYT);
    MultiPoly yq = static_cast<int>(cq.size()) > n ? cq[n] : MultiPoly(kXYT);
    if (!yq.is_zero()) {
      if (yp.is_zero()) pieces.emplace_back(std::vector<Rational>{0, 1});
      else if (proportional(yp, yq)) {
        Rational k = yp.leading_coefficient() / yq.leading_coefficient();
        pieces.emplace_back(std::vector<Rational>{k, 1});
      }
    }
  }
  // Members where gcd(f_t, d f_t / dx) is non-trivial.
  MultiPoly disc = resultant(ft, ft.derivative(0), 0);
  if (disc.is_zero()) {
    out.note = "generic member is not squarefree";
    return out;
  }
  pieces.push_back(to_qpoly(content_in(disc, 1), 2));

  // Members where the Gao kernel grows: common roots of two maximal minors.
  GaoSystem ga = gao_system(ps.with_vars(kXY), m, n);
  GaoSystem gb = gao_system(qs.with_vars(kXY), m, n);
  std::vector<QPoly> minors;
  const long probes[] = {7919, 104729, 1299709, 15485863};
  for (int which = 0; which < 2; ++which) {
    std::vector<int> rows, cols;
    bool ok = false;
    for (long t0 : probes) {
      if (!pick_minor(ga, gb, t0, which == 1, &rows, &cols)) continue;
      // Certify the generic rank exactly at the probe.
      std::vector<SparseRow> exact;
      for (int i = 0; i < ga.equations; ++i) {
        std::map<int, Integer> acc;
        for (const auto& [cc, v] : ga.rows[i]) acc[cc] += v;
        for (const auto& [cc, v] : gb.rows[i]) acc[cc] += v * t0;
        SparseRow r;
        for (auto& [cc, v] : acc)
          if (v != 0) r.emplace_back(cc, v);
        exact.push_back(std::move(r));
      }
      if (exact_rank(std::move(exact)) != ga.unknowns - 1) continue;
      ok = true;
      break;
    }
    if (!ok) {
      out.note = "generic member is not absolutely irreducible";
      return out;
    }
    minors.push_back(minor_poly(ga, gb, rows, cols));
  }
  QPoly delta = gcd(minors[0], minors[1]);
  if (delta.is_zero()) throw Error(ErrorKind::InstabilityDetected, "vanishing Gao minor");
  pieces.push_back(delta);

  QPoly all = QPoly::constant(1);
  for (const auto& p : pieces)
    if (!p.is_zero() && p.degree() > 0) all = all * p;
  std::vector<PencilParam> cands;
  if (all.degree() > 0)
    for (const auto& [q, mult] : factor_qpoly(squarefree_part(all))) {
      if (q.degree() > kDefaultDegreeCap) {
        out.unresolved.push_back(from_qpoly(q, {"t"}).to_string());
        continue;
      }
      cands.push_back(PencilParam::root_of(q));
    }
  PencilParam at_q;
  at_q.at_q = true;
  cands.push_back(at_q);
  for (const auto& l : cands) out.checked.push_back(count_member(f, l));
  out.complete = out.unresolved.empty();
  return out;
}

PencilProfile scan_pencil(const PencilMap& f, int n_samples, std::uint64_t seed) {
  if (n_samples < 20) throw Error(ErrorKind::InvalidArgument, "scan needs at least 20 samples");
  if (proportional(f.P, f.Q)) throw Error(ErrorKind::DegeneratePencil, "P and Q are proportional");
  if (MultiPoly g = gcd_poly(f.P, f.Q); !g.is_constant())
    throw Error(ErrorKind::DegeneratePencil, "every member contains " + g.normalized().to_string() + " = 0");
  PencilProfile prof;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  std::vector<std::pair<Rational, Rational>> lambdas{{1, 0}, {0, 1}};
  while (static_cast<int>(lambdas.size()) < n_samples + 2) {
    Rational tv(num(rng), den(rng));
    tv.canonicalize();
    std::pair<Rational, Rational> l{1, tv};
    if (std::find(lambdas.begin(), lambdas.end(), l) == lambdas.end()) lambdas.push_back(l);
  }
  for (const auto& [a, b] : lambdas) {
    MultiPoly g = pencil_member(f, a, b);
    PencilProfile::Sample s{a, b, 0};
    if (g.is_constant()) {
      prof.has_empty_member = true;
    } else {
      MultiPoly sf = squarefree_part(g);
      if (sf.total_degree() != g.total_degree()) prof.all_members_reduced = false;
      s.r = absolute_factor_count(sf);
    }
    prof.sampled.push_back(s);
  }
  int lo = 0, hits = 0;
  for (const auto& s : prof.sampled)
    if (s.r > 0 && (lo == 0 || s.r < lo)) lo = s.r;
  for (const auto& s : prof.sampled) hits += s.r == lo;
  prof.generic_r = lo;
  prof.generic_fraction = static_cast<double>(hits) / prof.sampled.size();

  auto add_special = [&](const MemberCount& mc) {
    for (const auto& s : prof.specials)
      if (s.lambda == mc.lambda) return;
    prof.specials.push_back(mc);
  };
  if (prof.generic_r == 1) {
    ReducibleLocus locus = reducible_locus_candidates(f);
    prof.checked = locus.checked;
    prof.unresolved = locus.unresolved;
    prof.complete = locus.complete;
    for (const auto& mc : locus.checked) {
      if (!mc.reduced) prof.all_members_reduced = false;
      if (mc.r == 0) prof.has_empty_member = true;
      if (mc.r > prof.generic_r) add_special(mc);
    }
  }
  for (const auto& s : prof.sampled)
    if (s.r > prof.generic_r) add_special(MemberCount{PencilParam::from_ratio(s.a, s.b), s.r, true});
  for (const auto& s : prof.specials) prof.total_reducibility += (s.r - 1) * s.lambda.orbit_size();

  // Generic genus from the first three random members.
  using K = RationalityVerdict::Kind;
  if (prof.generic_r != 1) {
    prof.generic_genus = {K::Unknown, -1, "generic member reducible"};
  } else {
    std::vector<RationalityVerdict> vs;
    for (std::size_t i = 2; i < prof.sampled.size() && vs.size() < 3; ++i) {
      if (prof.sampled[i].r != 1) continue;
      vs.push_back(rationality_verdict(pencil_member(f, prof.sampled[i].a, prof.sampled[i].b)));
    }
    RationalityVerdict best{K::Unknown, -1, "all sampled members degenerate"};
    for (const auto& v : vs) {
      if (v.kind == K::NotRational && (best.kind != K::NotRational || v.genus > best.genus)) best = v;
      else if (v.kind == K::Rational && best.kind == K::Unknown) best = v;
    }
    prof.generic_genus = best;
  }
  return prof;
}

}  // namespace keller
