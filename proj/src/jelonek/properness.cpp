#include "keller/jelonek/properness.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"
#include "keller/core/factor.hpp"

namespace keller {

namespace {

const std::vector<std::string> kXYA{"x", "y", "a"};
const std::vector<std::string> kUV{"u", "v"};
constexpr int X = 0, Y = 1, A = 2;

MultiPoly lift(const KElem& e) { return from_qpoly(e.rep(), kXYA, A); }

FieldPtr field_of(const KElem& a, const KElem& b) { return a.field() ? a.field() : b.field(); }

KElem eval_at(const MultiPoly& p, const KElem& a, const KElem& b) {
  std::map<int, KElem> pa, pb;
  auto power = [](std::map<int, KElem>& cache, const KElem& base, int k) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    KElem r(1);
    for (int i = 0; i < k; ++i) r = r * base;
    return cache[k] = r;
  };
  KElem s;
  for (const auto& [e, c] : p.terms()) s = s + KElem(c) * power(pa, a, e[0]) * power(pb, b, e[1]);
  return s;
}

// Value of the top-degree form at (c, 1).
Rational top_at(const MultiPoly& p, const Rational& c) {
  const int d = p.total_degree();
  Rational s = 0;
  for (const auto& [e, k] : p.terms()) {
    if (e[0] + e[1] != d) continue;
    Rational t = k;
    for (int i = 0; i < e[0]; ++i) t *= c;
    s += t;
  }
  return s;
}

// Deterministic stream of shears x -> x + c y keeping both y-leading
// coefficients constant.
class ShearStream {
public:
  ShearStream(const PencilMap& f, std::uint64_t seed) : f_(f), rng_(seed ^ 0x5bd1e995u) {}
  Rational next() {
    std::uniform_int_distribution<int> num(-97, 97), den(1, 5);
    for (;;) {
      Rational c(num(rng_), den(rng_));
      c.canonicalize();
      if (c != 0 && top_at(f_.P, c) != 0 && top_at(f_.Q, c) != 0) return c;
    }
  }

private:
  const PencilMap& f_;
  std::mt19937_64 rng_;
};

// p(x + c y + x0, y) over (x, y, a).
MultiPoly sheared(const MultiPoly& p, const Rational& c, const MultiPoly& x0) {
  MultiPoly q = p.with_vars(kXYA);
  MultiPoly sx = MultiPoly::variable(kXYA, "x") + MultiPoly::variable(kXYA, "y") * c + x0;
  return q.substitute(X, sx);
}

// Res_y of the sheared, translated fibre equations, reduced in the field.
MultiPoly fibre_resultant(const PencilMap& f, const KElem& u, const KElem& v, const Rational& c,
                          const MultiPoly& x0) {
  const FieldPtr K = field_of(u, v);
  MultiPoly a = reduce_mod(sheared(f.P, c, x0), K, A) - lift(u);
  MultiPoly b = reduce_mod(sheared(f.Q, c, x0), K, A) - lift(v);
  return reduce_mod(resultant(a, b, Y), K, A);
}

bool homogeneous(const MultiPoly& p) {
  if (p.total_degree() < 1) return false;
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] != p.total_degree()) return false;
  return true;
}

std::string minpoly_text(const QPoly& q) { return from_qpoly(q, {"t"}).to_string(); }

// Point of g = 0 avoiding the other candidates.
std::optional<AlgebraicPoint> sample_point(const MultiPoly& g, const std::vector<MultiPoly>& others, int cap) {
  const bool in_u = g.depends_on(0);
  for (int step = 0; step < 41; ++step) {
    const int k = step % 2 ? (step + 1) / 2 : -(step / 2);
    MultiPoly h = g.evaluate(in_u ? 1 : 0, k);
    if (h.is_constant()) continue;
    auto factors = factor_qpoly(to_qpoly(h, in_u ? 0 : 1));
    std::stable_sort(factors.begin(), factors.end(),
                     [](const auto& l, const auto& r) { return l.first.degree() < r.first.degree(); });
    for (const auto& [r, m] : factors) {
      if (r.degree() > cap) break;
      Extension e = adjoin_root(nullptr, to_kpoly(r), cap);
      AlgebraicPoint p;
      p.chart = "value";
      p.field = e.field;
      p.u = in_u ? e.root : KElem(k);
      p.v = in_u ? KElem(k) : e.root;
      p.orbit_size = r.degree();
      bool clear = std::none_of(others.begin(), others.end(),
                                [&](const MultiPoly& o) { return eval_at(o, p.u, p.v).is_zero(); });
      if (clear) return p;
    }
  }
  return std::nullopt;
}

// Tries a family x = (s - B(t)) / A(t), y = t (and the variants with the
// roles of x, y or of P, Q exchanged) along which F tends to a point of g = 0.
std::string escape_family(const PencilMap& f, const MultiPoly& g) {
  const std::vector<std::string> T{"s", "t"};
  const MultiPoly t = MultiPoly::variable(T, "t"), s = MultiPoly::variable(T, "s");
  for (int tv : {Y, X}) {
    const int zv = 1 - tv;
    for (int solved : {1, 0}) {
      const MultiPoly& S = solved ? f.Q : f.P;
      const MultiPoly& O = solved ? f.P : f.Q;
      if (S.degree(zv) != 1 || O.degree(zv) < 1) continue;
      auto in_t = [&](const MultiPoly& c) {
        std::vector<MultiPoly> vals(2, t);
        vals[zv] = MultiPoly::constant(T, 0);
        return c.compose(vals);
      };
      auto cs = S.coefficients_in(zv);
      MultiPoly a = in_t(cs[1]), b = in_t(cs[0]);
      const int dz = O.degree(zv);
      MultiPoly num(T), den = a.pow(dz);
      for (const auto& [e, c] : O.terms())
        num += c * (s - b).pow(e[zv]) * a.pow(dz - e[zv]) * t.pow(e[tv]);
      const int dn = num.degree(1), dd = den.degree(1);
      if (dn > dd) continue;
      MultiPoly limit(T);
      if (dn == dd) {
        limit = num.coefficients_in(1)[dd] * Rational(1 / den.coefficients_in(1)[dd].constant_term());
      }
      std::vector<MultiPoly> point = solved ? std::vector<MultiPoly>{limit, s} : std::vector<MultiPoly>{s, limit};
      if (!g.with_vars(kUV).compose(point).is_zero()) continue;
      const std::string names[] = {"x", "y"};
      std::string d = a.to_string();
      if (a.terms().size() > 1) d = "(" + d + ")";
      return names[zv] + " = (" + (s - b).to_string() + ")/" + d + ", " + names[tv] + " = t";
    }
  }
  return "";
}

}  // namespace

MultiPoly jacobian(const PencilMap& f) {
  return f.P.derivative(0) * f.Q.derivative(1) - f.P.derivative(1) * f.Q.derivative(0);
}

FiniteFibres finite_fibres_check(const PencilMap& f) {
  FiniteFibres out;
  const MultiPoly J = jacobian(f);
  if (J.is_zero()) {
    out.finite = false;
    const Rational p0 = f.P.constant_term(), q0 = f.Q.constant_term();
    out.curve = gcd_poly(f.P - MultiPoly::constant(f.P.vars(), p0), f.Q - MultiPoly::constant(f.Q.vars(), q0));
    out.witness_u = minpoly_text(QPoly(std::vector<Rational>{-p0, 1}));
    out.witness_v = minpoly_text(QPoly(std::vector<Rational>{-q0, 1}));
    out.certificate = "det DF vanishes identically";
    return out;
  }
  if (J.is_constant()) {
    out.certificate = "det DF is a nonzero constant";
    return out;
  }
  std::vector<std::string> checked;
  for (const auto& fac : factor_bivariate_rational(J)) {
    const MultiPoly& h = fac.poly;
    checked.push_back(h.to_string());
    // P is constant on h = 0 iff its derivative along the curve vanishes there.
    auto constant_on = [&](const MultiPoly& p) {
      MultiPoly tangent = h.derivative(1) * p.derivative(0) - h.derivative(0) * p.derivative(1);
      return tangent.is_zero() || divides(h, tangent);
    };
    if (!constant_on(f.P) || !constant_on(f.Q)) continue;
    out.finite = false;
    out.curve = h;
    const std::vector<std::string> W{"x", "y", "w"};
    const int ev = h.depends_on(1) ? 1 : 0;
    auto value = [&](const MultiPoly& p) {
      MultiPoly r = resultant(h.with_vars(W), p.with_vars(W) - MultiPoly::variable(W, "w"), ev);
      return minpoly_text(factor_qpoly(to_qpoly(content_in(r, 1 - ev), 2)).front().first);
    };
    out.witness_u = value(f.P);
    out.witness_v = value(f.Q);
    out.certificate = "P and Q are constant on " + h.to_string() + " = 0";
    return out;
  }
  std::string list;
  for (const auto& c : checked) list += (list.empty() ? "" : ", ") + c;
  out.certificate = "P and Q are not both constant on any component of det DF = 0 (factors: " + list + ")";
  return out;
}

int fibre_count(const PencilMap& f, const KElem& u, const KElem& v, std::uint64_t seed) {
  ShearStream shears(f, seed);
  return fibre_resultant(f, u, v, shears.next(), MultiPoly(kXYA)).degree(X);
}

int geometric_degree(const PencilMap& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 17);
  std::vector<int> counts;
  for (int k = 0; k < 5; ++k) {
    Rational u(num(rng), den(rng)), v(num(rng), den(rng));
    u.canonicalize();
    v.canonicalize();
    counts.push_back(fibre_count(f, KElem(u), KElem(v), seed + k));
  }
  // Off the non-proper set every count equals deg_geo; on it counts drop.
  const int best = *std::max_element(counts.begin(), counts.end());
  if (std::count(counts.begin(), counts.end(), best) < 3)
    throw Error(ErrorKind::InstabilityDetected, "fibre counts did not settle");
  return best;
}

NonProperSet nonproper_set(const PencilMap& f, std::uint64_t seed) {
  NonProperSet out;
  out.deg_geo = geometric_degree(f, seed);
  const std::vector<std::string> W{"x", "y", "u", "v"};
  MultiPoly pu = f.P.with_vars(W) - MultiPoly::variable(W, "u");
  MultiPoly qv = f.Q.with_vars(W) - MultiPoly::variable(W, "v");
  std::vector<MultiPoly> cands;
  for (int elim : {1, 0}) {
    MultiPoly r = resultant(pu, qv, elim);
    auto cs = r.coefficients_in(1 - elim);
    for (const auto& fac : factor_bivariate_rational(cs.back().with_vars(kUV))) {
      if (fac.poly.is_constant()) continue;
      if (std::find(cands.begin(), cands.end(), fac.poly) == cands.end()) cands.push_back(fac.poly);
    }
  }
  for (const auto& g : cands) {
    std::vector<MultiPoly> others;
    for (const auto& o : cands)
      if (!(o == g)) others.push_back(o);
    auto w = sample_point(g, others, kDefaultDegreeCap);
    if (!w) {
      out.unresolved.push_back(g.to_string());
      continue;
    }
    const int n = fibre_count(f, w->u, w->v, seed);
    if (n >= out.deg_geo) {
      out.rejected.push_back(g.to_string());
      continue;
    }
    NonProperComponent c;
    c.poly = g;
    c.is_line_through_origin = homogeneous(g);
    c.sample = *w;
    c.fibre_sum = n;
    c.escape = escape_family(f, g);
    out.components.push_back(std::move(c));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const auto& a, const auto& b) { return a.poly.to_string() < b.poly.to_string(); });
  return out;
}

int local_multiplicity(const PencilMap& f, const AlgebraicPoint& w, std::uint64_t seed) {
  ShearStream shears(f, seed);
  const KElem pw = eval_at(f.P, w.u, w.v), qw = eval_at(f.Q, w.u, w.v);
  auto order = [&](const Rational& c) {
    // Sheared coordinates put w at x = u - c v; translate it to x = 0.
    MultiPoly x0 = lift(w.u - KElem(c) * w.v);
    return fibre_resultant(f, pw, qw, c, x0).low_degree(X);
  };
  for (int attempt = 0; attempt < 4; ++attempt) {
    const int a = order(shears.next()), b = order(shears.next());
    if (a == b) return a;
  }
  throw Error(ErrorKind::ShearDisagreement, "local multiplicity differs between shears at " + w.to_string());
}

FibreSum check_fiber_sum(const PencilMap& f, const Rational& u, const Rational& v, int deg_geo,
                         const NonProperSet& af, std::uint64_t seed) {
  FibreSum out;
  out.deg_geo = deg_geo;
  PencilMap g(f.P - MultiPoly::constant(f.P.vars(), u), f.Q - MultiPoly::constant(f.Q.vars(), v));
  for (auto& p : base_points(g).affine) {
    const int m = local_multiplicity(f, p, seed);
    out.sum += m * p.orbit_size;
    out.points.emplace_back(p, m);
  }
  for (const auto& c : af.components)
    if (c.poly.evaluate_all({u, v}) == 0) out.in_af = true;
  out.consistent = (out.sum == deg_geo) == !out.in_af;
  return out;
}

const char* to_string(RegularValue r) {
  switch (r) {
    case RegularValue::Regular: return "Regular";
    case RegularValue::NotAttained: return "NotAttained";
    case RegularValue::SingularFiber: return "SingularFiber";
  }
  return "?";
}

Predicates predicates(const PencilMap& f, int deg_geo, bool finite_fibres) {
  Predicates out;
  out.jacobian = jacobian(f);
  out.keller = out.jacobian.is_constant() && !out.jacobian.is_zero();
  try {
    auto sol = base_points(f).affine;
    if (sol.empty()) out.regular_value = RegularValue::NotAttained;
    for (const auto& p : sol)
      if (eval_at(out.jacobian, p.u, p.v).is_zero()) out.regular_value = RegularValue::SingularFiber;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InfiniteBaseLocus) throw;
    // A curve in the zero fibre lies in {det DF = 0}.
    out.regular_value = RegularValue::SingularFiber;
  }
  // Finite fibres and one point in the generic fibre make F injective.
  out.invertible = finite_fibres && deg_geo == 1;
  return out;
}

void attach_parametrization_degrees(NonProperSet& af, const ResolutionTree& t) {
  for (auto& c : af.components)
    for (const auto& d : t.components)
      if (d.dicritical && d.image.normalized() == c.poly.normalized()) {
        c.parametrization_degrees = std::make_pair(d.deg_p, d.deg_q);
        break;
      }
}

std::vector<Theorem4Verdict> theorem4_ratio_check(const PencilMap& f, const ResolutionTree& t,
                                                  const NonProperSet& af, bool keller) {
  NonProperSet local = af;
  attach_parametrization_degrees(local, t);
  std::vector<Theorem4Verdict> out;
  for (const auto& c : local.components) {
    Theorem4Verdict v;
    v.component = c.poly;
    v.line_through_origin = c.is_line_through_origin;
    v.matched = c.parametrization_degrees.has_value();
    if (v.matched) {
      v.deg_phi = c.parametrization_degrees->first;
      v.deg_psi = c.parametrization_degrees->second;
      v.ratio_holds = v.deg_phi * f.degQ == v.deg_psi * f.degP;
    }
    v.forbids_keller = v.line_through_origin || (v.matched && !v.ratio_holds);
    v.consistent = !v.forbids_keller || !keller;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace keller
