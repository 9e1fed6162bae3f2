#include "keller/resolve/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"
#include "keller/core/factor.hpp"

namespace keller {

namespace {

constexpr int U = 0, V = 1, A = 2;

MultiPoly lift(const KElem& e) { return from_qpoly(e.rep(), kChartVars, A); }

MultiPoly reduce(const MultiPoly& p, const FieldPtr& K, int var = A) { return reduce_mod(p, K, var); }

KElem to_elem(const MultiPoly& c, const FieldPtr& K) {
  QPoly r = to_qpoly(c, A);
  return K ? KElem(K, r) : KElem(r.coeff(0));
}

// p restricted to var = 0, as a polynomial in the other local coordinate.
KPoly restrict_to(const MultiPoly& p, int var, const FieldPtr& K) {
  auto cs = p.evaluate(var, 0).coefficients_in(1 - var);
  std::vector<KElem> out;
  for (const auto& c : cs) out.push_back(to_elem(c, K));
  return KPoly(std::move(out));
}

KElem at_origin(const MultiPoly& p, const FieldPtr& K) { return to_elem(p.evaluate(U, 0).evaluate(V, 0), K); }

MultiPoly change_field(const MultiPoly& p, const FieldPtr& from, const Extension& ext) {
  if (!from || from == ext.field) return p;
  return reduce(p.substitute(A, lift(ext.alpha_image)), ext.field);
}

SectionPair make_pair(MultiPoly n, MultiPoly d, int var) {
  SectionPair s;
  s.raw_num = n;
  s.raw_den = d;
  if (var >= 0) {
    s.divided = std::min(n.low_degree(var), d.low_degree(var));
    n = n.divide_by_var_power(var, s.divided);
    d = d.divide_by_var_power(var, s.divided);
  }
  s.num = std::move(n);
  s.den = std::move(d);
  return s;
}

// P in (x, y) written in a chart: affine (u, v) = (x, y); "x=1" (u, v) = (z, y);
// "y=1" (u, v) = (z, x); homogenized to degree d.
MultiPoly chart_form(const MultiPoly& P, int d, int which) {
  MultiPoly r(kChartVars);
  for (const auto& [e, c] : P.terms()) {
    Exponents x(3, 0);
    if (which == 0) {
      x[U] = e[0];
      x[V] = e[1];
    } else {
      x[U] = d - e[0] - e[1];
      x[V] = which == 1 ? e[1] : e[0];
    }
    r.add_term(x, c);
  }
  return r;
}

std::vector<Chart> root_charts(const PencilMap& f) {
  const int d = f.degree();
  const MultiPoly one = MultiPoly::constant(kChartVars, 1);
  std::vector<Chart> out(3);
  out[0].name = "affine";
  out[0].scope = Chart::Scope::Affine;
  MultiPoly P = chart_form(f.P, d, 0), Q = chart_form(f.Q, d, 0);
  out[0].pairs = {make_pair(P, Q, -1), make_pair(P, one, -1), make_pair(Q, one, -1)};
  const char* names[] = {"", "x=1", "y=1"};
  for (int w = 1; w <= 2; ++w) {
    Chart& c = out[w];
    c.name = names[w];
    c.scope = w == 1 ? Chart::Scope::Axis : Chart::Scope::Origin;
    c.boundary_var = U;
    MultiPoly Pt = chart_form(f.P, d, w), Qt = chart_form(f.Q, d, w);
    MultiPoly zd = MultiPoly::monomial(kChartVars, {d, 0, 0}, 1);
    c.pairs = {make_pair(Pt, Qt, U), make_pair(Pt, zd, U), make_pair(Qt, zd, U)};
    c.components.emplace_back(0, MultiPoly::variable(kChartVars, "u"));
  }
  return out;
}

AlgebraicPoint make_point(const std::string& chart, const Extension& ext, KElem u0, KElem v0) {
  AlgebraicPoint p;
  p.chart = chart;
  p.field = ext.field;
  p.u = std::move(u0);
  p.v = std::move(v0);
  p.orbit_size = ext.field ? ext.field->degree() : 1;
  return p;
}

using Center = WorkingSurface::Center;

Extension same_field(const FieldPtr& K) { return {K, K ? KElem::generator(K) : KElem(), KElem()}; }

// Indeterminacy points of G inside the chart's scope (not for the affine chart).
std::vector<Center> centers_of(const Chart& c, int chart_index, int cap) {
  std::vector<Center> out;
  const SectionPair& g = c.pairs[0];
  if (c.scope == Chart::Scope::Axis) {
    KPoly h = gcd(restrict_to(g.num, U, c.field), restrict_to(g.den, U, c.field));
    if (h.degree() < 1) return out;
    for (const auto& [fac, mult] : factor_over(h, c.field)) {
      Center z;
      z.chart = chart_index;
      z.ext = adjoin_root(c.field, fac, cap);
      z.u0 = KElem();
      z.v0 = z.ext.root;
      z.point = make_point(c.name, z.ext, z.u0, z.v0);
      out.push_back(std::move(z));
    }
  } else if (c.scope == Chart::Scope::Origin) {
    if (at_origin(g.num, c.field).is_zero() && at_origin(g.den, c.field).is_zero()) {
      Center z;
      z.chart = chart_index;
      z.ext = same_field(c.field);
      z.point = make_point(c.name, z.ext, z.u0, z.v0);
      out.push_back(std::move(z));
    }
  }
  return out;
}

std::string minpoly_string(const KElem& e) { return from_qpoly(minimal_polynomial(e), {"t"}).to_string(); }

KPoly specialize_x(const MultiPoly& P, const KElem& x0) {
  std::vector<KElem> cs(std::max(P.degree(1) + 1, 0), KElem());
  for (const auto& [e, c] : P.terms()) {
    KElem t(c);
    for (int i = 0; i < e[0]; ++i) t = t * x0;
    cs[e[1]] = cs[e[1]] + t;
  }
  return KPoly(std::move(cs));
}

KPoly kpow(const KPoly& p, int k) { return p.pow(static_cast<unsigned>(k)); }

struct RestrictedValue {
  ValueKind kind = ValueKind::NonConstant;
  KPoly num, den;  // coprime restriction (order 0 only)
  KElem value;     // Finite
  int degree = 0;  // as a map to P^1
};

RestrictedValue restricted_value(const SectionPair& s, int var, const FieldPtr& K) {
  RestrictedValue r;
  const int o = s.num.low_degree(var) - s.den.low_degree(var);
  if (o > 0) {
    r.kind = ValueKind::Zero;
    return r;
  }
  if (o < 0) {
    r.kind = ValueKind::Infinity;
    return r;
  }
  KPoly n = restrict_to(s.num, var, K), d = restrict_to(s.den, var, K);
  KPoly g = gcd(n, d);
  r.num = n / g;
  r.den = d / g;
  if (r.num.degree() == 0 && r.den.degree() == 0) {
    r.kind = ValueKind::Finite;
    r.value = r.num.coeff(0) / r.den.coeff(0);
    return r;
  }
  r.degree = std::max(r.num.degree(), r.den.degree());
  return r;
}

const std::vector<std::string> kUV{"u", "v"};

// Rational-irreducible curve in the value plane swept by (pn/pd, qn/qd).
MultiPoly swept_curve(const RestrictedValue& p, const RestrictedValue& q, const FieldPtr& K) {
  auto constant_line = [&](const RestrictedValue& r, int var) {
    KElem c = r.kind == ValueKind::Zero ? KElem() : r.value;
    return from_qpoly(minimal_polynomial(c), kUV, var);
  };
  if (p.kind != ValueKind::NonConstant) return constant_line(p, 0);
  if (q.kind != ValueKind::NonConstant) return constant_line(q, 1);
  const std::vector<std::string> W{"u", "v", "s", "a"};
  MultiPoly u = MultiPoly::variable(W, "u"), v = MultiPoly::variable(W, "v");
  MultiPoly a = lift_to_multipoly(p.num, W, 2, 3) - u * lift_to_multipoly(p.den, W, 2, 3);
  MultiPoly b = lift_to_multipoly(q.num, W, 2, 3) - v * lift_to_multipoly(q.den, W, 2, 3);
  MultiPoly H = reduce(resultant(a, b, 2), K, 3);
  if (K) H = resultant(from_qpoly(K->min_poly(), W, 3), H, 3);
  H = squarefree_part(H.with_vars(kUV));
  for (const auto& fac : factor_bivariate_rational(H)) {
    const int du = fac.poly.degree(0), dv = fac.poly.degree(1);
    KPoly acc;
    for (const auto& [e, c] : fac.poly.terms())
      acc = acc + KPoly::constant(KElem(c)) * kpow(p.num, e[0]) * kpow(p.den, du - e[0]) *
                      kpow(q.num, e[1]) * kpow(q.den, dv - e[1]);
    if (acc.is_zero()) return fac.poly;
  }
  throw Error(ErrorKind::InstabilityDetected, "no factor of the implicit equation vanishes on the component");
}

bool homogeneous(const MultiPoly& p) {
  if (p.total_degree() < 1) return false;
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] != p.total_degree()) return false;
  return true;
}

std::pair<int, int> edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

const char* to_string(ValueKind k) {
  switch (k) {
    case ValueKind::Zero: return "Zero";
    case ValueKind::Infinity: return "Infinity";
    case ValueKind::Finite: return "Finite";
    case ValueKind::NonConstant: return "NonConstant";
  }
  return "?";
}

const char* to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::I: return "I";
    case TypeLabel::IIa: return "IIa";
    case TypeLabel::IIb: return "IIb";
    case TypeLabel::IIc: return "IIc";
    case TypeLabel::NotHorizontal: return "NotHorizontal";
  }
  return "?";
}

std::string AlgebraicPoint::field_string() const { return field ? field->min_poly_string("a") : "1"; }

std::vector<AlgebraicNumber> AlgebraicPoint::embedded() const {
  if (!field) return {AlgebraicNumber(u.rational_value()), AlgebraicNumber(v.rational_value())};
  AlgebraicNumber gen = AlgebraicNumber::root_of(field->min_poly(), 0, field->degree());
  return {embed(u, gen, field->degree()), embed(v, gen, field->degree())};
}

std::string AlgebraicPoint::to_string() const {
  std::string s = chart + " (" + u.to_string() + ", " + v.to_string() + ")";
  if (field) s += " with " + field_string() + " = 0";
  return s;
}

BasePoints base_points(const PencilMap& f, int cap) {
  if (!gcd_poly(f.P, f.Q).is_constant())
    throw Error(ErrorKind::InfiniteBaseLocus, "P and Q share the factor " + gcd_poly(f.P, f.Q).to_string());
  BasePoints out;
  MultiPoly R = resultant(f.P, f.Q, 1);
  if (R.is_zero()) throw Error(ErrorKind::InfiniteBaseLocus, "resultant vanishes identically");
  if (!R.is_constant()) {
    for (const auto& [r, mult] : factor_qpoly(to_qpoly(R, 0))) {
      Extension e1 = adjoin_root(nullptr, to_kpoly(r), cap);
      KPoly h = gcd(specialize_x(f.P, e1.root), specialize_x(f.Q, e1.root));
      if (h.degree() < 1) continue;
      for (const auto& [g, m2] : factor_over(h, e1.field)) {
        Extension e2 = adjoin_root(e1.field, g, cap);
        out.affine.push_back(make_point("affine", e2, e1.root.map_to(e2.alpha_image), e2.root));
      }
    }
  }
  auto roots = root_charts(f);
  for (int w = 1; w <= 2; ++w)
    for (auto& c : centers_of(roots[w], w, cap)) out.at_infinity.push_back(c.point);
  return out;
}

WorkingSurface::WorkingSurface(const PencilMap& f, ResolveOptions opts) : f_(f), opts_(opts) {
  base_ = base_points(f, opts.cap);
  DivisorComponent linf;
  linf.line_at_infinity = true;
  linf.field = "1";
  comps_.push_back(linf);
  auto roots = root_charts(f);
  for (auto& c : roots) add_chart(std::move(c));
  for (std::size_t b = 0; b < base_.affine.size(); ++b) {
    const AlgebraicPoint& p = base_.affine[b];
    Center z;
    z.chart = 0;
    z.ext = same_field(p.field);
    z.u0 = p.u;
    z.v0 = p.v;
    z.point = p;
    z.base_point = static_cast<int>(b);
    pending_[0].push_back(std::move(z));
    base_orbit_size_.push_back(p.orbit_size);
  }
  classify(comps_[0], charts_[1], U);
}

void WorkingSurface::add_chart(Chart c) {
  c.id = static_cast<int>(charts_.size());
  pending_.push_back(c.scope == Chart::Scope::Affine ? std::vector<Center>{} : centers_of(c, c.id, opts_.cap));
  charts_.push_back(std::move(c));
}

std::vector<WorkingSurface::Center> WorkingSurface::indeterminacy_points() const {
  std::vector<Center> out;
  for (const auto& p : pending_) out.insert(out.end(), p.begin(), p.end());
  if (opts_.reverse_order) std::reverse(out.begin(), out.end());
  return out;
}

bool WorkingSurface::base_point_free() const {
  return std::all_of(pending_.begin(), pending_.end(), [](const auto& p) { return p.empty(); });
}

void WorkingSurface::classify(DivisorComponent& d, const Chart& c, int var) const {
  const FieldPtr& K = c.field;
  d.base_point = c.over_base_point;
  d.weight = K ? K->degree() : 1;
  d.field = K ? K->min_poly_string("a") : "1";

  const SectionPair& g = c.pairs[0];
  KPoly n0 = restrict_to(g.num, var, K), d0 = restrict_to(g.den, var, K);
  if (n0.is_zero()) {
    d.g_constant = true;
    d.lambda = PencilParam::from_ratio(1, 0);
  } else if (d0.is_zero()) {
    d.g_constant = true;
    d.lambda = PencilParam::from_ratio(0, 1);
  } else {
    KPoly h = gcd(n0, d0);
    n0 = n0 / h;
    d0 = d0 / h;
    if (n0.degree() == 0 && d0.degree() == 0) {
      // g = (c0 : c1) lies in the member c1 P - c0 Q, i.e. lambda = (1 : -c0/c1).
      d.g_constant = true;
      d.lambda = PencilParam::root_of(minimal_polynomial(-(n0.coeff(0) / d0.coeff(0))));
    }
  }

  RestrictedValue p = restricted_value(c.pairs[1], var, K), q = restricted_value(c.pairs[2], var, K);
  d.p_value = p.kind;
  d.q_value = q.kind;
  if (p.kind == ValueKind::Finite) d.p_constant = minpoly_string(p.value);
  if (q.kind == ValueKind::Finite) d.q_constant = minpoly_string(q.value);
  d.deg_p = p.degree;
  d.deg_q = q.degree;

  if (d.g_constant) d.type = TypeLabel::NotHorizontal;
  else if (!d.over_infinity()) d.type = TypeLabel::I;
  else if (p.kind == ValueKind::Infinity && q.kind == ValueKind::Infinity) d.type = TypeLabel::IIa;
  else if (p.kind == ValueKind::Zero && q.kind == ValueKind::Zero) d.type = TypeLabel::IIb;
  else d.type = TypeLabel::IIc;

  const bool moving = p.kind == ValueKind::NonConstant || q.kind == ValueKind::NonConstant;
  d.dicritical = d.over_infinity() && moving && p.kind != ValueKind::Infinity && q.kind != ValueKind::Infinity;
  if (d.dicritical) {
    d.image = swept_curve(p, q, K);
    d.image_line_through_origin = homogeneous(d.image);
  }
}

void WorkingSurface::blowup_once(const Center& z) {
  if (z.chart < 0 || z.chart >= static_cast<int>(charts_.size()))
    throw Error(ErrorKind::NotIndeterminate, "unknown chart");
  const Chart parent = charts_[z.chart];
  const FieldPtr& L = z.ext.field;
  MultiPoly su = MultiPoly::variable(kChartVars, "u") + lift(z.u0);
  MultiPoly sv = MultiPoly::variable(kChartVars, "v") + lift(z.v0);
  auto move = [&](const MultiPoly& p) {
    return reduce(change_field(p, parent.field, z.ext).substitute(U, su).substitute(V, sv), L);
  };
  std::array<MultiPoly, 3> num, den;
  for (int k = 0; k < 3; ++k) {
    num[k] = move(parent.pairs[k].num);
    den[k] = move(parent.pairs[k].den);
  }
  if (!at_origin(num[0], L).is_zero() || !at_origin(den[0], L).is_zero())
    throw Error(ErrorKind::NotIndeterminate, "(P : Q) is defined at " + z.point.to_string());
  auto& queue = pending_[z.chart];
  auto it = std::find_if(queue.begin(), queue.end(), [&](const Center& o) {
    return o.point.to_string() == z.point.to_string();
  });
  if (it == queue.end()) throw Error(ErrorKind::NotIndeterminate, "not a pending center: " + z.point.to_string());
  if (static_cast<int>(blowups_.size()) >= opts_.max_blowups)
    throw Error(ErrorKind::BlowupBudgetExceeded,
                "more than " + std::to_string(opts_.max_blowups) + " blow-ups needed");
  queue.erase(it);

  const int index = static_cast<int>(blowups_.size());
  const int eid = static_cast<int>(comps_.size());
  const MultiPoly u = MultiPoly::variable(kChartVars, "u"), v = MultiPoly::variable(kChartVars, "v");

  // Components through the center and their local equations.
  std::vector<std::pair<int, MultiPoly>> through;
  for (const auto& [id, eq] : parent.components) {
    MultiPoly t = move(eq);
    if (at_origin(t, L).is_zero()) through.emplace_back(id, t);
  }

  Chart first, second;
  for (Chart* c : {&first, &second}) {
    c->parent_blowup = index;
    c->generation = parent.generation + 1;
    c->field = L;
    c->over_base_point = parent.scope == Chart::Scope::Affine ? z.base_point : parent.over_base_point;
  }
  first.name = "E" + std::to_string(eid) + ":1";
  first.scope = Chart::Scope::Axis;
  first.boundary_var = U;
  second.name = "E" + std::to_string(eid) + ":2";
  second.scope = Chart::Scope::Origin;
  second.boundary_var = V;
  BlowupRecord rec;
  rec.index = index;
  rec.generation = first.generation;
  rec.center = z.point;
  rec.component = eid;
  for (int k = 0; k < 3; ++k) {
    first.pairs[k] = make_pair(num[k].substitute(V, u * v), den[k].substitute(V, u * v), U);
    second.pairs[k] = make_pair(num[k].substitute(U, u * v), den[k].substitute(U, u * v), V);
    rec.divided_first[k] = first.pairs[k].divided;
    rec.divided_second[k] = second.pairs[k].divided;
  }
  first.components.emplace_back(eid, u);
  second.components.emplace_back(eid, v);
  for (const auto& [id, eq] : through) {
    MultiPoly a = eq.substitute(V, u * v), b = eq.substitute(U, u * v);
    first.components.emplace_back(id, a.divide_by_var_power(U, a.low_degree(U)));
    second.components.emplace_back(id, b.divide_by_var_power(V, b.low_degree(V)));
  }

  // Two components through the center stay adjacent only if their strict
  // transforms still share a point of the new curve.
  auto meet_on_e = [&](int x, int y) {
    const MultiPoly *xa = nullptr, *ya = nullptr, *xb = nullptr, *yb = nullptr;
    for (std::size_t i = 1; i < first.components.size(); ++i) {
      if (first.components[i].first == x) xa = &first.components[i].second, xb = &second.components[i].second;
      if (first.components[i].first == y) ya = &first.components[i].second, yb = &second.components[i].second;
    }
    if (gcd(restrict_to(*xa, U, L), restrict_to(*ya, U, L)).degree() >= 1) return true;
    return at_origin(*xb, L).is_zero() && at_origin(*yb, L).is_zero();
  };
  for (std::size_t i = 0; i < through.size(); ++i)
    for (std::size_t j = i + 1; j < through.size(); ++j) {
      auto e = edge(through[i].first, through[j].first);
      auto pos = std::find(edges_.begin(), edges_.end(), e);
      if (pos != edges_.end() && !meet_on_e(e.first, e.second)) edges_.erase(pos);
    }
  for (const auto& [id, eq] : through) edges_.push_back(edge(id, eid));

  DivisorComponent E;
  E.id = eid;
  E.created_by = index;
  classify(E, first, U);
  comps_.push_back(std::move(E));
  blowups_.push_back(std::move(rec));
  add_chart(std::move(first));
  add_chart(std::move(second));
}

ResolutionTree WorkingSurface::finish() const {
  if (!base_point_free()) throw Error(ErrorKind::InvalidArgument, "resolution is not complete");
  ResolutionTree t;
  t.base = base_;
  t.blowups = blowups_;
  t.components = comps_;
  t.edges = edges_;
  std::sort(t.edges.begin(), t.edges.end());
  t.h_b.assign(base_.affine.size(), 0);
  std::map<std::string, std::pair<PencilParam, int>> fibres;
  for (const auto& c : comps_) {
    t.m += c.weight;
    if (c.horizontal()) {
      if (c.over_infinity()) t.h_infinity += c.weight;
      else t.h_b[c.base_point] += c.weight;
    } else {
      auto& slot = fibres.try_emplace(c.lambda->to_string(), *c.lambda, 0).first->second;
      slot.second += c.weight;
    }
  }
  t.h_G = t.h_infinity;
  for (std::size_t b = 0; b < t.h_b.size(); ++b) {
    t.h_b[b] /= base_orbit_size_[b];
    t.h_G += t.h_b[b] * base_orbit_size_[b];
  }
  for (const auto& [key, val] : fibres) t.m_lambda.push_back({val.first, val.second / val.first.orbit_size()});
  return t;
}

ResolutionTree resolve_pencil(const PencilMap& f, ResolveOptions opts) {
  WorkingSurface s(f, opts);
  for (;;) {
    auto pts = s.indeterminacy_points();
    if (pts.empty()) break;
    s.blowup_once(pts.front());
  }
  return s.finish();
}

FiberCounts fiber_component_counts(const ResolutionTree& t) {
  FiberCounts out;
  out.m = t.m;
  out.h_G = t.h_G;
  out.m_lambda = t.m_lambda;
  for (const auto& l : t.m_lambda) out.sum_m_lambda += l.m_lambda * l.lambda.orbit_size();
  out.balanced = out.sum_m_lambda + out.h_G == out.m;
  return out;
}

SuzukiCheck euler_bookkeeping(const ResolutionTree& t, const PencilProfile& profile) {
  if (profile.generic_r != 1 || profile.generic_genus.kind != RationalityVerdict::Kind::Rational)
    throw Error(ErrorKind::HypothesisNotCertified, "generic member not certified irreducible and rational");
  // chi(C_lambda) = r_lambda + m_lambda + 1 and chi(C) = 2, chi(X) = m + 2.
  SuzukiCheck s;
  s.left = profile.total_reducibility + fiber_component_counts(t).sum_m_lambda;
  s.right = (t.m + 2) - 4;
  s.pass = s.left == s.right;
  return s;
}

namespace {

std::string over_string(const DivisorComponent& c) {
  return c.over_infinity() ? "Infinity" : "BasePoint(" + std::to_string(c.base_point) + ")";
}

std::string origin_string(const DivisorComponent& c) {
  return c.line_at_infinity ? "LineAtInfinity" : "ExceptionalOver(" + std::to_string(c.created_by) + ")";
}

}  // namespace

std::string dual_graph_dot(const ResolutionTree& t) {
  std::ostringstream os;
  os << "graph D {\n";
  for (const auto& c : t.components) {
    os << "  c" << c.id << " [label=\"" << (c.line_at_infinity ? "L" : "E" + std::to_string(c.id)) << " "
       << to_string(c.type) << "\", origin=\"" << origin_string(c) << "\", over=\"" << over_string(c)
       << "\", type=\"" << to_string(c.type) << "\", dicritical=" << (c.dicritical ? "true" : "false")
       << ", weight=" << c.weight << "];\n";
  }
  for (const auto& [a, b] : t.edges) os << "  c" << a << " -- c" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string dual_graph_json(const ResolutionTree& t) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& c : t.components) {
    nlohmann::ordered_json n;
    n["id"] = c.id;
    n["origin"] = origin_string(c);
    n["over"] = over_string(c);
    n["type"] = to_string(c.type);
    n["dicritical"] = c.dicritical;
    n["weight"] = c.weight;
    n["g"] = c.g_constant ? "Constant " + c.lambda->to_string() : "NonConstant";
    n["p"] = to_string(c.p_value);
    n["q"] = to_string(c.q_value);
    if (c.dicritical) n["image"] = c.image.to_string();
    j["nodes"].push_back(n);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : t.edges) j["edges"].push_back({a, b});
  return j.dump(2);
}

}  // namespace keller
