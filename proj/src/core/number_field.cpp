#include "keller/core/number_field.hpp"

#include <algorithm>

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"
#include "keller/core/factor.hpp"

namespace keller {

NumberField::NumberField(QPoly min_poly) : m_(min_poly.monic()) {
  if (m_.degree() < 1) throw Error(ErrorKind::InvalidArgument, "number field needs a non-constant modulus");
}

std::string NumberField::min_poly_string(const std::string& var) const {
  return from_qpoly(m_, {var}).to_string();
}

FieldPtr make_field(const QPoly& min_poly, int cap, const std::string& var) {
  if (min_poly.degree() > cap)
    throw DegreeCapError(from_qpoly(min_poly.monic(), {var}).to_string(), min_poly.degree(), cap);
  if (min_poly.degree() <= 1) return nullptr;
  return std::make_shared<const NumberField>(min_poly);
}

KElem::KElem(FieldPtr field, const QPoly& rep) : field_(std::move(field)) {
  QPoly r = field_ ? rep % field_->min_poly() : rep;
  if (!field_ && r.degree() > 0) throw Error(ErrorKind::InvalidArgument, "non-constant rational element");
  c_ = r.coeffs();
}

KElem KElem::generator(FieldPtr field) {
  if (!field) throw Error(ErrorKind::InvalidArgument, "generator of the rational field");
  return KElem(field, QPoly::x_power(1));
}

mpq_class KElem::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "element is not rational");
  return c_.empty() ? mpq_class(0) : c_[0];
}

FieldPtr KElem::common(const KElem& a, const KElem& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (a.field_->min_poly() == b.field_->min_poly()) return a.field_;
  if (a.is_rational()) return b.field_;
  if (b.is_rational()) return a.field_;
  throw Error(ErrorKind::InvalidArgument, "mixing elements of different number fields");
}

KElem operator+(const KElem& a, const KElem& b) {
  KElem r;
  r.field_ = KElem::common(a, b);
  r.c_ = (a.rep() + b.rep()).coeffs();
  return r;
}

KElem operator-(const KElem& a, const KElem& b) {
  KElem r;
  r.field_ = KElem::common(a, b);
  r.c_ = (a.rep() - b.rep()).coeffs();
  return r;
}

KElem KElem::operator-() const {
  KElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

KElem operator*(const KElem& a, const KElem& b) {
  FieldPtr f = KElem::common(a, b);
  if (a.is_rational() || b.is_rational()) {
    KElem r;
    r.field_ = f;
    const KElem& s = a.is_rational() ? a : b;
    const KElem& o = a.is_rational() ? b : a;
    if (s.is_zero()) return r;
    mpq_class k = s.c_[0];
    r.c_ = o.c_;
    for (auto& c : r.c_) c *= k;
    return r;
  }
  return KElem(f, a.rep() * b.rep());
}

KElem KElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InversionOfZero, "inverse of zero");
  if (is_rational()) {
    KElem r(mpq_class(1) / c_[0]);
    r.field_ = field_;
    return r;
  }
  auto [g, s, t] = ext_gcd(rep(), field_->min_poly());
  return KElem(field_, s);
}

KElem operator/(const KElem& a, const KElem& b) { return a * b.inverse(); }

KElem KElem::map_to(const KElem& gen_image) const {
  if (is_rational()) return *this;
  KElem r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * gen_image + KElem(*it);
  return r;
}

std::string KElem::to_string(const std::string& gen) const {
  return from_qpoly(rep(), {gen}).to_string();
}

KPoly to_kpoly(const QPoly& p) {
  std::vector<KElem> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return KPoly(std::move(v));
}

KPoly map_to(const KPoly& p, const KElem& gen_image) {
  std::vector<KElem> v;
  for (const auto& c : p.coeffs()) v.push_back(c.map_to(gen_image));
  return KPoly(std::move(v));
}

MultiPoly lift_to_multipoly(const KPoly& p, const std::vector<std::string>& vars, int v, int t) {
  MultiPoly r(vars);
  Exponents e(vars.size(), 0);
  for (int k = 0; k <= p.degree(); ++k) {
    QPoly c = p.coeff(k).rep();
    for (int j = 0; j <= c.degree(); ++j) {
      e[v] = k;
      e[t] = j;
      r.add_term(e, c.coeff(j));
    }
  }
  return r;
}

namespace {

bool all_rational(const KPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const KElem& c) { return c.is_rational(); });
}

QPoly to_rational(const KPoly& p) {
  std::vector<mpq_class> v;
  for (const auto& c : p.coeffs()) v.push_back(c.rational_value());
  return QPoly(std::move(v));
}

const std::vector<std::string> kVT{"v", "t"};

// Norm of H(v - s*t, t) over Q(t)/(m): Res_t(m(t), H(v - s t, t)).
QPoly shifted_norm(const KPoly& h, const NumberField& field, int s) {
  MultiPoly H = lift_to_multipoly(h, kVT, 0, 1);
  MultiPoly shift = MultiPoly::variable(kVT, "v") - MultiPoly::variable(kVT, "t") * Rational(s);
  MultiPoly Hs = H.substitute(0, shift);
  MultiPoly m = from_qpoly(field.min_poly(), kVT, 1);
  return to_qpoly(resultant(m, Hs, 1), 0);
}

int shift_value(int attempt) { return attempt % 2 ? (attempt + 1) / 2 : -(attempt / 2); }

std::string poly_key(const KPoly& p) {
  std::string s = std::to_string(p.degree()) + ":";
  for (const auto& c : p.coeffs()) s += c.to_string() + ";";
  return s;
}

}  // namespace

std::vector<std::pair<KPoly, int>> factor_over(const KPoly& h, const FieldPtr& field) {
  if (h.is_zero()) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  std::vector<std::pair<KPoly, int>> out;
  for (const auto& [g, mult] : squarefree_decomposition(h)) {
    if (!field || all_rational(g)) {
      if (!field) {
        for (const auto& [f, m] : factor_qpoly(to_rational(g))) out.emplace_back(to_kpoly(f), mult * m);
        continue;
      }
    }
    if (g.degree() == 1) {
      out.emplace_back(g.monic(), mult);
      continue;
    }
    QPoly norm;
    int s = 0;
    for (int attempt = 0;; ++attempt) {
      s = shift_value(attempt);
      norm = shifted_norm(g, *field, s);
      if (gcd(norm, norm.derivative()).degree() == 0) break;
      if (attempt > 64) throw Error(ErrorKind::InvalidArgument, "no squarefree norm shift");
    }
    // v + s*alpha
    KPoly back(std::vector<KElem>{KElem::generator(field) * KElem(s), KElem(1)});
    for (const auto& [ni, m] : factor_qpoly(norm)) {
      KPoly fi = gcd(g, to_kpoly(ni).compose(back));
      if (fi.degree() >= 1) out.emplace_back(fi, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree()) return l.first.degree() < r.first.degree();
    if (l.second != r.second) return l.second < r.second;
    return poly_key(l.first) < poly_key(r.first);
  });
  return out;
}

Extension adjoin_root(const FieldPtr& field, const KPoly& h0, int cap) {
  KPoly h = h0.monic();
  if (h.degree() < 1) throw Error(ErrorKind::InvalidArgument, "adjoining a root of a constant");
  if (h.degree() == 1) {
    KElem gen = field ? KElem::generator(field) : KElem();
    return {field, gen, -h.coeff(0)};
  }
  if (!field || all_rational(h)) {
    if (!field) {
      FieldPtr L = make_field(to_rational(h), cap);
      return {L, KElem(), KElem::generator(L)};
    }
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int s = shift_value(attempt);
    QPoly norm = shifted_norm(h, *field, s);
    if (gcd(norm, norm.derivative()).degree() != 0) continue;
    FieldPtr L = make_field(norm, cap);
    KElem gamma = KElem::generator(L);
    // alpha is the common root of m(t) and h(gamma - s t, t) over L.
    MultiPoly H = lift_to_multipoly(h, kVT, 0, 1);
    MultiPoly shift = MultiPoly::variable(kVT, "v") - MultiPoly::variable(kVT, "t") * Rational(s);
    MultiPoly Hs = H.substitute(0, shift);
    std::vector<KElem> coeffs(std::max(Hs.degree(1) + 1, 1), KElem());
    for (const auto& [e, c] : Hs.terms()) {
      KElem term = KElem(c);
      for (int i = 0; i < e[0]; ++i) term = term * gamma;
      coeffs[e[1]] = coeffs[e[1]] + term;
    }
    KPoly B(std::move(coeffs));
    KPoly A = to_kpoly(field->min_poly());
    KPoly g = gcd(A, B);
    if (g.degree() != 1) continue;
    KElem alpha = -g.coeff(0);
    return {L, alpha, gamma - KElem(s) * alpha};
  }
  throw Error(ErrorKind::InvalidArgument, "primitive element construction failed");
}

MultiPoly reduce_mod(const MultiPoly& p, const FieldPtr& K, int var) {
  if (!K || p.degree(var) < K->degree()) return p;
  auto cs = p.coefficients_in(var);
  const QPoly& m = K->min_poly();
  const int n = m.degree();
  for (int k = static_cast<int>(cs.size()) - 1; k >= n; --k) {
    if (cs[k].is_zero()) continue;
    for (int i = 0; i < n; ++i) cs[k - n + i] -= cs[k] * m.coeff(i);
    cs[k] = MultiPoly(p.vars());
  }
  cs.resize(n, MultiPoly(p.vars()));
  return MultiPoly::from_coefficients(cs, var);
}

QPoly minimal_polynomial(const KElem& e) {
  if (e.is_rational()) return QPoly(std::vector<mpq_class>{-e.rational_value(), mpq_class(1)});
  // Characteristic polynomial Res_t(m(t), v - rep(t)), then the factor vanishing at e.
  MultiPoly m = from_qpoly(e.field()->min_poly(), kVT, 1);
  MultiPoly c = MultiPoly::variable(kVT, "v") - from_qpoly(e.rep(), kVT, 1);
  QPoly charpoly = to_qpoly(resultant(m, c, 1), 0);
  for (const auto& [f, mult] : factor_qpoly(charpoly)) {
    KElem acc;
    for (int k = f.degree(); k >= 0; --k) acc = acc * e + KElem(f.coeff(k));
    if (acc.is_zero()) return f.monic();
  }
  throw Error(ErrorKind::InstabilityDetected, "no factor of the characteristic polynomial vanishes");
}

std::vector<RootOrbit> root_orbits(const KPoly& h, const FieldPtr& field, int cap) {
  std::vector<RootOrbit> out;
  for (const auto& [f, m] : factor_over(h, field)) out.push_back({adjoin_root(field, f, cap), m, f.degree()});
  return out;
}

}  // namespace keller
