#include "keller/pencil/rationality.hpp"

#include <numeric>

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"
#include "keller/core/factor.hpp"
#include "keller/core/number_field.hpp"
#include "keller/pencil/gao.hpp"

namespace keller {

std::string to_string(RationalityVerdict::Kind k) {
  switch (k) {
    case RationalityVerdict::Kind::Rational: return "Rational";
    case RationalityVerdict::Kind::NotRational: return "NotRational";
    case RationalityVerdict::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

bool edge_nondegenerate(const MultiPoly& f, const LatticePoint& p, const LatticePoint& q) {
  const long dx = q.first - p.first, dy = q.second - p.second;
  const long len = std::gcd(std::abs(dx), std::abs(dy));
  std::vector<Rational> c(len + 1);
  for (long k = 0; k <= len; ++k)
    c[k] = f.coefficient({static_cast<int>(p.first + k * dx / len), static_cast<int>(p.second + k * dy / len)});
  QPoly phi(std::move(c));
  return gcd(phi, phi.derivative()).degree() == 0;
}

// Restriction of f(x, y) to x = alpha (a root of the irreducible s) as a
// polynomial in y over Q(alpha).
KPoly restrict_x(const MultiPoly& f, const QPoly& s) {
  FieldPtr field = s.degree() > 1 ? make_field(s) : nullptr;
  const Rational root = s.degree() == 1 ? -s.coeff(0) / s.coeff(1) : Rational(0);
  std::vector<KElem> out(std::max(f.degree(1) + 1, 1));
  auto by_y = f.coefficients_in(1);
  for (std::size_t j = 0; j < by_y.size(); ++j) {
    QPoly cj = to_qpoly(by_y[j], 0);
    if (field) out[j] = KElem(field, cj);
    else out[j] = KElem(cj.eval(root));
  }
  return KPoly(std::move(out));
}

bool has_torus_singularity(const MultiPoly& f) {
  MultiPoly fx = f.derivative(0), fy = f.derivative(1);
  MultiPoly r1 = resultant(f, fx, 1), r2 = resultant(f, fy, 1);
  if (r1.is_zero() || r2.is_zero()) return true;  // undecided: treat as degenerate
  QPoly s = gcd(to_qpoly(r1, 0), to_qpoly(r2, 0));
  while (s.degree() > 0 && s.coeff(0) == 0) s = s / QPoly::x_power(1);
  if (s.degree() <= 0) return false;
  for (const auto& [si, mult] : factor_qpoly(s)) {
    if (si.degree() > kDefaultDegreeCap) return true;
    KPoly g = gcd(gcd(restrict_x(f, si), restrict_x(fx, si)), restrict_x(fy, si));
    while (g.degree() > 0 && g.coeff(0).is_zero()) g = g / KPoly::x_power(1);
    if (g.degree() > 0) return true;
  }
  return false;
}

}  // namespace

bool newton_nondegenerate(const MultiPoly& f) {
  LatticePolygon poly = newton_polygon(f);
  if (poly.is_point()) return true;
  if (poly.is_segment()) return edge_nondegenerate(f, poly.vertices[0], poly.vertices[1]);
  for (const auto& [p, q] : poly.edges())
    if (!edge_nondegenerate(f, p, q)) return false;
  return !has_torus_singularity(f);
}

RationalityVerdict rationality_verdict(const MultiPoly& f0) {
  if (f0.is_constant()) throw Error(ErrorKind::ConstantPolynomial, "rationality of a constant");
  MultiPoly f = squarefree_part(f0);
  if (absolute_factor_count(f) != 1) throw Error(ErrorKind::NotIrreducible, "curve is reducible: " + f.to_string());
  using K = RationalityVerdict::Kind;
  if (f.total_degree() <= 2) return {K::Rational, 0, "conic or line"};
  if (f.degree(0) == 1) return {K::Rational, 0, "linear in " + f.vars()[0]};
  if (f.degree(1) == 1) return {K::Rational, 0, "linear in " + f.vars()[1]};
  LatticePolygon poly = newton_polygon(f);
  const long interior = poly.interior_points();
  if (interior == 0) return {K::Rational, 0, "no interior lattice points"};
  if (newton_nondegenerate(f)) return {K::NotRational, static_cast<int>(interior), "nondegenerate Newton polygon"};
  return {K::Unknown, -1, "degenerate Newton polygon"};
}

}  // namespace keller
