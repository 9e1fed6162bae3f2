#include "keller/core/algebra.hpp"

#include "keller/core/errors.hpp"

namespace keller {

QPoly to_qpoly(const MultiPoly& p, int var) {
  std::vector<mpq_class> v(std::max(p.degree(var) + 1, 0), mpq_class(0));
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != var && e[i] != 0)
        throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate: " + p.to_string());
    v[e[var]] = c;
  }
  return QPoly(std::move(v));
}

MultiPoly from_qpoly(const QPoly& p, const std::vector<std::string>& vars, int var) {
  MultiPoly r(vars);
  Exponents e(vars.size(), 0);
  for (int k = 0; k <= p.degree(); ++k) {
    e[var] = k;
    r.add_term(e, p.coeff(k));
  }
  return r;
}

namespace {

int highest_var(const MultiPoly& a, const MultiPoly& b) {
  for (int v = static_cast<int>(std::max(a.nvars(), b.nvars())) - 1; v >= 0; --v) {
    if ((!a.is_zero() && a.degree(v) > 0) || (!b.is_zero() && b.degree(v) > 0)) return v;
  }
  return -1;
}

MultiPoly one_like(const MultiPoly& a) { return MultiPoly::constant(a.vars(), 1); }

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_rec(const MultiPoly& p, int var) {
  MultiPoly g(p.vars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.normalized() : gcd_rec(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const int v = highest_var(a, b);
  if (v < 0) return one_like(a);
  const bool ina = a.degree(v) > 0, inb = b.degree(v) > 0;
  if (!ina) return gcd_rec(a, content_rec(b, v));
  if (!inb) return gcd_rec(content_rec(a, v), b);
  MultiPoly ca = content_rec(a, v), cb = content_rec(b, v);
  MultiPoly c = gcd_rec(ca, cb);
  MultiPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree(v) > 0) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : exact_div(r, content_rec(r, v)).normalized();
  }
  MultiPoly g = pb.is_zero() ? exact_div(pa, content_rec(pa, v)) : one_like(a);
  return (c * g).normalized();
}

}  // namespace

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return a.nvars() ? a : b;
  if (!a.is_zero() && !b.is_zero() && a.vars() != b.vars())
    throw Error(ErrorKind::InvalidArgument, "gcd of polynomials over different variables");
  return gcd_rec(a, b);
}

MultiPoly content_in(const MultiPoly& p, int var) {
  if (p.is_zero()) return p;
  return content_rec(p, var);
}

MultiPoly primitive_part_in(const MultiPoly& p, int var) {
  if (p.is_zero()) return p;
  return exact_div(p, content_rec(p, var));
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int var) {
  const int db = b.degree(var);
  if (db < 0) throw Error(ErrorKind::DivisionInexact, "pseudo-division by zero");
  int da = a.degree(var);
  if (da < db) return a;
  auto bc = b.coefficients_in(var);
  const MultiPoly& lb = bc.back();
  auto r = a.coefficients_in(var);
  int e = da - db + 1;
  const auto& vars = a.nvars() ? a.vars() : b.vars();
  while (da >= db) {
    MultiPoly lr = r[da];
    for (int i = 0; i <= da; ++i) r[i] = r[i] * lb;
    for (int j = 0; j <= db; ++j) r[da - db + j] -= lr * bc[j];
    --e;
    r.pop_back();
    --da;
    while (da >= 0 && r[da].is_zero()) {
      r.pop_back();
      --da;
    }
  }
  MultiPoly rem = r.empty() ? MultiPoly(vars) : MultiPoly::from_coefficients(r, var);
  if (e > 0) rem *= lb.pow(e);
  return rem;
}

MultiPoly resultant(const MultiPoly& a0, const MultiPoly& b0, int var) {
  if (a0.is_zero() && b0.is_zero()) throw Error(ErrorKind::UndefinedResultant, "both inputs zero");
  const auto& vars = a0.nvars() ? a0.vars() : b0.vars();
  if (a0.is_zero() || b0.is_zero()) return MultiPoly(vars);
  MultiPoly a = a0, b = b0;
  int da = a.degree(var), db = b.degree(var);
  Rational sign = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da % 2) && (db % 2)) sign = -1;
  }
  auto lead = [var](const MultiPoly& p) { return p.coefficients_in(var).back(); };
  if (db == 0) return b.pow(da) * sign;
  MultiPoly g = one_like(a), h = one_like(a);
  for (;;) {
    const int delta = da - db;
    if ((da % 2) && (db % 2)) sign = -sign;
    MultiPoly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    da = db;
    b = exact_div(r, g * h.pow(delta));
    g = lead(a);
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_div(g.pow(delta), h.pow(delta - 1));
    }
    if (b.is_zero()) return MultiPoly(vars);
    db = b.degree(var);
    if (db == 0) {
      MultiPoly lb = b;
      if (da == 0) return lb * sign;
      h = exact_div(lb.pow(da), h.pow(da - 1));
      return h * sign;
    }
  }
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  int v = a.var_index(var);
  if (v < 0) v = b.var_index(var);
  if (v < 0) throw Error(ErrorKind::InvalidArgument, "unknown variable " + std::string(var));
  return resultant(a, b, v);
}

MultiPoly squarefree_part(const MultiPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "squarefree part of zero");
  if (a.is_constant()) return MultiPoly::constant(a.vars(), 1);
  MultiPoly g = a;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (a.degree(static_cast<int>(v)) <= 0) continue;
    g = gcd_poly(g, a.derivative(static_cast<int>(v)));
    if (g.is_constant()) break;
  }
  return exact_div(a, g).normalized();
}

}  // namespace keller
