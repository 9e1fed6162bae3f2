#include "keller/pencil/gao.hpp"

#include <map>

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"

namespace keller {

namespace {

void require_bivariate(const MultiPoly& f) {
  for (int v = 2; v < static_cast<int>(f.nvars()); ++v)
    if (f.depends_on(v)) throw Error(ErrorKind::InvalidArgument, "expected a polynomial in x and y only");
}

}  // namespace

MultiPoly shear(const MultiPoly& f, const Rational& c) {
  if (c == 0) return f;
  MultiPoly x = MultiPoly::variable(f.vars(), f.vars()[0]);
  MultiPoly y = MultiPoly::variable(f.vars(), f.vars()[1]);
  return f.substitute(1, y + x * c);
}

Rational gao_shear(const MultiPoly& f) {
  for (int k = 0; k < 64; ++k) {
    Rational c = k % 2 ? Rational((k + 1) / 2) : Rational(-(k / 2));
    MultiPoly g = shear(f, c);
    MultiPoly gx = g.derivative(0);
    if (gx.is_zero()) continue;
    if (gcd_poly(g, gx).is_constant()) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "no admissible shear (input not squarefree?)");
}

GaoSystem gao_system(const MultiPoly& f, int m, int n) {
  GaoSystem s;
  s.m = m;
  s.n = n;
  const int gcount = m * (n + 1);
  s.unknowns = gcount + (m + 1) * n;
  const int width = std::max(2 * n, 1);
  s.equations = std::max(2 * m, 1) * width;
  std::vector<std::map<int, Integer>> acc(s.equations);
  auto add = [&](int p, int q, int col, const Integer& v) {
    if (v == 0) return;
    if (p < 0 || q < 0 || q >= width || p * width + q >= s.equations)
      throw Error(ErrorKind::InvalidArgument, "Gao system shape does not fit the polynomial");
    Integer& slot = acc[p * width + q][col];
    slot += v;
  };
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "Gao system needs integer coefficients");
    const Integer ci = c.get_num();
    const int a = e[0], b = e[1];
    // g_ij x^i y^j contributes c (j - b) x^(a+i) y^(b+j-1).
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= n; ++j)
        if (j != b) add(a + i, b + j - 1, i * (n + 1) + j, ci * (j - b));
    // h_ij x^i y^j contributes c (a - i) x^(a+i-1) y^(b+j).
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j < n; ++j)
        if (i != a) add(a + i - 1, b + j, gcount + i * n + j, ci * (a - i));
  }
  s.rows.resize(s.equations);
  for (int r = 0; r < s.equations; ++r)
    for (auto& [col, v] : acc[r])
      if (v != 0) s.rows[r].emplace_back(col, std::move(v));
  return s;
}

int absolute_factor_count(const MultiPoly& f0) {
  require_bivariate(f0);
  if (f0.is_constant()) throw Error(ErrorKind::ConstantPolynomial, "factor count of a constant");
  MultiPoly f = squarefree_part(f0);
  MultiPoly g = shear(f, gao_shear(f)).normalized();
  const int m = g.degree(0), n = g.degree(1);
  if (n == 0) return m;  // product of m distinct vertical lines
  GaoSystem s = gao_system(g, m, n);
  return s.unknowns - exact_rank(std::move(s.rows));
}

}  // namespace keller
