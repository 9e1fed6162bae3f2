#pragma once

#include "keller/core/linalg.hpp"
#include "keller/core/multipoly.hpp"

namespace keller {

// f(x, y + c x) for a polynomial in (x, y) (variables 0 and 1).
MultiPoly shear(const MultiPoly& f, const Rational& c);

// Smallest c in 0, 1, -1, 2, -2, ... with gcd(f_c, d f_c / dx) = 1 where
// f_c = shear(f, c); f must be squarefree and non-constant.
Rational gao_shear(const MultiPoly& f);

// Linear system for (g, h) with bideg g <= (m-1, n), bideg h <= (m, n-1):
//   f g_y - g f_y - f h_x + h f_x = 0.
// f must have integer coefficients. Rows are indexed by the monomial
// x^p y^q of the equation as p * 2n + q (fixed size for a given (m, n)).
struct GaoSystem {
  int m = 0, n = 0;
  int unknowns = 0;
  int equations = 0;
  std::vector<SparseRow> rows;  // one per equation monomial, possibly empty
};
GaoSystem gao_system(const MultiPoly& f, int m, int n);

// Number of irreducible factors over C of the squarefree part of f, which
// must be a non-constant polynomial in (x, y).
int absolute_factor_count(const MultiPoly& f);

}  // namespace keller
