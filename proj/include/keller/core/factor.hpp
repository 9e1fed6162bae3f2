#pragma once

#include <utility>
#include <vector>

#include "keller/core/multipoly.hpp"
#include "keller/core/upoly.hpp"

namespace keller {

struct Factor {
  MultiPoly poly;  // normalized: integer coprime coefficients, positive leading term
  int multiplicity = 1;
};

// Complete factorization of a nonzero univariate polynomial into
// rational-irreducible factors (squarefree decomposition, then Zassenhaus:
// modular factorization, Hensel lifting, exact recombination).
// The product of the factors equals `a` up to a rational unit.
std::vector<Factor> factor_univariate_rational(const MultiPoly& a);

// Monic irreducible factors of a univariate rational polynomial.
std::vector<std::pair<QPoly, int>> factor_qpoly(const QPoly& a);

// Rational-irreducible factors of a polynomial that depends on at most two
// of its variables (univariate specialization plus power-series Hensel
// lifting and recombination). Factors in fixed canonical order.
std::vector<Factor> factor_bivariate_rational(const MultiPoly& a);

}  // namespace keller
