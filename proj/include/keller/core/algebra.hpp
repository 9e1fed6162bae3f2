#pragma once

#include <vector>

#include "keller/core/multipoly.hpp"
#include "keller/core/upoly.hpp"

namespace keller {

// Primitive gcd with integer coprime coefficients and positive leading term;
// gcd(0, 0) = 0.
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& p, int var);
MultiPoly primitive_part_in(const MultiPoly& p, int var);

// Pseudo-remainder of a by b with respect to `var`.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int var);

// Resultant eliminating `var`, by the subresultant remainder sequence.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, int var);
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::string_view var);

// Discriminant-free squarefree part: a / gcd(a, all partial derivatives).
MultiPoly squarefree_part(const MultiPoly& a);

}  // namespace keller
