#pragma once

#include <string>

#include "keller/core/multipoly.hpp"
#include "keller/core/newton.hpp"

namespace keller {

struct RationalityVerdict {
  enum class Kind { Rational, NotRational, Unknown };
  Kind kind = Kind::Unknown;
  int genus = -1;           // known genus, or -1
  std::string certificate;  // which argument decided the verdict
};

std::string to_string(RationalityVerdict::Kind k);

// True when no face system of f has a zero in the torus: every edge
// polynomial has simple nonzero roots and f has no singular point with
// x y != 0.
bool newton_nondegenerate(const MultiPoly& f);

// Rationality of the curve f = 0 (taken reduced) for absolutely irreducible f.
// The genus never exceeds the interior lattice point count of the Newton
// polygon and equals it for nondegenerate f. Throws NotIrreducible.
RationalityVerdict rationality_verdict(const MultiPoly& f);

}  // namespace keller
