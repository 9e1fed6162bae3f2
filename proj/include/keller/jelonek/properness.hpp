#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keller/pencil/pencil.hpp"
#include "keller/resolve/resolution.hpp"

namespace keller {

MultiPoly jacobian(const PencilMap& f);

struct FiniteFibres {
  bool finite = true;
  std::string certificate;
  MultiPoly curve;                  // infinite case: a curve on which P and Q are constant
  std::string witness_u, witness_v; // minimal polynomials of the constant values
};

// A fibre is infinite iff it contains a curve on which P and Q are both
// constant; such a curve lies in {det DF = 0}, so only factors of the
// Jacobian need testing.
FiniteFibres finite_fibres_check(const PencilMap& f);

// Number of points of a generic fibre (5 specialized samples; InstabilityDetected
// when they do not settle).
int geometric_degree(const PencilMap& f, std::uint64_t seed = kDefaultSeed);

// Points of F^{-1}(u, v) counted with multiplicity, via a resultant in
// sheared coordinates; u and v may be algebraic (elements of one field).
int fibre_count(const PencilMap& f, const KElem& u, const KElem& v, std::uint64_t seed = kDefaultSeed);

struct NonProperComponent {
  MultiPoly poly;  // rational-irreducible in (u, v)
  bool is_line_through_origin = false;
  std::optional<std::pair<int, int>> parametrization_degrees;
  AlgebraicPoint sample;   // point of the component on no other candidate
  int fibre_sum = 0;       // < deg_geo certifies membership
  std::string escape;      // explicit escaping family when one was found
};

struct NonProperSet {
  std::vector<NonProperComponent> components;
  std::vector<std::string> rejected;    // candidates with a full fibre
  std::vector<std::string> unresolved;  // WitnessConstructionFailed
  int deg_geo = 0;
  bool empty() const { return components.empty(); }
  bool complete() const { return unresolved.empty(); }
};

NonProperSet nonproper_set(const PencilMap& f, std::uint64_t seed = kDefaultSeed);

// Intersection multiplicity of P - P(w) and Q - Q(w) at w (ShearDisagreement).
int local_multiplicity(const PencilMap& f, const AlgebraicPoint& w, std::uint64_t seed = kDefaultSeed);

struct FibreSum {
  std::vector<std::pair<AlgebraicPoint, int>> points;  // orbit representative, multiplicity
  int sum = 0;
  int deg_geo = 0;
  bool in_af = false;
  bool consistent = false;  // sum == deg_geo exactly when v is off A_F
};
FibreSum check_fiber_sum(const PencilMap& f, const Rational& u, const Rational& v, int deg_geo,
                         const NonProperSet& af, std::uint64_t seed = kDefaultSeed);

enum class RegularValue { Regular, NotAttained, SingularFiber };
const char* to_string(RegularValue r);

struct Predicates {
  MultiPoly jacobian;
  bool keller = false;
  RegularValue regular_value = RegularValue::Regular;
  bool invertible = false;
};
Predicates predicates(const PencilMap& f, int deg_geo, bool finite_fibres);

// Dicritical components of the tree whose image is the given component.
void attach_parametrization_degrees(NonProperSet& af, const ResolutionTree& t);

struct Theorem4Verdict {
  MultiPoly component;
  bool matched = false;  // UnmatchedComponent when false
  int deg_phi = 0, deg_psi = 0;
  bool ratio_holds = false;  // deg phi * deg Q == deg psi * deg P
  bool line_through_origin = false;
  bool forbids_keller = false;
  bool consistent = true;  // forbids_keller implies the map is not Keller
};
std::vector<Theorem4Verdict> theorem4_ratio_check(const PencilMap& f, const ResolutionTree& t,
                                                  const NonProperSet& af, bool keller);

}  // namespace keller
