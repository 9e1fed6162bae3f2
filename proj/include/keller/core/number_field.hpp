#pragma once

#include <memory>
#include <string>
#include <vector>

#include "keller/core/multipoly.hpp"
#include "keller/core/upoly.hpp"

namespace keller {

// Default cap on the degree of any algebraic extension built by the toolkit.
inline constexpr int kDefaultDegreeCap = 8;

// Q(alpha) = Q[t] / (m(t)) for a monic rational-irreducible m.
class NumberField {
public:
  explicit NumberField(QPoly min_poly);

  const QPoly& min_poly() const { return m_; }
  int degree() const { return m_.degree(); }
  std::string min_poly_string(const std::string& var = "t") const;

private:
  QPoly m_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Builds a field, enforcing the degree cap (DegreeCapError names the polynomial).
FieldPtr make_field(const QPoly& min_poly, int cap = kDefaultDegreeCap,
                    const std::string& var = "t");

// Element of a number field, stored as a reduced polynomial in the
// generator. A null field means the element is a rational constant and
// combines with elements of any field.
class KElem {
public:
  KElem() = default;
  KElem(int c) : c_(c == 0 ? std::vector<mpq_class>{} : std::vector<mpq_class>{mpq_class(c)}) {}
  KElem(const mpq_class& c) : c_(c == 0 ? std::vector<mpq_class>{} : std::vector<mpq_class>{c}) {}
  KElem(FieldPtr field, const QPoly& rep);
  static KElem generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  QPoly rep() const { return QPoly(c_); }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  mpq_class rational_value() const;  // throws unless is_rational()

  friend KElem operator+(const KElem& a, const KElem& b);
  friend KElem operator-(const KElem& a, const KElem& b);
  friend KElem operator*(const KElem& a, const KElem& b);
  friend KElem operator/(const KElem& a, const KElem& b);
  KElem operator-() const;
  friend bool operator==(const KElem& a, const KElem& b) { return (a - b).is_zero(); }

  KElem inverse() const;
  // Image under a field embedding sending the generator to `gen_image`.
  KElem map_to(const KElem& gen_image) const;
  std::string to_string(const std::string& gen = "a") const;

private:
  static FieldPtr common(const KElem& a, const KElem& b);
  FieldPtr field_;
  std::vector<mpq_class> c_;
};

inline bool is_zero(const KElem& a) { return a.is_zero(); }

using KPoly = Poly1<KElem>;

KPoly to_kpoly(const QPoly& p);
// Map coefficients through a field embedding.
KPoly map_to(const KPoly& p, const KElem& gen_image);

// Monic irreducible factors (with multiplicity) of a nonzero polynomial over
// the field (Trager's norm method; the rational case uses Zassenhaus).
std::vector<std::pair<KPoly, int>> factor_over(const KPoly& h, const FieldPtr& field);

// Result of adjoining a root beta of an irreducible h in K[v] to K = Q(alpha).
struct Extension {
  FieldPtr field;     // L = Q(gamma)
  KElem alpha_image;  // alpha expressed in L
  KElem root;         // beta expressed in L
};

// Primitive-element construction. When deg h = 1 the field is unchanged.
// Throws DegreeCapError when [L:Q] exceeds the cap.
Extension adjoin_root(const FieldPtr& field, const KPoly& h, int cap = kDefaultDegreeCap);

// Roots in some extension: for every irreducible factor of h, the extension
// generated by one of its roots (conjugate roots are represented once).
struct RootOrbit {
  Extension ext;
  int multiplicity = 1;
  int orbit_size = 1;  // degree of the irreducible factor over K
};
std::vector<RootOrbit> root_orbits(const KPoly& h, const FieldPtr& field,
                                   int cap = kDefaultDegreeCap);

// Monic rational minimal polynomial of a field element.
QPoly minimal_polynomial(const KElem& e);

// Reduces the powers of variable `var`, read as the generator of K, modulo
// the field's modulus (identity when K is null).
MultiPoly reduce_mod(const MultiPoly& p, const FieldPtr& K, int var);

// Helpers to move between KPoly and MultiPoly in (v, t) with t the generator.
MultiPoly lift_to_multipoly(const KPoly& p, const std::vector<std::string>& vars, int v, int t);

}  // namespace keller
