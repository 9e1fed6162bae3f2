#pragma once

#include <functional>
#include <string>

#include "keller/core/complex_roots.hpp"
#include "keller/core/number_field.hpp"

namespace keller {

// A complex algebraic number: its monic rational-irreducible minimal
// polynomial and a rational box isolating it among the roots of that
// polynomial.
class AlgebraicNumber {
public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  explicit AlgebraicNumber(const Rational& q);

  // The index-th root of an irreducible polynomial in canonical root order.
  static AlgebraicNumber root_of(const QPoly& irreducible, std::size_t index,
                                 int cap = kDefaultDegreeCap);
  // The unique root of `p` inside `hint`; p need not be irreducible.
  static AlgebraicNumber in_box(const QPoly& p, const ComplexBox& hint, int cap = kDefaultDegreeCap);

  const QPoly& min_poly() const { return m_; }
  const ComplexBox& box() const { return box_; }
  int degree() const { return m_.degree(); }
  bool is_rational() const { return degree() == 1; }
  bool is_zero() const { return is_rational() && m_.coeff(0) == 0; }
  Rational rational_value() const;  // throws unless is_rational()
  bool is_real() const;

  // Same number with a box narrower than 2^-bits.
  AlgebraicNumber refined(int bits) const;
  double approx_re() const;
  double approx_im() const;
  std::string to_string(const std::string& var = "t") const;

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  AlgebraicNumber operator-() const;
  AlgebraicNumber inverse() const;  // throws InversionOfZero
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

private:
  AlgebraicNumber(QPoly m, ComplexBox box, int bits) : m_(std::move(m)), box_(std::move(box)), bits_(bits) {}

  // Picks the root of `r` lying in the enclosure, tightening until unique.
  static AlgebraicNumber select(const QPoly& r, const std::function<ComplexBox(int)>& enclosure,
                                int cap);

  QPoly m_;
  ComplexBox box_;
  int bits_ = 0;

  friend AlgebraicNumber embed(const KElem& e, const AlgebraicNumber& generator, int cap);
};

// Value of a field element under the embedding sending the generator of its
// field to `generator` (which must be a root of the field's modulus).
AlgebraicNumber embed(const KElem& e, const AlgebraicNumber& generator, int cap = kDefaultDegreeCap);

}  // namespace keller
