#pragma once

#include <vector>

#include "keller/core/upoly.hpp"

namespace keller {

// Closed rational interval.
struct Interval {
  Rational lo, hi;

  static Interval point(const Rational& q) { return {q, q}; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval square(const Interval& a);

// Axis-aligned rational rectangle in the complex plane.
struct ComplexBox {
  Interval re, im;

  static ComplexBox point(const Rational& r, const Rational& i = 0) {
    return {Interval::point(r), Interval::point(i)};
  }
  bool intersects(const ComplexBox& o) const { return re.intersects(o.re) && im.intersects(o.im); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  Rational width() const { return std::max(re.width(), im.width()); }
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
// Throws InversionOfZero when the box contains 0.
ComplexBox inverse(const ComplexBox& a);
// Interval Horner evaluation.
ComplexBox evaluate(const QPoly& p, const ComplexBox& z);

// Certified isolation of all complex roots of a squarefree rational
// polynomial. Each box contains exactly one root; boxes are pairwise
// disjoint. Canonical order: real roots ascending, then roots in the upper
// half plane by (real part, imaginary part), then their conjugates in the
// same order. Boxes have width below 2^-bits (when certifiable).
class RootIsolation {
public:
  explicit RootIsolation(const QPoly& p, int bits = 64);

  const QPoly& poly() const { return p_; }
  std::size_t size() const { return boxes_.size(); }
  const ComplexBox& box(std::size_t i) const { return boxes_[i]; }
  const std::vector<ComplexBox>& boxes() const { return boxes_; }
  bool is_real(std::size_t i) const { return real_[i]; }
  int bits() const { return bits_; }

  // Tighten every box to width below 2^-bits, preserving the root order.
  void refine(int bits);

private:
  void certify_or_iterate();

  QPoly p_;
  int bits_;
  std::vector<ComplexBox> boxes_;
  std::vector<bool> real_;
  std::vector<std::pair<Rational, Rational>> centers_;
};

}  // namespace keller
