#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "keller/core/errors.hpp"
#include "keller/core/multipoly.hpp"

namespace keller {

inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }

namespace detail {
// Unqualified call so coefficient types declared later are found by ADL.
template <typename T>
bool coeff_is_zero(const T& a) {
  return is_zero(a);
}
}  // namespace detail

// Dense univariate polynomial over a field T, coefficients low to high,
// never with a trailing zero. T must be constructible from int and provide
// + - * / and is_zero(T).
template <typename T>
class Poly1 {
public:
  Poly1() = default;
  explicit Poly1(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly1 constant(const T& a) { return Poly1(std::vector<T>{a}); }
  static Poly1 x_power(int k, const T& lc = T(1)) {
    std::vector<T> v(k + 1, T(0));
    v[k] = lc;
    return Poly1(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : T(0); }
  const T& lc() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroInput, "leading coefficient of zero polynomial");
    return c_.back();
  }

  T eval(const T& x) const {
    T r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly1 derivative() const {
    std::vector<T> v;
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * T(static_cast<int>(k)));
    return Poly1(std::move(v));
  }

  Poly1 monic() const {
    if (c_.empty()) return *this;
    T inv = T(1) / c_.back();
    std::vector<T> v = c_;
    for (auto& a : v) a = a * inv;
    return Poly1(std::move(v));
  }

  Poly1 scaled(const T& s) const {
    std::vector<T> v = c_;
    for (auto& a : v) a = a * s;
    return Poly1(std::move(v));
  }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Poly1(std::move(v));
  }
  friend Poly1 operator-(const Poly1& a, const Poly1& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] - b.c_[i];
    return Poly1(std::move(v));
  }
  Poly1 operator-() const { return Poly1() - *this; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return Poly1(std::move(v));
  }
  friend bool operator==(const Poly1& a, const Poly1& b) { return (a - b).is_zero(); }

  Poly1 pow(unsigned k) const {
    Poly1 r = constant(T(1)), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  // p(q(x))
  Poly1 compose(const Poly1& q) const {
    Poly1 r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(*it);
    return r;
  }

  // Euclidean division over the field.
  friend std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionInexact, "division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly1(), a};
    std::vector<T> r = a.c_;
    std::vector<T> q(a.c_.size() - b.c_.size() + 1, T(0));
    T inv = T(1) / b.c_.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      T f = r[k + b.degree()] * inv;
      q[k] = f;
      if (detail::coeff_is_zero(f)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] = r[k + j] - f * b.c_[j];
    }
    r.resize(b.c_.size() - 1 > 0 ? b.c_.size() - 1 : 0, T(0));
    return {Poly1(std::move(q)), Poly1(std::move(r))};
  }
  friend Poly1 operator/(const Poly1& a, const Poly1& b) { return divmod(a, b).first; }
  friend Poly1 operator%(const Poly1& a, const Poly1& b) { return divmod(a, b).second; }

  std::string to_string(const std::string& var = "t") const;

private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

// Monic gcd (zero when both are zero).
template <typename T>
Poly1<T> gcd(Poly1<T> a, Poly1<T> b) {
  while (!b.is_zero()) {
    Poly1<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g monic.
template <typename T>
std::tuple<Poly1<T>, Poly1<T>, Poly1<T>> ext_gcd(const Poly1<T>& a, const Poly1<T>& b) {
  Poly1<T> r0 = a, r1 = b;
  Poly1<T> s0 = Poly1<T>::constant(T(1)), s1;
  Poly1<T> t0, t1 = Poly1<T>::constant(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly1<T> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Yun's squarefree decomposition (characteristic zero): a = lc * prod f_i^i.
// Returns the pairs (f_i, i) with f_i monic and non-constant.
template <typename T>
std::vector<std::pair<Poly1<T>, int>> squarefree_decomposition(const Poly1<T>& a) {
  std::vector<std::pair<Poly1<T>, int>> out;
  if (a.degree() <= 0) return out;
  Poly1<T> d = a.derivative();
  Poly1<T> g = gcd(a, d);
  Poly1<T> b = a / g;
  Poly1<T> c = d / g;
  Poly1<T> e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly1<T> f = gcd(b, e);
    b = b / f;
    c = e / f;
    e = c - b.derivative();
    if (f.degree() > 0) out.emplace_back(f.monic(), i);
    ++i;
  }
  return out;
}

template <typename T>
Poly1<T> squarefree_part(const Poly1<T>& a) {
  if (a.degree() <= 0) return a.is_zero() ? a : Poly1<T>::constant(T(1));
  return (a / gcd(a, a.derivative())).monic();
}

using QPoly = Poly1<mpq_class>;

// Conversions between univariate MultiPoly (in `var`, other variables absent) and QPoly.
QPoly to_qpoly(const MultiPoly& p, int var = 0);
MultiPoly from_qpoly(const QPoly& p, const std::vector<std::string>& vars, int var = 0);

template <>
inline std::string Poly1<mpq_class>::to_string(const std::string& var) const {
  return from_qpoly(*this, {var}).to_string();
}

}  // namespace keller
