#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace keller {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponents = std::vector<int>;

// "p/q" or "p" for integers.
std::string to_string(const Rational& q);

// Graded lexicographic order, highest term first: total degree, then the
// exponent of the first declared variable, then the second, ...
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// No stored coefficient is ever zero; the term map iterates in canonical
// (descending graded lexicographic) order.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, const Rational& c);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  int var_index(std::string_view name) const;  // -1 if absent

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;
  const Rational& leading_coefficient() const;  // grlex leading
  const Exponents& leading_exponents() const;

  int total_degree() const;  // -1 for zero
  int degree(int var) const;  // -1 for zero
  int low_degree(int var) const;  // largest k with var^k | this; -1 for zero
  bool depends_on(int var) const { return degree(var) > 0; }

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(int var) const;
  // Substitute a rational value for one variable (the variable stays declared).
  MultiPoly evaluate(int var, const Rational& value) const;
  // Substitute a polynomial (over the same variables) for one variable.
  MultiPoly substitute(int var, const MultiPoly& value) const;
  // Simultaneous substitution of every variable; values share a target variable list.
  MultiPoly compose(const std::vector<MultiPoly>& values) const;
  Rational evaluate_all(const std::vector<Rational>& point) const;

  // Coefficients as a polynomial in `var`: result[k] is the coefficient of var^k.
  std::vector<MultiPoly> coefficients_in(int var) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, int var);

  // Re-express over another variable list; throws if a used variable is missing.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;

  // Divide by the given power of a variable (must divide exactly).
  MultiPoly divide_by_var_power(int var, int k) const;

  // Integer-coefficient form with coprime coefficients and positive leading term.
  MultiPoly normalized() const;
  // Monic in the grlex leading term.
  MultiPoly monic() const;

  std::string to_string() const;

private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class ArithOp { Add, Sub, Mul, ExactDiv };

MultiPoly arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

// Exact quotient; throws DivisionInexact when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
// Returns true and sets quotient when b | a.
bool divides(const MultiPoly& b, const MultiPoly& a, MultiPoly* quotient = nullptr);

// Parses the polynomial text grammar: rational constants, declared variables,
// + - * / ^ and parentheses. Division is only allowed by nonzero constants.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars = {"x", "y"});

// Union of variable lists preserving first-seen order.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

}  // namespace keller
