#include "keller/core/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "keller/core/errors.hpp"

namespace keller {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionInexact: return "DivisionInexact";
    case ErrorKind::UndefinedResultant: return "UndefinedResultant";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::InversionOfZero: return "InversionOfZero";
    case ErrorKind::InvalidProjectivePoint: return "InvalidProjectivePoint";
    case ErrorKind::DegeneratePencil: return "DegeneratePencil";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::InfiniteBaseLocus: return "InfiniteBaseLocus";
    case ErrorKind::NotIndeterminate: return "NotIndeterminate";
    case ErrorKind::BlowupBudgetExceeded: return "BlowupBudgetExceeded";
    case ErrorKind::HypothesisNotCertified: return "HypothesisNotCertified";
    case ErrorKind::InstabilityDetected: return "InstabilityDetected";
    case ErrorKind::WitnessConstructionFailed: return "WitnessConstructionFailed";
    case ErrorKind::ShearDisagreement: return "ShearDisagreement";
    case ErrorKind::UnmatchedComponent: return "UnmatchedComponent";
    case ErrorKind::NoApplicableMaps: return "NoApplicableMaps";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::string_view name) {
  MultiPoly p(std::move(vars));
  const int i = p.var_index(name);
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "unknown variable " + std::string(name));
  Exponents e(p.nvars(), 0);
  e[i] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (exps.size() != p.nvars()) throw Error(ErrorKind::InvalidArgument, "exponent length");
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

int MultiPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool MultiPoly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(nvars(), 0)); }

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading coefficient of zero");
  return terms_.begin()->second;
}

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading term of zero");
  return terms_.begin()->first;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MultiPoly::low_degree(int var) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

static void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars() && !(a.is_zero() && a.nvars() == 0) && !(b.is_zero() && b.nvars() == 0))
    throw Error(ErrorKind::InvalidArgument, "incompatible variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  MultiPoly r(a.nvars() ? a.vars_ : b.vars_);
  Exponents e(r.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    r.add_term(f, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::evaluate(int var, const Rational& value) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    Rational v;
    mpz_pow_ui(v.get_num_mpz_t(), value.get_num_mpz_t(), e[var]);
    mpz_pow_ui(v.get_den_mpz_t(), value.get_den_mpz_t(), e[var]);
    r.add_term(f, c * v);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  auto coeffs = coefficients_in(var);
  MultiPoly r(vars_);
  // Horner in the substituted variable.
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    r *= value;
    r += *it;
  }
  return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& values) const {
  if (values.size() != nvars()) throw Error(ErrorKind::InvalidArgument, "compose arity");
  const auto& target = values.empty() ? vars_ : values.front().vars();
  MultiPoly r(target);
  std::vector<std::vector<MultiPoly>> powers(nvars());
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * values[i]);
      t *= pw[e[i]];
    }
    r += t;
  }
  return r;
}

Rational MultiPoly::evaluate_all(const std::vector<Rational>& point) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
  const int d = degree(var);
  std::vector<MultiPoly> out(std::max(d + 1, 0), MultiPoly(vars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs, int var) {
  if (coeffs.empty()) return MultiPoly();
  MultiPoly r(coeffs.front().vars());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms()) {
      Exponents f = e;
      f[var] += static_cast<int>(k);
      r.add_term(f, c);
    }
  }
  return r;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  MultiPoly r(vars);
  std::vector<int> map(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) map[i] = r.var_index(vars_[i]);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw Error(ErrorKind::InvalidArgument, "variable " + vars_[i] + " dropped");
      f[map[i]] = e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::divide_by_var_power(int var, int k) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < k) throw Error(ErrorKind::DivisionInexact, "variable power does not divide");
    Exponents f = e;
    f[var] -= k;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (leading_coefficient() < 0) scale = -scale;
  MultiPoly r = *this;
  r *= scale;
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  MultiPoly r = *this;
  r *= Rational(1) / leading_coefficient();
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
    bool wrote = false;
    if (!has_var || a != 1) {
      os << keller::to_string(a);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::ExactDiv: return exact_div(a, b);
  }
  return {};
}

bool divides(const MultiPoly& b, const MultiPoly& a, MultiPoly* quotient) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionInexact, "division by zero polynomial");
  const auto& vars = a.nvars() ? a.vars() : b.vars();
  MultiPoly q(vars);
  MultiPoly r = a;
  const Exponents& lb = b.leading_exponents();
  const Rational& lc = b.leading_coefficient();
  Exponents e(lb.size());
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    for (std::size_t i = 0; i < lb.size(); ++i) {
      e[i] = lr[i] - lb[i];
      if (e[i] < 0) return false;
    }
    MultiPoly t = MultiPoly::monomial(vars, e, r.leading_coefficient() / lc);
    r -= t * b;
    q += t;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly q;
  if (!divides(b, a, &q))
    throw Error(ErrorKind::DivisionInexact, "(" + b.to_string() + ") does not divide (" + a.to_string() + ")");
  return q;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

namespace {

// Recursive-descent parser:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('+'|'-') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | '(' expr ')'
class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly r = term();
    for (;;) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  MultiPoly term() {
    MultiPoly r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero expression");
        }
        r *= Rational(1) / d.constant_term();
      } else {
        return r;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (k > 4096) fail("exponent too large");
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer n(std::string(text_.substr(start, pos_ - start)));
      return MultiPoly::constant(vars_, Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MultiPoly::variable(vars_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace keller
