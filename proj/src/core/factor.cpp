#include "keller/core/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"

namespace keller {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p < 2^31, coefficients low to high.

using UP = std::vector<std::uint64_t>;

void trim(UP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

UP sub(const UP& a, const UP& b, std::uint64_t p) {
  UP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

UP mul(const UP& a, const UP& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<UP, UP> divmod(const UP& a, const UP& b, std::uint64_t p) {
  if (a.size() < b.size()) return {{}, a};
  UP r = a, q(a.size() - b.size() + 1, 0);
  const std::uint64_t inv = invmod(b.back(), p);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    std::uint64_t f = r[k + b.size() - 1] * inv % p;
    q[k] = f;
    if (!f) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = (r[k + j] + p - f * b[j] % p) % p;
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

UP monic(UP a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = invmod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

UP gcd(UP a, UP b, std::uint64_t p) {
  while (!b.empty()) {
    UP r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// Returns (s, t) with s*a + t*b = 1 (a, b coprime).
std::pair<UP, UP> ext_gcd(const UP& a, const UP& b, std::uint64_t p) {
  UP r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    UP s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t inv = invmod(r0.back(), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

UP mulmod(const UP& a, const UP& b, const UP& f, std::uint64_t p) {
  return divmod(mul(a, b, p), f, p).second;
}

UP powmod_poly(UP base, std::uint64_t e, const UP& f, std::uint64_t p) {
  UP r{1};
  base = divmod(base, f, p).second;
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    e >>= 1;
    if (e) base = mulmod(base, base, f, p);
  }
  return r;
}

UP derivative(const UP& a, std::uint64_t p) {
  UP r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * (k % p) % p);
  trim(r);
  return r;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial over Z/p, p odd.
std::vector<UP> factor_mod_p(const UP& f0, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<std::pair<UP, int>> ddf;
  UP f = f0;
  UP h{0, 1};
  const UP x{0, 1};
  for (int i = 1; static_cast<int>(f.size()) - 1 >= 2 * i; ++i) {
    h = powmod_poly(h, p, f, p);
    UP g = gcd(sub(h, x, p), f, p);
    if (g.size() > 1) {
      ddf.emplace_back(g, i);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (f.size() > 1) ddf.emplace_back(f, static_cast<int>(f.size()) - 1);

  std::vector<UP> out;
  for (auto& [g, d] : ddf) {
    std::vector<UP> todo{g};
    while (!todo.empty()) {
      UP cur = todo.back();
      todo.pop_back();
      const int n = static_cast<int>(cur.size()) - 1;
      if (n == d) {
        out.push_back(monic(cur, p));
        continue;
      }
      for (;;) {
        UP a(n, 0);
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (a.size() < 2) continue;
        // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
        UP t = divmod(a, cur, p).second, prod = t;
        for (int i = 1; i < d; ++i) {
          t = powmod_poly(t, p, cur, p);
          prod = mulmod(prod, t, cur, p);
        }
        UP b = powmod_poly(prod, (p - 1) / 2, cur, p);
        b = sub(b, UP{1}, p);
        UP g2 = gcd(b, cur, p);
        if (g2.size() > 1 && g2.size() < cur.size()) {
          todo.push_back(g2);
          todo.push_back(divmod(cur, g2, p).first);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials and Hensel lifting.

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), m);
}

UP to_up(const ZPoly& a, std::uint64_t p) {
  UP r(a.size());
  Integer pp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], pp).get_ui();
  trim(r);
  return r;
}

ZPoly to_z(const UP& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// Lift F = g0*h0 (mod p), all monic, to F = g*h (mod p^k).
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& F, const UP& g0, const UP& h0, std::uint64_t p,
                                    int k) {
  auto [s, t] = ext_gcd(g0, h0, p);
  ZPoly g = to_z(g0), h = to_z(h0);
  Integer pj(static_cast<unsigned long>(p));
  Integer pp(static_cast<unsigned long>(p));
  for (int j = 1; j < k; ++j) {
    Integer next = pj * pp;
    ZPoly gh = zmul(g, h, next);
    ZPoly e = reduce(F, next);
    e.resize(std::max(e.size(), gh.size()), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    e = reduce(std::move(e), next);
    for (auto& c : e) c /= pj;
    UP c = to_up(e, p);
    auto [q, a] = divmod(mul(c, t, p), g0, p);
    // b = c*s + q*h0
    UP b = mul(c, s, p);
    UP qh = mul(q, h0, p);
    b.resize(std::max(b.size(), qh.size()), 0);
    for (std::size_t i = 0; i < qh.size(); ++i) b[i] = (b[i] + qh[i]) % p;
    trim(b);
    ZPoly az = to_z(a), bz = to_z(b);
    g.resize(std::max(g.size(), az.size()), 0);
    h.resize(std::max(h.size(), bz.size()), 0);
    for (std::size_t i = 0; i < az.size(); ++i) g[i] += pj * az[i];
    for (std::size_t i = 0; i < bz.size(); ++i) h[i] += pj * bz[i];
    g = reduce(std::move(g), next);
    h = reduce(std::move(h), next);
    pj = next;
  }
  return {g, h};
}

std::vector<ZPoly> hensel_lift_all(const ZPoly& F, const std::vector<UP>& factors, std::uint64_t p,
                                   int k, const Integer& pk) {
  if (factors.size() == 1) return {reduce(F, pk)};
  UP rest{1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = mul(rest, factors[i], p);
  auto [g, h] = hensel_lift(F, factors[0], rest, p, k);
  std::vector<UP> tail(factors.begin() + 1, factors.end());
  auto lifted = hensel_lift_all(h, tail, p, k, pk);
  lifted.insert(lifted.begin(), g);
  return lifted;
}

ZPoly primitive_integer(const QPoly& a) {
  MultiPoly m = from_qpoly(a, {"t"}).normalized();
  ZPoly r(m.degree(0) + 1, 0);
  for (const auto& [e, c] : m.terms()) r[e[0]] = c.get_num();
  return r;
}

QPoly to_q(const ZPoly& a) {
  std::vector<mpq_class> v(a.begin(), a.end());
  return QPoly(std::move(v));
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

bool is_squarefree_mod(const ZPoly& f, std::uint64_t p) {
  UP fp = to_up(f, p);
  if (fp.size() != f.size()) return false;
  return gcd(fp, derivative(fp, p), p).size() == 1;
}

const std::uint64_t kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
                                 47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103,
                                 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
                                 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241,
                                 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317,
                                 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401,
                                 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479,
                                 487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571};

// Irreducible factors (primitive, positive leading coefficient) of a
// squarefree primitive integer polynomial of degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  std::mt19937_64 rng(0x6b656c6c6572ULL);

  std::uint64_t best_p = 0;
  std::vector<UP> best;
  int tried = 0;
  for (std::uint64_t p : kPrimes) {
    if (mod(f.back(), Integer(static_cast<unsigned long>(p))) == 0) continue;
    if (!is_squarefree_mod(f, p)) continue;
    auto fac = factor_mod_p(monic(to_up(f, p), p), p, rng);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1 || ++tried >= 5) break;
  }
  if (best_p == 0) throw Error(ErrorKind::InvalidArgument, "no suitable prime for factorization");
  if (best.size() == 1) return {f};
  const std::uint64_t p = best_p;

  // Coefficient bound for any factor, scaled by the leading coefficient.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = (Integer(1) << n) * norm * abs(f.back()) * 2;
  int k = 1;
  Integer pk(static_cast<unsigned long>(p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  // Monic version of f modulo p^k.
  Integer lcinv;
  mpz_invert(lcinv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
  ZPoly F = f;
  for (auto& c : F) c *= lcinv;
  F = reduce(std::move(F), pk);
  std::vector<ZPoly> lifted = hensel_lift_all(F, best, p, k, pk);

  std::vector<ZPoly> result;
  ZPoly g = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + s, true);
    do {
      ZPoly cand{g.back()};
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (pick[i]) cand = zmul(cand, lifted[remaining[i]], pk);
      cand = symmetric(std::move(cand), pk);
      QPoly cq = to_q(cand);
      ZPoly prim = primitive_integer(cq);
      QPoly gq = to_q(g), pq = to_q(prim);
      auto [q, r] = divmod(gq, pq);
      bool integral = r.is_zero() &&
                      std::all_of(q.coeffs().begin(), q.coeffs().end(),
                                  [](const mpq_class& c) { return c.get_den() == 1; });
      if (integral) {
        result.push_back(prim);
        ZPoly qz;
        for (const auto& c : q.coeffs()) qz.push_back(c.get_num());
        g = qz;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (!pick[i]) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (g.size() > 1) {
    if (g.back() < 0)
      for (auto& c : g) c = -c;
    result.push_back(g);
  }
  return result;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_qpoly(const QPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  std::vector<std::pair<QPoly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(a)) {
    for (const auto& z : zassenhaus(primitive_integer(part))) out.emplace_back(to_q(z).monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree()) return l.first.degree() < r.first.degree();
    if (l.second != r.second) return l.second < r.second;
    return from_qpoly(l.first, {"t"}).to_string() < from_qpoly(r.first, {"t"}).to_string();
  });
  return out;
}

std::vector<Factor> factor_univariate_rational(const MultiPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  int var = -1;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (a.degree(static_cast<int>(v)) > 0) {
      if (var >= 0) throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate");
      var = static_cast<int>(v);
    }
  }
  std::vector<Factor> out;
  if (var < 0) return out;
  for (const auto& [f, m] : factor_qpoly(to_qpoly(a, var)))
    out.push_back({from_qpoly(f, a.vars(), var).normalized(), m});
  return out;
}

namespace {

// Truncated power series in w with rational coefficients.
using Series = QPoly;

Series truncate(const Series& s, int n) {
  std::vector<mpq_class> v;
  for (int k = 0; k < std::min(n, s.degree() + 1); ++k) v.push_back(s.coeff(k));
  return Series(std::move(v));
}

// Polynomials in a with coefficients in Q[w]/(w^n), stored as vector over a.
using SPoly = std::vector<Series>;

void trim(SPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

SPoly smul(const SPoly& a, const SPoly& b, int n) {
  if (a.empty() || b.empty()) return {};
  SPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = truncate(r[i + j] + a[i] * b[j], n);
  trim(r);
  return r;
}

// Coefficient of w^j as a polynomial in a.
QPoly slice(const SPoly& a, int j) {
  std::vector<mpq_class> v;
  for (const auto& s : a) v.push_back(s.coeff(j));
  return QPoly(std::move(v));
}

SPoly from_qpoly_a(const QPoly& a) {
  SPoly r;
  for (const auto& c : a.coeffs()) r.push_back(Series::constant(c));
  trim(r);
  return r;
}

// Lift G = g0*h0 (mod w), monic in a, to modulo w^n.
std::pair<SPoly, SPoly> series_lift(const SPoly& G, const QPoly& g0, const QPoly& h0, int n) {
  auto [one, s, t] = ext_gcd(g0, h0);
  SPoly g = from_qpoly_a(g0), h = from_qpoly_a(h0);
  for (int j = 1; j < n; ++j) {
    SPoly gh = smul(g, h, j + 1);
    QPoly c = slice(G, j) - slice(gh, j);
    if (c.is_zero()) continue;
    auto [q, a] = divmod(c * t, g0);
    QPoly b = c * s + q * h0;
    auto wj = Series::x_power(j);
    for (int i = 0; i <= a.degree(); ++i) {
      if (static_cast<int>(g.size()) <= i) g.resize(i + 1);
      g[i] = g[i] + wj * Series::constant(a.coeff(i));
    }
    for (int i = 0; i <= b.degree(); ++i) {
      if (static_cast<int>(h.size()) <= i) h.resize(i + 1);
      h[i] = h[i] + wj * Series::constant(b.coeff(i));
    }
  }
  return {g, h};
}

std::vector<SPoly> series_lift_all(const SPoly& G, const std::vector<QPoly>& factors, int n) {
  if (factors.size() == 1) return {G};
  QPoly rest = QPoly::constant(1);
  for (std::size_t i = 1; i < factors.size(); ++i) rest = rest * factors[i];
  auto [g, h] = series_lift(G, factors[0], rest, n);
  std::vector<QPoly> tail(factors.begin() + 1, factors.end());
  auto lifted = series_lift_all(h, tail, n);
  lifted.insert(lifted.begin(), g);
  return lifted;
}

// Inverse of a power series with nonzero constant term, modulo w^n.
Series series_inverse(const Series& s, int n) {
  std::vector<mpq_class> r(n, 0);
  const mpq_class inv = 1 / s.coeff(0);
  for (int k = 0; k < n; ++k) {
    mpq_class acc = k == 0 ? mpq_class(1) : mpq_class(0);
    for (int i = 1; i <= k; ++i) acc -= s.coeff(i) * r[k - i];
    r[k] = acc * inv;
  }
  return Series(std::move(r));
}

// Irreducible factors of a squarefree polynomial in vars (a, b) that is
// primitive in a with deg_a >= 1.
std::vector<MultiPoly> factor_primitive_bivariate(const MultiPoly& f, int va, int vb) {
  const int da = f.degree(va), db = f.degree(vb);
  if (db <= 0) {
    std::vector<MultiPoly> out;
    for (const auto& fac : factor_univariate_rational(f)) out.push_back(fac.poly);
    return out;
  }
  if (da == 1) return {f.normalized()};
  // Good specialization b = b0: degree in a preserved and squarefree.
  Rational b0 = 0;
  QPoly spec;
  for (int attempt = 0;; ++attempt) {
    b0 = (attempt % 2 ? -1 : 1) * ((attempt + 1) / 2);
    spec = to_qpoly(f.evaluate(vb, b0), va);
    if (spec.degree() == da && gcd(spec, spec.derivative()).degree() == 0) break;
    if (attempt > 200) throw Error(ErrorKind::InvalidArgument, "no good specialization found");
  }
  auto uni = factor_qpoly(spec);
  if (uni.size() == 1) return {f.normalized()};

  // g(a, w) = f(a, b0 + w), as a polynomial in a with Q[w] coefficients.
  MultiPoly shift = MultiPoly::variable(f.vars(), f.vars()[vb]) + MultiPoly::constant(f.vars(), b0);
  MultiPoly g = f.substitute(vb, shift);
  const auto gc = g.coefficients_in(va);
  SPoly gs;
  for (const auto& c : gc) gs.push_back(to_qpoly(c, vb));
  const Series lc = gs.back();
  const int n = db + lc.degree() + 1;
  const Series lcinv = series_inverse(lc, n);
  SPoly G;
  for (const auto& c : gs) G.push_back(truncate(c * lcinv, n));

  std::vector<QPoly> mods;
  for (const auto& [u, m] : uni) mods.push_back(u);
  std::vector<SPoly> lifted = series_lift_all(G, mods, n);

  MultiPoly unshift =
      MultiPoly::variable(f.vars(), f.vars()[vb]) - MultiPoly::constant(f.vars(), b0);
  auto to_multi = [&](const SPoly& s) {
    MultiPoly r(f.vars());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (int k = 0; k <= s[i].degree(); ++k) {
        Exponents e(f.nvars(), 0);
        e[va] = static_cast<int>(i);
        e[vb] = k;
        r.add_term(e, s[i].coeff(k));
      }
    }
    return r;
  };

  std::vector<MultiPoly> result;
  MultiPoly rem = g;
  Series remlc = lc;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + s, true);
    do {
      SPoly cand{remlc};
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (pick[i]) cand = smul(cand, lifted[remaining[i]], n);
      MultiPoly cm = to_multi(cand);
      if (cm.is_zero()) continue;
      MultiPoly prim = primitive_part_in(cm, va);
      MultiPoly q;
      if (prim.degree(va) > 0 && divides(prim, rem, &q)) {
        result.push_back(prim.substitute(vb, unshift).normalized());
        rem = q;
        remlc = to_qpoly(rem.coefficients_in(va).back(), vb);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (!pick[i]) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (rem.degree(va) > 0) result.push_back(rem.substitute(vb, unshift).normalized());
  return result;
}

}  // namespace

std::vector<Factor> factor_bivariate_rational(const MultiPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  std::vector<int> used;
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.degree(static_cast<int>(v)) > 0) used.push_back(static_cast<int>(v));
  if (used.size() > 2) throw Error(ErrorKind::InvalidArgument, "more than two variables in use");
  if (used.empty()) return {};
  if (used.size() == 1) return factor_univariate_rational(a);

  // Main variable: the one of smaller degree keeps recombination cheap.
  int va = used[0], vb = used[1];
  if (a.degree(vb) < a.degree(va)) std::swap(va, vb);

  MultiPoly sqf = squarefree_part(a);
  std::vector<MultiPoly> irreducible;
  MultiPoly cont = content_in(sqf, va);
  if (!cont.is_constant())
    for (const auto& f : factor_univariate_rational(cont)) irreducible.push_back(f.poly);
  MultiPoly prim = exact_div(sqf, cont);
  if (prim.degree(va) > 0)
    for (auto& f : factor_primitive_bivariate(prim, va, vb)) irreducible.push_back(f);

  std::vector<Factor> out;
  for (const auto& f : irreducible) {
    int m = 0;
    MultiPoly r = a, q;
    while (divides(f, r, &q)) {
      r = q;
      ++m;
    }
    out.push_back({f, m});
  }
  std::sort(out.begin(), out.end(), [](const Factor& l, const Factor& r) {
    if (l.poly.total_degree() != r.poly.total_degree())
      return l.poly.total_degree() < r.poly.total_degree();
    return l.poly.to_string() < r.poly.to_string();
  });
  return out;
}

}  // namespace keller
