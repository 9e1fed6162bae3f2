#include "keller/core/linalg.hpp"

#include <algorithm>
#include <map>

#include "keller/core/errors.hpp"

namespace keller {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Subtract f * src from dst (both sorted sparse rows) and return the sum.
SparseRow combine(const SparseRow& dst, const Integer& fd, const SparseRow& src, const Integer& fs) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.emplace_back(dst[i].first, fd * dst[i].second);
      ++i;
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -fs * src[j].second);
      ++j;
    } else {
      Integer v = fd * dst[i].second - fs * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void remove_content(SparseRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

int exact_rank(std::vector<SparseRow> rows, std::vector<int>* pivot_cols) {
  std::map<int, SparseRow> pivots;  // leading column -> reduced row
  // Short rows first keeps fill-in low.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (auto& row : rows) {
    remove_content(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const SparseRow& pv = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pv.front().second.get_mpz_t());
      Integer fd = pv.front().second / g, fs = row.front().second / g;
      row = combine(row, fd, pv, fs);
      remove_content(row);
    }
    if (!row.empty()) pivots.emplace(row.front().first, std::move(row));
  }
  if (pivot_cols) {
    pivot_cols->clear();
    for (const auto& [c, r] : pivots) pivot_cols->push_back(c);
  }
  return static_cast<int>(pivots.size());
}

u64 mod_of(const Integer& a, u64 p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r.get_ui();
}

int rank_mod(std::vector<std::vector<u64>> m, u64 p, std::vector<int>* rows, std::vector<int>* cols) {
  const int nr = static_cast<int>(m.size());
  const int nc = nr ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> row_id(nr);
  for (int i = 0; i < nr; ++i) row_id[i] = i;
  if (rows) rows->clear();
  if (cols) cols->clear();
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    std::swap(row_id[r], row_id[piv]);
    const u64 inv = invmod(m[r][c], p);
    for (int i = r + 1; i < nr; ++i) {
      if (!m[i][c]) continue;
      const u64 f = mulmod(m[i][c], inv, p);
      for (int k = c; k < nc; ++k)
        if (m[r][k]) m[i][k] = submod(m[i][k], mulmod(f, m[r][k], p), p);
    }
    if (rows) rows->push_back(row_id[r]);
    if (cols) cols->push_back(c);
    ++r;
  }
  if (rows) std::sort(rows->begin(), rows->end());
  return r;
}

u64 det_mod(std::vector<std::vector<u64>> m, u64 p) {
  const int n = static_cast<int>(m.size());
  u64 det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = p - det;
    }
    det = mulmod(det, m[c][c], p);
    const u64 inv = invmod(m[c][c], p);
    for (int i = c + 1; i < n; ++i) {
      if (!m[i][c]) continue;
      const u64 f = mulmod(m[i][c], inv, p);
      for (int k = c; k < n; ++k)
        if (m[c][k]) m[i][k] = submod(m[i][k], mulmod(f, m[c][k], p), p);
    }
  }
  return det % p;
}

const std::vector<u64>& large_primes(std::size_t count) {
  static std::vector<u64> primes;
  static const bool init = [] {
    Integer c = Integer(1) << 62;
    for (int k = 0; k < 256; ++k) {
      mpz_sub_ui(c.get_mpz_t(), c.get_mpz_t(), 1);
      while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0) mpz_sub_ui(c.get_mpz_t(), c.get_mpz_t(), 1);
      primes.push_back(c.get_ui());
    }
    return true;
  }();
  (void)init;
  if (count > primes.size()) throw Error(ErrorKind::InvalidArgument, "prime table exhausted");
  return primes;
}

std::vector<Integer> det_linear_pencil(const std::vector<std::vector<Integer>>& a,
                                       const std::vector<std::vector<Integer>>& b) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {Integer(1)};
  // |coefficients| <= max over |t| = 1 of |det| <= prod_i (|a_i| + |b_i|).
  Integer bound = 1;
  for (int i = 0; i < n; ++i) {
    Integer sa = 0, sb = 0;
    for (int j = 0; j < n; ++j) {
      sa += a[i][j] * a[i][j];
      sb += b[i][j] * b[i][j];
    }
    Integer ra, rb;
    mpz_sqrt(ra.get_mpz_t(), sa.get_mpz_t());
    mpz_sqrt(rb.get_mpz_t(), sb.get_mpz_t());
    bound *= ra + rb + 2;
  }
  Integer need = 2 * bound + 1;

  std::vector<Integer> coeffs(n + 1, Integer(0));
  Integer modulus = 1;
  const auto& primes = large_primes(256);
  for (u64 p : primes) {
    // Values at t = 0..n, then Newton interpolation.
    std::vector<u64> xs(n + 1), ys(n + 1);
    std::vector<std::vector<u64>> am(n, std::vector<u64>(n)), bm(n, std::vector<u64>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        am[i][j] = mod_of(a[i][j], p);
        bm[i][j] = mod_of(b[i][j], p);
      }
    for (int k = 0; k <= n; ++k) {
      xs[k] = static_cast<u64>(k);
      std::vector<std::vector<u64>> m(n, std::vector<u64>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = addmod(am[i][j], mulmod(xs[k], bm[i][j], p), p);
      ys[k] = det_mod(std::move(m), p);
    }
    std::vector<u64> dd = ys;
    for (int level = 1; level <= n; ++level)
      for (int k = n; k >= level; --k)
        dd[k] = mulmod(submod(dd[k], dd[k - 1], p), invmod(submod(xs[k], xs[k - level], p), p), p);
    std::vector<u64> poly(n + 1, 0);
    for (int k = n; k >= 0; --k) {
      // poly = poly * (t - xs[k]) + dd[k]
      std::vector<u64> next(n + 1, 0);
      for (int j = 0; j < n; ++j) {
        next[j + 1] = addmod(next[j + 1], poly[j], p);
        next[j] = submod(next[j], mulmod(poly[j], xs[k], p), p);
      }
      next[0] = addmod(next[0], dd[k], p);
      poly = std::move(next);
    }
    // CRT merge.
    Integer pz(static_cast<unsigned long>(p));
    Integer minv;
    Integer mm = modulus % pz;
    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
    for (int k = 0; k <= n; ++k) {
      Integer r(static_cast<unsigned long>(poly[k]));
      Integer diff = (r - coeffs[k]) % pz;
      if (diff < 0) diff += pz;
      Integer h = diff * minv % pz;
      coeffs[k] += modulus * h;
    }
    modulus *= pz;
    if (modulus > need) break;
  }
  if (modulus <= need) throw Error(ErrorKind::InstabilityDetected, "determinant bound exceeded prime table");
  Integer half = modulus / 2;
  for (auto& c : coeffs)
    if (c > half) c -= modulus;
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace keller
