#include "keller/core/complex_roots.hpp"

#include <algorithm>
#include <cmath>

#include "keller/core/errors.hpp"

namespace keller {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval square(const Interval& a) {
  Rational l = a.lo * a.lo, h = a.hi * a.hi;
  if (a.contains_zero()) return {0, std::max(l, h)};
  return {std::min(l, h), std::max(l, h)};
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBox inverse(const ComplexBox& a) {
  Interval n = square(a.re) + square(a.im);
  if (n.lo <= 0) throw Error(ErrorKind::InversionOfZero, "interval inverse of a box containing 0");
  Interval inv{1 / n.hi, 1 / n.lo};
  Interval neg_im{-a.im.hi, -a.im.lo};
  return {a.re * inv, neg_im * inv};
}

ComplexBox evaluate(const QPoly& p, const ComplexBox& z) {
  ComplexBox r = ComplexBox::point(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + ComplexBox::point(*it);
  return r;
}

namespace {

struct Cf {
  mpf_class re, im;
};

Cf cmul(const Cf& a, const Cf& b, mp_bitcnt_t prec) {
  Cf r{mpf_class(0, prec), mpf_class(0, prec)};
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

Cf cdiv(const Cf& a, const Cf& b, mp_bitcnt_t prec) {
  mpf_class d(b.re * b.re + b.im * b.im, prec);
  Cf r{mpf_class(0, prec), mpf_class(0, prec)};
  r.re = (a.re * b.re + a.im * b.im) / d;
  r.im = (a.im * b.re - a.re * b.im) / d;
  return r;
}

// Exact complex rationals for certification.
struct Cq {
  Rational re, im;
};

Cq qmul(const Cq& a, const Cq& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// Smallest "nice" rational upper bound for sqrt(x), x >= 0.
Rational sqrt_upper(const Rational& x) {
  if (x == 0) return 0;
  mpf_class f(x, 256);
  mpf_class s = sqrt(f);
  s *= mpf_class(1.0000001, 256);
  Rational r(s);
  while (r * r < x) r *= Rational(11, 10);
  return r;
}

}  // namespace

RootIsolation::RootIsolation(const QPoly& p, int bits) : p_(p.monic()), bits_(bits) {
  if (p_.is_zero()) throw Error(ErrorKind::ZeroInput, "root isolation of zero polynomial");
  if (gcd(p_, p_.derivative()).degree() > 0)
    throw Error(ErrorKind::InvalidArgument, "root isolation requires a squarefree polynomial");
  const int n = p_.degree();
  if (n == 0) return;
  if (n == 1) {
    Rational r = -p_.coeff(0);
    boxes_.push_back(ComplexBox::point(r));
    real_.push_back(true);
    centers_.emplace_back(r, 0);
    return;
  }
  certify_or_iterate();
}

void RootIsolation::certify_or_iterate() {
  const int n = p_.degree();
  double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(p_.coeff(k).get_d()));
  bound = 1 + bound;

  const bool fresh = centers_.empty();
  std::vector<Cf> z;
  for (mp_bitcnt_t prec = std::max<mp_bitcnt_t>(128, 2 * bits_ + 64); prec <= 1 << 14; prec *= 2) {
    // Initial points: previous centers, or a spiral of radius `bound`.
    z.clear();
    if (!fresh || !centers_.empty()) {
      for (const auto& [re, im] : centers_) z.push_back({mpf_class(re, prec), mpf_class(im, prec)});
    } else {
      for (int k = 0; k < n; ++k) {
        double th = 2 * M_PI * k / n + 0.4;
        z.push_back({mpf_class(bound * std::cos(th), prec), mpf_class(bound * std::sin(th), prec)});
      }
    }
    // Durand-Kerner (Weierstrass) iteration.
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 16);
    std::vector<Cf> cq(n + 1);
    for (int k = 0; k <= n; ++k) cq[k] = {mpf_class(p_.coeff(k), prec), mpf_class(0, prec)};
    for (int iter = 0; iter < 2000; ++iter) {
      mpf_class maxstep(0, prec);
      for (int i = 0; i < n; ++i) {
        Cf val{mpf_class(0, prec), mpf_class(0, prec)};
        for (int k = n; k >= 0; --k) {
          val = cmul(val, z[i], prec);
          val.re += cq[k].re;
        }
        Cf den{mpf_class(1, prec), mpf_class(0, prec)};
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          Cf d{mpf_class(z[i].re - z[j].re, prec), mpf_class(z[i].im - z[j].im, prec)};
          den = cmul(den, d, prec);
        }
        if (den.re == 0 && den.im == 0) {
          z[i].re += mpf_class(1e-3, prec);
          continue;
        }
        Cf step = cdiv(val, den, prec);
        z[i].re -= step.re;
        z[i].im -= step.im;
        mpf_class m = abs(step.re) + abs(step.im);
        if (m > maxstep) maxstep = m;
      }
      if (maxstep < tol) break;
    }

    // Classify real roots and enforce conjugate symmetry.
    std::vector<std::pair<Rational, Rational>> centers;
    std::vector<bool> real;
    if (fresh && centers_.empty()) {
      mpf_class rtol(1, prec);
      mpf_div_2exp(rtol.get_mpf_t(), rtol.get_mpf_t(), prec / 3);
      std::vector<Rational> reals;
      std::vector<std::pair<Rational, Rational>> upper;
      int lower = 0;
      for (const auto& r : z) {
        if (abs(r.im) < rtol * (1 + abs(r.re))) reals.emplace_back(Rational(r.re));
        else if (r.im > 0) upper.emplace_back(Rational(r.re), Rational(r.im));
        else ++lower;
      }
      if (static_cast<int>(upper.size()) != lower) continue;
      std::sort(reals.begin(), reals.end());
      // Real parts that agree to working precision are treated as equal.
      const Rational qtol(rtol);
      std::sort(upper.begin(), upper.end(), [&](const auto& a, const auto& b) {
        Rational d = a.first - b.first;
        if (abs(d) > qtol * (1 + abs(a.first))) return d < 0;
        return a.second < b.second;
      });
      for (const auto& r : reals) {
        centers.emplace_back(r, 0);
        real.push_back(true);
      }
      for (const auto& u : upper) {
        centers.push_back(u);
        real.push_back(false);
      }
      for (const auto& u : upper) {
        centers.emplace_back(u.first, -u.second);
        real.push_back(false);
      }
    } else {
      // Keep the established order; re-symmetrize.
      real = real_;
      const int nr = static_cast<int>(std::count(real.begin(), real.end(), true));
      const int nu = (n - nr) / 2;
      centers.resize(n);
      for (int i = 0; i < nr; ++i) centers[i] = {Rational(z[i].re), 0};
      for (int i = 0; i < nu; ++i) {
        Rational re(z[nr + i].re), im(z[nr + i].im);
        centers[nr + i] = {re, im};
        centers[nr + nu + i] = {re, -im};
      }
    }

    // Gerschgorin certification: the roots are the eigenvalues of
    // diag(z) - w*1^T with w_i = p(z_i) / prod_{j != i}(z_i - z_j).
    std::vector<ComplexBox> boxes(n);
    std::vector<Rational> radius(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Cq zi{centers[i].first, centers[i].second};
      Cq val{0, 0};
      for (int k = n; k >= 0; --k) {
        val = qmul(val, zi);
        val.re += p_.coeff(k);
      }
      Cq den{1, 0};
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        den = qmul(den, Cq{zi.re - centers[j].first, zi.im - centers[j].second});
      }
      Rational dn = den.re * den.re + den.im * den.im;
      if (dn == 0) {
        ok = false;
        break;
      }
      Rational vn = val.re * val.re + val.im * val.im;
      radius[i] = n * sqrt_upper(vn / dn);
      boxes[i] = {{zi.re - radius[i], zi.re + radius[i]}, {zi.im - radius[i], zi.im + radius[i]}};
    }
    Rational target(1);
    mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), bits_ + 1);
    for (int i = 0; i < n && ok; ++i) {
      if (radius[i] > target) ok = false;
      for (int j = i + 1; j < n && ok; ++j)
        if (boxes[i].intersects(boxes[j])) ok = false;
    }
    centers_ = centers;
    real_ = real;
    if (ok) {
      boxes_ = std::move(boxes);
      return;
    }
  }
  throw Error(ErrorKind::InstabilityDetected,
              "root isolation did not certify for " + from_qpoly(p_, {"t"}).to_string());
}

void RootIsolation::refine(int bits) {
  if (bits <= bits_) return;
  bits_ = bits;
  if (p_.degree() <= 1) return;
  certify_or_iterate();
}

}  // namespace keller
