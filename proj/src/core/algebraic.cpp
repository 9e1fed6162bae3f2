#include "keller/core/algebraic.hpp"

#include "keller/core/algebra.hpp"
#include "keller/core/errors.hpp"
#include "keller/core/factor.hpp"

namespace keller {

namespace {

constexpr int kStartBits = 64;
constexpr int kMaxBits = 4096;

const std::vector<std::string> kTS{"t", "s"};

MultiPoly in_s(const QPoly& p) { return from_qpoly(p, kTS, 1); }

QPoly res_s(const MultiPoly& a, const MultiPoly& b) { return to_qpoly(resultant(a, b, 1), 0); }

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& q)
    : m_(std::vector<Rational>{-q, Rational(1)}), box_(ComplexBox::point(q)), bits_(kMaxBits) {}

AlgebraicNumber AlgebraicNumber::root_of(const QPoly& irreducible, std::size_t index, int cap) {
  QPoly m = irreducible.monic();
  if (m.degree() > cap)
    throw DegreeCapError(from_qpoly(m, {"t"}).to_string(), m.degree(), cap);
  if (m.degree() == 1) return AlgebraicNumber(-m.coeff(0));
  RootIsolation iso(m, kStartBits);
  if (index >= iso.size()) throw Error(ErrorKind::InvalidArgument, "root index out of range");
  return AlgebraicNumber(m, iso.box(index), kStartBits);
}

AlgebraicNumber AlgebraicNumber::in_box(const QPoly& p, const ComplexBox& hint, int cap) {
  return select(p, [&](int) { return hint; }, cap);
}

AlgebraicNumber AlgebraicNumber::select(const QPoly& r,
                                        const std::function<ComplexBox(int)>& enclosure, int cap) {
  if (r.is_zero()) throw Error(ErrorKind::ZeroInput, "selecting a root of the zero polynomial");
  std::vector<QPoly> factors;
  for (const auto& [f, m] : factor_qpoly(r)) factors.push_back(f.monic());
  for (int bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    const ComplexBox e = enclosure(bits);
    const QPoly* hit = nullptr;
    ComplexBox hit_box;
    int hits = 0;
    for (const auto& f : factors) {
      if (f.degree() == 1) {
        Rational q = -f.coeff(0);
        if (e.re.contains(q) && e.im.contains_zero()) {
          ++hits;
          hit = &f;
          hit_box = ComplexBox::point(q);
        }
        continue;
      }
      RootIsolation iso(f, bits);
      for (const auto& b : iso.boxes()) {
        if (!b.intersects(e)) continue;
        ++hits;
        hit = &f;
        hit_box = b;
      }
    }
    if (hits == 0) throw Error(ErrorKind::InvalidArgument, "no root inside the enclosure");
    if (hits > 1) continue;
    if (hit->degree() > cap)
      throw DegreeCapError(from_qpoly(*hit, {"t"}).to_string(), hit->degree(), cap);
    if (hit->degree() == 1) return AlgebraicNumber(-hit->coeff(0));
    return AlgebraicNumber(*hit, hit_box, bits);
  }
  throw Error(ErrorKind::InstabilityDetected, "root selection did not separate candidates");
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "algebraic number is not rational");
  return -m_.coeff(0);
}

bool AlgebraicNumber::is_real() const {
  if (is_rational()) return true;
  // Isolating boxes are disjoint from their conjugates unless the root is real.
  return box_.im.contains_zero();
}

AlgebraicNumber AlgebraicNumber::refined(int bits) const {
  if (is_rational() || bits <= bits_) return *this;
  for (int b = bits; b <= 4 * bits + kMaxBits; b *= 2) {
    RootIsolation iso(m_, b);
    int hits = 0;
    ComplexBox found;
    for (const auto& nb : iso.boxes()) {
      if (nb.intersects(box_)) {
        ++hits;
        found = nb;
      }
    }
    if (hits == 1) return AlgebraicNumber(m_, found, b);
  }
  throw Error(ErrorKind::InstabilityDetected, "refinement lost track of the root");
}

double AlgebraicNumber::approx_re() const { return box_.re.mid().get_d(); }
double AlgebraicNumber::approx_im() const { return box_.im.mid().get_d(); }

std::string AlgebraicNumber::to_string(const std::string& var) const {
  if (is_rational()) return keller::to_string(rational_value());
  char buf[96];
  std::snprintf(buf, sizeof buf, " ~ %.10g%+.10gi", approx_re(), approx_im());
  return "root of " + from_qpoly(m_, {var}).to_string() + buf;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(a.rational_value() + b.rational_value());
  // Res_s(a(s), b(t - s)) vanishes at every sum of roots.
  MultiPoly t = MultiPoly::variable(kTS, "t"), s = MultiPoly::variable(kTS, "s");
  MultiPoly bt = from_qpoly(b.m_, kTS, 0).substitute(0, t - s);
  QPoly r = res_s(in_s(a.m_), bt);
  return AlgebraicNumber::select(
      r, [&](int bits) { return a.refined(bits).box_ + b.refined(bits).box_; }, kDefaultDegreeCap);
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  std::vector<Rational> c = m_.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if ((m_.degree() - k) % 2) c[k] = -c[k];
  ComplexBox nb{{-box_.re.hi, -box_.re.lo}, {-box_.im.hi, -box_.im.lo}};
  return AlgebraicNumber(QPoly(std::move(c)), nb, bits_);
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_zero() || b.is_zero()) return AlgebraicNumber(Rational(0));
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(a.rational_value() * b.rational_value());
  // Res_s(a(s), s^deg(b) b(t/s)) vanishes at every product of roots.
  MultiPoly bh(kTS);
  const int db = b.m_.degree();
  for (int k = 0; k <= db; ++k) bh.add_term({k, db - k}, b.m_.coeff(k));
  QPoly r = res_s(in_s(a.m_), bh);
  return AlgebraicNumber::select(
      r, [&](int bits) { return a.refined(bits).box_ * b.refined(bits).box_; }, kDefaultDegreeCap);
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InversionOfZero, "inverse of zero");
  if (is_rational()) return AlgebraicNumber(1 / rational_value());
  std::vector<Rational> c(m_.coeffs().rbegin(), m_.coeffs().rend());
  QPoly rev = QPoly(std::move(c)).monic();
  return select(
      rev,
      [&](int bits) {
        // Shrink until the box excludes zero.
        for (int b = bits;; b *= 2) {
          AlgebraicNumber r = refined(b);
          if (!r.box_.contains_zero()) return keller::inverse(r.box_);
        }
      },
      kDefaultDegreeCap);
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!(a.m_ == b.m_)) return false;
  if (a.is_rational()) return true;
  // Same minimal polynomial: equal iff both boxes single out the same root.
  for (int bits = std::max(a.bits_, b.bits_); bits <= 4 * kMaxBits; bits *= 2) {
    RootIsolation iso(a.m_, bits);
    ComplexBox ra = a.refined(bits).box_, rb = b.refined(bits).box_;
    int ia = -1, ib = -1, ca = 0, cb = 0;
    for (std::size_t k = 0; k < iso.size(); ++k) {
      if (iso.box(k).intersects(ra)) ++ca, ia = static_cast<int>(k);
      if (iso.box(k).intersects(rb)) ++cb, ib = static_cast<int>(k);
    }
    if (ca == 1 && cb == 1) return ia == ib;
  }
  throw Error(ErrorKind::InstabilityDetected, "equality test did not separate roots");
}

AlgebraicNumber embed(const KElem& e, const AlgebraicNumber& generator, int cap) {
  if (e.is_rational()) return AlgebraicNumber(e.rational_value());
  const QPoly& m = e.field()->min_poly();
  if (!(m == generator.min_poly()))
    throw Error(ErrorKind::InvalidArgument, "embedding generator is not a root of the field modulus");
  // Characteristic polynomial of e: Res_s(m(s), t - rep(s)).
  MultiPoly t = MultiPoly::variable(kTS, "t");
  QPoly r = res_s(in_s(m), t - in_s(e.rep()));
  const QPoly rep = e.rep();
  return AlgebraicNumber::select(
      r, [&](int bits) { return evaluate(rep, generator.refined(bits).box()); }, cap);
}

}  // namespace keller
