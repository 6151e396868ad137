#include "kamcert/interval.hpp"

#include <algorithm>
#include <utility>

#include "kamcert/errors.hpp"

namespace kamcert {

namespace {

void require_same_precision(const Interval& a, const Interval& b) {
  if (a.precision() != b.precision()) throw PrecisionMismatch();
}

// Product with the extended-real convention 0 * inf = 0.
void mul_ext(mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(a) || mpfr_zero_p(b)) {
    mpfr_set_zero(r, 1);
    return;
  }
  mpfr_mul(r, a, b, rnd);
}

Real min_real(Real a, const Real& b) {
  if (b < a) return b;
  return a;
}

Real max_real(Real a, const Real& b) {
  if (b > a) return b;
  return a;
}

template <typename Fn>
Real rounded(Precision prec, mpfr_rnd_t rnd, Fn&& fn) {
  Real r(prec);
  fn(r.get(), rnd);
  return r;
}

Interval unit_interval(Precision prec) {
  return Interval(Real(-1L, prec), Real(1L, prec));
}

// Parity of the integer-valued float m.
bool is_even_integer(const Real& m) {
  Real half(m.precision() + 1);
  mpfr_div_2ui(half.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_integer_p(half.get()) != 0;
}

// Calls visit(m) for every integer m in [s.lo, s.hi].
template <typename Visit>
void for_each_integer(const Interval& s, Visit&& visit) {
  Real m(s.precision() + 64);
  mpfr_ceil(m.get(), s.lo().get());
  for (int guard = 0; guard < 8 && mpfr_cmp(m.get(), s.hi().get()) <= 0; ++guard) {
    visit(m);
    mpfr_add_ui(m.get(), m.get(), 1, MPFR_RNDN);
  }
}

}  // namespace

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.precision() != hi_.precision()) throw PrecisionMismatch();
  if (lo_.is_nan() || hi_.is_nan()) throw EmptyInterval("interval endpoint is NaN");
  if (lo_ > hi_) throw EmptyInterval("interval with lo > hi");
  if (lo_.is_inf() && lo_.sign() > 0) throw EmptyInterval("interval lower endpoint is +inf");
  if (hi_.is_inf() && hi_.sign() < 0) throw EmptyInterval("interval upper endpoint is -inf");
}

Interval Interval::from_long(long v, Precision prec) {
  return Interval(Real(v, prec, MPFR_RNDD), Real(v, prec, MPFR_RNDU));
}

Interval Interval::from_double(double v, Precision prec) {
  return Interval(Real(v, prec, MPFR_RNDD), Real(v, prec, MPFR_RNDU));
}

Interval Interval::from_decimal(std::string_view text, Precision prec) {
  return Interval(Real::parse(text, prec, MPFR_RNDD), Real::parse(text, prec, MPFR_RNDU));
}

Interval Interval::from_ratio(long num, long den, Precision prec) {
  return from_long(num, prec) / from_long(den, prec);
}

Interval Interval::pi(Precision prec) {
  return Interval(Real::pi(prec, MPFR_RNDD), Real::pi(prec, MPFR_RNDU));
}

Interval Interval::two_pi(Precision prec) { return ldexp(pi(prec), 1); }

Interval Interval::entire(Precision prec) {
  return Interval(Real::infinity(-1, prec), Real::infinity(1, prec));
}

Interval Interval::at_least(const Real& x) { return Interval(x, Real::infinity(1, x.precision())); }

Real Interval::width() const {
  return rounded(precision(), MPFR_RNDU,
                 [&](mpfr_ptr r, mpfr_rnd_t rnd) { mpfr_sub(r, hi_.get(), lo_.get(), rnd); });
}

Real Interval::mid() const {
  if (lo_.is_inf() || hi_.is_inf()) {
    if (lo_.is_inf() && hi_.is_inf()) return Real(precision());
    return lo_.is_inf() ? hi_ : lo_;
  }
  Real r(precision());
  mpfr_add(r.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDN);
  return r;
}

Real Interval::mag() const { return max_real(abs(lo_), abs(hi_)); }

Real Interval::mig() const {
  if (contains_zero()) return Real(precision());
  return min_real(abs(lo_), abs(hi_));
}

bool Interval::contains(const Real& x) const { return lo_ <= x && x <= hi_; }

bool Interval::contains(const Interval& other) const {
  return lo_ <= other.lo_ && other.hi_ <= hi_;
}

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Interval::overlaps(const Interval& other) const {
  return !(hi_ < other.lo_ || other.hi_ < lo_);
}

std::string Interval::to_string(std::size_t digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

Interval& Interval::operator+=(const Interval& o) {
  require_same_precision(*this, o);
  mpfr_add(lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  require_same_precision(*this, o);
  // Aliasing: o may be *this.
  if (&o == this) {
    Real w = width();
    Real nw = -w;
    lo_ = std::move(nw);
    hi_ = std::move(w);
    return *this;
  }
  mpfr_sub(lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r = a;
  r += b;
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  require_same_precision(a, b);
  const Precision p = a.precision();
  Real lo(p);
  Real hi(p);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a) {
  const Precision p = a.precision();
  Real lo(p);
  Real hi(p);
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  require_same_precision(a, b);
  const Precision p = a.precision();
  Real lo(p);
  Real hi(p);
  const mpfr_srcptr al = a.lo().get();
  const mpfr_srcptr ah = a.hi().get();
  const mpfr_srcptr bl = b.lo().get();
  const mpfr_srcptr bh = b.hi().get();
  const int sal = mpfr_sgn(al);
  const int sah = mpfr_sgn(ah);
  const int sbl = mpfr_sgn(bl);
  const int sbh = mpfr_sgn(bh);
  if (sal >= 0 && sbl >= 0) {
    mul_ext(lo.get(), al, bl, MPFR_RNDD);
    mul_ext(hi.get(), ah, bh, MPFR_RNDU);
  } else if (sah <= 0 && sbh <= 0) {
    mul_ext(lo.get(), ah, bh, MPFR_RNDD);
    mul_ext(hi.get(), al, bl, MPFR_RNDU);
  } else if (sal >= 0 && sbh <= 0) {
    mul_ext(lo.get(), ah, bl, MPFR_RNDD);
    mul_ext(hi.get(), al, bh, MPFR_RNDU);
  } else if (sah <= 0 && sbl >= 0) {
    mul_ext(lo.get(), al, bh, MPFR_RNDD);
    mul_ext(hi.get(), ah, bl, MPFR_RNDU);
  } else {
    // At least one operand straddles zero: take all four corners.
    Real t(p);
    const mpfr_srcptr xs[2] = {al, ah};
    const mpfr_srcptr ys[2] = {bl, bh};
    mpfr_set_inf(lo.get(), 1);
    mpfr_set_inf(hi.get(), -1);
    for (auto x : xs) {
      for (auto y : ys) {
        mul_ext(t.get(), x, y, MPFR_RNDD);
        mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
        mul_ext(t.get(), x, y, MPFR_RNDU);
        mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
      }
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  require_same_precision(a, b);
  if (b.contains_zero()) throw DivisionByZeroInterval();
  const Precision p = a.precision();
  Real lo(p);
  Real hi(p);
  Real t(p);
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  const mpfr_srcptr xs[2] = {a.lo().get(), a.hi().get()};
  const mpfr_srcptr ys[2] = {b.lo().get(), b.hi().get()};
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (mpfr_nan_p(t.get())) return Interval::entire(p);
      mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator+(const Interval& a, long b) {
  return a + Interval::from_long(b, a.precision());
}

Interval operator-(const Interval& a, long b) {
  return a - Interval::from_long(b, a.precision());
}

Interval operator*(const Interval& a, long b) {
  return a * Interval::from_long(b, a.precision());
}

Interval operator/(const Interval& a, long b) {
  return a / Interval::from_long(b, a.precision());
}

Interval operator-(long a, const Interval& b) {
  return Interval::from_long(a, b.precision()) - b;
}

Interval operator/(long a, const Interval& b) {
  return Interval::from_long(a, b.precision()) / b;
}

Interval ldexp(const Interval& a, long k) {
  const Precision p = a.precision();
  Real lo(p);
  Real hi(p);
  mpfr_mul_2si(lo.get(), a.lo().get(), k, MPFR_RNDD);
  mpfr_mul_2si(hi.get(), a.hi().get(), k, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return -x;
  return Interval(Real(x.precision()), x.mag());
}

Interval sqr(const Interval& x) {
  const Precision p = x.precision();
  Interval a = abs(x);
  Real lo(p);
  Real hi(p);
  mpfr_sqr(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& x) {
  if (x.lo().sign() < 0) throw NegativeSqrt();
  const Precision p = x.precision();
  Real lo(p);
  Real hi(p);
  mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval min(const Interval& a, const Interval& b) {
  require_same_precision(a, b);
  return Interval(min_real(a.lo(), b.lo()), min_real(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  require_same_precision(a, b);
  return Interval(max_real(a.lo(), b.lo()), max_real(a.hi(), b.hi()));
}

Interval exp(const Interval& x) {
  const Precision p = x.precision();
  Real lo(p);
  Real hi(p);
  mpfr_exp(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& x) {
  if (x.lo().sign() <= 0) throw DomainError("log: argument not strictly positive");
  const Precision p = x.precision();
  Real lo(p);
  Real hi(p);
  mpfr_log(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sinh(const Interval& x) {
  const Precision p = x.precision();
  Real lo(p);
  Real hi(p);
  mpfr_sinh(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sinh(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval cosh(const Interval& x) {
  const Precision p = x.precision();
  Interval a = abs(x);
  Real lo(p);
  Real hi(p);
  mpfr_cosh(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_cosh(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& x, const Interval& e) {
  require_same_precision(x, e);
  if (x.lo().sign() <= 0) throw DomainError("pow: base not strictly positive");
  // x^e = exp(e log x) is monotone in each argument, so the extrema sit at
  // the corners of the box.
  const Precision p = x.precision();
  Real lo = Real::infinity(1, p);
  Real hi = Real::infinity(-1, p);
  Real t(p);
  for (const Real* b : {&x.lo(), &x.hi()}) {
    for (const Real* c : {&e.lo(), &e.hi()}) {
      mpfr_pow(t.get(), b->get(), c->get(), MPFR_RNDD);
      mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_pow(t.get(), b->get(), c->get(), MPFR_RNDU);
      mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& x, long n) {
  const Precision p = x.precision();
  if (n == 0) return Interval::from_long(1, p);
  if (n < 0) return 1L / pow(x, -n);
  const bool even = (n % 2) == 0;
  if (even) {
    Interval a = abs(x);
    Real lo(p);
    Real hi(p);
    mpfr_pow_si(lo.get(), a.lo().get(), n, MPFR_RNDD);
    mpfr_pow_si(hi.get(), a.hi().get(), n, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
  }
  Real lo(p);
  Real hi(p);
  mpfr_pow_si(lo.get(), x.lo().get(), n, MPFR_RNDD);
  mpfr_pow_si(hi.get(), x.hi().get(), n, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

namespace {

// sin or cos of a radian interval. Extrema are located by enclosing x/pi and
// looking for (half-)integers inside it; the enclosure is outer so no
// interior extremum is missed.
Interval trig_radians(const Interval& x, bool is_sin) {
  const Precision p = x.precision();
  if (!x.is_bounded()) return unit_interval(p);
  const Interval two_pi = Interval::two_pi(p);
  if (!(x.width() < two_pi.lo())) return unit_interval(p);
  auto fn = is_sin ? mpfr_sin : mpfr_cos;
  Real lo(p);
  Real hi(p);
  Real t(p);
  fn(lo.get(), x.lo().get(), MPFR_RNDD);
  fn(t.get(), x.hi().get(), MPFR_RNDD);
  mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  fn(hi.get(), x.lo().get(), MPFR_RNDU);
  fn(t.get(), x.hi().get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  // sin has extrema at pi/2 + m pi (max for m even); cos at m pi (max for m even).
  Interval s = x / Interval::pi(p);
  if (is_sin) s = s - Interval::from_ratio(1, 2, p);
  for_each_integer(s, [&](const Real& m) {
    if (is_even_integer(m)) {
      mpfr_set_ui(hi.get(), 1, MPFR_RNDU);
    } else {
      mpfr_set_si(lo.get(), -1, MPFR_RNDD);
    }
  });
  return Interval(std::move(lo), std::move(hi));
}

Interval round_outward(const Interval& x, Precision prec) {
  Real lo(prec);
  Real hi(prec);
  mpfr_set(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_set(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

// sin(2 pi x) or cos(2 pi x) with x measured in turns. Extremum positions are
// dyadic in turns (k/4), so the extremum test is exact.
Interval trig_turns(const Interval& x, bool is_sin) {
  const Precision p = x.precision();
  if (!x.is_bounded()) return unit_interval(p);
  if (!(x.width() < Real(1L, p))) return unit_interval(p);
  Real n(p);
  mpfr_floor(n.get(), x.lo().get());
  Interval r = x - Interval::point(n);
  // Endpoints are evaluated with guard bits so the product with 2 pi does
  // not cost more than an ulp after rounding back to p.
  const Precision guarded = p + 32;
  const Interval two_pi = Interval::two_pi(guarded);
  auto endpoint = [&](const Real& t) {
    Real wide(guarded);
    mpfr_set(wide.get(), t.get(), MPFR_RNDN);  // exact, more bits
    return round_outward(trig_radians(two_pi * Interval::point(wide), is_sin), p);
  };
  Interval out = hull(endpoint(r.lo()), endpoint(r.hi()));
  Real lo = out.lo();
  Real hi = out.hi();
  // r.lo is in [0, 1) up to rounding and r.hi < r.lo + 1.
  const double maxima_sin[] = {-0.75, 0.25, 1.25};
  const double minima_sin[] = {-0.25, 0.75, 1.75};
  const double maxima_cos[] = {0.0, 1.0, 2.0};
  const double minima_cos[] = {-0.5, 0.5, 1.5};
  const double* maxima = is_sin ? maxima_sin : maxima_cos;
  const double* minima = is_sin ? minima_sin : minima_cos;
  for (int i = 0; i < 3; ++i) {
    if (mpfr_cmp_d(r.lo().get(), maxima[i]) <= 0 && mpfr_cmp_d(r.hi().get(), maxima[i]) >= 0) {
      mpfr_set_ui(hi.get(), 1, MPFR_RNDU);
    }
    if (mpfr_cmp_d(r.lo().get(), minima[i]) <= 0 && mpfr_cmp_d(r.hi().get(), minima[i]) >= 0) {
      mpfr_set_si(lo.get(), -1, MPFR_RNDD);
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval sin(const Interval& x) { return trig_radians(x, true); }
Interval cos(const Interval& x) { return trig_radians(x, false); }
Interval sin_2pi(const Interval& x) { return trig_turns(x, true); }
Interval cos_2pi(const Interval& x) { return trig_turns(x, false); }

Interval hull(const Interval& a, const Interval& b) {
  require_same_precision(a, b);
  return Interval(min_real(a.lo(), b.lo()), max_real(a.hi(), b.hi()));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  require_same_precision(a, b);
  Real lo = max_real(a.lo(), b.lo());
  Real hi = min_real(a.hi(), b.hi());
  if (lo > hi) return std::nullopt;
  return Interval(std::move(lo), std::move(hi));
}

Interval pow2(long k, Precision prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.get(), r.get(), k, MPFR_RNDN);
  return Interval::point(r);
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.to_string(); }

ComplexInterval::ComplexInterval(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() != im_.precision()) throw PrecisionMismatch();
}

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexInterval& ComplexInterval::operator-=(const ComplexInterval& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& o) { return *this = *this * o; }

ComplexInterval& ComplexInterval::operator*=(const Interval& o) {
  re_ = re_ * o;
  im_ = im_ * o;
  return *this;
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  ComplexInterval r = a;
  r += b;
  return r;
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re() - b.re(), a.im() - b.im());
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}

ComplexInterval operator*(const ComplexInterval& a, const Interval& b) {
  return ComplexInterval(a.re() * b, a.im() * b);
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval den = sqr(b.re()) + sqr(b.im());
  return (a * conj(b)) / den;
}

ComplexInterval operator/(const ComplexInterval& a, const Interval& b) {
  return ComplexInterval(a.re() / b, a.im() / b);
}

ComplexInterval operator-(const ComplexInterval& a) { return ComplexInterval(-a.re(), -a.im()); }

ComplexInterval conj(const ComplexInterval& z) { return ComplexInterval(z.re(), -z.im()); }

ComplexInterval mul_i(const ComplexInterval& z) { return ComplexInterval(-z.im(), z.re()); }

Interval abs(const ComplexInterval& z) {
  if (z.im().is_point() && z.im().lo().is_zero()) return abs(z.re());
  if (z.re().is_point() && z.re().lo().is_zero()) return abs(z.im());
  return sqrt(sqr(z.re()) + sqr(z.im()));
}

ComplexInterval exp_2pi_i(const Interval& x) { return ComplexInterval(cos_2pi(x), sin_2pi(x)); }

ComplexInterval hull(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(hull(a.re(), b.re()), hull(a.im(), b.im()));
}

std::optional<ComplexInterval> intersect(const ComplexInterval& a, const ComplexInterval& b) {
  auto re = intersect(a.re(), b.re());
  auto im = intersect(a.im(), b.im());
  if (!re || !im) return std::nullopt;
  return ComplexInterval(std::move(*re), std::move(*im));
}

std::ostream& operator<<(std::ostream& os, const ComplexInterval& z) {
  return os << "(" << z.re() << " + i" << z.im() << ")";
}

}  // namespace kamcert
