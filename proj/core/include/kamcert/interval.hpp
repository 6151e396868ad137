#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "kamcert/real.hpp"

namespace kamcert {

/// Closed interval [lo, hi] of extended reals with outward-rounded arithmetic.
///
/// The lower endpoint may be -inf and the upper endpoint +inf. Every
/// operation returns an enclosure of the exact image of its operands; empty
/// results are reported as errors, never returned. Operands of a binary
/// operation must share one precision.
class Interval {
 public:
  Interval() : Interval(working_precision()) {}
  explicit Interval(Precision prec) : lo_(prec), hi_(prec) {}
  /// Throws EmptyInterval if lo > hi, PrecisionMismatch on differing precisions.
  Interval(Real lo, Real hi);

  static Interval point(const Real& x) { return Interval(x, x); }
  static Interval from_long(long v, Precision prec = working_precision());
  /// Exactly representable doubles only give point intervals; others are
  /// rounded outward.
  static Interval from_double(double v, Precision prec = working_precision());
  /// Outward-rounded enclosure of a decimal literal such as "0.381966011250104".
  static Interval from_decimal(std::string_view text, Precision prec = working_precision());
  /// Enclosure of num/den.
  static Interval from_ratio(long num, long den, Precision prec = working_precision());
  static Interval pi(Precision prec = working_precision());
  static Interval two_pi(Precision prec = working_precision());
  static Interval entire(Precision prec = working_precision());
  /// [x, +inf]
  static Interval at_least(const Real& x);

  [[nodiscard]] const Real& lo() const noexcept { return lo_; }
  [[nodiscard]] const Real& hi() const noexcept { return hi_; }
  [[nodiscard]] Precision precision() const noexcept { return lo_.precision(); }

  /// Upper bound of hi - lo.
  [[nodiscard]] Real width() const;
  /// Rounded midpoint (not an enclosure).
  [[nodiscard]] Real mid() const;
  /// Upper bound of max |x| over the interval.
  [[nodiscard]] Real mag() const;
  /// Lower bound of min |x| over the interval.
  [[nodiscard]] Real mig() const;

  [[nodiscard]] bool contains(const Real& x) const;
  [[nodiscard]] bool contains(const Interval& other) const;
  [[nodiscard]] bool contains_zero() const;
  [[nodiscard]] bool is_point() const { return lo_ == hi_; }
  [[nodiscard]] bool is_bounded() const { return !lo_.is_inf() && !hi_.is_inf(); }
  [[nodiscard]] bool certainly_positive() const { return lo_.sign() > 0; }
  [[nodiscard]] bool certainly_negative() const { return hi_.sign() < 0; }
  [[nodiscard]] bool overlaps(const Interval& other) const;

  [[nodiscard]] std::string to_string(std::size_t digits = 0) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

 private:
  Real lo_;
  Real hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval operator+(const Interval& a, long b);
Interval operator-(const Interval& a, long b);
Interval operator*(const Interval& a, long b);
Interval operator/(const Interval& a, long b);
inline Interval operator+(long a, const Interval& b) { return b + a; }
inline Interval operator*(long a, const Interval& b) { return b * a; }
Interval operator-(long a, const Interval& b);
Interval operator/(long a, const Interval& b);

/// Multiplication by 2^k, exact unless the exponent range is exceeded.
Interval ldexp(const Interval& a, long k);

Interval abs(const Interval& x);
Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval sinh(const Interval& x);
Interval cosh(const Interval& x);
/// x^e for x > 0.
Interval pow(const Interval& x, const Interval& e);
Interval pow(const Interval& x, long n);
/// sin(2 pi x), cos(2 pi x) with the argument reduced modulo 1 first.
Interval sin_2pi(const Interval& x);
Interval cos_2pi(const Interval& x);

/// Convex hull.
Interval hull(const Interval& a, const Interval& b);
/// Intersection, or nullopt when disjoint.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Point interval 2^k.
Interval pow2(long k, Precision prec = working_precision());

std::ostream& operator<<(std::ostream& os, const Interval& x);

/// Rectangle in the complex plane: z in Z iff Re z in Z.re and Im z in Z.im.
class ComplexInterval {
 public:
  ComplexInterval() : ComplexInterval(working_precision()) {}
  explicit ComplexInterval(Precision prec) : re_(prec), im_(prec) {}
  ComplexInterval(Interval re, Interval im);
  explicit ComplexInterval(Interval re) : ComplexInterval(re, Interval(re.precision())) {}

  [[nodiscard]] const Interval& re() const noexcept { return re_; }
  [[nodiscard]] const Interval& im() const noexcept { return im_; }
  Interval& re() noexcept { return re_; }
  Interval& im() noexcept { return im_; }
  [[nodiscard]] Precision precision() const noexcept { return re_.precision(); }

  [[nodiscard]] bool contains(const ComplexInterval& other) const {
    return re_.contains(other.re_) && im_.contains(other.im_);
  }
  [[nodiscard]] bool contains(const Real& re, const Real& im) const {
    return re_.contains(re) && im_.contains(im);
  }
  [[nodiscard]] bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  [[nodiscard]] bool overlaps(const ComplexInterval& o) const {
    return re_.overlaps(o.re_) && im_.overlaps(o.im_);
  }

  ComplexInterval& operator+=(const ComplexInterval& o);
  ComplexInterval& operator-=(const ComplexInterval& o);
  ComplexInterval& operator*=(const ComplexInterval& o);
  ComplexInterval& operator*=(const Interval& o);

 private:
  Interval re_;
  Interval im_;
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const Interval& b);
inline ComplexInterval operator*(const Interval& a, const ComplexInterval& b) { return b * a; }
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator/(const ComplexInterval& a, const Interval& b);
ComplexInterval operator-(const ComplexInterval& a);

ComplexInterval conj(const ComplexInterval& z);
/// Multiplication by i.
ComplexInterval mul_i(const ComplexInterval& z);
/// Enclosure of |z| over the rectangle.
Interval abs(const ComplexInterval& z);
/// Enclosure of e^{2 pi i x}.
ComplexInterval exp_2pi_i(const Interval& x);
ComplexInterval hull(const ComplexInterval& a, const ComplexInterval& b);
std::optional<ComplexInterval> intersect(const ComplexInterval& a, const ComplexInterval& b);

std::ostream& operator<<(std::ostream& os, const ComplexInterval& z);

}  // namespace kamcert
