#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace kamcert {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

/// Precision used when a value is created without an explicit precision.
Precision working_precision() noexcept;

/// Sets the working precision of the calling thread for the lifetime of the
/// guard.
class PrecisionScope {
 public:
  explicit PrecisionScope(Precision bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Precision saved_;
};

/// Owning wrapper around an MPFR float. Arithmetic on Real rounds to nearest;
/// directed rounding is reached through the raw handle.
class Real {
 public:
  Real() : Real(working_precision()) {}
  explicit Real(Precision prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
  }
  Real(double v, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(value_, prec);
    mpfr_set_d(value_, v, rnd);
  }
  Real(long v, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, v, rnd);
  }
  /// Parses a decimal string; throws DomainError on malformed input.
  static Real parse(std::string_view text, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real pi(Precision prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real infinity(int sign, Precision prec);

  Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept : owned_(other.owned_) {
    value_[0] = other.value_[0];
    other.owned_ = false;
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      if (!owned_) {
        mpfr_init2(value_, mpfr_get_prec(other.value_));
        owned_ = true;
      } else if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      }
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    if (this != &other) {
      if (owned_) mpfr_clear(value_);
      value_[0] = other.value_[0];
      owned_ = other.owned_;
      other.owned_ = false;
    }
    return *this;
  }
  ~Real() {
    if (owned_) mpfr_clear(value_);
  }

  [[nodiscard]] mpfr_ptr get() noexcept { return value_; }
  [[nodiscard]] mpfr_srcptr get() const noexcept { return value_; }
  [[nodiscard]] Precision precision() const noexcept { return mpfr_get_prec(value_); }

  [[nodiscard]] double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  /// Decimal rendering with `digits` significant digits (0 = enough to
  /// round-trip) rounded in direction `rnd`.
  [[nodiscard]] std::string to_string(std::size_t digits = 0, mpfr_rnd_t rnd = MPFR_RNDN) const;

  [[nodiscard]] bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] bool is_inf() const noexcept { return mpfr_inf_p(value_) != 0; }
  [[nodiscard]] bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
  [[nodiscard]] int sign() const noexcept { return mpfr_sgn(value_); }

  Real& operator+=(const Real& o) { mpfr_add(value_, value_, o.value_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(value_, value_, o.value_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(value_, value_, o.value_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(value_, value_, o.value_, MPFR_RNDN); return *this; }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.value_, a.value_, MPFR_RNDN);
    return a;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

 private:
  mpfr_t value_;
  bool owned_ = true;
};

Real abs(Real x);
Real sqrt(Real x);
Real exp(Real x);
Real log(Real x);
Real sin(Real x);
Real cos(Real x);
/// sin(2*pi*x) and cos(2*pi*x), reducing x modulo 1 first.
Real sin_2pi(const Real& x);
Real cos_2pi(const Real& x);
Real floor(Real x);
/// x - floor(x), in [0, 1).
Real frac(const Real& x);
Real pow(const Real& x, const Real& e);

}  // namespace kamcert
