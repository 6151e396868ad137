#include "kamcert/real.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "kamcert/errors.hpp"

namespace kamcert {

namespace {
thread_local Precision g_working_precision = kDefaultPrecision;
}

Precision working_precision() noexcept { return g_working_precision; }

PrecisionScope::PrecisionScope(Precision bits) : saved_(g_working_precision) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw DomainError("precision out of range: " + std::to_string(bits));
  }
  g_working_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_working_precision = saved_; }

Real Real::parse(std::string_view text, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(r.get(), s.c_str(), 10, rnd) != 0) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::pi(Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_const_pi(r.get(), rnd);
  return r;
}

Real Real::infinity(int sign, Precision prec) {
  Real r(prec);
  mpfr_set_inf(r.get(), sign);
  return r;
}

std::string Real::to_string(std::size_t digits, mpfr_rnd_t rnd) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  if (digits == 0) {
    // Enough decimal digits to round-trip the binary precision.
    digits = static_cast<std::size_t>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 2;
  }
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp10, 10, digits, value_, rnd),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (!mant.empty() && mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // d.ddddde(exp10-1)
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

Real abs(Real x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real sqrt(Real x) {
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real exp(Real x) {
  mpfr_exp(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real log(Real x) {
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real sin(Real x) {
  mpfr_sin(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real cos(Real x) {
  mpfr_cos(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real floor(Real x) {
  mpfr_floor(x.get(), x.get());
  return x;
}

Real frac(const Real& x) {
  Real f(x.precision());
  Real fl = floor(x);
  mpfr_sub(f.get(), x.get(), fl.get(), MPFR_RNDN);
  return f;
}

Real sin_2pi(const Real& x) {
  Real t = frac(x);
  Real two_pi = Real::pi(x.precision());
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
  t *= two_pi;
  return sin(std::move(t));
}

Real cos_2pi(const Real& x) {
  Real t = frac(x);
  Real two_pi = Real::pi(x.precision());
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
  t *= two_pi;
  return cos(std::move(t));
}

Real pow(const Real& x, const Real& e) {
  Real r(x.precision());
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r;
}

}  // namespace kamcert
