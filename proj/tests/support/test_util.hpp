#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "kamcert/fourier.hpp"

namespace kamcert::testutil {

inline constexpr Precision kP = 128;

struct RationalCoeff {
  mpq_class re;
  mpq_class im;
};

/// Exact rational coefficients c_k for |k| <= degree; conjugate-symmetric when
/// `real` is set.
struct TrigPolynomial {
  std::map<long, RationalCoeff> coeffs;
  bool real = false;
};

inline mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 997);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline TrigPolynomial random_trig_polynomial(std::mt19937_64& rng, int degree, bool real) {
  TrigPolynomial p;
  p.real = real;
  for (long k = -degree; k <= degree; ++k) {
    if (real && k < 0) continue;
    RationalCoeff c{random_rational(rng), random_rational(rng)};
    if (real && k == 0) c.im = 0;
    p.coeffs[k] = c;
    if (real && k > 0) p.coeffs[-k] = RationalCoeff{c.re, -c.im};
  }
  return p;
}

inline Interval enclose(const mpq_class& q, Precision prec = kP) {
  Real lo(prec);
  Real hi(prec);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

inline ComplexInterval exact_coeff(const TrigPolynomial& p, long k, Precision prec = kP) {
  auto it = p.coeffs.find(k);
  if (it == p.coeffs.end()) return ComplexInterval(prec);
  return ComplexInterval(enclose(it->second.re, prec), enclose(it->second.im, prec));
}

inline FourierModel model_from(const TrigPolynomial& p, std::size_t n, Precision prec = kP) {
  FourierModel m(n, prec, p.real);
  for (const auto& [k, c] : p.coeffs) m.coeff(k) = ComplexInterval(enclose(c.re, prec), enclose(c.im, prec));
  return m;
}

/// Direct evaluation at theta_j = j/n from a table of enclosed roots of unity.
inline GridSamples sample_polynomial(const TrigPolynomial& p, std::size_t n, Precision prec = kP) {
  const long nn = static_cast<long>(n);
  std::vector<ComplexInterval> roots;
  roots.reserve(n);
  for (long m = 0; m < nn; ++m) roots.push_back(exp_2pi_i(Interval::from_ratio(m, nn, prec)));
  std::vector<std::pair<long, ComplexInterval>> terms;
  for (const auto& [k, c] : p.coeffs) terms.emplace_back(k, ComplexInterval(enclose(c.re, prec), enclose(c.im, prec)));
  GridSamples s(n, prec);
  for (long j = 0; j < nn; ++j) {
    ComplexInterval sum(prec);
    for (const auto& [k, c] : terms) sum += c * roots[static_cast<std::size_t>(((k * j) % nn + nn) % nn)];
    s[static_cast<std::size_t>(j)] = sum;
  }
  return s;
}

/// O(N^2) interval DFT in FFT order.
inline std::vector<ComplexInterval> naive_dft(const GridSamples& s) {
  const long n = static_cast<long>(s.size());
  const Precision prec = s.precision();
  std::vector<ComplexInterval> out;
  for (long idx = 0; idx < n; ++idx) {
    ComplexInterval sum(prec);
    for (long j = 0; j < n; ++j) {
      const long m = ((-idx * j) % n + n) % n;
      sum += s[static_cast<std::size_t>(j)] * exp_2pi_i(Interval::from_ratio(m, n, prec));
    }
    out.push_back(sum / Interval::from_long(n, prec));
  }
  return out;
}

/// Poisson kernel f(theta) = (1 - r^2)/((1 - r z)(1 - r/z)), z = e^{2 pi i theta},
/// with exact coefficients r^|k|, analytic for |Im theta| < log(1/r)/(2 pi).
struct Poisson {
  long num;
  long den;

  [[nodiscard]] Interval r(Precision prec) const { return Interval::from_ratio(num, den, prec); }

  /// Real sup over the strip |Im theta| <= rho: (1 - r^2)/(1 - 2 r cosh(2 pi rho) + r^2).
  [[nodiscard]] Interval strip_sup(const Interval& rho) const {
    const Interval rr = r(rho.precision());
    return (1L - sqr(rr)) / (1L - rr * cosh(Interval::two_pi(rho.precision()) * rho) * 2L + sqr(rr));
  }

  [[nodiscard]] Interval rho_max(Precision prec) const {
    return -log(r(prec)) / Interval::two_pi(prec);
  }

  [[nodiscard]] ComplexInterval value(const ComplexInterval& theta) const {
    const Precision prec = theta.precision();
    const Interval rr = r(prec);
    const Interval scale = exp(-(Interval::two_pi(prec) * theta.im()));
    const ComplexInterval z = exp_2pi_i(theta.re()) * scale;
    const ComplexInterval one(Interval::from_long(1, prec));
    const ComplexInterval zinv = one / z;
    return ComplexInterval(1L - sqr(rr)) / ((one - z * rr) * (one - zinv * rr));
  }

  [[nodiscard]] GridSamples samples(std::size_t n, Precision prec) const {
    GridSamples s(n, prec);
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexInterval theta(Interval::from_ratio(static_cast<long>(j), static_cast<long>(n), prec));
      s[j] = ComplexInterval(value(theta).re());
    }
    return s;
  }

  /// Exact Fourier coefficient r^|k|.
  [[nodiscard]] Interval coeff(long k, Precision prec) const { return pow(r(prec), k < 0 ? -k : k); }
};

/// Evaluates sum_k f_k z^k, z = e^{2 pi i theta}, by power recurrence.
inline ComplexInterval eval_by_powers(const FourierModel& m, const ComplexInterval& theta) {
  const Precision prec = m.precision();
  const Interval scale = exp(-(Interval::two_pi(prec) * theta.im()));
  const ComplexInterval z = exp_2pi_i(theta.re()) * scale;
  const ComplexInterval one(Interval::from_long(1, prec));
  const ComplexInterval zinv = one / z;
  ComplexInterval sum = m.coeff(0);
  ComplexInterval up = one;
  ComplexInterval down = one;
  for (long k = 1; k <= -m.min_index(); ++k) {
    up = up * z;
    down = down * zinv;
    if (k <= m.max_index()) sum += m.coeff(k) * up;
    sum += m.coeff(-k) * down;
  }
  return sum;
}

}  // namespace kamcert::testutil
