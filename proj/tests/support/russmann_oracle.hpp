#pragma once

#include "kamcert/real.hpp"

namespace kamcert::testutil {

// Round-to-nearest evaluation, independent of the library's interval special
// functions: zeta(2, a) by a partial sum plus an Euler-Maclaurin tail, Gamma
// by upward recurrence to x + 200 and the Stirling series there.
namespace russmann_detail {

// B_2 .. B_14
inline Real bernoulli(int j, Precision p) {
  static const long num[] = {1, -1, 1, -1, 5, -691, 7};
  static const long den[] = {6, 30, 42, 30, 66, 2730, 6};
  return Real(num[j - 1], p) / Real(den[j - 1], p);
}

inline Real zeta2(const Real& a, Precision p) {
  constexpr long m = 200;
  Real s(p);
  for (long n = 0; n < m; ++n) {
    const Real t = Real(n, p) + a;
    s += Real(1L, p) / (t * t);
  }
  const Real x = Real(m, p) + a;
  s += Real(1L, p) / x + Real(1L, p) / (Real(2L, p) * x * x);
  Real xp = x * x * x;  // x^{2j+1}
  for (int j = 1; j <= 7; ++j) {
    s += bernoulli(j, p) / xp;
    xp *= x * x;
  }
  return s;
}

inline Real gamma(const Real& x, Precision p) {
  constexpr long shift = 200;
  Real prod(1L, p);
  for (long i = 0; i < shift; ++i) prod *= x + Real(i, p);
  const Real z = x + Real(shift, p);
  const Real half(Real(1L, p) / Real(2L, p));
  Real lg = (z - half) * log(z) - z + half * log(Real(2L, p) * Real::pi(p));
  Real zp = z;  // z^{2j-1}
  for (int j = 1; j <= 7; ++j) {
    lg += bernoulli(j, p) / (Real(2L * j * (2 * j - 1), p) * zp);
    zp *= z * z;
  }
  return exp(lg) / prod;
}

}  // namespace russmann_detail

/// sqrt(zeta(2, 2^tau) Gamma(2 tau + 1) / 4) / (2 pi)^tau, round to nearest.
inline Real russmann_oracle(const Real& tau, Precision p = 256) {
  using namespace russmann_detail;
  const Real two(2L, p);
  const Real z = zeta2(pow(two, tau), p);
  const Real g = gamma(two * tau + Real(1L, p), p);
  return sqrt(z * g / Real(4L, p)) / pow(two * Real::pi(p), tau);
}

}  // namespace kamcert::testutil
