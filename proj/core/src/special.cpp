#include "kamcert/special.hpp"

#include <gmpxx.h>

#include <mutex>
#include <vector>

#include "kamcert/errors.hpp"

namespace kamcert {

namespace {

// Exact Bernoulli numbers via the Akiyama-Tanigawa transform, cached.
mpq_class bernoulli_exact(std::size_t n) {
  static std::mutex mutex;
  static std::vector<mpq_class> table;
  std::lock_guard lock(mutex);
  if (n < table.size()) return table[n];
  const std::size_t upto = std::max<std::size_t>(n + 1, 2 * table.size());
  std::vector<mpq_class> row(upto + 1);
  table.clear();
  for (std::size_t m = 0; m <= upto; ++m) {
    row[m] = mpq_class(1, static_cast<unsigned long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) {
      row[j - 1] = static_cast<unsigned long>(j) * (row[j - 1] - row[j]);
      row[j - 1].canonicalize();
    }
    table.push_back(row[0]);
  }
  table[1] = mpq_class(-1, 2);
  return table[n];
}

Interval enclose(const mpq_class& q, Precision prec) {
  Real lo(prec);
  Real hi(prec);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval unit_theta(Precision prec) { return Interval(Real(prec), Real(1L, prec)); }

// Euler-Maclaurin enclosure of sum_{n >= 0} (n + x)^{-2}, x.lo > 0.
Interval zeta2_em_tail(const Interval& x) {
  const Precision p = x.precision();
  const Interval inv = 1L / x;
  const Interval inv2 = sqr(inv);
  Interval sum = inv + ldexp(inv2, -1);
  Interval power = inv2 * inv;  // x^{-3}
  Real threshold = sum.lo();
  mpfr_mul_2si(threshold.get(), threshold.get(), -static_cast<long>(p) - 8, MPFR_RNDD);
  Real previous = Real::infinity(1, p);
  constexpr std::size_t kMaxOrder = 80;
  for (std::size_t s = 1; s <= kMaxOrder; ++s) {
    Interval term = bernoulli(2 * s, p) * power;
    const Real size = term.mag();
    // The first omitted term bounds the remainder with factor theta in [0, 1].
    if (size < threshold || size > previous || s == kMaxOrder) {
      return sum + unit_theta(p) * term;
    }
    sum += term;
    previous = size;
    power = power * inv2;
  }
  return sum;  // unreachable
}

}  // namespace

Interval bernoulli(std::size_t n, Precision prec) { return enclose(bernoulli_exact(n), prec); }

Interval hurwitz_zeta2_integral_tail(const Interval& a, std::size_t terms) {
  if (!(a.lo() > Real(1L, a.precision()))) throw DomainError("hurwitz_zeta2: requires a > 1");
  if (terms == 0) throw DomainError("hurwitz_zeta2: requires terms >= 1");
  const Precision p = a.precision();
  Interval sum(p);
  // Largest-index terms first so small contributions are not swamped.
  for (std::size_t n = terms; n-- > 0;) {
    sum += 1L / sqr(a + static_cast<long>(n));
  }
  const Interval lower = 1L / (Interval::point(a.hi()) + static_cast<long>(terms));
  const Interval upper = 1L / (Interval::point(a.lo()) + static_cast<long>(terms - 1));
  return sum + Interval(lower.lo(), upper.hi());
}

Interval hurwitz_zeta2(const Interval& a, std::size_t terms) {
  if (!(a.lo() > Real(1L, a.precision()))) throw DomainError("hurwitz_zeta2: requires a > 1");
  if (terms == 0) throw DomainError("hurwitz_zeta2: requires terms >= 1");
  const Precision p = a.precision();
  Interval sum(p);
  for (std::size_t n = terms; n-- > 0;) {
    sum += 1L / sqr(a + static_cast<long>(n));
  }
  const Interval lower = 1L / (Interval::point(a.hi()) + static_cast<long>(terms));
  const Interval upper = 1L / (Interval::point(a.lo()) + static_cast<long>(terms - 1));
  const Interval integral_tail(lower.lo(), upper.hi());
  const Interval em_tail = zeta2_em_tail(a + static_cast<long>(terms));
  auto tail = intersect(integral_tail, em_tail);
  if (!tail) throw Error("hurwitz_zeta2: inconsistent tail enclosures");
  return sum + *tail;
}

Interval log_gamma_real(const Interval& x) {
  const Precision p = x.precision();
  if (!(x.lo().sign() > 0)) throw DomainError("gamma_real: requires x > 0");
  if (!x.is_bounded()) throw DomainError("gamma_real: unbounded argument");
  // Shift the argument above the threshold where the Stirling series
  // converges to working precision.
  const long threshold = std::max<long>(8, static_cast<long>(p) / 4);
  long shift = 0;
  if (x.lo() < Real(threshold, p)) {
    Real gap(threshold, p);
    mpfr_sub(gap.get(), gap.get(), x.lo().get(), MPFR_RNDU);
    mpfr_ceil(gap.get(), gap.get());
    shift = mpfr_get_si(gap.get(), MPFR_RNDU);
  }
  Interval product = Interval::from_long(1, p);
  for (long j = 0; j < shift; ++j) product = product * (x + j);
  const Interval z = x + shift;

  const Interval half = Interval::from_ratio(1, 2, p);
  Interval result = (z - half) * log(z) - z + ldexp(log(Interval::two_pi(p)), -1);
  const Interval inv = 1L / z;
  const Interval inv2 = sqr(inv);
  Interval power = inv;  // z^{-(2k-1)}
  Real cutoff = abs(result).lo();
  if (cutoff.is_zero()) cutoff = Real(1L, p);
  mpfr_mul_2si(cutoff.get(), cutoff.get(), -static_cast<long>(p) - 8, MPFR_RNDD);
  constexpr long kMaxTerms = 120;
  for (long k = 1; k <= kMaxTerms; ++k) {
    Interval term = bernoulli(static_cast<std::size_t>(2 * k), p) * power / ((2 * k) * (2 * k - 1));
    // Remainder after k-1 terms is bounded in magnitude by term k.
    if (term.mag() < cutoff || k == kMaxTerms) {
      const Real m = term.mag();
      result += Interval(-m, m);
      break;
    }
    result += term;
    power = power * inv2;
  }
  if (shift > 0) result = result - log(product);
  return result;
}

Interval gamma_real(const Interval& x) { return exp(log_gamma_real(x)); }

}  // namespace kamcert
