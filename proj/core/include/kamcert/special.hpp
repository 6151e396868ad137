#pragma once

#include <cstddef>

#include "kamcert/interval.hpp"

namespace kamcert {

/// Enclosure of the Bernoulli number B_n (B_1 = -1/2).
Interval bernoulli(std::size_t n, Precision prec = working_precision());

/// Hurwitz zeta at s = 2: sum_{n >= 0} (n + a)^{-2}.
///
/// The first `terms` summands are added in interval arithmetic. The tail is
/// enclosed by the integral bounds [1/(terms + a.hi), 1/(terms - 1 + a.lo)],
/// intersected with an Euler-Maclaurin enclosure whose remainder is bounded by
/// the first omitted term (the summand is completely monotone). Requires
/// a.lo > 1 and terms >= 1.
Interval hurwitz_zeta2(const Interval& a, std::size_t terms);

/// Same sum with the integral tail only; enclosures are nested in `terms`.
Interval hurwitz_zeta2_integral_tail(const Interval& a, std::size_t terms);

/// log Gamma(x) for x.lo > 0, via upward recurrence and the Stirling series.
Interval log_gamma_real(const Interval& x);

/// Gamma(x) for x.lo > 0.
Interval gamma_real(const Interval& x);

}  // namespace kamcert
