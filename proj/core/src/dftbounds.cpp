#include "kamcert/dftbounds.hpp"

#include <string>
#include <utility>

#include "kamcert/errors.hpp"

namespace kamcert {

StripPair::StripPair(Interval rho, Interval rho_hat) : rho_(std::move(rho)), rho_hat_(std::move(rho_hat)) {
  if (rho_.lo().sign() < 0) throw DomainError("strip pair: rho must be nonnegative");
  if (!(rho_.hi() < rho_hat_.lo())) throw DomainError("strip pair: requires rho < rho_hat");
}

Interval sk_bound(long k, const Interval& rho, std::size_t n) {
  const long half = static_cast<long>(n / 2);
  if (n == 0 || k < -half || k >= half) {
    throw IndexOutOfRange("sk_bound: mode " + std::to_string(k) + " outside I_" + std::to_string(n));
  }
  if (!rho.certainly_positive()) throw DomainError("sk_bound: rho must be positive");
  const Precision p = rho.precision();
  const Interval two_pi_rho = Interval::two_pi(p) * rho;
  const Interval q = exp(-(two_pi_rho * static_cast<long>(n)));
  return q / (1L - q) * (exp(two_pi_rho * k) + exp(-(two_pi_rho * k)));
}

CnfTerms cnf_terms(const StripPair& strips, std::size_t n) {
  if (n == 0 || n % 2 != 0) throw DomainError("cnf_bound: N must be even and positive");
  const Precision p = strips.rho().precision();
  const Interval two_pi = Interval::two_pi(p);
  const Interval pi = Interval::pi(p);
  const long nn = static_cast<long>(n);
  const Interval& rho = strips.rho();
  const Interval& rho_hat = strips.rho_hat();
  const Interval sum = rho_hat + rho;
  const Interval gap = rho_hat - rho;

  const Interval q_hat = exp(-(two_pi * rho_hat * nn));
  const Interval lead = q_hat / (1L - q_hat);
  const Interval e_sum = exp(-(two_pi * sum));
  const Interval e_gap = exp(two_pi * gap);
  const Interval coth_gap = (e_gap + 1L) / (e_gap - 1L);

  CnfTerms out{
      lead * ((e_sum + 1L) / (e_sum - 1L)) * (1L - exp(pi * sum * nn)),
      lead * coth_gap * (1L - exp(-(pi * gap * nn))),
      coth_gap * exp(-(pi * gap * nn)),
  };
  for (const Interval* term : {&out.s1, &out.s2, &out.t}) {
    if (term->lo().sign() < 0) throw Error("cnf_bound: a term of the strip bound is not nonnegative");
  }
  return out;
}

Interval cnf_bound(const StripPair& strips, std::size_t n) { return cnf_terms(strips, n).total(); }

}  // namespace kamcert
