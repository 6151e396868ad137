#pragma once

#include <cstddef>

#include "kamcert/interval.hpp"

namespace kamcert {

/// Inner strip rho and sampling strip rho_hat with 0 <= rho < rho_hat.
class StripPair {
 public:
  /// Throws DomainError unless 0 <= rho.lo and rho.hi < rho_hat.lo.
  StripPair(Interval rho, Interval rho_hat);

  [[nodiscard]] const Interval& rho() const noexcept { return rho_; }
  [[nodiscard]] const Interval& rho_hat() const noexcept { return rho_hat_; }

 private:
  Interval rho_;
  Interval rho_hat_;
};

/// Coefficient error multiplier: |f~_k - f_k| <= s*_N(k, rho) ||f||_rho with
/// s*_N(k, rho) = e^{-2 pi rho N}/(1 - e^{-2 pi rho N}) (e^{2 pi rho k} + e^{-2 pi rho k}).
/// Throws IndexOutOfRange unless -N/2 <= k < N/2, DomainError unless rho > 0.
Interval sk_bound(long k, const Interval& rho, std::size_t n);

/// The three terms of the strip error multiplier for even N.
struct CnfTerms {
  Interval s1;
  Interval s2;
  Interval t;
  [[nodiscard]] Interval total() const { return s1 + s2 + t; }
};

/// ||f~ - f||_rho <= C_N(rho, rho_hat) ||f||_rho_hat for even N, as the sum of
/// the terms below. S1 is printed as a product of two negative factors;
/// every term is checked to be nonnegative and Error is thrown otherwise.
/// Throws DomainError for odd or zero N.
CnfTerms cnf_terms(const StripPair& strips, std::size_t n);
Interval cnf_bound(const StripPair& strips, std::size_t n);

}  // namespace kamcert
