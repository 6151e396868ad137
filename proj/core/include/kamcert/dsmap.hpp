#pragma once

#include <cstddef>

#include "kamcert/fourier.hpp"
#include "kamcert/interval.hpp"

namespace kamcert {

/// phi_mu(x, y) = lambda y + mu + eps/(2 pi) sin(2 pi x).
struct MapParams {
  Interval lambda;
  Interval epsilon;
  Interval mu;

  /// Throws DomainError unless lambda and epsilon lie inside (0, 1).
  void validate() const;
};

/// |q omega - p| >= gamma |q|^-tau.
struct DiophantineSpec {
  Interval omega;
  Interval gamma;
  Interval tau;

  /// Throws DomainError unless tau >= 1 and gamma > 0.
  void validate() const;
};

struct Point2 {
  Interval x;
  Interval y;
};

struct Point3 {
  Interval x;
  Interval y;
  Interval theta;
};

Interval phi(const Interval& x, const Interval& y, const MapParams& p);

/// F(x, y) = (x + phi, phi); x reduced into [0, 1) when `reduce` is set and the
/// image does not straddle an integer.
Point2 apply_F(const Point2& z, const MapParams& p, bool reduce = false);

/// Q_omega(x, y, theta) = (x - omega + phi(x + theta, y), phi(x + theta, y), theta + omega).
Point3 apply_Q(const Point3& w, const Interval& omega, const MapParams& p);

/// Psi(x, y, theta) = (theta + x, y).
Point2 psi(const Point3& w);

struct DerivativeConstants {
  Interval c_f1z;  // 1 + lambda + e^{2 pi rho}
  Interval c_f1a;  // 1 + eps_M
  Interval c_f2;   // 2 pi e^{2 pi rho}
};

/// Bounds of |D_z F|, |D_mu F| and |D^2 F| on the strip of width rho. eps_M is
/// one ulp of 1 at the precision of rho. Throws DomainError unless rho > 0.
DerivativeConstants derivative_constants(const MapParams& p, const Interval& rho);

/// G_p - K_{p,omega} at theta_j = j/N, both components, where
/// G_p(theta) = Q_omega(K_Q(theta)) minus the angle.
struct ErrorSamples {
  GridSamples x;
  GridSamples y;
  /// Psi(Q(K_Q(theta_j))) and F(Psi(K_Q(theta_j))) overlap at every grid point.
  bool semiconjugacy_holds = true;
};

/// Throws SizeMismatch unless n is a power of two with n >= the model sizes
/// and both models share a size.
ErrorSamples error_samples(const FourierModel& kx, const FourierModel& ky, const Interval& omega,
                           const MapParams& p, std::size_t n);

/// Real parts of the model at theta_j = j/N (N = model size). Sound for
/// hermitian models, whose values on the grid are real.
std::vector<Interval> real_grid_values(const FourierModel& model);

}  // namespace kamcert
