#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "kamcert/fourier.hpp"
#include "kamcert/real.hpp"

namespace kamcert {

/// Parameters of phi_mu(x, y) = lambda y + mu + eps/(2 pi) sin(2 pi x) in
/// plain (non-interval) arithmetic.
struct RealMapParams {
  Real lambda;
  Real epsilon;
  Real mu;
};

struct OrbitConfig {
  std::size_t orbit_size = 65296;  // N_O
  std::size_t modes = 240;         // N_A
  std::size_t burn_in = 10000;     // N_T
  Real x0;
  Real y0;
  Real theta0;
  /// |y| above this aborts the orbit with OrbitOverflow.
  double guard = 1e6;
};

/// Recorded skew-product orbit; theta_i = theta0 + i omega (mod 1).
struct Orbit {
  std::vector<Real> x;
  std::vector<Real> y;
  Real theta0;
};

/// Approximate torus K(theta) = (theta, 0) + (kx(theta), ky(theta)) with
/// point-interval coefficients for |k| < modes.
struct TorusApprox {
  FourierModel kx;
  FourierModel ky;
  Real shift;  // recentering phase alpha
  std::size_t modes = 0;
  /// min over 0 < k < modes of dist(k omega, Z).
  Real resonance_distance;
  /// resonance_distance < 1/N_O.
  bool near_resonance = false;
};

/// w_i = A^-1 w((i+1)/(N+1)) with w(t) = exp(1/(t(t-1))); sums to 1.
std::vector<Real> bump_weights(std::size_t n, Precision prec = working_precision());

/// Burns in cfg.burn_in steps of Q_omega from (x0, y0, theta0), then records
/// cfg.orbit_size points. x is not reduced. Throws OrbitOverflow,
/// DomainError unless 0 < lambda < 1.
Orbit generate_orbit(const RealMapParams& params, const Real& omega, const OrbitConfig& cfg);

/// Weighted Birkhoff coefficients K_k = sum_i w_i z_i e^{-2 pi i k theta_i} for
/// |k| < modes, mirrored to conjugate pairs, then recentred by
/// alpha = -Re K_0^x so that the x zero mode vanishes.
///
/// The means are averaged first and each pass averages the orbit minus the
/// current model. One pass is the plain estimator applied to the centred
/// orbit; further passes remove leakage between modes whose index difference
/// is nearly resonant. Throws InsufficientOrbit unless orbit size >= 2 modes,
/// DomainError for zero passes.
TorusApprox wb_fourier(const Orbit& orbit, const Real& omega, std::size_t modes, std::size_t passes = 1);

/// Weighted Birkhoff average of phi along an orbit of F (x mod 1) after
/// burn-in: the rotation number of the attractor.
Real estimate_rotation_number(const RealMapParams& params, const OrbitConfig& cfg);

struct TuneResult {
  Real mu;
  Real residual;  // estimate_rotation_number(mu) - target
  int iterations = 0;
};

/// Secant iteration on g(mu) = rotation number - target from
/// mu0 = (1 - lambda) target, falling back to bisection once a sign change is
/// bracketed. Throws NoConvergence after max_iterations.
TuneResult tune_mu(const Real& lambda, const Real& epsilon, const Real& target, const Real& tol,
                   const OrbitConfig& cfg, int max_iterations = 60);

/// "i,x,y" rows.
void write_orbit_csv(std::ostream& os, const Orbit& orbit);
/// "component,k,re,im" rows for |k| < modes, x rows first.
void write_torus_csv(std::ostream& os, const TorusApprox& torus);
/// Inverse of write_torus_csv (no recentering applied). Throws ConfigError.
TorusApprox read_torus_csv(std::istream& is, Precision prec = working_precision());

}  // namespace kamcert
