#include "kamcert/dsmap.hpp"

#include <bit>

#include "kamcert/errors.hpp"

namespace kamcert {

namespace {

bool inside_unit(const Interval& v) {
  return v.certainly_positive() && (1L - v).certainly_positive();
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void MapParams::validate() const {
  if (!inside_unit(lambda)) throw DomainError("lambda must lie in (0, 1), got " + lambda.to_string(8));
  if (!inside_unit(epsilon)) {
    throw DomainError("epsilon must lie in (0, 1), got " + epsilon.to_string(8));
  }
}

void DiophantineSpec::validate() const {
  if (tau.lo() < Real(1L, tau.precision())) throw DomainError("tau must be >= 1");
  if (!gamma.certainly_positive()) throw DomainError("gamma must be positive");
}

Interval phi(const Interval& x, const Interval& y, const MapParams& p) {
  const Interval amp = p.epsilon / Interval::two_pi(x.precision());
  return p.lambda * y + p.mu + amp * sin_2pi(x);
}

Point2 apply_F(const Point2& z, const MapParams& p, bool reduce) {
  const Interval f = phi(z.x, z.y, p);
  Interval x = z.x + f;
  if (reduce) {
    const Real shift = floor(x.lo());
    if (floor(x.hi()) == shift) {
      x = x - Interval::point(shift);
    }
  }
  return {x, f};
}

Point3 apply_Q(const Point3& w, const Interval& omega, const MapParams& p) {
  const Interval f = phi(w.x + w.theta, w.y, p);
  return {w.x - omega + f, f, w.theta + omega};
}

Point2 psi(const Point3& w) { return {w.theta + w.x, w.y}; }

DerivativeConstants derivative_constants(const MapParams& p, const Interval& rho) {
  if (!rho.certainly_positive()) throw DomainError("derivative_constants: rho must be positive");
  const Precision prec = rho.precision();
  const Interval e = exp(Interval::two_pi(prec) * rho);
  // eps_M: 1 + eps_M is the successor of 1.
  const Interval eps_m = pow2(1 - static_cast<long>(prec), prec);
  return {1L + p.lambda + e, 1L + eps_m, Interval::two_pi(prec) * e};
}

std::vector<Interval> real_grid_values(const FourierModel& model) {
  const auto s = idft(model);
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& v : s.values()) out.push_back(v.re());
  return out;
}

ErrorSamples error_samples(const FourierModel& kx, const FourierModel& ky, const Interval& omega,
                           const MapParams& p, std::size_t n) {
  if (kx.size() != ky.size()) throw SizeMismatch("error_samples: component sizes differ");
  if (!is_pow2(n) || n < kx.size()) {
    throw SizeMismatch("error_samples: grid size " + std::to_string(n) +
                       " must be a power of two >= model size " + std::to_string(kx.size()));
  }
  if (!kx.hermitian() || !ky.hermitian()) throw NotHermitian();
  const Precision prec = omega.precision();
  const FourierModel ex = kx.resized(n), ey = ky.resized(n);
  const auto x = real_grid_values(ex);
  const auto y = real_grid_values(ey);
  const auto xw = real_grid_values(rotate(ex, omega));
  const auto yw = real_grid_values(rotate(ey, omega));

  ErrorSamples out{GridSamples(n, prec), GridSamples(n, prec), true};
  const long log2n = static_cast<long>(std::countr_zero(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Interval theta = ldexp(Interval::from_long(static_cast<long>(j), prec), -log2n);
    const Point3 w{x[j], y[j], theta};
    const Point3 q = apply_Q(w, omega, p);
    out.x[j] = ComplexInterval(q.x - xw[j]);
    out.y[j] = ComplexInterval(q.y - yw[j]);

    const Point2 a = psi(q);
    const Point2 b = apply_F(psi(w), p);
    if (!a.x.overlaps(b.x) || !a.y.overlaps(b.y)) out.semiconjugacy_holds = false;
  }
  return out;
}

}  // namespace kamcert
