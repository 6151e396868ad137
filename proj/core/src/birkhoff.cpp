#include "kamcert/birkhoff.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "kamcert/errors.hpp"

namespace kamcert {

namespace {

void check_lambda(const Real& lambda) {
  if (!(lambda.sign() > 0 && lambda < Real(1L, lambda.precision()))) {
    throw DomainError("lambda must lie in (0, 1), got " + lambda.to_string(6));
  }
}

// One step of phi at plain precision: out = lambda y + mu + eps/(2 pi) sin(2 pi x).
class PhiStepper {
 public:
  PhiStepper(const RealMapParams& p, Precision prec)
      : lambda_(p.lambda), mu_(p.mu), coeff_(prec), two_pi_(prec), tmp_(prec) {
    mpfr_const_pi(two_pi_.get(), MPFR_RNDN);
    mpfr_mul_2ui(two_pi_.get(), two_pi_.get(), 1, MPFR_RNDN);
    mpfr_div(coeff_.get(), p.epsilon.get(), two_pi_.get(), MPFR_RNDN);
  }

  void operator()(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_frac(tmp_.get(), x, MPFR_RNDN);
    mpfr_mul(tmp_.get(), tmp_.get(), two_pi_.get(), MPFR_RNDN);
    mpfr_sin(tmp_.get(), tmp_.get(), MPFR_RNDN);
    mpfr_mul(tmp_.get(), tmp_.get(), coeff_.get(), MPFR_RNDN);
    mpfr_fma(out, lambda_.get(), y, tmp_.get(), MPFR_RNDN);
    mpfr_add(out, out, mu_.get(), MPFR_RNDN);
  }

 private:
  Real lambda_, mu_, coeff_, two_pi_, tmp_;
};

void check_guard(const Real& y, double guard) {
  if (y.is_nan() || std::abs(y.to_double()) > guard) {
    throw OrbitOverflow("orbit left |y| <= " + std::to_string(guard) + "; no attractor reached");
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

std::vector<Real> bump_weights(std::size_t n, Precision prec) {
  if (n == 0) throw DomainError("bump_weights: N must be positive");
  std::vector<Real> w;
  w.reserve(n);
  Real sum(prec), t(prec), e(prec);
  const Real denom(static_cast<long>(n + 1), prec);
  for (std::size_t i = 0; i < n; ++i) {
    mpfr_set_ui(t.get(), i + 1, MPFR_RNDN);
    mpfr_div(t.get(), t.get(), denom.get(), MPFR_RNDN);
    // 1/(t(t-1))
    mpfr_sub_ui(e.get(), t.get(), 1, MPFR_RNDN);
    mpfr_mul(e.get(), e.get(), t.get(), MPFR_RNDN);
    mpfr_ui_div(e.get(), 1, e.get(), MPFR_RNDN);
    mpfr_exp(e.get(), e.get(), MPFR_RNDN);
    sum += e;
    w.push_back(e);
  }
  for (auto& v : w) v /= sum;
  return w;
}

Orbit generate_orbit(const RealMapParams& params, const Real& omega, const OrbitConfig& cfg) {
  check_lambda(params.lambda);
  const Precision prec = params.lambda.precision();
  PhiStepper phi(params, prec);
  Real x = cfg.x0, y = cfg.y0, th = cfg.theta0, arg(prec), p(prec);
  mpfr_prec_round(x.get(), prec, MPFR_RNDN);
  mpfr_prec_round(y.get(), prec, MPFR_RNDN);
  mpfr_prec_round(th.get(), prec, MPFR_RNDN);
  mpfr_frac(th.get(), th.get(), MPFR_RNDN);

  auto step = [&] {
    mpfr_add(arg.get(), x.get(), th.get(), MPFR_RNDN);
    phi(p.get(), arg.get(), y.get());
    mpfr_sub(x.get(), x.get(), omega.get(), MPFR_RNDN);
    mpfr_add(x.get(), x.get(), p.get(), MPFR_RNDN);
    mpfr_set(y.get(), p.get(), MPFR_RNDN);
    mpfr_add(th.get(), th.get(), omega.get(), MPFR_RNDN);
    mpfr_frac(th.get(), th.get(), MPFR_RNDN);
  };

  for (std::size_t i = 0; i < cfg.burn_in; ++i) {
    step();
    if ((i & 1023) == 0) check_guard(y, cfg.guard);
  }
  check_guard(y, cfg.guard);

  Orbit orbit;
  orbit.theta0 = th;
  orbit.x.reserve(cfg.orbit_size);
  orbit.y.reserve(cfg.orbit_size);
  for (std::size_t i = 0; i < cfg.orbit_size; ++i) {
    orbit.x.push_back(x);
    orbit.y.push_back(y);
    step();
    if ((i & 1023) == 0) check_guard(y, cfg.guard);
  }
  check_guard(y, cfg.guard);
  return orbit;
}

TorusApprox wb_fourier(const Orbit& orbit, const Real& omega, std::size_t modes, std::size_t passes) {
  const std::size_t n_o = orbit.x.size();
  if (passes == 0) throw DomainError("wb_fourier needs at least one pass");
  if (modes == 0 || n_o < 2 * modes || orbit.y.size() != n_o) {
    throw InsufficientOrbit("wb_fourier needs N_O >= 2 N_A (N_O = " + std::to_string(n_o) +
                            ", N_A = " + std::to_string(modes) + ")");
  }
  const Precision prec = omega.precision();
  const auto w = bump_weights(n_o, prec);

  // Phases p_k = e^{-2 pi i k theta_i} advance by c_k = e^{-2 pi i k omega}.
  // Only k >= 0 is summed; the orbit is real so K_{-k} = conj(K_k).
  std::vector<Real> p0r(modes, Real(prec)), p0i(modes, Real(prec));
  std::vector<Real> cr(modes, Real(prec)), ci(modes, Real(prec));
  std::vector<Real> xr(modes, Real(prec)), xi(modes, Real(prec));
  std::vector<Real> yr(modes, Real(prec)), yi(modes, Real(prec));
  Real arg(prec);
  for (std::size_t k = 0; k < modes; ++k) {
    mpfr_mul_ui(arg.get(), orbit.theta0.get(), k, MPFR_RNDN);
    p0r[k] = cos_2pi(arg);
    p0i[k] = -sin_2pi(arg);
    mpfr_mul_ui(arg.get(), omega.get(), k, MPFR_RNDN);
    cr[k] = cos_2pi(arg);
    ci[k] = -sin_2pi(arg);
  }

  // Means first; they are the dominant leakage source.
  Real mx(prec), my(prec);
  for (std::size_t i = 0; i < n_o; ++i) {
    mpfr_fma(mx.get(), w[i].get(), orbit.x[i].get(), mx.get(), MPFR_RNDN);
    mpfr_fma(my.get(), w[i].get(), orbit.y[i].get(), my.get(), MPFR_RNDN);
  }
  xr[0] = mx;
  yr[0] = my;

  // Each pass averages the residual orbit minus the current model. The WB
  // error of mode k is sum_j K_j W((j - k) omega), which is large when
  // (j - k) omega is close to an integer (Fibonacci offsets for the golden
  // mean); averaging residuals replaces K_j by the previous pass's error.
  std::vector<Real> pr(modes, Real(prec)), pi(modes, Real(prec));
  std::vector<Real> dxr(modes, Real(prec)), dxi(modes, Real(prec));
  std::vector<Real> dyr(modes, Real(prec)), dyi(modes, Real(prec));
  Real wx(prec), wy(prec), t(prec), ex(prec), ey(prec);
  for (std::size_t pass = 0; pass < passes; ++pass) {
    pr = p0r;
    pi = p0i;
    for (std::size_t k = 0; k < modes; ++k) {
      mpfr_set_zero(dxr[k].get(), 1);
      mpfr_set_zero(dxi[k].get(), 1);
      mpfr_set_zero(dyr[k].get(), 1);
      mpfr_set_zero(dyi[k].get(), 1);
    }
    for (std::size_t i = 0; i < n_o; ++i) {
      // Model at theta_i: K_0 + 2 sum_{k >= 1} Re(K_k conj(p_k)).
      mpfr_set_zero(ex.get(), 1);
      mpfr_set_zero(ey.get(), 1);
      // The first pass starts from the means alone.
      for (std::size_t k = 1; pass > 0 && k < modes; ++k) {
        mpfr_fmma(t.get(), xr[k].get(), pr[k].get(), xi[k].get(), pi[k].get(), MPFR_RNDN);
        mpfr_add(ex.get(), ex.get(), t.get(), MPFR_RNDN);
        mpfr_fmma(t.get(), yr[k].get(), pr[k].get(), yi[k].get(), pi[k].get(), MPFR_RNDN);
        mpfr_add(ey.get(), ey.get(), t.get(), MPFR_RNDN);
      }
      mpfr_mul_2ui(ex.get(), ex.get(), 1, MPFR_RNDN);
      mpfr_mul_2ui(ey.get(), ey.get(), 1, MPFR_RNDN);
      mpfr_add(ex.get(), ex.get(), xr[0].get(), MPFR_RNDN);
      mpfr_add(ey.get(), ey.get(), yr[0].get(), MPFR_RNDN);

      mpfr_sub(wx.get(), orbit.x[i].get(), ex.get(), MPFR_RNDN);
      mpfr_mul(wx.get(), wx.get(), w[i].get(), MPFR_RNDN);
      mpfr_sub(wy.get(), orbit.y[i].get(), ey.get(), MPFR_RNDN);
      mpfr_mul(wy.get(), wy.get(), w[i].get(), MPFR_RNDN);
      for (std::size_t k = 0; k < modes; ++k) {
        mpfr_fma(dxr[k].get(), wx.get(), pr[k].get(), dxr[k].get(), MPFR_RNDN);
        mpfr_fma(dxi[k].get(), wx.get(), pi[k].get(), dxi[k].get(), MPFR_RNDN);
        mpfr_fma(dyr[k].get(), wy.get(), pr[k].get(), dyr[k].get(), MPFR_RNDN);
        mpfr_fma(dyi[k].get(), wy.get(), pi[k].get(), dyi[k].get(), MPFR_RNDN);
        mpfr_fmms(t.get(), pr[k].get(), cr[k].get(), pi[k].get(), ci[k].get(), MPFR_RNDN);
        mpfr_fmma(pi[k].get(), pr[k].get(), ci[k].get(), pi[k].get(), cr[k].get(), MPFR_RNDN);
        mpfr_swap(pr[k].get(), t.get());
      }
    }
    for (std::size_t k = 0; k < modes; ++k) {
      xr[k] += dxr[k];
      xi[k] += dxi[k];
      yr[k] += dyr[k];
      yi[k] += dyi[k];
    }
    mpfr_set_zero(xi[0].get(), 1);
    mpfr_set_zero(yi[0].get(), 1);
  }

  TorusApprox torus;
  torus.modes = modes;
  // alpha = -<K_p^x>; K_alpha(theta) = K(theta + alpha) has coefficients
  // K_k e^{2 pi i k alpha} and x mean alpha + K_0^x = 0.
  torus.shift = -xr[0];
  const std::size_t n = next_pow2(2 * modes);
  torus.kx = FourierModel(n, prec, true);
  torus.ky = FourierModel(n, prec, true);
  Real sr(prec), si(prec), ar(prec), ai(prec);
  for (std::size_t k = 0; k < modes; ++k) {
    mpfr_mul_ui(arg.get(), torus.shift.get(), k, MPFR_RNDN);
    sr = cos_2pi(arg);
    si = sin_2pi(arg);
    const long kk = static_cast<long>(k);
    auto put = [&](FourierModel& m, const Real& re, const Real& im) {
      mpfr_fmms(ar.get(), re.get(), sr.get(), im.get(), si.get(), MPFR_RNDN);
      mpfr_fmma(ai.get(), re.get(), si.get(), im.get(), sr.get(), MPFR_RNDN);
      if (k == 0) mpfr_set_zero(ai.get(), 1);
      m.coeff(kk) = ComplexInterval(Interval::point(ar), Interval::point(ai));
      if (k > 0) m.coeff(-kk) = conj(m.coeff(kk));
    };
    put(torus.kx, xr[k], xi[k]);
    put(torus.ky, yr[k], yi[k]);
  }
  torus.kx.coeff(0) = ComplexInterval(Interval::point(Real(prec)), Interval::point(Real(prec)));

  // Almost-resonance: min_{0<k<N_A} dist(k omega, Z) against 1/N_O.
  Real best = Real::infinity(1, prec), d(prec);
  for (std::size_t k = 1; k < modes; ++k) {
    mpfr_mul_ui(d.get(), omega.get(), k, MPFR_RNDN);
    d = frac(d);
    Real other = Real(1L, prec) - d;
    if (other < d) d = other;
    if (d < best) best = d;
  }
  torus.resonance_distance = best;
  torus.near_resonance = best.is_inf() ? false : best.to_double() * static_cast<double>(n_o) < 1.0;
  return torus;
}

Real estimate_rotation_number(const RealMapParams& params, const OrbitConfig& cfg) {
  check_lambda(params.lambda);
  if (cfg.orbit_size == 0) throw InsufficientOrbit("estimate_rotation_number needs N_O >= 1");
  const Precision prec = params.lambda.precision();
  PhiStepper phi(params, prec);
  Real x = cfg.x0, y = cfg.y0, p(prec);
  mpfr_prec_round(x.get(), prec, MPFR_RNDN);
  mpfr_prec_round(y.get(), prec, MPFR_RNDN);
  // F in absolute coordinates X = x + theta.
  mpfr_add(x.get(), x.get(), cfg.theta0.get(), MPFR_RNDN);

  auto step = [&] {
    phi(p.get(), x.get(), y.get());
    mpfr_add(x.get(), x.get(), p.get(), MPFR_RNDN);
    mpfr_frac(x.get(), x.get(), MPFR_RNDN);
    mpfr_set(y.get(), p.get(), MPFR_RNDN);
  };
  for (std::size_t i = 0; i < cfg.burn_in; ++i) {
    step();
    if ((i & 1023) == 0) check_guard(y, cfg.guard);
  }
  const auto w = bump_weights(cfg.orbit_size, prec);
  Real acc(prec);
  for (std::size_t i = 0; i < cfg.orbit_size; ++i) {
    step();
    mpfr_fma(acc.get(), w[i].get(), p.get(), acc.get(), MPFR_RNDN);
    if ((i & 1023) == 0) check_guard(y, cfg.guard);
  }
  check_guard(y, cfg.guard);
  return acc;
}

TuneResult tune_mu(const Real& lambda, const Real& epsilon, const Real& target, const Real& tol,
                   const OrbitConfig& cfg, int max_iterations) {
  check_lambda(lambda);
  if (!(tol.sign() > 0)) throw DomainError("tune_mu: tol must be positive");
  const Precision prec = lambda.precision();
  auto g = [&](const Real& mu) {
    return estimate_rotation_number(RealMapParams{lambda, epsilon, mu}, cfg) - target;
  };

  TuneResult res;
  Real m0 = (Real(1L, prec) - lambda) * target;
  Real g0 = g(m0);
  res.iterations = 1;
  if (abs(g0) < tol) return {m0, g0, res.iterations};
  // The rotation number grows roughly like mu/(1 - lambda).
  Real m1 = m0 - g0 * (Real(1L, prec) - lambda);
  if (m1 == m0) m1 = m0 + Real(1e-6, prec);

  // Bracket [lo, hi] with g(lo) < 0 < g(hi), once known.
  bool have_lo = false, have_hi = false;
  Real lo(prec), hi(prec);
  auto record = [&](const Real& m, const Real& gm) {
    if (gm.sign() < 0 && (!have_lo || m > lo)) { lo = m; have_lo = true; }
    if (gm.sign() > 0 && (!have_hi || m < hi)) { hi = m; have_hi = true; }
  };
  record(m0, g0);

  while (res.iterations < max_iterations) {
    Real g1 = g(m1);
    ++res.iterations;
    if (abs(g1) < tol) return {m1, g1, res.iterations};
    record(m1, g1);

    Real next(prec);
    const Real dg = g1 - g0;
    bool secant_ok = !dg.is_zero();
    if (secant_ok) {
      next = m1 - g1 * (m1 - m0) / dg;
      if (have_lo && have_hi && !(next > lo && next < hi)) secant_ok = false;
    }
    if (!secant_ok) {
      if (!(have_lo && have_hi)) break;
      next = lo + hi;
      mpfr_div_2ui(next.get(), next.get(), 1, MPFR_RNDN);
    }
    m0 = m1;
    g0 = g1;
    m1 = next;
    if (have_lo && have_hi && hi - lo < tol * tol) break;
  }
  throw NoConvergence("tune_mu: no mu with |rotation number - target| < " + tol.to_string(3) +
                      " after " + std::to_string(res.iterations) + " evaluations");
}

void write_orbit_csv(std::ostream& os, const Orbit& orbit) {
  os << "i,x,y\n";
  for (std::size_t i = 0; i < orbit.x.size(); ++i) {
    os << i << ',' << orbit.x[i].to_string() << ',' << orbit.y[i].to_string() << '\n';
  }
}

void write_torus_csv(std::ostream& os, const TorusApprox& torus) {
  os << "component,k,re,im\n";
  const long m = static_cast<long>(torus.modes);
  for (const auto& [name, model] : {std::pair<const char*, const FourierModel*>{"x", &torus.kx},
                                    std::pair<const char*, const FourierModel*>{"y", &torus.ky}}) {
    for (long k = -m + 1; k < m; ++k) {
      const auto& c = model->coeff(k);
      os << name << ',' << k << ',' << c.re().mid().to_string() << ',' << c.im().mid().to_string()
         << '\n';
    }
  }
}

TorusApprox read_torus_csv(std::istream& is, Precision prec) {
  std::string line;
  if (!std::getline(is, line) || line != "component,k,re,im") {
    throw ConfigError("torus csv: missing header");
  }
  struct Row {
    char comp;
    long k;
    Real re, im;
  };
  std::vector<Row> rows;
  long kmax = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string comp, k, re, im;
    if (!std::getline(ss, comp, ',') || !std::getline(ss, k, ',') || !std::getline(ss, re, ',') ||
        !std::getline(ss, im) || (comp != "x" && comp != "y")) {
      throw ConfigError("torus csv: malformed row '" + line + "'");
    }
    try {
      rows.push_back({comp[0], std::stol(k), Real::parse(re, prec), Real::parse(im, prec)});
    } catch (const std::exception&) {
      throw ConfigError("torus csv: malformed row '" + line + "'");
    }
    kmax = std::max(kmax, std::abs(rows.back().k));
  }
  TorusApprox torus;
  torus.modes = static_cast<std::size_t>(kmax + 1);
  const std::size_t n = next_pow2(2 * torus.modes);
  torus.kx = FourierModel(n, prec, true);
  torus.ky = FourierModel(n, prec, true);
  torus.shift = Real(prec);
  torus.resonance_distance = Real::infinity(1, prec);
  for (const auto& r : rows) {
    auto& m = r.comp == 'x' ? torus.kx : torus.ky;
    m.coeff(r.k) = ComplexInterval(Interval::point(r.re), Interval::point(r.im));
  }
  return torus;
}

}  // namespace kamcert
