#include "kamcert/certify.hpp"

#include <bit>
#include <sstream>

#include "kamcert/errors.hpp"
#include "kamcert/special.hpp"

namespace kamcert {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Point interval at the upper end: a verified upper bound as a constant.
Interval up(const Interval& x) { return Interval::point(x.hi()); }

long degree(const FourierModel& m) {
  long d = 0;
  for (long k = m.min_index(); k <= m.max_index(); ++k) {
    const auto& c = m.coeff(k);
    if (!(c.re().is_point() && c.re().lo().is_zero() && c.im().is_point() && c.im().lo().is_zero())) {
      d = std::max(d, k < 0 ? -k : k);
    }
  }
  return d;
}

FourierModel dft_real(const std::vector<Interval>& v) {
  std::vector<ComplexInterval> s;
  s.reserve(v.size());
  for (const auto& x : v) s.emplace_back(x);
  FourierModel m = dft(GridSamples(std::move(s)));
  m.make_hermitian();
  return m;
}

Interval grid_theta(std::size_t j, std::size_t n, Precision prec) {
  return ldexp(Interval::from_long(static_cast<long>(j), prec), -static_cast<long>(std::countr_zero(n)));
}

// Denominator guard for the cascade.
const Interval& positive(const Interval& x, const char* what) {
  if (!x.certainly_positive()) {
    throw CascadeDomainError(std::string("cascade: ") + what + " is not positive: " + x.to_string(6));
  }
  return x;
}

}  // namespace

StripParams StripParams::quarter(const Interval& rho, const Interval& rho_hat) {
  const Interval q = ldexp(rho, -2);
  return {q, rho, rho_hat, q};
}

void StripParams::validate() const {
  if (!delta.certainly_positive() || !(ldexp(rho, -1) - delta).certainly_positive()) {
    throw DomainError("strip: need 0 < delta < rho/2");
  }
  if (!rho_inf.certainly_positive() || !(rho - 2L * delta - rho_inf).certainly_positive()) {
    throw DomainError("strip: need 0 < rho_inf < rho - 2 delta");
  }
  if (!(rho_hat - rho).certainly_positive()) throw DomainError("strip: need rho < rho_hat");
}

FourierModel solve_lambda(const FourierModel& eta, const Interval& lambda, const Interval& omega) {
  FourierModel out(eta.size(), eta.precision(), eta.hermitian());
  const ComplexInterval l(lambda);
  for (long k = eta.min_index(); k <= eta.max_index(); ++k) {
    const auto& c = eta.coeff(k);
    if (c.re().is_point() && c.re().lo().is_zero() && c.im().is_point() && c.im().lo().is_zero()) continue;
    out.coeff(k) = c / (l - exp_2pi_i(Interval::from_long(k, eta.precision()) * omega));
  }
  return out;
}

SeriesBundle frame_series(const FourierModel& kx, const FourierModel& ky, const Interval& omega,
                          const MapParams& p, std::size_t n) {
  if (kx.size() != ky.size()) throw SizeMismatch("frame_series: component sizes differ");
  if (!is_pow2(n) || n < kx.size()) {
    throw SizeMismatch("frame_series: N_F = " + std::to_string(n) +
                       " must be a power of two >= model size " + std::to_string(kx.size()));
  }
  if (!kx.hermitian() || !ky.hermitian()) throw NotHermitian();
  const Precision prec = omega.precision();
  SeriesBundle b;
  b.n = n;
  b.kx = kx.resized(n);
  b.ky = ky.resized(n);
  b.dkx = derivative(b.kx);
  b.dkx.coeff(0) += ComplexInterval(Interval::from_long(1, prec));
  b.dky = derivative(b.ky);

  const auto kxv = real_grid_values(b.kx);
  const auto dkx = real_grid_values(b.dkx);
  const auto dky = real_grid_values(b.dky);
  const auto dkxw = real_grid_values(rotate(b.dkx, omega));
  const auto dkyw = real_grid_values(rotate(b.dky, omega));

  b.bn = rotate(b.dkx - b.dky, omega);
  b.rbn = solve_lambda(b.bn, p.lambda, omega);
  const auto rbn = real_grid_values(b.rbn);

  std::vector<Interval> n0x(n), n0y(n), h(n), t(n), bl(n), phi(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Interval s = sqr(dkx[j]) + sqr(dky[j]);
    const Interval sw = sqr(dkxw[j]) + sqr(dkyw[j]);
    if (s.contains_zero() || sw.contains_zero()) {
      throw FrameSingular("frame_series: DKx^2 + DKy^2 contains 0 at grid point " + std::to_string(j));
    }
    n0x[j] = -dky[j] / s;
    n0y[j] = dkx[j] / s;
    const Interval n0xw = -dkyw[j] / sw;
    const Interval n0yw = dkxw[j] / sw;
    if (!(dkx[j] * n0y[j] - dky[j] * n0x[j]).contains(Real(1L, prec))) b.det_p_holds = false;

    const Interval c = p.epsilon * cos_2pi(grid_theta(j, n, prec) + kxv[j]);
    const Interval dd = dkxw[j] - dkyw[j];
    // H - lambda; the second term is the lambda N0y (DKx' - DKy') part of H.
    h[j] = (c * dd - dkyw[j]) * n0x[j] + p.lambda * (n0y[j] * dd - 1L);
    bl[j] = n0yw - n0xw;
    t[j] = (c * bl[j] + n0yw) * n0x[j] + p.lambda * bl[j] * n0y[j];
    phi[j] = bl[j] - t[j] * rbn[j];
  }
  b.n0x = dft_real(n0x);
  b.n0y = dft_real(n0y);
  b.h = dft_real(h);
  b.t = dft_real(t);
  b.bl = dft_real(bl);
  b.phi = dft_real(phi);

  // DKx^2 + DKy^2 is a polynomial of degree 2D; a grid of more than 4D points
  // recovers it without aliasing.
  const long d = std::max(degree(b.dkx), degree(b.dky));
  std::size_t m = 2;
  while (static_cast<long>(m) <= 4 * d + 1) m <<= 1;
  const auto sx = real_grid_values(b.dkx.resized(std::max(m, b.dkx.size())));
  const auto sy = real_grid_values(b.dky.resized(std::max(m, b.dky.size())));
  std::vector<Interval> sq(sx.size());
  for (std::size_t j = 0; j < sx.size(); ++j) sq[j] = sqr(sx[j]) + sqr(sy[j]);
  b.dk_sq = dft_real(sq);
  // Modes above 2D are exactly zero; their enclosure noise would dominate
  // the range on the wide strip.
  const ComplexInterval zero(Interval::from_long(0, prec));
  for (long k = b.dk_sq.min_index(); k <= b.dk_sq.max_index(); ++k) {
    if (k > 2 * d || k < -2 * d) b.dk_sq.coeff(k) = zero;
  }

  const auto e = error_samples(kx, ky, omega, p, n);
  b.semiconjugacy_holds = e.semiconjugacy_holds;
  b.ex = dft(e.x);
  b.ex.make_hermitian();
  b.ey = dft(e.y);
  b.ey.make_hermitian();
  return b;
}

FrameBounds bound_cNLP(const SeriesBundle& b, const StripPair& strips) {
  auto at = [&](const Interval& rho, Interval& r_lo, Interval& r_hi, Interval& c_l, Interval& c_n) {
    const Interval mx = modulus_range_on_strip(b.dkx, rho);
    const Interval my = modulus_range_on_strip(b.dky, rho);
    const Interval ms = modulus_range_on_strip(b.dk_sq, rho);
    r_lo = Interval::point(max(Interval::point(mx.lo()), Interval::point(my.lo())).lo());
    r_hi = Interval::point(max(Interval::point(mx.hi()), Interval::point(my.hi())).hi());
    if (!r_lo.certainly_positive() || !(ms.lo().sign() > 0)) {
      throw DegenerateFrame("|DK| on the strip has no positive lower bound (|DKx| in " + mx.to_string(6) +
                            ", |DKy| in " + my.to_string(6) + ", |DKx^2 + DKy^2| in " + ms.to_string(6) + ")");
    }
    c_l = r_hi;
    // On the complex strip |N0| <= max(|DKx|, |DKy|) / |DKx^2 + DKy^2|.
    c_n = up(max(1L / r_lo, c_l / Interval::point(ms.lo())));
  };
  FrameBounds f;
  Interval lo_hat, hi_hat;
  at(strips.rho(), f.r_lo, f.r_hi, f.c_l, f.c_n);
  at(strips.rho_hat(), lo_hat, hi_hat, f.c_l_hat, f.c_n_hat);
  // Range of the interpolated N0 plus its aliasing error, which is bounded
  // through c_N_hat on the wide strip. Much sharper once |DK| varies.
  const Interval direct = max(modulus_range_on_strip(b.n0x, strips.rho()),
                              modulus_range_on_strip(b.n0y, strips.rho())) +
                          cnf_bound(strips, b.n) * f.c_n_hat;
  if (direct.hi() < f.c_n.hi()) f.c_n = up(direct);
  f.c_p = up(2L * max(f.c_l, f.c_n));
  return f;
}

EpsilonBound strip_epsilon(const FourierModel& kx, const MapParams& p, const Interval& rho_hat) {
  const Precision prec = rho_hat.precision();
  const Interval rho_bar = up(imag_bound_on_strip(kx, rho_hat));
  return {rho_bar, up(p.epsilon * cosh(Interval::two_pi(prec) * (rho_hat + rho_bar)))};
}

HBound bound_cH(const FourierModel& h, const StripPair& strips, std::size_t n, const Interval& c_n_hat,
                const Interval& c_l_hat, const MapParams& p, const Interval& eps_strip) {
  const Interval h_hat = (1L + 2L * eps_strip + 2L * p.lambda) * c_n_hat * c_l_hat + p.lambda;
  const Interval c_h = fourier_norm(h, strips.rho()) + cnf_bound(strips, n) * h_hat;
  const Interval den = 1L - p.lambda - c_h;
  if (!den.certainly_positive()) {
    throw HyperbolicityUnverified("||h||_rho bound " + c_h.to_string(6) + " is not below 1 - lambda");
  }
  return {up(c_h), up(1L / den)};
}

DBound bound_cD(const SeriesBundle& b, const StripPair& strips, const Interval& c_n_hat,
                const Interval& c_h, const MapParams& p, const Interval& eps_strip) {
  const Interval& rho = strips.rho();
  const Interval cnf = cnf_bound(strips, b.n);
  const Interval s0 = sk_bound(0, rho, b.n);
  const Interval one_l = 1L - p.lambda;
  DBound d;
  d.r1 = fourier_norm(b.t, rho) + (1L + 2L * eps_strip + 2L * p.lambda) * sqr(c_n_hat) * cnf;
  const Interval mean = abs(b.phi.coeff(0));
  d.r2 = mean - s0 * (fourier_norm(b.bl, rho) + 2L * c_n_hat * cnf + d.r1 * fourier_norm(b.rbn, rho));
  d.r3 = d.r1 * c_h / (one_l * (one_l - c_h)) * fourier_norm(b.bn, rho);
  const Interval gap = d.r2 - d.r3;
  if (!gap.certainly_positive()) {
    throw NonDegeneracyUnverified("r2 - r3 = " + gap.to_string(6) + " is not positive");
  }
  d.c_D = up(1L / gap);
  return d;
}

Interval bound_cE(const SeriesBundle& b, const StripPair& strips, const Interval& omega,
                  const MapParams& p, const Interval& c_l_hat, const Interval& rho_bar) {
  const Precision prec = omega.precision();
  const Interval& rho_hat = strips.rho_hat();
  const Interval e_norm = max(fourier_norm(b.ex, strips.rho()), fourier_norm(b.ey, strips.rho()));
  const Interval amp =
      p.epsilon / Interval::two_pi(prec) * exp(Interval::two_pi(prec) * (rho_hat + rho_bar));
  const Interval printed = (1L + p.lambda) * c_l_hat + abs(p.mu) + amp;
  // Direct bound of |G_p| = max(|Kx_p - omega + phi|, |phi|) on the wide strip.
  const Interval gy = p.lambda * fourier_norm(b.ky, rho_hat) + abs(p.mu) + amp;
  const Interval gx = fourier_norm(b.kx, rho_hat) + abs(omega) + gy;
  const Interval g = max(printed, max(gx, gy));
  return up(e_norm + cnf_bound(strips, b.n) * g);
}

Interval russmann_cr(const Interval& tau) {
  const Precision prec = tau.precision();
  if (tau.lo() < Real(1L, prec)) throw DomainError("russmann_cr: tau must be >= 1");
  const Interval a = pow(Interval::from_long(2, prec), tau);
  const Interval z = hurwitz_zeta2(a, 10000);
  const Interval g = gamma_real(2L * tau + 1L);
  // 2^{d-3} with d = 1.
  return sqrt(ldexp(z * g, -2)) / pow(Interval::two_pi(prec), tau);
}

Interval sigma_margin(const Interval& c, const Interval& eta) {
  return up(up(c) * (1L + eta));
}

CascadeResult cascade(const ConstantsBundle& c, const DiophantineSpec& dio, const StripParams& s) {
  // Transcribed term by term, left to right, so that an independent
  // transcription reproduces the enclosures bit for bit.
  const long d = 1;
  const Interval& g = dio.gamma;
  const Interval& tau = dio.tau;
  const Interval& delta = s.delta;
  const Interval& rho = s.rho;
  const Interval dt = pow(delta, tau);

  const Interval C1 = 1L + c.sigma_h * c.sigma_p * c.c_n * c.c_f1z;
  const Interval C2 = 1L + c.sigma_p * c.sigma_d * c.c_f1a * C1;
  const Interval C3 =
      C2 * ((c.sigma_l + 1L) * c.c_r * c.sigma_p * C1 + c.c_n * c.sigma_h * c.sigma_p * g * dt);
  const Interval Ch2 = c.sigma_l * C3 + c.c_n * c.sigma_h * c.sigma_p * C2 * g * dt;
  const Interval Ch3 = c.sigma_d * c.sigma_p * C1;
  const Interval Ch23 = max(Ch2, Ch3 * g * dt);
  const Interval Ch4 = 2L * sqr(c.sigma_p) * d * Ch2;
  const Interval C4 = c.c_n * (c.sigma_p * c.c_f2 * Ch23 * delta + c.c_f1z * Ch4);
  const Interval Ch5 = 2L * sqr(c.sigma_h) * C4;
  const Interval C5 = Ch4 * c.c_f1a + c.sigma_p * c.c_f2 * Ch23 * delta;
  const Interval C6 = C5 + c.sigma_h * c.sigma_p * c.c_f1a * C4 + c.sigma_p * c.c_f1z * c.c_n * c.sigma_h * C5 +
                      c.sigma_p * c.c_f1z * c.c_n * c.sigma_p * c.c_f1a * Ch5;
  const Interval Ch6 = 2L * sqr(c.sigma_d) * C6;
  const Interval Ch7 = d * c.c_r * C3 * g * pow(delta, tau - 1L) + ldexp(c.c_f2, -1) * Ch23;

  const Interval a1 = (rho - s.rho_inf) / positive(rho - 2L * delta - s.rho_inf, "rho - 2 delta - rho_inf");
  const Interval a3 = rho / positive(delta, "delta");
  const Interval m1 = 1L / positive(1L - pow(a1, 1L - tau), "1 - a1^(1 - tau)");
  const Interval den2 = positive(1L - pow(a1, -tau), "1 - a1^(-tau)");
  const Interval den3 = positive(1L - pow(a1, -2L * tau), "1 - a1^(-2 tau)");

  Interval Ch8 = d * Ch2 / positive(c.sigma_l - c.c_l, "sigma_L - c_L") * m1;
  Ch8 = max(Ch8, Ch4 / positive(c.sigma_p - c.c_p, "sigma_P - c_P") * m1);
  Ch8 = max(Ch8, Ch5 / positive(c.sigma_h - c.c_H, "sigma_H - c_H") * m1);
  Ch8 = max(Ch8, Ch6 / positive(c.sigma_d - c.c_D, "sigma_D - c_D") * m1);
  // Terms with c_B or c_U vanish when the domain distances are infinite.
  if (c.c_b) Ch8 = max(Ch8, Ch2 * delta / positive(*c.c_b, "c_B") * (1L / den2));
  if (c.c_u) Ch8 = max(Ch8, Ch3 * pow(delta, tau + 1L) * g / positive(*c.c_u, "c_U") * (1L / den3));

  CascadeResult r;
  r.c_star = max(Ch7 * pow(a1 * a3, 2L * tau), Ch8 * pow(a3, tau + 1L) * g * pow(rho, tau - 1L));
  r.c_2star = max(Ch2 * pow(a3, tau) / den2, Ch3 * g * pow(rho, tau) / den3);
  const Interval Ct = Ch23 * ldexp(c.c_f2, -1);
  r.c_3star = pow(Interval::from_long(4, rho.precision()), tau) * Ct * r.c_2star;
  return r;
}

Certificate check_existence(const ConstantsBundle& c, const MapParams& p, const DiophantineSpec& dio,
                            const StripParams& s) {
  Certificate cert;
  cert.params = p;
  cert.dio = dio;
  cert.strips = s;
  cert.constants = c;
  cert.precision = s.rho.precision();
  const Interval& g = dio.gamma;
  const Interval rt = pow(s.rho, dio.tau);
  const Interval rit = pow(s.rho_inf, dio.tau);
  cert.t1 = c.c_star * c.c_e / (sqr(g) * sqr(rt));
  cert.t2 = c.c_2star * c.c_e / (g * rt);
  cert.t3 = c.c_3star * c.c_e / (sqr(g) * rit * rt);
  cert.radius = c.c_2star * (g * rit / c.c_3star - c.c_e / (g * rt));
  cert.proved = cert.t1.hi() < Real(1L, cert.precision);
  return cert;
}

Algorithm1Result algorithm1(const FourierModel& kx, const FourierModel& ky, const MapParams& p,
                            const DiophantineSpec& dio, const Algorithm1Options& opts) {
  auto log = [&](const std::string& s) {
    if (opts.log) opts.log(s);
  };
  p.validate();
  dio.validate();
  Algorithm1Result res;
  const Interval c_r = russmann_cr(dio.tau);
  log("c_R " + c_r.to_string(10));

  for (std::size_t n_f : opts.n_f_list) {
    std::optional<SeriesBundle> bundle;
    try {
      bundle = frame_series(kx, ky, dio.omega, p, n_f);
    } catch (const Error& e) {
      log("N_F " + std::to_string(n_f) + ": " + e.what());
      for (const auto& s : opts.strip_list) res.attempts.push_back({n_f, s, e.what(), std::nullopt});
      continue;
    }
    log("N_F " + std::to_string(n_f) + ": series built, det P " + (bundle->det_p_holds ? "ok" : "FAILED") +
        ", semiconjugacy " + (bundle->semiconjugacy_holds ? "ok" : "FAILED"));

    for (const auto& s : opts.strip_list) {
      Attempt at{n_f, s, "", std::nullopt};
      try {
        s.validate();
        const StripPair strips = s.pair();
        ConstantsBundle c;
        const auto dc = derivative_constants(p, s.rho);
        c.c_f1z = up(dc.c_f1z);
        c.c_f1a = up(dc.c_f1a);
        c.c_f2 = up(dc.c_f2);
        c.c_r = c_r;
        c.c_b = opts.c_b;
        c.c_u = opts.c_u;
        const auto fb = bound_cNLP(*bundle, strips);
        c.c_n = fb.c_n;
        c.c_n_hat = fb.c_n_hat;
        c.c_l = fb.c_l;
        c.c_l_hat = fb.c_l_hat;
        c.c_p = fb.c_p;
        const auto eb = strip_epsilon(kx, p, s.rho_hat);
        const auto hb = bound_cH(bundle->h, strips, n_f, c.c_n_hat, c.c_l_hat, p, eb.eps_strip);
        c.c_h_small = hb.c_h;
        c.c_H = hb.c_H;
        const auto db = bound_cD(*bundle, strips, c.c_n_hat, c.c_h_small, p, eb.eps_strip);
        c.c_D = db.c_D;
        c.c_e = bound_cE(*bundle, strips, dio.omega, p, c.c_l_hat, eb.rho_bar);
        c.sigma_l = sigma_margin(c.c_l, opts.eta);
        c.sigma_p = sigma_margin(c.c_p, opts.eta);
        c.sigma_h = sigma_margin(c.c_H, opts.eta);
        c.sigma_d = sigma_margin(c.c_D, opts.eta);
        const auto cr = cascade(c, dio, s);
        c.c_star = cr.c_star;
        c.c_2star = cr.c_2star;
        c.c_3star = cr.c_3star;
        Certificate cert = check_existence(c, p, dio, s);
        cert.n_f = n_f;
        cert.det_p_holds = bundle->det_p_holds;
        cert.semiconjugacy_holds = bundle->semiconjugacy_holds;
        // Identity failures at grid points void the verdict.
        cert.proved = cert.proved && cert.det_p_holds && cert.semiconjugacy_holds;
        at.outcome = cert.proved ? "proved" : "not proved";
        at.t1 = cert.t1;
        log("N_F " + std::to_string(n_f) + " rho " + s.rho.mid().to_string(6) + ": c_L " + c.c_l.to_string(8) +
            " c_N " + c.c_n.to_string(8) + " c_H " + c.c_H.to_string(8) + " c_D " + c.c_D.to_string(8) +
            " c_E " + c.c_e.to_string(8) + " C* " + c.c_star.to_string(8) + " T1 " + cert.t1.to_string(8));
        if (!res.best || cert.t1.hi() < res.best->t1.hi()) res.best = cert;
        res.attempts.push_back(at);
        if (cert.proved) {
          res.certificate = cert;
          return res;
        }
      } catch (const Error& e) {
        at.outcome = e.what();
        log("N_F " + std::to_string(n_f) + " rho " + s.rho.mid().to_string(6) + ": " + e.what());
        res.attempts.push_back(at);
      }
    }
  }
  return res;
}

}  // namespace kamcert
