#include "kamcert/pipeline.hpp"

#include "kamcert/errors.hpp"

namespace kamcert {

Interval golden_omega(Precision prec) {
  return (sqrt(Interval::from_long(5, prec)) - 1L) / 2L;
}

namespace {

Interval omega_of(const RunConfig& c) {
  return c.omega == "golden" ? golden_omega(c.precision) : Interval::from_decimal(c.omega, c.precision);
}

std::optional<Interval> distance(const std::string& v, Precision prec) {
  if (v == "inf") return std::nullopt;
  return Interval::from_decimal(v, prec);
}

}  // namespace

MapParams map_params(const RunConfig& c, const Interval& mu) {
  MapParams p{Interval::from_decimal(c.lambda, c.precision), Interval::from_decimal(c.epsilon, c.precision), mu};
  p.validate();
  return p;
}

DiophantineSpec diophantine_spec(const RunConfig& c) {
  DiophantineSpec d{omega_of(c), Interval::from_decimal(c.gamma, c.precision),
                    Interval::from_decimal(c.tau, c.precision)};
  d.validate();
  return d;
}

Algorithm1Options algorithm1_options(const RunConfig& c) {
  const Precision prec = c.precision;
  Algorithm1Options o;
  o.n_f_list = c.n_f;
  const Interval rho_hat = Interval::from_decimal(c.rho_hat, prec);
  o.strip_list.clear();
  for (const auto& s : c.strips) {
    // Powers of two are exact; decimals get an outward enclosure.
    const Interval rho = s.rfind("2^", 0) == 0 ? Interval::point(parse_strip_value(s, prec))
                                                : Interval::from_decimal(s, prec);
    o.strip_list.push_back(StripParams::quarter(rho, rho_hat));
  }
  o.eta = Interval::from_decimal(c.eta, prec);
  o.c_b = distance(c.c_b, prec);
  o.c_u = distance(c.c_u, prec);
  return o;
}

RunArtifacts run_pipeline(const RunConfig& c, const std::function<void(const std::string&)>& log) {
  auto say = [&](const std::string& s) {
    if (log) log(s);
  };
  c.validate();
  const Precision prec = c.precision;
  PrecisionScope scope(prec);
  RunArtifacts out;
  out.config_hash = config_hash(c);
  out.dio = diophantine_spec(c);
  const Real omega = out.dio.omega.mid();

  // Validates lambda and epsilon before the orbit stage.
  (void)map_params(c, Interval::from_long(0, prec));
  const Real lambda = Real::parse(c.lambda, prec);
  const Real epsilon = Real::parse(c.epsilon, prec);

  OrbitConfig oc;
  oc.orbit_size = c.n_o;
  oc.modes = c.n_a;
  oc.burn_in = c.n_t;
  oc.x0 = Real::parse(c.x0, prec);
  oc.y0 = Real::parse(c.y0, prec);
  oc.theta0 = Real(0L, prec);

  Interval mu;
  Real mu_real(prec);
  if (c.mu == "auto") {
    out.tuned = tune_mu(lambda, epsilon, omega, Real::parse(c.mu_tolerance, prec), oc);
    mu_real = out.tuned->mu;
    mu = Interval::point(mu_real);
    say("mu " + mu_real.to_string(30) + " after " + std::to_string(out.tuned->iterations) +
        " iterations, rotation residual " + out.tuned->residual.to_string(3));
  } else {
    mu = Interval::from_decimal(c.mu, prec);
    mu_real = Real::parse(c.mu, prec);
  }
  out.params = map_params(c, mu);

  out.orbit = generate_orbit({lambda, epsilon, mu_real}, omega, oc);
  out.torus = wb_fourier(out.orbit, omega, c.n_a, c.wb_passes);
  say("torus: " + std::to_string(c.n_a) + " modes from " + std::to_string(c.n_o) + " orbit points" +
      (out.torus.near_resonance ? " (near resonance)" : ""));

  Algorithm1Options o = algorithm1_options(c);
  o.log = log;
  out.verification = algorithm1(out.torus.kx, out.torus.ky, out.params, out.dio, o);
  for (auto* cert : {&out.verification.certificate, &out.verification.best}) {
    if (!*cert) continue;
    (*cert)->n_a = c.n_a;
    (*cert)->n_o = c.n_o;
    (*cert)->config_hash = out.config_hash;
  }
  return out;
}

}  // namespace kamcert
