#pragma once

#include <functional>
#include <optional>
#include <string>

#include "kamcert/birkhoff.hpp"
#include "kamcert/certify.hpp"
#include "kamcert/config.hpp"

namespace kamcert {

/// Everything a run produces, kept for exports.
struct RunArtifacts {
  MapParams params;
  DiophantineSpec dio;
  std::optional<TuneResult> tuned;  // set when mu = auto
  Orbit orbit;
  TorusApprox torus;
  Algorithm1Result verification;
  std::string config_hash;
};

/// Interval enclosure of (sqrt 5 - 1)/2.
Interval golden_omega(Precision prec);

/// Encloses the map and Diophantine parameters of a config at its precision;
/// mu must be a decimal here. Throws ConfigError, DomainError.
MapParams map_params(const RunConfig& c, const Interval& mu);
DiophantineSpec diophantine_spec(const RunConfig& c);
Algorithm1Options algorithm1_options(const RunConfig& c);

/// tune_mu (when mu = auto), generate_orbit, wb_fourier, algorithm1. The
/// certificates carry N_A, N_O and the config hash.
RunArtifacts run_pipeline(const RunConfig& c, const std::function<void(const std::string&)>& log = {});

}  // namespace kamcert
