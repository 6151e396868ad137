#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kamcert/real.hpp"

namespace kamcert {

/// Flat "key = value" run configuration. Numbers are kept as the decimal
/// strings of the file so that they can be enclosed at any precision.
///
/// Keys: lambda, epsilon (required); mu (auto | decimal), omega (golden |
/// decimal), gamma, tau, precision, N_O, N_A, N_T, wb_passes, N_F (list),
/// strips (default | list of rho, decimals or 2^-k), rho_hat, eta,
/// mu_tolerance, c_B, c_U (inf | decimal), x0, y0, certificate,
/// certificate_json, orbit_csv, torus_csv. '#' starts a comment.
struct RunConfig {
  std::string lambda;
  std::string epsilon;
  std::string mu = "auto";
  std::string omega = "golden";
  std::string gamma = "0.381966011250104";
  std::string tau = "1.26";
  Precision precision = 128;
  std::size_t n_o = 65296;
  std::size_t n_a = 240;
  std::size_t n_t = 10000;
  std::size_t wb_passes = 1;
  std::vector<std::size_t> n_f{1024, 2048, 4096, 8192};
  std::vector<std::string> strips{"2^-7", "2^-8", "2^-9", "2^-10"};
  std::string rho_hat = "0.01";
  std::string eta = "0.05";
  std::string mu_tolerance = "1e-28";
  std::string c_b = "inf";
  std::string c_u = "inf";
  std::string x0 = "0";
  std::string y0 = "0";

  std::string certificate_path = "certificate.txt";
  std::string certificate_json_path = "certificate.json";
  std::string orbit_path = "orbit.csv";
  std::string torus_path = "torus.csv";

  /// Throws ConfigError on an unparseable number, precision < 64, an empty
  /// list, or a zero count.
  void validate() const;
};

/// Throws ConfigError naming the line on unknown keys or malformed lines.
RunConfig parse_config(std::istream& is);
RunConfig load_config(const std::string& path);

/// Every computational key in a fixed order, one "key = value" per line;
/// output paths are left out.
std::string canonical_config(const RunConfig& c);
/// Lowercase hex SHA-256 of canonical_config.
std::string config_hash(const RunConfig& c);

/// "2^-9" or a decimal, rounded to nearest at prec.
Real parse_strip_value(const std::string& s, Precision prec);

}  // namespace kamcert
