#include "kamcert/config.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "kamcert/errors.hpp"

namespace kamcert {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : v) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& key, const std::string& v) {
  std::size_t n = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError(key + ": not a non-negative integer: '" + v + "'");
  return n;
}

void check_decimal(const std::string& key, const std::string& v) {
  try {
    (void)Real::parse(v, 64);
  } catch (const Error&) {
    throw ConfigError(key + ": not a decimal number: '" + v + "'");
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

}  // namespace

Real parse_strip_value(const std::string& s, Precision prec) {
  if (s.rfind("2^", 0) == 0) {
    long e = 0;
    const char* b = s.data() + 2;
    const auto [p, ec] = std::from_chars(b, s.data() + s.size(), e);
    if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError("strips: bad power of two '" + s + "'");
    Real r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
  }
  try {
    return Real::parse(s, prec);
  } catch (const Error&) {
    throw ConfigError("strips: not a decimal number: '" + s + "'");
  }
}

void RunConfig::validate() const {
  if (lambda.empty()) throw ConfigError("lambda: missing");
  if (epsilon.empty()) throw ConfigError("epsilon: missing");
  check_decimal("lambda", lambda);
  check_decimal("epsilon", epsilon);
  if (mu != "auto") check_decimal("mu", mu);
  if (omega != "golden") check_decimal("omega", omega);
  check_decimal("gamma", gamma);
  check_decimal("tau", tau);
  check_decimal("rho_hat", rho_hat);
  check_decimal("eta", eta);
  check_decimal("mu_tolerance", mu_tolerance);
  check_decimal("x0", x0);
  check_decimal("y0", y0);
  if (c_b != "inf") check_decimal("c_B", c_b);
  if (c_u != "inf") check_decimal("c_U", c_u);
  if (precision < 64) throw ConfigError("precision: must be >= 64 bits");
  if (n_o == 0 || n_a == 0 || wb_passes == 0) throw ConfigError("N_O, N_A and wb_passes must be positive");
  if (n_f.empty()) throw ConfigError("N_F: empty list");
  if (strips.empty()) throw ConfigError("strips: empty list");
  for (const auto& s : strips) (void)parse_strip_value(s, 64);
}

RunConfig parse_config(std::istream& is) {
  RunConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string v = trim(std::string_view(line).substr(eq + 1));
    if (v.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty value for " + key);

    if (key == "lambda") c.lambda = v;
    else if (key == "epsilon") c.epsilon = v;
    else if (key == "mu") c.mu = v;
    else if (key == "omega") c.omega = v;
    else if (key == "gamma") c.gamma = v;
    else if (key == "tau") c.tau = v;
    else if (key == "precision") c.precision = static_cast<Precision>(parse_count(key, v));
    else if (key == "N_O") c.n_o = parse_count(key, v);
    else if (key == "N_A") c.n_a = parse_count(key, v);
    else if (key == "N_T") c.n_t = parse_count(key, v);
    else if (key == "wb_passes") c.wb_passes = parse_count(key, v);
    else if (key == "N_F") {
      c.n_f.clear();
      for (const auto& s : split_list(v)) c.n_f.push_back(parse_count(key, s));
    } else if (key == "strips") {
      if (v != "default") c.strips = split_list(v);
    } else if (key == "rho_hat") c.rho_hat = v;
    else if (key == "eta") c.eta = v;
    else if (key == "mu_tolerance") c.mu_tolerance = v;
    else if (key == "c_B") c.c_b = v;
    else if (key == "c_U") c.c_u = v;
    else if (key == "x0") c.x0 = v;
    else if (key == "y0") c.y0 = v;
    else if (key == "certificate") c.certificate_path = v;
    else if (key == "certificate_json") c.certificate_json_path = v;
    else if (key == "orbit_csv") c.orbit_path = v;
    else if (key == "torus_csv") c.torus_path = v;
    else throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(f);
}

std::string canonical_config(const RunConfig& c) {
  std::ostringstream os;
  std::vector<std::string> nf;
  for (auto n : c.n_f) nf.push_back(std::to_string(n));
  os << "lambda = " << c.lambda << "\nepsilon = " << c.epsilon << "\nmu = " << c.mu << "\nomega = " << c.omega
     << "\ngamma = " << c.gamma << "\ntau = " << c.tau << "\nprecision = " << c.precision << "\nN_O = " << c.n_o
     << "\nN_A = " << c.n_a << "\nN_T = " << c.n_t << "\nwb_passes = " << c.wb_passes << "\nN_F = " << join(nf)
     << "\nstrips = " << join(c.strips) << "\nrho_hat = " << c.rho_hat << "\neta = " << c.eta
     << "\nmu_tolerance = " << c.mu_tolerance << "\nc_B = " << c.c_b << "\nc_U = " << c.c_u << "\nx0 = " << c.x0
     << "\ny0 = " << c.y0 << "\n";
  return os.str();
}

std::string config_hash(const RunConfig& c) {
  const std::string text = canonical_config(c);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("config_hash: SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace kamcert
