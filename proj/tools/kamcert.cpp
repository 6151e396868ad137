#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kamcert/errors.hpp"
#include "kamcert/pipeline.hpp"

namespace {

using namespace kamcert;

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d{
      {"c_f1z", "|D_z F| on the strip"},
      {"c_f1a", "|D_mu F| on the strip"},
      {"c_f2", "second derivatives of F"},
      {"c_N", "|N0| on T_rho"},
      {"c_N_hat", "|N0| on T_rho_hat"},
      {"c_L", "|DK| on T_rho"},
      {"c_L_hat", "|DK| on T_rho_hat"},
      {"c_P", "|P| on T_rho"},
      {"c_h", "||H - lambda||_rho"},
      {"c_H", "1/(1 - lambda - c_h)"},
      {"c_D", "inverse twist of the averaged torsion"},
      {"c_E", "||F(K) - K(. + omega)||_rho with aliasing"},
      {"c_R", "Russmann constant"},
      {"C_star", "existence constant"},
      {"C_2star", "closeness constant"},
      {"C_3star", "uniqueness constant"},
      {"T1", "existence quotient, < 1 proves"},
      {"T2", "distance of the true circle to K"},
      {"T3", "uniqueness quotient"},
  };
  return d;
}

void print_annotated(std::ostream& os, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto sp = line.find(' ');
    const auto it = descriptions().find(line.substr(0, sp));
    os << line;
    if (it != descriptions().end()) os << "    # " << it->second;
    os << "\n";
  }
}

void write_file(const std::string& path, const std::string& what, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open " + what + " output '" + path + "'");
  body(f);
  if (!f) throw Error("write failed for " + what + " output '" + path + "'");
}

int run(const std::string& config_path, bool verbose, const std::vector<std::string>& exports, int precision) {
  RunConfig cfg = load_config(config_path);
  if (precision > 0) cfg.precision = static_cast<Precision>(precision);
  cfg.validate();

  auto log = [&](const std::string& s) {
    if (verbose) std::cerr << s << "\n";
  };
  const RunArtifacts a = run_pipeline(cfg, log);

  for (const auto& e : exports) {
    if (e == "orbit") {
      write_file(cfg.orbit_path, "orbit", [&](std::ostream& os) { write_orbit_csv(os, a.orbit); });
    } else if (e == "torus") {
      write_file(cfg.torus_path, "torus", [&](std::ostream& os) { write_torus_csv(os, a.torus); });
    }
  }

  const auto& v = a.verification;
  const std::optional<Certificate>& cert = v.certificate ? v.certificate : v.best;
  if (!cert) {
    std::cerr << "no verification tuple completed:\n";
    for (const auto& at : v.attempts) {
      std::cerr << "  N_F " << at.n_f << " rho " << at.strips.rho.mid().to_string(6) << ": " << at.outcome << "\n";
    }
    return 1;
  }
  const std::string text = certificate_text(*cert);
  write_file(cfg.certificate_path, "certificate", [&](std::ostream& os) { os << text; });
  for (const auto& e : exports) {
    if (e == "certificate-json") {
      write_file(cfg.certificate_json_path, "certificate-json",
                 [&](std::ostream& os) { os << certificate_json(*cert); });
    }
  }
  if (verbose) print_annotated(std::cerr, text);
  std::cout << (cert->proved ? "proved" : "not proved") << ": N_F " << cert->n_f << " rho "
            << cert->strips.rho.mid().to_string(6) << " T1 <= " << cert->t1.hi().to_string(6, MPFR_RNDU) << "\n";
  return cert->proved ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computer-assisted proof of invariant circles of the dissipative standard map"};
  std::string config;
  bool verbose = false;
  std::vector<std::string> exports;
  int precision = 0;
  app.add_option("--config", config, "Run configuration file")->required();
  app.add_flag("--verbose", verbose, "Print every verification tuple and the annotated certificate");
  app.add_option("--export", exports, "Extra outputs")
      ->check(CLI::IsMember({"orbit", "torus", "certificate-json"}))
      ->take_all();
  app.add_option("--precision", precision, "Working precision in bits, overrides the config")
      ->check(CLI::Range(64, 1 << 20));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run(config, verbose, exports, precision);
  } catch (const std::exception& e) {
    std::cerr << "kamcert: " << e.what() << "\n";
    return 2;
  }
}
