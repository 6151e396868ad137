#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kamcert/certify.hpp"

namespace kamcert {

namespace {

constexpr std::size_t kDigits = 20;

struct Entry {
  std::string name;
  const Interval* value;
};

std::string lo_str(const Interval& v) { return v.lo().to_string(kDigits, MPFR_RNDD); }
std::string hi_str(const Interval& v) { return v.hi().to_string(kDigits, MPFR_RNDU); }

std::vector<Entry> entries(const Certificate& c) {
  const ConstantsBundle& k = c.constants;
  return {
      {"lambda", &c.params.lambda},  {"epsilon", &c.params.epsilon}, {"mu", &c.params.mu},
      {"omega", &c.dio.omega},       {"gamma", &c.dio.gamma},        {"tau", &c.dio.tau},
      {"delta", &c.strips.delta},    {"rho", &c.strips.rho},         {"rho_hat", &c.strips.rho_hat},
      {"rho_inf", &c.strips.rho_inf},
      {"c_f1z", &k.c_f1z},           {"c_f1a", &k.c_f1a},            {"c_f2", &k.c_f2},
      {"c_N", &k.c_n},               {"c_N_hat", &k.c_n_hat},        {"c_L", &k.c_l},
      {"c_L_hat", &k.c_l_hat},       {"c_P", &k.c_p},                {"sigma_L", &k.sigma_l},
      {"sigma_P", &k.sigma_p},       {"c_h", &k.c_h_small},          {"c_H", &k.c_H},
      {"sigma_H", &k.sigma_h},       {"c_D", &k.c_D},                {"sigma_D", &k.sigma_d},
      {"c_E", &k.c_e},               {"c_R", &k.c_r},
      {"C_star", &k.c_star},         {"C_2star", &k.c_2star},        {"C_3star", &k.c_3star},
      {"T1", &c.t1},                 {"T2", &c.t2},                  {"T3", &c.t3},
      {"radius", &c.radius},
  };
}

}  // namespace

std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  os << "# kamcert certificate\n";
  os << "verdict " << (c.proved ? "proved" : "not_proved") << '\n';
  os << "config_hash " << (c.config_hash.empty() ? "-" : c.config_hash) << '\n';
  os << "precision " << c.precision << '\n';
  os << "N_F " << c.n_f << '\n' << "N_A " << c.n_a << '\n' << "N_O " << c.n_o << '\n';
  os << "det_P_contains_1 " << (c.det_p_holds ? "yes" : "no") << '\n';
  os << "semiconjugacy " << (c.semiconjugacy_holds ? "yes" : "no") << '\n';
  os << "c_B " << (c.constants.c_b ? lo_str(*c.constants.c_b) : "inf") << '\n';
  os << "c_U " << (c.constants.c_u ? lo_str(*c.constants.c_u) : "inf") << '\n';
  for (const auto& e : entries(c)) os << e.name << ' ' << lo_str(*e.value) << ' ' << hi_str(*e.value) << '\n';
  return os.str();
}

std::string certificate_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["verdict"] = c.proved ? "proved" : "not_proved";
  j["config_hash"] = c.config_hash;
  j["precision"] = c.precision;
  j["N_F"] = c.n_f;
  j["N_A"] = c.n_a;
  j["N_O"] = c.n_o;
  j["det_P_contains_1"] = c.det_p_holds;
  j["semiconjugacy"] = c.semiconjugacy_holds;
  j["c_B"] = c.constants.c_b ? nlohmann::ordered_json(lo_str(*c.constants.c_b)) : "inf";
  j["c_U"] = c.constants.c_u ? nlohmann::ordered_json(lo_str(*c.constants.c_u)) : "inf";
  auto& q = j["quantities"];
  for (const auto& e : entries(c)) q[e.name] = {{"lo", lo_str(*e.value)}, {"hi", hi_str(*e.value)}};
  return j.dump(2) + "\n";
}

}  // namespace kamcert
