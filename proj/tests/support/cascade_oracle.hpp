#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kamcert/certify.hpp"

namespace kamcert::testutil {

/// Hypothesis constants as decimal strings, so a fixture can be enclosed at
/// any precision.
struct CascadeFixture {
  std::string name;
  std::string c_f1z, c_f1a, c_f2, c_n, c_l, c_p, c_H, c_D, c_r;
  std::string s_l, s_p, s_h, s_d;
  std::optional<std::string> c_b, c_u;
  std::string gamma, tau, rho;  // delta = rho_inf = rho/4
};

inline std::vector<CascadeFixture> cascade_fixtures() {
  return {
      {"tau 1.26, flat-like", "2.4124", "1.0000000000000000000000000000000000001", "6.3608", "1.0353", "1.044",
       "2.088", "1.6667", "0.5994", "0.06537", "1.0962", "2.1924", "1.75", "0.6294", std::nullopt, std::nullopt,
       "0.381966011250104", "1.26", "0.001953125"},
      {"tau 1.5, finite c_B and c_U", "3.1", "1.01", "7.25", "1.8", "1.35", "3.6", "2.5", "0.75", "0.11", "1.5", "4",
       "2.75", "0.8", "0.05", "0.2", "0.25", "1.5", "0.01"},
      {"tau 2, wide strip", "2.9", "1.001", "9.5", "1.2", "1.7", "3.4", "1.9", "0.61", "0.2", "1.8", "3.6", "2.0",
       "0.7", std::nullopt, "1.5", "0.1", "2", "0.05"},
  };
}

struct CascadeInput {
  ConstantsBundle c;
  DiophantineSpec dio;
  StripParams strips;
};

inline CascadeInput enclose_fixture(const CascadeFixture& f, Precision prec) {
  auto v = [&](const std::string& s) { return Interval::from_decimal(s, prec); };
  CascadeInput in;
  in.c.c_f1z = v(f.c_f1z);
  in.c.c_f1a = v(f.c_f1a);
  in.c.c_f2 = v(f.c_f2);
  in.c.c_n = v(f.c_n);
  in.c.c_l = v(f.c_l);
  in.c.c_p = v(f.c_p);
  in.c.c_H = v(f.c_H);
  in.c.c_D = v(f.c_D);
  in.c.c_r = v(f.c_r);
  in.c.sigma_l = v(f.s_l);
  in.c.sigma_p = v(f.s_p);
  in.c.sigma_h = v(f.s_h);
  in.c.sigma_d = v(f.s_d);
  if (f.c_b) in.c.c_b = v(*f.c_b);
  if (f.c_u) in.c.c_u = v(*f.c_u);
  in.dio = {Interval::from_long(0, prec), v(f.gamma), v(f.tau)};
  const Interval rho = v(f.rho);
  in.strips = StripParams::quarter(rho, rho + v("0.01"));
  return in;
}

/// Straight-line evaluation of the constants, one statement per printed
/// line, with d = 1.
inline CascadeResult cascade_oracle(const CascadeInput& in) {
  const ConstantsBundle& k = in.c;
  const Interval& cF1z = k.c_f1z;
  const Interval& cF1a = k.c_f1a;
  const Interval& cF2 = k.c_f2;
  const Interval& cN = k.c_n;
  const Interval& cR = k.c_r;
  const Interval& sL = k.sigma_l;
  const Interval& sP = k.sigma_p;
  const Interval& sH = k.sigma_h;
  const Interval& sD = k.sigma_d;
  const Interval& gamma = in.dio.gamma;
  const Interval& tau = in.dio.tau;
  const Interval& delta = in.strips.delta;
  const Interval& rho = in.strips.rho;
  const Interval& rho_inf = in.strips.rho_inf;
  const Precision p = rho.precision();
  const Interval one = Interval::from_long(1, p);
  const Interval two = Interval::from_long(2, p);
  const Interval half = Interval::from_ratio(1, 2, p);
  const Interval d = one;
  const Interval delta_tau = pow(delta, tau);

  Interval C1 = one + sH * sP * cN * cF1z;
  Interval C2 = one + sP * sD * cF1a * C1;
  Interval C3 = C2 * ((sL + one) * cR * sP * C1 + cN * sH * sP * gamma * delta_tau);
  Interval hC2 = sL * C3 + cN * sH * sP * C2 * gamma * delta_tau;
  Interval hC3 = sD * sP * C1;
  Interval hC23 = max(hC2, hC3 * gamma * delta_tau);
  Interval hC4 = two * (sP * sP) * d * hC2;
  Interval C4 = cN * (sP * cF2 * hC23 * delta + cF1z * hC4);
  Interval hC5 = two * (sH * sH) * C4;
  Interval C5 = hC4 * cF1a + sP * cF2 * hC23 * delta;
  Interval C6 = C5 + sH * sP * cF1a * C4 + sP * cF1z * cN * sH * C5 + sP * cF1z * cN * sP * cF1a * hC5;
  Interval hC6 = two * (sD * sD) * C6;
  Interval hC7 = d * cR * C3 * gamma * pow(delta, tau - one) + half * cF2 * hC23;
  Interval a1 = (rho - rho_inf) / (rho - two * delta - rho_inf);
  Interval a3 = rho / delta;
  Interval f1 = one / (one - pow(a1, one - tau));
  Interval f2 = one / (one - pow(a1, -tau));
  Interval f3 = one / (one - pow(a1, -(two * tau)));
  Interval hC8 = d * hC2 / (sL - k.c_l) * f1;
  hC8 = max(hC8, hC4 / (sP - k.c_p) * f1);
  hC8 = max(hC8, hC5 / (sH - k.c_H) * f1);
  hC8 = max(hC8, hC6 / (sD - k.c_D) * f1);
  if (k.c_b) hC8 = max(hC8, hC2 * delta / *k.c_b * f2);
  if (k.c_u) hC8 = max(hC8, hC3 * pow(delta, tau + one) * gamma / *k.c_u * f3);
  CascadeResult r;
  r.c_star = max(hC7 * pow(a1 * a3, two * tau), hC8 * pow(a3, tau + one) * gamma * pow(rho, tau - one));
  r.c_2star = max(hC2 * pow(a3, tau) / (one - pow(a1, -tau)), hC3 * gamma * pow(rho, tau) / (one - pow(a1, -(two * tau))));
  Interval tC = hC23 * half * cF2;
  r.c_3star = pow(Interval::from_long(4, p), tau) * tC * r.c_2star;
  return r;
}

}  // namespace kamcert::testutil
