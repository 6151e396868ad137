#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kamcert/dftbounds.hpp"
#include "kamcert/dsmap.hpp"
#include "kamcert/fourier.hpp"

namespace kamcert {

/// Strip widths of one verification attempt.
struct StripParams {
  Interval delta;
  Interval rho;
  Interval rho_hat;
  Interval rho_inf;

  /// delta = rho_inf = rho/4.
  static StripParams quarter(const Interval& rho, const Interval& rho_hat);
  /// Throws DomainError unless 0 < delta < rho/2, 0 < rho_inf < rho - 2 delta
  /// and rho < rho_hat.
  void validate() const;
  [[nodiscard]] StripPair pair() const { return StripPair(rho, rho_hat); }
};

/// Grid series of one N_F, shared by every strip tuple.
///
/// dkx, dky, bn, rbn and dk_sq are trigonometric polynomials known exactly;
/// the remaining models are DFTs of grid samples and carry aliasing error.
struct SeriesBundle {
  std::size_t n = 0;
  FourierModel kx, ky;    // K_p resized to n
  FourierModel dkx, dky;  // DK = (1 + Kx_p', Ky_p')
  FourierModel dk_sq;     // DKx^2 + DKy^2 on a grid large enough to be exact
  FourierModel n0x, n0y;
  FourierModel h;
  FourierModel t;
  FourierModel bl;
  FourierModel bn;   // DKx(. + omega) - DKy(. + omega)
  FourierModel rbn;  // R_lambda B^N
  FourierModel phi;  // B^L - T R_lambda B^N
  FourierModel ex, ey;  // G_p - K_{p,omega}
  /// DKx N0y - DKy N0x contains 1 at every grid point.
  bool det_p_holds = true;
  bool semiconjugacy_holds = true;
};

/// Throws FrameSingular if DKx^2 + DKy^2 contains 0 at a grid point,
/// SizeMismatch unless n >= model size.
SeriesBundle frame_series(const FourierModel& kx, const FourierModel& ky, const Interval& omega,
                          const MapParams& p, std::size_t n);

/// Solution coefficients xi_k = eta_k/(lambda - e^{2 pi i k omega}) of
/// lambda xi(theta) - xi(theta + omega) = eta(theta).
FourierModel solve_lambda(const FourierModel& eta, const Interval& lambda, const Interval& omega);

struct FrameBounds {
  Interval r_lo, r_hi;  // |DK| on the strip rho
  Interval c_l, c_n, c_l_hat, c_n_hat, c_p;
};

/// c_L = r_hi and c_N = max(1/r_lo, c_L / min |DKx^2 + DKy^2|) at rho; hatted
/// values at rho_hat. c_N is replaced by the strip range of the N0 models plus
/// aliasing error when that is smaller. c_P = 2 max(c_L, c_N). Throws
/// DegenerateFrame.
FrameBounds bound_cNLP(const SeriesBundle& b, const StripPair& strips);

/// eps cosh(2 pi (rho_hat + rho_bar)) with |Im Kx_p| <= rho_bar on T_rho_hat:
/// the bound of |eps cos(2 pi Kx)| on that strip.
struct EpsilonBound {
  Interval rho_bar;
  Interval eps_strip;
};
EpsilonBound strip_epsilon(const FourierModel& kx, const MapParams& p, const Interval& rho_hat);

struct HBound {
  Interval c_h;  // bound of ||h||_rho
  Interval c_H;  // 1/(1 - lambda - c_h)
};

/// Throws HyperbolicityUnverified if c_h >= 1 - lambda.
HBound bound_cH(const FourierModel& h, const StripPair& strips, std::size_t n, const Interval& c_n_hat,
                const Interval& c_l_hat, const MapParams& p, const Interval& eps_strip);

struct DBound {
  Interval r1, r2, r3;
  Interval c_D;
};

/// Throws NonDegeneracyUnverified unless r2 > r3.
DBound bound_cD(const SeriesBundle& b, const StripPair& strips, const Interval& c_n_hat,
                const Interval& c_h, const MapParams& p, const Interval& eps_strip);

/// Aliasing-inclusive bound of ||G_p - K_{p,omega}||_rho.
Interval bound_cE(const SeriesBundle& b, const StripPair& strips, const Interval& omega,
                  const MapParams& p, const Interval& c_l_hat, const Interval& rho_bar);

/// sqrt(2^{d-3} zeta(2, 2^tau) Gamma(2 tau + 1)) / (2 pi)^tau with d = 1.
Interval russmann_cr(const Interval& tau);

/// Upper bound of c (1 + eta), returned as a point strictly above c.hi.
Interval sigma_margin(const Interval& c, const Interval& eta);

struct ConstantsBundle {
  Interval c_f1z, c_f1a, c_f2;
  Interval c_n, c_n_hat, c_l, c_l_hat, c_p;
  Interval sigma_l, sigma_p;
  Interval c_h_small;  // bound of ||h||_rho
  Interval c_H, sigma_h;
  Interval c_D, sigma_d;
  Interval c_e;
  Interval c_r;
  /// Lower bounds of the distances to the domain boundaries; nullopt is +inf.
  std::optional<Interval> c_b, c_u;
  Interval c_star, c_2star, c_3star;
};

struct CascadeResult {
  Interval c_star, c_2star, c_3star;
};

/// Constants of the a-posteriori theorem from the hypothesis constants, with
/// d = 1. Throws CascadeDomainError on a denominator containing 0.
CascadeResult cascade(const ConstantsBundle& c, const DiophantineSpec& dio, const StripParams& s);

struct Certificate {
  MapParams params;
  DiophantineSpec dio;
  StripParams strips;
  std::size_t n_f = 0, n_a = 0, n_o = 0;
  ConstantsBundle constants;
  Interval t1;      // C* c_E / (gamma^2 rho^{2 tau})
  Interval t2;      // C** c_E / (gamma rho^tau)
  Interval t3;      // C*** c_E / (gamma^2 rho_inf^tau rho^tau)
  Interval radius;  // C** (gamma rho_inf^tau / C*** - c_E/(gamma rho^tau))
  bool proved = false;
  bool det_p_holds = true;
  bool semiconjugacy_holds = true;
  std::string config_hash;
  Precision precision = 0;
};

/// Quotients from a complete bundle; proved iff t1.hi < 1.
Certificate check_existence(const ConstantsBundle& c, const MapParams& p, const DiophantineSpec& dio,
                            const StripParams& s);

struct Attempt {
  std::size_t n_f = 0;
  StripParams strips;
  std::string outcome;  // "proved", "not proved" or the failure message
  std::optional<Interval> t1;
};

struct Algorithm1Options {
  std::vector<std::size_t> n_f_list{1024, 2048, 4096, 8192};
  std::vector<StripParams> strip_list;
  Interval eta;  // sigma margin
  /// Domain distances copied into every bundle; nullopt is +inf.
  std::optional<Interval> c_b, c_u;
  std::function<void(const std::string&)> log;
};

struct Algorithm1Result {
  std::optional<Certificate> certificate;  // first tuple that proves existence
  std::optional<Certificate> best;         // smallest T1 among completed tuples
  std::vector<Attempt> attempts;
};

/// Runs the verification over N_F values and strip tuples in order. A
/// verification failure for one tuple moves on to the next.
Algorithm1Result algorithm1(const FourierModel& kx, const FourierModel& ky, const MapParams& p,
                            const DiophantineSpec& dio, const Algorithm1Options& opts);

/// One "name lo hi" line per quantity with outward-rounded decimals.
std::string certificate_text(const Certificate& c);
std::string certificate_json(const Certificate& c);

}  // namespace kamcert
