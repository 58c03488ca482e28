#pragma once

#include <stdexcept>

namespace qcoex {

/// Physical and protocol parameters of the CV-QKD link model.
///
/// Power is stored in watts; the config layer converts dBm on load.
struct QkdParams {
  double f_sym = 1e9;              // quantum symbol rate, symbols/s
  double beta = 0.95;              // reconciliation efficiency, in (0, 1]
  int mu = 2;                      // detection type: 1 = homodyne, 2 = heterodyne
  double xi_0 = 1e-2;              // fixed receiver excess noise, SNU
  double xi_r = 1e-12;             // Raman noise efficiency, SNU/W
  double p_opt_w = 1e-3;           // classical optical power per WDM channel, W
  double alpha_0_db = 2.0;         // fixed insertion loss on the quantum channel, dB
  double alpha_l_db_per_km = 0.2;  // fiber attenuation, dB/km

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Result of the modulation-variance optimization for one (T, xi) point.
struct KeyRateResult {
  double r = 0.0;             // secret fraction, bits/symbol, clamped at 0
  double v_mod_opt = 0.0;     // maximizing modulation variance, SNU
  double key_rate_bps = 0.0;  // f_sym * r
  double t = 0.0;             // transmittance used
  double xi = 0.0;            // excess noise used, SNU
};

/// Channel transmittance 10^(-(alpha_0 + alpha_l * L) / 10) for a fiber of
/// length L km. Strictly decreasing in L, in (0, 1].
double transmittance(double length_km, const QkdParams& params);

/// Excess noise at channel output with n co-propagating classical WDM
/// channels: xi_0 + xi_r * n * p_opt. Non-decreasing in n.
double excess_noise(int n_active_channels, const QkdParams& params);

/// Von Neumann entropy of a thermal state with symplectic eigenvalue x >= 1:
///   g(x) = ((x+1)/2) log2((x+1)/2) - ((x-1)/2) log2((x-1)/2).
/// g(1) = 0. Values within 1e-9 below 1 are clamped; anything lower throws
/// std::domain_error (it signals a broken covariance computation upstream).
double entropy_g(double x);

/// Asymptotic secret fraction max(0, beta * I_AB - chi_EB) in bits/symbol for
/// a Gaussian-modulated coherent-state protocol with modulation variance
/// v_mod, untrusted excess noise xi at channel output and an ideal receiver.
double secret_fraction(double t, double xi, double v_mod, const QkdParams& params);

/// Maximizes the secret fraction over the modulation variance. Deterministic:
/// identical inputs give bit-identical results.
KeyRateResult optimal_secret_fraction(double t, double xi, const QkdParams& params);

/// Secure-key capacity f_sym * r* of a fiber link of the given length with n
/// active classical WDM channels. Non-increasing in both arguments.
double link_key_capacity(double length_km, int n_active_channels, const QkdParams& params);

// Extended-precision core. The planners compare key capacities against
// carried traffic on links that are loaded exactly to capacity; with plain
// doubles the capacity drop caused by Raman efficiencies below ~1e-13 SNU/W
// falls under 1 ulp of r and the comparison ties. The long double path keeps
// those perturbations strictly ordered down to ~1e-17 SNU/W.
namespace keyrate {

inline constexpr double kVModMin = 0.01;   // SNU
inline constexpr double kVModMax = 100.0;  // SNU
// Tight enough that optimizer jitter (~|r''| * tol^2) stays far below the
// capacity drop caused by one WDM channel at the smallest Raman efficiency
// the feasibility comparisons must resolve (xi_r ~ 1e-15 SNU/W).
inline constexpr double kVModTol = 1e-8;

long double transmittance_l(long double length_km, const QkdParams& params);
long double excess_noise_l(long double n_active_channels, const QkdParams& params);
long double entropy_g_l(long double x);

// Unclamped beta * I_AB - chi_EB; negative values mean zero key.
long double secret_fraction_raw_l(long double t, long double xi, long double v_mod,
                                  double beta, int mu);

struct OptimumL {
  long double r;      // clamped at 0
  long double v_mod;  // argmax of the raw objective
};
OptimumL optimal_secret_fraction_l(long double t, long double xi, const QkdParams& params);

long double link_key_capacity_l(long double length_km, long double n_active_channels,
                                const QkdParams& params);

}  // namespace keyrate

}  // namespace qcoex
