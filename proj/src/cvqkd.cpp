#include "qcoex/cvqkd.hpp"

#include <cmath>
#include <string>

namespace qcoex {

namespace {

constexpr long double kEigTolerance = 1e-9L;

[[noreturn]] void bad_input(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

void QkdParams::validate() const {
  if (!(f_sym > 0)) bad_input("f_sym: must be > 0");
  if (!(beta > 0) || beta > 1) bad_input("beta: must be in (0, 1]");
  if (mu != 1 && mu != 2) bad_input("mu: must be 1 (homodyne) or 2 (heterodyne)");
  if (!(xi_0 >= 0)) bad_input("xi_0: must be >= 0");
  if (!(xi_r >= 0)) bad_input("xi_r: must be >= 0");
  if (!(p_opt_w >= 0)) bad_input("p_opt_w: must be >= 0");
  if (!(alpha_0_db >= 0)) bad_input("alpha_0_db: must be >= 0");
  if (!(alpha_l_db_per_km >= 0)) bad_input("alpha_l_db_per_km: must be >= 0");
}

namespace keyrate {

long double transmittance_l(long double length_km, const QkdParams& params) {
  if (!(length_km >= 0)) bad_input("length_km: must be >= 0");
  const long double alpha_db =
      static_cast<long double>(params.alpha_0_db) +
      static_cast<long double>(params.alpha_l_db_per_km) * length_km;
  return powl(10.0L, -alpha_db / 10.0L);
}

long double excess_noise_l(long double n_active_channels, const QkdParams& params) {
  if (!(n_active_channels >= 0)) bad_input("n_active_channels: must be >= 0");
  return static_cast<long double>(params.xi_0) +
         static_cast<long double>(params.xi_r) * n_active_channels *
             static_cast<long double>(params.p_opt_w);
}

long double entropy_g_l(long double x) {
  if (x < 1.0L) {
    if (x < 1.0L - kEigTolerance)
      throw std::domain_error("entropy_g: symplectic eigenvalue below 1");
    x = 1.0L;
  }
  const long double u = (x + 1.0L) / 2.0L;
  const long double v = (x - 1.0L) / 2.0L;
  long double s = u * log2l(u);
  if (v > 0.0L) s -= v * log2l(v);
  return s;
}

long double secret_fraction_raw_l(long double t, long double xi, long double v_mod,
                                  double beta, int mu) {
  // Two-mode covariance of the entanglement-based equivalent state after the
  // channel: Alice variance a, Bob variance b, correlation c, with V the
  // total modulation variance (signal + shot noise unit).
  const long double V = v_mod + 1.0L;
  const long double a = V;
  const long double b = t * (V - 1.0L) + 1.0L + xi;
  const long double c = sqrtl(t * (V * V - 1.0L));

  // Joint symplectic eigenvalues from Delta = a^2 + b^2 - 2c^2, D = ab - c^2.
  const long double delta = a * a + b * b - 2.0L * c * c;
  const long double d = a * b - c * c;
  long double disc = delta * delta - 4.0L * d * d;
  if (disc < 0.0L) disc = 0.0L;  // rounding slack near degenerate spectra
  const long double root = sqrtl(disc);
  const long double nu1 = sqrtl((delta + root) / 2.0L);
  const long double nu2 = sqrtl((delta - root) / 2.0L);

  // Conditional eigenvalue after Bob's measurement, ideal receiver.
  long double nu3;
  if (mu == 2) {
    nu3 = a - c * c / (b + 1.0L);
  } else {
    nu3 = sqrtl(a * (a - c * c / b));
  }

  const long double chi = entropy_g_l(nu1) + entropy_g_l(nu2) - entropy_g_l(nu3);
  const long double mul = static_cast<long double>(mu);
  const long double i_ab = (mul / 2.0L) * log2l(1.0L + t * v_mod / (mul + xi));
  return static_cast<long double>(beta) * i_ab - chi;
}

OptimumL optimal_secret_fraction_l(long double t, long double xi, const QkdParams& params) {
  if (!(t > 0) || t > 1) bad_input("t: must be in (0, 1]");
  if (!(xi >= 0)) bad_input("xi: must be >= 0");

  const double beta = params.beta;
  const int mu = params.mu;
  auto f = [&](long double v) { return secret_fraction_raw_l(t, xi, v, beta, mu); };

  // Golden-section search on the raw (unclamped) objective, which is unimodal
  // in v_mod for this model family. Fixed tolerance keeps it deterministic.
  constexpr long double invphi = 0.6180339887498948482L;
  long double lo = kVModMin, hi = kVModMax;
  long double x1 = hi - invphi * (hi - lo);
  long double x2 = lo + invphi * (hi - lo);
  long double f1 = f(x1), f2 = f(x2);
  while (hi - lo > kVModTol) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    }
  }
  const long double v_opt = (lo + hi) / 2.0L;
  long double r = f(v_opt);
  if (r < 0.0L) r = 0.0L;
  return {r, v_opt};
}

long double link_key_capacity_l(long double length_km, long double n_active_channels,
                                const QkdParams& params) {
  const long double t = transmittance_l(length_km, params);
  const long double xi = excess_noise_l(n_active_channels, params);
  return static_cast<long double>(params.f_sym) * optimal_secret_fraction_l(t, xi, params).r;
}

}  // namespace keyrate

double transmittance(double length_km, const QkdParams& params) {
  return static_cast<double>(keyrate::transmittance_l(length_km, params));
}

double excess_noise(int n_active_channels, const QkdParams& params) {
  return static_cast<double>(keyrate::excess_noise_l(n_active_channels, params));
}

double entropy_g(double x) { return static_cast<double>(keyrate::entropy_g_l(x)); }

double secret_fraction(double t, double xi, double v_mod, const QkdParams& params) {
  if (!(t > 0) || t > 1) bad_input("t: must be in (0, 1]");
  if (!(xi >= 0)) bad_input("xi: must be >= 0");
  if (!(v_mod > 0)) bad_input("v_mod: must be > 0");
  const long double r = keyrate::secret_fraction_raw_l(t, xi, v_mod, params.beta, params.mu);
  return r > 0.0L ? static_cast<double>(r) : 0.0;
}

KeyRateResult optimal_secret_fraction(double t, double xi, const QkdParams& params) {
  const auto opt = keyrate::optimal_secret_fraction_l(t, xi, params);
  KeyRateResult out;
  out.r = static_cast<double>(opt.r);
  out.v_mod_opt = static_cast<double>(opt.v_mod);
  out.key_rate_bps = params.f_sym * out.r;
  out.t = t;
  out.xi = xi;
  return out;
}

double link_key_capacity(double length_km, int n_active_channels, const QkdParams& params) {
  return static_cast<double>(keyrate::link_key_capacity_l(length_km, n_active_channels, params));
}

}  // namespace qcoex
