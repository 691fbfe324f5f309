#ifndef SCHEDCP_CHANNEL_HPP_
#define SCHEDCP_CHANNEL_HPP_

#include <complex>
#include <span>

#include "schedcp/rng.hpp"

namespace schedcp::channel {

inline constexpr double kSpeedOfLightMps = 299792458.0;
// WINNER+ B1 LOS is calibrated down to a few meters; closer ranges are clamped.
inline constexpr double kMinPathLossDistM = 3.0;

struct ChannelParams {
  double carrier_freq_hz = 5.9e9;
  double bandwidth_hz = 300e3;
  double tx_power_dbm = 23.0;
  double noise_psd_dbm_hz = -174.0;
  double noise_figure_db = 9.0;
  double antenna_gain_dbi = 3.0;  // applied at both TX and RX
  double subslot_duration_s = 1e-3;
  int subslots_per_slot = 5;
  int grid_payload_bits = 512;
  double shadow_sigma_db = 3.0;
  double decorrelation_dist_m = 10.0;

  void validate() const;  // throws std::invalid_argument
};

// Per-link state: large-scale power gain (path loss + shadowing, linear),
// first-order-Markov small-scale coefficient and its correlation.
struct LinkChannel {
  double alpha_linear = 1.0;
  double shadow_db = 0.0;
  std::complex<double> h{1.0, 0.0};
  double mu = 1.0;
  double rel_speed_mps = 0.0;

  double gain_linear() const { return alpha_linear * std::norm(h); }
};

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watt(double dbm);

// WINNER+ B1 LOS (Manhattan) path loss; distance clamped at kMinPathLossDistM.
double path_loss_db(double distance_m, double carrier_freq_hz);

// Gudmundson exponentially correlated log-normal shadowing update.
double shadowing_step(double prev_shadow_db, double moved_dist_m, double sigma_db,
                      double d_corr_m, Rng& rng);

// Bessel function of the first kind, order zero; |error| < 1e-8 over the
// arguments reachable here (power series below 12, Hankel expansion above).
double bessel_j0(double x);

// Small-scale correlation between adjacent sub-slots (Jakes/Clarke model).
double fading_correlation(double v_rel_mps, double carrier_freq_hz, double subslot_s);

// One step of the first-order Markov fading chain: h' = mu*h + e,
// e ~ CN(0, 1 - mu^2). Stationary with E[|h|^2] = 1 when started at CN(0,1).
std::complex<double> fading_step(std::complex<double> h_prev, double mu, Rng& rng);

// Shannon rate of one link. gain_linear carries path loss, shadowing and
// |h|^2; transmit power, both antenna gains and the receiver noise figure
// come from params.
double instantaneous_rate_bps(const ChannelParams& params, double gain_linear);

// Transmittable grid count for one scheduling slot: fractional bits
// accumulate across sub-slots and are floored once.
long long grid_budget(std::span<const double> rates_bps, double subslot_s,
                      int payload_bits);

// Fresh link: alpha from distance + a new shadowing draw, h ~ CN(0,1),
// mu from the relative speed.
LinkChannel make_link(const ChannelParams& params, double distance_m,
                      double rel_speed_mps, Rng& rng);

}  // namespace schedcp::channel

#endif  // SCHEDCP_CHANNEL_HPP_
