#include "schedcp/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schedcp::channel {

void ChannelParams::validate() const {
  if (!(bandwidth_hz > 0)) throw std::invalid_argument("channel: bandwidth_hz must be > 0");
  if (subslots_per_slot < 1) throw std::invalid_argument("channel: subslots_per_slot must be >= 1");
  if (grid_payload_bits <= 0) throw std::invalid_argument("channel: grid_payload_bits must be > 0");
  if (!(subslot_duration_s > 0)) throw std::invalid_argument("channel: subslot_duration_s must be > 0");
  if (!(carrier_freq_hz > 0)) throw std::invalid_argument("channel: carrier_freq_hz must be > 0");
  if (shadow_sigma_db < 0) throw std::invalid_argument("channel: shadow_sigma_db must be >= 0");
  if (!(decorrelation_dist_m > 0)) throw std::invalid_argument("channel: decorrelation_dist_m must be > 0");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double path_loss_db(double distance_m, double carrier_freq_hz) {
  const double d = std::max(distance_m, kMinPathLossDistM);
  return 22.7 * std::log10(d) + 41.0 + 20.0 * std::log10(carrier_freq_hz / 5e9);
}

double shadowing_step(double prev_shadow_db, double moved_dist_m, double sigma_db,
                      double d_corr_m, Rng& rng) {
  const double rho = std::exp(-std::max(moved_dist_m, 0.0) / d_corr_m);
  const double innovation_std = sigma_db * std::sqrt(std::max(0.0, 1.0 - rho * rho));
  return rho * prev_shadow_db + rng.normal(0.0, innovation_std);
}

double bessel_j0(double x) {
  x = std::fabs(x);
  if (x < 14.0) {
    // Power series: J0(x) = sum_k (-1)^k (x^2/4)^k / (k!)^2.
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 80; ++k) {
      term *= -q / (static_cast<double>(k) * k);
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  // Hankel asymptotic expansion; with three terms each the truncation error
  // is below 1e-8 for x >= 14.
  const double u = 1.0 / x;
  const double u2 = u * u;
  const double p = 1.0 + u2 * (-9.0 / 128.0 + u2 * (3675.0 / 32768.0 - u2 * (2401245.0 / 4194304.0)));
  const double q = u * (-1.0 / 8.0 + u2 * (75.0 / 1024.0 - u2 * (59535.0 / 262144.0)));
  const double chi = x - 0.78539816339744830962;  // x - pi/4
  return std::sqrt(2.0 / (3.14159265358979323846 * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double fading_correlation(double v_rel_mps, double carrier_freq_hz, double subslot_s) {
  const double arg =
      2.0 * 3.14159265358979323846 * std::max(v_rel_mps, 0.0) * carrier_freq_hz * subslot_s /
      kSpeedOfLightMps;
  return bessel_j0(arg);
}

std::complex<double> fading_step(std::complex<double> h_prev, double mu, Rng& rng) {
  const double innovation_var = std::max(0.0, 1.0 - mu * mu);
  if (innovation_var == 0.0) return mu * h_prev;
  return mu * h_prev + rng.complex_normal(innovation_var);
}

double instantaneous_rate_bps(const ChannelParams& params, double gain_linear) {
  if (!(params.bandwidth_hz > 0) || !(gain_linear > 0)) return 0.0;
  const double tx_w = dbm_to_watt(params.tx_power_dbm);
  const double ant = db_to_linear(2.0 * params.antenna_gain_dbi);
  const double noise_w = dbm_to_watt(params.noise_psd_dbm_hz) * params.bandwidth_hz *
                         db_to_linear(params.noise_figure_db);
  const double snr = tx_w * ant * gain_linear / noise_w;
  return params.bandwidth_hz * std::log2(1.0 + snr);
}

long long grid_budget(std::span<const double> rates_bps, double subslot_s,
                      int payload_bits) {
  double bits = 0.0;
  for (double r : rates_bps) bits += std::max(r, 0.0) * subslot_s;
  return static_cast<long long>(std::floor(bits / static_cast<double>(payload_bits)));
}

LinkChannel make_link(const ChannelParams& params, double distance_m,
                      double rel_speed_mps, Rng& rng) {
  LinkChannel link;
  link.shadow_db = rng.normal(0.0, params.shadow_sigma_db);
  link.alpha_linear =
      db_to_linear(-path_loss_db(distance_m, params.carrier_freq_hz) - link.shadow_db);
  link.h = rng.complex_normal(1.0);
  link.rel_speed_mps = rel_speed_mps;
  link.mu = fading_correlation(rel_speed_mps, params.carrier_freq_hz, params.subslot_duration_s);
  return link;
}

}  // namespace schedcp::channel
