#pragma once

// Closed-form link metrics on top of the matched-gamma SNR law, plus the
// bisection solvers the CLI exposes (power for a target metric, element
// count for a target outage).

#include "bdris/gammastats.hpp"
#include "bdris/system.hpp"

namespace bdris::metrics {

/// SNR threshold for the per-user rate target: 2^(K R) - 1. Each user
/// holds the channel 1/K of the time, so the slot rate must be K R.
double outage_threshold(const SystemConfig& cfg);

/// P(SNR < threshold) under the matched gamma law.
double outage(const SystemConfig& cfg, double tx_power_w);

/// Natural log of the exact outage; stays finite deep in the tail where
/// the probability underflows.
double log_outage(const SystemConfig& cfg, double tx_power_w);

/// High-SNR power law (psi / (rho alpha theta))^k / Gamma(k+1), as log.
double log_outage_asymptotic(const SystemConfig& cfg, double tx_power_w);
double outage_asymptotic(const SystemConfig& cfg, double tx_power_w);

/// High-SNR log-log slope of outage and SEP: the shape of the squared
/// combined gain fit.
double diversity_order(const SystemConfig& cfg);

/// Average BPSK symbol error probability, closed form:
///   s/(2 sqrt(pi)) ... 2F1(1, k+1/2; k+1; 1/(1+x)), x = rho alpha theta.
double sep_bpsk(const SystemConfig& cfg, double tx_power_w);
double log_sep_bpsk(const SystemConfig& cfg, double tx_power_w);

/// High-SNR SEP power law, shared diversity order with outage.
double log_sep_asymptotic(const SystemConfig& cfg, double tx_power_w);
double sep_asymptotic(const SystemConfig& cfg, double tx_power_w);

/// Average M-PSK symbol error probability by integrating the SNR MGF
/// over the decision angle. mod_order >= 2; mod_order 2 reproduces
/// sep_bpsk by quadrature.
double sep_mpsk(const SystemConfig& cfg, double tx_power_w, int mod_order);

/// Jensen-bound spectral efficiency log2(1 + E[SNR]) averaged per user;
/// with symmetric users the K-fold time sharing cancels.
double se_jensen(const SystemConfig& cfg, double tx_power_w);

/// Same bound written against the total element count Z = L M:
///   log2(1 + rho alpha' [ (Z/L)^2 Omega + (Z/L)(1 - Omega) ])
/// with the aperture factor kept inside alpha'. Algebraically equal to
/// se_jensen; kept separate as an identity check surface.
double se_jensen_sectorized(const SystemConfig& cfg, double tx_power_w);

/// E[log2(1 + SNR)] under the matched gamma law, by quadrature. This is
/// what a simulation of the fitted model converges to; the Jensen form
/// upper-bounds it.
double se_expected(const SystemConfig& cfg, double tx_power_w);

/// Total consumed power: K (p/nu + P_UE) + P_BS + Z P_e + P_sw.
/// One sector is live per slot and the L-sector hardware cycles through
/// all Z phase shifters over a service round.
double total_power_w(const SystemConfig& cfg, double tx_power_w);

/// Bandwidth * SE / total power, bits per joule.
double energy_efficiency(const SystemConfig& cfg, double tx_power_w);

/// Transmit power (dBm) at which a monotone metric crosses a target.
/// Bisection on [-80, 90] dBm; throws std::runtime_error if the target
/// is not bracketed.
double solve_power_for_outage_dbm(const SystemConfig& cfg, double target);
double solve_power_for_sep_dbm(const SystemConfig& cfg, double target);
double solve_power_for_se_dbm(const SystemConfig& cfg, double target_bits);

/// Smallest total element count Z (multiple of L) with outage <= target
/// at the given transmit power. Throws if none exists below z_max.
int solve_elements_for_outage(const SystemConfig& cfg, double tx_power_w,
                              double target, int z_max = 10000);

}  // namespace bdris::metrics
