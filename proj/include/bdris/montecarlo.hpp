#pragma once

// Monte Carlo reference for the analytic chain. Samples the physical
// channel (per-element doubly-Rician amplitude products, ideal
// co-phasing) rather than the fitted gamma law, so it checks the model
// end to end.
//
// Reproducibility: trials are generated in fixed-size blocks, each block
// on its own generator keyed by (seed, block index). Results therefore
// do not depend on how work is scheduled, only on (seed, trials).

#include <cstdint>
#include <vector>

#include "bdris/system.hpp"

namespace bdris::mc {

struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

/// One combined-gain draw per trial: Y = sum_m |h_m||g_m| with both hops
/// unit-power Rician. The sample only depends on (kappa_h, kappa_g,
/// elements_per_sector, seed, trials): sweeps that vary geometry or
/// sector count can reuse it.
std::vector<double> sample_combined_gain(double kappa_h, double kappa_g,
                                         int elements_per_sector,
                                         std::uint64_t seed,
                                         std::int64_t trials);

/// SNR draws rho * alpha * Y^2 at a given transmit power.
std::vector<double> draw_snr_samples(const SystemConfig& cfg, double tx_power_w,
                                     std::uint64_t seed, std::int64_t trials);

/// True when too few effective tail events back the estimate for the
/// reported stderr to mean much (expected count below 20).
bool tail_unreliable(const Estimate& e);

/// Estimators over precomputed gain samples at a given transmit power.
/// Binomial standard error for outage; sample standard error otherwise.
Estimate outage_from_gains(const std::vector<double>& gains,
                           const SystemConfig& cfg, double tx_power_w,
                           std::uint64_t seed);
/// Semi-analytic BPSK SEP: averages Q(sqrt(2 rho alpha Y^2)) over the
/// gain draws, removing the noise dimension from the estimator variance.
Estimate sep_bpsk_from_gains(const std::vector<double>& gains,
                             const SystemConfig& cfg, double tx_power_w,
                             std::uint64_t seed);
Estimate se_from_gains(const std::vector<double>& gains,
                       const SystemConfig& cfg, double tx_power_w,
                       std::uint64_t seed);

/// Convenience wrappers: sample then estimate.
Estimate outage(const SystemConfig& cfg, double tx_power_w, std::uint64_t seed,
                std::int64_t trials);
Estimate sep_bpsk(const SystemConfig& cfg, double tx_power_w,
                  std::uint64_t seed, std::int64_t trials);
Estimate se(const SystemConfig& cfg, double tx_power_w, std::uint64_t seed,
            std::int64_t trials);

/// Sup distance between the empirical CDF of rho*alpha*Y^2 draws and the
/// matched gamma SNR law (two-sided Kolmogorov statistic).
double snr_cdf_sup_distance(const SystemConfig& cfg, double tx_power_w,
                            std::uint64_t seed, std::int64_t trials);

}  // namespace bdris::mc
