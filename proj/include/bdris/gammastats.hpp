#pragma once

// Moment-matched gamma description of the combined channel.
//
// With ideal per-element co-phasing the per-sector gain is
// Y = sum_m |h_m||g_m| over M independent doubly-Rician products.
// Y is fitted to Gamma(k, theta) from its first two moments; the
// received SNR is proportional to Y^2, whose moments under the fitted
// law give a second gamma fit Gamma(k2, theta2). Scaling by rho * alpha
// (transmit SNR times path gain) yields the SNR distribution.

#include "bdris/system.hpp"

namespace bdris::stats {

struct GammaDist {
    double shape = 0.0;
    double scale = 0.0;

    double mean() const { return shape * scale; }
    double variance() const { return shape * scale * scale; }
    double pdf(double x) const;
    double cdf(double x) const;
    double log_cdf(double x) const;
    /// E[exp(s X)] for s < 1/scale.
    double mgf(double s) const;
};

/// Mean of one product term |h||g|, unit-power Rician hops with factors
/// kappa_h, kappa_g:
///   E = pi L(kh) L(kg) / (4 sqrt((kh+1)(kg+1))), L(k) = L_{1/2}(-k).
double product_term_mean(double kappa_h, double kappa_g);

/// First two moments of Y for M element products per sector.
struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};
Moments combined_gain_moments(int elements_per_sector, double kappa_h,
                              double kappa_g);

/// Two-moment gamma fit: shape = mean^2/var, scale = var/mean. Rejects
/// the near-degenerate regime var < 1e-12 mean^2 (pure-LoS limit) where
/// every downstream formula divides by the variance.
GammaDist fit_gamma(double mean, double variance);

/// Gamma fit to Y.
GammaDist combined_gain_dist(int elements_per_sector, double kappa_h,
                             double kappa_g);

/// Gamma fit to Y^2 induced by the fit to Y:
///   E[Y^2]   = k(k+1) theta^2
///   Var[Y^2] = k(k+1)(4k+6) theta^4.
GammaDist squared_gain_dist(const GammaDist& y);

/// SNR distribution at transmit power p_w: squared-gain fit scaled by
/// rho * alpha with rho = p_w / noise power.
GammaDist snr_dist(const SystemConfig& cfg, double tx_power_w);

}  // namespace bdris::stats
