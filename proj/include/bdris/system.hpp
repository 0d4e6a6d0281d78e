#pragma once

// System-level description of the sectorized-surface downlink: geometry,
// fading, RF front end, and the power model used for energy efficiency.

#include <stdexcept>

namespace bdris {

struct SystemConfig {
    int sectors = 2;            // L, reflect/refract faces of the surface
    int elements_total = 120;   // Z = L * M across all sectors
    double kappa_h = 10.0;      // Rician K-factor, BS -> surface hop
    double kappa_g = 10.0;      // Rician K-factor, surface -> user hop
    double dist_ris_m = 100.0;  // BS to surface
    double dist_user_m = 30.0;  // surface to user
    double eta_ris = 2.0;       // path loss exponent, BS hop
    double eta_user = 2.0;      // path loss exponent, user hop
    double gain_tx = 1.0;       // linear antenna gains
    double gain_rx = 1.0;
    double freq_hz = 2.4e9;
    double bandwidth_hz = 10e6;
    double noise_dbm = -80.0;
    int users = 6;              // K, served by time switching
    double rate_bpcu = 0.25;    // per-user target rate R

    // Power model (watts).
    double p_ue_w = 0.01;
    double p_bs_w = 0.01;
    double p_switch_w = 0.01;
    double p_element_w = 0.0005;
    double amp_efficiency = 0.5;  // nu, drain efficiency of the PA

    int elements_per_sector() const {
        if (sectors < 2 || sectors > 64) {
            throw std::invalid_argument("sectors must be in [2, 64]");
        }
        if (elements_total <= 0 || elements_total % sectors != 0) {
            throw std::invalid_argument(
                "elements_total must be a positive multiple of sectors");
        }
        return elements_total / sectors;
    }

    double noise_w() const;

    void validate() const;
};

/// Composite two-hop path gain of one sector, Tx antenna to Rx antenna,
/// per unit element amplitude product. Includes the sector aperture
/// factor 1/(1 - cos(pi/L))^2.
double path_gain(const SystemConfig& cfg);

double dbm_to_watt(double dbm);
double watt_to_dbm(double w);

/// Convention used by the reference scenarios: strong line-of-sight
/// comes with a cleaner propagation environment. Never applied
/// implicitly; callers opt in.
inline double eta_preset_for_kappa(double kappa) { return 3.0 - kappa / 10.0; }

}  // namespace bdris
