#include "bdris/system.hpp"

#include <cmath>
#include <stdexcept>

namespace bdris {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
}

double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double watt_to_dbm(double w) {
    if (!(w > 0.0)) throw std::domain_error("watt_to_dbm: power must be > 0");
    return 10.0 * std::log10(w * 1e3);
}

double SystemConfig::noise_w() const { return dbm_to_watt(noise_dbm); }

void SystemConfig::validate() const {
    elements_per_sector();  // checks sectors and divisibility
    if (kappa_h < 0.0 || kappa_g < 0.0) {
        throw std::invalid_argument("Rician factors must be >= 0");
    }
    if (!(dist_ris_m > 0.0) || !(dist_user_m > 0.0)) {
        throw std::invalid_argument("distances must be > 0");
    }
    if (!(freq_hz > 0.0) || !(bandwidth_hz > 0.0)) {
        throw std::invalid_argument("frequency and bandwidth must be > 0");
    }
    if (!(gain_tx > 0.0) || !(gain_rx > 0.0)) {
        throw std::invalid_argument("antenna gains must be > 0");
    }
    if (users <= 0) throw std::invalid_argument("users must be >= 1");
    if (rate_bpcu < 0.0) throw std::invalid_argument("rate_bpcu must be >= 0");
    if (!(amp_efficiency > 0.0) || amp_efficiency > 1.0) {
        throw std::invalid_argument("amp_efficiency must be in (0, 1]");
    }
    if (p_ue_w < 0.0 || p_bs_w < 0.0 || p_switch_w < 0.0 || p_element_w < 0.0) {
        throw std::invalid_argument("power model terms must be >= 0");
    }
}

double path_gain(const SystemConfig& cfg) {
    cfg.validate();
    const double lambda = kSpeedOfLight / cfg.freq_hz;
    const double aperture = 1.0 - std::cos(M_PI / cfg.sectors);
    const double num =
        lambda * lambda * lambda * lambda * cfg.gain_tx * cfg.gain_rx;
    const double den = 64.0 * std::pow(M_PI, 4) *
                       std::pow(cfg.dist_ris_m, cfg.eta_ris) *
                       std::pow(cfg.dist_user_m, cfg.eta_user) * aperture *
                       aperture;
    return num / den;
}

}  // namespace bdris
