#pragma once

// Small-scale channel model and the per-slot surface configuration.
// These are the structural pieces the fast Monte Carlo path shortcuts
// past (it samples amplitudes directly); kept exact and explicit here so
// the shortcut can be checked against them.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace bdris::channel {

using cvec = std::vector<std::complex<double>>;

struct ChannelDraw {
    cvec h;  // BS -> surface
    cvec g;  // surface -> user
};

/// Per-sector diagonal coefficients; only the active sector carries
/// nonzero amplitudes under time switching.
struct PhaseConfig {
    std::vector<cvec> sector_coeffs;  // L vectors of length M
    int active_sector = 0;
};

/// Unit-second-moment Rician samples:
/// sqrt(kappa/(kappa+1)) e^{j U(0,2pi)} + sqrt(1/(kappa+1)) CN(0,1).
cvec sample_rician(double kappa, int n, std::mt19937_64& rng);

struct AmplitudeMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// E|h| = sqrt(pi/(4(kappa+1))) L_{1/2}(-kappa); variance completes the
/// unit second moment.
AmplitudeMoments rician_amplitude_moments(double kappa);

/// Time-switching configuration: the active sector co-phases each
/// element against its cascaded channel, phi_m = e^{-j arg(h_m g_m)}
/// at unit amplitude; every other sector is zeroed.
PhaseConfig build_ts_phase_config(const cvec& h, const cvec& g,
                                  int active_sector, int sectors);

/// Combined gain after ideal co-phasing: sum_m |h_m||g_m|.
double cascaded_gain(const cvec& h, const cvec& g);

/// |sum_m h_m phi_m g_m| for the active sector of a configuration;
/// equals cascaded_gain when the configuration came from
/// build_ts_phase_config.
double configured_gain(const ChannelDraw& draw, const PhaseConfig& cfg);

}  // namespace bdris::channel
