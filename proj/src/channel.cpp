#include "bdris/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "bdris/specfun.hpp"

namespace bdris::channel {

cvec sample_rician(double kappa, int n, std::mt19937_64& rng) {
    if (kappa < 0.0) throw std::invalid_argument("kappa must be >= 0");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const double los = std::sqrt(kappa / (kappa + 1.0));
    const double sigma = std::sqrt(0.5 / (kappa + 1.0));
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::normal_distribution<double> normal(0.0, 1.0);
    cvec out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double ph = phase(rng);
        out.emplace_back(los * std::cos(ph) + sigma * normal(rng),
                         los * std::sin(ph) + sigma * normal(rng));
    }
    return out;
}

AmplitudeMoments rician_amplitude_moments(double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("kappa must be >= 0");
    const double mean = std::sqrt(M_PI / (4.0 * (kappa + 1.0))) *
                        specfun::laguerre_half(-kappa);
    return {mean, 1.0 - mean * mean};
}

PhaseConfig build_ts_phase_config(const cvec& h, const cvec& g,
                                  int active_sector, int sectors) {
    if (h.size() != g.size()) throw std::invalid_argument("length mismatch");
    if (sectors < 1) throw std::invalid_argument("sectors must be >= 1");
    if (active_sector < 0 || active_sector >= sectors) {
        throw std::out_of_range("active_sector out of range");
    }
    PhaseConfig cfg;
    cfg.active_sector = active_sector;
    cfg.sector_coeffs.assign(static_cast<std::size_t>(sectors),
                             cvec(h.size(), {0.0, 0.0}));
    cvec& active = cfg.sector_coeffs[static_cast<std::size_t>(active_sector)];
    for (std::size_t m = 0; m < h.size(); ++m) {
        const double ang = std::arg(h[m] * g[m]);
        active[m] = std::polar(1.0, -ang);
    }
    return cfg;
}

double cascaded_gain(const cvec& h, const cvec& g) {
    if (h.size() != g.size()) throw std::invalid_argument("length mismatch");
    double y = 0.0;
    for (std::size_t m = 0; m < h.size(); ++m) {
        y += std::abs(h[m]) * std::abs(g[m]);
    }
    return y;
}

double configured_gain(const ChannelDraw& draw, const PhaseConfig& cfg) {
    const cvec& phi =
        cfg.sector_coeffs.at(static_cast<std::size_t>(cfg.active_sector));
    if (draw.h.size() != phi.size() || draw.g.size() != phi.size()) {
        throw std::invalid_argument("length mismatch");
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < phi.size(); ++m) {
        acc += draw.h[m] * phi[m] * draw.g[m];
    }
    return std::abs(acc);
}

}  // namespace bdris::channel
