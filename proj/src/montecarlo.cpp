#include "bdris/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "bdris/gammastats.hpp"
#include "bdris/metrics.hpp"

namespace bdris::mc {

namespace {

constexpr std::int64_t kBlock = 8192;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Marsaglia polar normals, two at a time.
class NormalSource {
  public:
    explicit NormalSource(std::uint64_t key) : eng_(splitmix64(key)) {}

    void pair(double& n1, double& n2) {
        double u, v, s;
        do {
            u = uniform_pm1();
            v = uniform_pm1();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double r = std::sqrt(-2.0 * std::log(s) / s);
        n1 = u * r;
        n2 = v * r;
    }

  private:
    double uniform_pm1() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-52 - 1.0;
    }
    std::mt19937_64 eng_;
};

struct RicianShape {
    double los;    // sqrt(kappa / (kappa + 1))
    double sigma;  // sqrt(1 / (2 (kappa + 1))) per real dimension
};

RicianShape rician_shape(double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("Rician factor must be >= 0");
    return {std::sqrt(kappa / (kappa + 1.0)),
            std::sqrt(0.5 / (kappa + 1.0))};
}

}  // namespace

std::vector<double> sample_combined_gain(double kappa_h, double kappa_g,
                                         int elements_per_sector,
                                         std::uint64_t seed,
                                         std::int64_t trials) {
    if (elements_per_sector <= 0) {
        throw std::invalid_argument("elements_per_sector must be >= 1");
    }
    if (trials <= 0) throw std::invalid_argument("trials must be >= 1");
    const RicianShape h = rician_shape(kappa_h);
    const RicianShape g = rician_shape(kappa_g);
    std::vector<double> out(static_cast<std::size_t>(trials));
    const std::int64_t blocks = (trials + kBlock - 1) / kBlock;
    for (std::int64_t b = 0; b < blocks; ++b) {
        NormalSource rng(seed * 0x2545F4914F6CDD1DULL + static_cast<std::uint64_t>(b));
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(trials, lo + kBlock);
        for (std::int64_t t = lo; t < hi; ++t) {
            double y = 0.0;
            for (int m = 0; m < elements_per_sector; ++m) {
                double n1, n2, n3, n4;
                rng.pair(n1, n2);
                rng.pair(n3, n4);
                const double re_h = h.los + h.sigma * n1;
                const double im_h = h.sigma * n2;
                const double re_g = g.los + g.sigma * n3;
                const double im_g = g.sigma * n4;
                y += std::sqrt((re_h * re_h + im_h * im_h) *
                               (re_g * re_g + im_g * im_g));
            }
            out[static_cast<std::size_t>(t)] = y;
        }
    }
    return out;
}

std::vector<double> draw_snr_samples(const SystemConfig& cfg, double tx_power_w,
                                     std::uint64_t seed, std::int64_t trials) {
    auto gains = sample_combined_gain(cfg.kappa_h, cfg.kappa_g,
                                      cfg.elements_per_sector(), seed, trials);
    const double rho_a = tx_power_w / cfg.noise_w() * path_gain(cfg);
    for (double& y : gains) y = rho_a * y * y;
    return gains;
}

bool tail_unreliable(const Estimate& e) {
    return e.value * static_cast<double>(e.trials) < 20.0;
}

Estimate outage_from_gains(const std::vector<double>& gains,
                           const SystemConfig& cfg, double tx_power_w,
                           std::uint64_t seed) {
    const double rho_a = tx_power_w / cfg.noise_w() * path_gain(cfg);
    const double y_thresh = std::sqrt(metrics::outage_threshold(cfg) / rho_a);
    std::int64_t hits = 0;
    for (double y : gains) hits += (y < y_thresh);
    const double n = static_cast<double>(gains.size());
    const double p = hits / n;
    return {p, std::sqrt(p * (1.0 - p) / n), static_cast<std::int64_t>(gains.size()),
            seed};
}

Estimate sep_bpsk_from_gains(const std::vector<double>& gains,
                             const SystemConfig& cfg, double tx_power_w,
                             std::uint64_t seed) {
    const double rho_a = tx_power_w / cfg.noise_w() * path_gain(cfg);
    const double scale = std::sqrt(rho_a);
    double sum = 0.0, sumsq = 0.0;
    for (double y : gains) {
        const double q = 0.5 * std::erfc(scale * y);
        sum += q;
        sumsq += q * q;
    }
    const double n = static_cast<double>(gains.size());
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    return {mean, std::sqrt(var / n), static_cast<std::int64_t>(gains.size()), seed};
}

Estimate se_from_gains(const std::vector<double>& gains,
                       const SystemConfig& cfg, double tx_power_w,
                       std::uint64_t seed) {
    const double rho_a = tx_power_w / cfg.noise_w() * path_gain(cfg);
    double sum = 0.0, sumsq = 0.0;
    for (double y : gains) {
        const double r = std::log2(1.0 + rho_a * y * y);
        sum += r;
        sumsq += r * r;
    }
    const double n = static_cast<double>(gains.size());
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    return {mean, std::sqrt(var / n), static_cast<std::int64_t>(gains.size()), seed};
}

Estimate outage(const SystemConfig& cfg, double tx_power_w, std::uint64_t seed,
                std::int64_t trials) {
    const auto gains = sample_combined_gain(cfg.kappa_h, cfg.kappa_g,
                                            cfg.elements_per_sector(), seed,
                                            trials);
    return outage_from_gains(gains, cfg, tx_power_w, seed);
}

Estimate sep_bpsk(const SystemConfig& cfg, double tx_power_w,
                  std::uint64_t seed, std::int64_t trials) {
    const auto gains = sample_combined_gain(cfg.kappa_h, cfg.kappa_g,
                                            cfg.elements_per_sector(), seed,
                                            trials);
    return sep_bpsk_from_gains(gains, cfg, tx_power_w, seed);
}

Estimate se(const SystemConfig& cfg, double tx_power_w, std::uint64_t seed,
            std::int64_t trials) {
    const auto gains = sample_combined_gain(cfg.kappa_h, cfg.kappa_g,
                                            cfg.elements_per_sector(), seed,
                                            trials);
    return se_from_gains(gains, cfg, tx_power_w, seed);
}

double snr_cdf_sup_distance(const SystemConfig& cfg, double tx_power_w,
                            std::uint64_t seed, std::int64_t trials) {
    auto gains = sample_combined_gain(cfg.kappa_h, cfg.kappa_g,
                                      cfg.elements_per_sector(), seed, trials);
    std::sort(gains.begin(), gains.end());
    const stats::GammaDist snr = stats::snr_dist(cfg, tx_power_w);
    const double rho_a = tx_power_w / cfg.noise_w() * path_gain(cfg);
    const double n = static_cast<double>(gains.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        const double f = snr.cdf(rho_a * gains[i] * gains[i]);
        sup = std::max(sup, std::fabs(f - i / n));
        sup = std::max(sup, std::fabs((i + 1) / n - f));
    }
    return sup;
}

}  // namespace bdris::mc
