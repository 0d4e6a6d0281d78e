#include "bdris/gammastats.hpp"

#include <cmath>
#include <stdexcept>

#include "bdris/specfun.hpp"

namespace bdris::stats {

double GammaDist::pdf(double x) const {
    if (x < 0.0) return 0.0;
    if (x == 0.0) return (shape < 1.0) ? HUGE_VAL : (shape == 1.0 ? 1.0 / scale : 0.0);
    const double lg = (shape - 1.0) * std::log(x) - x / scale -
                      specfun::ln_gamma(shape) - shape * std::log(scale);
    return std::exp(lg);
}

double GammaDist::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    return specfun::reg_lower_gamma(shape, x / scale);
}

double GammaDist::log_cdf(double x) const {
    if (x <= 0.0) return -HUGE_VAL;
    return specfun::ln_reg_lower_gamma(shape, x / scale);
}

double GammaDist::mgf(double s) const {
    if (!(s * scale < 1.0)) throw std::domain_error("GammaDist::mgf: s >= 1/scale");
    return std::exp(-shape * std::log1p(-s * scale));
}

double product_term_mean(double kappa_h, double kappa_g) {
    const double lh = specfun::laguerre_half(-kappa_h);
    const double lg = specfun::laguerre_half(-kappa_g);
    return M_PI * lh * lg / (4.0 * std::sqrt((kappa_h + 1.0) * (kappa_g + 1.0)));
}

Moments combined_gain_moments(int elements_per_sector, double kappa_h,
                              double kappa_g) {
    if (elements_per_sector <= 0) {
        throw std::invalid_argument("elements_per_sector must be >= 1");
    }
    const double m = elements_per_sector;
    const double mu1 = product_term_mean(kappa_h, kappa_g);
    // E[|h|^2] = E[|g|^2] = 1, so each product has second moment 1 and
    // variance 1 - mu1^2; terms are independent.
    return {m * mu1, m * (1.0 - mu1 * mu1)};
}

GammaDist fit_gamma(double mean, double variance) {
    if (!(mean > 0.0)) throw std::domain_error("fit_gamma: mean must be > 0");
    if (!(variance > 1e-12 * mean * mean)) {
        throw std::domain_error("fit_gamma: variance degenerate relative to mean");
    }
    return {mean * mean / variance, variance / mean};
}

GammaDist combined_gain_dist(int elements_per_sector, double kappa_h,
                             double kappa_g) {
    const Moments mom =
        combined_gain_moments(elements_per_sector, kappa_h, kappa_g);
    return fit_gamma(mom.mean, mom.variance);
}

GammaDist squared_gain_dist(const GammaDist& y) {
    const double k = y.shape;
    const double t2 = y.scale * y.scale;
    const double mean = k * (k + 1.0) * t2;
    const double var = k * (k + 1.0) * (4.0 * k + 6.0) * t2 * t2;
    return fit_gamma(mean, var);
}

GammaDist snr_dist(const SystemConfig& cfg, double tx_power_w) {
    if (!(tx_power_w > 0.0)) {
        throw std::invalid_argument("tx_power_w must be > 0");
    }
    const GammaDist y = combined_gain_dist(cfg.elements_per_sector(),
                                           cfg.kappa_h, cfg.kappa_g);
    GammaDist y2 = squared_gain_dist(y);
    const double rho = tx_power_w / cfg.noise_w();
    y2.scale *= rho * path_gain(cfg);
    return y2;
}

}  // namespace bdris::stats
