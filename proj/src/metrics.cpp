#include "bdris/metrics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "bdris/quadrature.hpp"
#include "bdris/specfun.hpp"

namespace bdris::metrics {

using stats::GammaDist;

double outage_threshold(const SystemConfig& cfg) {
    return std::exp2(cfg.users * cfg.rate_bpcu) - 1.0;
}

double outage(const SystemConfig& cfg, double tx_power_w) {
    const GammaDist snr = stats::snr_dist(cfg, tx_power_w);
    return snr.cdf(outage_threshold(cfg));
}

double log_outage(const SystemConfig& cfg, double tx_power_w) {
    const GammaDist snr = stats::snr_dist(cfg, tx_power_w);
    return snr.log_cdf(outage_threshold(cfg));
}

double log_outage_asymptotic(const SystemConfig& cfg, double tx_power_w) {
    const GammaDist snr = stats::snr_dist(cfg, tx_power_w);
    const double k = snr.shape;
    const double x = outage_threshold(cfg) / snr.scale;
    return k * std::log(x) - specfun::ln_gamma(k + 1.0);
}

double outage_asymptotic(const SystemConfig& cfg, double tx_power_w) {
    return std::exp(log_outage_asymptotic(cfg, tx_power_w));
}

double diversity_order(const SystemConfig& cfg) {
    const GammaDist y = stats::combined_gain_dist(cfg.elements_per_sector(),
                                                  cfg.kappa_h, cfg.kappa_g);
    return stats::squared_gain_dist(y).shape;
}

double log_sep_bpsk(const SystemConfig& cfg, double tx_power_w) {
    const GammaDist snr = stats::snr_dist(cfg, tx_power_w);
    const double k = snr.shape;
    const double x = snr.scale;
    const double lpref = 0.5 * std::log(x) - (k + 0.5) * std::log1p(x) +
                         specfun::ln_gamma(k + 0.5) - specfun::ln_gamma(k + 1.0) -
                         std::log(2.0 * std::sqrt(M_PI));
    // Argument passed as its complement x/(1+x): for small x the value
    // scales like its inverse square root, so 1/(1+x) rounding near 1
    // would wreck the low-SNR limit.
    const double f = specfun::gauss_2f1_unit_a_cm(k + 0.5, k + 1.0, x / (1.0 + x));
    return lpref + std::log(f);
}

double sep_bpsk(const SystemConfig& cfg, double tx_power_w) {
    return std::exp(log_sep_bpsk(cfg, tx_power_w));
}

double log_sep_asymptotic(const SystemConfig& cfg, double tx_power_w) {
    const GammaDist snr = stats::snr_dist(cfg, tx_power_w);
    const double k = snr.shape;
    return -k * std::log(snr.scale) + specfun::ln_gamma(k + 0.5) -
           specfun::ln_gamma(k + 1.0) - std::log(2.0 * std::sqrt(M_PI));
}

double sep_asymptotic(const SystemConfig& cfg, double tx_power_w) {
    return std::exp(log_sep_asymptotic(cfg, tx_power_w));
}

double sep_mpsk(const SystemConfig& cfg, double tx_power_w, int mod_order) {
    if (mod_order < 2 || (mod_order & (mod_order - 1)) != 0) {
        throw std::invalid_argument("sep_mpsk: mod_order must be a power of two >= 2");
    }
    const GammaDist snr = stats::snr_dist(cfg, tx_power_w);
    const double k = snr.shape;
    const double s = snr.scale;
    const double g = std::sin(M_PI / mod_order) * std::sin(M_PI / mod_order);
    const double upper = (mod_order - 1.0) * M_PI / mod_order;
    // MGF at -g/sin^2(delta): (1 + g s / sin^2 delta)^{-k}, log-domain to
    // survive large shapes. The integrand tends to 0 at delta = 0 but is
    // very steep there for large k; a small guard keeps refinement sane.
    const auto f = [&](double delta) {
        const double sd = std::sin(delta);
        return std::exp(-k * std::log1p(g * s / (sd * sd)));
    };
    return quad::integrate(f, 1e-9, upper, 1e-12) / M_PI;
}

namespace {

double mean_snr(const SystemConfig& cfg, double tx_power_w) {
    const GammaDist y = stats::combined_gain_dist(cfg.elements_per_sector(),
                                                  cfg.kappa_h, cfg.kappa_g);
    const double ey2 = y.shape * (y.shape + 1.0) * y.scale * y.scale;
    const double rho = tx_power_w / cfg.noise_w();
    return rho * path_gain(cfg) * ey2;
}

}  // namespace

double se_jensen(const SystemConfig& cfg, double tx_power_w) {
    if (!(tx_power_w > 0.0)) throw std::invalid_argument("tx_power_w must be > 0");
    return std::log2(1.0 + mean_snr(cfg, tx_power_w));
}

double se_jensen_sectorized(const SystemConfig& cfg, double tx_power_w) {
    if (!(tx_power_w > 0.0)) throw std::invalid_argument("tx_power_w must be > 0");
    const double mu1 = stats::product_term_mean(cfg.kappa_h, cfg.kappa_g);
    const double omega = mu1 * mu1;
    const double z = cfg.elements_total;
    const double l = cfg.sectors;
    const double rho = tx_power_w / cfg.noise_w();
    const double gain = (z / l) * (z / l) * omega + (z / l) * (1.0 - omega);
    return std::log2(1.0 + rho * path_gain(cfg) * gain);
}

double se_expected(const SystemConfig& cfg, double tx_power_w) {
    const GammaDist snr = stats::snr_dist(cfg, tx_power_w);
    // Integrate log2(1+x) against the gamma density over mean +- 14 sigma
    // (clipped at 0); the density is negligible outside for shapes >= ~1.
    const double sigma = std::sqrt(snr.variance());
    const double lo = std::max(0.0, snr.mean() - 14.0 * sigma);
    const double hi = snr.mean() + 14.0 * sigma;
    const auto f = [&](double x) { return std::log2(1.0 + x) * snr.pdf(x); };
    double v = quad::integrate(f, lo, hi, 1e-12);
    if (snr.shape < 1.5) {
        // Low shapes have heavy tails; add the remainder explicitly.
        v += quad::integrate(f, hi, hi * 50.0 + 100.0, 1e-10);
    }
    return v;
}

double total_power_w(const SystemConfig& cfg, double tx_power_w) {
    if (tx_power_w < 0.0) throw std::invalid_argument("tx_power_w must be >= 0");
    return cfg.users * (tx_power_w / cfg.amp_efficiency + cfg.p_ue_w) +
           cfg.p_bs_w + cfg.elements_total * cfg.p_element_w + cfg.p_switch_w;
}

double energy_efficiency(const SystemConfig& cfg, double tx_power_w) {
    return cfg.bandwidth_hz * se_jensen(cfg, tx_power_w) /
           total_power_w(cfg, tx_power_w);
}

namespace {

// Bisection for f monotone in transmit power (dBm); sign tells direction.
double bisect_power_dbm(const std::function<double(double)>& f, double target,
                        bool decreasing) {
    double lo = -80.0, hi = 90.0;
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (decreasing) {
        flo = -flo;
        fhi = -fhi;
    }
    if (flo > 0.0 || fhi < 0.0) {
        throw std::runtime_error("solve: target not bracketed in [-80, 90] dBm");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        double fm = f(mid) - target;
        if (decreasing) fm = -fm;
        (fm < 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-11) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double solve_power_for_outage_dbm(const SystemConfig& cfg, double target) {
    if (!(target > 0.0) || !(target < 1.0)) {
        throw std::invalid_argument("outage target must be in (0, 1)");
    }
    const double lt = std::log(target);
    return bisect_power_dbm(
        [&](double dbm) { return log_outage(cfg, dbm_to_watt(dbm)); }, lt, true);
}

double solve_power_for_sep_dbm(const SystemConfig& cfg, double target) {
    if (!(target > 0.0) || !(target < 1.0)) {
        throw std::invalid_argument("SEP target must be in (0, 1)");
    }
    const double lt = std::log(target);
    return bisect_power_dbm(
        [&](double dbm) { return log_sep_bpsk(cfg, dbm_to_watt(dbm)); }, lt, true);
}

double solve_power_for_se_dbm(const SystemConfig& cfg, double target_bits) {
    if (!(target_bits > 0.0)) {
        throw std::invalid_argument("SE target must be > 0");
    }
    return bisect_power_dbm(
        [&](double dbm) { return se_jensen(cfg, dbm_to_watt(dbm)); },
        target_bits, false);
}

int solve_elements_for_outage(const SystemConfig& cfg, double tx_power_w,
                              double target, int z_max) {
    if (!(target > 0.0) || !(target < 1.0)) {
        throw std::invalid_argument("outage target must be in (0, 1)");
    }
    SystemConfig c = cfg;
    const double lt = std::log(target);
    // Outage decreases in M; binary search over elements per sector.
    int lo = 1, hi = std::max(1, z_max / cfg.sectors);
    c.elements_total = hi * c.sectors;
    if (log_outage(c, tx_power_w) > lt) {
        throw std::runtime_error("solve: outage target unreachable below z_max");
    }
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        c.elements_total = mid * c.sectors;
        if (log_outage(c, tx_power_w) <= lt) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo * cfg.sectors;
}

}  // namespace bdris::metrics
