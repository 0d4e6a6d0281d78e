// Acceptance gate: one PASS/FAIL line per criterion, with the measured
// numbers and pinned tolerances inline. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "bdris/gammastats.hpp"
#include "bdris/metrics.hpp"
#include "bdris/montecarlo.hpp"
#include "bdris/sweep.hpp"
#include "bdris/system.hpp"

using namespace bdris;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    if (!pass) ++g_failures;
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

SystemConfig make_config(int sectors, int elements_total, double kappa,
                         double eta) {
    SystemConfig cfg;
    cfg.sectors = sectors;
    cfg.elements_total = elements_total;
    cfg.kappa_h = cfg.kappa_g = kappa;
    cfg.eta_ris = cfg.eta_user = eta;
    return cfg;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// 1. Average spectral-efficiency gain, six sectors over two, across the
//    0-50 dBm sweep: reported in percentage points of bits/s/Hz.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        double kappa, eta, want, tol;
    };
    const Case cases[] = {{10.0, 2.0, 182.0, 15.0}, {0.0, 3.0, 14.0, 5.0}};
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        const SystemConfig l6 = make_config(6, 360, c.kappa, c.eta);
        const SystemConfig l2 = make_config(2, 360, c.kappa, c.eta);
        double acc = 0.0;
        int n = 0;
        for (double p = 0.0; p <= 50.0; p += 2.0, ++n) {
            acc += metrics::se_jensen(l6, dbm_to_watt(p)) -
                   metrics::se_jensen(l2, dbm_to_watt(p));
        }
        const double gain = 100.0 * acc / n;
        pass = pass && std::fabs(gain - c.want) <= c.tol;
        detail += fmt("kappa=%g gain=%.1f (want %g+-%g) ", c.kappa, gain,
                      c.want, c.tol);
    }
    const double dt = seconds_since(t0);
    pass = pass && dt < 1.0;
    report(1, pass, detail + fmt("runtime=%.2fs (<1s)", dt));
}

// 2. Transmit power needed for 2 bits/s/Hz at an equal element budget.
void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    const double p6 = metrics::solve_power_for_se_dbm(
        make_config(6, 360, 10.0, 2.0), 2.0);
    const double p2 = metrics::solve_power_for_se_dbm(
        make_config(2, 360, 10.0, 2.0), 2.0);
    const double dt = seconds_since(t0);
    const bool pass =
        std::fabs(p6 - 16.0) <= 1.0 && std::fabs(p2 - 24.0) <= 1.0 && dt < 1.0;
    report(2, pass,
           fmt("SE=2 at %.2f dBm (want 16+-1) and %.2f dBm (want 24+-1), "
               "runtime=%.2fs (<1s)",
               p6, p2, dt));
}

// 3. Minimum element budget for 1e-2 outage at 15 dBm.
void criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    const double p_w = dbm_to_watt(15.0);
    const int z6 = metrics::solve_elements_for_outage(
        make_config(6, 360, 10.0, 2.0), p_w, 1e-2);
    const int z2 = metrics::solve_elements_for_outage(
        make_config(2, 360, 10.0, 2.0), p_w, 1e-2);
    const double dt = seconds_since(t0);
    const bool pass = std::fabs(z6 - 350.0) <= 35.0 &&
                      std::fabs(z2 - 825.0) <= 82.5 && dt < 5.0;
    report(3, pass,
           fmt("Z=%d (want 350+-10%%) and Z=%d (want 825+-10%%), "
               "runtime=%.2fs (<5s)",
               z6, z2, dt));
}

// 4. Transmit power at SEP=1e-2 for a 960-element budget.
void criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    const double p6 = metrics::solve_power_for_sep_dbm(
        make_config(6, 960, 10.0, 2.0), 1e-2);
    const double p2 = metrics::solve_power_for_sep_dbm(
        make_config(2, 960, 10.0, 2.0), 1e-2);
    const double gap = p2 - p6;
    const double dt = seconds_since(t0);
    const bool pass = std::fabs(p6 - 6.8) <= 1.0 && std::fabs(p2 - 14.7) <= 1.0 &&
                      std::fabs(gap - 7.9) <= 1.0 && dt < 1.0;
    report(4, pass,
           fmt("SEP=1e-2 at %.2f dBm (want 6.8+-1) and %.2f dBm (want "
               "14.7+-1), gap %.2f dB (want 7.9+-1), runtime=%.2fs (<1s)",
               p6, p2, gap, dt));
}

// 5. Energy-efficiency peaks for the 360-element budget.
void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        int sectors;
        double want_ee, want_p;
    };
    const Case cases[] = {{6, 28.87e6, 15.0}, {2, 8.52e6, 18.0}};
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        const SystemConfig cfg = make_config(c.sectors, 360, 10.0, 2.0);
        double best = 0.0, best_p = 0.0;
        for (double p = -10.0; p <= 40.0; p += 0.05) {
            const double ee = metrics::energy_efficiency(cfg, dbm_to_watt(p));
            if (ee > best) {
                best = ee;
                best_p = p;
            }
        }
        pass = pass && std::fabs(best - c.want_ee) <= 0.05 * c.want_ee &&
               std::fabs(best_p - c.want_p) <= 1.0;
        detail += fmt("L=%d peak %.2f Mb/J at %.2f dBm (want %.2f+-5%% at "
                      "%g+-1) ",
                      c.sectors, best / 1e6, best_p, c.want_ee / 1e6, c.want_p);
    }
    const double dt = seconds_since(t0);
    pass = pass && dt < 1.0;
    report(5, pass, detail + fmt("runtime=%.2fs (<1s)", dt));
}

// 6. Distribution fidelity of the matched gamma law at the 120-element,
//    three-sector reference configuration.
void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    const SystemConfig cfg = make_config(3, 120, 10.0, 2.0);
    const double d =
        mc::snr_cdf_sup_distance(cfg, dbm_to_watt(30.0), 101, 1000000);
    const double dt = seconds_since(t0);
    const bool pass = d < 0.005 && dt < 30.0;
    report(6, pass,
           fmt("empirical-CDF sup distance %.5f (<0.005) at 1e6 samples, "
               "runtime=%.1fs (<30s)",
               d, dt));
}

// 7. Closed form vs Monte Carlo, 3 standard errors, across the full
//    kappa x sectors x elements grid, five seeds, 1e6 trials.
void criterion7() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t trials = 1000000;
    const std::uint64_t seeds[] = {1, 2, 3, 4, 5};
    const double kappas[] = {0.0, 5.0, 10.0};
    const int sector_counts[] = {2, 3, 6};
    const int elements[] = {20, 60, 160};
    int checked = 0, failed = 0;
    struct Group {
        double kappa;
        int m;
        int failed = 0;
        double worst_z = 0.0;
    };
    std::vector<Group> groups;
    for (double kappa : kappas) {
        for (int m : elements) {
            Group grp{kappa, m};
            for (std::uint64_t seed : seeds) {
                const auto gains =
                    mc::sample_combined_gain(kappa, kappa, m, seed, trials);
                for (int l : sector_counts) {
                    const SystemConfig cfg = make_config(l, l * m, kappa, 2.0);
                    auto tally = [&](double analytic, const mc::Estimate& est) {
                        const double z = (analytic - est.value) / est.stderr_;
                        ++checked;
                        if (std::fabs(z) > 3.0) {
                            ++failed;
                            ++grp.failed;
                        }
                        if (std::fabs(z) > std::fabs(grp.worst_z)) {
                            grp.worst_z = z;
                        }
                    };
                    // Outage and SEP at the powers where the closed form
                    // predicts 1e-3, 1e-2, 1e-1.
                    for (double target : {1e-3, 1e-2, 1e-1}) {
                        const double p = dbm_to_watt(
                            metrics::solve_power_for_outage_dbm(cfg, target));
                        tally(target, mc::outage_from_gains(gains, cfg, p, seed));
                    }
                    for (double target : {1e-3, 1e-2, 1e-1}) {
                        const double p = dbm_to_watt(
                            metrics::solve_power_for_sep_dbm(cfg, target));
                        tally(target,
                              mc::sep_bpsk_from_gains(gains, cfg, p, seed));
                    }
                    // Rate at the 1e-2 outage power; the analytic value is
                    // the expectation under the matched law.
                    const double p_se = dbm_to_watt(
                        metrics::solve_power_for_outage_dbm(cfg, 1e-2));
                    tally(metrics::se_expected(cfg, p_se),
                          mc::se_from_gains(gains, cfg, p_se, seed));
                }
            }
            groups.push_back(grp);
        }
    }
    const double dt = seconds_since(t0);
    const bool pass = failed == 0 && dt < 600.0;
    std::string detail;
    for (const auto& g : groups) {
        if (g.failed > 0) {
            detail += fmt("\n  kappa=%g M=%d: %d/105 checks out of band, "
                          "worst z=%+.1f (fit-vs-channel model error, "
                          "independent of L)",
                          g.kappa, g.m, g.failed, g.worst_z);
        }
    }
    report(7, pass,
           fmt("%d/%d grid checks within 3 stderr at 1e6 trials, "
               "runtime=%.0fs (<600s)",
               checked - failed, checked, dt) +
               detail);
}

// 8. Deep-tail slope and asymptote agreement for outage and SEP.
void criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (int l : {2, 6}) {
        for (double kappa : {5.0, 10.0}) {
            const SystemConfig cfg = make_config(l, l * 20, kappa, 2.0);
            const double gd = metrics::diversity_order(cfg);
            // Anchor deep inside the sub-1e-10 region: for outage put the
            // tail argument at 5% of the scale, for SEP put the mean-SNR
            // scale at 100x the shape. Both keep the local-slope and
            // asymptote gaps an order below the 5%/10% bounds.
            const auto y2 = stats::squared_gain_dist(stats::combined_gain_dist(
                cfg.elements_per_sector(), cfg.kappa_h, cfg.kappa_g));
            const double p_out = metrics::outage_threshold(cfg) *
                                 cfg.noise_w() /
                                 (path_gain(cfg) * y2.scale * 0.05);
            const double step = std::pow(10.0, 0.05);
            const double lo1 = metrics::log_outage(cfg, p_out);
            const double lo2 = metrics::log_outage(cfg, p_out * step);
            const double slope_out = -(lo2 - lo1) / std::log(step);
            const double ratio_out =
                std::exp(lo1 - metrics::log_outage_asymptotic(cfg, p_out));

            const double p_sep = 100.0 * y2.shape * cfg.noise_w() /
                                 (path_gain(cfg) * y2.scale);
            const double ls1 = metrics::log_sep_bpsk(cfg, p_sep);
            const double ls2 = metrics::log_sep_bpsk(cfg, p_sep * step);
            const double slope_sep = -(ls2 - ls1) / std::log(step);
            const double ratio_sep =
                std::exp(ls1 - metrics::log_sep_asymptotic(cfg, p_sep));

            const bool ok = std::fabs(slope_out / gd - 1.0) < 0.05 &&
                            std::fabs(slope_sep / gd - 1.0) < 0.05 &&
                            std::fabs(ratio_out - 1.0) < 0.10 &&
                            std::fabs(ratio_sep - 1.0) < 0.10;
            pass = pass && ok;
            if (!ok) {
                detail += fmt("L=%d kappa=%g slopes %.1f/%.1f vs %.1f ratios "
                              "%.3f/%.3f ",
                              l, kappa, slope_out, slope_sep, gd, ratio_out,
                              ratio_sep);
            }
        }
    }
    const double dt = seconds_since(t0);
    report(8, pass,
           detail + fmt("log-log slopes match the fitted shape within 5%%, "
                        "exact/asymptotic within 10%% below 1e-10, "
                        "runtime=%.2fs",
                        dt));
}

// 9. Algebraic identities pinned to machine-level tolerances.
void criterion9() {
    bool pass = true;
    std::string detail;
    double worst_se = 0.0, worst_sep = 0.0, worst_fit = 0.0;
    for (int l : {2, 3, 6}) {
        for (double kappa : {0.0, 5.0, 10.0}) {
            const SystemConfig cfg = make_config(l, 360, kappa, 2.0);
            for (double p = 0.0; p <= 40.0; p += 10.0) {
                const double a = metrics::se_jensen(cfg, dbm_to_watt(p));
                const double b = metrics::se_jensen_sectorized(cfg, dbm_to_watt(p));
                worst_se = std::max(worst_se, std::fabs(a - b) / a);
            }
            for (double p = -10.0; p <= 30.0; p += 10.0) {
                const double a = metrics::sep_bpsk(cfg, dbm_to_watt(p));
                const double b = metrics::sep_mpsk(cfg, dbm_to_watt(p), 2);
                worst_sep = std::max(worst_sep, std::fabs(a - b) / a);
            }
            const auto mom = stats::combined_gain_moments(360 / l, kappa, kappa);
            const auto fitted = stats::fit_gamma(mom.mean, mom.variance);
            worst_fit = std::max(
                worst_fit, std::fabs(fitted.mean() - mom.mean) / mom.mean);
            worst_fit = std::max(worst_fit, std::fabs(fitted.variance() -
                                                      mom.variance) /
                                                mom.variance);
        }
    }
    pass = worst_se < 1e-12 && worst_sep < 1e-8 && worst_fit < 1e-12;
    report(9, pass,
           fmt("sectorized-vs-generic rate %.1e (<1e-12), quadrature-vs-closed "
               "SEP %.1e (<1e-8), fit round trip %.1e (<1e-12)",
               worst_se, worst_sep, worst_fit));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion8();
    criterion9();
    criterion7();  // last: the long Monte Carlo grid
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
