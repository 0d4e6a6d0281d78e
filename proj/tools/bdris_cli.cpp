// Command line front end: figure-style sweeps with optional Monte Carlo
// companion columns, a closed-form vs simulation validation report, the
// minimum-element solver, and a distribution inspector.
//
// Exit codes: 0 success, 1 validation failure, 2 config error, 3 every
// grid point failed numerically.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdris/metrics.hpp"
#include "bdris/montecarlo.hpp"
#include "bdris/specfun.hpp"
#include "bdris/sweep.hpp"
#include "bdris/system.hpp"

namespace {

using bdris::SystemConfig;
using bdris::sweep::SweepSpec;

struct CommonFlags {
    std::string config_path;
    CLI::Option* opt_config = nullptr;

    int sectors = 0;
    int elements_total = 0;
    double kappa_h = 0.0, kappa_g = 0.0;
    double dist_ris = 0.0, dist_user = 0.0;
    double eta_ris = 0.0, eta_user = 0.0;
    int users = 0;
    double rate_bpcu = 0.0;
    double tx_power_dbm = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;

    CLI::Option *o_sectors = nullptr, *o_elements = nullptr, *o_kh = nullptr,
                *o_kg = nullptr, *o_dr = nullptr, *o_du = nullptr,
                *o_er = nullptr, *o_eu = nullptr, *o_users = nullptr,
                *o_rate = nullptr, *o_power = nullptr, *o_trials = nullptr,
                *o_seed = nullptr;

    void attach(CLI::App* cmd) {
        opt_config = cmd->add_option("--config", config_path,
                                     "INI config file ([system], [power-model], [sweep])");
        o_sectors = cmd->add_option("--sectors", sectors, "sector count L");
        o_elements = cmd->add_option("--elements-total", elements_total,
                                     "total elements Z = L*M");
        o_kh = cmd->add_option("--kappa-h", kappa_h, "Rician factor, BS hop");
        o_kg = cmd->add_option("--kappa-g", kappa_g, "Rician factor, user hop");
        o_dr = cmd->add_option("--dist-ris", dist_ris, "BS-surface distance (m)");
        o_du = cmd->add_option("--dist-user", dist_user, "surface-user distance (m)");
        o_er = cmd->add_option("--eta-ris", eta_ris, "path loss exponent, BS hop");
        o_eu = cmd->add_option("--eta-user", eta_user, "path loss exponent, user hop");
        o_users = cmd->add_option("--users", users, "users K sharing the frame");
        o_rate = cmd->add_option("--rate-bpcu", rate_bpcu, "per-user rate target");
        o_power = cmd->add_option("--tx-power-dbm", tx_power_dbm,
                                  "fixed transmit power (dBm)");
        o_trials = cmd->add_option("--trials", trials, "Monte Carlo trials");
        o_seed = cmd->add_option("--seed", seed, "Monte Carlo seed");
    }

    // Config file first, explicit flags on top.
    void resolve(SweepSpec& spec) const {
        if (opt_config->count() > 0) {
            bdris::sweep::apply_config_file(config_path, spec);
        }
        SystemConfig& c = spec.cfg;
        if (o_sectors->count()) c.sectors = sectors;
        if (o_elements->count()) c.elements_total = elements_total;
        if (o_kh->count()) c.kappa_h = kappa_h;
        if (o_kg->count()) c.kappa_g = kappa_g;
        if (o_dr->count()) c.dist_ris_m = dist_ris;
        if (o_du->count()) c.dist_user_m = dist_user;
        if (o_er->count()) c.eta_ris = eta_ris;
        if (o_eu->count()) c.eta_user = eta_user;
        if (o_users->count()) c.users = users;
        if (o_rate->count()) c.rate_bpcu = rate_bpcu;
        if (o_power->count()) spec.tx_power_dbm = tx_power_dbm;
        if (o_trials->count()) spec.trials = trials;
        if (o_seed->count()) spec.seed = seed;
    }
};

bool parse_sweep_range(const std::string& text, SweepSpec& spec,
                       std::string& err) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        err = "expected VAR=START:STOP:STEP";
        return false;
    }
    try {
        spec.variable = bdris::sweep::variable_from_name(text.substr(0, eq));
    } catch (const std::exception& ex) {
        err = ex.what();
        return false;
    }
    const std::string range = text.substr(eq + 1);
    double v[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const auto colon = (i < 2) ? range.find(':', pos) : range.size();
        if (colon == std::string::npos) {
            err = "expected START:STOP:STEP";
            return false;
        }
        try {
            v[i] = std::stod(range.substr(pos, colon - pos));
        } catch (const std::exception&) {
            err = "bad number in range: " + range;
            return false;
        }
        pos = colon + 1;
    }
    spec.start = v[0];
    spec.stop = v[1];
    spec.step = v[2];
    return true;
}

int run_sweep_cmd(const CommonFlags& common, const std::string& metric_name,
                  const std::string& sweep_text, bool mc,
                  const std::string& out_path, const std::string& plot_path) {
    SweepSpec spec;
    common.resolve(spec);
    if (!metric_name.empty()) {
        spec.metric = bdris::sweep::metric_from_name(metric_name);
    }
    if (!sweep_text.empty()) {
        std::string err;
        if (!parse_sweep_range(sweep_text, spec, err)) {
            throw std::invalid_argument("--sweep: " + err);
        }
    }
    if (mc) spec.mc = true;
    spec.validate();
    spec.cfg.validate();

    const auto points = bdris::sweep::run_sweep(spec);
    bdris::sweep::echo_config(std::cout, spec);

    bool any_ok = false;
    for (const auto& pt : points) {
        if (pt.ok) any_ok = true;
        if (!pt.ok) {
            std::cerr << "point " << pt.sweep_value << " failed: " << pt.error
                      << "\n";
        } else if (pt.mc_tail_warning) {
            std::cerr << "point " << pt.sweep_value
                      << ": fewer than 20 expected tail events; stderr unreliable\n";
        }
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open --out path: " + out_path);
        bdris::sweep::write_csv(f, spec, points);
        std::cout << "# wrote " << points.size() << " rows to " << out_path
                  << "\n";
    } else {
        bdris::sweep::write_csv(std::cout, spec, points);
    }
    if (!plot_path.empty()) {
        std::ofstream f(plot_path);
        if (!f) {
            throw std::invalid_argument("cannot open --plot-script path: " +
                                        plot_path);
        }
        bdris::sweep::write_plot_script(
            f, spec, out_path.empty() ? "sweep.csv" : out_path);
    }
    return any_ok ? 0 : 3;
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

int run_validate_cmd(const CommonFlags& common) {
    SweepSpec spec;
    spec.trials = 100000;
    common.resolve(spec);
    spec.cfg.validate();
    const SystemConfig& cfg = spec.cfg;
    bdris::sweep::echo_config(std::cout, spec);

    // Power grid: where the closed form predicts outage 1e-1 and 1e-2,
    // so tail event counts stay meaningful at smoke-tier trial counts.
    std::vector<double> powers;
    for (double target : {1e-1, 1e-2}) {
        powers.push_back(bdris::metrics::solve_power_for_outage_dbm(cfg, target));
    }

    std::vector<Check> checks;
    const auto gains = bdris::mc::sample_combined_gain(
        cfg.kappa_h, cfg.kappa_g, cfg.elements_per_sector(), spec.seed,
        spec.trials);
    for (double p_dbm : powers) {
        const double p_w = bdris::dbm_to_watt(p_dbm);
        std::ostringstream tag;
        tag.precision(4);
        tag << "@" << p_dbm << "dBm";

        const auto out_est =
            bdris::mc::outage_from_gains(gains, cfg, p_w, spec.seed);
        const double out_an = bdris::metrics::outage(cfg, p_w);
        double z = (out_an - out_est.value) / out_est.stderr_;
        std::ostringstream d1;
        d1 << "analytic=" << out_an << " mc=" << out_est.value << " z=" << z;
        checks.push_back({"outage" + tag.str(), std::fabs(z) <= 3.0, d1.str()});

        const auto sep_est =
            bdris::mc::sep_bpsk_from_gains(gains, cfg, p_w, spec.seed);
        const double sep_an = bdris::metrics::sep_bpsk(cfg, p_w);
        z = (sep_an - sep_est.value) / sep_est.stderr_;
        std::ostringstream d2;
        d2 << "analytic=" << sep_an << " mc=" << sep_est.value << " z=" << z;
        checks.push_back({"sep" + tag.str(), std::fabs(z) <= 3.0, d2.str()});

        const auto se_est =
            bdris::mc::se_from_gains(gains, cfg, p_w, spec.seed);
        const double se_an = bdris::metrics::se_jensen(cfg, p_w);
        const double gap = std::fabs(se_an - se_est.value) / se_est.value;
        std::ostringstream d3;
        d3 << "jensen=" << se_an << " mc=" << se_est.value
           << " rel-gap=" << gap;
        checks.push_back({"se" + tag.str(), gap < 0.05, d3.str()});
    }

    bool all_pass = true;
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail
                  << "\n";
    }
    std::cout << (all_pass ? "validation passed" : "validation FAILED") << " ("
              << checks.size() << " checks, " << spec.trials << " trials, seed "
              << spec.seed << ")\n";
    return all_pass ? 0 : 1;
}

int run_solve_cmd(const CommonFlags& common, double target) {
    SweepSpec spec;
    common.resolve(spec);
    spec.cfg.validate();
    bdris::sweep::echo_config(std::cout, spec);
    const int z = bdris::metrics::solve_elements_for_outage(
        spec.cfg, bdris::dbm_to_watt(spec.tx_power_dbm), target);
    SystemConfig hit = spec.cfg;
    hit.elements_total = z;
    std::cout << "target_outage=" << target << "\n";
    std::cout << "elements_total=" << z << "\n";
    std::cout << "elements_per_sector=" << z / spec.cfg.sectors << "\n";
    std::cout << "achieved_outage="
              << bdris::metrics::outage(hit, bdris::dbm_to_watt(spec.tx_power_dbm))
              << "\n";
    return 0;
}

int run_show_dist_cmd(const CommonFlags& common) {
    SweepSpec spec;
    common.resolve(spec);
    spec.cfg.validate();
    const SystemConfig& cfg = spec.cfg;
    bdris::sweep::echo_config(std::cout, spec);
    const double p_w = bdris::dbm_to_watt(spec.tx_power_dbm);

    const auto y = bdris::stats::combined_gain_dist(cfg.elements_per_sector(),
                                                    cfg.kappa_h, cfg.kappa_g);
    const auto y2 = bdris::stats::squared_gain_dist(y);
    const auto snr = bdris::stats::snr_dist(cfg, p_w);
    const double alpha = bdris::path_gain(cfg);
    const double psi = bdris::metrics::outage_threshold(cfg);
    const double k = y2.shape;
    const double gc_outage = alpha * y2.scale *
                             std::exp(bdris::specfun::ln_gamma(k + 1.0) / k) / psi;
    const double gc_sep =
        alpha * y2.scale *
        std::exp((std::log(2.0 * std::sqrt(M_PI)) +
                  bdris::specfun::ln_gamma(k + 1.0) -
                  bdris::specfun::ln_gamma(k + 0.5)) /
                 k);

    std::cout.precision(17);
    std::cout << "combined_gain_shape=" << y.shape << "\n";
    std::cout << "combined_gain_scale=" << y.scale << "\n";
    std::cout << "squared_gain_shape=" << y2.shape << "\n";
    std::cout << "squared_gain_scale=" << y2.scale << "\n";
    std::cout << "path_gain=" << alpha << "\n";
    std::cout << "snr_threshold=" << psi << "\n";
    std::cout << "snr_shape=" << snr.shape << "\n";
    std::cout << "snr_scale=" << snr.scale << "\n";
    std::cout << "diversity_order=" << bdris::metrics::diversity_order(cfg)
              << "\n";
    std::cout << "coding_gain_outage=" << gc_outage << "\n";
    std::cout << "coding_gain_sep=" << gc_sep << "\n";
    std::cout << "outage=" << bdris::metrics::outage(cfg, p_w) << "\n";
    std::cout << "sep_bpsk=" << bdris::metrics::sep_bpsk(cfg, p_w) << "\n";
    std::cout << "se=" << bdris::metrics::se_jensen(cfg, p_w) << "\n";
    std::cout << "ee=" << bdris::metrics::energy_efficiency(cfg, p_w) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form and Monte Carlo link analysis for multi-sector "
                 "reconfigurable-surface downlinks"};
    app.require_subcommand(1);

    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a metric over a grid");
    CommonFlags sweep_flags;
    sweep_flags.attach(sweep_cmd);
    std::string metric, sweep_text, out_path, plot_path;
    bool mc = false;
    sweep_cmd->add_option("--metric", metric,
                          "outage|outage-asymptotic|sep|sep-asymptotic|se|"
                          "se-sectorized|ee|cdf-distance");
    sweep_cmd->add_option("--sweep", sweep_text, "VAR=START:STOP:STEP");
    sweep_cmd->add_flag("--mc", mc, "add Monte Carlo columns");
    sweep_cmd->add_option("--out", out_path, "write CSV here instead of stdout");
    sweep_cmd->add_option("--plot-script", plot_path,
                          "emit a gnuplot script referencing the CSV");

    auto* validate_cmd =
        app.add_subcommand("validate", "closed-form vs Monte Carlo report");
    CommonFlags validate_flags;
    validate_flags.attach(validate_cmd);

    auto* solve_cmd = app.add_subcommand(
        "solve", "minimum total elements for a target outage");
    CommonFlags solve_flags;
    solve_flags.attach(solve_cmd);
    double target = 1e-2;
    solve_cmd->add_option("--target", target, "outage target (default 1e-2)");

    auto* show_cmd =
        app.add_subcommand("show-dist", "print the fitted SNR law and metrics");
    CommonFlags show_flags;
    show_flags.attach(show_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_cmd->parsed()) {
            return run_sweep_cmd(sweep_flags, metric, sweep_text, mc, out_path,
                                 plot_path);
        }
        if (validate_cmd->parsed()) return run_validate_cmd(validate_flags);
        if (solve_cmd->parsed()) return run_solve_cmd(solve_flags, target);
        if (show_cmd->parsed()) return run_show_dist_cmd(show_flags);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
