#include "bdris/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bdris/metrics.hpp"
#include "bdris/montecarlo.hpp"

namespace bdris::sweep {

namespace {

struct MetricNames {
    Metric metric;
    const char* name;
};

constexpr MetricNames kMetrics[] = {
    {Metric::Outage, "outage"},
    {Metric::OutageAsymptotic, "outage-asymptotic"},
    {Metric::Sep, "sep"},
    {Metric::SepAsymptotic, "sep-asymptotic"},
    {Metric::Se, "se"},
    {Metric::SeSectorized, "se-sectorized"},
    {Metric::Ee, "ee"},
    {Metric::CdfDistance, "cdf-distance"},
};

struct VariableNames {
    Variable variable;
    const char* name;
};

constexpr VariableNames kVariables[] = {
    {Variable::TxPowerDbm, "tx-power-dbm"},
    {Variable::TotalElements, "total-elements"},
    {Variable::Sectors, "sectors"},
};

}  // namespace

Metric metric_from_name(const std::string& name) {
    for (const auto& m : kMetrics) {
        if (name == m.name) return m.metric;
    }
    throw std::invalid_argument("unknown metric: " + name);
}

const char* metric_name(Metric m) {
    for (const auto& e : kMetrics) {
        if (e.metric == m) return e.name;
    }
    return "?";
}

Variable variable_from_name(const std::string& name) {
    for (const auto& v : kVariables) {
        if (name == v.name) return v.variable;
    }
    throw std::invalid_argument("unknown sweep variable: " + name);
}

const char* variable_name(Variable v) {
    for (const auto& e : kVariables) {
        if (e.variable == v) return e.name;
    }
    return "?";
}

void SweepSpec::validate() const {
    if (!(step > 0.0)) throw std::invalid_argument("sweep step must be > 0");
    if (stop < start) throw std::invalid_argument("sweep range is empty");
    if (variable == Variable::TotalElements) {
        const double l = cfg.sectors;
        if (std::fmod(start, l) != 0.0 || std::fmod(step, l) != 0.0) {
            throw std::invalid_argument(
                "element sweep must start and step in multiples of sectors");
        }
    }
    if (mc && trials <= 0) throw std::invalid_argument("trials must be >= 1");
    if (metric == Metric::CdfDistance && !mc) {
        throw std::invalid_argument("cdf-distance is sample-based; enable mc");
    }
}

std::vector<double> SweepSpec::grid() const {
    std::vector<double> g;
    const double span = stop - start;
    const long n = static_cast<long>(std::floor(span / step + 1e-9));
    for (long i = 0; i <= n; ++i) g.push_back(start + step * static_cast<double>(i));
    return g;
}

namespace {

SystemConfig config_at(const SweepSpec& spec, double value, double& power_dbm) {
    SystemConfig cfg = spec.cfg;
    power_dbm = spec.tx_power_dbm;
    switch (spec.variable) {
        case Variable::TxPowerDbm:
            power_dbm = value;
            break;
        case Variable::TotalElements:
            cfg.elements_total = static_cast<int>(std::lround(value));
            break;
        case Variable::Sectors:
            cfg.sectors = static_cast<int>(std::lround(value));
            break;
    }
    return cfg;
}

}  // namespace

std::vector<MetricPoint> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<MetricPoint> out;
    // Gain samples depend only on (kappas, elements per sector, seed,
    // trials): cache per element count across grid points.
    std::map<int, std::vector<double>> gain_cache;
    const auto gains_for = [&](const SystemConfig& cfg)
        -> const std::vector<double>& {
        const int m = cfg.elements_per_sector();
        auto it = gain_cache.find(m);
        if (it == gain_cache.end()) {
            it = gain_cache
                     .emplace(m, mc::sample_combined_gain(cfg.kappa_h, cfg.kappa_g,
                                                          m, spec.seed,
                                                          spec.trials))
                     .first;
        }
        return it->second;
    };

    for (double value : spec.grid()) {
        MetricPoint pt;
        pt.sweep_value = value;
        try {
            double power_dbm = 0.0;
            const SystemConfig cfg = config_at(spec, value, power_dbm);
            cfg.validate();
            const double p_w = dbm_to_watt(power_dbm);
            switch (spec.metric) {
                case Metric::Outage:
                    pt.analytic = metrics::outage(cfg, p_w);
                    pt.has_analytic = true;
                    if (spec.mc) {
                        const auto est = mc::outage_from_gains(gains_for(cfg), cfg,
                                                               p_w, spec.seed);
                        pt.mc_value = est.value;
                        pt.mc_stderr = est.stderr_;
                        pt.has_mc = true;
                        pt.mc_tail_warning = mc::tail_unreliable(est);
                    }
                    break;
                case Metric::OutageAsymptotic:
                    pt.analytic = metrics::outage_asymptotic(cfg, p_w);
                    pt.has_analytic = true;
                    break;
                case Metric::Sep:
                    pt.analytic = metrics::sep_bpsk(cfg, p_w);
                    pt.has_analytic = true;
                    if (spec.mc) {
                        const auto est = mc::sep_bpsk_from_gains(gains_for(cfg),
                                                                 cfg, p_w,
                                                                 spec.seed);
                        pt.mc_value = est.value;
                        pt.mc_stderr = est.stderr_;
                        pt.has_mc = true;
                        pt.mc_tail_warning = mc::tail_unreliable(est);
                    }
                    break;
                case Metric::SepAsymptotic:
                    pt.analytic = metrics::sep_asymptotic(cfg, p_w);
                    pt.has_analytic = true;
                    break;
                case Metric::Se:
                    pt.analytic = metrics::se_jensen(cfg, p_w);
                    pt.has_analytic = true;
                    if (spec.mc) {
                        const auto est = mc::se_from_gains(gains_for(cfg), cfg,
                                                           p_w, spec.seed);
                        pt.mc_value = est.value;
                        pt.mc_stderr = est.stderr_;
                        pt.has_mc = true;
                    }
                    break;
                case Metric::SeSectorized:
                    pt.analytic = metrics::se_jensen_sectorized(cfg, p_w);
                    pt.has_analytic = true;
                    break;
                case Metric::Ee:
                    pt.analytic = metrics::energy_efficiency(cfg, p_w);
                    pt.has_analytic = true;
                    if (spec.mc) {
                        const auto est = mc::se_from_gains(gains_for(cfg), cfg,
                                                           p_w, spec.seed);
                        const double denom = metrics::total_power_w(cfg, p_w);
                        pt.mc_value = cfg.bandwidth_hz * est.value / denom;
                        pt.mc_stderr = cfg.bandwidth_hz * est.stderr_ / denom;
                        pt.has_mc = true;
                    }
                    break;
                case Metric::CdfDistance: {
                    auto gains = gains_for(cfg);
                    const double rho_a =
                        p_w / cfg.noise_w() * path_gain(cfg);
                    std::sort(gains.begin(), gains.end());
                    const stats::GammaDist snr = stats::snr_dist(cfg, p_w);
                    const double n = static_cast<double>(gains.size());
                    double sup = 0.0;
                    for (std::size_t i = 0; i < gains.size(); ++i) {
                        const double f =
                            snr.cdf(rho_a * gains[i] * gains[i]);
                        sup = std::max(sup, std::fabs(f - i / n));
                        sup = std::max(sup, std::fabs((i + 1) / n - f));
                    }
                    pt.mc_value = sup;
                    pt.has_mc = true;
                    break;
                }
            }
            pt.ok = true;
        } catch (const std::exception& ex) {
            pt.ok = false;
            pt.error = ex.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

namespace {

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<MetricPoint>& points) {
    os << "sweep_var,metric,analytic,mc_value,mc_stderr,trials,seed\n";
    for (const auto& pt : points) {
        os << fmt17(pt.sweep_value) << ',' << metric_name(spec.metric) << ',';
        if (!pt.ok) {
            os << "nan";
        } else if (pt.has_analytic) {
            os << fmt17(pt.analytic);
        }
        os << ',';
        if (pt.ok && pt.has_mc) os << fmt17(pt.mc_value);
        os << ',';
        if (pt.ok && pt.has_mc) os << fmt17(pt.mc_stderr);
        os << ',';
        if (spec.mc) os << spec.trials;
        os << ',';
        if (spec.mc) os << spec.seed;
        os << '\n';
    }
}

void write_plot_script(std::ostream& os, const SweepSpec& spec,
                       const std::string& csv_path) {
    os << "# gnuplot script; run: gnuplot <this file>\n";
    os << "set datafile separator ','\n";
    os << "set xlabel '" << variable_name(spec.variable) << "'\n";
    os << "set ylabel '" << metric_name(spec.metric) << "'\n";
    const bool logy = spec.metric == Metric::Outage ||
                      spec.metric == Metric::OutageAsymptotic ||
                      spec.metric == Metric::Sep ||
                      spec.metric == Metric::SepAsymptotic;
    if (logy) os << "set logscale y\n";
    os << "set key left top\n";
    os << "plot '" << csv_path << "' using 1:3 skip 1 with lines title 'analytic'";
    if (spec.mc) {
        os << ", \\\n     '" << csv_path
           << "' using 1:4:5 skip 1 with yerrorbars title 'monte carlo'";
    }
    os << "\n";
}

void echo_config(std::ostream& os, const SweepSpec& spec) {
    const SystemConfig& c = spec.cfg;
    os << "# metric=" << metric_name(spec.metric)
       << " sweep=" << variable_name(spec.variable) << '=' << spec.start << ':'
       << spec.stop << ':' << spec.step << '\n';
    os << "# sectors=" << c.sectors << " elements-total=" << c.elements_total
       << " kappa-h=" << c.kappa_h << " kappa-g=" << c.kappa_g << '\n';
    os << "# dist-ris=" << c.dist_ris_m << " dist-user=" << c.dist_user_m
       << " eta-ris=" << c.eta_ris << " eta-user=" << c.eta_user
       << " gain-tx=" << c.gain_tx << " gain-rx=" << c.gain_rx << '\n';
    os << "# freq-hz=" << c.freq_hz << " bandwidth-hz=" << c.bandwidth_hz
       << " noise-dbm=" << c.noise_dbm << " users=" << c.users
       << " rate-bpcu=" << c.rate_bpcu << '\n';
    os << "# tx-power-dbm=" << spec.tx_power_dbm
       << " amp-efficiency=" << c.amp_efficiency << " p-ue-w=" << c.p_ue_w
       << " p-bs-w=" << c.p_bs_w << " p-switch-w=" << c.p_switch_w
       << " p-element-w=" << c.p_element_w << '\n';
    os << "# mc=" << (spec.mc ? "on" : "off") << " trials=" << spec.trials
       << " seed=" << spec.seed << '\n';
}

namespace {

bool parse_bool(const std::string& v) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw std::invalid_argument("expected on/off: " + v);
}

void apply_kv(SweepSpec& spec, const std::string& section,
              const std::string& key, const std::string& value) {
    SystemConfig& c = spec.cfg;
    const auto num = [&] { return std::stod(value); };
    const auto integer = [&] { return std::stoi(value); };
    if (section == "system") {
        if (key == "sectors") c.sectors = integer();
        else if (key == "elements-total") c.elements_total = integer();
        else if (key == "kappa-h") c.kappa_h = num();
        else if (key == "kappa-g") c.kappa_g = num();
        else if (key == "dist-ris") c.dist_ris_m = num();
        else if (key == "dist-user") c.dist_user_m = num();
        else if (key == "eta-ris") c.eta_ris = num();
        else if (key == "eta-user") c.eta_user = num();
        else if (key == "gain-tx") c.gain_tx = num();
        else if (key == "gain-rx") c.gain_rx = num();
        else if (key == "freq-hz") c.freq_hz = num();
        else if (key == "noise-dbm") c.noise_dbm = num();
        else if (key == "users") c.users = integer();
        else if (key == "rate-bpcu") c.rate_bpcu = num();
        else if (key == "tx-power-dbm") spec.tx_power_dbm = num();
        else throw std::invalid_argument("unknown [system] key: " + key);
    } else if (section == "power-model") {
        if (key == "amp-efficiency") c.amp_efficiency = num();
        else if (key == "p-ue-w") c.p_ue_w = num();
        else if (key == "p-bs-w") c.p_bs_w = num();
        else if (key == "p-switch-w") c.p_switch_w = num();
        else if (key == "p-element-w") c.p_element_w = num();
        else if (key == "bandwidth-hz") c.bandwidth_hz = num();
        else throw std::invalid_argument("unknown [power-model] key: " + key);
    } else if (section == "sweep") {
        if (key == "metric") spec.metric = metric_from_name(value);
        else if (key == "var") spec.variable = variable_from_name(value);
        else if (key == "start") spec.start = num();
        else if (key == "stop") spec.stop = num();
        else if (key == "step") spec.step = num();
        else if (key == "mc") spec.mc = parse_bool(value);
        else if (key == "trials") spec.trials = std::stoll(value);
        else if (key == "seed") spec.seed = std::stoull(value);
        else throw std::invalid_argument("unknown [sweep] key: " + key);
    } else {
        throw std::invalid_argument("unknown section: [" + section + "]");
    }
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void apply_config_text(const std::string& text, SweepSpec& spec) {
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        try {
            if (line.front() == '[') {
                if (line.back() != ']') throw std::invalid_argument("bad section");
                section = strip(line.substr(1, line.size() - 2));
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("expected key=value");
            }
            apply_kv(spec, section, strip(line.substr(0, eq)),
                     strip(line.substr(eq + 1)));
        } catch (const std::exception& ex) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": " + ex.what());
        }
    }
}

void apply_config_file(const std::string& path, SweepSpec& spec) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    apply_config_text(buf.str(), spec);
}

}  // namespace bdris::sweep
