#pragma once

// Sweep plumbing shared by the CLI and the tests: metric/variable
// naming, grid evaluation with optional Monte Carlo companion values,
// CSV emission with stable formatting, and the flat INI config reader.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bdris/system.hpp"

namespace bdris::sweep {

enum class Metric {
    Outage,
    OutageAsymptotic,
    Sep,
    SepAsymptotic,
    Se,
    SeSectorized,
    Ee,
    CdfDistance,
};

enum class Variable {
    TxPowerDbm,
    TotalElements,
    Sectors,
};

Metric metric_from_name(const std::string& name);
const char* metric_name(Metric m);
Variable variable_from_name(const std::string& name);
const char* variable_name(Variable v);

struct SweepSpec {
    Metric metric = Metric::Outage;
    Variable variable = Variable::TxPowerDbm;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    SystemConfig cfg;
    double tx_power_dbm = 10.0;  // fixed power when sweeping another variable
    bool mc = false;
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;

    void validate() const;  // range nonempty, step > 0, element grid on L
    std::vector<double> grid() const;
};

struct MetricPoint {
    double sweep_value = 0.0;
    bool ok = false;
    std::string error;  // set when the point failed to evaluate
    double analytic = 0.0;
    bool has_analytic = false;
    double mc_value = 0.0;
    double mc_stderr = 0.0;
    bool has_mc = false;
    bool mc_tail_warning = false;
};

/// Evaluates the grid in order. Per-point numeric failures are recorded
/// in the row; the sweep continues. Gain samples are cached per element
/// count, so power sweeps draw once.
std::vector<MetricPoint> run_sweep(const SweepSpec& spec);

/// CSV with header sweep_var,metric,analytic,mc_value,mc_stderr,trials,seed.
/// 17 significant digits, byte-stable for fixed inputs; absent values are
/// empty fields; failed points carry nan in the analytic column.
void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<MetricPoint>& points);

/// Standalone gnuplot script plotting the named CSV.
void write_plot_script(std::ostream& os, const SweepSpec& spec,
                       const std::string& csv_path);

/// Human-readable resolved-config echo (comment lines).
void echo_config(std::ostream& os, const SweepSpec& spec);

/// Flat INI with [system], [power-model], [sweep] sections; keys use the
/// CLI flag spellings. Unknown keys or malformed lines throw
/// std::invalid_argument with the offending line.
void apply_config_file(const std::string& path, SweepSpec& spec);
void apply_config_text(const std::string& text, SweepSpec& spec);

}  // namespace bdris::sweep
