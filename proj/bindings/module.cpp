// Python bindings for the closed-form link analysis and its Monte Carlo
// reference. Thin pass-through; all behavior lives in the C++ core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bdris/gammastats.hpp"
#include "bdris/metrics.hpp"
#include "bdris/montecarlo.hpp"
#include "bdris/specfun.hpp"
#include "bdris/system.hpp"

namespace py = pybind11;
using namespace bdris;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Closed-form and Monte Carlo analysis of a multi-sector "
              "reconfigurable-surface downlink";

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("sectors", &SystemConfig::sectors)
        .def_readwrite("elements_total", &SystemConfig::elements_total)
        .def_readwrite("kappa_h", &SystemConfig::kappa_h)
        .def_readwrite("kappa_g", &SystemConfig::kappa_g)
        .def_readwrite("dist_ris_m", &SystemConfig::dist_ris_m)
        .def_readwrite("dist_user_m", &SystemConfig::dist_user_m)
        .def_readwrite("eta_ris", &SystemConfig::eta_ris)
        .def_readwrite("eta_user", &SystemConfig::eta_user)
        .def_readwrite("gain_tx", &SystemConfig::gain_tx)
        .def_readwrite("gain_rx", &SystemConfig::gain_rx)
        .def_readwrite("freq_hz", &SystemConfig::freq_hz)
        .def_readwrite("bandwidth_hz", &SystemConfig::bandwidth_hz)
        .def_readwrite("noise_dbm", &SystemConfig::noise_dbm)
        .def_readwrite("users", &SystemConfig::users)
        .def_readwrite("rate_bpcu", &SystemConfig::rate_bpcu)
        .def_readwrite("p_ue_w", &SystemConfig::p_ue_w)
        .def_readwrite("p_bs_w", &SystemConfig::p_bs_w)
        .def_readwrite("p_switch_w", &SystemConfig::p_switch_w)
        .def_readwrite("p_element_w", &SystemConfig::p_element_w)
        .def_readwrite("amp_efficiency", &SystemConfig::amp_efficiency)
        .def("elements_per_sector", &SystemConfig::elements_per_sector)
        .def("noise_w", &SystemConfig::noise_w)
        .def("validate", &SystemConfig::validate);

    py::class_<stats::GammaDist>(m, "GammaDist")
        .def_readonly("shape", &stats::GammaDist::shape)
        .def_readonly("scale", &stats::GammaDist::scale)
        .def("mean", &stats::GammaDist::mean)
        .def("variance", &stats::GammaDist::variance)
        .def("pdf", &stats::GammaDist::pdf)
        .def("cdf", &stats::GammaDist::cdf)
        .def("log_cdf", &stats::GammaDist::log_cdf);

    py::class_<mc::Estimate>(m, "Estimate")
        .def_readonly("value", &mc::Estimate::value)
        .def_readonly("stderr", &mc::Estimate::stderr_)
        .def_readonly("trials", &mc::Estimate::trials)
        .def_readonly("seed", &mc::Estimate::seed);

    m.def("path_gain", &path_gain);
    m.def("dbm_to_watt", &dbm_to_watt);
    m.def("watt_to_dbm", &watt_to_dbm);
    m.def("eta_preset_for_kappa", &eta_preset_for_kappa);

    m.def("combined_gain_dist", &stats::combined_gain_dist,
          py::arg("elements_per_sector"), py::arg("kappa_h"),
          py::arg("kappa_g"));
    m.def("squared_gain_dist", &stats::squared_gain_dist);
    m.def("snr_dist", &stats::snr_dist, py::arg("cfg"), py::arg("tx_power_w"));

    m.def("outage", &metrics::outage, py::arg("cfg"), py::arg("tx_power_w"));
    m.def("outage_asymptotic", &metrics::outage_asymptotic);
    m.def("diversity_order", &metrics::diversity_order);
    m.def("sep_bpsk", &metrics::sep_bpsk, py::arg("cfg"), py::arg("tx_power_w"));
    m.def("sep_asymptotic", &metrics::sep_asymptotic);
    m.def("sep_mpsk", &metrics::sep_mpsk, py::arg("cfg"), py::arg("tx_power_w"),
          py::arg("mod_order"));
    m.def("se_jensen", &metrics::se_jensen);
    m.def("se_expected", &metrics::se_expected);
    m.def("energy_efficiency", &metrics::energy_efficiency);
    m.def("solve_power_for_outage_dbm", &metrics::solve_power_for_outage_dbm);
    m.def("solve_power_for_sep_dbm", &metrics::solve_power_for_sep_dbm);
    m.def("solve_power_for_se_dbm", &metrics::solve_power_for_se_dbm);
    m.def("solve_elements_for_outage", &metrics::solve_elements_for_outage,
          py::arg("cfg"), py::arg("tx_power_w"), py::arg("target"),
          py::arg("z_max") = 10000);

    m.def("mc_outage", &mc::outage, py::arg("cfg"), py::arg("tx_power_w"),
          py::arg("seed"), py::arg("trials"));
    m.def("mc_sep_bpsk", &mc::sep_bpsk, py::arg("cfg"), py::arg("tx_power_w"),
          py::arg("seed"), py::arg("trials"));
    m.def("mc_se", &mc::se, py::arg("cfg"), py::arg("tx_power_w"),
          py::arg("seed"), py::arg("trials"));
    m.def("snr_cdf_sup_distance", &mc::snr_cdf_sup_distance, py::arg("cfg"),
          py::arg("tx_power_w"), py::arg("seed"), py::arg("trials"));
}
