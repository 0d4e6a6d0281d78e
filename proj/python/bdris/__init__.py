"""Closed-form and Monte Carlo link analysis for multi-sector
reconfigurable-surface downlinks."""

from ._core import (
    Estimate,
    GammaDist,
    SystemConfig,
    combined_gain_dist,
    dbm_to_watt,
    diversity_order,
    energy_efficiency,
    eta_preset_for_kappa,
    mc_outage,
    mc_se,
    mc_sep_bpsk,
    outage,
    outage_asymptotic,
    path_gain,
    se_expected,
    se_jensen,
    sep_asymptotic,
    sep_bpsk,
    sep_mpsk,
    snr_cdf_sup_distance,
    snr_dist,
    solve_elements_for_outage,
    solve_power_for_outage_dbm,
    solve_power_for_se_dbm,
    solve_power_for_sep_dbm,
    squared_gain_dist,
    watt_to_dbm,
)

__all__ = [
    "Estimate",
    "GammaDist",
    "SystemConfig",
    "combined_gain_dist",
    "dbm_to_watt",
    "diversity_order",
    "energy_efficiency",
    "eta_preset_for_kappa",
    "mc_outage",
    "mc_se",
    "mc_sep_bpsk",
    "outage",
    "outage_asymptotic",
    "path_gain",
    "se_expected",
    "se_jensen",
    "sep_asymptotic",
    "sep_bpsk",
    "sep_mpsk",
    "snr_cdf_sup_distance",
    "snr_dist",
    "solve_elements_for_outage",
    "solve_power_for_outage_dbm",
    "solve_power_for_se_dbm",
    "solve_power_for_sep_dbm",
    "squared_gain_dist",
    "watt_to_dbm",
]
