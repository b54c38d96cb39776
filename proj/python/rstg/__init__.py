from ._rstg import (
    TemporalGraph,
    sample_fnp,
    sample_permutation,
    foremost_forest,
    reach_counts,
    is_temporally_connected,
    largest_open,
    largest_closed,
    threshold_p,
    harmonic_like_sum,
    favsum_estimate,
    truncation_c,
    two_hop_bound,
    run_sweep,
    sweep_csv,
    run_ladder,
    run_waiting_time_study,
    run_selftest,
)

__all__ = [
    "TemporalGraph",
    "sample_fnp",
    "sample_permutation",
    "foremost_forest",
    "reach_counts",
    "is_temporally_connected",
    "largest_open",
    "largest_closed",
    "threshold_p",
    "harmonic_like_sum",
    "favsum_estimate",
    "truncation_c",
    "two_hop_bound",
    "run_sweep",
    "sweep_csv",
    "run_ladder",
    "run_waiting_time_study",
    "run_selftest",
]
