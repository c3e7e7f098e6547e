"""Simulation and ergodicity analysis for randomly switched jump processes."""

import sys

from ._core import (  # noqa: F401
    ChainTrajectory,
    ConstantsReport,
    CorrespondenceReport,
    CoupledState,
    CoupledTrace,
    HybridMetric,
    HybridState,
    ModelSpec,
    PresetBundle,
    RateEstimate,
    RngStream,
    build_preset,
    cli_main,
    compute_constants,
    estimate_chain_contraction,
    fm_distance,
    hybrid_distance,
    invariant_correspondence_test,
    process_at,
    simulate_chain,
    simulate_coupled,
    truncated_distance,
)


def main() -> int:
    return sys.exit(cli_main(sys.argv[1:]))
