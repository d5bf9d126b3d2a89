# SPDX-License-Identifier: Apache-2.0
"""Wideband/subband amplitude quantization for Type-2 codebook CSI feedback.

The package wraps the C++ core: the 3-bit WB / 1-bit SB quantizers, the
linear-average, optimal and sub-optimal WB amplitude estimators with their
brute-force oracle, Type-2 precoder assembly, and the Monte-Carlo RMS-NSQE
sweep harness.
"""

from ._core import (
    AntennaDims,
    BeamSet,
    DbConvention,
    EstimatorResult,
    FeedbackMode,
    GaussianRng,
    LayerCoefficients,
    OracleResult,
    Oversampling,
    PrecoderMatrix,
    PskConstellation,
    QuantizedFeedback,
    RegionCandidate,
    SbLevelPair,
    SubbandAmplitudeVector,
    SweepConfig,
    SweepRow,
    WbLevelGrid,
    WbMethod,
    __version__,
    assemble_layer,
    assemble_precoder,
    brute_force_oracle,
    build_wb_grid,
    compute_feedback,
    derive_stream,
    evaluate_estimator,
    from_db,
    generate_dft_beam,
    generate_sb_amplitudes,
    linear_average_wb,
    make_beam_set,
    make_layer_coefficients,
    make_layer_coefficients_from_indices,
    optimal_region_candidates,
    optimal_wb,
    psk_phase,
    quantize_sb_index_db,
    quantize_sb_linear,
    quantize_wb_index,
    rnsqe,
    run_sweep,
    sb_levels_for_beam,
    suboptimal_wb,
    to_db,
    wb_level_amplitude,
    wb_step_db,
    write_csv,
)

__all__ = [
    "AntennaDims",
    "BeamSet",
    "DbConvention",
    "EstimatorResult",
    "FeedbackMode",
    "GaussianRng",
    "LayerCoefficients",
    "OracleResult",
    "Oversampling",
    "PrecoderMatrix",
    "PskConstellation",
    "QuantizedFeedback",
    "RegionCandidate",
    "SbLevelPair",
    "SubbandAmplitudeVector",
    "SweepConfig",
    "SweepRow",
    "WbLevelGrid",
    "WbMethod",
    "__version__",
    "assemble_layer",
    "assemble_precoder",
    "brute_force_oracle",
    "build_wb_grid",
    "compute_feedback",
    "derive_stream",
    "evaluate_estimator",
    "from_db",
    "generate_dft_beam",
    "generate_sb_amplitudes",
    "linear_average_wb",
    "make_beam_set",
    "make_layer_coefficients",
    "make_layer_coefficients_from_indices",
    "optimal_region_candidates",
    "optimal_wb",
    "psk_phase",
    "quantize_sb_index_db",
    "quantize_sb_linear",
    "quantize_wb_index",
    "rnsqe",
    "run_sweep",
    "sb_levels_for_beam",
    "suboptimal_wb",
    "to_db",
    "wb_level_amplitude",
    "wb_step_db",
    "write_csv",
]
