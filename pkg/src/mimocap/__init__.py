"""mimocap: SISO/SIMO/MISO/MIMO link-capacity models, sweeps, and a seeded
Rayleigh-fading Monte-Carlo referee."""

__version__ = "0.1.0"

from .types import (  # noqa: E402
    AntennaConfig,
    Bandwidth,
    CapacityCurve,
    CapacityModel,
    LinkKind,
    ModelKind,
    ModelMismatchError,
    Snr,
    ValidationError,
    classify,
    db_to_linear,
    linear_to_db,
)
from .formulas import (  # noqa: E402
    CapacityResult,
    array_gain_capacity,
    evaluate,
    product_gain_capacity,
    siso_capacity,
    stc_capacity,
)
from .fading import (  # noqa: E402
    ChannelRealization,
    ErgodicEstimate,
    chunk_rng,
    draw_channel,
    ergodic_capacity,
    logdet_capacity,
)
from .combining import BranchSet, CombinerKind, combine_snr, combined_capacity  # noqa: E402
from .sweep import (  # noqa: E402
    FIGURE_PRESETS,
    PRESET_ORDERINGS,
    ComparisonDataset,
    OrderingReport,
    SweepSpec,
    assert_ordering,
    figure_preset,
    oracle_gap_report,
    run_sweep,
)

__all__ = [
    "AntennaConfig",
    "Bandwidth",
    "BranchSet",
    "CapacityCurve",
    "CapacityModel",
    "CapacityResult",
    "ChannelRealization",
    "CombinerKind",
    "ComparisonDataset",
    "ErgodicEstimate",
    "FIGURE_PRESETS",
    "LinkKind",
    "ModelKind",
    "ModelMismatchError",
    "OrderingReport",
    "PRESET_ORDERINGS",
    "Snr",
    "SweepSpec",
    "ValidationError",
    "array_gain_capacity",
    "assert_ordering",
    "chunk_rng",
    "classify",
    "combine_snr",
    "combined_capacity",
    "db_to_linear",
    "draw_channel",
    "ergodic_capacity",
    "evaluate",
    "figure_preset",
    "linear_to_db",
    "logdet_capacity",
    "oracle_gap_report",
    "product_gain_capacity",
    "run_sweep",
    "siso_capacity",
    "stc_capacity",
]
