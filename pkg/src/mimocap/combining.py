"""Receive-diversity combining: selection, maximal-ratio, equal-gain.

Combining is defined at the SNR level (not on waveforms): branch i has
SNR_i = tx_power * a_i^2 / noise_power with i.i.d. equal-power noise per
branch. Equal-gain carries the factor n in its denominator — the noise power
of n co-phased unit-weight branches — since that is the one scheme where
normalization conventions differ across sources.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .formulas import CapacityResult, siso_capacity
from .types import Bandwidth, Snr, ValidationError, _require_finite


class CombinerKind(enum.Enum):
    SELECTION = "selection"
    MAXIMAL_RATIO = "maximal_ratio"
    EQUAL_GAIN = "equal_gain"


@dataclass(frozen=True)
class BranchSet:
    """Per-branch channel amplitudes |h_i| with a common noise power."""

    amplitudes: tuple[float, ...]
    noise_power: float

    def __post_init__(self) -> None:
        amplitudes = tuple(float(a) for a in self.amplitudes)
        if not amplitudes:
            raise ValidationError("branch set must have at least one branch")
        for a in amplitudes:
            a = _require_finite("branch amplitude", a)
            if a < 0:
                raise ValidationError(f"branch amplitude must be >= 0, got {a!r}")
        noise = _require_finite("noise_power", self.noise_power)
        if noise <= 0:
            raise ValidationError(f"noise_power must be > 0, got {noise!r}")
        object.__setattr__(self, "amplitudes", amplitudes)
        object.__setattr__(self, "noise_power", noise)


def combine_snr(kind: CombinerKind, branches: BranchSet, tx_power: float = 1.0) -> Snr:
    """Post-combining SNR for one branch-amplitude draw.

    selection:      max_i SNR_i
    maximal_ratio:  sum_i SNR_i
    equal_gain:     tx_power * (sum_i a_i)^2 / (n * noise_power)
    """
    tx_power = _require_finite("tx_power", tx_power)
    if tx_power <= 0:
        raise ValidationError(f"tx_power must be > 0, got {tx_power!r}")
    a = branches.amplitudes
    noise = branches.noise_power
    if kind is CombinerKind.SELECTION:
        return Snr(tx_power * max(x * x for x in a) / noise)
    if kind is CombinerKind.MAXIMAL_RATIO:
        return Snr(tx_power * sum(x * x for x in a) / noise)
    if kind is CombinerKind.EQUAL_GAIN:
        return Snr(tx_power * sum(a) ** 2 / (len(a) * noise))
    raise ValidationError(f"unknown combiner kind {kind!r}")


def combined_capacity(
    kind: CombinerKind, branches: BranchSet, b: Bandwidth, tx_power: float = 1.0
) -> CapacityResult:
    """Shannon capacity of the post-combining SNR."""
    return siso_capacity(b, combine_snr(kind, branches, tx_power))
