"""Closed-form link capacities for the four deterministic models.

All formulas share the shape B*log2(1 + g*snr) for some gain g; log2(1+x) is
evaluated as log1p(x)/ln(2) so sub-0.01 linear SNR points keep full precision.
Capacities are in bit/s (bit/s/Hz when B = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .types import (
    AntennaConfig,
    Bandwidth,
    CapacityModel,
    ModelKind,
    ModelMismatchError,
    Snr,
    ValidationError,
)

_LN2 = math.log(2.0)


def _log2_1p(x: float) -> float:
    return math.log1p(x) / _LN2


@dataclass(frozen=True)
class CapacityResult:
    bits_per_second: float
    model: CapacityModel
    config: AntennaConfig


def siso_capacity(b: Bandwidth, snr: Snr) -> CapacityResult:
    """Shannon capacity of a single-antenna link: B*log2(1 + snr)."""
    c = b.hertz * _log2_1p(snr.linear)
    return CapacityResult(c, CapacityModel.shannon(), AntennaConfig(1, 1))


def array_gain_capacity(b: Bandwidth, n: int, snr: Snr) -> CapacityResult:
    """SIMO/MISO capacity with array gain n: B*log2(1 + n*snr).

    n is the receive-antenna count for SIMO and the transmit-antenna count
    for MISO; the other side of the link has a single antenna.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError(f"array gain n must be a positive integer, got {n!r}")
    c = b.hertz * _log2_1p(n * snr.linear)
    config = AntennaConfig(1, n) if n > 1 else AntennaConfig(1, 1)
    return CapacityResult(c, CapacityModel.array_gain(), config)


def product_gain_capacity(b: Bandwidth, config: AntennaConfig, snr: Snr) -> CapacityResult:
    """MIMO capacity with full product gain: B*log2(1 + nT*nR*snr)."""
    c = b.hertz * _log2_1p(config.n_tx * config.n_rx * snr.linear)
    return CapacityResult(c, CapacityModel.product_gain(), config)


def stc_capacity(b: Bandwidth, config: AntennaConfig, snr: Snr) -> CapacityResult:
    """Space-time-coded capacity: min(nT, nR) * B * log2(1 + snr)."""
    c = min(config.n_tx, config.n_rx) * b.hertz * _log2_1p(snr.linear)
    return CapacityResult(c, CapacityModel.space_time_coded(), config)


def evaluate(
    model: CapacityModel, b: Bandwidth, config: AntennaConfig, snr: Snr
) -> CapacityResult:
    """Dispatch a capacity model over one config/SNR point.

    ARRAY_GAIN takes n = max(nT, nR) and requires the other side to be 1;
    a config with both counts > 1 is a model mismatch. The ergodic model
    delegates to the fading oracle and reports its mean.
    """
    if model.kind is ModelKind.SHANNON:
        if config.n_tx != 1 or config.n_rx != 1:
            raise ModelMismatchError(
                f"shannon model requires a 1x1 config, got {config.label}"
            )
        return siso_capacity(b, snr)
    if model.kind is ModelKind.ARRAY_GAIN:
        if config.n_tx > 1 and config.n_rx > 1:
            raise ModelMismatchError(
                f"array_gain model requires nT=1 or nR=1, got {config.label}"
            )
        result = array_gain_capacity(b, max(config.n_tx, config.n_rx), snr)
        return CapacityResult(result.bits_per_second, model, config)
    if model.kind is ModelKind.PRODUCT_GAIN:
        return product_gain_capacity(b, config, snr)
    if model.kind is ModelKind.SPACE_TIME_CODED:
        return stc_capacity(b, config, snr)
    if model.kind is ModelKind.ERGODIC_MONTE_CARLO:
        from .fading import ergodic_capacity

        estimate = ergodic_capacity(config, b, snr, model.trials, model.seed)
        return CapacityResult(estimate.mean_capacity, model, config)
    raise ValidationError(f"unknown model kind {model.kind!r}")
