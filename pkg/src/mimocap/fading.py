"""Seeded Monte-Carlo Rayleigh-fading capacity oracle.

Channel entries are i.i.d. circularly-symmetric complex Gaussian CN(0, 1)
(real and imaginary parts each N(0, 1/2)). Instantaneous capacity is the
standard log-det form B*log2 det(I + (snr/nT) * H * H†) with total transmit
power split evenly across the nT antennas.

Reproducibility contract: trials are partitioned into fixed chunks of
CHUNK_TRIALS; chunk c draws from its own generator seeded by
SeedSequence(entropy=seed, spawn_key=(c,)). Each trial consumes exactly
2*nR*nT uniform doubles (no rejection sampling), and Gaussians come from a
deterministic polar transform of those uniforms. The per-trial capacity array
is therefore a pure function of (config, snr, trials, seed) no matter how
chunks are scheduled, and the mean/stderr reduction (numpy pairwise
summation over the trial-ordered array) is fixed too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .types import AntennaConfig, Bandwidth, Snr, ValidationError

CHUNK_TRIALS = 8192


@dataclass(frozen=True)
class ChannelRealization:
    """One fading draw: nR x nT complex gain matrix."""

    gains: np.ndarray

    def __post_init__(self) -> None:
        gains = np.asarray(self.gains, dtype=np.complex128)
        if gains.ndim != 2:
            raise ValidationError(f"channel matrix must be 2-D, got shape {gains.shape}")
        if not (np.all(np.isfinite(gains.real)) and np.all(np.isfinite(gains.imag))):
            raise ValidationError("channel matrix entries must be finite")
        gains.setflags(write=False)
        object.__setattr__(self, "gains", gains)

    @property
    def n_rx(self) -> int:
        return self.gains.shape[0]

    @property
    def n_tx(self) -> int:
        return self.gains.shape[1]


@dataclass(frozen=True)
class ErgodicEstimate:
    mean_capacity: float
    std_error: float
    trials: int
    seed: int


def chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    """Generator for one chunk of trials; the documented stream-splitting rule."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(chunk_index,))
    return np.random.Generator(np.random.PCG64(ss))


def _gains_from_uniforms(u: np.ndarray) -> np.ndarray:
    # Polar form of CN(0,1): amplitude sqrt(-ln(1-u1)) is Rayleigh, phase 2*pi*u2
    # uniform. Exactly two uniforms per entry, never rejected.
    amp = np.sqrt(-np.log1p(-u[..., 0]))
    phase = 2.0 * np.pi * u[..., 1]
    return amp * np.exp(1j * phase)


def draw_channel(config: AntennaConfig, rng: np.random.Generator) -> ChannelRealization:
    """Draw one i.i.d. CN(0,1) channel matrix from the given generator."""
    u = rng.random((config.n_rx, config.n_tx, 2))
    return ChannelRealization(_gains_from_uniforms(u))


def logdet_capacity(h: ChannelRealization, b: Bandwidth, snr: Snr) -> float:
    """Instantaneous capacity B*log2 det(I + (snr/nT) * H * H†), in bit/s.

    The determinant comes from a Cholesky factorization of the (Hermitian
    positive-definite) argument, stable up to the 64-antenna cap.
    """
    return float(_logdet_capacity_batch(h.gains[np.newaxis], b, snr)[0])


def _logdet_capacity_batch(h: np.ndarray, b: Bandwidth, snr: Snr) -> np.ndarray:
    n_tx = h.shape[-1]
    n_rx = h.shape[-2]
    gram = np.broadcast_to(np.eye(n_rx, dtype=np.complex128), h.shape[:-2] + (n_rx, n_rx)).copy()
    gram += (snr.linear / n_tx) * (h @ np.conj(np.swapaxes(h, -1, -2)))
    chol = np.linalg.cholesky(gram)
    diag = np.real(np.diagonal(chol, axis1=-2, axis2=-1))
    return 2.0 * b.hertz * np.sum(np.log2(diag), axis=-1)


def ergodic_capacity(
    config: AntennaConfig, b: Bandwidth, snr: Snr, trials: int, seed: int
) -> ErgodicEstimate:
    """Mean and standard error of log-det capacity over seeded Rayleigh draws."""
    if not isinstance(trials, int) or isinstance(trials, bool) or trials < 1:
        raise ValidationError(f"trials must be a positive integer, got {trials!r}")
    if not 0 <= seed < 2**64:
        raise ValidationError(f"seed must be a 64-bit unsigned integer, got {seed!r}")

    caps = np.empty(trials)
    for chunk, start in enumerate(range(0, trials, CHUNK_TRIALS)):
        n = min(CHUNK_TRIALS, trials - start)
        rng = chunk_rng(seed, chunk)
        u = rng.random((n, config.n_rx, config.n_tx, 2))
        caps[start : start + n] = _logdet_capacity_batch(_gains_from_uniforms(u), b, snr)

    mean = float(np.mean(caps))
    if trials > 1:
        std_error = float(np.std(caps, ddof=1) / math.sqrt(trials))
    else:
        std_error = 0.0
    return ErgodicEstimate(mean, std_error, trials, seed)
