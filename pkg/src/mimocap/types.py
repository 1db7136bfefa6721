"""Shared value types: SNR, antenna configuration, bandwidth, model tags, curves.

SNR is stored as a linear power ratio everywhere inside the library; dB values
appear only at I/O boundaries (CLI flags, CSV columns). All types are frozen
dataclasses and safe to share across threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

MAX_ANTENNAS = 64


class ValidationError(ValueError):
    """Raised when a domain value violates its invariants."""


class ModelMismatchError(ValidationError):
    """Raised when a capacity model is applied to an incompatible antenna config."""


class LinkKind(enum.Enum):
    SISO = "siso"
    SIMO = "simo"
    MISO = "miso"
    MIMO = "mimo"


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Snr:
    """Signal-to-noise power ratio, linear (dimensionless)."""

    linear: float

    def __post_init__(self) -> None:
        linear = _require_finite("snr.linear", self.linear)
        if linear < 0:
            raise ValidationError(f"snr.linear must be >= 0, got {linear!r}")
        object.__setattr__(self, "linear", linear)

    @property
    def db(self) -> float:
        return linear_to_db(self.linear)

    @classmethod
    def from_db(cls, db: float) -> "Snr":
        return db_to_linear(db)


def db_to_linear(db: float) -> Snr:
    """Convert a dB power ratio to a linear Snr: 10^(db/10)."""
    db = _require_finite("snr_db", db)
    return Snr(10.0 ** (db / 10.0))


def linear_to_db(linear: float) -> float:
    """Convert a positive linear power ratio to dB: 10*log10(x)."""
    linear = _require_finite("snr_linear", linear)
    if linear <= 0:
        raise ValidationError(f"snr_linear must be > 0 for dB conversion, got {linear!r}")
    return 10.0 * math.log10(linear)


@dataclass(frozen=True)
class AntennaConfig:
    """Transmit/receive antenna counts. Counts are capped at MAX_ANTENNAS."""

    n_tx: int
    n_rx: int

    def __post_init__(self) -> None:
        for name, n in (("n_tx", self.n_tx), ("n_rx", self.n_rx)):
            if not isinstance(n, int) or isinstance(n, bool):
                raise ValidationError(f"{name} must be an integer, got {n!r}")
            if not 1 <= n <= MAX_ANTENNAS:
                raise ValidationError(f"{name} must be in [1, {MAX_ANTENNAS}], got {n}")

    def kind(self) -> LinkKind:
        if self.n_tx == 1 and self.n_rx == 1:
            return LinkKind.SISO
        if self.n_tx == 1:
            return LinkKind.SIMO
        if self.n_rx == 1:
            return LinkKind.MISO
        return LinkKind.MIMO

    @property
    def label(self) -> str:
        return f"{self.n_tx}x{self.n_rx}"


def classify(config: AntennaConfig) -> LinkKind:
    """Classify a config as SISO/SIMO/MISO/MIMO."""
    return config.kind()


@dataclass(frozen=True)
class Bandwidth:
    """Channel bandwidth in Hz. Defaults to 1 for normalized (bit/s/Hz) sweeps."""

    hertz: float = 1.0

    def __post_init__(self) -> None:
        hertz = _require_finite("bandwidth.hertz", self.hertz)
        if hertz <= 0:
            raise ValidationError(f"bandwidth.hertz must be > 0, got {hertz!r}")
        object.__setattr__(self, "hertz", hertz)


class ModelKind(enum.Enum):
    SHANNON = "shannon"
    ARRAY_GAIN = "array_gain"
    PRODUCT_GAIN = "product_gain"
    SPACE_TIME_CODED = "stc"
    ERGODIC_MONTE_CARLO = "ergodic"


@dataclass(frozen=True)
class CapacityModel:
    """Which capacity formula to apply.

    ERGODIC_MONTE_CARLO carries the trial count and RNG seed; the other kinds
    are deterministic closed forms and carry neither.
    """

    kind: ModelKind
    trials: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind is ModelKind.ERGODIC_MONTE_CARLO:
            if self.trials is None or self.trials < 1:
                raise ValidationError(
                    f"ergodic model requires trials >= 1, got {self.trials!r}"
                )
            if self.seed is None or not 0 <= self.seed < 2**64:
                raise ValidationError(
                    f"ergodic model requires a 64-bit unsigned seed, got {self.seed!r}"
                )
        elif self.trials is not None or self.seed is not None:
            raise ValidationError(
                f"trials/seed are only valid for the ergodic model, not {self.kind.value}"
            )

    @classmethod
    def shannon(cls) -> "CapacityModel":
        return cls(ModelKind.SHANNON)

    @classmethod
    def array_gain(cls) -> "CapacityModel":
        return cls(ModelKind.ARRAY_GAIN)

    @classmethod
    def product_gain(cls) -> "CapacityModel":
        return cls(ModelKind.PRODUCT_GAIN)

    @classmethod
    def space_time_coded(cls) -> "CapacityModel":
        return cls(ModelKind.SPACE_TIME_CODED)

    @classmethod
    def ergodic(cls, trials: int, seed: int) -> "CapacityModel":
        return cls(ModelKind.ERGODIC_MONTE_CARLO, trials=trials, seed=seed)


@dataclass(frozen=True)
class CapacityCurve:
    """Ordered (snr_db, capacity) samples for one (config, model) pair."""

    config: AntennaConfig
    model: CapacityModel
    points: tuple[tuple[float, float], ...]
    stderr: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        points = tuple((float(db), float(c)) for db, c in self.points)
        for db, c in points:
            _require_finite("snr_db", db)
            c = _require_finite("capacity", c)
            if c < 0:
                raise ValidationError(f"capacity must be >= 0, got {c!r}")
        for (a, _), (b, _) in zip(points, points[1:]):
            if not a < b:
                raise ValidationError("curve points must be strictly increasing in snr_db")
        object.__setattr__(self, "points", points)
        if self.stderr is not None:
            stderr = tuple(float(s) for s in self.stderr)
            if len(stderr) != len(points):
                raise ValidationError("stderr length must match points length")
            object.__setattr__(self, "stderr", stderr)

    @property
    def snr_db(self) -> tuple[float, ...]:
        return tuple(db for db, _ in self.points)

    @property
    def capacity(self) -> tuple[float, ...]:
        return tuple(c for _, c in self.points)

    @property
    def name(self) -> str:
        """Series name used in CSV headers and legends: <kind>_<nT>x<nR>_<model>."""
        return f"{self.config.kind().value}_{self.config.label}_{self.model.kind.value}"
