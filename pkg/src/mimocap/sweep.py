"""SNR sweeps over (config, model) series and figure-style comparison datasets.

Figure presets: all use B = 1 on a 0-20 dB grid with 81 points. That grid is
our choice, recorded in dataset provenance so runs are regenerable exactly.
Grid points are start + k*(stop-start)/(points-1) evaluated in floating point
exactly that way, so grids are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import __version__
from .fading import ergodic_capacity
from .formulas import evaluate
from .types import (
    AntennaConfig,
    Bandwidth,
    CapacityCurve,
    CapacityModel,
    ModelKind,
    Snr,
    ValidationError,
    db_to_linear,
)

FIGURE_PRESETS = ("figure7", "figure8", "figure9")

DEFAULT_START_DB = 0.0
DEFAULT_STOP_DB = 20.0
DEFAULT_POINTS = 81


@dataclass(frozen=True)
class SweepSpec:
    snr_start_db: float
    snr_stop_db: float
    points: int
    bandwidth: Bandwidth
    series: tuple[tuple[AntennaConfig, CapacityModel], ...]

    def __post_init__(self) -> None:
        if not self.snr_start_db < self.snr_stop_db:
            raise ValidationError(
                f"snr_start_db ({self.snr_start_db}) must be < snr_stop_db ({self.snr_stop_db})"
            )
        if not isinstance(self.points, int) or self.points < 2:
            raise ValidationError(f"points must be an integer >= 2, got {self.points!r}")
        series = tuple(self.series)
        if not series:
            raise ValidationError("series must be nonempty")
        if len(set(series)) != len(series):
            raise ValidationError("series must not contain duplicate (config, model) pairs")
        object.__setattr__(self, "series", series)

    def grid(self) -> list[float]:
        step_num = self.snr_stop_db - self.snr_start_db
        return [
            self.snr_start_db + k * step_num / (self.points - 1) for k in range(self.points)
        ]


@dataclass(frozen=True)
class ComparisonDataset:
    curves: tuple[CapacityCurve, ...]
    provenance: dict

    def __post_init__(self) -> None:
        curves = tuple(self.curves)
        grids = {c.snr_db for c in curves}
        if len(grids) > 1:
            raise ValidationError("all curves in a dataset must share one snr_db grid")
        object.__setattr__(self, "curves", curves)

    @property
    def snr_db(self) -> tuple[float, ...]:
        return self.curves[0].snr_db


def run_sweep(spec: SweepSpec) -> ComparisonDataset:
    """Evaluate every series of the spec on the shared dB grid."""
    grid = spec.grid()
    snrs = [db_to_linear(db) for db in grid]
    curves = []
    for config, model in spec.series:
        if model.kind is ModelKind.ERGODIC_MONTE_CARLO:
            estimates = [
                ergodic_capacity(config, spec.bandwidth, s, model.trials, model.seed)
                for s in snrs
            ]
            curve = CapacityCurve(
                config,
                model,
                tuple(zip(grid, (e.mean_capacity for e in estimates))),
                stderr=tuple(e.std_error for e in estimates),
            )
        else:
            try:
                values = [evaluate(model, spec.bandwidth, config, s).bits_per_second for s in snrs]
            except ValidationError as exc:
                raise ValidationError(
                    f"series {config.label}/{model.kind.value}: {exc}"
                ) from exc
            curve = CapacityCurve(config, model, tuple(zip(grid, values)))
        curves.append(curve)

    seeds = sorted(
        {m.seed for _, m in spec.series if m.kind is ModelKind.ERGODIC_MONTE_CARLO}
    )
    provenance = {
        "tool": "mimocap",
        "version": __version__,
        "snr_start_db": spec.snr_start_db,
        "snr_stop_db": spec.snr_stop_db,
        "points": spec.points,
        "bandwidth_hz": spec.bandwidth.hertz,
        "power_normalization": "ergodic log-det uses snr/nT (total power fixed)",
        "series": [
            {
                "config": c.label,
                "model": m.kind.value,
                **({"trials": m.trials, "seed": m.seed} if m.trials is not None else {}),
            }
            for c, m in spec.series
        ],
        "seeds": seeds,
    }
    return ComparisonDataset(tuple(curves), provenance)


def figure_preset(name: str) -> SweepSpec:
    """Preset series lists for the three comparison figures.

    figure7: array-gain on 2x1 and 3x1 (the 1x2/1x3 twins produce the same
             curves, asserted in tests rather than duplicated here).
    figure8: Shannon 1x1 plus product-gain 2x2, 3x3, 4x4.
    figure9: Shannon 1x1, array-gain 2x1/3x1, product-gain 2x2/3x3.
    """
    presets = {
        "figure7": [
            (AntennaConfig(2, 1), CapacityModel.array_gain()),
            (AntennaConfig(3, 1), CapacityModel.array_gain()),
        ],
        "figure8": [
            (AntennaConfig(1, 1), CapacityModel.shannon()),
            (AntennaConfig(2, 2), CapacityModel.product_gain()),
            (AntennaConfig(3, 3), CapacityModel.product_gain()),
            (AntennaConfig(4, 4), CapacityModel.product_gain()),
        ],
        "figure9": [
            (AntennaConfig(1, 1), CapacityModel.shannon()),
            (AntennaConfig(2, 1), CapacityModel.array_gain()),
            (AntennaConfig(3, 1), CapacityModel.array_gain()),
            (AntennaConfig(2, 2), CapacityModel.product_gain()),
            (AntennaConfig(3, 3), CapacityModel.product_gain()),
        ],
    }
    if name not in presets:
        raise ValidationError(
            f"unknown preset {name!r}; valid presets: {', '.join(FIGURE_PRESETS)}"
        )
    return SweepSpec(
        snr_start_db=DEFAULT_START_DB,
        snr_stop_db=DEFAULT_STOP_DB,
        points=DEFAULT_POINTS,
        bandwidth=Bandwidth(1.0),
        series=tuple(presets[name]),
    )


# Expected strict capacity ordering per preset, as series indices, best first.
PRESET_ORDERINGS = {
    "figure7": [1, 0],
    "figure8": [3, 2, 1, 0],
    "figure9": [4, 3, 2, 1, 0],
}


@dataclass(frozen=True)
class OrderingReport:
    expected_order: tuple[int, ...]
    series_names: tuple[str, ...]
    per_point: tuple[tuple[float, bool], ...]
    passed: bool

    def lines(self) -> list[str]:
        ordered = " > ".join(self.series_names[i] for i in self.expected_order)
        out = [f"expected order: {ordered}"]
        for db, ok in self.per_point:
            out.append(f"snr_db={db:g}: {'ok' if ok else 'VIOLATED'}")
        out.append(f"overall: {'pass' if self.passed else 'fail'}")
        return out


def assert_ordering(dataset: ComparisonDataset, expected_order: list[int]) -> OrderingReport:
    """Check a strict capacity ordering (best first) at every grid point."""
    n = len(dataset.curves)
    for i in expected_order:
        if not 0 <= i < n:
            raise ValidationError(f"series index {i} out of range for {n} curves")
    per_point = []
    for k, db in enumerate(dataset.snr_db):
        values = [dataset.curves[i].capacity[k] for i in expected_order]
        ok = all(a > b for a, b in zip(values, values[1:]))
        per_point.append((db, ok))
    passed = all(ok for _, ok in per_point)
    return OrderingReport(
        tuple(expected_order),
        tuple(c.name for c in dataset.curves),
        tuple(per_point),
        passed,
    )


def oracle_gap_report(
    configs: list[AntennaConfig] | None = None,
    snr_dbs: list[float] | None = None,
    trials: int = 10000,
    seed: int = 0,
    bandwidth: Bandwidth = Bandwidth(1.0),
) -> str:
    """Signed-gap table: closed-form product-gain capacity minus the fading mean.

    Informational only — the product-gain formula is a deterministic model and
    is not expected to match a Rayleigh-fading average, so there is no target
    value for these gaps. Deterministic for fixed (configs, snr_dbs, trials, seed).
    """
    if configs is None:
        configs = [AntennaConfig(2, 2), AntennaConfig(4, 4)]
    if snr_dbs is None:
        snr_dbs = [0.0, 10.0, 20.0]
    lines = [
        "# Closed-form product-gain model vs Monte-Carlo Rayleigh fading mean.",
        "# Informational: no reference value exists for these gaps; the closed",
        "# form is a deterministic model, not a fading average.",
        f"# trials={trials} seed={seed} bandwidth_hz={bandwidth.hertz:g}",
        "config,snr_db,closed_form,ergodic_mean,ergodic_stderr,gap",
    ]
    from .formulas import product_gain_capacity
    from .output import format_float

    for config in configs:
        for db in snr_dbs:
            snr = db_to_linear(db)
            closed = product_gain_capacity(bandwidth, config, snr).bits_per_second
            est = ergodic_capacity(config, bandwidth, snr, trials, seed)
            gap = closed - est.mean_capacity
            lines.append(
                ",".join(
                    [
                        config.label,
                        format_float(db),
                        format_float(closed),
                        format_float(est.mean_capacity),
                        format_float(est.std_error),
                        format_float(gap),
                    ]
                )
            )
    return "\n".join(lines) + "\n"
