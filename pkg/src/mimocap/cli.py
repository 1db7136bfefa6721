"""Command-line front end.

Exit codes: 0 success, 1 validation/usage error, 2 I/O error, 3 ordering-check
failure. SNR is always dB at this boundary; linear ratios live inside the
library only. Relative output paths honor $MIMOCAP_OUT_DIR.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .combining import BranchSet, CombinerKind, combine_snr, combined_capacity
from .fading import ergodic_capacity
from .formulas import evaluate
from .output import emit_csv, emit_json, emit_plot_script, format_float
from .sweep import (
    FIGURE_PRESETS,
    PRESET_ORDERINGS,
    SweepSpec,
    assert_ordering,
    figure_preset,
    run_sweep,
)
from .types import (
    AntennaConfig,
    Bandwidth,
    CapacityModel,
    ModelKind,
    ValidationError,
    db_to_linear,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_ORDERING = 3

DEFAULT_TRIALS = 10000
DEFAULT_SEED = 0

_MODEL_NAMES = {kind.value: kind for kind in ModelKind}
_SCHEME_NAMES = {kind.value: kind for kind in CombinerKind}

# Config file schema: flat JSON object, unknown keys rejected.
_CONFIG_KEYS = {
    "snr_start_db",
    "snr_stop_db",
    "points",
    "bandwidth",
    "series",
    "out",
    "format",
    "plot_script",
    "seed",
    "trials",
}
_SERIES_KEYS = {"n_tx", "n_rx", "model", "trials", "seed"}


class _CliParser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _model_kind(name: str) -> ModelKind:
    if name not in _MODEL_NAMES:
        raise ValidationError(
            f"--model: unknown model {name!r}; valid: {', '.join(sorted(_MODEL_NAMES))}"
        )
    return _MODEL_NAMES[name]


def _build_model(kind: ModelKind, trials: int, seed: int) -> CapacityModel:
    if kind is ModelKind.ERGODIC_MONTE_CARLO:
        return CapacityModel.ergodic(trials, seed)
    return CapacityModel(kind)


def _parse_series_flag(text: str, trials: int, seed: int) -> tuple[AntennaConfig, CapacityModel]:
    # Inline series syntax: MODEL:NTXxNRX, e.g. product_gain:2x2
    try:
        model_name, geometry = text.split(":")
        n_tx_s, n_rx_s = geometry.lower().split("x")
        config = AntennaConfig(int(n_tx_s), int(n_rx_s))
    except (ValueError, TypeError) as exc:
        raise ValidationError(
            f"--series: expected MODEL:NTXxNRX (e.g. product_gain:2x2), got {text!r}"
        ) from exc
    return config, _build_model(_model_kind(model_name), trials, seed)


def _load_run_config(path: str) -> dict:
    try:
        raw = json.loads(open(path, encoding="utf-8").read())
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"--config: {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValidationError(f"--config: {path} must contain a JSON object")
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ValidationError(
            f"--config: unknown keys {sorted(unknown)}; valid: {sorted(_CONFIG_KEYS)}"
        )
    for entry in raw.get("series", []):
        if not isinstance(entry, dict):
            raise ValidationError("--config: series entries must be objects")
        bad = set(entry) - _SERIES_KEYS
        if bad:
            raise ValidationError(
                f"--config: unknown series keys {sorted(bad)}; valid: {sorted(_SERIES_KEYS)}"
            )
    return raw


def _sweep_spec_from_args(args: argparse.Namespace) -> tuple[SweepSpec, dict]:
    cfg = _load_run_config(args.config) if args.config else {}

    def pick(flag_value, key, default):
        if flag_value is not None:
            return flag_value
        return cfg.get(key, default)

    start = pick(args.snr_start_db, "snr_start_db", 0.0)
    stop = pick(args.snr_stop_db, "snr_stop_db", 20.0)
    points = pick(args.points, "points", 81)
    bandwidth = Bandwidth(pick(args.bandwidth, "bandwidth", 1.0))
    trials = pick(args.trials, "trials", DEFAULT_TRIALS)
    seed = pick(args.seed, "seed", DEFAULT_SEED)

    if args.series:
        series = [_parse_series_flag(s, trials, seed) for s in args.series]
    else:
        series = []
        for entry in cfg.get("series", []):
            kind = _model_kind(entry.get("model", ""))
            series.append(
                (
                    AntennaConfig(entry.get("n_tx", 1), entry.get("n_rx", 1)),
                    _build_model(kind, entry.get("trials", trials), entry.get("seed", seed)),
                )
            )
    if not series:
        raise ValidationError("--series: at least one series is required (flag or config file)")

    spec = SweepSpec(
        snr_start_db=float(start),
        snr_stop_db=float(stop),
        points=int(points),
        bandwidth=bandwidth,
        series=tuple(series),
    )
    io_opts = {
        "out": args.out if args.out is not None else cfg.get("out"),
        "format": args.format if args.format is not None else cfg.get("format", "csv"),
        "plot_script": (
            args.plot_script if args.plot_script is not None else cfg.get("plot_script")
        ),
    }
    return spec, io_opts


def _emit_dataset(dataset, out, fmt, plot_script) -> None:
    if out is None:
        raise ValidationError("--out: an output path is required")
    if fmt == "csv":
        path = emit_csv(dataset, out)
    elif fmt == "json":
        path = emit_json(dataset, out)
    else:
        raise ValidationError(f"--format: must be csv or json, got {fmt!r}")
    print(f"wrote {path}")
    if plot_script:
        if fmt != "csv":
            raise ValidationError("--plot-script: requires --format csv")
        script = emit_plot_script(dataset, path, plot_script)
        print(f"wrote {script}")


def _cmd_capacity(args: argparse.Namespace) -> int:
    config = AntennaConfig(args.ntx, args.nrx)
    model = _build_model(_model_kind(args.model), args.trials, args.seed)
    result = evaluate(model, Bandwidth(args.bandwidth), config, db_to_linear(args.snr_db))
    print(repr(result.bits_per_second))
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    spec, io_opts = _sweep_spec_from_args(args)
    dataset = run_sweep(spec)
    _emit_dataset(dataset, io_opts["out"], io_opts["format"], io_opts["plot_script"])
    return EXIT_OK


def _cmd_figure(args: argparse.Namespace) -> int:
    dataset = run_sweep(figure_preset(args.name))
    out = args.out if args.out is not None else f"{args.name}.csv"
    _emit_dataset(dataset, out, args.format, args.plot_script)
    return EXIT_OK


def _cmd_ergodic(args: argparse.Namespace) -> int:
    estimate = ergodic_capacity(
        AntennaConfig(args.ntx, args.nrx),
        Bandwidth(args.bandwidth),
        db_to_linear(args.snr_db),
        args.trials,
        args.seed,
    )
    print(
        f"mean_capacity={format_float(estimate.mean_capacity)} "
        f"std_error={format_float(estimate.std_error)} "
        f"trials={estimate.trials} seed={estimate.seed}"
    )
    return EXIT_OK


def _cmd_combine(args: argparse.Namespace) -> int:
    if args.scheme not in _SCHEME_NAMES:
        raise ValidationError(
            f"--scheme: unknown scheme {args.scheme!r}; valid: {', '.join(sorted(_SCHEME_NAMES))}"
        )
    kind = _SCHEME_NAMES[args.scheme]
    branches = BranchSet(tuple(args.amplitudes), args.noise_power)
    snr = combine_snr(kind, branches, args.tx_power)
    capacity = combined_capacity(kind, branches, Bandwidth(args.bandwidth), args.tx_power)
    print(
        f"combined_snr_linear={format_float(snr.linear)} "
        f"capacity={format_float(capacity.bits_per_second)}"
    )
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    dataset = run_sweep(figure_preset(args.name))
    report = assert_ordering(dataset, PRESET_ORDERINGS[args.name])
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_ORDERING


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(prog="mimocap", description=__doc__)
    parser.add_argument("--version", action="version", version=f"mimocap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity", parents=[], help="single-point capacity")
    p.add_argument("--model", required=True, choices=sorted(_MODEL_NAMES))
    p.add_argument("--ntx", type=int, default=1)
    p.add_argument("--nrx", type=int, default=1)
    p.add_argument("--snr-db", type=float, required=True)
    p.add_argument("--bandwidth", type=float, default=1.0)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_capacity)

    p = sub.add_parser("sweep", help="SNR sweep over one or more series")
    p.add_argument("--config", help="JSON run-config file; inline flags override it")
    p.add_argument("--snr-start-db", type=float)
    p.add_argument("--snr-stop-db", type=float)
    p.add_argument("--points", type=int)
    p.add_argument("--bandwidth", type=float)
    p.add_argument(
        "--series",
        action="append",
        metavar="MODEL:NTXxNRX",
        help="repeatable, e.g. --series shannon:1x1 --series product_gain:2x2",
    )
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--plot-script", dest="plot_script")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("figure", help="run a preset comparison figure")
    p.add_argument("name", choices=list(FIGURE_PRESETS))
    p.add_argument("--out")
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.add_argument("--plot-script", dest="plot_script")
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("ergodic", help="Monte-Carlo Rayleigh ergodic capacity")
    p.add_argument("--ntx", type=int, required=True)
    p.add_argument("--nrx", type=int, required=True)
    p.add_argument("--snr-db", type=float, required=True)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--bandwidth", type=float, default=1.0)
    p.set_defaults(func=_cmd_ergodic)

    p = sub.add_parser("combine", help="receive-diversity combining of branch amplitudes")
    p.add_argument("--scheme", required=True, choices=sorted(_SCHEME_NAMES))
    p.add_argument("--amplitudes", type=float, nargs="+", required=True)
    p.add_argument("--noise-power", type=float, default=1.0)
    p.add_argument("--tx-power", type=float, default=1.0)
    p.add_argument("--bandwidth", type=float, default=1.0)
    p.set_defaults(func=_cmd_combine)

    p = sub.add_parser("check", help="run the ordering check for a preset figure")
    p.add_argument("name", choices=list(FIGURE_PRESETS))
    p.set_defaults(func=_cmd_check)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_VALIDATION
    except ValidationError as exc:
        print(f"mimocap: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"mimocap: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
