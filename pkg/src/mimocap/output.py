"""CSV / JSON / gnuplot-script emission for comparison datasets.

CSV numbers use Python's shortest round-trip decimal form (with a bare
integer when the value is integral), so parsing the file back reproduces
every float bit-for-bit. Output is UTF-8 with a trailing newline and is
byte-identical across runs for identical inputs.
"""

from __future__ import annotations

import json
import math
import os
from pathlib import Path

from .sweep import ComparisonDataset
from .types import ModelKind

OUT_DIR_ENV = "MIMOCAP_OUT_DIR"


def format_float(value: float) -> str:
    """Shortest decimal that round-trips to the same double; '1' not '1.0'."""
    if math.isfinite(value) and abs(value) < 1e16 and value == int(value):
        return str(int(value))
    return repr(float(value))


def resolve_out_path(path: str | os.PathLike) -> Path:
    """Resolve a relative output path against $MIMOCAP_OUT_DIR when it is set."""
    path = Path(path)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not path.is_absolute():
        return Path(base) / path
    return path


def render_csv(dataset: ComparisonDataset) -> str:
    header = ["snr_db"] + [curve.name for curve in dataset.curves]
    rows = [",".join(header)]
    for k, db in enumerate(dataset.snr_db):
        cells = [format_float(db)] + [
            format_float(curve.capacity[k]) for curve in dataset.curves
        ]
        rows.append(",".join(cells))
    return "\n".join(rows) + "\n"


def emit_csv(dataset: ComparisonDataset, destination: str | os.PathLike) -> Path:
    path = resolve_out_path(destination)
    try:
        path.write_text(render_csv(dataset), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc
    return path


def render_json(dataset: ComparisonDataset) -> str:
    series = []
    for curve in dataset.curves:
        points = []
        for k, (db, cap) in enumerate(curve.points):
            point = {"snr_db": db, "capacity": cap}
            if curve.stderr is not None:
                point["stderr"] = curve.stderr[k]
            points.append(point)
        entry = {
            "name": curve.name,
            "config": {"n_tx": curve.config.n_tx, "n_rx": curve.config.n_rx},
            "model": curve.model.kind.value,
            "points": points,
        }
        if curve.model.kind is ModelKind.ERGODIC_MONTE_CARLO:
            entry["trials"] = curve.model.trials
            entry["seed"] = curve.model.seed
        series.append(entry)
    doc = {"provenance": dataset.provenance, "series": series}
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def emit_json(dataset: ComparisonDataset, destination: str | os.PathLike) -> Path:
    path = resolve_out_path(destination)
    try:
        path.write_text(render_json(dataset), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write JSON to {path}: {exc}") from exc
    return path


def render_plot_script(dataset: ComparisonDataset, csv_path: str | os.PathLike) -> str:
    """Self-contained gnuplot script rendering one line per series."""
    csv_name = str(csv_path)
    plot_items = []
    for i, curve in enumerate(dataset.curves):
        title = curve.name.replace("_", " ")
        plot_items.append(f"'{csv_name}' using 1:{i + 2} with lines title '{title}'")
    joined = ", \\\n     ".join(plot_items)
    return (
        "# gnuplot script; render with: gnuplot -p <this file>\n"
        "set datafile separator ','\n"
        "set key top left\n"
        "set grid\n"
        "set xlabel 'SNR (dB)'\n"
        "set ylabel 'Capacity (bit/s/Hz)'\n"
        f"plot {joined}\n"
    )


def emit_plot_script(
    dataset: ComparisonDataset,
    csv_path: str | os.PathLike,
    destination: str | os.PathLike,
) -> Path:
    path = resolve_out_path(destination)
    try:
        path.write_text(render_plot_script(dataset, csv_path), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write plot script to {path}: {exc}") from exc
    return path
