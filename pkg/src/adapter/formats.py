"""
Author: Brian Gunnison

Brief: Readers and renderers for every file format (text, JSON, CSV).

Details: Exact values render as "p/q" followed by a decimal column; floats
render with the configured precision. All renderers return strings so that
the caller decides between stdout and --out. Output is byte-stable for
identical inputs.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Callable, Iterable, List, Optional, Sequence, Union

from pydantic import ValidationError

from src.analytic.measures import DiscreteMeasure
from src.cumulants.sequences import CumulantSequence, MomentSequence
from src.errors import UsageError
from src.planner.experiment_plan import CycleTypeFile, DiagramFile, MeasureFile, SequenceFile
from src.rmt.models import EmpiricalSpectrum, EntryCumulantRow, MomentRow
from src.util.rational import Number, format_decimal, format_rational, is_exact
from src.young.characters import CycleType
from src.young.diagrams import InterlacingCoords, YoungDiagram

AnySequence = Union[MomentSequence, CumulantSequence]


def read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from e


def _validated(model: Any, data: Any, path: Union[str, Path]) -> Any:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise UsageError(f"{path}: {e}") from e


def read_sequence_file(path: Union[str, Path]) -> AnySequence:
    """A bare JSON array is a moment sequence; an object may carry a kind tag."""
    data = read_json(path)
    if isinstance(data, list):
        data = {"kind": "moments", "values": data}
    return _validated(SequenceFile, data, path).to_sequence()


def read_measure_file(path: Union[str, Path]) -> DiscreteMeasure:
    return _validated(MeasureFile, read_json(path), path).to_measure()


def read_diagram_file(path: Union[str, Path]) -> Union[YoungDiagram, InterlacingCoords]:
    return _validated(DiagramFile, read_json(path), path).to_shape()


def read_cycle_type_file(path: Union[str, Path]) -> CycleType:
    return _validated(CycleTypeFile, read_json(path), path).to_cycle_type()


def sequence_to_json(seq: AnySequence) -> str:
    kind = "moments" if isinstance(seq, MomentSequence) else seq.kind
    return json.dumps({"kind": kind, "values": [format_rational(v) for v in seq.values]})


def measure_to_json(m: DiscreteMeasure) -> str:
    return json.dumps({"atoms": [{"x": format_rational(x), "w": format_rational(w)} for x, w in m.atoms]})


def render_value(v: Number, precision: int) -> str:
    """'p/q (decimal)' for exact values, the decimal alone for floats."""
    if is_exact(v):
        return f"{format_rational(v)} ({format_decimal(v, precision)})"
    return format_decimal(v, precision)


def render_sequence(label: str, seq: AnySequence, fmt: str, precision: int) -> str:
    if fmt == "json":
        return sequence_to_json(seq)
    if fmt == "csv":
        return render_csv(["k", label, "decimal"],
                          [(k, format_rational(v), format_decimal(v, precision)) for k, v in enumerate(seq.values, 1)])
    return "\n".join(f"{label}{k} = {render_value(v, precision)}" for k, v in enumerate(seq.values, 1))


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue().rstrip("\n")


def histogram_csv(spectrum: EmpiricalSpectrum, density: Optional[Callable[[float], float]], precision: int) -> str:
    """bin_left, bin_right, count[, predicted_density] with the density at the bin midpoint."""
    if spectrum.counts is None or spectrum.edges is None:
        raise UsageError("Spectrum has no histogram; pass --bins")
    header = ["bin_left", "bin_right", "count"] + (["predicted_density"] if density else [])
    rows: List[List[str]] = []
    for i, c in enumerate(spectrum.counts):
        lo, hi = float(spectrum.edges[i]), float(spectrum.edges[i + 1])
        row = [format_decimal(lo, precision), format_decimal(hi, precision), str(int(c))]
        if density:
            row.append(format_decimal(density(0.5 * (lo + hi)), precision))
        rows.append(row)
    return render_csv(header, rows)


def moment_rows_table(rows: Sequence[MomentRow], fmt: str, precision: int) -> str:
    if fmt == "json":
        return json.dumps([
            {"k": r.k, "empirical": r.empirical.value, "stderr": r.empirical.stderr,
             "trials": r.empirical.trials, "predicted": r.predicted}
            for r in rows
        ])
    cells = [(r.k, format_decimal(r.empirical.value, precision), format_decimal(r.empirical.stderr, precision),
              format_decimal(r.predicted, precision)) for r in rows]
    header = ["k", "empirical", "stderr", "predicted"]
    if fmt == "csv":
        return render_csv(header, cells)
    return _text_table(header, cells)


def entry_cumulant_table(rows: Sequence[EntryCumulantRow], fmt: str, precision: int) -> str:
    header = ["n", "C_n", "stderr", "C_n/N", "C_n/N^2", "R_n/n"]
    if fmt == "json":
        return json.dumps([
            {"n": r.n, "cumulant": r.cumulant, "stderr": r.stderr, "per_n": r.per_n,
             "per_n2": r.per_n2, "reference": r.reference}
            for r in rows
        ])
    cells = [(r.n,) + tuple(format_decimal(v, precision) for v in (r.cumulant, r.stderr, r.per_n, r.per_n2, r.reference))
             for r in rows]
    if fmt == "csv":
        return render_csv(header, cells)
    return _text_table(header, cells)


def _text_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cols = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cols)


def write_output(text: str, out: Optional[Union[str, Path]] = None) -> None:
    payload = text if text.endswith("\n") else text + "\n"
    if out is None or str(out) == "-":
        sys.stdout.write(payload)
        return
    try:
        Path(out).write_text(payload, encoding="utf-8")
    except OSError as e:
        raise UsageError(f"Cannot write {out}: {e}") from e
