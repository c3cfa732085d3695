"""
Author: Brian Gunnison

Brief: Subcommand implementations behind freecalc.py (nc, cumulants, freeconv,
diagram, rmt).

Details: Each cmd_* validates its inputs, runs the computation and returns the
rendered output as a string. Errors surface as FreeCalcError subclasses; the
entry script maps them to exit codes.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.adapter import formats
from src.analytic import measures
from src.analytic.convolution import dilate, free_compress, free_convolve, predicted_sum_law
from src.analytic.measures import NamedLaw, moments_of, parse_law
from src.combinat.partitions import catalan, iter_nc
from src.combinat.permutations import nc_to_permutation
from src.cumulants.mixed import FreeFamilySpec, free_mixed_moment
from src.cumulants.sequences import CumulantSequence, MomentSequence, default_order
from src.cumulants.transforms import (
    classical_cumulants_from_moments,
    free_cumulants_from_moments,
    moments_from_classical_cumulants,
    moments_from_free_cumulants,
)
from src.errors import UsageError
from src.planner.experiment_plan import ExperimentConfig, load_config_file, resolve_preset, to_fraction
from src.rmt import experiments
from src.rmt.models import MatrixModel, SpectrumResult
from src.rmt.spectra import explicit_spectrum, spectrum_measure, spectrum_of
from src.util import log
from src.util.env import get_env_str
from src.util.rational import format_decimal, format_rational
from src.validate.normalizer import normalize_config
from src.young.characters import (
    CycleType,
    character_error,
    character_estimate,
    factorization_defect,
    mn_cap,
    mn_character,
)
from src.young.diagrams import InterlacingCoords, YoungDiagram, balanced_check, diagram_to_interlacing, interlacing_to_diagram
from src.young.induction import (
    induce_shape_prediction,
    induced_decomposition_oracle,
    induced_moment_average,
    restrict_shape_prediction,
    restricted_decomposition_oracle,
    restricted_moment_average,
)
from src.young.transition import diagram_free_cumulants, transition_measure

LABELS = {"moments": "m", "free": "R", "classical": "C"}


# ---------- nc ----------

def cmd_nc(n: int, perm: bool = False, fmt: str = "text") -> str:
    parts = list(iter_nc(n))
    rows = [(str(p), str(nc_to_permutation(p))) for p in parts]
    count, cat = len(parts), catalan(n)
    if fmt == "json":
        payload: Dict[str, Any] = {"n": n, "partitions": [r[0] for r in rows], "count": count, "catalan": cat}
        if perm:
            payload["permutations"] = [r[1] for r in rows]
        return json.dumps(payload)
    if fmt == "csv":
        return formats.render_csv(["partition", "permutation"] if perm else ["partition"],
                                  [r if perm else r[:1] for r in rows])
    lines = [f"{p}  {s}" if perm else p for p, s in rows]
    lines.append(f"count={count} catalan={cat}")
    return "\n".join(lines)


# ---------- cumulants ----------

def _as_moments(seq: Union[MomentSequence, CumulantSequence]) -> MomentSequence:
    if isinstance(seq, MomentSequence):
        return seq
    return moments_from_free_cumulants(seq) if seq.kind == "free" else moments_from_classical_cumulants(seq)


def load_moments(source: str, order: Optional[int] = None) -> MomentSequence:
    """A law string, or a JSON file holding a sequence or a measure.

    A sequence file keeps its own length K unless an order is given.
    """
    k = default_order() if order is None else order
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        data = formats.read_json(path)
        if isinstance(data, dict) and "atoms" in data:
            return moments_of(formats.read_measure_file(path), k)
        m = _as_moments(formats.read_sequence_file(path))
        if order is None:
            log.info(f"Order K={m.order} taken from {path.name}")
            return m
        return m.truncate(k)
    return moments_of(parse_law(source), k)


def cmd_cumulants(
    moments_file: Optional[str] = None,
    law: Optional[str] = None,
    kind: str = "free",
    order: Optional[int] = None,
    fmt: str = "text",
    precision: int = 12,
) -> str:
    if (moments_file is None) == (law is None):
        raise UsageError("Give exactly one of --moments FILE or --law NAME")
    m = load_moments(moments_file or law or "", order)
    if kind == "free":
        out: Union[MomentSequence, CumulantSequence] = free_cumulants_from_moments(m)
    elif kind == "classical":
        out = classical_cumulants_from_moments(m)
    elif kind == "moments":
        out = m
    else:
        raise UsageError(f"Unknown kind {kind!r}")
    return formats.render_sequence(LABELS[kind], out, fmt, precision)


# ---------- freeconv ----------

def _law_or_none(source: str) -> Optional[NamedLaw]:
    try:
        return parse_law(source)
    except UsageError:
        return None


def cmd_freeconv(
    a: str,
    b: str,
    order: Optional[int] = None,
    compress: Optional[str] = None,
    scale: Optional[str] = None,
    fmt: str = "text",
    precision: int = 12,
) -> str:
    k = default_order() if order is None else order
    m = free_convolve(load_moments(a, k), load_moments(b, k), k)
    law_a, law_b = _law_or_none(a), _law_or_none(b)
    named = predicted_sum_law(law_a, law_b) if law_a and law_b else None
    if compress is not None:
        m = free_compress(m, to_fraction(compress))
        named = None
    if scale is not None:
        m = dilate(m, to_fraction(scale))
        named = None
    r = free_cumulants_from_moments(m)
    if fmt == "json":
        return json.dumps({
            "moments": [format_rational(v) for v in m.values],
            "free_cumulants": [format_rational(v) for v in r.values],
            "law": str(named) if named else None,
        })
    if fmt == "csv":
        return formats.render_csv(["k", "moment", "free_cumulant"],
                                  [(i, format_rational(x), format_rational(y)) for i, (x, y) in enumerate(zip(m.values, r.values), 1)])
    lines = [f"law = {named}"] if named else []
    lines.append(formats.render_sequence("m", m, "text", precision))
    lines.append(formats.render_sequence("R", r, "text", precision))
    return "\n".join(lines)


# ---------- diagram ----------

def _diagram(rows: Optional[str], diagram_file: Optional[str]) -> YoungDiagram:
    if (rows is None) == (diagram_file is None):
        raise UsageError("Give exactly one of --rows LIST or --diagram FILE")
    if rows is not None:
        return YoungDiagram.parse(rows)
    shape = formats.read_diagram_file(diagram_file or "")
    return interlacing_to_diagram(shape) if isinstance(shape, InterlacingCoords) else shape


def _cycle_type(spec: Optional[str]) -> CycleType:
    if spec is None:
        raise UsageError("This action needs --cycles")
    if spec.endswith(".json"):
        return formats.read_cycle_type_file(spec)
    return CycleType.parse(spec)


def _joined(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def cmd_diagram(
    action: str,
    rows: Optional[str] = None,
    diagram_file: Optional[str] = None,
    cycles: Optional[str] = None,
    cycles2: Optional[str] = None,
    with_rows: Optional[str] = None,
    order: Optional[int] = None,
    balance: float = 2.0,
    oracle: bool = False,
    fmt: str = "text",
    precision: int = 12,
    to_size: Optional[int] = None,
) -> str:
    d = _diagram(rows, diagram_file)
    k = default_order() if order is None else order

    if action == "interlacing":
        c = diagram_to_interlacing(d)
        if fmt == "json":
            return json.dumps({"minima": list(c.minima), "maxima": list(c.maxima)})
        return f"minima = {_joined(c.minima)}\nmaxima = {_joined(c.maxima)}"

    if action == "transition":
        mu = transition_measure(d)
        if fmt == "json":
            return formats.measure_to_json(mu)
        if fmt == "csv":
            return formats.render_csv(["x", "w", "decimal"],
                                      [(format_rational(x), format_rational(w), format_decimal(w, precision)) for x, w in mu.atoms])
        return "\n".join(f"x = {format_rational(x)}  w = {formats.render_value(w, precision)}" for x, w in mu.atoms)

    if action == "cumulants":
        return formats.render_sequence("R", diagram_free_cumulants(d, k), fmt, precision)

    if action == "balanced":
        ok = balanced_check(d, balance)
        return json.dumps({"balanced": ok}) if fmt == "json" else f"balanced = {'true' if ok else 'false'}"

    if action == "char":
        ct = _cycle_type(cycles)
        est = character_estimate(d, ct)
        out: Dict[str, Any] = {"class": str(ct), "estimate": est.value, "exponent": est.order_bound_exponent}
        if d.n <= mn_cap():
            out["exact"] = mn_character(d.conjugate(), ct)
            out["error"] = character_error(d, ct)
        else:
            log.warn(f"n={d.n} above FREECALC_MN_CAP={mn_cap()}; exact character skipped")
        return _render_record(out, fmt, precision)

    if action == "factor":
        ct1, ct2 = _cycle_type(cycles), _cycle_type(cycles2)
        res = factorization_defect(d, ct1, ct2)
        return _render_record({"defect": res.defect, "scale": res.scale}, fmt, precision)

    if action == "induce":
        if with_rows is None:
            raise UsageError("induce needs --with ROWS")
        other = YoungDiagram.parse(with_rows)
        predicted = induce_shape_prediction(d, other, k)
        if not oracle:
            return formats.render_sequence("m", predicted, fmt, precision)
        return _render_decomposition(
            predicted, induced_decomposition_oracle(d, other), induced_moment_average(d, other, k), fmt, precision
        )

    if action == "restrict":
        if to_size is None:
            raise UsageError("restrict needs --to M")
        predicted = restrict_shape_prediction(d, to_size, k)
        if not oracle:
            return formats.render_sequence("m", predicted, fmt, precision)
        return _render_decomposition(
            predicted, restricted_decomposition_oracle(d, to_size), restricted_moment_average(d, to_size, k),
            fmt, precision,
        )

    raise UsageError(f"Unknown diagram action {action!r}")


def _render_decomposition(
    predicted: MomentSequence,
    parts: List[Tuple[YoungDiagram, int]],
    average: MomentSequence,
    fmt: str,
    precision: int,
) -> str:
    if fmt == "json":
        return json.dumps({
            "predicted": [format_rational(v) for v in predicted.values],
            "components": [{"rows": list(nu.rows), "multiplicity": mult} for nu, mult in parts],
            "average": [format_rational(v) for v in average.values],
        })
    lines = [f"component {nu} x{mult} dim={nu.dimension()}" for nu, mult in parts]
    lines.append(formats.render_sequence("m", predicted, "text", precision))
    lines.append(formats.render_sequence("avg_m", average, "text", precision))
    return "\n".join(lines)


def _render_record(record: Dict[str, Any], fmt: str, precision: int) -> str:
    if fmt == "json":
        return json.dumps({k: (format_rational(v) if isinstance(v, Fraction) else v) for k, v in record.items()})
    if fmt == "csv":
        return formats.render_csv(list(record), [[format_rational(v) if isinstance(v, Fraction) else v for v in record.values()]])
    lines = []
    for key, v in record.items():
        lines.append(f"{key} = {formats.render_value(v, precision) if isinstance(v, (Fraction, float)) else v}")
    return "\n".join(lines)


# ---------- rmt ----------

def build_config(
    experiment: str,
    config_path: Optional[str] = None,
    preset: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> ExperimentConfig:
    """File or preset first, then flags on top, then normalize_config."""
    preset = preset or get_env_str("FREECALC_PRESET")
    if config_path:
        cfg = load_config_file(config_path)
    elif preset:
        cfg = resolve_preset(preset)
    else:
        cfg = ExperimentConfig()
    if cfg.experiment != experiment and (config_path or preset):
        log.warn(f"Config describes '{cfg.experiment}', running '{experiment}'")
    cfg.experiment = experiment  # type: ignore[assignment]
    for key, value in (overrides or {}).items():
        if value is not None:
            setattr(cfg, key, value)
    try:
        cfg = ExperimentConfig.model_validate(cfg.model_dump())
    except ValueError as e:
        raise UsageError(f"Invalid experiment config: {e}") from e
    return normalize_config(cfg)


def _spectra(cfg: ExperimentConfig) -> List[np.ndarray]:
    out = []
    for s in cfg.spectra:
        out.append(spectrum_of(parse_law(s), cfg.N) if isinstance(s, str) else explicit_spectrum(s, cfg.N))
    return out


def _named(cfg: ExperimentConfig) -> List[Optional[NamedLaw]]:
    return [parse_law(s) if isinstance(s, str) else None for s in cfg.spectra]


def cmd_rmt(cfg: ExperimentConfig, fmt: str = "text", precision: int = 12) -> str:
    log.info(f"rmt {cfg.experiment}: N={cfg.N} trials={cfg.trials} seed={cfg.seed}")
    assert cfg.seed is not None
    if cfg.experiment == "sum":
        a, b = _spectra(cfg)[:2]
        la, lb = _named(cfg)[:2]
        law = predicted_sum_law(la, lb) if la and lb else None
        res = experiments.sum_spectrum_experiment(a, b, cfg.N, cfg.trials, cfg.seed, cfg.bins, cfg.order, law)
        density = (lambda x: measures.density(law, x)) if law is not None and not law.is_discrete else None
        return _spectrum_output(res, density, law, fmt, precision)

    if cfg.experiment == "submatrix":
        (spec,) = _spectra(cfg)[:1]
        res = experiments.submatrix_spectrum(spec, cfg.N, to_fraction(cfg.t or "1/2"), cfg.trials, cfg.seed, cfg.bins, cfg.order)
        return _spectrum_output(res, None, None, fmt, precision)

    if cfg.experiment == "word":
        spectra = _spectra(cfg)
        word = list(cfg.word or [1])
        model = MatrixModel(cfg.N, tuple(spectra), cfg.seed)
        est = experiments.mixed_moment_mc(model, word, cfg.trials)
        family = FreeFamilySpec(tuple(spectrum_measure(s).moments(len(word)) for s in spectra))
        predicted = float(free_mixed_moment(family, word))
        record = {"word": _joined(word), "estimate": est.value, "stderr": est.stderr,
                  "trials": est.trials, "predicted": predicted}
        if fmt == "json":
            return json.dumps(record)
        if fmt == "csv":
            return formats.render_csv(list(record), [[_fmt_cell(v, precision) for v in record.values()]])
        return "\n".join(f"{k} = {_fmt_cell(v, precision)}" for k, v in record.items())

    if cfg.experiment == "entrycum":
        (spec,) = _spectra(cfg)[:1]
        rows = experiments.entry_cumulant_mc(spec, cfg.N, cfg.n_max, cfg.trials, cfg.seed)
        return formats.entry_cumulant_table(rows, fmt, precision)

    if cfg.experiment == "haar":
        res = experiments.haar_entry_variance_mc(cfg.N, cfg.trials, cfg.seed)
        record = {"N": cfg.N, "trials": res.variance.trials, "variance": res.variance.value,
                  "stderr": res.variance.stderr, "exact": res.exact}
        if fmt == "json":
            return json.dumps(record)
        if fmt == "csv":
            return formats.render_csv(list(record), [[_fmt_cell(v, precision) for v in record.values()]])
        return "\n".join(f"{k} = {_fmt_cell(v, precision)}" for k, v in record.items())

    raise UsageError(f"Unknown experiment {cfg.experiment!r}")


def _fmt_cell(v: Any, precision: int) -> str:
    return format_decimal(v, precision) if isinstance(v, float) else str(v)


def _spectrum_output(res: SpectrumResult, density: Optional[Callable[[float], float]], law: Optional[NamedLaw], fmt: str, precision: int) -> str:
    if fmt == "csv":
        if res.spectrum.counts is not None:
            return formats.histogram_csv(res.spectrum, density, precision)
        return formats.moment_rows_table(res.moments, "csv", precision)
    if fmt == "json":
        payload: Dict[str, Any] = {
            "law": str(law) if law else None,
            "ks": res.ks,
            "moments": json.loads(formats.moment_rows_table(res.moments, "json", precision)),
        }
        if res.spectrum.counts is not None and res.spectrum.edges is not None:
            payload["histogram"] = {"edges": [float(e) for e in res.spectrum.edges],
                                    "counts": [int(c) for c in res.spectrum.counts]}
        return json.dumps(payload)
    lines = [f"law = {law}"] if law else []
    if res.ks is not None:
        lines.append(f"ks = {format_decimal(res.ks, precision)}")
    lines.append(formats.moment_rows_table(res.moments, "text", precision))
    return "\n".join(lines)
