"""
Author: Brian Gunnison

Brief: Pydantic models for every JSON input (sequences, measures, diagrams,
cycle types, experiment configs) and the experiment preset loader.

Details: Rational fields accept "p/q" strings, decimal strings or numbers and
are stored as canonical "p/q" text. JSON floats are read through their decimal
repr so 0.1 means 1/10. Presets live in presets/experiments.json; a missing or
broken file falls back to the built-in presets with a warning.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, RootModel, ValidationError, field_validator, model_validator

from src.analytic.measures import DiscreteMeasure, parse_law
from src.cumulants.sequences import CumulantSequence, MomentSequence
from src.errors import UsageError
from src.util import log
from src.util.paths import presets_path
from src.util.rational import format_rational, parse_rational
from src.young.characters import CycleType
from src.young.diagrams import InterlacingCoords, YoungDiagram

RationalLike = Union[int, float, str]

ExperimentKind = Literal["sum", "word", "submatrix", "entrycum", "haar"]

SequenceKind = Literal["moments", "free", "classical"]


def to_fraction(v: RationalLike) -> Fraction:
    if isinstance(v, float):
        return parse_rational(repr(v))
    return parse_rational(v)


def _canonical(v: RationalLike) -> str:
    return format_rational(to_fraction(v))


class SequenceFile(BaseModel):
    kind: SequenceKind = "moments"
    values: List[RationalLike]

    @field_validator("values")
    @classmethod
    def exact_values(cls, v: List[RationalLike]) -> List[str]:
        if not v:
            raise ValueError("values must be non-empty")
        return [_canonical(x) for x in v]

    def to_sequence(self) -> Union[MomentSequence, CumulantSequence]:
        vals = tuple(Fraction(x) for x in self.values)
        if self.kind == "moments":
            return MomentSequence(vals)
        return CumulantSequence(vals, self.kind)


class Atom(BaseModel):
    x: RationalLike
    w: RationalLike

    @field_validator("x", "w")
    @classmethod
    def exact(cls, v: RationalLike) -> str:
        return _canonical(v)


class MeasureFile(BaseModel):
    atoms: List[Atom]

    def to_measure(self) -> DiscreteMeasure:
        pairs = sorted((Fraction(a.x), Fraction(a.w)) for a in self.atoms)
        return DiscreteMeasure(tuple(pairs))


class DiagramFile(BaseModel):
    rows: Optional[List[int]] = None
    minima: Optional[List[int]] = None
    maxima: Optional[List[int]] = None

    @model_validator(mode="after")
    def one_form(self) -> "DiagramFile":
        has_rows = self.rows is not None
        has_coords = self.minima is not None or self.maxima is not None
        if has_rows == has_coords:
            raise ValueError("give either rows or minima/maxima, not both")
        if has_coords and (self.minima is None or self.maxima is None):
            raise ValueError("minima and maxima go together")
        return self

    def to_shape(self) -> Union[YoungDiagram, InterlacingCoords]:
        if self.rows is not None:
            return YoungDiagram(tuple(self.rows))
        return InterlacingCoords(tuple(self.minima or ()), tuple(self.maxima or ()))


class CycleTypeFile(RootModel[Dict[str, int]]):
    def to_cycle_type(self) -> CycleType:
        return CycleType.from_mapping(self.root)


SpectrumSpec = Union[str, List[float]]


class ExperimentConfig(BaseModel):
    experiment: ExperimentKind = "sum"
    N: int = 200
    trials: int = 1
    seed: Optional[int] = None
    spectra: List[SpectrumSpec] = Field(default_factory=list)
    word: Optional[List[int]] = None
    t: Optional[RationalLike] = None
    bins: Optional[int] = None
    n_max: int = 4
    order: int = 4
    doc: Optional[str] = None

    @field_validator("spectra")
    @classmethod
    def known_laws(cls, v: List[SpectrumSpec]) -> List[SpectrumSpec]:
        for s in v:
            if isinstance(s, str):
                parse_law(s)
        return v

    @field_validator("t")
    @classmethod
    def exact_t(cls, v: Optional[RationalLike]) -> Optional[str]:
        return None if v is None else _canonical(v)


BUILTIN_PRESETS: Dict[str, ExperimentConfig] = {
    "projection_figure": ExperimentConfig(
        experiment="sum", N=800, trials=1, seed=42, spectra=["proj:1/2", "proj:1/2"], bins=40,
        doc="Two rank N/2 projections in generic position; eigenvalues follow the arcsine law on [0,2].",
    ),
}
BUILTIN_DEFAULT = "projection_figure"


def load_preset(name: Optional[str] = None) -> Tuple[ExperimentConfig, str, bool, Optional[str]]:
    """Select an experiment preset.

    Returns (config, selected_name, used_builtin_fallback, warning_reason). An
    unknown name falls back to the file's 'default' entry; an unreadable file or
    invalid entry falls back to the built-in presets.
    """
    try:
        with presets_path().open("r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        return _builtin(name, f"Failed to read {presets_path().name}: {e.__class__.__name__}")

    selected: Optional[str] = None
    if name and isinstance(data.get(name), dict):
        selected = name
    elif isinstance(data.get("default"), str) and isinstance(data.get(data["default"]), dict):
        selected = data["default"]
    if not selected:
        return _builtin(name, "No usable preset found in presets file")
    try:
        cfg = ExperimentConfig.model_validate(data[selected])
    except ValidationError as e:
        return _builtin(name, f"Preset '{selected}' is invalid ({e.error_count()} errors)")
    reason = f"Preset '{name}' not found; using '{selected}'" if name and name != selected else None
    return cfg, selected, False, reason


def _builtin(name: Optional[str], reason: str) -> Tuple[ExperimentConfig, str, bool, Optional[str]]:
    selected = name if name in BUILTIN_PRESETS else BUILTIN_DEFAULT
    return BUILTIN_PRESETS[selected].model_copy(deep=True), selected, True, reason


def resolve_preset(name: Optional[str]) -> ExperimentConfig:
    cfg, selected, fallback, reason = load_preset(name)
    if reason:
        log.warn(reason + ("; using built-in preset" if fallback else ""))
    log.info(f"Preset: {selected}")
    return cfg


def load_config_file(path: str) -> ExperimentConfig:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return ExperimentConfig.model_validate(json.load(f))
    except OSError as e:
        raise UsageError(f"Cannot read config {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"Config {path} is not valid JSON: {e}") from e
    except ValidationError as e:
        raise UsageError(f"Config {path} is invalid: {e}") from e
