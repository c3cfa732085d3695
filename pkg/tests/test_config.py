from __future__ import annotations

import json
from fractions import Fraction as F

import pytest
from pydantic import ValidationError

from src.adapter import formats
from src.cumulants.sequences import CumulantSequence, MomentSequence
from src.errors import UsageError
from src.orchestrator.commands import build_config
from src.planner import experiment_plan
from src.planner.experiment_plan import (
    CycleTypeFile,
    DiagramFile,
    ExperimentConfig,
    MeasureFile,
    SequenceFile,
    load_preset,
    to_fraction,
)
from src.util import log
from src.util.env import get_env_bool, get_env_float, get_env_int
from src.validate.normalizer import normalize_config
from src.young.characters import CycleType
from src.young.diagrams import InterlacingCoords, YoungDiagram


# ---------- input models ----------

def test_decimal_floats_are_read_through_repr():
    assert to_fraction(0.1) == F(1, 10)
    assert to_fraction("2/6") == F(1, 3)
    seq = SequenceFile(values=[0.1, "1/3", 2]).to_sequence()
    assert seq == MomentSequence((F(1, 10), F(1, 3), F(2)))
    with pytest.raises(ValidationError):
        SequenceFile(values=[])
    with pytest.raises(ValidationError):
        SequenceFile(values=["x"])


def test_sequence_kinds():
    free = SequenceFile(kind="free", values=[0, 1]).to_sequence()
    assert isinstance(free, CumulantSequence) and free.kind == "free"
    with pytest.raises(ValidationError):
        SequenceFile(kind="boolean", values=[1])


def test_measure_file_sorts_atoms():
    mu = MeasureFile.model_validate({"atoms": [{"x": 2, "w": "1/4"}, {"x": -1, "w": 0.75}]}).to_measure()
    assert mu.atoms == ((-1, F(3, 4)), (2, F(1, 4)))
    with pytest.raises(UsageError):
        MeasureFile.model_validate({"atoms": [{"x": 0, "w": "1/2"}]}).to_measure()


def test_diagram_file_forms():
    assert DiagramFile(rows=[2, 1]).to_shape() == YoungDiagram((2, 1))
    coords = DiagramFile(minima=[-2, 0, 2], maxima=[-1, 1]).to_shape()
    assert coords == InterlacingCoords((-2, 0, 2), (-1, 1))
    with pytest.raises(ValidationError):
        DiagramFile(rows=[1], minima=[0], maxima=[])
    with pytest.raises(ValidationError):
        DiagramFile(minima=[0])
    with pytest.raises(ValidationError):
        DiagramFile()


def test_cycle_type_file():
    ct = CycleTypeFile.model_validate({"2": 1, "3": 2}).to_cycle_type()
    assert ct == CycleType(((2, 1), (3, 2)))


def test_experiment_config_validation():
    cfg = ExperimentConfig(experiment="submatrix", seed=1, t=0.25)
    assert cfg.t == "1/4"
    with pytest.raises(ValidationError):
        ExperimentConfig(spectra=["cauchy:1"])
    with pytest.raises(ValidationError):
        ExperimentConfig(experiment="product")


# ---------- presets ----------

def test_presets_file_entries_validate():
    data = json.loads(experiment_plan.presets_path().read_text(encoding="utf-8"))
    names = [k for k in data if k != "default"]
    assert data["default"] in names
    for name in names:
        cfg, selected, fallback, reason = load_preset(name)
        assert (selected, fallback, reason) == (name, False, None)
        assert cfg.seed is not None and cfg.doc


def test_unknown_preset_uses_file_default():
    cfg, selected, fallback, reason = load_preset("nope")
    assert selected == "projection_figure"
    assert not fallback
    assert "nope" in reason
    assert cfg.N == 800


def test_broken_presets_file_falls_back_to_builtin(monkeypatch, tmp_path):
    bad = tmp_path / "experiments.json"
    bad.write_text("{not json", encoding="utf-8")
    monkeypatch.setattr(experiment_plan, "presets_path", lambda: bad)
    cfg, selected, fallback, reason = load_preset("half_corner")
    assert (selected, fallback) == ("projection_figure", True)
    assert reason.startswith("Failed to read")
    cfg.N = 3
    assert experiment_plan.BUILTIN_PRESETS["projection_figure"].N == 800


def test_invalid_preset_entry_falls_back(monkeypatch, tmp_path):
    bad = tmp_path / "experiments.json"
    bad.write_text(json.dumps({"default": "x", "x": {"N": "many"}}), encoding="utf-8")
    monkeypatch.setattr(experiment_plan, "presets_path", lambda: bad)
    _, selected, fallback, reason = load_preset(None)
    assert fallback and selected == "projection_figure"
    assert "invalid" in reason


def test_build_config_layers(monkeypatch, tmp_path):
    cfg = build_config("sum", None, "symmetric_sum", {"N": 64, "seed": None})
    assert (cfg.N, cfg.seed, cfg.trials) == (64, 7, 20)
    monkeypatch.setenv("FREECALC_PRESET", "haar_check")
    cfg = build_config("haar", None, None, {"trials": 5})
    assert (cfg.N, cfg.trials, cfg.seed) == (50, 5, 1)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"N": -4, "seed": 1, "spectra": ["nope"]}), encoding="utf-8")
    with pytest.raises(UsageError):
        build_config("sum", str(path), None, {})
    with pytest.raises(UsageError):
        build_config("sum", str(tmp_path / "missing.json"), None, {})


# ---------- normalizer ----------

def test_normalizer_requires_seed():
    with pytest.raises(UsageError):
        normalize_config(ExperimentConfig())
    with pytest.raises(UsageError):
        normalize_config(ExperimentConfig(seed=-1))


def test_normalizer_clamps_and_fills():
    cfg = normalize_config(ExperimentConfig(seed=1, N=5000, trials=0, bins=0, n_max=9, order=40))
    assert (cfg.N, cfg.trials, cfg.bins, cfg.n_max, cfg.order) == (2000, 1, 1, 6, 12)
    assert cfg.spectra == ["proj:1/2", "proj:1/2"]
    assert normalize_config(ExperimentConfig(experiment="haar", seed=1, N=1)).N == 2


def test_normalizer_word_rules():
    cfg = normalize_config(ExperimentConfig(experiment="word", seed=1))
    assert cfg.word == [1, 2]
    assert len(cfg.spectra) == 2
    cfg = normalize_config(ExperimentConfig(experiment="word", seed=1, spectra=["semicircle:1"]))
    assert cfg.spectra == ["semicircle:1", "bernoulli:1/2:-1:1"]
    assert cfg.word == [1, 2]
    with pytest.raises(UsageError):
        normalize_config(ExperimentConfig(experiment="word", seed=1, spectra=["semicircle:1"], word=[1, 3]))


def test_partial_spectra_fill_is_reported(capsys):
    cfg = normalize_config(ExperimentConfig(experiment="sum", seed=1, spectra=["semicircle:1"]))
    assert cfg.spectra == ["semicircle:1", "proj:1/2"]
    assert "filled defaults" in capsys.readouterr().err
    normalize_config(ExperimentConfig(experiment="sum", seed=1))
    assert "filled defaults" not in capsys.readouterr().err


def test_normalizer_corner_rules():
    cfg = normalize_config(ExperimentConfig(experiment="submatrix", seed=1, N=10))
    assert cfg.t == "1/2"
    assert normalize_config(ExperimentConfig(experiment="submatrix", seed=1, N=10, t=1)).t == "1"
    for t, n in (("1/3", 10), ("3/2", 10), (0, 10)):
        with pytest.raises(UsageError):
            normalize_config(ExperimentConfig(experiment="submatrix", seed=1, N=n, t=t))


# ---------- env ----------

def test_env_getters(monkeypatch):
    monkeypatch.setenv("FREECALC_ORDER", "500")
    assert get_env_int("FREECALC_ORDER", 8, lo=1, hi=64) == 64
    monkeypatch.setenv("FREECALC_ORDER", "abc")
    assert get_env_int("FREECALC_ORDER", 8) == 8
    monkeypatch.setenv("FREECALC_ORDER", "6.0")
    assert get_env_int("FREECALC_ORDER", 8) == 6
    monkeypatch.setenv("FREECALC_X", "2.5")
    assert get_env_float("FREECALC_X", 1.0) == 2.5
    monkeypatch.setenv("FREECALC_X", "on")
    assert get_env_bool("FREECALC_X") is True
    monkeypatch.delenv("FREECALC_X")
    assert get_env_bool("FREECALC_X", True) is True


@pytest.mark.parametrize("value,shown", [("yes", False), ("1", False), ("off", True), ("", True)])
def test_quiet_switch_hides_info_only(monkeypatch, capsys, value, shown):
    monkeypatch.setenv("FREECALC_QUIET", value)
    log.info("hello")
    log.warn("careful")
    err = capsys.readouterr().err
    assert ("hello" in err) is shown
    assert "careful" in err


# ---------- file formats ----------

def test_readers_report_usage_errors(tmp_path):
    broken = tmp_path / "b.json"
    broken.write_text("[1, 2", encoding="utf-8")
    with pytest.raises(UsageError):
        formats.read_json(broken)
    with pytest.raises(UsageError):
        formats.read_json(tmp_path / "absent.json")
    wrong = tmp_path / "w.json"
    wrong.write_text(json.dumps({"rows": [1], "minima": [0]}), encoding="utf-8")
    with pytest.raises(UsageError):
        formats.read_diagram_file(wrong)


def test_sequence_file_round_trip(tmp_path):
    seq = CumulantSequence((F(1, 2), F(-3)), "classical")
    path = tmp_path / "s.json"
    path.write_text(formats.sequence_to_json(seq), encoding="utf-8")
    assert formats.read_sequence_file(path) == seq


def test_renderers():
    assert formats.render_value(F(1, 3), 4) == "1/3 (0.3333)"
    assert formats.render_value(0.25, 4) == "0.25"
    assert formats.render_sequence("m", MomentSequence((F(1, 2), 2)), "text", 6) == "m1 = 1/2 (0.5)\nm2 = 2 (2)"
    assert formats.render_sequence("m", MomentSequence((F(1, 2),)), "csv", 6) == "k,m,decimal\n1,1/2,0.5"
    assert formats.render_csv(["a", "b"], [(1, 2)]) == "a,b\n1,2"


def test_write_output(tmp_path, capsys):
    formats.write_output("x")
    assert capsys.readouterr().out == "x\n"
    target = tmp_path / "o.txt"
    formats.write_output("y\n", target)
    assert target.read_text(encoding="utf-8") == "y\n"
    with pytest.raises(UsageError):
        formats.write_output("z", tmp_path / "no" / "dir" / "o.txt")
