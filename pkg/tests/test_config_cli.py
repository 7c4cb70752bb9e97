"""Configuration parsing, fact/query generation, CLI run modes."""

import json
from pathlib import Path

import pytest

from genlp.cli import main, run, scenario_parameters
from genlp.config import ConfigError, FactSpec, parse_config
from genlp.facts import generate_facts, pick_query
from genlp.parameters import CycleMode, Parameters
from genlp.programs import Atom

UNARY_CONFIG = """
# one unary predicate over a single variable
predicates = p
arities = 1
variables = X
max_nodes = 4
max_clauses = 1
probabilities = 1
"""


def test_parse_unary_config():
    config = parse_config(UNARY_CONFIG)
    assert config.params.predicates == ("p",)
    assert config.params.arities == (1,)
    assert config.params.variables == ("X",)
    assert config.params.max_nodes == 4
    assert config.params.max_clauses == 1
    assert config.params.cycle_mode is CycleMode.NONE
    assert config.config_sha256


def test_unknown_key_rejected():
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config(UNARY_CONFIG + "\nbogus = 1\n")


def test_invariant_violation_named():
    bad = UNARY_CONFIG.replace("max_clauses = 1", "max_clauses = 0")
    with pytest.raises(ConfigError, match="max_clauses"):
        parse_config(bad)


def test_self_pair_rejected():
    with pytest.raises(ConfigError, match="paired with itself"):
        parse_config(UNARY_CONFIG + "independent_pairs = p:p\n")


def test_too_many_facts_rejected():
    bad = UNARY_CONFIG + "fact_constants = a, b\nnum_facts = 3\n"
    with pytest.raises(ConfigError, match="possible facts"):
        parse_config(bad)


def test_count_mode_preconditions():
    with pytest.raises(ConfigError, match="cycle_mode"):
        parse_config(UNARY_CONFIG + "mode = count\ncycle_mode = forbid_all\n")


# -- facts ----------------------------------------------------------------------

FACT_PARAMS = Parameters(predicates=("p",), arities=(1,), variables=("X",),
                         max_nodes=1, max_clauses=1,
                         probabilities=(0.1, 0.5, 0.9))


def test_fact_saturation_yields_full_atom_set():
    spec = FactSpec(("a", "b", "c"), 3)
    facts = generate_facts(spec, FACT_PARAMS, seed=1)
    assert {c.head for c in facts} == {Atom("p", (c,)) for c in ("a", "b", "c")}


def test_zero_proportion_keeps_everything_certain():
    spec = FactSpec(("a", "b", "c", "d"), 3, probabilistic_proportion=0)
    facts = generate_facts(spec, FACT_PARAMS, seed=2)
    assert all(c.probability == 1 for c in facts)


def test_proportion_splits_probabilistic_subset():
    spec = FactSpec(tuple(f"c{i}" for i in range(100)), 75,
                    probabilistic_proportion=0.4)
    facts = generate_facts(spec, FACT_PARAMS, seed=3)
    assert len(facts) == 75
    assert len({c.head for c in facts}) == 75
    probabilistic = [c for c in facts if c.probability != 1]
    assert len(probabilistic) == round(0.4 * 75)
    assert all(c.probability in (0.1, 0.5, 0.9) for c in probabilistic)


def test_facts_deterministic_per_seed():
    spec = FactSpec(tuple(f"c{i}" for i in range(50)), 30,
                    probabilistic_proportion=0.5)
    a = generate_facts(spec, FACT_PARAMS, seed=9)
    b = generate_facts(spec, FACT_PARAMS, seed=9)
    assert a == b
    c = generate_facts(spec, FACT_PARAMS, seed=10)
    assert a != c


def test_query_avoids_present_atoms():
    present = {Atom("p", ("a",)), Atom("p", ("b",))}
    q = pick_query(present, FACT_PARAMS, ("a", "b", "c"), seed=4)
    assert q == Atom("p", ("c",))


def test_query_saturated_errors():
    present = {Atom("p", (c,)) for c in ("a", "b")}
    with pytest.raises(ValueError, match="lower num_facts"):
        pick_query(present, FACT_PARAMS, ("a", "b"), seed=4)


def test_query_deterministic():
    present = set()
    a = pick_query(present, FACT_PARAMS, tuple(f"c{i}" for i in range(30)), seed=7)
    b = pick_query(present, FACT_PARAMS, tuple(f"c{i}" for i in range(30)), seed=7)
    assert a == b


# -- scenario randomization ------------------------------------------------------

def test_scenario_parameters_redraw_arities_and_pairs():
    text = """
predicates = p, q, r
random_arities = true
max_arity = 3
variables = X
max_clauses = 3
num_independent_pairs = 1
"""
    config = parse_config(text)
    seen_arities = set()
    for k in range(20):
        params = scenario_parameters(config, k)
        assert max(params.arities) == 3
        assert len(params.independent_pairs) == 1
        seen_arities.add(params.arities)
    assert len(seen_arities) > 1
    again = scenario_parameters(config, 0)
    assert again == scenario_parameters(config, 0)


# -- CLI modes ---------------------------------------------------------------------

def write_config(tmp_path, text):
    path = tmp_path / "config.txt"
    path.write_text(text)
    return path


def test_count_mode_unary_space(tmp_path, capsys):
    path = write_config(tmp_path, UNARY_CONFIG)
    code = main(["--config", str(path), "--mode", "count"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0] == "15"
    assert out[1] == "enumeration: 15"
    assert out[2] == "AGREE"


def test_count_mode_budget_refusal(tmp_path, capsys):
    path = write_config(tmp_path, UNARY_CONFIG)
    code = main(["--config", str(path), "--mode", "count", "--budget", "5"])
    out = capsys.readouterr().out
    assert code == 2
    assert "skipped" in out


def test_enumerate_mode_writes_all_programs(tmp_path):
    path = write_config(tmp_path, UNARY_CONFIG)
    out_dir = tmp_path / "out"
    code = main(["--config", str(path), "--mode", "enumerate",
                 "--out", str(out_dir)])
    assert code == 0
    files = sorted(out_dir.glob("program_*.pl"))
    assert len(files) == 15
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert len(manifest["programs"]) == 15
    assert manifest["truncated"] is False


def test_enumerate_forbid_negative_six(tmp_path):
    text = UNARY_CONFIG + "cycle_mode = forbid_negative\n"
    path = write_config(tmp_path, text)
    out_dir = tmp_path / "out"
    code = main(["--config", str(path), "--mode", "enumerate",
                 "--out", str(out_dir)])
    assert code == 0
    assert len(list(out_dir.glob("program_*.pl"))) == 6


SAMPLE_CONFIG = """
predicates = p, q
arities = 1, 2
variables = X, Y
max_nodes = 3
max_clauses = 3
probabilities = 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9
cycle_mode = forbid_negative
forbid_empty_bodies = true
fact_constants = a, b, c
num_facts = 5
probabilistic_proportion = 0.5
emit_query = true
"""


def test_sample_mode_writes_programs_with_facts_and_query(tmp_path):
    path = write_config(tmp_path, SAMPLE_CONFIG)
    out_dir = tmp_path / "out"
    code = main(["--config", str(path), "--mode", "sample", "--seed", "5",
                 "--out", str(out_dir), "--count", "4"])
    assert code == 0
    files = sorted(out_dir.glob("program_*.pl"))
    assert len(files) == 4
    for f in files:
        text = f.read_text()
        assert text.strip().endswith(").") or text.strip().endswith(".")
        assert "query(" in text
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert all(r["status"] == "ok" for r in manifest["programs"])
    assert (out_dir / "timings.json").exists()


def test_sample_mode_reproducible_bytes(tmp_path):
    path = write_config(tmp_path, SAMPLE_CONFIG)
    dirs = []
    for name in ("run1", "run2"):
        out_dir = tmp_path / name
        code = main(["--config", str(path), "--mode", "sample", "--seed", "99",
                     "--out", str(out_dir), "--count", "3"])
        assert code == 0
        dirs.append(out_dir)
    for f1 in sorted(dirs[0].iterdir()):
        if f1.name == "timings.json":
            continue
        f2 = dirs[1] / f1.name
        assert f1.read_bytes() == f2.read_bytes(), f1.name

def test_invalid_config_exit_code(tmp_path, capsys):
    path = write_config(tmp_path, "predicates = p\n")
    code = main(["--config", str(path)])
    assert code == 1
    assert "invalid configuration" in capsys.readouterr().err


def test_missing_config_file(tmp_path, capsys):
    code = main(["--config", str(tmp_path / "nope.txt")])
    assert code == 1
