"""Run configuration: flat key/value text format and its validation.

Schema (one `key = value` per line, `#` comments, lists comma-separated):

    predicates = p, q            arities = 1, 2
    variables = X, Y             constants = a, b
    max_nodes = 4                max_clauses = 3
    probabilities = 0.5, 1       cycle_mode = none|forbid_negative|forbid_all
    independent_pairs = p:q      forbid_empty_bodies = true|false
    mode = sample|enumerate|count
    sample_count = 10            seed = 42
    timeout_seconds = 60         budget = 100000
    fact_constants = a, b, c     num_facts = 100
    probabilistic_proportion = 0.5
    emit_query = true
    random_arities = true        max_arity = 2
    num_independent_pairs = 1

random_arities redraws each predicate's arity per sampled program (max_arity
occurring at least once); num_independent_pairs redraws that many random
independence pairs per program. Both replace their fixed counterparts.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Optional

from .parameters import CycleMode, ParameterError, Parameters

MODES = ("sample", "enumerate", "count")


class ConfigError(ValueError):
    """Malformed or invalid configuration document."""


@dataclass(frozen=True)
class FactSpec:
    fact_constants: tuple[str, ...]
    num_facts: int
    probabilistic_proportion: float = 0.0


@dataclass
class RunConfig:
    params: Parameters
    mode: str = "sample"
    sample_count: int = 1
    seed: int = 0
    timeout_seconds: Optional[float] = None
    budget: int = 100_000
    fact_spec: Optional[FactSpec] = None
    emit_query: bool = False
    output_dir: str = "."
    random_arities: bool = False
    max_arity: Optional[int] = None
    num_independent_pairs: Optional[int] = None
    config_sha256: str = ""


_KNOWN_KEYS = {
    "predicates", "arities", "variables", "constants", "max_nodes",
    "max_clauses", "probabilities", "independent_pairs", "cycle_mode",
    "forbid_empty_bodies", "mode", "sample_count", "seed", "timeout_seconds",
    "budget", "fact_constants", "num_facts", "probabilistic_proportion",
    "emit_query", "random_arities", "max_arity", "num_independent_pairs",
}


def _parse_lines(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in entries:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value
    return entries


def _names(value: str) -> tuple[str, ...]:
    if not value.strip():
        return ()
    return tuple(part.strip() for part in value.split(",") if part.strip())


def _ints(value: str, key: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in _names(value))
    except ValueError as exc:
        raise ConfigError(f"{key}: expected integers, got {value!r}") from exc


def _int(value: str, key: str) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from exc


def _float(value: str, key: str) -> float:
    try:
        return float(value)
    except ValueError as exc:
        raise ConfigError(f"{key}: expected a number, got {value!r}") from exc


def _bool(value: str, key: str) -> bool:
    low = value.strip().lower()
    if low in ("true", "yes", "1", "on"):
        return True
    if low in ("false", "no", "0", "off"):
        return False
    raise ConfigError(f"{key}: expected true/false, got {value!r}")


def _pairs(value: str) -> set[tuple[str, str]]:
    pairs = set()
    for chunk in _names(value):
        parts = [p.strip() for p in chunk.split(":")]
        if len(parts) != 2 or not all(parts):
            raise ConfigError(
                f"independent_pairs: expected 'p:q' entries, got {chunk!r}")
        if parts[0] == parts[1]:
            raise ConfigError(
                f"independent_pairs: {parts[0]!r} paired with itself")
        pairs.add((parts[0], parts[1]))
    return pairs


def parse_config(text: str) -> RunConfig:
    """Parse and fully validate a configuration document."""
    entries = _parse_lines(text)

    random_arities = _bool(entries.get("random_arities", "false"), "random_arities")
    max_arity = (_int(entries["max_arity"], "max_arity")
                 if "max_arity" in entries else None)
    if random_arities:
        if max_arity is None or max_arity < 1:
            raise ConfigError("random_arities requires max_arity >= 1")
        if "arities" in entries:
            raise ConfigError("random_arities and arities are mutually exclusive")
    elif "arities" not in entries:
        raise ConfigError("missing required key 'arities'")

    if "predicates" not in entries:
        raise ConfigError("missing required key 'predicates'")
    predicates = _names(entries["predicates"])
    arities = (_ints(entries["arities"], "arities") if not random_arities
               else tuple([max_arity] + [1] * (len(predicates) - 1)))

    num_pairs = (_int(entries["num_independent_pairs"], "num_independent_pairs")
                 if "num_independent_pairs" in entries else None)
    if num_pairs is not None:
        if "independent_pairs" in entries:
            raise ConfigError(
                "num_independent_pairs and independent_pairs are mutually exclusive")
        limit = len(predicates) * (len(predicates) - 1) // 2
        if not 0 <= num_pairs <= limit:
            raise ConfigError(
                f"num_independent_pairs must lie in [0, {limit}]")

    cycle_raw = entries.get("cycle_mode", "none").strip().lower()
    try:
        cycle_mode = CycleMode(cycle_raw)
    except ValueError as exc:
        raise ConfigError(f"cycle_mode: unknown mode {cycle_raw!r}") from exc

    try:
        params = Parameters(
            predicates=predicates,
            arities=arities,
            variables=_names(entries.get("variables", "")),
            constants=_names(entries.get("constants", "")),
            max_nodes=_int(entries.get("max_nodes", "1"), "max_nodes"),
            max_clauses=_int(entries.get("max_clauses", str(len(predicates))),
                             "max_clauses"),
            independent_pairs=_pairs(entries.get("independent_pairs", "")),
            probabilities=tuple(_float(p, "probabilities")
                                for p in _names(entries.get("probabilities", "1"))),
            cycle_mode=cycle_mode,
            forbid_empty_bodies=_bool(entries.get("forbid_empty_bodies", "false"),
                                      "forbid_empty_bodies"),
        )
    except ParameterError as exc:
        raise ConfigError(str(exc)) from exc

    mode = entries.get("mode", "sample").strip().lower()
    if mode not in MODES:
        raise ConfigError(f"mode: expected one of {MODES}, got {mode!r}")

    fact_spec = None
    if "fact_constants" in entries or "num_facts" in entries:
        if not ("fact_constants" in entries and "num_facts" in entries):
            raise ConfigError("fact_constants and num_facts go together")
        fact_constants = _names(entries["fact_constants"])
        if not fact_constants:
            raise ConfigError("fact_constants must be non-empty")
        num_facts = _int(entries["num_facts"], "num_facts")
        if num_facts < 0:
            raise ConfigError("num_facts must be non-negative")
        proportion = _float(entries.get("probabilistic_proportion", "0"),
                            "probabilistic_proportion")
        if not 0 <= proportion <= 1:
            raise ConfigError("probabilistic_proportion must lie in [0, 1]")
        if not random_arities:
            total = sum(len(fact_constants) ** a for a in arities)
            if num_facts > total:
                raise ConfigError(
                    f"num_facts ({num_facts}) exceeds the {total} possible facts")
        fact_spec = FactSpec(fact_constants, num_facts, proportion)

    config = RunConfig(
        params=params,
        mode=mode,
        sample_count=_int(entries.get("sample_count", "1"), "sample_count"),
        seed=_int(entries.get("seed", "0"), "seed"),
        timeout_seconds=(_float(entries["timeout_seconds"], "timeout_seconds")
                         if "timeout_seconds" in entries else None),
        budget=_int(entries.get("budget", "100000"), "budget"),
        fact_spec=fact_spec,
        emit_query=_bool(entries.get("emit_query", "false"), "emit_query"),
        random_arities=random_arities,
        max_arity=max_arity,
        num_independent_pairs=num_pairs,
        config_sha256=hashlib.sha256(text.encode()).hexdigest(),
    )
    _validate_mode(config)
    return config


def _validate_mode(config: RunConfig) -> None:
    if config.sample_count < 1:
        raise ConfigError("sample_count must be at least 1")
    if config.budget < 1:
        raise ConfigError("budget must be at least 1")
    if config.emit_query and config.fact_spec is None:
        raise ConfigError("emit_query requires fact_constants/num_facts")
    if config.mode == "count":
        if config.params.min_arity < 1:
            raise ConfigError("count mode requires every arity >= 1")
        if config.params.independent_pairs or config.num_independent_pairs:
            raise ConfigError("count mode does not support independence pairs")
        if config.params.cycle_mode is not CycleMode.NONE:
            raise ConfigError("count mode requires cycle_mode = none")
        if config.random_arities:
            raise ConfigError("count mode requires fixed arities")
