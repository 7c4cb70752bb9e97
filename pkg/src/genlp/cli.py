"""Command-line front end.

    generate --config <file> --mode sample|enumerate|count --seed <int>
             --out <dir> [--count <n>] [--timeout <sec>] [--budget <n>]

sample: draws programs (fresh solver per program, random value order,
geometric restarts), appends facts and an optional query, validates every
output against the program-level oracles, and writes program_<k>.pl files
plus a deterministic manifest.json (wall-clock timings go to timings.json,
which is not covered by the reproducibility guarantee). enumerate: writes
every solution up to the budget. count: prints the closed-form count and,
within budget, the enumerated count with an AGREE/DISAGREE verdict.

Exit codes: 0 success, 1 validation error, 2 budget/timeout-only failures,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
import time
from dataclasses import replace
from pathlib import Path
from typing import Optional

from .config import ConfigError, RunConfig, parse_config
from .counting import count_with_validation
from .cp import (
    GeometricRestarts,
    RANDOM,
    SearchSpec,
    SearchStats,
    SearchTimeout,
    first_solution,
    solve,
)
from .dependencies import verify_independence, verify_stratified
from .emit import render_program
from .facts import generate_facts, pick_query
from .modeling import build_program_model, decode_solution
from .parameters import CycleMode, ParameterError, Parameters
from .programs import Program, TOP, assign_probabilities, check_program

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BUDGET = 2
EXIT_INTERNAL = 3


def _write_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _write_json(path: Path, payload) -> None:
    _write_atomic(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def scenario_parameters(config: RunConfig, k: int) -> Parameters:
    """Per-program parameter draw: fresh arities (largest occurring at least
    once) and independence pairs when the config asks for randomized
    structure scenarios."""
    params = config.params
    if not config.random_arities and config.num_independent_pairs is None:
        return params
    rng = random.Random(f"{config.seed}:{k}:scenario")
    arities = params.arities
    if config.random_arities:
        n = len(params.predicates)
        drawn = [rng.randint(1, config.max_arity) for _ in range(n)]
        drawn[rng.randrange(n)] = config.max_arity
        arities = tuple(drawn)
    pairs = params.independent_pairs
    if config.num_independent_pairs is not None:
        candidates = list(itertools.combinations(params.predicates, 2))
        pairs = frozenset(frozenset(p) for p in
                          rng.sample(candidates, config.num_independent_pairs))
    return replace(params, arities=arities, independent_pairs=pairs)


def _sample_one(config: RunConfig, k: int):
    """Returns (program, query, params, elapsed_seconds, status)."""
    params = scenario_parameters(config, k)
    start = time.perf_counter()
    deadline = (time.monotonic() + config.timeout_seconds
                if config.timeout_seconds else None)
    pm = build_program_model(params)
    spec = SearchSpec(groups=pm.groups, value_order=RANDOM,
                      restarts=GeometricRestarts(10, 1.1))
    try:
        sol = first_solution(pm.model, spec, seed=f"{config.seed}:{k}",
                             deadline=deadline)
    except SearchTimeout:
        return None, None, params, time.perf_counter() - start, "timeout"
    if sol is None:
        return None, None, params, time.perf_counter() - start, "unsatisfiable"
    rules = decode_solution(pm, sol)
    rules = assign_probabilities(rules, params.probabilities,
                                 seed=f"{config.seed}:{k}:probs")
    clauses = list(rules.clauses)
    query = None
    if config.fact_spec:
        ground_rule_heads = {c.head for c in clauses
                             if c.body is TOP and all(
                                 t in config.fact_spec.fact_constants
                                 for t in c.head.terms)}
        facts = generate_facts(config.fact_spec, params,
                               seed=f"{config.seed}:{k}",
                               arities=params.arities,
                               excluded=ground_rule_heads)
        clauses.extend(facts)
        if config.emit_query:
            present = {c.head for c in clauses if c.body is TOP}
            query = pick_query(present, params, config.fact_spec.fact_constants,
                               seed=f"{config.seed}:{k}")
    program = Program(tuple(clauses))
    elapsed = time.perf_counter() - start
    return program, query, params, elapsed, "ok"


def _validate_output(program: Program, params: Parameters) -> Optional[str]:
    """Post-generation validation pass; returns a reason when invalid."""
    arities = dict(zip(params.predicates, params.arities))
    try:
        check_program(program, arities, required=params.predicates)
    except ValueError as exc:
        return f"program invariant: {exc}"
    if params.cycle_mode is not CycleMode.NONE:
        if not verify_stratified(program, params.cycle_mode):
            return "stratification check failed"
    for pair in params.independent_pairs:
        p, q = sorted(pair)
        if not verify_independence(program, (p, q), params.predicates):
            return f"independence check failed for ({p}, {q})"
    return None


def run(config: RunConfig) -> int:
    out = Path(config.output_dir)
    if config.mode == "count":
        return _run_count(config)
    out.mkdir(parents=True, exist_ok=True)
    if config.mode == "enumerate":
        return _run_enumerate(config, out)
    return _run_sample(config, out)


def _run_count(config: RunConfig) -> int:
    result = count_with_validation(config.params, config.budget)
    print(result.formula)
    if result.enumerated is None:
        print("enumeration: skipped (budget exceeded)")
        return EXIT_BUDGET
    print(f"enumeration: {result.enumerated}")
    if result.agree:
        print("AGREE")
        return EXIT_OK
    print("DISAGREE")
    return EXIT_INTERNAL


def _run_enumerate(config: RunConfig, out: Path) -> int:
    pm = build_program_model(config.params)
    records = []
    truncated = False
    for i, sol in enumerate(solve(pm.model, SearchSpec(groups=pm.groups))):
        if i >= config.budget:
            truncated = True
            break
        program = decode_solution(pm, sol)
        program = assign_probabilities(program, config.params.probabilities,
                                       seed=f"{config.seed}:{i}:probs")
        name = f"program_{i}.pl"
        _write_atomic(out / name, render_program(program))
        records.append({"file": name, "status": "ok",
                        "clauses": len(program.clauses)})
    manifest = {
        "mode": "enumerate",
        "seed": config.seed,
        "config_sha256": config.config_sha256,
        "truncated": truncated,
        "programs": records,
    }
    _write_json(out / "manifest.json", manifest)
    if truncated:
        print(f"budget exceeded after {len(records)} programs", file=sys.stderr)
        return EXIT_BUDGET
    print(f"wrote {len(records)} programs to {out}")
    return EXIT_OK


def _run_sample(config: RunConfig, out: Path) -> int:
    records = []
    timings = {}
    worst = EXIT_OK
    for k in range(config.sample_count):
        program, query, params, elapsed, status = _sample_one(config, k)
        name = f"program_{k}.pl"
        timings[name] = round(elapsed, 6)
        if status != "ok":
            records.append({"file": None, "status": status})
            worst = max(worst, EXIT_BUDGET)
            continue
        reason = _validate_output(program, params)
        if reason is not None:
            records.append({"file": None, "status": "invalid", "reason": reason})
            worst = EXIT_INTERNAL
            continue
        _write_atomic(out / name, render_program(program, query=query))
        records.append({"file": name, "status": "ok",
                        "clauses": len(program.clauses)})
    manifest = {
        "mode": "sample",
        "seed": config.seed,
        "config_sha256": config.config_sha256,
        "programs": records,
    }
    _write_json(out / "manifest.json", manifest)
    _write_json(out / "timings.json", timings)
    ok = sum(1 for r in records if r["status"] == "ok")
    print(f"wrote {ok}/{config.sample_count} programs to {out}")
    return worst


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="generate",
        description="Generate random (probabilistic) logic programs.")
    parser.add_argument("--config", required=True, help="configuration file")
    parser.add_argument("--mode", choices=("sample", "enumerate", "count"))
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out", help="output directory (default: current)")
    parser.add_argument("--count", type=int, dest="count",
                        help="number of programs to sample")
    parser.add_argument("--timeout", type=float,
                        help="per-program wall-clock timeout in seconds")
    parser.add_argument("--budget", type=int,
                        help="solution budget for enumerate/count")
    args = parser.parse_args(argv)

    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        config = parse_config(text)
        if args.mode:
            config.mode = args.mode
        if args.seed is not None:
            config.seed = args.seed
        if args.out:
            config.output_dir = args.out
        if args.count is not None:
            config.sample_count = args.count
        if args.timeout is not None:
            config.timeout_seconds = args.timeout
        if args.budget is not None:
            config.budget = args.budget
        from .config import _validate_mode
        _validate_mode(config)
    except (ConfigError, ParameterError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        return run(config)
    except (ConfigError, ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
