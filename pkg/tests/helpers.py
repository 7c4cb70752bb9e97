"""Shared test utilities: brute-force assignment filtering as the
independent oracle for the propagation/search path."""

from __future__ import annotations

import itertools
from typing import Sequence

from genlp.cp import IntVar, Model, SearchSpec, Solution, solve


def all_assignments(variables: Sequence[IntVar]):
    """Every full assignment over the variables' current domains."""
    domains = [sorted(v.dom) for v in variables]
    for combo in itertools.product(*domains):
        yield dict(zip((v.index for v in variables), combo))


def brute_force_keys(model: Model, variables: Sequence[IntVar]) -> set[tuple]:
    """Assignments satisfying every propagator's semantic check."""
    out = set()
    for assignment in all_assignments(variables):
        value_of = lambda v: assignment[v.index]
        if all(p.holds(value_of) for p in model.propagators):
            out.add(tuple(assignment[v.index] for v in variables))
    return out


def search_keys(model: Model, variables: Sequence[IntVar],
                groups=None, **kwargs) -> set[tuple]:
    """Solution keys found by exhaustive propagation-based search."""
    spec = SearchSpec(groups=groups or [list(variables)], **kwargs)
    found = set()
    for sol in solve(model, spec):
        key = sol.key(variables)
        assert key not in found, f"duplicate solution {key}"
        found.add(key)
    return found
