"""Depth-first search over a model: grouped variable order, fail-first,
seeded-random or lexicographic value choice, geometric restarts.

Search branches binarily (x = v vs x != v), which makes restart-free
enumeration exhaustive and duplicate-free. Restarts unwind to the root after
a contradiction budget that grows geometrically; they never terminate the
search early and record no nogoods, so they are meant for sampling, not for
exhaustive enumeration.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .core import Contradiction, IntVar, Model, SetVar


class SearchTimeout(Exception):
    """Raised inside the solution stream when the deadline passes."""


@dataclass(frozen=True)
class GeometricRestarts:
    """Restart after ceil(base * factor^k) contradictions, k = 0, 1, 2, ..."""

    base: int = 10
    factor: float = 1.1

    def cutoffs(self) -> Iterator[int]:
        # exact arithmetic: float 10*1.1 is 11.000000000000002, whose ceiling
        # would wrongly be 12
        f = Fraction(str(self.factor))
        cur = Fraction(self.base)
        while True:
            yield math.ceil(cur)
            cur *= f


LEX = "lex"
RANDOM = "random"


@dataclass
class SearchSpec:
    """Variable groups are exhausted in order; fail-first within a group
    (ties broken by lowest variable index); values lexicographic or seeded
    random."""

    groups: Sequence[Sequence[IntVar]]
    value_order: str = LEX
    restarts: Optional[GeometricRestarts] = None


@dataclass
class SearchStats:
    solutions: int = 0
    contradictions: int = 0
    nodes: int = 0
    restarts: int = 0


class Solution:
    """Immutable snapshot of every variable determined at a solution."""

    __slots__ = ("_ints", "_sets")

    def __init__(self, model: Model):
        self._ints = {v.index: next(iter(v.dom)) for v in model.int_vars
                      if len(v.dom) == 1}
        self._sets = {v.index: (frozenset(v.lower), frozenset(v.upper))
                      for v in model.set_vars}

    def __getitem__(self, var):
        if isinstance(var, SetVar):
            lo, up = self._sets[var.index]
            if lo != up:
                raise KeyError(f"{var.name} not determined in this solution")
            return lo
        return self._ints[var.index]

    def set_bounds(self, var: SetVar):
        return self._sets[var.index]

    def key(self, variables: Sequence[IntVar]) -> tuple:
        return tuple(self._ints[v.index] for v in variables)


def solve(model: Model, spec: SearchSpec, seed: int = 0,
          stats: Optional[SearchStats] = None,
          deadline: Optional[float] = None) -> Iterator[Solution]:
    """Yield solutions of the model under the given search specification.

    With restarts disabled the stream enumerates every solution exactly once;
    with restarts enabled the stream is intended for taking the first
    solution (duplicates may appear across restarts). Identical
    (model, spec, seed) always reproduce the identical stream.
    """
    if stats is None:
        stats = SearchStats()
    decision_vars = [v for group in spec.groups for v in group]
    rngs: dict[int, random.Random] = {}

    def rng_for(var: IntVar) -> random.Random:
        r = rngs.get(var.index)
        if r is None:
            # per-variable stream: choices for one variable do not disturb
            # the others' reproducibility
            r = random.Random(f"{seed}:{var.index}")
            rngs[var.index] = r
        return r

    def pick_var() -> Optional[IntVar]:
        for group in spec.groups:
            best = None
            best_size = 0
            for v in group:
                s = len(v.dom)
                if s > 1 and (best is None or s < best_size
                              or (s == best_size and v.index < best.index)):
                    best, best_size = v, s
            if best is not None:
                return best
        return None

    def pick_value(var: IntVar) -> int:
        if spec.value_order == RANDOM:
            return rng_for(var).choice(sorted(var.dom))
        return min(var.dom)

    if not model.propagate():
        return

    root_mark = model.mark()
    frames: list[tuple[int, IntVar, int]] = []
    cutoffs = spec.restarts.cutoffs() if spec.restarts else None
    cutoff = next(cutoffs) if cutoffs else None
    since_restart = 0

    def backtrack() -> bool:
        """Undo to the deepest frame with an untried branch; apply x != v."""
        while frames:
            mark, var, value = frames.pop()
            model.undo_to(mark)
            var.remove(value)  # cannot wipe out: domain had >= 2 values
            return True
        return False

    while True:
        if deadline is not None and time.monotonic() > deadline:
            model.undo_to(root_mark)
            raise SearchTimeout
        stats.nodes += 1
        if model.propagate():
            var = pick_var()
            if var is None:
                stats.solutions += 1
                yield Solution(model)
                if not backtrack():
                    return
                continue
            value = pick_value(var)
            frames.append((model.mark(), var, value))
            var.assign(value)
        else:
            stats.contradictions += 1
            since_restart += 1
            if cutoff is not None and since_restart >= cutoff and frames:
                while frames:
                    frames.pop()
                model.undo_to(root_mark)
                stats.restarts += 1
                since_restart = 0
                cutoff = next(cutoffs)
                continue
            if not backtrack():
                return


def first_solution(model: Model, spec: SearchSpec, seed: int = 0,
                   stats: Optional[SearchStats] = None,
                   deadline: Optional[float] = None) -> Optional[Solution]:
    for sol in solve(model, spec, seed=seed, stats=stats, deadline=deadline):
        return sol
    return None
