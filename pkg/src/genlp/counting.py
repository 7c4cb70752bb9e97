"""Exact combinatorial program counts, cross-validated by enumeration.

Counts are exact arbitrary-precision integers; they outgrow 64 bits at
modest parameters. The closed recursion only makes sense when every
predicate has arity >= 1, so zero-arity configurations are rejected rather
than miscounted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .parameters import CycleMode, Parameters


class UnsupportedConfiguration(ValueError):
    """The counting recursion does not cover this parameter set."""


class EnumerationBudgetExceeded(RuntimeError):
    """Enumeration aborted: more solutions than the configured budget."""


class CountingContext:
    """Memoized counting for one parameter set."""

    def __init__(self, params: Parameters):
        if params.min_arity < 1:
            raise UnsupportedConfiguration(
                "counting requires every predicate to have arity >= 1")
        self.params = params
        self.min_arity = params.min_arity
        self.arity_multiplicity: dict[int, int] = {}
        for a in params.arities:
            self.arity_multiplicity[a] = self.arity_multiplicity.get(a, 0) + 1
        self._bodies: dict[tuple[int, int], int] = {}
        self._parts: dict[tuple[int, int, int], int] = {}
        self._terms: dict[int, int] = {}

    # -- bodies with gaps ----------------------------------------------------

    def count_bodies(self, n: int, a: int) -> int:
        """Bodies with exactly n nodes and total arity a (terms left open).

        One node is an atom of arity a. Otherwise the root is either a
        negation over an (n-1)-node body, or one of the two wide connectives
        whose k >= 2 children split the remaining n-1 nodes and the arity a.
        """
        if n < 1 or a < 0:
            return 0
        key = (n, a)
        cached = self._bodies.get(key)
        if cached is not None:
            return cached
        if n == 1:
            result = self.arity_multiplicity.get(a, 0)
        else:
            result = self.count_bodies(n - 1, a)
            wide = 0
            for k in range(2, n):
                wide += self._split(n - 1, a, k)
            result += 2 * wide
        self._bodies[key] = result
        return result

    def _split(self, m: int, b: int, k: int) -> int:
        """Sum over ways to split m nodes and arity b across k ordered
        children, each child getting >= 1 node and >= min_arity arity."""
        if k == 1:
            return self.count_bodies(m, b)
        if m < k or b < k * self.min_arity:
            return 0
        key = (m, b, k)
        cached = self._parts.get(key)
        if cached is not None:
            return cached
        total = 0
        for c in range(1, m - (k - 1) + 1):
            for d in range(self.min_arity, b - (k - 1) * self.min_arity + 1):
                first = self.count_bodies(c, d)
                if first:
                    total += first * self._split(m - c, b - d, k - 1)
        self._parts[key] = total
        return total

    def count_bodies_total(self, a: int) -> int:
        """Bodies of any admissible size with total arity a; a = 0 counts the
        single empty body."""
        if a == 0:
            return 1
        return sum(self.count_bodies(n, a) for n in range(1, self.params.max_nodes + 1))

    # -- term selections -------------------------------------------------------

    def count_term_selections(self, n: int) -> int:
        """Ways to fill n term slots with constants and canonically ordered
        variables: each slot takes a constant or an already-introduced
        variable, or introduces the next unused one."""
        if n < 0:
            return 0
        cached = self._terms.get(n)
        if cached is not None:
            return cached
        nconsts = len(self.params.constants)
        nvars = len(self.params.variables)
        dp = [0] * (nvars + 1)
        dp[0] = 1
        for _ in range(n):
            ndp = [0] * (nvars + 1)
            for used, ways in enumerate(dp):
                if not ways:
                    continue
                ndp[used] += ways * (nconsts + used)
                if used < nvars:
                    ndp[used + 1] += ways
            dp = ndp
        result = sum(dp)
        self._terms[n] = result
        return result

    # -- whole programs --------------------------------------------------------

    def clause_choices(self, pred_index: int) -> int:
        """Distinct clauses available to one predicate: bodies of each total
        arity times the term selections for body plus head slots."""
        arity = self.params.arities[pred_index]
        top = self.params.max_arity * self.params.max_nodes
        return sum(self.count_bodies_total(a) * self.count_term_selections(a + arity)
                   for a in range(top + 1))

    def count_programs(self) -> int:
        """Programs with between |P| and max_clauses clauses, every predicate
        heading at least one."""
        params = self.params
        if params.independent_pairs:
            raise UnsupportedConfiguration(
                "counting does not model independence constraints")
        if params.cycle_mode is not CycleMode.NONE:
            raise UnsupportedConfiguration("counting does not model cycle modes")
        if params.forbid_empty_bodies:
            raise UnsupportedConfiguration(
                "counting does not model the empty-body restriction")
        choices = [self.clause_choices(i) for i in range(len(params.predicates))]
        dp = {0: 1}
        for w in choices:
            ndp: dict[int, int] = {}
            for used, ways in dp.items():
                for h in range(1, params.max_clauses - used + 1):
                    ndp[used + h] = ndp.get(used + h, 0) + ways * math.comb(w, h)
            dp = ndp
        return sum(ways for used, ways in dp.items()
                   if len(params.predicates) <= used <= params.max_clauses)


@dataclass(frozen=True)
class CountResult:
    """Exact counts from the closed recursion and, when enumerated, from the
    solver; agree is None when enumeration was refused (budget)."""

    formula: int
    enumerated: Optional[int]
    agree: Optional[bool]


def count_programs(params: Parameters) -> int:
    return CountingContext(params).count_programs()


def count_with_validation(params: Parameters, budget: int) -> CountResult:
    """Closed-form count cross-checked by enumeration within the budget."""
    formula = CountingContext(params).count_programs()
    if formula > budget:
        return CountResult(formula, None, None)
    try:
        enumerated = count_by_enumeration(params, budget=budget)
    except EnumerationBudgetExceeded:
        return CountResult(formula, None, None)
    return CountResult(formula, enumerated, enumerated == formula)


def count_by_enumeration(params: Parameters,
                         budget: Optional[int] = None) -> int:
    """Exhaustively solve the constraint model and count its solutions.

    Aborts (rather than returning a wrong number) once the count passes the
    budget. Probabilities never affect the count.
    """
    from .cp import SearchSpec, solve
    from .modeling import build_program_model

    pm = build_program_model(params)
    spec = SearchSpec(groups=pm.groups)
    n = 0
    for _ in solve(pm.model, spec):
        n += 1
        if budget is not None and n > budget:
            raise EnumerationBudgetExceeded(
                f"more than {budget} solutions for {params.predicates}")
    return n
