"""Finite-domain constraint engine core: variables, propagators, fixpoint loop.

Variables are integer variables (explicit finite domains) and set variables
(lower/upper bound pairs). State changes are trailed so that search can
backtrack in O(changes). Propagators subscribe to the variables they watch
and are re-run until no domain changes (a fixpoint) or some propagator fails.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Callable, Iterable, Optional


class Contradiction(Exception):
    """A domain wiped out or a propagator proved the current state infeasible."""


class ModelError(ValueError):
    """Invalid model construction (empty domain, malformed set bounds, ...)."""


class Verdict(enum.Enum):
    """Tri-state propagator self-assessment.

    TRUE and FALSE are final: once returned at a search node they hold for
    every full assignment below that node. UNDEFINED defers to future
    decisions.
    """

    TRUE = "true"
    FALSE = "false"
    UNDEFINED = "undefined"


class IntVar:
    """Integer variable over an explicit, shrinking finite domain."""

    __slots__ = ("model", "index", "name", "dom", "watchers")

    def __init__(self, model: "Model", index: int, domain: Iterable[int], name: str):
        dom = set(domain)
        if not dom:
            raise ModelError(f"empty initial domain for {name!r}")
        self.model = model
        self.index = index
        self.name = name
        self.dom = dom
        self.watchers: list["Propagator"] = []

    def __repr__(self) -> str:
        return f"{self.name}{sorted(self.dom)}"

    def size(self) -> int:
        return len(self.dom)

    def is_fixed(self) -> bool:
        return len(self.dom) == 1

    def value(self) -> int:
        if len(self.dom) != 1:
            raise ValueError(f"{self.name} is not determined: {sorted(self.dom)}")
        return next(iter(self.dom))

    def contains(self, v: int) -> bool:
        return v in self.dom

    def min(self) -> int:
        return min(self.dom)

    def max(self) -> int:
        return max(self.dom)

    def remove(self, v: int) -> bool:
        """Remove one value; returns True if the domain changed."""
        dom = self.dom
        if v not in dom:
            return False
        if len(dom) == 1:
            raise Contradiction(f"{self.name}: removing last value {v}")
        dom.discard(v)
        m = self.model
        m.trail.append((_UNDO_INT, self, v))
        m._wake(self)
        return True

    def assign(self, v: int) -> bool:
        dom = self.dom
        if v not in dom:
            raise Contradiction(f"{self.name}: cannot assign {v}")
        if len(dom) == 1:
            return False
        m = self.model
        trail = m.trail
        for u in dom:
            if u != v:
                trail.append((_UNDO_INT, self, u))
        dom.clear()
        dom.add(v)
        m._wake(self)
        return True

    def remove_above(self, bound: int) -> bool:
        gone = [v for v in self.dom if v > bound]
        if not gone:
            return False
        if len(gone) == len(self.dom):
            raise Contradiction(f"{self.name}: no value <= {bound}")
        m = self.model
        trail = m.trail
        dom = self.dom
        for v in gone:
            dom.discard(v)
            trail.append((_UNDO_INT, self, v))
        m._wake(self)
        return True

    def remove_below(self, bound: int) -> bool:
        gone = [v for v in self.dom if v < bound]
        if not gone:
            return False
        if len(gone) == len(self.dom):
            raise Contradiction(f"{self.name}: no value >= {bound}")
        m = self.model
        trail = m.trail
        dom = self.dom
        for v in gone:
            dom.discard(v)
            trail.append((_UNDO_INT, self, v))
        m._wake(self)
        return True


class SetVar:
    """Set variable bounded by a must-contain lower set and may-contain upper set."""

    __slots__ = ("model", "index", "name", "lower", "upper", "watchers")

    def __init__(self, model: "Model", index: int, lower: Iterable[int],
                 upper: Iterable[int], name: str):
        lo, up = set(lower), set(upper)
        if not lo <= up:
            raise ModelError(f"{name!r}: lower bound {sorted(lo)} not within upper {sorted(up)}")
        self.model = model
        self.index = index
        self.name = name
        self.lower = lo
        self.upper = up
        self.watchers: list["Propagator"] = []

    def __repr__(self) -> str:
        return f"{self.name}[{sorted(self.lower)}..{sorted(self.upper)}]"

    def is_fixed(self) -> bool:
        return len(self.lower) == len(self.upper)

    def value(self) -> frozenset:
        if not self.is_fixed():
            raise ValueError(f"{self.name} is not determined")
        return frozenset(self.lower)

    def include(self, v: int) -> bool:
        """Force v into the set."""
        if v in self.lower:
            return False
        if v not in self.upper:
            raise Contradiction(f"{self.name}: {v} excluded but required")
        self.lower.add(v)
        m = self.model
        m.trail.append((_UNDO_SET_LOWER, self, v))
        m._wake(self)
        return True

    def exclude(self, v: int) -> bool:
        """Remove v from the candidate elements."""
        if v not in self.upper:
            return False
        if v in self.lower:
            raise Contradiction(f"{self.name}: {v} required but excluded")
        self.upper.discard(v)
        m = self.model
        m.trail.append((_UNDO_SET_UPPER, self, v))
        m._wake(self)
        return True


_UNDO_INT = 0
_UNDO_SET_LOWER = 1
_UNDO_SET_UPPER = 2


class Propagator:
    """Base class for constraints.

    Subclasses implement propagate() (prune watched variables or raise
    Contradiction), entail() (tri-state Verdict, final when TRUE/FALSE),
    and holds(value_of) (semantic check on a full assignment, used as the
    independent oracle in brute-force tests).
    """

    __slots__ = ("_queued",)

    cheap = True  # cheap propagators run before expensive (fixpoint-priority) ones

    def __init__(self):
        self._queued = False

    def variables(self) -> Iterable:
        """Variables whose changes should re-run this propagator."""
        raise NotImplementedError

    def propagate(self) -> None:
        raise NotImplementedError

    def entail(self) -> Verdict:
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        """Does the constraint hold under a full assignment?

        value_of maps an IntVar to its int value and a SetVar to a frozenset.
        """
        raise NotImplementedError


class Model:
    """A constraint model: variables, propagators, trail, and the fixpoint loop."""

    def __init__(self, name: str = "model"):
        self.name = name
        self.int_vars: list[IntVar] = []
        self.set_vars: list[SetVar] = []
        self.propagators: list[Propagator] = []
        self.trail: list = []
        self._cheap_queue: deque = deque()
        self._costly_queue: deque = deque()

    def int_var(self, domain: Iterable[int], name: Optional[str] = None) -> IntVar:
        idx = len(self.int_vars)
        var = IntVar(self, idx, domain, name or f"x{idx}")
        self.int_vars.append(var)
        return var

    def set_var(self, lower: Iterable[int], upper: Iterable[int],
                name: Optional[str] = None) -> SetVar:
        idx = len(self.set_vars)
        var = SetVar(self, idx, lower, upper, name or f"s{idx}")
        self.set_vars.append(var)
        return var

    def post(self, prop: Propagator) -> Propagator:
        self.propagators.append(prop)
        for var in prop.variables():
            var.watchers.append(prop)
        self._schedule(prop)
        return prop

    # -- propagation ---------------------------------------------------------

    def _schedule(self, prop: Propagator) -> None:
        if not prop._queued:
            prop._queued = True
            (self._cheap_queue if prop.cheap else self._costly_queue).append(prop)

    def _wake(self, var) -> None:
        schedule = self._schedule
        for prop in var.watchers:
            schedule(prop)

    def _clear_queues(self) -> None:
        for q in (self._cheap_queue, self._costly_queue):
            while q:
                q.popleft()._queued = False

    def propagate(self) -> bool:
        """Run propagators to fixpoint. True = consistent, False = failed."""
        cheap, costly = self._cheap_queue, self._costly_queue
        try:
            while cheap or costly:
                prop = cheap.popleft() if cheap else costly.popleft()
                prop._queued = False
                prop.propagate()
        except Contradiction:
            self._clear_queues()
            return False
        return True

    # -- trail ---------------------------------------------------------------

    def mark(self) -> int:
        return len(self.trail)

    def undo_to(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            kind, var, v = trail.pop()
            if kind == _UNDO_INT:
                var.dom.add(v)
            elif kind == _UNDO_SET_LOWER:
                var.lower.discard(v)
            else:
                var.upper.add(v)
        self._clear_queues()

    # -- wakeups after a backtrack: propagators touching a variable must be
    #    re-run when search re-enters with a changed domain, which the search
    #    loop triggers by scheduling explicitly.

    def schedule_all(self) -> None:
        for prop in self.propagators:
            self._schedule(prop)
