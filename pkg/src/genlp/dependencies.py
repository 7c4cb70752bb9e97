"""Predicate dependency machinery.

Two layers that deliberately do not share code:

* constraint-level: a reified adjacency matrix channelled from the clause
  variables, a dependency-set walker over the partially determined matrix,
  the independence propagator (tri-state entailment + pruning), and the
  stratification check (entailment-only, fails on forbidden cycles);
* program-level oracles: verify_independence / verify_stratified recompute
  the same properties from a decoded Program and are used to cross-check the
  propagators and every emitted program.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .cp import Contradiction, IntVar, Model, Propagator, Verdict
from .parameters import CycleMode, Encoding
from .programs import Atom, Formula, Not, And, Or, Program, TOP, body_atoms


# --------------------------------------------------------------------------
# dependency kinds (by number of undetermined edges on the witnessing path)

class DepKind(enum.Enum):
    DETERMINED = "determined"
    ALMOST_DETERMINED = "almost_determined"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Dependency:
    kind: DepKind
    predicate: int
    edge: Optional[tuple[int, int]] = None  # the one undetermined edge, AD only

    @staticmethod
    def determined(p: int) -> "Dependency":
        return Dependency(DepKind.DETERMINED, p)

    @staticmethod
    def almost(p: int, s: int, t: int) -> "Dependency":
        return Dependency(DepKind.ALMOST_DETERMINED, p, (s, t))

    @staticmethod
    def undetermined(p: int) -> "Dependency":
        return Dependency(DepKind.UNDETERMINED, p)


AdjacencyMatrix = dict  # (src, dst) -> IntVar over {0, 1}


class AdjacencyChannel(Propagator):
    """entry = 1 iff some clause has the target predicate as head and the
    source predicate named in its body (element-wise channeling, both ways)."""

    cheap = False
    __slots__ = ("entry", "src", "dst", "clauses")

    def __init__(self, entry: IntVar, src: int, dst: int, clauses: Sequence):
        super().__init__()
        self.entry = entry
        self.src = src
        self.dst = dst
        self.clauses = tuple(clauses)

    def variables(self):
        vs = [self.entry]
        for cv in self.clauses:
            vs.append(cv.head_pred)
            vs.extend(cv.names)
        return vs

    def _scan(self):
        """Clauses that could/must realize the edge."""
        src, dst = self.src, self.dst
        candidates = []
        definite = False
        for cv in self.clauses:
            if not cv.head_pred.contains(dst):
                continue
            if not any(src in nm.dom for nm in cv.names):
                continue
            candidates.append(cv)
            if cv.head_pred.is_fixed() and any(
                    nm.is_fixed() and nm.value() == src for nm in cv.names):
                definite = True
        return candidates, definite

    def propagate(self):
        entry, src, dst = self.entry, self.src, self.dst
        candidates, definite = self._scan()
        if definite:
            entry.assign(1)
        elif not candidates:
            entry.assign(0)
        if not entry.is_fixed():
            return
        if entry.value() == 0:
            for cv in self.clauses:
                if cv.head_pred.is_fixed() and cv.head_pred.value() == dst:
                    for nm in cv.names:
                        nm.remove(src)
                elif any(nm.is_fixed() and nm.value() == src for nm in cv.names):
                    cv.head_pred.remove(dst)
        elif len(candidates) == 1 and not definite:
            cv = candidates[0]
            cv.head_pred.assign(dst)
            with_src = [nm for nm in cv.names if src in nm.dom]
            if len(with_src) == 1:
                with_src[0].assign(src)

    def entail(self) -> Verdict:
        candidates, definite = self._scan()
        if definite:
            if not self.entry.contains(1):
                return Verdict.FALSE
            if self.entry.is_fixed():
                return Verdict.TRUE
        elif not candidates:
            if not self.entry.contains(0):
                return Verdict.FALSE
            if self.entry.is_fixed():
                return Verdict.TRUE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        src, dst = self.src, self.dst
        realized = any(
            value_of(cv.head_pred) == dst
            and any(value_of(nm) == src for nm in cv.names)
            for cv in self.clauses)
        return (value_of(self.entry) == 1) == realized


def post_adjacency_channeling(model: Model, enc: Encoding,
                              clauses: Sequence) -> AdjacencyMatrix:
    """Create and channel the |P| x |P| reified dependency-edge matrix."""
    matrix: AdjacencyMatrix = {}
    for i in range(enc.npreds):
        for j in range(enc.npreds):
            entry = model.int_var((0, 1), f"A[{i}][{j}]")
            matrix[i, j] = entry
            model.post(AdjacencyChannel(entry, i, j, clauses))
    return matrix


# --------------------------------------------------------------------------
# dependency sets over a partially determined matrix

def deps(p: int, all_deps: bool, matrix: AdjacencyMatrix,
         npreds: int) -> frozenset[Dependency]:
    """Closure of (potential) dependencies of predicate p.

    Walks in-edges: a determined edge preserves the dependency kind, an
    undetermined edge degrades a determined dependency to almost-determined
    (remembering that edge); with all_deps every possible edge also yields an
    undetermined entry, so the closure covers every predicate that could
    still end up in the dependency set.
    """
    found: set[Dependency] = {Dependency.determined(p)}
    work = [Dependency.determined(p)]
    while work:
        d = work.pop()
        for q in range(npreds):
            entry = matrix[q, d.predicate]
            fixed_edge = entry.is_fixed() and entry.value() == 1
            possible_edge = entry.contains(1)
            new: Optional[Dependency] = None
            if fixed_edge and d.kind is DepKind.DETERMINED:
                new = Dependency.determined(q)
            elif fixed_edge and d.kind is DepKind.ALMOST_DETERMINED:
                new = Dependency.almost(q, *d.edge)
            elif not entry.is_fixed() and d.kind is DepKind.DETERMINED:
                new = Dependency.almost(q, q, d.predicate)
            elif possible_edge and all_deps:
                new = Dependency.undetermined(q)
            if new is not None and new not in found:
                found.add(new)
                work.append(new)
    return frozenset(found)


class IndependencePropagator(Propagator):
    """Keeps two predicates' dependency closures disjoint.

    entail: no shared potential dependency = TRUE; a shared dependency
    determined on both sides = FALSE; otherwise UNDEFINED. propagate: fails
    on the FALSE condition and deletes the single undetermined edge of any
    almost-determined dependency shared with a determined one.
    """

    cheap = False
    __slots__ = ("p1", "p2", "matrix", "npreds")

    def __init__(self, p1: int, p2: int, matrix: AdjacencyMatrix, npreds: int):
        super().__init__()
        if p1 == p2:
            raise ValueError("independence needs two distinct predicates")
        self.p1, self.p2 = p1, p2
        self.matrix = matrix
        self.npreds = npreds

    def variables(self):
        return tuple(self.matrix.values())

    def propagate(self):
        d1s = deps(self.p1, False, self.matrix, self.npreds)
        d2s = deps(self.p2, False, self.matrix, self.npreds)
        det = DepKind.DETERMINED
        almost = DepKind.ALMOST_DETERMINED
        for d1 in d1s:
            for d2 in d2s:
                if d1.predicate != d2.predicate:
                    continue
                if d1.kind is det and d2.kind is det:
                    raise Contradiction(
                        f"predicates {self.p1} and {self.p2} share dependency "
                        f"{d1.predicate}")
                if d1.kind is det and d2.kind is almost:
                    s, t = d2.edge
                    self.matrix[s, t].remove(1)
                elif d2.kind is det and d1.kind is almost:
                    s, t = d1.edge
                    self.matrix[s, t].remove(1)

    def entail(self) -> Verdict:
        d1s = deps(self.p1, True, self.matrix, self.npreds)
        d2s = deps(self.p2, True, self.matrix, self.npreds)
        shared = [(d1, d2) for d1 in d1s for d2 in d2s
                  if d1.predicate == d2.predicate]
        if not shared:
            return Verdict.TRUE
        det = DepKind.DETERMINED
        if any(d1.kind is det and d2.kind is det for d1, d2 in shared):
            return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        edges = {(q, x) for (q, x), var in self.matrix.items()
                 if value_of(var) == 1}
        return not (_closure(self.p1, edges) & _closure(self.p2, edges))


def _closure(p: int, edges: set[tuple[int, int]]) -> set[int]:
    out = {p}
    work = [p]
    while work:
        x = work.pop()
        for (q, y) in edges:
            if y == x and q not in out:
                out.add(q)
                work.append(q)
    return out


# --------------------------------------------------------------------------
# stratification over partially determined clauses

class StratificationPropagator(Propagator):
    """Fails when the clauses already determined exhibit a forbidden cycle.

    A clause contributes edges once its head, every node name and every
    structure entry are determined; an edge is negative when some occurrence
    of the source predicate sits below a negation node. Entailment-only:
    never prunes.
    """

    cheap = False
    __slots__ = ("clauses", "mode", "enc")

    def __init__(self, clauses: Sequence, mode: CycleMode, enc: Encoding):
        super().__init__()
        if mode is CycleMode.NONE:
            raise ValueError("stratification check needs a forbidding mode")
        self.clauses = tuple(clauses)
        self.mode = mode
        self.enc = enc

    def variables(self):
        vs = []
        for cv in self.clauses:
            vs.append(cv.head_pred)
            vs.extend(cv.names)
            vs.extend(cv.structure)
        return vs

    def _determined_edges(self) -> Optional[dict]:
        """(src, dst) -> negative? over fully determined clauses; None when
        some determined clause is malformed (cannot happen at fixpoint)."""
        enc = self.enc
        edges: dict[tuple[int, int], bool] = {}
        for cv in self.clauses:
            if not cv.head_pred.is_fixed():
                continue
            head = cv.head_pred.value()
            if head == enc.blank_pred:
                continue
            if not all(v.is_fixed() for v in cv.names):
                continue
            if not all(v.is_fixed() for v in cv.structure):
                continue
            structure = [v.value() for v in cv.structure]
            names = [v.value() for v in cv.names]
            for i, name in enumerate(names):
                if name >= enc.npreds:
                    continue
                if i >= 1 and structure[i] == i:
                    continue  # padding
                negs = 0
                cur = i
                while cur != 0:
                    cur = structure[cur]
                    if names[cur] == enc.neg:
                        negs += 1
                key = (name, head)
                edges[key] = edges.get(key, False) or negs > 0
        return edges

    def _violates(self, edges: dict) -> bool:
        adjacency: dict[int, set[int]] = {}
        for (src, dst) in edges:
            adjacency.setdefault(src, set()).add(dst)
        if self.mode is CycleMode.FORBID_ALL:
            return _has_cycle(adjacency)
        for (src, dst), negative in edges.items():
            if negative and _reaches(adjacency, dst, src):
                return True
        return False

    def propagate(self):
        if self._violates(self._determined_edges()):
            raise Contradiction(f"forbidden cycle ({self.mode.value})")

    def entail(self) -> Verdict:
        if self._violates(self._determined_edges()):
            return Verdict.FALSE
        fully = all(
            cv.head_pred.is_fixed()
            and all(v.is_fixed() for v in cv.names)
            and all(v.is_fixed() for v in cv.structure)
            for cv in self.clauses)
        return Verdict.TRUE if fully else Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        enc = self.enc
        edges: dict[tuple[int, int], bool] = {}
        for cv in self.clauses:
            head = value_of(cv.head_pred)
            if head == enc.blank_pred:
                continue
            structure = [value_of(v) for v in cv.structure]
            names = [value_of(v) for v in cv.names]
            for i, name in enumerate(names):
                if name >= enc.npreds or (i >= 1 and structure[i] == i):
                    continue
                negs = 0
                cur = i
                while cur != 0:
                    cur = structure[cur]
                    if names[cur] == enc.neg:
                        negs += 1
                key = (name, head)
                edges[key] = edges.get(key, False) or negs > 0
        return not self._violates(edges)


def _has_cycle(adjacency: dict[int, set[int]]) -> bool:
    WHITE, GREY, BLACK = 0, 1, 2
    colour: dict[int, int] = {}

    def visit(u: int) -> bool:
        colour[u] = GREY
        for v in adjacency.get(u, ()):
            c = colour.get(v, WHITE)
            if c == GREY or (c == WHITE and visit(v)):
                return True
        colour[u] = BLACK
        return False

    nodes = set(adjacency)
    for vs in adjacency.values():
        nodes |= vs
    return any(visit(u) for u in nodes if colour.get(u, WHITE) == WHITE)


def _reaches(adjacency: dict[int, set[int]], start: int, goal: int) -> bool:
    seen = {start}
    work = [start]
    while work:
        u = work.pop()
        if u == goal:
            return True
        for v in adjacency.get(u, ()):
            if v not in seen:
                seen.add(v)
                work.append(v)
    return False


# --------------------------------------------------------------------------
# program-level oracles (independent reimplementations over decoded programs)

@dataclass(frozen=True)
class LabeledDepGraph:
    nodes: frozenset[str]
    edges: frozenset[tuple[str, str, str]]  # (src, dst, "positive"|"negative")


def dependency_graph(program: Program,
                     predicates: Iterable[str] = ()) -> LabeledDepGraph:
    """Labelled predicate dependency graph of a decoded program. An edge
    src->dst is negative when any occurrence of src in a dst-headed clause
    lies under at least one negation."""
    nodes = set(predicates)
    negative: dict[tuple[str, str], bool] = {}
    for clause in program.clauses:
        head = clause.head.predicate
        nodes.add(head)
        for atom, under_neg in _occurrences(clause.body, False):
            nodes.add(atom.predicate)
            key = (atom.predicate, head)
            negative[key] = negative.get(key, False) or under_neg
    edges = frozenset((src, dst, "negative" if neg else "positive")
                      for (src, dst), neg in negative.items())
    return LabeledDepGraph(frozenset(nodes), edges)


def _occurrences(formula: Formula, under_neg: bool):
    if formula is TOP:
        return
    if isinstance(formula, Atom):
        yield formula, under_neg
    elif isinstance(formula, Not):
        yield from _occurrences(formula.child, True)
    elif isinstance(formula, (And, Or)):
        for child in formula.children:
            yield from _occurrences(child, under_neg)


def dependency_closure(graph: LabeledDepGraph, predicate: str) -> set[str]:
    """Smallest set containing the predicate and closed under direct
    predecessors."""
    if predicate not in graph.nodes:
        raise ValueError(f"unknown predicate {predicate!r}")
    out = {predicate}
    work = [predicate]
    while work:
        x = work.pop()
        for src, dst, _ in graph.edges:
            if dst == x and src not in out:
                out.add(src)
                work.append(src)
    return out


def verify_independence(program: Program, pair: tuple[str, str],
                        predicates: Iterable[str] = ()) -> bool:
    """Brute-force oracle: disjoint dependency closures."""
    graph = dependency_graph(program, predicates)
    p, q = pair
    return not (dependency_closure(graph, p) & dependency_closure(graph, q))


def verify_stratified(program: Program, mode: CycleMode) -> bool:
    """Brute-force oracle: no forbidden cycle in the labelled graph."""
    if mode is CycleMode.NONE:
        raise ValueError("stratification verification needs a forbidding mode")
    graph = dependency_graph(program)
    adjacency: dict[str, set[str]] = {}
    for src, dst, _ in graph.edges:
        adjacency.setdefault(src, set()).add(dst)

    if mode is CycleMode.FORBID_ALL:
        # iterative DFS, independent of the propagator's recursive version
        seen: set[str] = set()
        for root in sorted(graph.nodes):
            if root in seen:
                continue
            stack = [(root, iter(sorted(adjacency.get(root, ()))))]
            on_path = {root}
            seen.add(root)
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if nxt in on_path:
                        return False
                    if nxt not in seen:
                        seen.add(nxt)
                        on_path.add(nxt)
                        stack.append((nxt, iter(sorted(adjacency.get(nxt, ())))))
                        advanced = True
                        break
                if not advanced:
                    on_path.discard(node)
                    stack.pop()
        return True

    negative_edges = [(src, dst) for src, dst, sign in graph.edges
                      if sign == "negative"]
    for src, dst in negative_edges:
        # cycle through this negative edge: dst reaches back to src
        seen = {dst}
        work = [dst]
        found = False
        while work:
            u = work.pop()
            if u == src:
                found = True
                break
            for v in sorted(adjacency.get(u, ())):
                if v not in seen:
                    seen.add(v)
                    work.append(v)
        if found:
            return False
    return True
