"""Constraint model of a logic program.

Each of the max_clauses clause slots owns a head (predicate, arity,
arguments), a body (a forest encoded by a parent array plus per-node values)
and, when more than one logic variable exists, the per-clause symmetry
bundle (flattened term array, occurrence sets, first-occurrence indices).
Solutions decode into Program values.

Body encoding: structure[i] = i marks a root, otherwise the parent index.
The array is sorted non-decreasing, index 0 is the main tree's root, and all
other roots are trailing single-node padding trees fixed to the empty
marker; num_nodes counts the main tree, so indices >= num_nodes are exactly
the padding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .cp import (
    AllDifferentExceptZero,
    Contradiction,
    CountMatches,
    CountValueEq,
    EqConstIff,
    IfEqThenAssign,
    IndexGate,
    InSet,
    IntVar,
    LexLessUnless,
    MemberChannel,
    MinPlusOneOrZero,
    Model,
    NonDecreasing,
    NValues,
    Propagator,
    SetDisjoint,
    SetVar,
    Solution,
    SumConst,
    Table,
    Verdict,
)
from .parameters import Encoding, Parameters
from .programs import And, Atom, Clause, Formula, Not, Or, Program, TOP


class DecodeError(RuntimeError):
    """A solution snapshot did not describe a well-formed program."""


@dataclass
class ClauseVars:
    """Decision and channelled variables of one clause slot."""

    index: int
    head_pred: IntVar
    head_arity: IntVar
    head_args: list[IntVar]
    structure: list[IntVar]
    names: list[IntVar]
    node_arities: list[IntVar]
    node_args: list[list[IntVar]]
    num_trees: IntVar
    num_nodes: IntVar
    terms: list[IntVar]                       # head args then node args, flattened
    occ: Optional[list[SetVar]] = None        # per term value, only when |V| > 1
    intros: Optional[list[IntVar]] = None
    potentials: Optional[SetVar] = None

    def lex_vector(self) -> tuple[IntVar, ...]:
        """Total-order key: head predicate (disabled marker largest), head
        arguments, structure, node names, node arguments."""
        flat_args = [a for args in self.node_args for a in args]
        return tuple([self.head_pred] + self.head_args + self.structure
                     + self.names + flat_args)


@dataclass
class ProgramModel:
    params: Parameters
    enc: Encoding
    model: Model
    clauses: list[ClauseVars]
    groups: list[list[IntVar]]
    adjacency: Optional[dict] = None


def make_clause_vars(model: Model, enc: Encoding, k: int) -> ClauseVars:
    params = enc.params
    ma, mn = params.max_arity, params.max_nodes
    head_pred = model.int_var(enc.head_pred_domain, f"c{k}.pred")
    head_arity = model.int_var(range(ma + 1), f"c{k}.arity")
    head_args = [model.int_var(enc.term_domain, f"c{k}.harg{j}") for j in range(ma)]
    structure = [model.int_var(range(i + 1) if i else (0,), f"c{k}.st{i}")
                 for i in range(mn)]
    names = [model.int_var(enc.node_name_domain, f"c{k}.n{i}") for i in range(mn)]
    node_arities = [model.int_var(range(ma + 1), f"c{k}.na{i}") for i in range(mn)]
    node_args = [[model.int_var(enc.term_domain, f"c{k}.n{i}a{j}") for j in range(ma)]
                 for i in range(mn)]
    num_trees = model.int_var(range(1, mn + 1), f"c{k}.trees")
    num_nodes = model.int_var(range(1, mn + 1), f"c{k}.nodes")
    terms = list(head_args)
    for args in node_args:
        terms.extend(args)
    return ClauseVars(k, head_pred, head_arity, head_args, structure, names,
                      node_arities, node_args, num_trees, num_nodes, terms)


def post_clause_head(model: Model, enc: Encoding, cv: ClauseVars) -> None:
    """Predicate-arity link plus argument gating for one clause."""
    model.post(Table([cv.head_pred, cv.head_arity], enc.head_arity_tuples()))
    model.post(IndexGate(cv.head_arity,
                         [(j, arg, enc.blank_term)
                          for j, arg in enumerate(cv.head_args)]))


def post_head_constraints(model: Model, enc: Encoding,
                          clauses: Sequence[ClauseVars]) -> None:
    """Predicate-arity link, argument gating, every-predicate coverage via
    the value-count form, and the duplicate-killing clause order."""
    params = enc.params
    npreds = enc.npreds
    for cv in clauses:
        post_clause_head(model, enc, cv)
    preds = [cv.head_pred for cv in clauses]
    nv = model.int_var((npreds, npreds + 1), "nvalues")
    model.post(NValues(preds, nv))
    cblank = model.int_var(range(len(clauses) - npreds + 1), "blanks")
    model.post(CountValueEq(preds, enc.blank_pred, cblank))
    model.post(EqConstIff(cblank, 0, nv, npreds))
    for p in range(npreds):
        cnt = model.int_var(range(1, len(clauses) + 1), f"uses_{params.predicates[p]}")
        model.post(CountValueEq(preds, p, cnt))
    for prev, cur in zip(clauses, clauses[1:]):
        model.post(LexLessUnless(cur.head_pred, enc.blank_pred,
                                 prev.lex_vector(), cur.lex_vector()))


class _ChildCountNameLink(Propagator):
    """Node class from child count: 0 children = atom or empty marker,
    1 = negation, >1 = conjunction/disjunction."""

    __slots__ = ("count", "name", "enc")

    def __init__(self, count: IntVar, name: IntVar, enc: Encoding):
        super().__init__()
        self.count = count
        self.name = name
        self.enc = enc

    def variables(self):
        return (self.count, self.name)

    def _classes(self, name_value: int) -> int:
        enc = self.enc
        if name_value < enc.npreds or name_value == enc.top:
            return 0
        if name_value == enc.neg:
            return 1
        return 2

    def propagate(self):
        count, name = self.count, self.name
        present = {self._classes(v) for v in name.dom}
        if 0 not in present:
            count.remove(0)
        if 1 not in present:
            count.remove(1)
        if 2 not in present:
            count.remove_above(1)
        may0 = count.contains(0)
        may1 = count.contains(1)
        may_many = count.max() >= 2
        for v in list(name.dom):
            cls = self._classes(v)
            if (cls == 0 and not may0) or (cls == 1 and not may1) \
                    or (cls == 2 and not may_many):
                name.remove(v)

    def entail(self) -> Verdict:
        if self.count.is_fixed() and self.name.is_fixed():
            cls = self._classes(self.name.value())
            n = self.count.value()
            ok = (cls == 0 and n == 0) or (cls == 1 and n == 1) or (cls == 2 and n >= 2)
            return Verdict.TRUE if ok else Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        cls = self._classes(value_of(self.name))
        n = value_of(self.count)
        return (cls == 0 and n == 0) or (cls == 1 and n == 1) or (cls == 2 and n >= 2)


def post_clause_body(model: Model, enc: Encoding, cv: ClauseVars) -> None:
    params = enc.params
    mn = params.max_nodes
    node_tuples = enc.node_arity_tuples()
    model.post(NonDecreasing(cv.structure))
    model.post(CountMatches(cv.structure, list(range(mn)), cv.num_trees))
    model.post(SumConst(cv.num_nodes, cv.num_trees, mn + 1))
    if mn > 1:
        model.post(IndexGate(cv.num_nodes,
                             [(i, cv.structure[i], i) for i in range(1, mn)]))
        model.post(IndexGate(cv.num_nodes,
                             [(i, cv.names[i], enc.top) for i in range(1, mn)]))
    for i in range(mn):
        model.post(Table([cv.names[i], cv.node_arities[i]], node_tuples))
        model.post(IndexGate(cv.node_arities[i],
                             [(j, arg, enc.blank_term)
                              for j, arg in enumerate(cv.node_args[i])]))
        cnt = model.int_var(range(mn - i), f"c{cv.index}.ch{i}")
        model.post(CountValueEq(cv.structure[i + 1:], i, cnt))
        model.post(_ChildCountNameLink(cnt, cv.names[i], enc))
    model.post(IfEqThenAssign(cv.head_pred, enc.blank_pred,
                              [(cv.num_nodes, 1), (cv.names[0], enc.top)]))
    if params.forbid_empty_bodies:
        model.post(IfEqThenAssign(cv.names[0], enc.top,
                                  [(cv.head_pred, enc.blank_pred)]))


def post_body_constraints(model: Model, enc: Encoding,
                          clauses: Sequence[ClauseVars]) -> None:
    for cv in clauses:
        post_clause_body(model, enc, cv)


class _TokenNodeBlocksIntros(Propagator):
    """A non-atom node has no real arguments, so no variable can be
    introduced at its argument slots."""

    __slots__ = ("name", "potentials", "slots", "npreds")

    def __init__(self, name: IntVar, potentials: SetVar, slots: Sequence[int],
                 npreds: int):
        super().__init__()
        self.name = name
        self.potentials = potentials
        self.slots = tuple(slots)
        self.npreds = npreds

    def variables(self):
        return (self.name, self.potentials)

    def _surely_token(self) -> bool:
        return all(v >= self.npreds for v in self.name.dom)

    def propagate(self):
        if self._surely_token():
            for s in self.slots:
                self.potentials.exclude(s)
        elif any(s in self.potentials.lower for s in self.slots):
            for v in list(self.name.dom):
                if v >= self.npreds:
                    self.name.remove(v)

    def entail(self) -> Verdict:
        claimed = [s for s in self.slots if s in self.potentials.lower]
        if self.name.is_fixed():
            if self.name.value() < self.npreds:
                return Verdict.TRUE
            if claimed:
                return Verdict.FALSE
            if all(s not in self.potentials.upper for s in self.slots):
                return Verdict.TRUE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        if value_of(self.name) < self.npreds:
            return True
        pot = value_of(self.potentials)
        return all(s not in pot for s in self.slots)


def post_clause_symmetry(model: Model, enc: Encoding, cv: ClauseVars) -> None:
    params = enc.params
    ma, mn = params.max_arity, params.max_nodes
    n = ma * (mn + 1)
    term_values = range(enc.blank_term + 1)
    k = cv.index
    cv.occ = [model.set_var((), range(n), f"c{k}.occ{t}") for t in term_values]
    for t in term_values:
        model.post(MemberChannel(cv.terms, cv.occ[t], t))
    for u in term_values:
        for v in range(u + 1, enc.blank_term + 1):
            model.post(SetDisjoint(cv.occ[u], cv.occ[v]))
    cv.intros = []
    for vi in range(len(params.variables)):
        intro = model.int_var(range(n + 1), f"c{k}.intro{vi}")
        cv.intros.append(intro)
        model.post(MinPlusOneOrZero(cv.occ[enc.variable_code(vi)], intro))
    model.post(NonDecreasing(cv.intros))
    model.post(AllDifferentExceptZero(cv.intros, zero=0))
    cv.potentials = model.set_var((), range(n + 1), f"c{k}.pot")
    for intro in cv.intros:
        model.post(InSet(intro, cv.potentials))
    for i in range(mn):
        slots = [ma * (i + 1) + j + 1 for j in range(ma)]
        model.post(_TokenNodeBlocksIntros(cv.names[i], cv.potentials,
                                          slots, enc.npreds))


def post_symmetry_constraints(model: Model, enc: Encoding,
                              clauses: Sequence[ClauseVars]) -> None:
    """Per-clause variable canonicalization; a no-op unless |V| > 1.

    First occurrences (shifted by one; zero = unused) are sorted
    non-decreasing, so the unused variables are a prefix of the declared
    order and the used ones first occur in declared order.
    """
    if len(enc.params.variables) <= 1:
        return
    for cv in clauses:
        post_clause_symmetry(model, enc, cv)


def build_search_groups(params: Parameters,
                        clauses: Sequence[ClauseVars]) -> list[list[IntVar]]:
    """Head predicates first; then per clause: structure, node names, head
    arguments, first-occurrence indices (when present), node arguments."""
    groups: list[list[IntVar]] = [[cv.head_pred for cv in clauses]]
    for cv in clauses:
        groups.append(list(cv.structure))
        groups.append(list(cv.names))
        groups.append(list(cv.head_args))
        if cv.intros is not None:
            groups.append(list(cv.intros))
        groups.append([a for args in cv.node_args for a in args])
    return groups


def build_program_model(params: Parameters) -> ProgramModel:
    """Create the full constraint model for the given parameters."""
    from . import dependencies  # deferred: dependencies builds on this module's vars

    enc = Encoding(params)
    model = Model("programs")
    clauses = [make_clause_vars(model, enc, k) for k in range(params.max_clauses)]
    post_head_constraints(model, enc, clauses)
    post_body_constraints(model, enc, clauses)
    post_symmetry_constraints(model, enc, clauses)
    adjacency = None
    if params.independent_pairs:
        adjacency = dependencies.post_adjacency_channeling(model, enc, clauses)
        for pair in sorted(tuple(sorted(p)) for p in params.independent_pairs):
            p1, p2 = (enc.pred_index(name) for name in pair)
            model.post(dependencies.IndependencePropagator(p1, p2, adjacency,
                                                           enc.npreds))
    if params.cycle_mode.value != "none":
        model.post(dependencies.StratificationPropagator(clauses, params.cycle_mode,
                                                         enc))
    groups = build_search_groups(params, clauses)
    return ProgramModel(params, enc, model, clauses, groups, adjacency)


def decode_solution(pm: ProgramModel, sol: Solution) -> Program:
    """Rebuild the program a solution encodes; disabled clause slots are
    skipped and argument padding is stripped."""
    enc = pm.enc
    decoded = []
    try:
        for cv in pm.clauses:
            pred = sol[cv.head_pred]
            if pred == enc.blank_pred:
                continue
            arity = sol[cv.head_arity]
            head = Atom(enc.pred_name(pred),
                        tuple(enc.term_name(sol[a]) for a in cv.head_args[:arity]))
            decoded.append(Clause(head, _decode_body(enc, cv, sol)))
    except KeyError as exc:
        raise DecodeError(f"undetermined variable in solution: {exc}") from exc
    return Program(tuple(decoded))


def _decode_body(enc: Encoding, cv: ClauseVars, sol: Solution) -> Formula:
    if sol[cv.names[0]] == enc.top:
        return TOP
    num_nodes = sol[cv.num_nodes]
    children: dict[int, list[int]] = {}
    for i in range(1, num_nodes):
        children.setdefault(sol[cv.structure[i]], []).append(i)

    def build(i: int) -> Formula:
        name = sol[cv.names[i]]
        kids = children.get(i, [])
        if name < enc.npreds:
            if kids:
                raise DecodeError(f"atom node {i} has children {kids}")
            arity = sol[cv.node_arities[i]]
            return Atom(enc.pred_name(name),
                        tuple(enc.term_name(sol[a]) for a in cv.node_args[i][:arity]))
        if name == enc.neg:
            if len(kids) != 1:
                raise DecodeError(f"negation node {i} has {len(kids)} children")
            return Not(build(kids[0]))
        if name in (enc.conj, enc.disj):
            if len(kids) < 2:
                raise DecodeError(f"connective node {i} has {len(kids)} children")
            parts = tuple(build(j) for j in kids)
            return And(parts) if name == enc.conj else Or(parts)
        raise DecodeError(f"empty-marker node {i} inside the main tree")

    return build(0)
