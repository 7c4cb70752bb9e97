"""Decoded logic programs: atoms, body formulas, clauses, probabilities."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence, Union


@dataclass(frozen=True)
class Atom:
    predicate: str
    terms: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return self.predicate
        return f"{self.predicate}({', '.join(self.terms)})"


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    children: tuple["Formula", ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True)
class Or:
    children: tuple["Formula", ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


class _Top:
    """The empty-body marker; a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP"


TOP = _Top()

Formula = Union[Atom, Not, And, Or, _Top]


@dataclass(frozen=True)
class Clause:
    head: Atom
    body: Formula = TOP
    probability: float = 1

    def is_fact(self) -> bool:
        return self.body is TOP


@dataclass(frozen=True)
class Program:
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))

    def __len__(self) -> int:
        return len(self.clauses)

    def predicates(self) -> set[str]:
        return {c.head.predicate for c in self.clauses}


def body_atoms(formula: Formula) -> Iterator[Atom]:
    """All atoms of a body, left to right."""
    if isinstance(formula, Atom):
        yield formula
    elif isinstance(formula, Not):
        yield from body_atoms(formula.child)
    elif isinstance(formula, (And, Or)):
        for child in formula.children:
            yield from body_atoms(child)


def check_program(program: Program, arities: dict[str, int],
                  required: Sequence[str] = ()) -> None:
    """Raise ValueError when a decoded program breaks its invariants:
    duplicate (head, body) pairs, missing clauses for required predicates,
    atoms whose term count disagrees with the declared arity, or malformed
    connective fan-in."""
    seen = set()
    for clause in program.clauses:
        key = (clause.head, clause.body)
        if key in seen:
            raise ValueError(f"duplicate clause {clause.head}")
        seen.add(key)
        _check_atom(clause.head, arities)
        _check_formula(clause.body, arities)
        if not (0 < float(clause.probability) <= 1):
            raise ValueError(f"probability {clause.probability} outside (0, 1]")
    heads = {c.head.predicate for c in program.clauses}
    missing = [p for p in required if p not in heads]
    if missing:
        raise ValueError(f"predicates without clauses: {missing}")


def _check_atom(atom: Atom, arities: dict[str, int]) -> None:
    if atom.predicate not in arities:
        raise ValueError(f"unknown predicate {atom.predicate!r}")
    if len(atom.terms) != arities[atom.predicate]:
        raise ValueError(
            f"{atom}: expected {arities[atom.predicate]} terms, got {len(atom.terms)}")


def _check_formula(formula: Formula, arities: dict[str, int]) -> None:
    if formula is TOP:
        return
    if isinstance(formula, Atom):
        _check_atom(formula, arities)
    elif isinstance(formula, Not):
        if formula.child is TOP:
            raise ValueError("negation of the empty body")
        _check_formula(formula.child, arities)
    elif isinstance(formula, (And, Or)):
        if len(formula.children) < 2:
            raise ValueError("connective needs at least two children")
        for child in formula.children:
            if child is TOP:
                raise ValueError("connective child is the empty body")
            _check_formula(child, arities)
    else:
        raise ValueError(f"not a formula: {formula!r}")


def assign_probabilities(program: Program, probabilities: Sequence[float],
                         seed: int) -> Program:
    """Attach to each clause a probability drawn independently and uniformly
    from the list (repeats in the list weight the draw). The list [1] yields
    a non-probabilistic program."""
    if not probabilities:
        raise ValueError("probability list must be non-empty")
    rng = random.Random(f"probs:{seed}")
    choices = list(probabilities)
    clauses = tuple(
        Clause(c.head, c.body, rng.choice(choices)) for c in program.clauses)
    return Program(clauses)
