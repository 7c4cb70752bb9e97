"""Generator parameters: predicates/arities, variables, constants, size
bounds, independence pairs, probabilities, and the fixed integer encodings
shared by the constraint model and the decoder.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence


class CycleMode(enum.Enum):
    NONE = "none"
    FORBID_NEGATIVE = "forbid_negative"
    FORBID_ALL = "forbid_all"


class ParameterError(ValueError):
    """A parameter set violates one of its documented invariants."""


@dataclass(frozen=True)
class Parameters:
    """All generator inputs.

    predicates/arities are parallel; variables and constants are ordered and
    disjoint. max_nodes bounds the body tree size, max_clauses the program
    size (at least one clause per predicate is required, so
    max_clauses >= len(predicates)).
    """

    predicates: tuple[str, ...]
    arities: tuple[int, ...]
    variables: tuple[str, ...] = ()
    constants: tuple[str, ...] = ()
    max_nodes: int = 1
    max_clauses: int = 0
    independent_pairs: frozenset[frozenset] = frozenset()
    probabilities: tuple[float, ...] = (1,)
    cycle_mode: CycleMode = CycleMode.NONE
    forbid_empty_bodies: bool = False

    def __post_init__(self):
        object.__setattr__(self, "predicates", tuple(self.predicates))
        object.__setattr__(self, "arities", tuple(self.arities))
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "constants", tuple(self.constants))
        object.__setattr__(self, "probabilities", tuple(self.probabilities))
        object.__setattr__(self, "independent_pairs",
                           frozenset(frozenset(p) for p in self.independent_pairs))
        self._validate()

    def _validate(self):
        if not self.predicates:
            raise ParameterError("at least one predicate is required")
        if len(self.predicates) != len(set(self.predicates)):
            raise ParameterError("predicate names must be unique")
        if len(self.arities) != len(self.predicates):
            raise ParameterError(
                f"{len(self.predicates)} predicates but {len(self.arities)} arities")
        if any(a < 0 for a in self.arities):
            raise ParameterError("arities must be non-negative")
        if max(self.arities) == 0:
            raise ParameterError("at least one predicate must have non-zero arity")
        if len(self.constants) + len(self.variables) == 0:
            raise ParameterError("need at least one constant or variable")
        names = self.variables + self.constants
        if len(names) != len(set(names)):
            raise ParameterError("variable and constant names must be distinct")
        if self.max_nodes < 1:
            raise ParameterError("max_nodes must be at least 1")
        if self.max_clauses < len(self.predicates):
            raise ParameterError(
                f"max_clauses ({self.max_clauses}) below predicate count "
                f"({len(self.predicates)}): every predicate needs a clause")
        if not self.probabilities:
            raise ParameterError("probability list must be non-empty")
        if any(not (0 < float(p) <= 1) for p in self.probabilities):
            raise ParameterError("probabilities must lie in (0, 1]")
        preds = set(self.predicates)
        for pair in self.independent_pairs:
            if len(pair) != 2:
                raise ParameterError(
                    f"independence pair {sorted(pair)} must name two distinct predicates")
            if not pair <= preds:
                raise ParameterError(
                    f"independence pair {sorted(pair)} mentions unknown predicates")

    @property
    def max_arity(self) -> int:
        return max(self.arities)

    @property
    def min_arity(self) -> int:
        return min(self.arities)

    def arity_of(self, predicate: str) -> int:
        return self.arities[self.predicates.index(predicate)]


class Encoding:
    """Fixed integer encodings for the model's variables.

    Head/node predicate slots: predicates 0..P-1 in declared order, the
    disabled marker after them. Node names add the four tokens (negation,
    conjunction, disjunction, the empty/padding marker) after the predicates.
    Term slots: constants first, then variables, then the disabled marker,
    which makes the disabled marker the largest value everywhere and realizes
    "first-listed variable gets the smallest code".
    """

    def __init__(self, params: Parameters):
        self.params = params
        p = len(params.predicates)
        self.npreds = p
        self.blank_pred = p              # disabled-clause marker in head slots
        self.neg = p                     # tokens in node-name slots
        self.conj = p + 1
        self.disj = p + 2
        self.top = p + 3
        self.tokens = (self.neg, self.conj, self.disj, self.top)
        c, v = len(params.constants), len(params.variables)
        self.nconsts = c
        self.nvars = v
        self.blank_term = c + v
        self.head_pred_domain = range(p + 1)
        self.node_name_domain = range(p + 4)
        self.term_domain = range(c + v + 1)

    def pred_index(self, name: str) -> int:
        return self.params.predicates.index(name)

    def pred_name(self, code: int) -> str:
        return self.params.predicates[code]

    def variable_code(self, index: int) -> int:
        return self.nconsts + index

    def term_name(self, code: int) -> str:
        if code < self.nconsts:
            return self.params.constants[code]
        return self.params.variables[code - self.nconsts]

    def arity_of_code(self, code: int) -> int:
        return self.params.arities[code]

    def head_arity_tuples(self) -> list[tuple[int, int]]:
        pairs = [(i, a) for i, a in enumerate(self.params.arities)]
        pairs.append((self.blank_pred, 0))
        return pairs

    def node_arity_tuples(self) -> list[tuple[int, int]]:
        pairs = [(i, a) for i, a in enumerate(self.params.arities)]
        pairs.extend((t, 0) for t in self.tokens)
        return pairs
