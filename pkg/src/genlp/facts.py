"""Fact database generation and query selection.

Facts are ground atoms over a dedicated constant pool, built by rejection
sampling (uniform predicate, uniform constants per slot, duplicates
skipped); a configured share of them gets probabilities drawn from the
parameter list, the rest stay certain. The query is a uniform draw from the
ground atoms absent from the program.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Optional, Sequence

from .config import FactSpec
from .parameters import Parameters
from .programs import Atom, Clause


def possible_atom_count(arities: Sequence[int], nconstants: int) -> int:
    return sum(nconstants ** a for a in arities)


def all_ground_atoms(predicates: Sequence[str], arities: Sequence[int],
                     constants: Sequence[str]) -> Iterable[Atom]:
    for name, arity in zip(predicates, arities):
        for combo in itertools.product(constants, repeat=arity):
            yield Atom(name, combo)


def generate_facts(spec: FactSpec, params: Parameters, seed,
                   arities: Optional[Sequence[int]] = None,
                   excluded: Iterable[Atom] = ()) -> list[Clause]:
    """Distinct ground facts with probabilities attached.

    A uniform-random subset of round(proportion * num_facts) facts receives
    probabilities sampled uniformly from the parameter list; the remainder
    keeps probability one. Atoms in `excluded` (already present as ground
    rule heads) are never drawn.
    """
    arities = tuple(arities if arities is not None else params.arities)
    constants = spec.fact_constants
    excluded = set(excluded)
    total = possible_atom_count(arities, len(constants)) - len(excluded)
    if spec.num_facts > total:
        raise ValueError(
            f"num_facts ({spec.num_facts}) exceeds the {total} available facts")
    rng = random.Random(f"facts:{seed}")
    chosen: list[Atom] = []
    seen: set[Atom] = set(excluded)
    attempts = 0
    bound = 50 * max(spec.num_facts, 1) + 100
    while len(chosen) < spec.num_facts and attempts < bound:
        attempts += 1
        idx = rng.randrange(len(params.predicates))
        atom = Atom(params.predicates[idx],
                    tuple(rng.choice(constants) for _ in range(arities[idx])))
        if atom not in seen:
            seen.add(atom)
            chosen.append(atom)
    if len(chosen) < spec.num_facts:
        # dense regime: rejection stalls near saturation; fill from the
        # shuffled remainder instead
        rest = [a for a in all_ground_atoms(params.predicates, arities, constants)
                if a not in seen]
        rng.shuffle(rest)
        chosen.extend(rest[:spec.num_facts - len(chosen)])

    n_prob = round(spec.probabilistic_proportion * spec.num_facts)
    prob_indices = set(rng.sample(range(spec.num_facts), n_prob)) if n_prob else set()
    facts = []
    for i, atom in enumerate(chosen):
        p = rng.choice(params.probabilities) if i in prob_indices else 1
        facts.append(Clause(atom, probability=p))
    return facts


def pick_query(present: Iterable[Atom], params: Parameters,
               constants: Sequence[str], seed,
               arities: Optional[Sequence[int]] = None,
               retry_bound: int = 200) -> Atom:
    """Uniform draw over ground atoms not already present.

    Proposal weights predicates by their ground-atom counts so the draw is
    uniform over atoms; falls back to exhaustive enumeration when rejection
    keeps colliding.
    """
    arities = tuple(arities if arities is not None else params.arities)
    present = set(present)
    counts = [len(constants) ** a for a in arities]
    total = sum(counts)
    const_set = set(constants)
    arity_map = dict(zip(params.predicates, arities))

    def in_universe(atom: Atom) -> bool:
        return (atom.predicate in arity_map
                and len(atom.terms) == arity_map[atom.predicate]
                and all(t in const_set for t in atom.terms))

    absent_total = total - sum(1 for a in present if in_universe(a))
    if absent_total <= 0:
        raise ValueError(
            "every possible ground atom is already a fact; lower num_facts")
    rng = random.Random(f"query:{seed}")
    for _ in range(retry_bound):
        r = rng.randrange(total)
        idx = 0
        while r >= counts[idx]:
            r -= counts[idx]
            idx += 1
        atom = Atom(params.predicates[idx],
                    tuple(rng.choice(constants) for _ in range(arities[idx])))
        if atom not in present:
            return atom
    absent = [a for a in all_ground_atoms(params.predicates, arities, constants)
              if a not in present]
    return rng.choice(absent)
