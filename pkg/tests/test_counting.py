"""Counting oracle vs. independent brute-force enumerators.

The oracles here enumerate concrete objects (ordered tree shapes with
labelings, term sequences with canonical variable patterns) and never touch
the closed recursions they validate.
"""

import itertools

import pytest

from genlp.counting import (
    CountingContext,
    EnumerationBudgetExceeded,
    UnsupportedConfiguration,
    count_by_enumeration,
    count_programs,
)
from genlp.parameters import CycleMode, Parameters


# -- brute-force oracle 1: labeled ordered trees ------------------------------

def tree_shapes(n):
    """All ordered rooted tree shapes with exactly n nodes (nested tuples)."""
    if n == 1:
        return [()]
    shapes = []
    for k in range(1, n):
        for parts in compositions(n - 1, k):
            for combo in itertools.product(*(tree_shapes(p) for p in parts)):
                shapes.append(tuple(combo))
    return shapes


def compositions(total, k):
    """Ordered splits of total into k parts, each >= 1."""
    if k == 1:
        return [(total,)] if total >= 1 else []
    out = []
    for first in range(1, total - k + 2):
        for rest in compositions(total - first, k - 1):
            out.append((first,) + rest)
    return out


def labeled_body_counts(arities, max_nodes):
    """(n, total_arity) -> number of well-formed bodies, by enumeration:
    leaves take any predicate, unary internals are negation, wider internals
    are one of the two connectives."""
    counts = {}

    def labelings(shape):
        if shape == ():
            return [a for a in arities]  # one labeling per predicate; arity listed
        if len(shape) == 1:
            return labelings(shape[0])  # negation: arity unchanged, 1 way
        child_counts = [labelings(c) for c in shape]
        out = []
        for combo in itertools.product(*child_counts):
            out.append(sum(combo))
            out.append(sum(combo))  # conjunction and disjunction
        return out

    for n in range(1, max_nodes + 1):
        for shape in tree_shapes(n):
            for total_arity in labelings(shape):
                key = (n, total_arity)
                counts[key] = counts.get(key, 0) + 1
    return counts


# -- brute-force oracle 2: canonical term sequences ---------------------------

def canonical_sequences(nconsts, nvars, n):
    """Count length-n sequences over constants and variables where variables
    appear in first-use order (fresh variable = next unused index)."""
    alphabet = [("c", i) for i in range(nconsts)] + [("v", j) for j in range(nvars)]
    count = 0
    for seq in itertools.product(alphabet, repeat=n):
        next_var = 0
        ok = True
        for kind, idx in seq:
            if kind == "v":
                if idx == next_var:
                    next_var += 1
                elif idx > next_var:
                    ok = False
                    break
        if ok:
            count += 1
    return count


# -- fixtures -----------------------------------------------------------------

def unary_params(max_nodes=4, max_clauses=1):
    return Parameters(predicates=("p",), arities=(1,), variables=("X",),
                      max_nodes=max_nodes, max_clauses=max_clauses)


UNARY_SPACE = unary_params()


# -- body counts ---------------------------------------------------------------

def test_single_unary_predicate_has_one_body_per_size():
    ctx = CountingContext(unary_params(max_nodes=6))
    oracle = labeled_body_counts([1], 6)
    for n in range(1, 7):
        assert ctx.count_bodies(n, 1) == oracle.get((n, 1), 0) == 1


def test_body_counts_match_tree_enumeration():
    ctx = CountingContext(UNARY_SPACE)
    oracle = labeled_body_counts([1], 4)
    assert ctx.count_bodies(3, 2) == oracle.get((3, 2), 0) == 2
    assert ctx.count_bodies(4, 2) == oracle.get((4, 2), 0) == 6
    for n in range(1, 5):
        for a in range(0, 5):
            assert ctx.count_bodies(n, a) == oracle.get((n, a), 0), (n, a)


def test_body_counts_two_predicates_mixed_arity():
    params = Parameters(predicates=("p", "q"), arities=(1, 2), variables=("X",),
                        max_nodes=4, max_clauses=2)
    ctx = CountingContext(params)
    oracle = labeled_body_counts([1, 2], 4)
    for n in range(1, 5):
        for a in range(0, 9):
            assert ctx.count_bodies(n, a) == oracle.get((n, a), 0), (n, a)


def test_base_case_missing_arity_is_zero():
    ctx = CountingContext(UNARY_SPACE)
    assert ctx.count_bodies(1, 3) == 0


def test_body_totals():
    ctx = CountingContext(UNARY_SPACE)
    assert ctx.count_bodies_total(0) == 1
    assert ctx.count_bodies_total(1) == 4
    assert ctx.count_bodies_total(2) == 8
    assert ctx.count_bodies_total(3) == 2
    assert ctx.count_bodies_total(5) == 0  # beyond max_arity * max_nodes


def test_zero_arity_rejected():
    params = Parameters(predicates=("p", "q"), arities=(0, 1), variables=("X",),
                        max_clauses=2)
    with pytest.raises(UnsupportedConfiguration):
        CountingContext(params)


# -- term selections -------------------------------------------------------------

def test_term_selections_single_variable():
    ctx = CountingContext(UNARY_SPACE)
    for n in range(0, 7):
        assert ctx.count_term_selections(n) == 1


def test_term_selections_bell_pattern():
    params = Parameters(predicates=("p",), arities=(3,),
                        variables=("X", "Y", "Z"), max_nodes=1, max_clauses=1)
    ctx = CountingContext(params)
    assert ctx.count_term_selections(3) == 5
    for n in range(0, 7):
        assert ctx.count_term_selections(n) == canonical_sequences(0, 3, n)


def test_term_selections_no_variables():
    params = Parameters(predicates=("p",), arities=(2,), constants=("a", "b"),
                        max_nodes=1, max_clauses=1)
    ctx = CountingContext(params)
    for n in range(0, 6):
        assert ctx.count_term_selections(n) == 2 ** n == canonical_sequences(2, 0, n)


def test_term_selections_mixed():
    params = Parameters(predicates=("p",), arities=(2,), constants=("a",),
                        variables=("X", "Y"), max_nodes=2, max_clauses=1)
    ctx = CountingContext(params)
    for n in range(0, 6):
        assert ctx.count_term_selections(n) == canonical_sequences(1, 2, n)


# -- program counts ---------------------------------------------------------------

def test_unary_space_counts_fifteen():
    assert count_programs(UNARY_SPACE) == 15


def test_ternary_symmetry_config_count():
    params = Parameters(predicates=("p",), arities=(3,),
                        variables=("X", "Y", "Z"), max_nodes=1, max_clauses=1)
    ctx = CountingContext(params)
    # one-node bodies: the empty body (5 head patterns) or one atom
    assert ctx.count_term_selections(6) == canonical_sequences(0, 3, 6) == 122
    assert ctx.count_programs() == 5 + 122


def test_zero_possible_clauses_count_zero():
    class NoClauses(CountingContext):
        def clause_choices(self, pred_index):
            return 0

    assert NoClauses(UNARY_SPACE).count_programs() == 0


def test_count_monotone_in_capacity():
    base = dict(predicates=("p", "q"), arities=(1, 1), variables=("X",),
                constants=("a",))
    previous = 0
    for mn in (1, 2, 3):
        current = count_programs(Parameters(max_nodes=mn, max_clauses=2, **base))
        assert current >= previous
        previous = current
    previous = 0
    for mc in (2, 3, 4):
        current = count_programs(Parameters(max_nodes=2, max_clauses=mc, **base))
        assert current >= previous
        previous = current


def test_count_preconditions_enforced():
    with pytest.raises(UnsupportedConfiguration):
        count_programs(Parameters(predicates=("p", "q"), arities=(1, 1),
                                  variables=("X",), max_nodes=1, max_clauses=2,
                                  independent_pairs={("p", "q")}))
    with pytest.raises(UnsupportedConfiguration):
        count_programs(Parameters(predicates=("p",), arities=(1,),
                                  variables=("X",), max_nodes=1, max_clauses=1,
                                  cycle_mode=CycleMode.FORBID_ALL))
    with pytest.raises(UnsupportedConfiguration):
        count_programs(Parameters(predicates=("p",), arities=(1,),
                                  variables=("X",), max_nodes=1, max_clauses=1,
                                  forbid_empty_bodies=True))


# -- enumeration cross-checks ------------------------------------------------------

def test_enumeration_matches_formula_unary():
    assert count_by_enumeration(UNARY_SPACE) == 15


def test_enumeration_respects_cycle_mode():
    params = Parameters(predicates=("p",), arities=(1,), variables=("X",),
                        max_nodes=4, max_clauses=1,
                        cycle_mode=CycleMode.FORBID_NEGATIVE)
    assert count_by_enumeration(params) == 6


def test_enumeration_budget_guard():
    with pytest.raises(EnumerationBudgetExceeded):
        count_by_enumeration(UNARY_SPACE, budget=3)


def test_count_with_validation_result_shape():
    from genlp.counting import count_with_validation

    agreed = count_with_validation(UNARY_SPACE, budget=100)
    assert (agreed.formula, agreed.enumerated, agreed.agree) == (15, 15, True)
    refused = count_with_validation(UNARY_SPACE, budget=3)
    assert refused.formula == 15
    assert refused.enumerated is None and refused.agree is None
