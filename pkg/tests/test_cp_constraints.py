"""Builtin catalogue: each constraint's propagation/search route must find
exactly the assignments its semantic check (the independent oracle) accepts,
and entailment claims must be final."""

import itertools
import random

import pytest

from genlp.cp import (
    AllDifferentExceptZero,
    CountValueEq,
    CountMatches,
    ElementConst,
    EqConstIff,
    IfEqThenAssign,
    IndexGate,
    InSet,
    LexLess,
    LexLessUnless,
    MemberChannel,
    MinPlusOneOrZero,
    Model,
    NonDecreasing,
    NValues,
    ReifiedEqConst,
    SetDisjoint,
    SumConst,
    Table,
    Verdict,
)

from helpers import all_assignments, brute_force_keys, search_keys


def check_exhaustive(build):
    """Search solutions == brute-force filtering by the semantic checks."""
    m1, vars1 = build()
    expected = brute_force_keys(m1, vars1)
    m2, vars2 = build()
    got = search_keys(m2, vars2)
    assert got == expected
    return expected


def test_table_links_predicate_to_arity():
    def build():
        m = Model()
        pred = m.int_var({0, 1})
        arity = m.int_var({0, 1, 2})
        m.post(Table([pred, arity], [(0, 1), (1, 2)]))
        return m, [pred, arity]

    assert check_exhaustive(build) == {(0, 1), (1, 2)}


def test_nvalues_counts_unique_values():
    m = Model()
    a = m.int_var({0})
    b = m.int_var({0})
    c = m.int_var({1})
    n = m.int_var({0, 1, 2, 3})
    m.post(NValues([a, b, c], n))
    assert m.propagate()
    assert n.value() == 2


def test_nvalues_exhaustive():
    def build():
        m = Model()
        xs = [m.int_var({0, 1, 2}) for _ in range(3)]
        n = m.int_var({2})
        m.post(NValues(xs, n))
        return m, xs + [n]

    check_exhaustive(build)


def test_lex_less_on_fixed_tuples():
    m = Model()
    xs = [m.int_var({1}), m.int_var({5})]
    ys = [m.int_var({2}), m.int_var({0})]
    m.post(LexLess(xs, ys))
    assert m.propagate()


def test_lex_less_exhaustive():
    def build():
        m = Model()
        xs = [m.int_var({0, 1, 2}) for _ in range(2)]
        ys = [m.int_var({0, 1, 2}) for _ in range(2)]
        m.post(LexLess(xs, ys))
        return m, xs + ys

    expected = check_exhaustive(build)
    assert (0, 0, 0, 1) in expected
    assert (2, 2, 2, 2) not in expected


def test_lex_less_unless_disabled_condition():
    def build():
        m = Model()
        cond = m.int_var({0, 9})
        xs = [m.int_var({0, 1}) for _ in range(2)]
        ys = [m.int_var({0, 1}) for _ in range(2)]
        m.post(LexLessUnless(cond, 9, xs, ys))
        return m, [cond] + xs + ys

    expected = check_exhaustive(build)
    # disabled rows are unconstrained, enabled rows must be lex-less
    assert (9, 1, 1, 0, 0) in expected
    assert (0, 1, 1, 0, 0) not in expected


def test_alldifferent_except_zero_allows_zero_repeats():
    m = Model()
    a = m.int_var({0})
    b = m.int_var({0})
    m.post(AllDifferentExceptZero([a, b]))
    assert m.propagate()


def test_alldifferent_except_zero_exhaustive():
    def build():
        m = Model()
        xs = [m.int_var({0, 1, 2}) for _ in range(3)]
        m.post(AllDifferentExceptZero(xs))
        return m, xs

    expected = check_exhaustive(build)
    assert (0, 0, 0) in expected
    assert (1, 1, 0) not in expected


def test_count_value_eq_exhaustive():
    def build():
        m = Model()
        xs = [m.int_var({0, 1}) for _ in range(3)]
        c = m.int_var({0, 1, 2, 3})
        m.post(CountValueEq(xs, 1, c))
        return m, xs + [c]

    check_exhaustive(build)


def test_count_matches_self_loops():
    def build():
        m = Model()
        xs = [m.int_var({0, 1, 2}) for _ in range(3)]
        c = m.int_var({0, 1, 2, 3})
        m.post(CountMatches(xs, [0, 1, 2], c))
        return m, xs + [c]

    check_exhaustive(build)


def test_non_decreasing_exhaustive():
    def build():
        m = Model()
        xs = [m.int_var({0, 1, 2}) for _ in range(3)]
        m.post(NonDecreasing(xs))
        return m, xs

    expected = check_exhaustive(build)
    assert len(expected) == 10  # multisets of size 3 from 3 values


def test_index_gate_exhaustive():
    def build():
        m = Model()
        th = m.int_var({0, 1, 2, 3})
        xs = [m.int_var({0, 1, 9}) for _ in range(3)]
        m.post(IndexGate(th, [(i, x, 9) for i, x in enumerate(xs)]))
        return m, [th] + xs

    expected = check_exhaustive(build)
    assert (0, 9, 9, 9) in expected
    assert (2, 0, 1, 9) in expected
    assert (3, 9, 0, 0) not in expected


def test_sum_const_exhaustive():
    def build():
        m = Model()
        x = m.int_var({0, 1, 2, 3})
        y = m.int_var({0, 1, 2, 3})
        m.post(SumConst(x, y, 3))
        return m, [x, y]

    assert check_exhaustive(build) == {(0, 3), (1, 2), (2, 1), (3, 0)}


def test_element_const_exhaustive():
    def build():
        m = Model()
        i = m.int_var({0, 1, 2})
        v = m.int_var({5, 7})
        m.post(ElementConst(i, [5, 6, 7], v))
        return m, [i, v]

    assert check_exhaustive(build) == {(0, 5), (2, 7)}


def test_reified_eq_const_exhaustive():
    def build():
        m = Model()
        x = m.int_var({0, 1, 2})
        b = m.int_var({0, 1})
        m.post(ReifiedEqConst(x, 1, b))
        return m, [x, b]

    assert check_exhaustive(build) == {(0, 0), (1, 1), (2, 0)}


def test_eq_const_iff_exhaustive():
    def build():
        m = Model()
        x = m.int_var({0, 1})
        y = m.int_var({3, 4})
        m.post(EqConstIff(x, 0, y, 3))
        return m, [x, y]

    assert check_exhaustive(build) == {(0, 3), (1, 4)}


def test_if_eq_then_assign_exhaustive():
    def build():
        m = Model()
        cond = m.int_var({0, 1})
        a = m.int_var({0, 1, 2})
        b = m.int_var({5, 6})
        m.post(IfEqThenAssign(cond, 1, [(a, 2), (b, 5)]))
        return m, [cond, a, b]

    expected = check_exhaustive(build)
    assert (1, 2, 5) in expected
    assert (1, 0, 5) not in expected
    assert (0, 0, 6) in expected


def test_member_channel_and_min_channel():
    m = Model()
    terms = [m.int_var({0, 1}) for _ in range(3)]
    occ = m.set_var((), range(3))
    intro = m.int_var(range(4))
    m.post(MemberChannel(terms, occ, 1))
    m.post(MinPlusOneOrZero(occ, intro))
    terms[0].assign(0)
    terms[1].assign(1)
    terms[2].assign(1)
    assert m.propagate()
    assert occ.value() == frozenset({1, 2})
    assert intro.value() == 2

    m2 = Model()
    terms2 = [m2.int_var({0, 1}) for _ in range(3)]
    occ2 = m2.set_var((), range(3))
    intro2 = m2.int_var(range(4))
    m2.post(MemberChannel(terms2, occ2, 1))
    m2.post(MinPlusOneOrZero(occ2, intro2))
    intro2.assign(0)
    assert m2.propagate()
    assert all(t.value() == 0 for t in terms2)


def test_min_channel_assignment_places_first_occurrence():
    m = Model()
    terms = [m.int_var({0, 1}) for _ in range(3)]
    occ = m.set_var((), range(3))
    intro = m.int_var(range(4))
    m.post(MemberChannel(terms, occ, 1))
    m.post(MinPlusOneOrZero(occ, intro))
    intro.assign(2)
    assert m.propagate()
    assert terms[1].value() == 1
    assert terms[0].value() == 0


def test_set_disjoint_and_in_set():
    m = Model()
    a = m.set_var({0}, {0, 1, 2})
    b = m.set_var((), {0, 1, 2})
    m.post(SetDisjoint(a, b))
    x = m.int_var({0, 1, 2, 3})
    m.post(InSet(x, b))
    assert m.propagate()
    assert 0 not in b.upper
    assert not x.contains(0) and not x.contains(3)


def test_entailment_claims_are_final():
    """On random small models: TRUE propagators hold in every completion,
    FALSE propagators in none."""
    rng = random.Random(7)
    for trial in range(40):
        m = Model()
        xs = [m.int_var(set(range(rng.randint(2, 3)))) for _ in range(4)]
        props = [
            NonDecreasing(xs[:3]),
            CountValueEq(xs, 1, m.int_var({0, 1, 2})),
            AllDifferentExceptZero(xs[:3]),
            LexLess(xs[:2], xs[2:]),
        ]
        for p in props:
            m.post(p)
        # random partial assignment, then fixpoint
        for v in xs:
            if rng.random() < 0.5:
                v_choice = rng.choice(sorted(v.dom))
                try:
                    v.assign(v_choice)
                except Exception:
                    pass
        if not m.propagate():
            continue
        for p in m.propagators:
            verdict = p.entail()
            if verdict is Verdict.UNDEFINED:
                continue
            outcomes = set()
            for assignment in all_assignments(m.int_vars):
                value_of = lambda v: assignment[v.index]
                outcomes.add(p.holds(value_of))
            if verdict is Verdict.TRUE:
                assert outcomes <= {True}, f"trial {trial}: TRUE but violated"
            else:
                assert outcomes <= {False}, f"trial {trial}: FALSE but satisfied"
