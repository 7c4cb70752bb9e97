"""Engine core: variable construction, propagation fixpoint, trail."""

import pytest

from genlp.cp import (
    Contradiction,
    Equal,
    Less,
    Model,
    ModelError,
    NotEqual,
    Verdict,
)


def test_int_var_echoes_domain():
    m = Model()
    x = m.int_var({0, 1, 2})
    assert sorted(x.dom) == [0, 1, 2]
    assert x.size() == 3
    assert not x.is_fixed()


def test_singleton_domain_is_determined():
    m = Model()
    x = m.int_var({7})
    assert x.is_fixed()
    assert x.value() == 7


def test_empty_domain_rejected():
    m = Model()
    with pytest.raises(ModelError):
        m.int_var(set())


def test_set_var_bounds():
    m = Model()
    s = m.set_var((), {0, 1})
    assert not s.is_fixed()
    t = m.set_var({3}, {3})
    assert t.is_fixed()
    assert t.value() == frozenset({3})
    with pytest.raises(ModelError):
        m.set_var({1}, ())


def test_equality_prunes_to_intersection():
    m = Model()
    x = m.int_var({1, 2})
    y = m.int_var({2, 3})
    m.post(Equal(x, y))
    assert m.propagate()
    assert x.value() == 2 and y.value() == 2


def test_x_not_equal_to_itself_fails():
    m = Model()
    x = m.int_var({1, 2})
    m.post(NotEqual(x, x))
    assert not m.propagate()


def test_no_constraints_is_consistent():
    m = Model()
    m.int_var({1, 2, 3})
    assert m.propagate()


def test_fixed_unequal_equality_fails():
    m = Model()
    x = m.int_var({1})
    y = m.int_var({2})
    m.post(Equal(x, y))
    assert not m.propagate()


def test_forced_chain_determines_all():
    m = Model()
    x, y, z = (m.int_var({1, 2, 3}) for _ in range(3))
    m.post(Less(x, y))
    m.post(Less(y, z))
    assert m.propagate()
    assert (x.value(), y.value(), z.value()) == (1, 2, 3)


def test_fixpoint_is_idempotent():
    m = Model()
    x, y, z = (m.int_var({1, 2, 3}) for _ in range(3))
    m.post(Less(x, y))
    m.post(Less(y, z))
    assert m.propagate()
    snapshot = [sorted(v.dom) for v in m.int_vars]
    m.schedule_all()
    assert m.propagate()
    assert [sorted(v.dom) for v in m.int_vars] == snapshot


def test_trail_restores_domains_and_bounds():
    m = Model()
    x = m.int_var({1, 2, 3})
    s = m.set_var((), {0, 1})
    mark = m.mark()
    x.remove(2)
    s.include(0)
    s.exclude(1)
    assert sorted(x.dom) == [1, 3]
    m.undo_to(mark)
    assert sorted(x.dom) == [1, 2, 3]
    assert s.lower == set() and s.upper == {0, 1}


def test_assign_out_of_domain_contradicts():
    m = Model()
    x = m.int_var({1, 2})
    with pytest.raises(Contradiction):
        x.assign(5)


def test_entailment_values_are_tristate():
    m = Model()
    x = m.int_var({1, 2})
    y = m.int_var({3, 4})
    lt = Less(x, y)
    m.post(lt)
    assert lt.entail() is Verdict.TRUE
    gt = Less(y, x)
    assert gt.entail() is Verdict.FALSE
    z = m.int_var({0, 5})
    assert Less(x, z).entail() is Verdict.UNDEFINED
