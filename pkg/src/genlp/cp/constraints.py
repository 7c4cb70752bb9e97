"""Builtin constraint catalogue for the finite-domain engine.

Propagation strength is forward-checking/bounds unless noted; every
propagator checks its constraint exactly once its scope is fully determined,
so search + fixpoint never yield a violating solution. holds() gives the
semantic check used by brute-force test oracles.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .core import Contradiction, IntVar, Propagator, SetVar, Verdict


class Equal(Propagator):
    """x = y (domain intersection)."""

    __slots__ = ("x", "y")

    def __init__(self, x: IntVar, y: IntVar):
        super().__init__()
        self.x, self.y = x, y

    def variables(self):
        return (self.x, self.y)

    def propagate(self):
        x, y = self.x, self.y
        inter = x.dom & y.dom
        if not inter:
            raise Contradiction(f"{x.name} = {y.name}: disjoint domains")
        for v in list(x.dom):
            if v not in inter:
                x.remove(v)
        for v in list(y.dom):
            if v not in inter:
                y.remove(v)

    def entail(self) -> Verdict:
        x, y = self.x, self.y
        if x.dom.isdisjoint(y.dom):
            return Verdict.FALSE
        if x.is_fixed() and y.is_fixed():
            return Verdict.TRUE if x.value() == y.value() else Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return value_of(self.x) == value_of(self.y)


class NotEqual(Propagator):
    """x != y. Posting with x and y the same variable is unsatisfiable."""

    __slots__ = ("x", "y")

    def __init__(self, x: IntVar, y: IntVar):
        super().__init__()
        self.x, self.y = x, y

    def variables(self):
        return (self.x,) if self.x is self.y else (self.x, self.y)

    def propagate(self):
        x, y = self.x, self.y
        if x is y:
            raise Contradiction(f"{x.name} != {x.name} is unsatisfiable")
        if x.is_fixed():
            y.remove(x.value())
        if y.is_fixed():
            x.remove(y.value())

    def entail(self) -> Verdict:
        x, y = self.x, self.y
        if x is y:
            return Verdict.FALSE
        if x.dom.isdisjoint(y.dom):
            return Verdict.TRUE
        if x.is_fixed() and y.is_fixed():
            return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return value_of(self.x) != value_of(self.y)


class Less(Propagator):
    """x < y (bounds)."""

    __slots__ = ("x", "y")

    def __init__(self, x: IntVar, y: IntVar):
        super().__init__()
        self.x, self.y = x, y

    def variables(self):
        return (self.x,) if self.x is self.y else (self.x, self.y)

    def propagate(self):
        x, y = self.x, self.y
        if x is y:
            raise Contradiction(f"{x.name} < {x.name} is unsatisfiable")
        x.remove_above(y.max() - 1)
        y.remove_below(x.min() + 1)

    def entail(self) -> Verdict:
        x, y = self.x, self.y
        if x is y or x.min() >= y.max():
            return Verdict.FALSE
        if x.max() < y.min():
            return Verdict.TRUE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return value_of(self.x) < value_of(self.y)


class Table(Propagator):
    """Allowed-tuples constraint over a variable sequence."""

    __slots__ = ("vars", "tuples")

    def __init__(self, variables: Sequence[IntVar], tuples: Iterable[tuple]):
        super().__init__()
        self.vars = tuple(variables)
        self.tuples = [tuple(t) for t in tuples]
        for t in self.tuples:
            if len(t) != len(self.vars):
                raise ValueError("tuple length does not match variable count")

    def variables(self):
        return self.vars

    def propagate(self):
        vars_ = self.vars
        supported = [set() for _ in vars_]
        for t in self.tuples:
            if all(t[i] in vars_[i].dom for i in range(len(vars_))):
                for i, v in enumerate(t):
                    supported[i].add(v)
        for var, sup in zip(vars_, supported):
            if not sup:
                raise Contradiction("table: no supporting tuple")
            for v in list(var.dom):
                if v not in sup:
                    var.remove(v)

    def entail(self) -> Verdict:
        if all(v.is_fixed() for v in self.vars):
            t = tuple(v.value() for v in self.vars)
            return Verdict.TRUE if t in self.tuples else Verdict.FALSE
        if not any(all(t[i] in self.vars[i].dom for i in range(len(self.vars)))
                   for t in self.tuples):
            return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return tuple(value_of(v) for v in self.vars) in self.tuples


class CountMatches(Propagator):
    """#{i : vars[i] = targets[i]} equals count_var (per-position target values)."""

    __slots__ = ("vars", "targets", "count")

    def __init__(self, variables: Sequence[IntVar], targets: Sequence[int],
                 count_var: IntVar):
        super().__init__()
        self.vars = tuple(variables)
        self.targets = tuple(targets)
        self.count = count_var

    def variables(self):
        return self.vars + (self.count,)

    def propagate(self):
        lb = ub = 0
        open_vars = []
        for var, t in zip(self.vars, self.targets):
            if t in var.dom:
                ub += 1
                if var.is_fixed():
                    lb += 1
                else:
                    open_vars.append((var, t))
        count = self.count
        count.remove_below(lb)
        count.remove_above(ub)
        if count.max() == lb:
            for var, t in open_vars:
                var.remove(t)
        elif count.min() == ub:
            for var, t in open_vars:
                var.assign(t)

    def entail(self) -> Verdict:
        lb = ub = 0
        for var, t in zip(self.vars, self.targets):
            if t in var.dom:
                ub += 1
                if var.is_fixed():
                    lb += 1
        if self.count.min() > ub or self.count.max() < lb:
            return Verdict.FALSE
        if lb == ub and self.count.is_fixed():
            return Verdict.TRUE if self.count.value() == lb else Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        n = sum(1 for var, t in zip(self.vars, self.targets) if value_of(var) == t)
        return n == value_of(self.count)


class CountValueEq(CountMatches):
    """#{i : vars[i] = value} equals count_var."""

    __slots__ = ()

    def __init__(self, variables: Sequence[IntVar], value: int, count_var: IntVar):
        super().__init__(variables, [value] * len(variables), count_var)


class NValues(Propagator):
    """Number of distinct values among vars equals nvar."""

    __slots__ = ("vars", "nvar")

    def __init__(self, variables: Sequence[IntVar], nvar: IntVar):
        super().__init__()
        self.vars = tuple(variables)
        self.nvar = nvar

    def variables(self):
        return self.vars + (self.nvar,)

    def propagate(self):
        fixed_vals = set()
        open_vars = []
        for var in self.vars:
            if var.is_fixed():
                fixed_vals.add(var.value())
            else:
                open_vars.append(var)
        possible = set(fixed_vals)
        for var in open_vars:
            possible |= var.dom
        nvar = self.nvar
        nvar.remove_below(len(fixed_vals))
        nvar.remove_above(min(len(fixed_vals) + len(open_vars), len(possible)))
        if open_vars:
            if nvar.max() == len(fixed_vals):
                # no new values may appear
                for var in open_vars:
                    for v in list(var.dom):
                        if v not in fixed_vals:
                            var.remove(v)
            elif nvar.min() == len(fixed_vals) + len(open_vars):
                # every open variable must introduce a fresh value
                for var in open_vars:
                    for v in fixed_vals:
                        if v in var.dom:
                            var.remove(v)

    def entail(self) -> Verdict:
        if all(v.is_fixed() for v in self.vars):
            n = len({v.value() for v in self.vars})
            if self.nvar.is_fixed():
                return Verdict.TRUE if n == self.nvar.value() else Verdict.FALSE
            return Verdict.TRUE if self.nvar.contains(n) else Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return len({value_of(v) for v in self.vars}) == value_of(self.nvar)


def _lex_prefix(xs, ys) -> int:
    """Length of the leading fixed-and-equal prefix."""
    i = 0
    n = len(xs)
    while i < n:
        x, y = xs[i], ys[i]
        if x is not y and not (x.is_fixed() and y.is_fixed() and x.value() == y.value()):
            break
        i += 1
    return i


def _lex_status(xs, ys) -> Verdict:
    a = _lex_prefix(xs, ys)
    if a == len(xs):
        return Verdict.FALSE  # tuples equal; strictness violated
    if xs[a].max() < ys[a].min():
        return Verdict.TRUE
    if xs[a].min() > ys[a].max():
        return Verdict.FALSE
    return Verdict.UNDEFINED


class LexLess(Propagator):
    """(x0,..,xn) strictly lexicographically less than (y0,..,yn)."""

    __slots__ = ("xs", "ys")

    def __init__(self, xs: Sequence[IntVar], ys: Sequence[IntVar]):
        super().__init__()
        if len(xs) != len(ys):
            raise ValueError("lex: tuple lengths differ")
        self.xs = tuple(xs)
        self.ys = tuple(ys)

    def variables(self):
        return tuple(dict.fromkeys(self.xs + self.ys))

    def propagate(self):
        _lex_enforce(self.xs, self.ys)

    def entail(self) -> Verdict:
        return _lex_status(self.xs, self.ys)

    def holds(self, value_of: Callable) -> bool:
        return (tuple(value_of(v) for v in self.xs)
                < tuple(value_of(v) for v in self.ys))


def _lex_enforce(xs, ys) -> None:
    """Prune so that xs <lex ys remains possible; fail when it no longer is."""
    n = len(xs)
    while True:
        a = _lex_prefix(xs, ys)
        if a == n:
            raise Contradiction("lex: tuples equal")
        x, y = xs[a], ys[a]
        if x.min() > y.max():
            raise Contradiction("lex: prefix forces greater")
        changed = False
        if a == n - 1:
            # last position must be strictly less
            changed |= x.remove_above(y.max() - 1)
            changed |= y.remove_below(x.min() + 1)
        else:
            changed |= x.remove_above(y.max())
            changed |= y.remove_below(x.min())
        if not (changed and x.is_fixed() and y.is_fixed() and x.value() == y.value()):
            return


class LexLessUnless(Propagator):
    """(cond != disabled) implies (xs strictly lex-less than ys)."""

    __slots__ = ("cond", "disabled", "xs", "ys")

    def __init__(self, cond: IntVar, disabled: int,
                 xs: Sequence[IntVar], ys: Sequence[IntVar]):
        super().__init__()
        if len(xs) != len(ys):
            raise ValueError("lex: tuple lengths differ")
        self.cond = cond
        self.disabled = disabled
        self.xs = tuple(xs)
        self.ys = tuple(ys)

    def variables(self):
        return tuple(dict.fromkeys((self.cond,) + self.xs + self.ys))

    def propagate(self):
        cond = self.cond
        if cond.is_fixed() and cond.value() == self.disabled:
            return
        if not cond.contains(self.disabled):
            _lex_enforce(self.xs, self.ys)
        elif _lex_status(self.xs, self.ys) is Verdict.FALSE:
            cond.assign(self.disabled)

    def entail(self) -> Verdict:
        cond = self.cond
        if cond.is_fixed() and cond.value() == self.disabled:
            return Verdict.TRUE
        status = _lex_status(self.xs, self.ys)
        if status is Verdict.TRUE:
            return Verdict.TRUE
        if status is Verdict.FALSE and not cond.contains(self.disabled):
            return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        if value_of(self.cond) == self.disabled:
            return True
        return (tuple(value_of(v) for v in self.xs)
                < tuple(value_of(v) for v in self.ys))


class NonDecreasing(Propagator):
    """vars[0] <= vars[1] <= ... (bounds)."""

    __slots__ = ("vars",)

    def __init__(self, variables: Sequence[IntVar]):
        super().__init__()
        self.vars = tuple(variables)

    def variables(self):
        return self.vars

    def propagate(self):
        vs = self.vars
        for i in range(1, len(vs)):
            vs[i].remove_below(vs[i - 1].min())
        for i in range(len(vs) - 2, -1, -1):
            vs[i].remove_above(vs[i + 1].max())

    def entail(self) -> Verdict:
        vs = self.vars
        if any(vs[i].min() > vs[i + 1].max() for i in range(len(vs) - 1)):
            return Verdict.FALSE
        if all(vs[i].max() <= vs[i + 1].min() for i in range(len(vs) - 1)):
            return Verdict.TRUE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        seq = [value_of(v) for v in self.vars]
        return all(a <= b for a, b in zip(seq, seq[1:]))


class AllDifferentExceptZero(Propagator):
    """Fixed non-zero values must be pairwise distinct (zero repeats freely)."""

    __slots__ = ("vars", "zero")

    def __init__(self, variables: Sequence[IntVar], zero: int = 0):
        super().__init__()
        self.vars = tuple(variables)
        self.zero = zero

    def variables(self):
        return self.vars

    def propagate(self):
        zero = self.zero
        seen = set()
        open_vars = []
        for var in self.vars:
            if var.is_fixed():
                v = var.value()
                if v != zero:
                    if v in seen:
                        raise Contradiction(f"duplicate non-zero value {v}")
                    seen.add(v)
            else:
                open_vars.append(var)
        for var in open_vars:
            for v in seen:
                if v in var.dom:
                    var.remove(v)

    def entail(self) -> Verdict:
        zero = self.zero
        seen = set()
        all_fixed = True
        for var in self.vars:
            if var.is_fixed():
                v = var.value()
                if v != zero:
                    if v in seen:
                        return Verdict.FALSE
                    seen.add(v)
            else:
                all_fixed = False
        return Verdict.TRUE if all_fixed else Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        vals = [value_of(v) for v in self.vars]
        nonzero = [v for v in vals if v != self.zero]
        return len(nonzero) == len(set(nonzero))


class SetDisjoint(Propagator):
    """Two set variables have no common element."""

    __slots__ = ("a", "b")

    def __init__(self, a: SetVar, b: SetVar):
        super().__init__()
        self.a, self.b = a, b

    def variables(self):
        return (self.a, self.b)

    def propagate(self):
        for v in list(self.a.lower):
            self.b.exclude(v)
        for v in list(self.b.lower):
            self.a.exclude(v)

    def entail(self) -> Verdict:
        if self.a.lower & self.b.lower:
            return Verdict.FALSE
        if not (self.a.upper & self.b.upper):
            return Verdict.TRUE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return not (value_of(self.a) & value_of(self.b))


class MemberChannel(Propagator):
    """i is in the set variable iff terms[i] = t (occurrence channeling)."""

    __slots__ = ("terms", "svar", "t")

    def __init__(self, terms: Sequence[IntVar], svar: SetVar, t: int):
        super().__init__()
        self.terms = tuple(terms)
        self.svar = svar
        self.t = t

    def variables(self):
        return self.terms + (self.svar,)

    def propagate(self):
        t = self.t
        svar = self.svar
        for i, var in enumerate(self.terms):
            if i in svar.lower:
                var.assign(t)
            elif i not in svar.upper:
                var.remove(t)
            elif var.is_fixed() and var.value() == t:
                svar.include(i)
            elif t not in var.dom:
                svar.exclude(i)

    def entail(self) -> Verdict:
        t = self.t
        svar = self.svar
        decided = True
        for i, var in enumerate(self.terms):
            must = var.is_fixed() and var.value() == t
            cant = t not in var.dom
            if i in svar.lower and cant:
                return Verdict.FALSE
            if i not in svar.upper and must:
                return Verdict.FALSE
            if not ((i in svar.lower and must) or (i not in svar.upper and cant)):
                decided = False
        return Verdict.TRUE if decided else Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        members = frozenset(i for i, var in enumerate(self.terms)
                            if value_of(var) == self.t)
        return value_of(self.svar) == members

class MinPlusOneOrZero(Propagator):
    """ivar = 1 + min(set) when the set is non-empty, else 0 (set-min channeling)."""

    __slots__ = ("svar", "ivar")

    def __init__(self, svar: SetVar, ivar: IntVar):
        super().__init__()
        self.svar = svar
        self.ivar = ivar

    def variables(self):
        return (self.svar, self.ivar)

    def propagate(self):
        svar, ivar = self.svar, self.ivar
        if svar.lower:
            ivar.remove(0)
            hi = 1 + min(svar.lower)
            ivar.remove_above(hi)
            if svar.upper:
                ivar.remove_below(1 + min(svar.upper))
            for w in list(ivar.dom):
                if w - 1 not in svar.upper:
                    ivar.remove(w)
        else:
            if not svar.upper:
                ivar.assign(0)
            else:
                for w in list(ivar.dom):
                    if w != 0 and w - 1 not in svar.upper:
                        ivar.remove(w)
        if ivar.is_fixed():
            w = ivar.value()
            if w == 0:
                for j in list(svar.upper):
                    svar.exclude(j)
            else:
                svar.include(w - 1)
                for j in list(svar.upper):
                    if j < w - 1:
                        svar.exclude(j)
        elif not ivar.contains(0):
            # set known non-empty; elements below every possible minimum go
            lo = min(ivar.dom) - 1
            for j in list(svar.upper):
                if j < lo:
                    svar.exclude(j)
            if len(svar.upper) == 1 and not svar.lower:
                svar.include(next(iter(svar.upper)))

    def entail(self) -> Verdict:
        svar, ivar = self.svar, self.ivar
        if svar.is_fixed() and ivar.is_fixed():
            want = 1 + min(svar.lower) if svar.lower else 0
            return Verdict.TRUE if ivar.value() == want else Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        s = value_of(self.svar)
        want = 1 + min(s) if s else 0
        return value_of(self.ivar) == want


class InSet(Propagator):
    """The value of ivar is an element of the set variable."""

    __slots__ = ("ivar", "svar")

    def __init__(self, ivar: IntVar, svar: SetVar):
        super().__init__()
        self.ivar = ivar
        self.svar = svar

    def variables(self):
        return (self.ivar, self.svar)

    def propagate(self):
        ivar, svar = self.ivar, self.svar
        for v in list(ivar.dom):
            if v not in svar.upper:
                ivar.remove(v)
        if ivar.is_fixed():
            svar.include(ivar.value())

    def entail(self) -> Verdict:
        if self.ivar.dom <= self.svar.lower:
            return Verdict.TRUE
        if not (self.ivar.dom & self.svar.upper):
            return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return value_of(self.ivar) in value_of(self.svar)


class ReifiedEqConst(Propagator):
    """b = 1 iff x = c (b is a 0/1 variable)."""

    __slots__ = ("x", "c", "b")

    def __init__(self, x: IntVar, c: int, b: IntVar):
        super().__init__()
        self.x, self.c, self.b = x, c, b

    def variables(self):
        return (self.x, self.b)

    def propagate(self):
        x, c, b = self.x, self.c, self.b
        if not x.contains(c):
            b.assign(0)
        elif x.is_fixed():
            b.assign(1)
        if b.is_fixed():
            if b.value() == 1:
                x.assign(c)
            else:
                x.remove(c)

    def entail(self) -> Verdict:
        x, c, b = self.x, self.c, self.b
        if b.is_fixed():
            if b.value() == 1:
                if x.is_fixed():
                    return Verdict.TRUE if x.value() == c else Verdict.FALSE
                if not x.contains(c):
                    return Verdict.FALSE
            else:
                if not x.contains(c):
                    return Verdict.TRUE
                if x.is_fixed():
                    return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return (value_of(self.x) == self.c) == (value_of(self.b) == 1)


class EqConstIff(Propagator):
    """(x = a) iff (y = b) — reification glue between two value tests."""

    __slots__ = ("x", "a", "y", "b")

    def __init__(self, x: IntVar, a: int, y: IntVar, b: int):
        super().__init__()
        self.x, self.a, self.y, self.b = x, a, y, b

    def variables(self):
        return (self.x, self.y)

    def propagate(self):
        x, a, y, b = self.x, self.a, self.y, self.b
        if x.is_fixed() and x.value() == a:
            y.assign(b)
        elif not x.contains(a):
            y.remove(b)
        if y.is_fixed() and y.value() == b:
            x.assign(a)
        elif not y.contains(b):
            x.remove(a)

    def entail(self) -> Verdict:
        x, a, y, b = self.x, self.a, self.y, self.b
        x_true = x.is_fixed() and x.value() == a
        x_false = not x.contains(a)
        y_true = y.is_fixed() and y.value() == b
        y_false = not y.contains(b)
        if (x_true and y_true) or (x_false and y_false):
            return Verdict.TRUE
        if (x_true and y_false) or (x_false and y_true):
            return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return (value_of(self.x) == self.a) == (value_of(self.y) == self.b)


class IfEqThenAssign(Propagator):
    """(cond = val) implies var_j = val_j for every (var_j, val_j) pair."""

    __slots__ = ("cond", "val", "pairs")

    def __init__(self, cond: IntVar, val: int, pairs: Sequence[tuple]):
        super().__init__()
        self.cond = cond
        self.val = val
        self.pairs = tuple(pairs)

    def variables(self):
        return (self.cond,) + tuple(v for v, _ in self.pairs)

    def propagate(self):
        cond, val = self.cond, self.val
        if cond.is_fixed() and cond.value() == val:
            for var, w in self.pairs:
                var.assign(w)
        elif cond.contains(val):
            if any(not var.contains(w) for var, w in self.pairs):
                cond.remove(val)

    def entail(self) -> Verdict:
        cond, val = self.cond, self.val
        if not cond.contains(val):
            return Verdict.TRUE
        all_set = all(var.is_fixed() and var.value() == w for var, w in self.pairs)
        if all_set:
            return Verdict.TRUE
        if cond.is_fixed():
            if any(not var.contains(w) for var, w in self.pairs):
                return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        if value_of(self.cond) != self.val:
            return True
        return all(value_of(var) == w for var, w in self.pairs)


class IndexGate(Propagator):
    """(var_i = gate_i) iff (threshold <= i), for each item (i, var_i, gate_i).

    Two-way gate linking a threshold variable to positionally disabled slots:
    arity-disabled argument slots and the padding suffix of a body both use it.
    """

    __slots__ = ("threshold", "items")

    def __init__(self, threshold: IntVar, items: Sequence[tuple]):
        super().__init__()
        self.threshold = threshold
        self.items = tuple(items)  # (index, var, gate_value)

    def variables(self):
        return (self.threshold,) + tuple(v for _, v, _ in self.items)

    def propagate(self):
        th = self.threshold
        for i, var, g in self.items:
            if th.min() > i:
                var.remove(g)
            elif th.max() <= i:
                var.assign(g)
            else:
                if not var.contains(g):
                    th.remove_below(i + 1)
                elif var.is_fixed():
                    th.remove_above(i)

    def entail(self) -> Verdict:
        th = self.threshold
        decided = True
        for i, var, g in self.items:
            gate_on = th.max() <= i
            gate_off = th.min() > i
            is_g = var.is_fixed() and var.value() == g
            not_g = not var.contains(g)
            if (gate_on and not_g) or (gate_off and is_g):
                return Verdict.FALSE
            if not ((gate_on and is_g) or (gate_off and not_g)):
                decided = False
        return Verdict.TRUE if decided else Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        t = value_of(self.threshold)
        return all((value_of(var) == g) == (t <= i) for i, var, g in self.items)


class SumConst(Propagator):
    """x + y = total (exact over explicit domains)."""

    __slots__ = ("x", "y", "total")

    def __init__(self, x: IntVar, y: IntVar, total: int):
        super().__init__()
        self.x, self.y, self.total = x, y, total

    def variables(self):
        return (self.x, self.y)

    def propagate(self):
        x, y, total = self.x, self.y, self.total
        for v in list(x.dom):
            if total - v not in y.dom:
                x.remove(v)
        for v in list(y.dom):
            if total - v not in x.dom:
                y.remove(v)

    def entail(self) -> Verdict:
        x, y, total = self.x, self.y, self.total
        if x.is_fixed() and y.is_fixed():
            return Verdict.TRUE if x.value() + y.value() == total else Verdict.FALSE
        if all(total - v not in y.dom for v in x.dom):
            return Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        return value_of(self.x) + value_of(self.y) == self.total


class ElementConst(Propagator):
    """value_var = table[index_var] for a constant table."""

    __slots__ = ("index", "table", "value")

    def __init__(self, index_var: IntVar, table: Sequence[int], value_var: IntVar):
        super().__init__()
        self.index = index_var
        self.table = tuple(table)
        self.value = value_var

    def variables(self):
        return (self.index, self.value)

    def propagate(self):
        index, table, value = self.index, self.table, self.value
        for i in list(index.dom):
            if i < 0 or i >= len(table) or table[i] not in value.dom:
                index.remove(i)
        allowed = {table[i] for i in index.dom}
        for v in list(value.dom):
            if v not in allowed:
                value.remove(v)

    def entail(self) -> Verdict:
        if self.index.is_fixed() and self.value.is_fixed():
            i = self.index.value()
            ok = 0 <= i < len(self.table) and self.table[i] == self.value.value()
            return Verdict.TRUE if ok else Verdict.FALSE
        return Verdict.UNDEFINED

    def holds(self, value_of: Callable) -> bool:
        i = value_of(self.index)
        return 0 <= i < len(self.table) and self.table[i] == value_of(self.value)
