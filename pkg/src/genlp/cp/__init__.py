"""Minimal finite-domain constraint engine."""

from .core import Contradiction, IntVar, Model, ModelError, Propagator, SetVar, Verdict
from .constraints import (
    AllDifferentExceptZero,
    CountMatches,
    CountValueEq,
    ElementConst,
    EqConstIff,
    Equal,
    IfEqThenAssign,
    IndexGate,
    InSet,
    Less,
    LexLess,
    LexLessUnless,
    MemberChannel,
    MinPlusOneOrZero,
    NonDecreasing,
    NotEqual,
    NValues,
    ReifiedEqConst,
    SetDisjoint,
    SumConst,
    Table,
)
from .search import (
    GeometricRestarts,
    SearchSpec,
    SearchStats,
    SearchTimeout,
    Solution,
    first_solution,
    solve,
    LEX,
    RANDOM,
)

__all__ = [
    "AllDifferentExceptZero",
    "Contradiction",
    "CountMatches",
    "CountValueEq",
    "ElementConst",
    "EqConstIff",
    "Equal",
    "GeometricRestarts",
    "IfEqThenAssign",
    "IndexGate",
    "InSet",
    "IntVar",
    "LEX",
    "Less",
    "LexLess",
    "LexLessUnless",
    "MemberChannel",
    "MinPlusOneOrZero",
    "Model",
    "ModelError",
    "NValues",
    "NonDecreasing",
    "NotEqual",
    "Propagator",
    "RANDOM",
    "ReifiedEqConst",
    "SearchSpec",
    "SearchStats",
    "SearchTimeout",
    "SetDisjoint",
    "SetVar",
    "Solution",
    "SumConst",
    "Table",
    "Verdict",
    "first_solution",
    "solve",
]
