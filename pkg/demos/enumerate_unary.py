#!/usr/bin/env python3
"""Enumerate every program a tiny parameter set admits.

One unary predicate, one variable, bodies up to four nodes, one clause:
the space holds exactly 15 programs, 6 of which survive when cycles through
negation are forbidden. Run: python3 demos/enumerate_unary.py
"""

from genlp import CycleMode, Parameters, build_program_model, decode_solution
from genlp.cp import SearchSpec, solve
from genlp.emit import render_clause


def enumerate_all(cycle_mode):
    params = Parameters(predicates=("p",), arities=(1,), variables=("X",),
                        max_nodes=4, max_clauses=1, cycle_mode=cycle_mode)
    pm = build_program_model(params)
    for sol in solve(pm.model, SearchSpec(groups=pm.groups)):
        yield decode_solution(pm, sol)


def main():
    print("all programs:")
    unrestricted = list(enumerate_all(CycleMode.NONE))
    for i, program in enumerate(unrestricted, 1):
        print(f"{i:3}. {render_clause(program.clauses[0])}")
    print(f"total: {len(unrestricted)}")

    print("\nwithout negative cycles:")
    stratified = list(enumerate_all(CycleMode.FORBID_NEGATIVE))
    for program in stratified:
        print(f"     {render_clause(program.clauses[0])}")
    print(f"total: {len(stratified)}")

    acyclic = list(enumerate_all(CycleMode.FORBID_ALL))
    print(f"\nwithout any cycles: {len(acyclic)} "
          f"({render_clause(acyclic[0].clauses[0])})")


if __name__ == "__main__":
    main()
