#!/usr/bin/env python3
"""Sample random probabilistic programs with a fact database and a query.

Rules come from the constraint model (random value order, geometric
restarts, fresh solver per program), facts from rejection sampling over a
constant pool, and the query is a random absent ground atom.
Run: python3 demos/sample_programs.py [seed]
"""

import sys
import time

from genlp import CycleMode, Parameters, assign_probabilities
from genlp.config import FactSpec
from genlp.cp import GeometricRestarts, RANDOM, SearchSpec, first_solution
from genlp.dependencies import verify_stratified
from genlp.emit import render_program
from genlp.facts import generate_facts, pick_query
from genlp.modeling import build_program_model, decode_solution
from genlp.programs import Program


def main():
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 2024
    params = Parameters(
        predicates=("edge", "path", "blocked"), arities=(2, 2, 1),
        variables=("X", "Y", "Z"),
        max_nodes=5, max_clauses=4,
        probabilities=(0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9),
        cycle_mode=CycleMode.FORBID_NEGATIVE,
        forbid_empty_bodies=True)
    spec = FactSpec(fact_constants=("a", "b", "c", "d"), num_facts=6,
                    probabilistic_proportion=0.5)

    for k in range(3):
        start = time.perf_counter()
        pm = build_program_model(params)
        search = SearchSpec(groups=pm.groups, value_order=RANDOM,
                            restarts=GeometricRestarts(10, 1.1))
        sol = first_solution(pm.model, search, seed=f"{seed}:{k}")
        rules = assign_probabilities(decode_solution(pm, sol),
                                     params.probabilities, seed=f"{seed}:{k}")
        facts = generate_facts(spec, params, seed=f"{seed}:{k}")
        program = Program(tuple(rules.clauses) + tuple(facts))
        query = pick_query({c.head for c in facts}, params,
                           spec.fact_constants, seed=f"{seed}:{k}")
        elapsed = time.perf_counter() - start
        assert verify_stratified(program, CycleMode.FORBID_NEGATIVE)
        print(f"# program {k} ({elapsed * 1000:.0f} ms)")
        print(render_program(program, query=query))


if __name__ == "__main__":
    main()
