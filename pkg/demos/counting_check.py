#!/usr/bin/env python3
"""Cross-validate the solver against the closed-form counting oracle.

For a sweep of small parameter sets, the number of solutions found by
exhaustive search must equal the count computed combinatorially (bodies by
size and total arity, term selections, clause distributions).
Run: python3 demos/counting_check.py
"""

import itertools

from genlp import CountingContext, Parameters, count_by_enumeration


def main():
    print(f"{'preds':>5} {'arities':>9} {'vars':>4} {'consts':>6} "
          f"{'nodes':>5} {'clauses':>7} {'formula':>9} {'enumerated':>10}")
    checked = 0
    for npreds, nvars, nconsts, mn in itertools.product(
            (1, 2), (0, 1, 2), (0, 1), (1, 2)):
        if nvars + nconsts == 0:
            continue
        arities = tuple(1 + (i % 2) for i in range(npreds))
        params = Parameters(
            predicates=tuple(f"p{i}" for i in range(npreds)),
            arities=arities,
            variables=tuple("XY"[:nvars]),
            constants=tuple("a"[:nconsts]),
            max_nodes=mn, max_clauses=npreds + 1)
        expected = CountingContext(params).count_programs()
        if expected > 3000:
            continue
        got = count_by_enumeration(params)
        verdict = "AGREE" if got == expected else "DISAGREE"
        print(f"{npreds:>5} {str(arities):>9} {nvars:>4} {nconsts:>6} "
              f"{mn:>5} {npreds + 1:>7} {expected:>9} {got:>10}  {verdict}")
        assert got == expected
        checked += 1
    print(f"\n{checked} parameter sets, all in exact agreement")


if __name__ == "__main__":
    main()
