#!/usr/bin/env python3
"""Watch the independence propagator work on a half-built program.

Two clause slots: the first clause's head is still undecided over four
family predicates, the second already says
father(X, Y) <- parent(X, Y) and not mother(X, Y). Requiring mother and
parent to be independent prunes the potential edge parent -> mother, which
in turn removes mother from the open head's domain and settles entailment.
Run: python3 demos/independence_trace.py
"""

from genlp import Parameters
from genlp.cp import Model, Verdict
from genlp.dependencies import IndependencePropagator, deps, post_adjacency_channeling
from genlp.modeling import make_clause_vars, post_clause_body, post_clause_head
from genlp.parameters import Encoding

FAMILY = ("father", "mother", "parent", "sibling")
FATHER, MOTHER, PARENT, SIBLING = range(4)


def show_matrix(matrix, names):
    width = max(len(n) for n in names)
    for i, name in enumerate(names):
        row = []
        for j in range(len(names)):
            var = matrix[i, j]
            row.append(str(var.value()) if var.is_fixed() else "{0,1}")
        print(f"  {name:<{width}}  " + "  ".join(f"{c:>5}" for c in row))


def main():
    params = Parameters(predicates=FAMILY, arities=(2, 2, 2, 2),
                        variables=("X", "Y", "Z"), max_nodes=4, max_clauses=4)
    enc = Encoding(params)
    model = Model()
    open_clause = make_clause_vars(model, enc, 0)
    father_clause = make_clause_vars(model, enc, 1)
    for cv in (open_clause, father_clause):
        post_clause_head(model, enc, cv)
        post_clause_body(model, enc, cv)
    matrix = post_adjacency_channeling(model, enc, (open_clause, father_clause))

    x, y, z = (enc.variable_code(i) for i in range(3))
    # _(X, Y) <- parent(X, Z) and parent(Y, Z): head left open
    for var, val in zip(open_clause.structure, [0, 0, 0, 3]):
        var.assign(val)
    for var, val in zip(open_clause.names, [enc.conj, PARENT, PARENT, enc.top]):
        var.assign(val)
    for var, val in zip(open_clause.node_args[1], [x, z]):
        var.assign(val)
    for var, val in zip(open_clause.node_args[2], [y, z]):
        var.assign(val)
    # father(X, Y) <- parent(X, Y) and not mother(X, Y)
    father_clause.head_pred.assign(FATHER)
    for var, val in zip(father_clause.head_args, [x, y]):
        var.assign(val)
    for var, val in zip(father_clause.structure, [0, 0, 0, 2]):
        var.assign(val)
    for var, val in zip(father_clause.names,
                        [enc.conj, PARENT, enc.neg, MOTHER]):
        var.assign(val)
    for var, val in zip(father_clause.node_args[1], [x, y]):
        var.assign(val)
    for var, val in zip(father_clause.node_args[3], [x, y]):
        var.assign(val)
    assert model.propagate()

    print("adjacency matrix (rows = body predicate, columns = head):")
    show_matrix(matrix, FAMILY)
    print("\ndependencies of mother:",
          sorted((d.kind.value, FAMILY[d.predicate])
                 for d in deps(MOTHER, True, matrix, 4)))

    constraint = IndependencePropagator(MOTHER, PARENT, matrix, 4)
    print("entailment before propagation:", constraint.entail().value)
    constraint.propagate()
    model.propagate()
    print("\nafter propagating mother/parent independence:")
    show_matrix(matrix, FAMILY)
    heads = sorted(FAMILY[v] for v in open_clause.head_pred.dom)
    print("open head may still be:", heads)
    print("entailment after propagation:", constraint.entail().value)
    assert constraint.entail() is Verdict.TRUE


if __name__ == "__main__":
    main()
