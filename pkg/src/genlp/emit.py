"""Program text emitter.

One clause per line, `<prob> :: ` prefix unless the probability is one,
` :- ` between head and body unless the body is empty, conjunction children
joined by `, `, disjunction children by `; `, each connective child wrapped
in parentheses (including redundant ones), negation printed `\\+(...)`.
Output with probability list [1] is plain Prolog. Identical programs render
to identical bytes.
"""

from __future__ import annotations

from typing import Optional

from .programs import And, Atom, Clause, Formula, Not, Or, Program, TOP


def format_probability(p) -> str:
    """Shortest decimal form: 0.5 not 0.50; integral one is the empty prefix."""
    if isinstance(p, str):
        p = float(p)
    if float(p) == 1:
        return ""
    text = repr(float(p))
    return text


def render_atom(atom: Atom) -> str:
    if not atom.terms:
        return atom.predicate
    return f"{atom.predicate}({', '.join(atom.terms)})"


def render_formula(formula: Formula) -> str:
    if isinstance(formula, Atom):
        return render_atom(formula)
    if isinstance(formula, Not):
        return f"\\+({render_formula(formula.child)})"
    if isinstance(formula, And):
        return ", ".join(f"({render_formula(c)})" for c in formula.children)
    if isinstance(formula, Or):
        return "; ".join(f"({render_formula(c)})" for c in formula.children)
    raise ValueError(f"cannot render {formula!r} inside a body")


def render_clause(clause: Clause) -> str:
    prob = format_probability(clause.probability)
    prefix = f"{prob} :: " if prob else ""
    head = render_atom(clause.head)
    if clause.body is TOP:
        return f"{prefix}{head}."
    return f"{prefix}{head} :- {render_formula(clause.body)}."


def render_program(program: Program, query: Optional[Atom] = None) -> str:
    """One clause per line in program order; optional trailing query line.
    The empty program renders as the empty document."""
    lines = [render_clause(c) for c in program.clauses]
    if query is not None:
        lines.append(f"query({render_atom(query)}).")
    if not lines:
        return ""
    return "\n".join(lines) + "\n"
