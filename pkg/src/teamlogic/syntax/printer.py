"""ASCII printer; its output is accepted by :func:`teamlogic.syntax.parser.parse_formula`."""

from __future__ import annotations

from .ast import (
    And, Bot, Dep, Eq, Exists, ExistsFunc, ExistsRel, Forall, Formula, GQ,
    Indep, Neg, NormalFormSentence, Or, Rel, Top, Var,
)

_QUANTIFIED = (Exists, Forall, GQ, ExistsFunc, ExistsRel)


def term_text(t) -> str:
    if isinstance(t, Var):
        return t.name
    return f"{t.name}({','.join(term_text(a) for a in t.args)})"


def _terms(ts) -> str:
    return ",".join(term_text(t) for t in ts)


def to_text(phi) -> str:
    if isinstance(phi, NormalFormSentence):
        phi = phi.to_formula()
    if isinstance(phi, Top):
        return "top"
    if isinstance(phi, Bot):
        return "bot"
    if isinstance(phi, Rel):
        return f"{phi.name}({_terms(phi.args)})"
    if isinstance(phi, Eq):
        return f"{term_text(phi.left)}={term_text(phi.right)}"
    if isinstance(phi, Dep):
        return f"dep({_terms(phi.terms)})"
    if isinstance(phi, Indep):
        return f"perp({_terms(phi.left)}; {_terms(phi.cond)}; {_terms(phi.right)})"
    if isinstance(phi, Neg):
        a = phi.atom
        if isinstance(a, Eq):
            return f"{term_text(a.left)}!={term_text(a.right)}"
        return "~" + to_text(a)
    if isinstance(phi, (And, Or)):
        op = " & " if isinstance(phi, And) else " | "
        left = to_text(phi.left)
        # a quantifier on the left would otherwise swallow the right operand
        if isinstance(phi.left, _QUANTIFIED):
            left = f"({left})"
        return f"({left}{op}{to_text(phi.right)})"
    if isinstance(phi, Exists):
        return f"E {phi.var}. {to_text(phi.body)}"
    if isinstance(phi, Forall):
        return f"A {phi.var}. {to_text(phi.body)}"
    if isinstance(phi, GQ):
        return f"[{phi.quantifier} {' '.join(phi.vars)}] {to_text(phi.body)}"
    if isinstance(phi, ExistsFunc):
        return f"Ef {phi.name}/{phi.arity}. {to_text(phi.body)}"
    if isinstance(phi, ExistsRel):
        return f"ER {phi.name}/{phi.arity}. {to_text(phi.body)}"
    raise TypeError(f"not a formula: {phi!r}")


def prefix_text(nf: NormalFormSentence) -> str:
    """The quantifier prefix of a normal-form sentence, e.g. ``"Ef f/1. A x. [most y]"``."""
    parts = [f"Ef {n}/{a}." for n, a in nf.functions]
    for kind, vs in nf.prefix:
        parts.append(f"A {vs[0]}." if kind == "forall" else f"[{kind} {' '.join(vs)}]")
    return " ".join(parts)


def pretty(phi: Formula) -> str:
    """Unicode rendering for humans (not parseable)."""
    text = to_text(phi)
    for a, b in (("!=", "≠"), (" & ", " ∧ "), (" | ", " ∨ "), ("~", "¬"), ("top", "⊤"), ("bot", "⊥")):
        text = text.replace(a, b)
    return text
