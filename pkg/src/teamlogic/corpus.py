"""Fixed formula collections used by the sweeps and the acceptance suite.

Texts use the ASCII grammar of :mod:`teamlogic.syntax.parser`. Templates
containing ``Q`` are instantiated with a quantifier name by :func:`instantiate`.
"""

from __future__ import annotations

import itertools
import random

from .syntax.ast import And, Dep, Eq, Exists, Forall, GQ, Neg, Or, Rel, Var
from .syntax.parser import parse_formula


def instantiate(template: str, quantifier: str) -> str:
    return template.replace("[Q ", f"[{quantifier} ")


def parse_all(texts, quantifier: str | None = None):
    return [parse_formula(instantiate(t, quantifier) if quantifier else t) for t in texts]


# ESO(Q) sentences for the normal-form sweep, with the signature each is read over.
NORMAL_FORM_SENTENCES = (
    ("P/1", "[most x] E y. (P(y) & x!=y)"),
    ("P/1", "[most x] (P(x) | E y. (x=y & ~P(y)))"),
    ("P/1", "A x. [atleast2 y] E z. (P(z) | (x!=y & z=y))"),
    ("P/1", "ER R/1. [most x] (R(x) & ~P(x))"),
    ("P/1", "ER R/1. (A x. (~R(x) | P(x)) & [atleast2 y] R(y))"),
    ("P/1", "[most x] (P(x) | ER R/1. (R(x) & A y. (~R(y) | x=y)))"),
    ("P/1", "Ef f/1. [most x] Ef g/1. (P(g(f(x))) | x=f(x))"),
    ("P/1", "Ef f/1. A x. Ef g/1. [exists y] (g(y)=f(x) & P(y))"),
    ("P/1", "[most x] ((P(x) | E y. ~P(y)) & A z. (z=z | P(z)))"),
    ("P/1", "[atleast2 x] (P(x) & E y. (y!=x | P(y)))"),
    ("P/1", "([most x] P(x) | [most y] ~P(y))"),
    ("P/1", "([atleast2 x] (P(x) | E y. P(y)) & E z. ~P(z))"),
    ("P/1", "E x. [most y] (x=y | (P(x) & P(y)))"),
    ("P/1", "A x. ([exists y] (x!=y & P(y)) | ~P(x))"),
    ("E/2", "[most x] E y. E(x,y)"),
    ("E/2", "[most x] (E(x,x) | ER R/2. R(x,x))"),
    ("E/2", "Ef f/1. Ef g/1. A x. (E(x,f(x)) & E(g(x),x))"),
    ("E/2", "ER R/1. [atleast2 x] (R(x) & E y. (E(x,y) & ~R(y)))"),
    ("E/2", "A x. [most y] (E(x,y) | E z. E(z,x))"),
    ("E/2", "Ef f/1. [most x] E y. (E(x,y) & E(y,f(x)))"),
)


def normal_form_sizes(sig: str, text: str) -> tuple:
    """Universe sizes the normal-form sweep uses for one sentence."""
    so_funcs = text.count("Ef ") + (2 * text.count("ER ") if "E/2" in sig else 0)
    if "E/2" in sig and so_funcs >= 2:
        return (2,)
    return (2, 3)


# Normal-form templates for the main-theorem sweep (already flat, at most two
# prefix variables so teams stay within the default caps at |M| = 3).
MAIN_THEOREM_TEMPLATES = (
    "Ef f/1. [Q x] P(f(x))",
    "Ef f/1. [Q x] (P(x) | ~P(f(x)))",
    "Ef c/0. [Q x] (x=c() | P(x))",
    "Ef f/1. A x. [Q y] (f(x)!=y | P(y))",
    "Ef f/1. [Q x] A y. (f(x)!=y | ~P(y))",
    "Ef f/2. A x. [Q y] (P(f(x,y)) | x=y)",
    "Ef f/1. Ef g/1. [Q x] (f(x)!=g(x) & (P(f(x)) | P(x)))",
    "Ef c/0. Ef f/1. [Q x] (P(f(x)) | ~P(c()))",
    "Ef f/2. [Q x] [Q y] (P(f(x,y)) & (x=y | P(x) | ~P(y)))",
    "[Q x] A y. (x=y | P(y) | ~P(x))",
)

MAIN_THEOREM_QUANTIFIERS = ("exists", "atleast2", "most")

# Sentences for the total translation with a quantifier that needs the full
# set at some sizes and only a nonempty set at others.
SMALL_TRICK_TEMPLATES = (
    "[Q x] P(x)",
    "A x. [Q y] (x=y | P(y))",
    "[Q x] (P(x) | Ef c/0. P(c()))",
    "Ef f/1. [Q x] P(f(x))",
    "E x. [Q y] (P(y) | x=y)",
)

FLATTEN_EXAMPLE = "Ef f/1. A x. P(f(f(x)))"

# Regression: a clone for a tuple with a quantifier-bound variable is unsound.
CLONE_REGRESSION = "Ef f/1. [exists v] A x. (x!=v & P(f(x)) & ~P(f(v)))"


def nested_term_sentences(count: int = 10, seed: int = 0) -> list[str]:
    """Sentences with nested, repeated or clashing function applications."""
    rng = random.Random(seed)
    out = []
    terms_1 = ["f(f(x))", "f(g(y))", "g(f(x))", "f(x)", "f(y)", "g(x)", "f(c())", "g(g(y))"]
    while len(out) < count:
        t1, t2 = rng.sample(terms_1, 2)
        lit1 = f"P({t1})" if rng.random() < 0.5 else f"~P({t1})"
        lit2 = rng.choice([f"P({t2})", f"~P({t2})", f"{t1}={t2}", f"{t1}!={t2}", f"x={t2}"])
        op = rng.choice(["&", "|"])
        outer, inner = rng.choice([("A x.", "A y."), ("A x.", "[exists y]"), ("[most x]", "A y."), ("A x.", "[atleast2 y]")])
        funcs = "Ef f/1. Ef g/1. Ef c/0."
        text = f"{funcs} {outer} {inner} ({lit1} {op} {lit2})"
        if text not in out:
            out.append(text)
    return out


# ------------------------------------------------------ exhaustive spaces


def team_leaves(dialect: str, relation: str = "P", variables=("x", "y")) -> tuple:
    """Four atoms per dialect, over a unary relation and two variables."""
    x, y = (Var(v) for v in variables)
    common = (Rel(relation, (x,)), Neg(Rel(relation, (y,))), Eq(x, y))
    if dialect == "fo":
        return common + (Neg(Eq(x, y)),)
    if dialect == "dq":
        return common + (Dep((x, y)),)
    raise ValueError(f"no standard leaves for dialect {dialect!r}")


def binder(quantifier: str, var: str):
    if quantifier == "exists":
        return lambda body: Exists(var, body)
    if quantifier == "forall":
        return lambda body: Forall(var, body)
    return lambda body: GQ(quantifier, (var,), body)


def enumerate_formulas(depth: int, leaves, binders) -> list:
    """Every formula of depth ≤ ``depth``: ∧/∨ over unordered pairs, one binder per node."""
    level = list(leaves)
    for _ in range(depth):
        prev = level
        level = list(leaves)
        for a, b in itertools.combinations_with_replacement(prev, 2):
            level.append(And(a, b))
            level.append(Or(a, b))
        for mk in binders:
            level.extend(mk(a) for a in prev)
    return level


def count_formulas(depth: int, n_leaves: int, n_binders: int) -> int:
    count = n_leaves
    for _ in range(depth):
        count = n_leaves + count * (count + 1) + n_binders * count
    return count


def standard_space(dialect: str = "dq", depth: int = 2, quantifiers=("exists", "forall", "most"),
                   relation: str = "P", variables=("x", "y")) -> list:
    binders = [binder(q, v) for q in quantifiers for v in variables]
    return enumerate_formulas(depth, team_leaves(dialect, relation, variables), binders)
