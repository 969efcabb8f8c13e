"""Free variables, symbol collection, substitution and structural rewrites."""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, Mapping

from ..errors import DialectError, SignatureError
from .ast import (
    And, Bot, Dep, Eq, Exists, ExistsFunc, ExistsRel, Forall, Formula, Func, GQ,
    Indep, Neg, Or, Rel, Signature, Term, Top, Var, is_relation_name, term_vars,
)


# ----------------------------------------------------------- traversal


def children(phi: Formula) -> tuple:
    if isinstance(phi, (And, Or)):
        return (phi.left, phi.right)
    if isinstance(phi, (Exists, Forall, GQ, ExistsFunc, ExistsRel)):
        return (phi.body,)
    if isinstance(phi, Neg):
        return (phi.atom,)
    return ()


def walk(phi: Formula) -> Iterator[Formula]:
    """Pre-order traversal of all subformulas."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def atom_terms(phi: Formula) -> tuple:
    if isinstance(phi, Rel):
        return phi.args
    if isinstance(phi, Eq):
        return (phi.left, phi.right)
    if isinstance(phi, Dep):
        return phi.terms
    if isinstance(phi, Indep):
        return phi.left + phi.cond + phi.right
    return ()


def all_terms(phi: Formula) -> Iterator[Term]:
    for node in walk(phi):
        yield from atom_terms(node)


def depth(phi: Formula) -> int:
    if isinstance(phi, Neg):
        return 0
    kids = children(phi)
    return 0 if not kids else 1 + max(depth(k) for k in kids)


def size(phi: Formula) -> int:
    return sum(1 for _ in walk(phi))


# ------------------------------------------------------ free variables


def free_variables(phi: Formula) -> frozenset[str]:
    """Free first-order variables. Every variable of a dep/perp atom is free."""
    if isinstance(phi, (Top, Bot)):
        return frozenset()
    if isinstance(phi, (Rel, Eq, Dep, Indep)):
        out: set[str] = set()
        for t in atom_terms(phi):
            out |= term_vars(t)
        return frozenset(out)
    if isinstance(phi, Neg):
        return free_variables(phi.atom)
    if isinstance(phi, (And, Or)):
        return free_variables(phi.left) | free_variables(phi.right)
    if isinstance(phi, (Exists, Forall)):
        return free_variables(phi.body) - {phi.var}
    if isinstance(phi, GQ):
        return free_variables(phi.body) - set(phi.vars)
    if isinstance(phi, (ExistsFunc, ExistsRel)):
        return free_variables(phi.body)
    raise TypeError(f"not a formula: {phi!r}")


def is_sentence(phi: Formula) -> bool:
    return not free_variables(phi)


def _term_symbols(t: Term, acc: dict):
    if isinstance(t, Func):
        acc.setdefault(t.name, len(t.args))
        for a in t.args:
            _term_symbols(a, acc)


def symbols(phi: Formula) -> tuple[dict, dict]:
    """All relation and function symbols occurring in ``phi`` (bound or not), with arities."""
    rels: dict = {}
    funs: dict = {}
    for node in walk(phi):
        if isinstance(node, Rel):
            rels.setdefault(node.name, len(node.args))
        elif isinstance(node, ExistsRel):
            rels.setdefault(node.name, node.arity)
        elif isinstance(node, ExistsFunc):
            funs.setdefault(node.name, node.arity)
        for t in atom_terms(node):
            _term_symbols(t, funs)
    return rels, funs


def free_symbols(phi: Formula, bound=frozenset()) -> tuple[dict, dict]:
    """Relation/function symbols not bound by a second-order quantifier."""
    rels: dict = {}
    funs: dict = {}

    def visit(node, bound):
        if isinstance(node, (ExistsFunc, ExistsRel)):
            visit(node.body, bound | {node.name})
            return
        if isinstance(node, Rel) and node.name not in bound:
            rels.setdefault(node.name, len(node.args))
        for t in atom_terms(node):
            tmp: dict = {}
            _term_symbols(t, tmp)
            for n, a in tmp.items():
                if n not in bound:
                    funs.setdefault(n, a)
        for c in children(node):
            if not isinstance(node, Neg):
                visit(c, bound)
        if isinstance(node, Neg):
            visit(node.atom, bound)

    visit(phi, frozenset(bound))
    return rels, funs


def all_names(phi: Formula) -> set[str]:
    """Every identifier in ``phi``: variables (free or bound), symbols, binders."""
    names: set[str] = set()
    for node in walk(phi):
        if isinstance(node, (Exists, Forall)):
            names.add(node.var)
        elif isinstance(node, GQ):
            names.update(node.vars)
        elif isinstance(node, (ExistsFunc, ExistsRel)):
            names.add(node.name)
        elif isinstance(node, Rel):
            names.add(node.name)
        for t in atom_terms(node):
            names |= term_vars(t)
            tmp: dict = {}
            _term_symbols(t, tmp)
            names.update(tmp)
    return names


def quantifier_names(phi: Formula) -> set[str]:
    return {n.quantifier for n in walk(phi) if isinstance(n, GQ)}


def is_quantifier_free(phi: Formula) -> bool:
    return not any(isinstance(n, (Exists, Forall, GQ, ExistsFunc, ExistsRel)) for n in walk(phi))


def has_team_atoms(phi: Formula) -> bool:
    return any(isinstance(n, (Dep, Indep)) for n in walk(phi))


def has_independence(phi: Formula) -> bool:
    return any(isinstance(n, Indep) for n in walk(phi))


def has_second_order(phi: Formula) -> bool:
    return any(isinstance(n, (ExistsFunc, ExistsRel)) for n in walk(phi))


def dialect_of(phi: Formula) -> str:
    """Smallest dialect containing ``phi``: ``fo``, ``dq``, ``iq`` or ``eso``."""
    so = has_second_order(phi)
    team = has_team_atoms(phi)
    if so and team:
        raise DialectError("formula mixes second-order quantifiers with dependence/independence atoms")
    if so:
        return "eso"
    if has_independence(phi):
        return "iq"
    if team:
        return "dq"
    return "fo"


def check_dialect(phi: Formula, dialect: str) -> None:
    """Raise :class:`DialectError` unless ``phi`` belongs to ``dialect``."""
    allowed = {
        "fo": {"fo"},
        "dq": {"fo", "dq"},
        "iq": {"fo", "dq", "iq"},
        "eso": {"fo", "eso"},
    }[dialect]
    d = dialect_of(phi)
    if d not in allowed:
        raise DialectError(f"formula is in {d}, not in {dialect}")


def check_signature(phi: Formula, sig: Signature) -> None:
    """Every free symbol of ``phi`` is declared in ``sig`` with the used arity."""
    rels, funs = free_symbols(phi)
    for name, ar in rels.items():
        if sig.relations.get(name) != ar:
            raise SignatureError(f"relation {name}/{ar} not in signature {sig}")
    for name, ar in funs.items():
        if sig.functions.get(name) != ar:
            raise SignatureError(f"function {name}/{ar} not in signature {sig}")


# ---------------------------------------------------------- fresh names


class FreshNames:
    """Supply of reserved names (``_`` prefix) avoiding a given set."""

    def __init__(self, avoid=()):
        self.avoid = set(avoid)
        self.counters: dict[str, itertools.count] = {}

    def __call__(self, stem: str) -> str:
        counter = self.counters.setdefault(stem, itertools.count())
        while True:
            name = f"_{stem}{next(counter)}"
            if name not in self.avoid:
                self.avoid.add(name)
                return name

    def var(self):
        return self("v")


# --------------------------------------------------------- term rewrites


def map_term(t: Term, fn: Callable[[Term], Term | None]) -> Term:
    """Rewrite bottom-up; ``fn`` returns a replacement or ``None`` to keep the node."""
    if isinstance(t, Func):
        t = Func(t.name, tuple(map_term(a, fn) for a in t.args))
    r = fn(t)
    return t if r is None else r


def map_terms(phi: Formula, fn: Callable[[Term], Term | None]) -> Formula:
    """Apply :func:`map_term` to every term of every atom (binders are not consulted)."""
    m = lambda ts: tuple(map_term(t, fn) for t in ts)
    if isinstance(phi, Rel):
        return Rel(phi.name, m(phi.args))
    if isinstance(phi, Eq):
        return Eq(map_term(phi.left, fn), map_term(phi.right, fn))
    if isinstance(phi, Dep):
        return Dep(m(phi.terms))
    if isinstance(phi, Indep):
        return Indep(m(phi.left), m(phi.cond), m(phi.right))
    return map_children(phi, lambda c: map_terms(c, fn))


def map_children(phi: Formula, fn: Callable[[Formula], Formula]) -> Formula:
    if isinstance(phi, Neg):
        return Neg(fn(phi.atom))
    if isinstance(phi, And):
        return And(fn(phi.left), fn(phi.right))
    if isinstance(phi, Or):
        return Or(fn(phi.left), fn(phi.right))
    if isinstance(phi, Exists):
        return Exists(phi.var, fn(phi.body))
    if isinstance(phi, Forall):
        return Forall(phi.var, fn(phi.body))
    if isinstance(phi, GQ):
        return GQ(phi.quantifier, phi.vars, fn(phi.body))
    if isinstance(phi, ExistsFunc):
        return ExistsFunc(phi.name, phi.arity, fn(phi.body))
    if isinstance(phi, ExistsRel):
        return ExistsRel(phi.name, phi.arity, fn(phi.body))
    return phi


def replace_term(phi: Formula, old: Term, new: Term) -> Formula:
    """Replace every occurrence of the exact term ``old`` (no capture check)."""
    return map_terms(phi, lambda t: new if t == old else None)


def _subst_term(t: Term, mapping: Mapping[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    return Func(t.name, tuple(_subst_term(a, mapping) for a in t.args))


def substitute(phi: Formula, mapping: Mapping[str, Term], fresh: FreshNames | None = None) -> Formula:
    """Capture-avoiding substitution of terms for free variables.

    Bound variables are renamed (with reserved names) when they would capture a
    variable of a replacement term.
    """
    if fresh is None:
        fresh = FreshNames(all_names(phi) | {v for t in mapping.values() for v in term_vars(t)})
    return _substitute(phi, dict(mapping), fresh)


def _substitute(phi, mapping, fresh):
    if not mapping:
        return phi
    if isinstance(phi, (Top, Bot)):
        return phi
    if isinstance(phi, (Rel, Eq, Dep, Indep)):
        return map_terms(phi, lambda t: mapping.get(t.name) if isinstance(t, Var) else None)
    if isinstance(phi, Neg):
        return Neg(_substitute(phi.atom, mapping, fresh))
    if isinstance(phi, (And, Or)):
        return type(phi)(_substitute(phi.left, mapping, fresh), _substitute(phi.right, mapping, fresh))
    if isinstance(phi, (ExistsFunc, ExistsRel)):
        return type(phi)(phi.name, phi.arity, _substitute(phi.body, mapping, fresh))
    bound = (phi.var,) if isinstance(phi, (Exists, Forall)) else phi.vars
    inner = {k: v for k, v in mapping.items() if k not in bound}
    fv_body = free_variables(phi.body)
    inner = {k: v for k, v in inner.items() if k in fv_body}
    captured = set()
    for t in inner.values():
        captured |= term_vars(t)
    renames = {b: Var(fresh.var()) for b in bound if b in captured}
    body = phi.body
    if renames:
        body = _substitute(body, renames, fresh)
    new_bound = tuple(renames[b].name if b in renames else b for b in bound)
    body = _substitute(body, inner, fresh)
    if isinstance(phi, Exists):
        return Exists(new_bound[0], body)
    if isinstance(phi, Forall):
        return Forall(new_bound[0], body)
    return GQ(phi.quantifier, new_bound, body)


def substitute_relation(
    phi: Formula,
    name: str,
    params: tuple[str, ...],
    replacement: Formula,
    fresh: FreshNames | None = None,
) -> Formula:
    """Replace each atom ``name(t̄)`` by ``replacement[params := t̄]``.

    Occurrences under a binder of ``name`` are left alone. A negated
    occurrence can only be replaced by an atom (the result must stay in NNF).
    """
    if fresh is None:
        fresh = FreshNames(all_names(phi) | all_names(replacement))

    def go(node):
        if isinstance(node, Rel) and node.name == name:
            if len(node.args) != len(params):
                raise SignatureError(f"{name} used with {len(node.args)} arguments, replacement takes {len(params)}")
            return substitute(replacement, dict(zip(params, node.args)), fresh)
        if isinstance(node, Neg) and isinstance(node.atom, Rel) and node.atom.name == name:
            new = go(node.atom)
            if isinstance(new, (Rel, Eq)):
                return Neg(new)
            if isinstance(new, Top):
                return Bot()
            if isinstance(new, Bot):
                return Top()
            raise SignatureError(f"cannot substitute a non-atomic formula for a negated occurrence of {name}")
        if isinstance(node, (ExistsRel, ExistsFunc)) and node.name == name:
            return node
        return map_children(node, go)

    return go(phi)


def rename_relation(phi: Formula, old: str, new: str) -> Formula:
    def go(node):
        if isinstance(node, Rel) and node.name == old:
            return Rel(new, node.args)
        if isinstance(node, ExistsRel) and node.name == old:
            return node
        return map_children(node, go)

    return go(phi)


def rename_function(phi: Formula, old: str, new: str) -> Formula:
    def go(node):
        if isinstance(node, ExistsFunc) and node.name == old:
            return node
        if isinstance(node, (Rel, Eq, Dep, Indep)):
            return map_terms(node, lambda t: Func(new, t.args) if isinstance(t, Func) and t.name == old else None)
        return map_children(node, go)

    return go(phi)


def replace_subformulas(phi: Formula, pred: Callable[[Formula], bool], repl: Callable[[Formula], Formula]) -> Formula:
    """Replace every maximal subformula satisfying ``pred`` by ``repl(subformula)``."""
    if pred(phi):
        return repl(phi)
    return map_children(phi, lambda c: replace_subformulas(c, pred, repl))


def rename_bound_apart(phi: Formula, fresh: FreshNames | None = None, *, second_order=True) -> Formula:
    """Give every binder a distinct reserved name, distinct from all free names.

    First-order binders always; second-order binders too when ``second_order``.
    """
    if fresh is None:
        fresh = FreshNames(all_names(phi))

    def go(node, fo: dict, so: dict):
        if isinstance(node, (Rel, Eq, Dep, Indep)):
            def fn(t):
                if isinstance(t, Var) and t.name in fo:
                    return Var(fo[t.name])
                if isinstance(t, Func) and t.name in so:
                    return Func(so[t.name], t.args)
                return None

            node = map_terms(node, fn)
            if isinstance(node, Rel) and node.name in so:
                node = Rel(so[node.name], node.args)
            return node
        if isinstance(node, (Exists, Forall)):
            nv = fresh(node.var.lstrip("_").rstrip("0123456789") or "v")
            return type(node)(nv, go(node.body, {**fo, node.var: nv}, so))
        if isinstance(node, GQ):
            new = {v: fresh(v.lstrip("_").rstrip("0123456789") or "v") for v in node.vars}
            return GQ(node.quantifier, tuple(new[v] for v in node.vars), go(node.body, {**fo, **new}, so))
        if isinstance(node, (ExistsFunc, ExistsRel)) and second_order:
            stem = node.name.lstrip("_").rstrip("0123456789") or ("R" if isinstance(node, ExistsRel) else "f")
            nn = fresh(stem)
            return type(node)(nn, node.arity, go(node.body, fo, {**so, node.name: nn}))
        return map_children(node, lambda c: go(c, fo, so))

    return go(phi, {}, {})


def polarity_occurrences(phi: Formula, name: str) -> tuple[int, int]:
    """Count positive and negative occurrences of relation ``name`` (free occurrences only)."""
    pos = neg = 0

    def go(node):
        nonlocal pos, neg
        if isinstance(node, ExistsRel) and node.name == name:
            return
        if isinstance(node, Neg):
            if isinstance(node.atom, Rel) and node.atom.name == name:
                neg += 1
            return
        if isinstance(node, Rel) and node.name == name:
            pos += 1
            return
        for c in children(node):
            go(c)

    go(phi)
    return pos, neg


def only_negative(phi: Formula, name: str) -> bool:
    return polarity_occurrences(phi, name)[0] == 0


__all__ = [
    "FreshNames", "all_names", "all_terms", "atom_terms", "check_dialect", "check_signature",
    "children", "depth", "dialect_of", "free_symbols", "free_variables", "has_independence",
    "has_second_order", "has_team_atoms", "is_quantifier_free", "is_relation_name", "is_sentence",
    "map_children", "map_terms", "only_negative", "polarity_occurrences", "quantifier_names",
    "rename_bound_apart", "rename_function", "rename_relation", "replace_subformulas",
    "replace_term", "size", "substitute", "substitute_relation", "symbols", "walk",
]
