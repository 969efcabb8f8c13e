"""Immutable syntax trees for terms and formulas.

One node family covers team logics (dependence, independence, FO(Q)) and
ESO(Q); the dialect checks in :mod:`teamlogic.syntax.ops` decide which nodes a
given logic admits. Negation is only representable on atoms, so every tree is
in negation normal form by construction.

Naming convention (used by the parser as well): variables and function
symbols start with a lower-case letter, relation symbols with an upper-case
letter. Names starting with ``_`` are reserved for symbols generated by the
transformations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union


# ---------------------------------------------------------------- terms


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Func:
    name: str
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def __str__(self):
        return f"{self.name}({','.join(map(str, self.args))})"


Term = Union[Var, Func]


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    out: set[str] = set()
    for a in t.args:
        out |= term_vars(a)
    return out


def subterms(t: Term) -> Iterator[Term]:
    """Pre-order traversal: the term itself first, then its arguments."""
    yield t
    if isinstance(t, Func):
        for a in t.args:
            yield from subterms(a)


def is_reserved(name: str) -> bool:
    return name.startswith("_")


def is_relation_name(name: str) -> bool:
    return name.lstrip("_")[:1].isupper()


# ------------------------------------------------------------- formulas


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()

    def __str__(self):
        from .printer import to_text

        return to_text(self)

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


TOP = Top()
BOT = Bot()


@dataclass(frozen=True)
class Rel(Formula):
    name: str
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Dep(Formula):
    """dep(t1,...,tn): tn is functionally determined by t1..t(n-1)."""

    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("dependence atom needs at least one term")

    @property
    def determining(self):
        return self.terms[:-1]

    @property
    def determined(self):
        return self.terms[-1]


@dataclass(frozen=True)
class Indep(Formula):
    """left ⊥_cond right."""

    left: tuple
    cond: tuple
    right: tuple

    def __post_init__(self):
        for f in ("left", "cond", "right"):
            object.__setattr__(self, f, tuple(getattr(self, f)))


ATOMS = (Top, Bot, Rel, Eq, Dep, Indep)
NEGATABLE = (Rel, Eq, Dep)


@dataclass(frozen=True)
class Neg(Formula):
    atom: Formula

    def __post_init__(self):
        if not isinstance(self.atom, NEGATABLE):
            raise TypeError(
                f"negation only applies to relation, equality and dependence atoms, "
                f"not {type(self.atom).__name__}"
            )


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class GQ(Formula):
    """Generalized quantifier ``[q x1 ... xk] body`` binding a k-tuple at once."""

    quantifier: str
    vars: tuple
    body: Formula

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not self.vars:
            raise ValueError("generalized quantifier must bind at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"bound variables of [{self.quantifier}] must be distinct")


@dataclass(frozen=True)
class ExistsFunc(Formula):
    name: str
    arity: int
    body: Formula


@dataclass(frozen=True)
class ExistsRel(Formula):
    name: str
    arity: int
    body: Formula


LITERALS = (Top, Bot, Rel, Eq, Neg)
BINARY = (And, Or)
FO_BINDERS = (Exists, Forall, GQ)
SO_BINDERS = (ExistsFunc, ExistsRel)


def is_literal(phi: Formula) -> bool:
    """First-order literal: ⊤, ⊥, a relation/equality atom or its negation."""
    if isinstance(phi, Neg):
        return not isinstance(phi.atom, Dep)
    return isinstance(phi, (Top, Bot, Rel, Eq))


def neq(a: Term, b: Term) -> Neg:
    return Neg(Eq(a, b))


def conj(*parts: Formula) -> Formula:
    """Right-nested conjunction; the empty conjunction is ⊤."""
    parts = [p for p in parts if not isinstance(p, Top)]
    if not parts:
        return TOP
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def disj(*parts: Formula) -> Formula:
    """Right-nested disjunction; the empty disjunction is ⊥."""
    parts = [p for p in parts if not isinstance(p, Bot)]
    if not parts:
        return BOT
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def forall_many(names, body: Formula) -> Formula:
    for v in reversed(list(names)):
        body = Forall(v, body)
    return body


def exists_many(names, body: Formula) -> Formula:
    for v in reversed(list(names)):
        body = Exists(v, body)
    return body


def tuple_neq(left, right) -> Formula:
    """Disjunction of component disequalities (false for empty tuples)."""
    return disj(*(neq(a, b) for a, b in zip(left, right)))


def tuple_eq(left, right) -> Formula:
    return conj(*(Eq(a, b) for a, b in zip(left, right)))


def variables(*names: str) -> tuple[Var, ...]:
    return tuple(Var(n) for n in names)


@dataclass(frozen=True)
class Signature:
    """Relation and function symbols with arities (0-ary functions are constants)."""

    relations: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "relations", dict(self.relations))
        object.__setattr__(self, "functions", dict(self.functions))
        clash = set(self.relations) & set(self.functions)
        if clash:
            raise ValueError(f"symbols used both as relation and function: {sorted(clash)}")
        for name, ar in {**self.relations, **self.functions}.items():
            if ar < 0:
                raise ValueError(f"negative arity for {name}")

    def __hash__(self):
        return hash((tuple(sorted(self.relations.items())), tuple(sorted(self.functions.items()))))

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """``"P/1,E/2,f/1,c/0"``; upper-case initials are relations."""
        rels, funs = {}, {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            name, _, ar = item.partition("/")
            if not ar:
                raise ValueError(f"missing arity in signature item {item!r}")
            (rels if is_relation_name(name) else funs)[name] = int(ar)
        return cls(rels, funs)

    def arity(self, name: str):
        if name in self.relations:
            return self.relations[name]
        return self.functions.get(name)

    def __contains__(self, name):
        return name in self.relations or name in self.functions

    def union(self, other: "Signature") -> "Signature":
        return Signature({**self.relations, **other.relations}, {**self.functions, **other.functions})

    def __str__(self):
        items = [f"{n}/{a}" for n, a in sorted(self.relations.items())]
        items += [f"{n}/{a}" for n, a in sorted(self.functions.items())]
        return ",".join(items)


@dataclass(frozen=True)
class NormalFormSentence:
    """``∃f1…∃fn Q'1 x̄1 … Q'm x̄m ψ`` with each Q' either ∀ or a named quantifier.

    ``functions`` is a tuple of ``(name, arity)``; ``prefix`` is a tuple of
    ``(kind, vars)`` with kind ``"forall"`` (one variable) or a quantifier name.
    """

    functions: tuple
    prefix: tuple
    matrix: Formula

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(tuple(f) for f in self.functions))
        object.__setattr__(self, "prefix", tuple((k, tuple(v)) for k, v in self.prefix))
        from .ops import is_quantifier_free

        if not is_quantifier_free(self.matrix):
            raise ValueError("normal-form matrix must be quantifier-free")
        for kind, vs in self.prefix:
            if kind == "forall" and len(vs) != 1:
                raise ValueError("a ∀ prefix entry binds exactly one variable")

    def quantified_body(self) -> Formula:
        body = self.matrix
        for kind, vs in reversed(self.prefix):
            body = Forall(vs[0], body) if kind == "forall" else GQ(kind, vs, body)
        return body

    def to_formula(self) -> Formula:
        body = self.quantified_body()
        for name, ar in reversed(self.functions):
            body = ExistsFunc(name, ar, body)
        return body

    def prefix_vars(self) -> list[str]:
        return [v for _, vs in self.prefix for v in vs]

    def universal_vars(self) -> set[str]:
        return {vs[0] for kind, vs in self.prefix if kind == "forall"}

    def __str__(self):
        from .printer import to_text

        return to_text(self.to_formula())
