"""Finite structures, assignments and teams.

Universe elements are the integers ``0..n-1``. A :class:`Team` stores its
variable domain as an ordered tuple and its assignments as a frozenset of
value rows aligned with that tuple, so equality and hashing are structural.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import CapExceeded, EvaluationError, SignatureError
from .syntax.ast import Signature, Term, Var

Assignment = Mapping[str, int]

DEFAULT_ENUM_CAP = 10**6


@dataclass(frozen=True, eq=False)
class Structure:
    size: int
    signature: Signature = field(default_factory=Signature)
    relations: Mapping[str, frozenset] = field(default_factory=dict)
    functions: Mapping[str, Mapping[tuple, int]] = field(default_factory=dict)
    labels: tuple | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("universe must be nonempty")
        rels = {k: frozenset(tuple(t) for t in v) for k, v in self.relations.items()}
        funs = {k: dict(v) for k, v in self.functions.items()}
        for name, ar in self.signature.relations.items():
            rels.setdefault(name, frozenset())
            for t in rels[name]:
                if len(t) != ar or any(not 0 <= a < self.size for a in t):
                    raise ValueError(f"bad tuple {t} in relation {name}/{ar}")
        for name, ar in self.signature.functions.items():
            table = funs.get(name)
            if table is None:
                raise ValueError(f"no table for function {name}/{ar}")
            for args in itertools.product(range(self.size), repeat=ar):
                if args not in table:
                    raise ValueError(f"function {name} undefined on {args}")
                if not 0 <= table[args] < self.size:
                    raise ValueError(f"function {name} leaves the universe at {args}")
        extra = (set(rels) - set(self.signature.relations)) | (set(funs) - set(self.signature.functions))
        if extra:
            raise ValueError(f"tables for undeclared symbols: {sorted(extra)}")
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "functions", funs)

    @property
    def universe(self) -> range:
        return range(self.size)

    def key(self):
        return (
            self.size,
            tuple(sorted((k, tuple(sorted(v))) for k, v in self.relations.items())),
            tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.functions.items())),
        )

    def __eq__(self, other):
        return isinstance(other, Structure) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def expand(self, relations=None, functions=None) -> "Structure":
        """Add interpretations for new symbols (arities read from the tables)."""
        relations = relations or {}
        functions = functions or {}
        rel_ar = {}
        for name, rel in relations.items():
            rel = frozenset(tuple(t) for t in rel)
            lens = {len(t) for t in rel}
            if len(lens) > 1:
                raise ValueError(f"mixed arities in relation {name}")
            rel_ar[name] = lens.pop() if lens else self.signature.relations.get(name, 0)
        fun_ar = {n: len(next(iter(tab))) if tab else 0 for n, tab in functions.items()}
        sig = self.signature.union(Signature(rel_ar, fun_ar))
        return Structure(
            self.size, sig, {**self.relations, **relations}, {**self.functions, **functions}, self.labels
        )

    def __repr__(self):
        return f"Structure(size={self.size}, {format_structure(self).strip()!r})"


@dataclass(frozen=True)
class Team:
    vars: tuple
    rows: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "rows", frozenset(tuple(r) for r in self.rows))
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("team domain has repeated variables")
        for r in self.rows:
            if len(r) != len(self.vars):
                raise ValueError(f"row {r} does not match domain {self.vars}")

    @classmethod
    def unit(cls) -> "Team":
        """The team {ε} containing only the empty assignment."""
        return cls((), frozenset({()}))

    @classmethod
    def empty(cls, vars=()) -> "Team":
        return cls(tuple(vars), frozenset())

    @classmethod
    def from_assignments(cls, vars, assignments: Iterable[Assignment]) -> "Team":
        vars = tuple(vars)
        rows = set()
        for s in assignments:
            if set(s) != set(vars):
                raise ValueError(f"assignment {dict(s)} has domain other than {vars}")
            rows.add(tuple(s[v] for v in vars))
        return cls(vars, frozenset(rows))

    def __len__(self):
        return len(self.rows)

    def __bool__(self):
        return True

    def sorted_rows(self) -> list:
        return sorted(self.rows)

    def assignments(self) -> list[dict]:
        return [dict(zip(self.vars, r)) for r in self.sorted_rows()]

    def __iter__(self) -> Iterator[dict]:
        return iter(self.assignments())

    @property
    def is_empty(self) -> bool:
        return not self.rows

    def domain(self) -> frozenset:
        return frozenset(self.vars)

    def subteam(self, rows) -> "Team":
        return Team(self.vars, frozenset(rows))

    def issubset(self, other: "Team") -> bool:
        return self.vars == other.vars and self.rows <= other.rows

    def __str__(self):
        return format_team(self).strip()


# ------------------------------------------------------------------ terms


def term_value(M: Structure, s: Assignment, t: Term) -> int:
    if isinstance(t, Var):
        try:
            return s[t.name]
        except KeyError:
            raise EvaluationError(f"unbound variable {t.name}") from None
    try:
        table = M.functions[t.name]
    except KeyError:
        raise EvaluationError(f"uninterpreted function symbol {t.name}") from None
    return table[tuple(term_value(M, s, a) for a in t.args)]


# ------------------------------------------------------- team operations


def _extended_domain(vars: tuple, new: tuple) -> tuple[tuple, tuple]:
    """Domain after binding ``new`` and the position of each new variable in it."""
    out = list(vars)
    pos = []
    for v in new:
        if v in out:
            pos.append(out.index(v))
        else:
            out.append(v)
            pos.append(len(out) - 1)
    return tuple(out), tuple(pos)


def _set_row(row: tuple, width: int, positions: tuple, values: tuple) -> tuple:
    out = list(row) + [0] * (width - len(row))
    for p, a in zip(positions, values):
        out[p] = a
    return tuple(out)


def extend_universal(M: Structure, X: Team, y: str) -> Team:
    """X[M/y]."""
    dom, (p,) = _extended_domain(X.vars, (y,))
    rows = {_set_row(r, len(dom), (p,), (a,)) for r in X.rows for a in M.universe}
    return Team(dom, frozenset(rows))


def extend_function(M: Structure, X: Team, y: str, f) -> Team:
    """X[f/y]; ``f`` is a callable on assignments or a mapping keyed by rows."""
    dom, (p,) = _extended_domain(X.vars, (y,))
    rows = set()
    for r in X.rows:
        try:
            a = f[r] if isinstance(f, Mapping) else f(dict(zip(X.vars, r)))
        except KeyError:
            raise EvaluationError(f"function undefined on row {r}") from None
        if a not in M.universe:
            raise EvaluationError(f"value {a} outside the universe")
        rows.add(_set_row(r, len(dom), (p,), (a,)))
    return Team(dom, frozenset(rows))


def extend_set_function(M: Structure, X: Team, xs, F) -> Team:
    """X[F/x̄] = {s[ā/x̄] | s ∈ X, ā ∈ F(s)}."""
    xs = tuple(xs)
    dom, pos = _extended_domain(X.vars, xs)
    rows = set()
    for r in X.rows:
        try:
            chosen = F[r] if isinstance(F, Mapping) else F(dict(zip(X.vars, r)))
        except KeyError:
            raise EvaluationError(f"set function undefined on row {r}") from None
        for a in chosen:
            a = tuple(a) if isinstance(a, (tuple, list)) else (a,)
            if len(a) != len(xs):
                raise EvaluationError(f"tuple {a} has arity {len(a)}, expected {len(xs)}")
            rows.add(_set_row(r, len(dom), pos, a))
    return Team(dom, frozenset(rows))


def restrict(X: Team, V) -> Team:
    """Pointwise restriction to ``V`` (order follows ``X.vars``)."""
    V = set(V)
    if not V <= set(X.vars):
        raise EvaluationError(f"cannot restrict team over {X.vars} to {sorted(V)}")
    idx = [i for i, v in enumerate(X.vars) if v in V]
    return Team(tuple(X.vars[i] for i in idx), frozenset(tuple(r[i] for i in idx) for r in X.rows))


def reorder(X: Team, vars) -> Team:
    vars = tuple(vars)
    if set(vars) != set(X.vars):
        raise EvaluationError(f"{vars} is not a permutation of {X.vars}")
    idx = [X.vars.index(v) for v in vars]
    return Team(vars, frozenset(tuple(r[i] for i in idx) for r in X.rows))


def team_rel(X: Team) -> frozenset:
    """rel(X): the value tuples in the order of ``X.vars``."""
    return X.rows


# ----------------------------------------------------------- enumeration


def count_structures(sig: Signature, n: int) -> int:
    total = 1
    for ar in sig.relations.values():
        total *= 2 ** (n**ar)
    for ar in sig.functions.values():
        total *= n ** (n**ar)
    return total


def enumerate_structures(sig: Signature, n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Structure]:
    """Every structure over ``sig`` with universe ``0..n-1``, once each, in a fixed order."""
    if n < 1:
        raise ValueError("universe size must be at least 1")
    total = count_structures(sig, n)
    if total > cap:
        raise CapExceeded(f"structures over {sig} of size {n}", total, cap)
    rel_names = sorted(sig.relations)
    fun_names = sorted(sig.functions)
    rel_spaces = []
    for name in rel_names:
        tuples = list(itertools.product(range(n), repeat=sig.relations[name]))
        rel_spaces.append([frozenset(t for i, t in enumerate(tuples) if mask >> i & 1) for mask in range(2 ** len(tuples))])
    fun_spaces = []
    for name in fun_names:
        args = list(itertools.product(range(n), repeat=sig.functions[name]))
        fun_spaces.append([dict(zip(args, vals)) for vals in itertools.product(range(n), repeat=len(args))])
    for rels in itertools.product(*rel_spaces):
        for funs in itertools.product(*fun_spaces):
            yield Structure(n, sig, dict(zip(rel_names, rels)), dict(zip(fun_names, funs)))


def all_rows(n: int, k: int) -> list[tuple]:
    return list(itertools.product(range(n), repeat=k))


def count_teams(n: int, k: int) -> int:
    return 2 ** (n**k)


def enumerate_teams(M, V, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Team]:
    """All subsets of the full team over ``V`` (including ∅), ordered by bitmask."""
    n = M.size if isinstance(M, Structure) else int(M)
    V = tuple(V)
    rows = all_rows(n, len(V))
    total = 2 ** len(rows)
    if total > cap:
        raise CapExceeded(f"teams over {V} at size {n}", total, cap)
    for mask in range(total):
        yield Team(V, frozenset(r for i, r in enumerate(rows) if mask >> i & 1))


def subteams(X: Team) -> Iterator[Team]:
    rows = X.sorted_rows()
    for mask in range(2 ** len(rows)):
        yield Team(X.vars, frozenset(r for i, r in enumerate(rows) if mask >> i & 1))


# ---------------------------------------------------------- file formats

_REL_LINE = re.compile(r"^rel\s+(\S+)\s*/\s*(\d+)\s*=\s*\{(.*)\}\s*$")
_FUN_LINE = re.compile(r"^fun\s+(\S+)\s*/\s*(\d+)\s*=\s*\{(.*)\}\s*$")
_TUPLE = re.compile(r"\(([^()]*)\)|([^\s,(){}]+)")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_tuples(body: str, arity: int, elem) -> list[tuple]:
    out = []
    for m in _TUPLE.finditer(body):
        if m.group(1) is not None:
            parts = [p.strip() for p in m.group(1).split(",") if p.strip()]
        else:
            parts = [m.group(2)]
        t = tuple(elem(p) for p in parts)
        if len(t) != arity:
            raise ValueError(f"tuple {t} has arity {len(t)}, expected {arity}")
        out.append(t)
    return out


def parse_structure(text: str) -> Structure:
    """Parse the line-oriented structure format (see README)."""
    labels = None
    n = None
    rels, funs, rel_ar, fun_ar = {}, {}, {}, {}

    def elem(tok):
        if labels is not None and tok in labels:
            return labels.index(tok)
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"unknown element {tok!r}") from None
        if not 0 <= v < n:
            raise ValueError(f"element {v} outside universe of size {n}")
        return v

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        try:
            if line.startswith("universe"):
                parts = line.split()[1:]
                if len(parts) == 1 and parts[0].isdigit():
                    n = int(parts[0])
                else:
                    labels = tuple(parts)
                    n = len(labels)
                continue
            if n is None:
                raise ValueError("'universe' line must come first")
            if m := _REL_LINE.match(line):
                name, ar = m.group(1), int(m.group(2))
                rel_ar[name] = ar
                body = m.group(3).strip()
                if ar == 0:
                    rels[name] = {()} if body in ("()", "true") else set()
                else:
                    rels[name] = set(_parse_tuples(body, ar, elem))
                continue
            if m := _FUN_LINE.match(line):
                name, ar = m.group(1), int(m.group(2))
                fun_ar[name] = ar
                table = {}
                for entry in filter(None, (e.strip() for e in _split_entries(m.group(3)))):
                    lhs, _, rhs = entry.partition("->")
                    lhs = lhs.strip()
                    if lhs.startswith("("):
                        args = tuple(elem(p.strip()) for p in lhs[1:-1].split(",") if p.strip())
                    else:
                        args = (elem(lhs),)
                    if len(args) != ar:
                        raise ValueError(f"argument tuple {args} has wrong arity for {name}/{ar}")
                    table[args] = elem(rhs.strip())
                funs[name] = table
                continue
            raise ValueError(f"unrecognised line {line!r}")
        except ValueError as e:
            raise SignatureError(f"structure file line {lineno}: {e}") from None
    if n is None:
        raise SignatureError("structure file has no 'universe' line")
    try:
        return Structure(n, Signature(rel_ar, fun_ar), rels, funs, labels)
    except ValueError as e:
        raise SignatureError(str(e)) from None


def _split_entries(body: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def _fmt_tuple(t: tuple) -> str:
    return str(t[0]) if len(t) == 1 else "(" + ",".join(map(str, t)) + ")"


def format_structure(M: Structure) -> str:
    lines = [f"universe {M.size}"]
    for name in sorted(M.relations):
        ar = M.signature.relations[name]
        body = ", ".join(_fmt_tuple(t) for t in sorted(M.relations[name])) if ar else ("()" if M.relations[name] else "")
        lines.append(f"rel {name}/{ar} = {{{body}}}")
    for name in sorted(M.functions):
        ar = M.signature.functions[name]
        entries = []
        for args, v in sorted(M.functions[name].items()):
            lhs = "()" if ar == 0 else _fmt_tuple(args)
            entries.append(f"{lhs}->{v}")
        lines.append(f"fun {name}/{ar} = {{{', '.join(entries)}}}")
    return "\n".join(lines) + "\n"


def load_structure(path) -> Structure:
    with open(path) as fh:
        return parse_structure(fh.read())


def parse_team(text: str, n: int | None = None) -> Team:
    """Team file: ``vars x y`` header, then one row of values per line.

    A header with no names followed by a line ``eps`` is {ε}; a header alone is ∅.
    """
    lines = [_strip_comment(l) for l in text.splitlines()]
    lines = [l for l in lines if l]
    if not lines or not lines[0].split()[0] == "vars":
        raise SignatureError("team file must start with a 'vars' line")
    vars = tuple(lines[0].split()[1:])
    rows = set()
    for line in lines[1:]:
        if line == "eps":
            if vars:
                raise SignatureError("'eps' row only allowed for the empty domain")
            rows.add(())
            continue
        vals = tuple(int(v) for v in line.split())
        if len(vals) != len(vars):
            raise SignatureError(f"row {line!r} does not match vars {vars}")
        if n is not None and any(not 0 <= v < n for v in vals):
            raise SignatureError(f"row {line!r} outside universe of size {n}")
        rows.add(vals)
    return Team(vars, frozenset(rows))


def format_team(X: Team) -> str:
    lines = ["vars" + "".join(" " + v for v in X.vars)]
    for r in X.sorted_rows():
        lines.append(" ".join(map(str, r)) if X.vars else "eps")
    return "\n".join(lines) + "\n"


def load_team(path, n: int | None = None) -> Team:
    with open(path) as fh:
        return parse_team(fh.read(), n)
