"""Monotone generalized quantifiers of type ⟨k⟩ given by per-size oracles.

A quantifier is a membership test ``oracle(n, A)`` where ``A`` is a frozenset
of k-tuples over ``0..n-1``. For k = 1 the tuples are 1-tuples ``(a,)``.
"""

from __future__ import annotations

import itertools
import re
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .errors import CapExceeded, NonMonotoneError, SignatureError

Subset = frozenset

# 2**16 subsets of M^k at most
DEFAULT_MEMBER_CAP = 16


def universe_tuples(n: int, k: int) -> tuple:
    return tuple(itertools.product(range(n), repeat=k))


def all_subsets(n: int, k: int, cap: int = DEFAULT_MEMBER_CAP) -> Iterator[frozenset]:
    tuples = universe_tuples(n, k)
    if len(tuples) > cap:
        raise CapExceeded(f"subsets of M^{k} at |M|={n}", 2 ** len(tuples), 2**cap)
    for mask in range(2 ** len(tuples)):
        yield frozenset(t for i, t in enumerate(tuples) if mask >> i & 1)


@dataclass(eq=False)
class Quantifier:
    name: str
    arity: int
    oracle: Callable[[int, frozenset], bool]
    minimal: Callable[[int], Iterable[frozenset]] | None = None
    description: str = ""
    _monotone: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("quantifier arity must be at least 1")
        # per-instance caches
        self.members = lru_cache(maxsize=None)(self._members)
        self.minimal_members = lru_cache(maxsize=None)(self._minimal_members)

    def __call__(self, n: int, A) -> bool:
        return bool(self.oracle(n, frozenset(A)))

    def accepts(self, n: int, A) -> bool:
        return self(n, A)

    def _members(self, n: int, cap: int = DEFAULT_MEMBER_CAP) -> tuple:
        """Q_M as a tuple of frozensets, in bitmask order."""
        return tuple(A for A in all_subsets(n, self.arity, cap) if self.oracle(n, A))

    def _minimal_members(self, n: int) -> tuple:
        """⊆-minimal elements of Q_M; requires validated monotonicity at size ``n``."""
        if not self.is_monotone_on(n):
            raise NonMonotoneError(f"{self.name} is not monotone at size {n}")
        if self.minimal is not None:
            return tuple(sorted((frozenset(A) for A in self.minimal(n)), key=lambda A: (len(A), sorted(A))))
        mem = self.members(n)
        out = [A for A in mem if not any(B < A for B in mem)]
        return tuple(sorted(out, key=lambda A: (len(A), sorted(A))))

    def is_monotone_on(self, n: int) -> bool:
        with self._lock:
            if n in self._monotone:
                return self._monotone[n]
        tuples = universe_tuples(n, self.arity)
        mem = set(self.members(n))
        ok = all(A | {t} in mem for A in mem for t in tuples if t not in A)
        with self._lock:
            self._monotone[n] = ok
        return ok

    def check_nontriviality(self, n: int) -> tuple[bool, bool]:
        """(∅ ∉ Q_M, M^k ∈ Q_M)."""
        full = frozenset(universe_tuples(n, self.arity))
        return (not self(n, frozenset()), self(n, full))

    def nontrivial_on(self, n: int) -> bool:
        return all(self.check_nontriviality(n))

    def dual(self) -> "Quantifier":
        return dual(self)

    def __repr__(self):
        return f"Quantifier({self.name}/{self.arity})"


def _full(n, k):
    return frozenset(universe_tuples(n, k))


def _singletons(n, k):
    return [frozenset({t}) for t in universe_tuples(n, k)]


def _size_subsets(n, k, m):
    tuples = universe_tuples(n, k)
    if m > len(tuples):
        return []
    return [frozenset(c) for c in itertools.combinations(tuples, m)]


def exists_q() -> Quantifier:
    return Quantifier("exists", 1, lambda n, A: len(A) > 0, lambda n: _singletons(n, 1), "A ≠ ∅")


def forall_q() -> Quantifier:
    return Quantifier("forall", 1, lambda n, A: len(A) == n, lambda n: [_full(n, 1)], "A = M")


def forall_k(k: int) -> Quantifier:
    name = "forall" if k == 1 else f"forall{k}"
    return Quantifier(name, k, lambda n, A: len(A) == n**k, lambda n: [_full(n, k)], f"A = M^{k}")


def atleast(m: int, k: int = 1) -> Quantifier:
    name = f"atleast{m}" if k == 1 else f"atleast{m}_{k}"
    return Quantifier(name, k, lambda n, A: len(A) >= m, lambda n: _size_subsets(n, k, m), f"|A| ≥ {m}")


def most() -> Quantifier:
    return Quantifier("most", 1, lambda n, A: 2 * len(A) > n, lambda n: _size_subsets(n, 1, n // 2 + 1), "|A| > |M|/2")


def q1() -> Quantifier:
    """|M| finite and ∅ ≠ A ⊆ M; on finite universes this is ∃."""
    return Quantifier("Q1", 1, lambda n, A: len(A) > 0, lambda n: _singletons(n, 1), "∅ ≠ A ⊆ M")


@dataclass(frozen=True)
class SizeSet:
    """A set of universe sizes: finitely many listed sizes, or the complement of such a list."""

    sizes: frozenset
    complement: bool = False

    def __contains__(self, n: int) -> bool:
        return (n in self.sizes) != self.complement

    def label(self) -> str:
        body = "_".join(map(str, sorted(self.sizes))) or "none"
        return ("co_" if self.complement else "") + body


def qs(S: Iterable[int] | SizeSet, complement: bool = False) -> Quantifier:
    """Q_S: A = M when |M| ∈ S, A ≠ ∅ when |M| ∉ S."""
    if not isinstance(S, SizeSet):
        S = SizeSet(frozenset(S), complement)

    def oracle(n, A):
        return len(A) == n if n in S else len(A) > 0

    def minimal(n):
        return [_full(n, 1)] if n in S else _singletons(n, 1)

    return Quantifier(f"QS_{S.label()}", 1, oracle, minimal, f"Q_S with S = {S}")


def always_false(k: int = 1) -> Quantifier:
    return Quantifier("none" if k == 1 else f"none{k}", k, lambda n, A: False, lambda n: [], "accepts nothing")


def extensional(name: str, k: int, table: dict) -> Quantifier:
    """Quantifier given by explicit accepted subsets per universe size."""
    table = {n: frozenset(frozenset(tuple(t) for t in A) for A in sets) for n, sets in table.items()}

    def oracle(n, A):
        if n not in table:
            raise SignatureError(f"extensional quantifier {name} has no table for size {n}")
        return A in table[n]

    return Quantifier(name, k, oracle, None, "extensional")


def dual(Q: Quantifier) -> Quantifier:
    """Q^d accepts A iff Q rejects the complement of A."""
    k = Q.arity

    def oracle(n, A):
        return not Q.oracle(n, _full(n, k) - A)

    name = Q.name[:-2] if Q.name.endswith("^d") else Q.name + "^d"
    return Quantifier(name, k, oracle, None, f"dual of {Q.name}")


def generalized_exists_encoding() -> tuple[Quantifier, Quantifier]:
    return exists_q(), forall_q()


# ----------------------------------------------------------------- registry

_PARAM = re.compile(r"^(atleast)(\d+)(?:_(\d+))?$|^(forall)(\d+)$|^(QS)_(co_)?((?:\d+_?)*|none)$")


class Registry(dict):
    """Name → :class:`Quantifier`. Parametric names (``atleast3``, ``forall2``,
    ``QS_2_5``, ``QS_co_1``) and ``^d`` suffixes are resolved on demand."""

    def __missing__(self, name: str) -> Quantifier:
        q = _resolve(name, self)
        if q is None:
            raise KeyError(name)
        self[name] = q
        return q

    def __contains__(self, name) -> bool:
        try:
            self[name]
        except KeyError:
            return False
        return True

    def get(self, name, default=None):
        try:
            return self[name]
        except KeyError:
            return default

    def add(self, q: Quantifier) -> Quantifier:
        self[q.name] = q
        return q


def _resolve(name: str, reg: Registry):
    if name.endswith("^d"):
        return dual(reg[name[:-2]])
    m = _PARAM.match(name)
    if not m:
        return None
    if m.group(1):
        return atleast(int(m.group(2)), int(m.group(3) or 1))
    if m.group(4):
        return forall_k(int(m.group(5)))
    sizes = m.group(8)
    S = frozenset() if sizes in ("none", "") else frozenset(int(s) for s in sizes.split("_") if s)
    return qs(S, bool(m.group(7)))


def default_registry() -> Registry:
    reg = Registry()
    for q in (exists_q(), forall_q(), most(), q1(), atleast(2)):
        reg.add(q)
    return reg


BUILTIN_NAMES = ("exists", "forall", "forall2", "atleast1", "atleast2", "atleast3", "most", "Q1", "QS_2", "QS_co_2")


# ------------------------------------------------------------- file format

_QUANT_HEAD = re.compile(r"^quant\s+(\S+)\s*/\s*(\d+)\s*$")
_QUANT_SIZE = re.compile(r"^on\s+(\d+)\s*=\s*\{(.*)\}\s*$")


def _parse_family(body: str, k: int, n: int) -> list[frozenset]:
    """``{0},{1},{0,1}`` or ``{(0,0),(0,1)},{}`` → list of subsets."""
    out = []
    for m in re.finditer(r"\{([^{}]*)\}", body):
        inner = m.group(1).strip()
        elems = []
        for t in re.finditer(r"\(([^()]*)\)|([^\s,()]+)", inner):
            if t.group(1) is not None:
                tup = tuple(int(p) for p in t.group(1).split(",") if p.strip())
            else:
                tup = (int(t.group(2)),)
            if len(tup) != k or any(not 0 <= a < n for a in tup):
                raise SignatureError(f"tuple {tup} invalid for arity {k} at size {n}")
            elems.append(tup)
        out.append(frozenset(elems))
    return out


def parse_quantifiers(text: str) -> list[Quantifier]:
    """Parse one or more extensional quantifiers (``quant name/k`` + ``on n = {...}`` blocks)."""
    quants, cur = [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _QUANT_HEAD.match(line):
            cur = (m.group(1), int(m.group(2)), {})
            quants.append(cur)
            continue
        if m := _QUANT_SIZE.match(line):
            if cur is None:
                raise SignatureError(f"line {lineno}: size block before 'quant' header")
            n = int(m.group(1))
            cur[2][n] = _parse_family(m.group(2), cur[1], n)
            continue
        raise SignatureError(f"line {lineno}: unrecognised {line!r}")
    return [extensional(name, k, table) for name, k, table in quants]


def load_quantifiers(path, registry: Registry | None = None) -> list[Quantifier]:
    with open(path) as fh:
        qs_ = parse_quantifiers(fh.read())
    if registry is not None:
        for q in qs_:
            registry.add(q)
    return qs_


def format_quantifier(Q: Quantifier, sizes: Iterable[int]) -> str:
    lines = [f"quant {Q.name}/{Q.arity}"]
    for n in sizes:
        fam = []
        for A in Q.members(n):
            items = sorted(A)
            fam.append("{" + ",".join(str(t[0]) if Q.arity == 1 else "(" + ",".join(map(str, t)) + ")" for t in items) + "}")
        lines.append(f"on {n} = {{{','.join(fam)}}}")
    return "\n".join(lines) + "\n"
