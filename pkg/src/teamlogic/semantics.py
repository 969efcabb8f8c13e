"""Exact model checking.

* :func:`eval_team`: team semantics for D(Q) and I(Q) (and FO(Q) read in teams).
* :func:`eval_fo`: Tarskian single-assignment semantics for FO(Q).
* :func:`eval_eso`: ESO(Q) with exhaustive second-order witness search.

Every search is exhaustive; exceeding a cap raises :class:`CapExceeded`
instead of approximating.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from operator import itemgetter
from typing import Mapping

from .errors import CapExceeded, DialectError, EvaluationError, NonMonotoneError
from .model import Structure, Team, _extended_domain, _set_row
from .quantifiers import Registry, default_registry
from .syntax.ast import (
    And, Bot, Dep, Eq, Exists, ExistsFunc, ExistsRel, Forall, Formula, GQ, Indep,
    Neg, Or, Rel, Top, Var,
)
from .syntax.ops import (
    free_symbols, free_variables, has_independence, has_second_order, has_team_atoms,
    quantifier_names, walk,
)

_DEFAULT_REGISTRY = default_registry()


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation modes and caps.

    or_mode: ``"paper"`` (covers X = Y ∪ Z, overlap allowed) or ``"strict"`` (disjoint).
    exists_mode: ``"paper"`` (a function X → M) or ``"lax"`` (nonempty sets of values).
    gq_search: ``"full"`` (F ranges over Q_M) or ``"minimal"`` (over minimal members; D(Q) only).
    eso_search: ``"lazy"`` (table entries chosen on first use) or ``"full"`` (whole tables).
    prune: backtrack row by row and cut on failing partial teams. Only applied to
        subformulas without independence atoms, where it is exact by downward closure.
    """

    or_mode: str = "paper"
    exists_mode: str = "paper"
    gq_search: str = "full"
    eso_search: str = "lazy"
    prune: bool = True
    memo: bool = True
    unsafe: bool = False
    max_universe: int = 4
    max_team: int = 16
    max_candidates: int = 10**8
    registry: Registry | None = field(default=None, compare=False)

    def __post_init__(self):
        checks = {
            "or_mode": ("paper", "strict"),
            "exists_mode": ("paper", "lax"),
            "gq_search": ("full", "minimal"),
            "eso_search": ("lazy", "full"),
        }
        for name, allowed in checks.items():
            if getattr(self, name) not in allowed:
                raise ValueError(f"{name} must be one of {allowed}")

    @property
    def quantifiers(self) -> Registry:
        return self.registry if self.registry is not None else _DEFAULT_REGISTRY

    def but(self, **changes) -> "EvalConfig":
        return replace(self, **changes)


PAPER = EvalConfig()
BRUTE = EvalConfig(prune=False)


# ---------------------------------------------------------- compiled terms


def _compile_term(M: Structure, t, index: Mapping[str, int]):
    if isinstance(t, Var):
        try:
            return itemgetter(index[t.name])
        except KeyError:
            raise EvaluationError(f"unbound variable {t.name}") from None
    try:
        table = M.functions[t.name]
    except KeyError:
        raise EvaluationError(f"uninterpreted function symbol {t.name}") from None
    fns = [_compile_term(M, a, index) for a in t.args]
    if not fns:
        c = table[()]
        return lambda row: c
    if len(fns) == 1:
        f0 = fns[0]
        return lambda row: table[(f0(row),)]
    return lambda row: table[tuple(f(row) for f in fns)]


def _compile_tuple(M, ts, index):
    fns = [_compile_term(M, t, index) for t in ts]
    return lambda row: tuple(f(row) for f in fns)


def _compile_literal(M: Structure, phi: Formula, index):
    if isinstance(phi, Top):
        return lambda row: True
    if isinstance(phi, Bot):
        return lambda row: False
    if isinstance(phi, Rel):
        try:
            rel = M.relations[phi.name]
        except KeyError:
            raise EvaluationError(f"uninterpreted relation symbol {phi.name}") from None
        args = _compile_tuple(M, phi.args, index)
        return lambda row: args(row) in rel
    if isinstance(phi, Eq):
        a, b = _compile_term(M, phi.left, index), _compile_term(M, phi.right, index)
        return lambda row: a(row) == b(row)
    if isinstance(phi, Neg):
        inner = _compile_literal(M, phi.atom, index)
        return lambda row: not inner(row)
    raise TypeError(phi)


# ------------------------------------------------------------ team checker


class TeamChecker:
    """Team-semantics evaluator bound to one structure and configuration.

    Results are memoized on (subformula identity, team); the checker keeps the
    root formulas alive so identities stay valid.
    """

    def __init__(self, M: Structure, cfg: EvalConfig = PAPER):
        if M.size > cfg.max_universe:
            raise CapExceeded("universe size", M.size, cfg.max_universe)
        self.M = M
        self.cfg = cfg
        self.reg = cfg.quantifiers
        self.memo: dict = {}
        self.nodes = 0
        self._roots: list = []
        self._dc: dict = {}
        self._compiled: dict = {}
        self._options: dict = {}
        self._validated: set = set()
        self._prepared: dict = {}

    # -- preparation
    def _prepare(self, phi: Formula):
        self._roots.append(phi)
        n = self.M.size
        for name in quantifier_names(phi):
            if name in self._validated:
                continue
            try:
                Q = self.reg[name]
            except KeyError:
                raise EvaluationError(f"unknown quantifier {name!r}") from None
            if not Q.is_monotone_on(n) and not self.cfg.unsafe:
                raise NonMonotoneError(
                    f"quantifier {name} is not monotone at size {n}; pass unsafe=True to evaluate anyway"
                )
            self._validated.add(name)
        for node in walk(phi):
            if isinstance(node, GQ) and self.reg[node.quantifier].arity != len(node.vars):
                raise EvaluationError(f"[{node.quantifier}] binds {len(node.vars)} variables, arity is {self.reg[node.quantifier].arity}")
            if isinstance(node, (ExistsFunc, ExistsRel)):
                raise DialectError("second-order quantifiers have no team semantics here; use eval_eso")
        if self.cfg.gq_search == "minimal" and has_independence(phi):
            raise DialectError("minimal-witness search is only sound for formulas without independence atoms")

    def is_dc(self, phi: Formula) -> bool:
        key = id(phi)
        r = self._dc.get(key)
        if r is None:
            r = not has_independence(phi)
            if r and self.cfg.unsafe:
                n = self.M.size
                r = all(self.reg[q].is_monotone_on(n) for q in quantifier_names(phi))
            self._dc[key] = r
        return r

    def evaluate(self, X: Team, phi: Formula) -> bool:
        fv = self._prepared.get(id(phi))
        if fv is None:
            self._prepare(phi)
            fv = self._prepared[id(phi)] = free_variables(phi)
        if not fv <= set(X.vars):
            raise EvaluationError(f"free variables {sorted(fv - set(X.vars))} not in the team domain {X.vars}")
        return self.check(X.vars, X.rows, phi)

    # -- dispatch
    def check(self, vars: tuple, rows: frozenset, phi: Formula) -> bool:
        if len(rows) > self.cfg.max_team:
            raise CapExceeded("team size", len(rows), self.cfg.max_team)
        if self.cfg.memo:
            key = (id(phi), vars, rows)
            r = self.memo.get(key)
            if r is None:
                r = self._check(vars, rows, phi)
                self.memo[key] = r
            return r
        return self._check(vars, rows, phi)

    def _index(self, vars):
        return {v: i for i, v in enumerate(vars)}

    def _literal(self, vars, phi):
        key = (id(phi), vars)
        fn = self._compiled.get(key)
        if fn is None:
            fn = _compile_literal(self.M, phi, self._index(vars))
            self._compiled[key] = fn
        return fn

    def _check(self, vars, rows, phi) -> bool:
        self.nodes += 1
        if isinstance(phi, Neg) and isinstance(phi.atom, Dep):
            return not rows
        if isinstance(phi, (Top, Bot, Rel, Eq, Neg)):
            pred = self._literal(vars, phi)
            return all(pred(r) for r in rows)
        if isinstance(phi, Dep):
            return self._dep(vars, rows, phi)
        if isinstance(phi, Indep):
            return self._indep(vars, rows, phi)
        if isinstance(phi, And):
            return self.check(vars, rows, phi.left) and self.check(vars, rows, phi.right)
        if isinstance(phi, Or):
            return self._or(vars, rows, phi)
        if isinstance(phi, Forall):
            new_vars, (p,) = _extended_domain(vars, (phi.var,))
            w = len(new_vars)
            new_rows = frozenset(_set_row(r, w, (p,), (a,)) for r in rows for a in range(self.M.size))
            return self.check(new_vars, new_rows, phi.body)
        if isinstance(phi, Exists):
            return self._exists(vars, rows, phi)
        if isinstance(phi, GQ):
            return self._gq(vars, rows, phi)
        raise DialectError(f"no team semantics for {type(phi).__name__}")

    # -- atoms
    def _dep(self, vars, rows, phi):
        key = (id(phi), vars)
        fns = self._compiled.get(key)
        if fns is None:
            idx = self._index(vars)
            fns = (_compile_tuple(self.M, phi.determining, idx), _compile_term(self.M, phi.determined, idx))
            self._compiled[key] = fns
        det, val = fns
        seen = {}
        for r in rows:
            if seen.setdefault(det(r), val(r)) != val(r):
                return False
        return True

    def _indep(self, vars, rows, phi):
        key = (id(phi), vars)
        fns = self._compiled.get(key)
        if fns is None:
            idx = self._index(vars)
            fns = tuple(_compile_tuple(self.M, part, idx) for part in (phi.cond, phi.left, phi.right))
            self._compiled[key] = fns
        cond, left, right = fns
        triples = set()
        lefts: dict = {}
        rights: dict = {}
        for r in rows:
            c, a, b = cond(r), left(r), right(r)
            triples.add((c, a, b))
            lefts.setdefault(c, set()).add(a)
            rights.setdefault(c, set()).add(b)
        return all((c, a, b) in triples for c in lefts for a in lefts[c] for b in rights[c])

    # -- connectives
    def _or(self, vars, rows, phi):
        left, right = phi.left, phi.right
        order = sorted(rows)
        n = len(order)
        if self.cfg.prune and self.is_dc(left) and self.is_dc(right):
            # disjoint splits suffice under downward closure; cut on failing partial teams
            def rec(i, Y, Z):
                if i == n:
                    return True
                r = order[i]
                Y2 = Y | {r}
                if self.check(vars, Y2, left) and rec(i + 1, Y2, Z):
                    return True
                Z2 = Z | {r}
                return self.check(vars, Z2, right) and rec(i + 1, Y, Z2)

            return rec(0, frozenset(), frozenset())
        if self.cfg.or_mode == "strict":
            self._count(2**n, "disjoint splits")
            for mask in range(2**n):
                Y = frozenset(order[i] for i in range(n) if mask >> i & 1)
                if self.check(vars, Y, left) and self.check(vars, rows - Y, right):
                    return True
            return False
        self._count(3**n, "covers")
        for mask in sorted(range(2**n), key=lambda m: bin(m).count("1")):
            Y = frozenset(order[i] for i in range(n) if mask >> i & 1)
            if not self.check(vars, Y, left):
                continue
            rest = rows - Y
            ylist = sorted(Y)
            for sub in range(2 ** len(ylist)):
                Z = rest | frozenset(ylist[i] for i in range(len(ylist)) if sub >> i & 1)
                if self.check(vars, Z, right):
                    return True
        return False

    # -- quantifiers
    def _count(self, count, what):
        if count > self.cfg.max_candidates:
            raise CapExceeded(f"candidate {what}", count, self.cfg.max_candidates)

    def _choices(self, new_vars, vars, rows, positions, value_sets, body, what):
        """Search for one image set per row whose union satisfies ``body``.

        ``value_sets`` lists the admissible sets of value tuples for each row.
        """
        w = len(new_vars)
        order = sorted(rows)
        options = [
            [frozenset(_set_row(r, w, positions, vals) for vals in vs) for vs in value_sets]
            for r in order
        ]
        if self.cfg.prune and self.is_dc(body):
            explored = 0

            def rec(i, acc):
                nonlocal explored
                if i == len(order):
                    return True
                for img in options[i]:
                    explored += 1
                    if explored > self.cfg.max_candidates:
                        raise CapExceeded(f"explored {what}", explored, self.cfg.max_candidates)
                    nxt = acc | img
                    if self.check(new_vars, nxt, body) and rec(i + 1, nxt):
                        return True
                return False

            return rec(0, frozenset())
        self._count(math.prod(len(o) for o in options), what)
        for combo in itertools.product(*options):
            if self.check(new_vars, frozenset().union(*combo), body):
                return True
        return False

    def _exists(self, vars, rows, phi):
        new_vars, pos = _extended_domain(vars, (phi.var,))
        n = self.M.size
        if self.cfg.exists_mode == "lax" and not (self.cfg.prune and self.is_dc(phi.body)):
            value_sets = [
                [(a,) for a in combo]
                for k in range(1, n + 1)
                for combo in itertools.combinations(range(n), k)
            ]
        else:
            # strict functions; for downward-closed bodies lax collapses to strict
            value_sets = [[(a,)] for a in range(n)]
        return self._choices(new_vars, vars, rows, pos, value_sets, phi.body, "choice functions")

    def _gq(self, vars, rows, phi):
        new_vars, pos = _extended_domain(vars, phi.vars)
        key = (phi.quantifier, self.cfg.gq_search)
        value_sets = self._options.get(key)
        if value_sets is None:
            Q = self.reg[phi.quantifier]
            fam = Q.minimal_members(self.M.size) if self.cfg.gq_search == "minimal" else Q.members(self.M.size)
            value_sets = [sorted(A) for A in fam]
            self._options[key] = value_sets
        return self._choices(new_vars, vars, rows, pos, value_sets, phi.body, f"[{phi.quantifier}] set functions")


def eval_team(M: Structure, X: Team, phi: Formula, cfg: EvalConfig = PAPER) -> bool:
    """M, X ⊨ φ under team semantics."""
    return TeamChecker(M, cfg).evaluate(X, phi)


def eval_sentence(M: Structure, sigma: Formula, cfg: EvalConfig = PAPER) -> bool:
    """M ⊨ σ, i.e. M, {ε} ⊨ σ."""
    fv = free_variables(sigma)
    if fv:
        raise EvaluationError(f"not a sentence: free variables {sorted(fv)}")
    return eval_team(M, Team.unit(), sigma, cfg)


# -------------------------------------------------- FO(Q) and ESO(Q)


_UNSET = object()


class _Lazy:
    """A witness table under construction; unset entries are decided on first read."""

    __slots__ = ("name", "values", "data", "order", "tried", "conflicts")

    def __init__(self, name, values):
        self.name = name
        self.values = values
        self.data: dict = {}
        self.order: list = []  # decided entries, oldest first
        self.tried: dict = {}  # entry -> index of the current value
        self.conflicts: dict = {}  # entry -> entries its failed branches depended on

    def get(self, key):
        v = self.data.get(key, _UNSET)
        if v is _UNSET:
            v = self.data[key] = self.values[0]
            self.order.append(key)
            self.tried[key] = 0
            self.conflicts[key] = set()
        return v

    def undo(self, key):
        del self.data[key], self.tried[key], self.conflicts[key]


class FOChecker:
    """Tarskian evaluator for FO(Q) extended with ∃f / ∃R witness search."""

    def __init__(self, M: Structure, cfg: EvalConfig = PAPER, interp: Mapping | None = None):
        self.M = M
        self.cfg = cfg
        self.reg = cfg.quantifiers
        self.n = M.size
        self.nodes = 0
        self.memo: dict = {}
        self._free: dict = {}
        # (table, entry) pairs consulted so far; failure explanations for backjumping
        self.reads: list = []
        self.base = _tables(interp)
        self._code: dict = {}  # id(node) -> compiled closure
        self._keep: list = []  # compiled nodes stay alive so ids are not reused

    def holds(self, phi: Formula, s: dict, so: dict) -> bool:
        fn = self._code.get(id(phi))
        if fn is None:
            fn = self._compile(phi)
        return fn(s, so)

    def _compile(self, phi):
        hit = self._code.get(id(phi))
        if hit is not None:
            return hit
        fn = self._build(phi)
        self._code[id(phi)] = fn
        self._keep.append(phi)
        return fn

    def _term(self, t):
        name = t.name
        if type(t) is Var:
            def var(s, so):
                try:
                    return s[name]
                except KeyError:
                    raise EvaluationError(f"unbound variable {name}") from None
            return var
        argf = [self._term(a) for a in t.args]
        fixed = self.M.functions.get(name)
        reads = self.reads

        def app(s, so):
            args = tuple([f(s, so) for f in argf])
            tab = so.get(name)
            if tab is None:
                if fixed is None:
                    raise EvaluationError(f"uninterpreted function symbol {name}")
                return fixed[args]
            if type(tab) is _Lazy:
                reads.append((tab, args))
                return tab.get(args)
            return tab[args]
        return app

    def _build(self, phi):
        tp = type(phi)
        n = self.n
        if tp is Rel:
            name = phi.name
            argf = [self._term(a) for a in phi.args]
            fixed = self.M.relations.get(name)
            reads = self.reads

            def rel(s, so):
                args = tuple([f(s, so) for f in argf])
                tab = so.get(name)
                if tab is None:
                    if fixed is None:
                        raise EvaluationError(f"uninterpreted relation symbol {name}")
                    return args in fixed
                if type(tab) is _Lazy:
                    reads.append((tab, args))
                    return tab.get(args)
                return args in tab
            return rel
        if tp is Eq:
            lf, rf = self._term(phi.left), self._term(phi.right)
            return lambda s, so: lf(s, so) == rf(s, so)
        if tp is Neg:
            f = self._compile(phi.atom)
            return lambda s, so: not f(s, so)
        if tp is And:
            lf, rf = self._compile(phi.left), self._compile(phi.right)
            return lambda s, so: lf(s, so) and rf(s, so)
        if tp is Or:
            lf, rf = self._compile(phi.left), self._compile(phi.right)
            return lambda s, so: lf(s, so) or rf(s, so)
        if tp is Top:
            return lambda s, so: True
        if tp is Bot:
            return lambda s, so: False
        if tp is Exists or tp is Forall:
            v = phi.var
            body = self._compile(phi.body)
            if tp is Exists:
                return lambda s, so: any(body({**s, v: a}, so) for a in range(n))
            return lambda s, so: all(body({**s, v: a}, so) for a in range(n))
        if tp is GQ:
            Q = self.reg[phi.quantifier]
            vs = phi.vars
            body = self._compile(phi.body)
            tuples = [dict(zip(vs, tup)) for tup in itertools.product(range(n), repeat=len(vs))]
            keys = list(itertools.product(range(n), repeat=len(vs)))

            def gq(s, so):
                A = frozenset(k for k, b in zip(keys, tuples) if body({**s, **b}, so))
                return Q.oracle(n, A)

            if not Q.is_monotone_on(n):
                return gq
            full = frozenset(keys)

            def gq_monotone(s, so):
                # stop once the outcome no longer depends on the unchecked tuples
                accepted, open_ = set(), set(full)
                for k, b in zip(keys, tuples):
                    open_.discard(k)
                    if body({**s, **b}, so):
                        accepted.add(k)
                        if Q.oracle(n, frozenset(accepted)):
                            return True
                    elif not Q.oracle(n, frozenset(accepted | open_)):
                        return False
                return Q.oracle(n, frozenset(accepted))
            return gq_monotone
        if tp is ExistsFunc or tp is ExistsRel:
            return lambda s, so: self._memo_witness(phi, s, so)
        if tp is Dep or tp is Indep:
            raise DialectError("dependence/independence atoms have no single-assignment semantics")
        raise TypeError(phi)

    def _memo_witness(self, phi, s, so):
        # The outcome depends only on the free variables and on the entries of
        # free second-order symbols. Entries of enclosing witness tables that
        # were unset are decided during the search; a hit replays those reads,
        # which re-decides them with the same default values.
        info = self._free.get(id(phi))
        if info is None:
            rels, funcs = free_symbols(phi)
            info = self._free[id(phi)] = (phi, tuple(sorted(free_variables(phi))), tuple(sorted({*rels, *funcs})))
        _, fvs, names = info
        parts = []
        for name in names:
            tab = so.get(name)
            if tab is None:
                continue
            if type(tab) is _Lazy:
                parts.append(frozenset(tab.data.items()))
            elif isinstance(tab, dict):
                parts.append(frozenset(tab.items()))
            else:
                parts.append(tab)
        key = (id(phi), tuple(s[v] for v in fvs), tuple(parts))
        hit = self.memo.get(key)
        if hit is not None:
            r, payload = hit
            for name, entry in payload:
                tab = so[name]
                self.reads.append((tab, entry))
                tab.get(entry)
            return r
        mark = len(self.reads)
        r = self._witness(phi, s, so)
        seen = dict.fromkeys((t.name, k) for t, k in self.reads[mark:])
        self.memo[key] = (r, tuple(seen))
        return r

    def _witness(self, phi, s, so):
        kind = "fun" if isinstance(phi, ExistsFunc) else "rel"
        if self.cfg.eso_search == "full":
            return self._witness_full(phi, s, so, kind)
        return self._witness_lazy(phi, s, so, kind)

    def _witness_lazy(self, phi, s, so, kind):
        """Entries are fixed on first use; failures backjump to the deepest entry they read."""
        tab = _Lazy(phi.name, tuple(range(self.n)) if kind == "fun" else (False, True))
        order, tried, conflicts, data, values = tab.order, tab.tried, tab.conflicts, tab.data, tab.values
        inner = {**so, phi.name: tab}
        start = len(self.reads)
        try:
            while True:
                self._tick()
                mark = len(self.reads)
                if self.holds(phi.body, s, inner):
                    return True
                blame = {k for t, k in self.reads[mark:] if t is tab}
                self._drop_own(mark, tab)
                while True:
                    while order and order[-1] not in blame:
                        tab.undo(order.pop())
                    if not order:
                        return False
                    k = order[-1]
                    conflicts[k] |= blame - {k}
                    if tried[k] + 1 < len(values):
                        tried[k] += 1
                        data[k] = values[tried[k]]
                        break
                    blame = conflicts[k]
                    tab.undo(order.pop())
        finally:
            self._drop_own(start, tab)

    def _drop_own(self, mark, tab):
        tail = self.reads[mark:]
        if tail:
            self.reads[mark:] = [r for r in tail if r[0] is not tab]

    def _witness_full(self, phi, s, so, kind):
        args = list(itertools.product(range(self.n), repeat=phi.arity))
        space = (self.n if kind == "fun" else 2) ** len(args)
        if space > self.cfg.max_candidates:
            raise CapExceeded(f"witness tables for {phi.name}/{phi.arity}", space, self.cfg.max_candidates)
        if kind == "fun":
            for vals in itertools.product(range(self.n), repeat=len(args)):
                self._tick()
                if self.holds(phi.body, s, {**so, phi.name: dict(zip(args, vals))}):
                    return True
            return False
        for mask in range(space):
            self._tick()
            rel = frozenset(a for i, a in enumerate(args) if mask >> i & 1)
            if self.holds(phi.body, s, {**so, phi.name: rel}):
                return True
        return False

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.cfg.max_candidates:
            raise CapExceeded("explored witness nodes", self.nodes, self.cfg.max_candidates)


def eval_fo(M: Structure, s: Mapping[str, int], phi: Formula, cfg: EvalConfig = PAPER) -> bool:
    """M, s ⊨ φ for an FO(Q) formula."""
    if has_team_atoms(phi):
        raise DialectError("eval_fo takes first-order formulas; found dependence/independence atoms")
    if has_second_order(phi):
        raise DialectError("eval_fo takes first-order formulas; use eval_eso for second-order quantifiers")
    missing = free_variables(phi) - set(s)
    if missing:
        raise EvaluationError(f"unbound variables {sorted(missing)}")
    return FOChecker(M, cfg).holds(phi, dict(s), {})


def _tables(interp: Mapping | None) -> dict:
    out = {}
    for name, val in (interp or {}).items():
        if isinstance(val, Mapping):
            out[name] = dict(val)
        else:
            out[name] = frozenset(tuple(t) if isinstance(t, (tuple, list)) else (t,) for t in val)
    return out


class ESOEvaluator:
    """Repeated evaluation of one ESO(Q) formula over one structure.

    Witness searches are memoized on the entries of the free second-order
    symbols they see, so the memo stays valid across interpretations and
    sub-searches that do not mention the changing symbols are shared.
    """

    def __init__(self, M: Structure, phi: Formula, cfg: EvalConfig = PAPER):
        if has_team_atoms(phi):
            raise DialectError("ESO(Q) formulas contain no dependence/independence atoms")
        self.M = M
        self.phi = phi
        self.checker = FOChecker(M, cfg)
        self._fv = free_variables(phi)
        self._rels, self._funs = free_symbols(phi)

    def __call__(self, interp: Mapping | None = None, assignment: Mapping[str, int] | None = None) -> bool:
        s = dict(assignment or {})
        missing = self._fv - set(s)
        if missing:
            raise EvaluationError(f"unbound variables {sorted(missing)}")
        base = _tables(interp)
        for name, ar in self._rels.items():
            if name in base:
                if any(len(t) != ar for t in base[name]):
                    raise EvaluationError(f"interpretation of {name} does not have arity {ar}")
            elif name not in self.M.relations:
                raise EvaluationError(f"uninterpreted relation symbol {name}")
        for name in self._funs:
            if name not in base and name not in self.M.functions:
                raise EvaluationError(f"uninterpreted function symbol {name}")
        checker = self.checker
        checker.nodes = 0
        del checker.reads[:]
        return checker.holds(self.phi, s, base)


def eval_eso(
    M: Structure,
    phi: Formula,
    interp: Mapping | None = None,
    cfg: EvalConfig = PAPER,
    assignment: Mapping[str, int] | None = None,
) -> bool:
    """(M, interp) ⊨ φ for an ESO(Q) formula.

    ``interp`` gives free second-order symbols: a set of tuples for a
    relation (upper-case name) or a dict from argument tuples to values for a
    function.
    """
    return ESOEvaluator(M, phi, cfg)(interp, assignment)


def flatness_check(M: Structure, X: Team, phi: Formula, cfg: EvalConfig = PAPER) -> bool:
    """Whether team truth agrees with truth at every assignment of X."""
    team = eval_team(M, X, phi, cfg)
    pointwise = all(eval_fo(M, s, phi, cfg) for s in X.assignments())
    return team == pointwise
