"""Property sweeps over structures, teams and formulas.

A sweep checks one named property on a declared instance space and stops at
the first counterexample (unless ``collect_all``). Every counterexample is
evaluated once more with fresh, unmemoized evaluators before it is reported.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import corpus
from .errors import TeamLogicError
from .model import (
    Structure, Team, count_structures, count_teams, enumerate_structures, enumerate_teams,
    format_structure, format_team, restrict, subteams,
)
from .quantifiers import BUILTIN_NAMES, Registry, all_subsets, dual, universe_tuples
from .semantics import PAPER, ESOEvaluator, EvalConfig, TeamChecker, eval_eso, eval_fo, eval_sentence, eval_team
from .syntax.ast import (
    BOT, TOP, And, Dep, Eq, Exists, ExistsFunc, Forall, Formula, Func, GQ, Indep, Neg,
    NormalFormSentence, Or, Rel, Signature, Var,
)
from .syntax.ops import (
    free_variables, has_independence, has_second_order, map_children, )
from .syntax.parser import parse_formula
from .syntax.printer import to_text
from .transform import (
    dq_to_eso, eso_to_dq, eso_to_dq_total, flatten_functions, is_flat, relation_negative,
    to_normal_form,
)

PROPERTIES = (
    "empty-team", "downward-closure", "locality", "flatness", "gq-faithfulness",
    "connective-lemma", "normal-form", "flattening", "main-theorem", "translation",
    "dep-from-indep", "dual", "small-trick", "minimal-witness",
)


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep.

    source: ``"exhaustive"`` (the standard depth-``depth`` space or all
    structures/teams), ``"list"`` (``formulas``) or ``"random"`` (``count``
    instances drawn with ``seed``).
    """

    property: str
    signature: Signature = field(default_factory=lambda: Signature.parse("P/1"))
    sizes: tuple = (2,)
    quantifiers: tuple = ("exists", "forall", "most")
    source: str = "exhaustive"
    depth: int = 2
    formulas: tuple = ()
    count: int = 500
    seed: int = 0
    cfg: EvalConfig = PAPER
    collect_all: bool = False
    max_rows: int = 4
    flavor: str = "d"
    quantifier: str | None = None
    dialect: str | None = None

    def __post_init__(self):
        if self.property not in PROPERTIES:
            raise ValueError(f"unknown property {self.property!r}; known: {', '.join(PROPERTIES)}")
        if self.source not in ("exhaustive", "list", "random"):
            raise ValueError("source must be exhaustive, list or random")
        if self.count < 0 or self.depth < 0 or self.max_rows < 1:
            raise ValueError("count, depth and max_rows must be positive")
        object.__setattr__(self, "sizes", tuple(self.sizes))
        object.__setattr__(self, "quantifiers", tuple(self.quantifiers))
        object.__setattr__(self, "formulas", tuple(
            parse_formula(f) if isinstance(f, str) else f for f in self.formulas
        ))


@dataclass
class SweepReport:
    property: str
    checked: int = 0
    expected: int | None = None
    verdict: str = "pass"
    counterexample: dict | None = None
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    seed: int = 0
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def summary(self) -> str:
        exp = "" if self.expected is None else f"/{self.expected}"
        line = f"{self.property}: {self.verdict} ({self.checked}{exp} instances, {self.wall_time:.2f}s, seed {self.seed})"
        if self.error:
            line += f" error: {self.error}"
        return line

    def record(self) -> dict:
        return {
            "property": self.property, "verdict": self.verdict, "checked": self.checked,
            "expected": self.expected, "wall_time": round(self.wall_time, 3), "seed": self.seed,
            "counterexample": self.counterexample, "failures": len(self.counterexamples),
            "error": self.error,
        }


class _Stop(Exception):
    pass


class _Run:
    def __init__(self, spec: SweepSpec, report: SweepReport):
        self.spec = spec
        self.report = report

    def check(self, ok: bool, info: Callable[[], dict], recheck: Callable[[], bool] | None = None, count=True):
        if count:
            self.report.checked += 1
        if ok:
            return
        data = info()
        if recheck is not None:
            data["reverified"] = not recheck()
        self.report.counterexamples.append(data)
        if self.report.counterexample is None:
            self.report.counterexample = data
        self.report.verdict = "counterexample"
        if not self.spec.collect_all:
            raise _Stop


def _fresh(cfg: EvalConfig) -> EvalConfig:
    return cfg.but(memo=False)


def _show(M: Structure | None = None, X: Team | None = None, **formulas) -> dict:
    out = {}
    if M is not None:
        out["structure"] = format_structure(M).strip()
    if X is not None:
        out["team"] = format_team(X).strip()
    for k, v in formulas.items():
        out[k] = to_text(v) if isinstance(v, Formula) else (str(v) if isinstance(v, NormalFormSentence) else v)
    return out


# ------------------------------------------------------------ generators


def random_structure(rng: random.Random, sig: Signature, n: int) -> Structure:
    rels = {}
    for name, ar in sig.relations.items():
        rels[name] = frozenset(t for t in itertools.product(range(n), repeat=ar) if rng.random() < 0.5)
    funs = {
        name: {t: rng.randrange(n) for t in itertools.product(range(n), repeat=ar)}
        for name, ar in sig.functions.items()
    }
    return Structure(n, sig, rels, funs)


def random_team(rng: random.Random, n: int, vars, max_rows: int) -> Team:
    vars = tuple(vars)
    rows = list(itertools.product(range(n), repeat=len(vars)))
    k = rng.randint(0, min(max_rows, len(rows)))
    return Team(vars, frozenset(rng.sample(rows, k)))


def _var_pool(k=3):
    return tuple("xyzuvw"[:k])


def random_formula(
    seed,
    depth: int,
    sig: Signature,
    quantifiers: Iterable[str] = ("exists", "forall", "most"),
    dialect: str = "dq",
    variables=("x", "y"),
    functions: dict | None = None,
    registry: Registry | None = None,
) -> Formula:
    """A random NNF formula of the dialect with nesting depth at most ``depth``.

    ``seed`` is an int or a :class:`random.Random`. Dialects: ``fo``, ``dq``,
    ``iq`` (team atoms) and ``eso`` (function terms over ``functions``, a
    name → arity map of second-order symbols in scope).
    """
    if dialect not in ("fo", "dq", "iq", "eso"):
        raise ValueError(f"unknown dialect {dialect!r}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    variables = tuple(variables)
    rels = sorted(sig.relations.items())
    if not variables and not any(ar == 0 for _, ar in rels):
        raise TeamLogicError("no atoms can be built: no variables and no 0-ary relations")
    functions = dict(functions or {})
    quantifiers = tuple(quantifiers)

    def term(depth_left=1):
        if dialect == "eso" and functions and depth_left > 0 and rng.random() < 0.4:
            f, ar = rng.choice(sorted(functions.items()))
            return Func(f, tuple(term(depth_left - 1) for _ in range(ar)))
        return Var(rng.choice(variables))

    def atom():
        choices = ["eq"] if variables else []
        if rels:
            choices += ["rel", "rel"]
        if dialect in ("dq", "iq") and variables:
            choices.append("dep")
        if dialect == "iq" and variables:
            choices.append("perp")
        kind = rng.choice(choices)
        if kind == "rel":
            name, ar = rng.choice(rels)
            a = Rel(name, tuple(term() for _ in range(ar)))
            return Neg(a) if rng.random() < 0.3 else a
        if kind == "eq":
            a = Eq(term(), term())
            return Neg(a) if rng.random() < 0.3 else a
        if kind == "dep":
            k = rng.randint(0, min(2, len(variables)))
            args = rng.sample(variables, k) + [rng.choice(variables)]
            a = Dep(tuple(Var(v) for v in args))
            return Neg(a) if rng.random() < 0.05 else a
        parts = [tuple(Var(v) for v in rng.sample(variables, rng.randint(0, min(2, len(variables))))) for _ in range(3)]
        if not parts[0]:
            parts[0] = (Var(rng.choice(variables)),)
        if not parts[2]:
            parts[2] = (Var(rng.choice(variables)),)
        return Indep(parts[0], parts[1], parts[2])

    def go(d):
        if d == 0 or rng.random() < 0.2:
            return atom()
        kind = rng.choice(["and", "or", "q", "q"] if quantifiers and variables else ["and", "or"])
        if kind == "and":
            return And(go(d - 1), go(d - 1))
        if kind == "or":
            return Or(go(d - 1), go(d - 1))
        q = rng.choice(quantifiers)
        v = rng.choice(variables)
        return corpus.binder(q, v)(go(d - 1))

    return go(depth)


def random_sentence(seed, depth: int, sig: Signature, quantifiers=("exists", "forall", "most"),
                    dialect: str = "dq", variables=("x", "y"), functions: dict | None = None) -> Formula:
    """:func:`random_formula` closed off by quantifiers (and ∃f binders for ESO)."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    phi = random_formula(rng, depth, sig, quantifiers, dialect, variables, functions)
    for v in sorted(free_variables(phi), reverse=True):
        phi = corpus.binder(rng.choice(quantifiers), v)(phi)
    if dialect == "eso":
        for f, ar in sorted((functions or {}).items(), reverse=True):
            phi = ExistsFunc(f, ar, phi)
    return phi


# ------------------------------------------------------------ spaces


def _formulas(spec: SweepSpec, dialect: str, rng=None) -> list:
    if spec.source == "list":
        return list(spec.formulas)
    relation = next((n for n, ar in sorted(spec.signature.relations.items()) if ar == 1), None)
    if relation is None:
        raise TeamLogicError("the standard space needs a unary relation in the signature")
    return corpus.standard_space(dialect, spec.depth, spec.quantifiers, relation)


def _domains(phi: Formula, pool=("x", "y")) -> list[tuple]:
    """Every domain V with FV(φ) ⊆ V ⊆ pool, in pool order."""
    fv = free_variables(phi)
    extra = [v for v in pool if v not in fv]
    out = []
    for k in range(len(extra) + 1):
        for add in itertools.combinations(extra, k):
            s = fv | set(add)
            out.append(tuple(v for v in pool if v in s))
    return out


def _team_instances(spec: SweepSpec, dialect: str, run: _Run, fn, with_domains=True):
    """Call ``fn(M, checker, φ, X)`` over the declared space; return the expected count."""
    dialect = spec.dialect or dialect
    if spec.source == "random":
        rng = random.Random(spec.seed)
        for _ in range(spec.count):
            n = rng.choice(spec.sizes)
            M = random_structure(rng, spec.signature, n)
            phi = random_formula(rng, spec.depth, spec.signature, spec.quantifiers, dialect)
            dom = rng.choice(_domains(phi)) if with_domains else tuple(sorted(free_variables(phi)))
            X = random_team(rng, n, dom, spec.max_rows)
            fn(M, TeamChecker(M, spec.cfg), phi, X)
        return spec.count
    formulas = _formulas(spec, dialect)
    expected = 0
    for n in spec.sizes:
        structures = list(enumerate_structures(spec.signature, n))
        for phi in formulas:
            doms = _domains(phi) if with_domains else [tuple(sorted(free_variables(phi)))]
            expected += len(structures) * sum(count_teams(n, len(d)) for d in doms)
            for M in structures:
                checker = TeamChecker(M, spec.cfg)
                for dom in doms:
                    for X in enumerate_teams(n, dom):
                        fn(M, checker, phi, X)
    return expected


# ------------------------------------------------------------ properties


def _p_empty_team(spec, run):
    def fn(M, ch, phi, X):
        E = Team.empty(X.vars)
        run.check(ch.evaluate(E, phi), lambda: _show(M, E, formula=phi),
                  lambda: eval_team(M, E, phi, _fresh(spec.cfg)))

    return _team_instances(spec, "dq", run, fn)


def _p_downward_closure(spec, run):
    def fn(M, ch, phi, X):
        if not ch.evaluate(X, phi):
            run.check(True, dict)
            return
        bad = next((Y for Y in subteams(X) if not ch.evaluate(Y, phi)), None)
        run.check(
            bad is None,
            lambda: {**_show(M, X, formula=phi), "subteam": format_team(bad).strip()},
            lambda: not (eval_team(M, X, phi, _fresh(spec.cfg)) and not eval_team(M, bad, phi, _fresh(spec.cfg))),
        )

    return _team_instances(spec, "dq", run, fn)


def _p_locality(spec, run):
    fvs = {}

    def fn(M, ch, phi, X):
        fv = fvs.get(id(phi))
        if fv is None:
            fv = fvs[id(phi)] = (phi, free_variables(phi))
        Y = restrict(X, fv[1])
        a, b = ch.evaluate(X, phi), ch.evaluate(Y, phi)
        run.check(a == b, lambda: {**_show(M, X, formula=phi), "restricted": format_team(Y).strip(), "values": [a, b]},
                  lambda: eval_team(M, X, phi, _fresh(spec.cfg)) == eval_team(M, Y, phi, _fresh(spec.cfg)))

    return _team_instances(spec, "dq", run, fn)


def _p_flatness(spec, run):
    def fn(M, ch, phi, X):
        team = ch.evaluate(X, phi)
        point = all(eval_fo(M, s, phi, spec.cfg) for s in X.assignments())
        run.check(team == point, lambda: {**_show(M, X, formula=phi), "values": [team, point]},
                  lambda: eval_team(M, X, phi, _fresh(spec.cfg)) == all(eval_fo(M, s, phi) for s in X.assignments()))

    return _team_instances(spec, "fo", run, fn)


def as_generalized(phi: Formula) -> Formula:
    """Replace native ∃/∀ by the generalized quantifiers ``exists``/``forall``."""
    if isinstance(phi, Exists):
        return GQ("exists", (phi.var,), as_generalized(phi.body))
    if isinstance(phi, Forall):
        return GQ("forall", (phi.var,), as_generalized(phi.body))
    return map_children(phi, as_generalized)


def _p_gq_faithfulness(spec, run):
    cache = {}

    def fn(M, ch, phi, X):
        psi = cache.get(id(phi))
        if psi is None:
            psi = cache[id(phi)] = (phi, as_generalized(phi))
        psi = psi[1]
        a, b = ch.evaluate(X, phi), ch.evaluate(X, psi)
        run.check(a == b, lambda: {**_show(M, X, native=phi, encoded=psi), "values": [a, b]},
                  lambda: eval_team(M, X, phi, _fresh(spec.cfg)) == eval_team(M, X, psi, _fresh(spec.cfg)))

    return _team_instances(spec, "dq", run, fn)


def _p_minimal_witness(spec, run):
    minimal_cfg = spec.cfg.but(gq_search="minimal")
    partner = {}

    def fn(M, ch, phi, X):
        if has_independence(phi):
            return
        other = partner.get(id(ch))
        if other is None:
            partner.clear()
            other = partner[id(ch)] = (ch, TeamChecker(M, minimal_cfg))
        a = ch.evaluate(X, phi)
        b = other[1].evaluate(X, phi)
        run.check(a == b, lambda: {**_show(M, X, formula=phi), "values": [a, b]},
                  lambda: eval_team(M, X, phi, _fresh(spec.cfg)) == eval_team(M, X, phi, _fresh(minimal_cfg)))

    return _team_instances(spec, "dq", run, fn)


def _p_connective_lemma(spec, run):
    """[Q x](ψ ∘ θ) ≡ [Q x]ψ ∘ θ for ∘ ∈ {∧, ∨}, x not free in θ; checked pointwise."""
    relation = next(n for n, ar in sorted(spec.signature.relations.items()) if ar == 1)
    space = corpus.standard_space("fo", min(spec.depth, 1), ("exists", "forall"), relation)
    if spec.source == "list":
        space = list(spec.formulas)
    thetas = [t for t in space if "x" not in free_variables(t)]
    qs = [q for q in spec.quantifiers if q not in ("exists", "forall")] or list(spec.quantifiers)
    expected = 0
    for q in qs:
        for n in spec.sizes:
            structures = list(enumerate_structures(spec.signature, n))
            for psi in space:
                for theta in thetas:
                    fv = sorted((free_variables(psi) | free_variables(theta)) - {"x"})
                    for op in (And, Or):
                        lhs = GQ(q, ("x",), op(psi, theta))
                        rhs = op(GQ(q, ("x",), psi), theta)
                        for M in structures:
                            for vals in itertools.product(range(n), repeat=len(fv)):
                                s = dict(zip(fv, vals))
                                a, b = eval_fo(M, s, lhs, spec.cfg), eval_fo(M, s, rhs, spec.cfg)
                                run.check(a == b, lambda: {**_show(M, lhs=lhs, rhs=rhs), "assignment": s, "values": [a, b]})
                                expected += 1
    return expected


def _sentence_list(spec: SweepSpec, default) -> list:
    return list(spec.formulas) if spec.source == "list" and spec.formulas else default()


def _p_normal_form(spec, run):
    if spec.source == "list" and spec.formulas:
        cases = [(spec.signature, phi, spec.sizes) for phi in spec.formulas]
    else:
        cases = [
            (Signature.parse(sig), parse_formula(text), tuple(n for n in corpus.normal_form_sizes(sig, text) if n in spec.sizes))
            for sig, text in corpus.NORMAL_FORM_SENTENCES
        ]
    expected = 0
    for sig, phi, sizes in cases:
        nf = to_normal_form(phi).to_formula()
        for n in sizes:
            for M in enumerate_structures(sig, n):
                a, b = eval_eso(M, phi, cfg=spec.cfg), eval_eso(M, nf, cfg=spec.cfg)
                run.check(a == b, lambda: {**_show(M, sentence=phi, normal_form=nf), "values": [a, b]})
            expected += count_structures(sig, n)
    return expected


def _p_flattening(spec, run):
    def default():
        return [parse_formula(t) for t in [corpus.FLATTEN_EXAMPLE, *corpus.nested_term_sentences(10, spec.seed)]]

    expected = 0
    for phi in _sentence_list(spec, default):
        nf = phi if isinstance(phi, NormalFormSentence) else to_normal_form(phi)
        flat = flatten_functions(nf)
        run.check(is_flat(flat), lambda: {**_show(sentence=phi, flat=flat), "reason": "not flat"})
        expected += 1
        src, out = nf.to_formula(), flat.to_formula()
        for n in spec.sizes:
            for M in enumerate_structures(spec.signature, n):
                a, b = eval_eso(M, src, cfg=spec.cfg), eval_eso(M, out, cfg=spec.cfg)
                run.check(a == b, lambda: {**_show(M, sentence=src, flat=out), "values": [a, b]})
            expected += count_structures(spec.signature, n)
    return expected


def _p_main_theorem(spec, run):
    def default():
        qs = [q for q in spec.quantifiers] if spec.quantifier is None else [spec.quantifier]
        return [phi for q in qs for phi in corpus.parse_all(corpus.MAIN_THEOREM_TEMPLATES, q)]

    expected = 0
    for phi in _sentence_list(spec, default):
        nf = to_normal_form(phi) if not isinstance(phi, NormalFormSentence) else phi
        dq = eso_to_dq(flatten_functions(nf))
        src = nf.to_formula()
        for n in spec.sizes:
            for M in enumerate_structures(spec.signature, n):
                a, b = eval_eso(M, src, cfg=spec.cfg), eval_sentence(M, dq, spec.cfg)
                run.check(a == b, lambda: {**_show(M, normal_form=src, team_sentence=dq), "values": [a, b]},
                          lambda: eval_eso(M, src) == eval_sentence(M, dq, _fresh(spec.cfg)))
            expected += count_structures(spec.signature, n)
    return expected


def _p_small_trick(spec, run):
    q = spec.quantifier or "QS_2"

    def default():
        return corpus.parse_all(corpus.SMALL_TRICK_TEMPLATES, q)

    expected = 0
    for phi in _sentence_list(spec, default):
        total = eso_to_dq_total(phi, q)
        for n in spec.sizes:
            for M in enumerate_structures(spec.signature, n):
                a, b = eval_eso(M, phi, cfg=spec.cfg), eval_sentence(M, total, spec.cfg)
                run.check(a == b, lambda: {**_show(M, sentence=phi, team_sentence=total), "values": [a, b]})
            expected += count_structures(spec.signature, n)
    return expected


def _p_translation(spec, run):
    R = "_R"
    dialect = "iq" if spec.flavor == "i" else "dq"
    cache = {}
    current = {}  # one evaluator per (formula, structure); its memo is shared across teams

    def fn(M, ch, phi, X):
        key = id(phi)
        if key not in cache:
            psi = dq_to_eso(phi, R, spec.flavor, X.vars)
            cache[key] = (phi, psi)
            if spec.flavor == "d":
                run.check(relation_negative(psi, R), lambda: {**_show(formula=phi, translation=psi), "reason": "R occurs positively"}, count=False)
        psi = cache[key][1]
        ev = current.get("ev")
        if ev is None or ev.M is not M or ev.phi is not psi:
            ev = current["ev"] = ESOEvaluator(M, psi, spec.cfg)
        a = ch.evaluate(X, phi)
        b = ev({R: X.rows})
        run.check(a == b, lambda: {**_show(M, X, formula=phi, translation=psi), "values": [a, b]},
                  lambda: eval_team(M, X, phi, _fresh(spec.cfg)) == eval_eso(M, psi, {R: X.rows}))

    return _team_instances(spec, dialect, run, fn, with_domains=False)


def _p_dep_from_indep(spec, run):
    pairs = [
        (Indep((Var("y"),), (Var("x"),), (Var("y"),)), Dep((Var("x"), Var("y")))),
        (Indep((Var("x"),), (Var("y"),), (Var("x"),)), Dep((Var("y"), Var("x")))),
        (Indep((Var("y"),), (), (Var("y"),)), Dep((Var("y"),))),
        (Indep((Var("x"),), (), (Var("x"),)), Dep((Var("x"),))),
        (Indep((Var("y"),), (Var("x"), Var("y")), (Var("y"),)), Dep((Var("x"), Var("y"), Var("y")))),
    ]
    expected = 0
    for n in spec.sizes:
        structures = list(enumerate_structures(spec.signature, n))
        for perp, dep in pairs:
            for M in structures:
                ch = TeamChecker(M, spec.cfg)
                for X in enumerate_teams(n, ("x", "y")):
                    a, b = ch.evaluate(X, perp), ch.evaluate(X, dep)
                    run.check(a == b, lambda: {**_show(M, X, perp=perp, dep=dep), "values": [a, b]})
            expected += len(structures) * count_teams(n, 2)
    return expected


def _p_dual(spec, run):
    reg = spec.cfg.quantifiers
    names = [q for q in spec.quantifiers] if spec.source == "list" else list(BUILTIN_NAMES)
    sizes = spec.sizes
    expected = 0
    ex, fa = reg["exists"], reg["forall"]
    d_ex = dual(ex)
    for n in sizes:
        for A in all_subsets(n, 1):
            run.check(d_ex(n, A) == fa(n, A), lambda: {"size": n, "set": sorted(A), "check": "dual(exists) = forall"})
            expected += 1
    for name in names:
        Q = reg[name]
        dd = dual(dual(Q))
        for n in sizes:
            if len(universe_tuples(n, Q.arity)) > 16:
                continue
            for A in all_subsets(n, Q.arity):
                run.check(dd(n, A) == Q(n, A), lambda: {"size": n, "quantifier": name, "set": sorted(A), "check": "dual(dual(Q)) = Q"})
                expected += 1
    # first-order form: ¬[Q x̄]⊥ iff [Q^d x̄]⊤
    for name in names:
        Q = reg[name]
        xs = tuple(f"x{i}" for i in range(Q.arity))
        for n in [s for s in sizes if s <= 3]:
            M = Structure(n)
            lhs = not eval_fo(M, {}, GQ(name, xs, BOT), spec.cfg)
            rhs = eval_fo(M, {}, GQ(dual(Q).name, xs, TOP), spec.cfg)
            run.check(lhs == rhs, lambda: {"size": n, "quantifier": name, "check": "not Q bot = Q^d top", "values": [lhs, rhs]})
            expected += 1
    return expected


_DISPATCH = {
    "empty-team": _p_empty_team,
    "downward-closure": _p_downward_closure,
    "locality": _p_locality,
    "flatness": _p_flatness,
    "gq-faithfulness": _p_gq_faithfulness,
    "connective-lemma": _p_connective_lemma,
    "normal-form": _p_normal_form,
    "flattening": _p_flattening,
    "main-theorem": _p_main_theorem,
    "translation": _p_translation,
    "dep-from-indep": _p_dep_from_indep,
    "dual": _p_dual,
    "small-trick": _p_small_trick,
    "minimal-witness": _p_minimal_witness,
}


def run_sweep(spec: SweepSpec) -> SweepReport:
    """Check ``spec.property`` over its instance space.

    Cap errors end the sweep with verdict ``"error"`` and the progress so far.
    """
    report = SweepReport(spec.property, seed=spec.seed)
    run = _Run(spec, report)
    start = time.perf_counter()
    try:
        report.expected = _DISPATCH[spec.property](spec, run)
        if report.expected is not None and report.checked != report.expected:
            report.verdict = "error"
            report.error = f"checked {report.checked} instances, expected {report.expected}"
    except _Stop:
        pass
    except TeamLogicError as exc:
        report.verdict = "error"
        report.error = f"{type(exc).__name__}: {exc}"
    report.wall_time = time.perf_counter() - start
    if report.counterexamples and report.verdict != "error":
        report.verdict = "counterexample"
    return report


def _evaluate_sentence(M: Structure, phi: Formula, cfg: EvalConfig) -> bool:
    if has_second_order(phi):
        return eval_eso(M, phi, cfg=cfg)
    return eval_sentence(M, phi, cfg)


def check_equiv(phi1: Formula, phi2: Formula, sizes=(2, 3), sig: Signature | None = None,
                cfg: EvalConfig = PAPER, collect_all: bool = False) -> SweepReport:
    """Compare two sentences on every structure of the given sizes.

    Sentences with second-order quantifiers go to :func:`eval_eso`, all others
    to team semantics at {ε}.
    """
    if isinstance(phi1, str):
        phi1 = parse_formula(phi1)
    if isinstance(phi2, str):
        phi2 = parse_formula(phi2)
    for phi in (phi1, phi2):
        if free_variables(phi):
            raise TeamLogicError(f"not a sentence: {to_text(phi)}")
    if sig is None:
        from .syntax.ops import free_symbols

        r1, f1 = free_symbols(phi1)
        r2, f2 = free_symbols(phi2)
        sig = Signature({**r1, **r2}, {**f1, **f2})
    report = SweepReport("equivalence")
    start = time.perf_counter()
    expected = 0
    try:
        for n in sizes:
            for M in enumerate_structures(sig, n):
                a, b = _evaluate_sentence(M, phi1, cfg), _evaluate_sentence(M, phi2, cfg)
                report.checked += 1
                if a != b:
                    data = {**_show(M, lhs=phi1, rhs=phi2), "values": [a, b]}
                    data["reverified"] = _evaluate_sentence(M, phi1, _fresh(cfg)) != _evaluate_sentence(M, phi2, _fresh(cfg))
                    report.counterexamples.append(data)
                    report.counterexample = report.counterexample or data
                    report.verdict = "counterexample"
                    if not collect_all:
                        raise _Stop
            expected += count_structures(sig, n)
        report.expected = expected
    except _Stop:
        pass
    except TeamLogicError as exc:
        report.verdict = "error"
        report.error = f"{type(exc).__name__}: {exc}"
    report.wall_time = time.perf_counter() - start
    return report
