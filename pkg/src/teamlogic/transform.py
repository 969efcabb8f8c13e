"""Syntactic translations between ESO(Q) and the team logics D(Q)/I(Q).

All fresh symbols carry the reserved ``_`` prefix, so they never collide with
user symbols. Every operation takes an optional ``log`` list; rewrite steps
append a short ``rule: detail`` line to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DialectError, TranslationError
from .syntax.ast import (
    BOT, TOP, And, Bot, Dep, Eq, Exists, ExistsFunc, ExistsRel, Forall, Formula, Func, GQ,
    Indep, Neg, NormalFormSentence, Or, Rel, Top, Var, conj, disj, exists_many, forall_many,
    is_relation_name, neq, subterms, tuple_eq, tuple_neq,
)
from .syntax.ops import (
    FreshNames, all_names, all_terms, free_symbols, free_variables, has_independence,
    has_team_atoms, map_terms, only_negative, rename_bound_apart,
    rename_relation, replace_subformulas, replace_term, walk,
)
from .syntax.printer import to_text


def _note(log, rule, detail):
    if log is not None:
        log.append(f"{rule}: {detail}")


def _short(phi, limit=60):
    s = to_text(phi)
    return s if len(s) <= limit else s[: limit - 3] + "..."


@dataclass
class TranslationResult:
    output: object
    fresh: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    requires_min_size: int = 1

    def __str__(self):
        return str(self.output)


# ------------------------------------------------------------ normal form


@dataclass
class _Prenex:
    functions: list
    prefix: list
    matrix: Formula


def _add_args(phi: Formula, names: set, extra: tuple) -> Formula:
    """f(t̄) ⇒ f(x̄, t̄) for every f in ``names``."""
    front = tuple(Var(v) for v in extra)
    return map_terms(phi, lambda t: Func(t.name, front + t.args) if isinstance(t, Func) and t.name in names else None)


def _prenex(phi: Formula, fresh: FreshNames, log) -> _Prenex:
    if isinstance(phi, (Top, Bot, Rel, Eq)):
        return _Prenex([], [], phi)
    if isinstance(phi, Neg):
        if isinstance(phi.atom, Dep):
            raise DialectError("ESO(Q) formulas contain no dependence atoms")
        return _Prenex([], [], phi)
    if isinstance(phi, (Dep, Indep)):
        raise DialectError("ESO(Q) formulas contain no dependence/independence atoms")
    if isinstance(phi, (And, Or)):
        a, b = _prenex(phi.left, fresh, log), _prenex(phi.right, fresh, log)
        if a.prefix or b.prefix:
            rule = "connective-and" if isinstance(phi, And) else "connective-or"
            _note(log, rule, "quantifier prefix moved over " + ("∧" if isinstance(phi, And) else "∨"))
        return _Prenex(a.functions + b.functions, a.prefix + b.prefix, type(phi)(a.matrix, b.matrix))
    if isinstance(phi, (Forall, GQ)):
        vs = (phi.var,) if isinstance(phi, Forall) else phi.vars
        kind = "forall" if isinstance(phi, Forall) else phi.quantifier
        inner = _prenex(phi.body, fresh, log)
        names = {f for f, _ in inner.functions}
        if names:
            _note(log, "pull-through", f"{', '.join(sorted(names))} gain arguments {', '.join(vs)}")
        funcs = [(f, ar + len(vs)) for f, ar in inner.functions]
        return _Prenex(funcs, [(kind, vs)] + inner.prefix, _add_args(inner.matrix, names, vs))
    if isinstance(phi, Exists):
        inner = _prenex(phi.body, fresh, log)
        c = fresh("f")
        _note(log, "skolemize", f"{phi.var} := {c}()")
        matrix = map_terms(inner.matrix, lambda t: Func(c, ()) if t == Var(phi.var) else None)
        for kind, vs in inner.prefix:
            if phi.var in vs:
                raise TranslationError("bound variables must be distinct")
        return _Prenex([(c, 0)] + inner.functions, inner.prefix, matrix)
    if isinstance(phi, ExistsFunc):
        inner = _prenex(phi.body, fresh, log)
        return _Prenex([(phi.name, phi.arity)] + inner.functions, inner.prefix, inner.matrix)
    if isinstance(phi, ExistsRel):
        inner = _prenex(phi.body, fresh, log)
        f1, f2 = fresh("f"), fresh("f")
        _note(log, "relation-elim", f"{phi.name}(t̄) := {f1}(t̄)={f2}(t̄) (needs |M| ≥ 2)")

        def go(node):
            if isinstance(node, Rel) and node.name == phi.name:
                return Eq(Func(f1, node.args), Func(f2, node.args))
            if isinstance(node, Neg) and isinstance(node.atom, Rel) and node.atom.name == phi.name:
                return neq(Func(f1, node.atom.args), Func(f2, node.atom.args))
            if isinstance(node, (And, Or)):
                return type(node)(go(node.left), go(node.right))
            return node

        return _Prenex([(f1, phi.arity), (f2, phi.arity)] + inner.functions, inner.prefix, go(inner.matrix))
    raise TypeError(phi)


def _check_sentence(phi):
    fv = free_variables(phi)
    if fv:
        raise TranslationError(f"not a sentence: free variables {sorted(fv)}")
    if has_team_atoms(phi):
        raise DialectError("expected an ESO(Q) formula; found dependence/independence atoms")


def to_normal_form(phi: Formula, log: list | None = None) -> NormalFormSentence:
    """∃f̄ Q'₁x̄₁ … Q'ₘx̄ₘ ψ with ψ quantifier-free, Q'ᵢ ∈ {∀, named quantifiers}.

    Moving a named quantifier over ∧ needs ∅ ∉ Q_M and over ∨ needs M^k ∈ Q_M;
    eliminating ∃R needs |M| ≥ 2.
    """
    _check_sentence(phi)
    fresh = FreshNames(all_names(phi))
    phi = rename_bound_apart(phi, fresh)
    p = _prenex(phi, fresh, log)
    return NormalFormSentence(tuple(p.functions), tuple(p.prefix), p.matrix)


def uses_relation_elimination(phi: Formula) -> bool:
    return any(isinstance(n, ExistsRel) for n in walk(phi))


# ------------------------------------------------------------- flattening


def _occurrences(matrix: Formula, names) -> list[Func]:
    """Distinct occurrences f(t̄) with f ∈ names, in order of first appearance."""
    seen, out = set(), []
    for t in all_terms(matrix):
        for u in subterms(t):
            if isinstance(u, Func) and u.name in names and u not in seen:
                seen.add(u)
                out.append(u)
    return out


def function_tuples(nf: NormalFormSentence) -> dict[str, list[tuple]]:
    """Distinct argument tuples of each quantified function symbol in the matrix."""
    names = {f for f, _ in nf.functions}
    out: dict[str, list] = {}
    for u in _occurrences(nf.matrix, names):
        out.setdefault(u.name, [])
        if u.args not in out[u.name]:
            out[u.name].append(u.args)
    return out


def is_flat(nf: NormalFormSentence) -> bool:
    """Each quantified function occurs with a single tuple of pairwise distinct variables."""
    for tuples in function_tuples(nf).values():
        if len(tuples) != 1:
            return False
        (args,) = tuples
        if not all(isinstance(a, Var) for a in args) or len({a.name for a in args}) != len(args):
            return False
    return True


def flatten_functions(nf: NormalFormSentence, log: list | None = None) -> NormalFormSentence:
    """Equivalent normal form in which every quantified function is applied to one variable tuple.

    Non-variable or repeated arguments are replaced by fresh ∀ variables behind
    a disequality guard. A symbol used with several tuples keeps its first tuple;
    the others are handed to clone functions tied to it by a conjunct
    ``v̄ ≠ x̄ ∨ g(v̄) = f(x̄)``. Cloning is only sound for ∀-bound, pairwise disjoint
    tuples, so other tuples are first guard-rewritten to fresh ∀ variables. The
    clone conjunct needs ∅ ∉ Q_M for the named quantifiers of the prefix.
    """
    fresh = FreshNames(all_names(nf.to_formula()))
    names = {f for f, _ in nf.functions}
    funcs = list(nf.functions)
    prefix = list(nf.prefix)
    matrix = nf.matrix

    def guard_args(target: Func, positions):
        nonlocal matrix
        args = list(target.args)
        guards = []
        for i in positions:
            u = fresh("u")
            prefix.append(("forall", (u,)))
            guards.append(neq(Var(u), args[i]))
            args[i] = Var(u)
        new = Func(target.name, tuple(args))
        _note(log, "guard", f"{_short_term(target)} ⇒ {_short_term(new)}")
        matrix = disj(*guards, replace_term(matrix, target, new))

    # (i) non-variable arguments, innermost first
    while True:
        occ = _occurrences(matrix, names)
        target = next((u for u in reversed(occ) if any(isinstance(a, Func) for a in u.args)), None)
        if target is None:
            break
        guard_args(target, [i for i, a in enumerate(target.args) if isinstance(a, Func)])

    # (ii) repeated variables
    while True:
        target = next(
            (u for u in _occurrences(matrix, names) if len({a.name for a in u.args}) != len(u.args)), None
        )
        if target is None:
            break
        seen, rep = set(), []
        for i, a in enumerate(target.args):
            if a.name in seen:
                rep.append(i)
            seen.add(a.name)
        guard_args(target, rep)

    # (iii) several tuples per symbol
    universal = lambda: {vs[0] for kind, vs in prefix if kind == "forall"}
    tuples = function_tuples(NormalFormSentence(tuple(funcs), tuple(prefix), matrix))
    for f, ts in tuples.items():
        if len(ts) < 2:
            continue
        univ = universal()
        varsets = [{a.name for a in t} for t in ts]
        fixed = []
        for i, t in enumerate(ts):
            others = set().union(*(vs for j, vs in enumerate(varsets) if j != i))
            if varsets[i] <= univ and not varsets[i] & others:
                fixed.append(t)
            else:
                guard_args(Func(f, t), range(len(t)))
                # the rewritten tuple is the one just appended to the prefix
                fixed.append(tuple(Var(vs[0]) for _, vs in prefix[len(prefix) - len(t):]))
        canon = fixed[0]
        clones = []
        for t in fixed[1:]:
            g = fresh(f.lstrip("_").rstrip("0123456789") or "f")
            ar = len(t)
            funcs.append((g, ar))
            matrix = replace_term(matrix, Func(f, t), Func(g, t))
            clones.append(disj(tuple_neq(t, canon), Eq(Func(g, t), Func(f, canon))))
            _note(log, "clone", f"{f}({', '.join(a.name for a in t)}) ⇒ {g}")
        matrix = conj(matrix, *clones)

    out = NormalFormSentence(tuple(funcs), tuple(prefix), matrix)
    if not is_flat(out):
        raise TranslationError("flattening did not reach a flat form")
    return out


def _short_term(t):
    from .syntax.printer import term_text

    return term_text(t)


# ------------------------------------------------------- ESO(Q) → D(Q)


def eso_to_dq(nf: NormalFormSentence, log: list | None = None) -> Formula:
    """Q'₁x₁ ⋯ Q'ₘxₘ ∃y₁ ⋯ ∃yₙ (⋀ dep(x̄ⁱ, yᵢ) ∧ θ) for a flat normal form."""
    if not isinstance(nf, NormalFormSentence):
        raise TranslationError("expected a NormalFormSentence")
    if not is_flat(nf):
        raise TranslationError("input is not flat; apply flatten_functions first")
    fresh = FreshNames(all_names(nf.to_formula()))
    tuples = function_tuples(nf)
    ys, deps = {}, []
    for f, _ in nf.functions:
        if f not in tuples:
            _note(log, "skip", f"{f} does not occur")
            continue
        (args,) = tuples[f]
        y = fresh("y")
        ys[f] = y
        deps.append(Dep(tuple(args) + (Var(y),)))
    theta = map_terms(nf.matrix, lambda t: Var(ys[t.name]) if isinstance(t, Func) and t.name in ys else None)
    body = exists_many(list(ys.values()), conj(*deps, theta))
    for kind, vs in reversed(nf.prefix):
        body = Forall(vs[0], body) if kind == "forall" else GQ(kind, vs, body)
    return body


def eso_to_dq_sentence(phi: Formula, log: list | None = None) -> Formula:
    """Full pipeline: normal form, flattening, then the D(Q) sentence."""
    return eso_to_dq(flatten_functions(to_normal_form(phi, log), log), log)


def eso_to_dq_total(phi: Formula, quantifier: str, arity: int = 1, log: list | None = None) -> Formula:
    """(Qx̄⊤ ∧ φ*) ∨ φ₀*, correct at every size with ∅ ∉ Q_M, whether or not M^k ∈ Q_M.

    φ₀ replaces every subformula headed by the quantifier with ⊥.
    """
    _check_sentence(phi)
    star = eso_to_dq_sentence(phi, log)
    phi0 = replace_subformulas(phi, lambda n: isinstance(n, GQ) and n.quantifier == quantifier, lambda n: BOT)
    _note(log, "small-trick", f"φ₀ = {_short(phi0)}")
    star0 = eso_to_dq_sentence(phi0, log)
    fresh = FreshNames(all_names(star) | all_names(star0))
    xs = tuple(fresh("x") for _ in range(arity))
    return Or(And(GQ(quantifier, xs, TOP), star), star0)


# ------------------------------------------------------ D(Q)/I(Q) → ESO(Q)


class _TeamToESO:
    def __init__(self, flavor: str, fresh: FreshNames, log):
        self.flavor = flavor
        self.fresh = fresh
        self.log = log

    def rel(self, name, dom):
        return Rel(name, tuple(Var(v) for v in dom))

    def guard(self, R, dom, body):
        return forall_many(dom, disj(Neg(self.rel(R, dom)), body))

    def copy(self, dom):
        return tuple(self.fresh(v.lstrip("_").rstrip("0123456789") or "v") for v in dom)

    def rename(self, terms, dom, new):
        m = dict(zip(dom, new))
        ren = lambda t: Var(m[t.name]) if isinstance(t, Var) and t.name in m else None
        from .syntax.ops import map_term

        return tuple(map_term(t, ren) for t in terms)

    def new_relation(self, stem="S"):
        return self.fresh(stem)

    def extend(self, dom, new_vars):
        """Domain after binding ``new_vars``; positions; and the binding names used in clauses."""
        out, pos = list(dom), []
        for v in new_vars:
            if v in out:
                pos.append(out.index(v))
            else:
                out.append(v)
                pos.append(len(out) - 1)
        # variable names standing for the new values inside clauses
        ws = tuple(v if p >= len(dom) else self.fresh("w") for v, p in zip(new_vars, pos))
        return tuple(out), tuple(pos), ws

    def image_args(self, dom, new_dom, pos, ws):
        args = [Var(v) for v in dom] + [None] * (len(new_dom) - len(dom))
        for p, w in zip(pos, ws):
            args[p] = Var(w)
        return tuple(args)

    def image(self, G, S, dom, new_dom, pos, ws):
        """S is exactly {s[w̄/x̄] : G(s, w̄)}."""
        fwd = forall_many(dom + ws, disj(Neg(Rel(G, tuple(Var(v) for v in dom + ws))), Rel(S, self.image_args(dom, new_dom, pos, ws))))
        zs = self.copy(new_dom)
        old = [Var(zs[i]) for i in range(len(dom))]
        vs = []
        for p in pos:
            if p < len(dom):
                v = self.fresh("v")
                vs.append(v)
                old[p] = Var(v)
        wvals = tuple(Var(zs[p]) for p in pos)
        bwd = forall_many(zs, disj(Neg(Rel(S, tuple(Var(z) for z in zs))), exists_many(vs, Rel(G, tuple(old) + wvals))))
        return conj(fwd, bwd)

    def subset(self, S, R, dom, extra=()):
        """S(dom, extra) → R(dom)."""
        return forall_many(dom + extra, disj(Neg(Rel(S, tuple(Var(v) for v in dom + extra))), self.rel(R, dom)))

    # -- the translation
    def tr(self, phi: Formula, R: str, dom: tuple) -> Formula:
        exact = self.flavor == "i"
        if isinstance(phi, Top):
            return TOP
        if isinstance(phi, Bot) or (isinstance(phi, Neg) and isinstance(phi.atom, Dep)):
            return forall_many(dom, Neg(self.rel(R, dom)))
        if isinstance(phi, (Rel, Eq, Neg)):
            return self.guard(R, dom, phi)
        if isinstance(phi, Dep):
            d2 = self.copy(dom)
            t1 = phi.terms
            t2 = self.rename(t1, dom, d2)
            body = disj(
                Neg(self.rel(R, dom)), Neg(self.rel(R, d2)),
                tuple_neq(t1[:-1], t2[:-1]), Eq(t1[-1], t2[-1]),
            )
            return forall_many(dom + d2, body)
        if isinstance(phi, Indep):
            if not exact:
                raise DialectError("independence atoms need the exact (i) flavor")
            d2, d3 = self.copy(dom), self.copy(dom)
            cond, left, right = phi.cond, phi.left, phi.right
            cond2, right2 = self.rename(cond, dom, d2), self.rename(right, dom, d2)
            cond3, left3, right3 = (self.rename(ts, dom, d3) for ts in (cond, left, right))
            witness = exists_many(d3, conj(self.rel(R, d3), tuple_eq(cond3, cond), tuple_eq(left3, left), tuple_eq(right3, right2)))
            body = disj(Neg(self.rel(R, dom)), Neg(self.rel(R, d2)), tuple_neq(cond, cond2), witness)
            return forall_many(dom + d2, body)
        if isinstance(phi, And):
            return And(self.tr(phi.left, R, dom), self.tr(phi.right, R, dom))
        if isinstance(phi, Or):
            S, T = self.new_relation("S"), self.new_relation("T")
            cover = forall_many(dom, disj(Neg(self.rel(R, dom)), self.rel(S, dom), self.rel(T, dom)))
            parts = [cover]
            if exact:
                parts += [self.subset(S, R, dom), self.subset(T, R, dom)]
            parts += [self.tr(phi.left, S, dom), self.tr(phi.right, T, dom)]
            return ExistsRel(S, len(dom), ExistsRel(T, len(dom), conj(*parts)))
        if isinstance(phi, Exists):
            new_dom, pos, ws = self.extend(dom, (phi.var,))
            S = self.new_relation("S")
            if not exact:
                clause = self.guard(R, dom, exists_many(ws, Rel(S, self.image_args(dom, new_dom, pos, ws))))
                return ExistsRel(S, len(new_dom), conj(clause, self.tr(phi.body, S, new_dom)))
            G = S if pos[0] >= len(dom) else self.new_relation("G")
            (w,) = ws
            w2 = self.fresh("w")
            gargs = lambda x: tuple(Var(v) for v in dom) + (Var(x),)
            total = self.guard(R, dom, Exists(w, Rel(G, gargs(w))))
            single = forall_many(dom + (w, w2), disj(Neg(Rel(G, gargs(w))), Neg(Rel(G, gargs(w2))), Eq(Var(w), Var(w2))))
            parts = [total, self.subset(G, R, dom, (w,)), single]
            inner = conj(*parts, self.tr(phi.body, S, new_dom))
            if G == S:
                return ExistsRel(S, len(new_dom), inner)
            return ExistsRel(G, len(dom) + 1, ExistsRel(S, len(new_dom), conj(self.image(G, S, dom, new_dom, pos, ws), inner)))
        if isinstance(phi, Forall):
            new_dom, pos, ws = self.extend(dom, (phi.var,))
            S = self.new_relation("S")
            fwd = forall_many(dom + ws, disj(Neg(self.rel(R, dom)), Rel(S, self.image_args(dom, new_dom, pos, ws))))
            parts = [fwd]
            if exact:
                if pos[0] >= len(dom):
                    parts.append(self.subset(S, R, dom, ws))
                else:
                    zs = self.copy(new_dom)
                    v = self.fresh("v")
                    old = [Var(z) for z in zs]
                    old[pos[0]] = Var(v)
                    parts.append(forall_many(zs, disj(Neg(Rel(S, tuple(Var(z) for z in zs))), Exists(v, Rel(R, tuple(old))))))
            return ExistsRel(S, len(new_dom), conj(*parts, self.tr(phi.body, S, new_dom)))
        if isinstance(phi, GQ):
            new_dom, pos, ws = self.extend(dom, phi.vars)
            S = self.new_relation("S")
            if not exact:
                clause = self.guard(R, dom, GQ(phi.quantifier, ws, Rel(S, self.image_args(dom, new_dom, pos, ws))))
                return ExistsRel(S, len(new_dom), conj(self.tr(phi.body, S, new_dom), clause))
            no_overwrite = all(p >= len(dom) for p in pos)
            G = S if no_overwrite else self.new_relation("G")
            gfull = Rel(G, tuple(Var(v) for v in dom + ws))
            sections = self.guard(R, dom, GQ(phi.quantifier, ws, gfull))
            inner = conj(sections, self.subset(G, R, dom, ws), self.tr(phi.body, S, new_dom))
            if no_overwrite:
                return ExistsRel(S, len(new_dom), inner)
            return ExistsRel(G, len(dom) + len(ws), ExistsRel(S, len(new_dom), conj(self.image(G, S, dom, new_dom, pos, ws), inner)))
        raise DialectError(f"no team translation for {type(phi).__name__}")


def dq_to_eso(
    phi: Formula,
    relation: str = "_R",
    flavor: str = "d",
    domain: tuple | None = None,
    log: list | None = None,
) -> Formula:
    """ESO(Q) sentence ψ(R) with M, X ⊨ φ ⇔ (M, rel(X)) ⊨ ψ.

    ``domain`` fixes the variable order of the team (default: sorted free
    variables); R has arity ``len(domain)``. Flavor ``"d"`` needs a formula
    without independence atoms and leaves R only negative; flavor ``"i"``
    defines every intermediate team exactly and also covers independence atoms.
    """
    if flavor not in ("d", "i"):
        raise ValueError("flavor must be 'd' or 'i'")
    if any(isinstance(n, (ExistsFunc, ExistsRel)) for n in walk(phi)):
        raise DialectError("expected a team formula without second-order quantifiers")
    if flavor == "d" and has_independence(phi):
        raise DialectError("the D-negative flavor does not cover independence atoms; use flavor 'i'")
    if not is_relation_name(relation):
        raise TranslationError(f"relation symbol must start upper-case: {relation!r}")
    names = all_names(phi)
    if relation in names:
        raise TranslationError(f"{relation} already occurs in the formula")
    fv = free_variables(phi)
    if domain is None:
        domain = tuple(sorted(fv))
    domain = tuple(domain)
    if len(set(domain)) != len(domain):
        raise TranslationError("domain has repeated variables")
    if not fv <= set(domain):
        raise TranslationError(f"free variables {sorted(fv - set(domain))} missing from the domain {domain}")
    fresh = FreshNames(names | {relation} | set(domain))
    out = _TeamToESO(flavor, fresh, log).tr(phi, relation, domain)
    _note(log, "team-to-eso", f"flavor {flavor}, {relation}/{len(domain)} over ({', '.join(domain)})")
    if flavor == "d" and not only_negative(out, relation):
        raise TranslationError("internal error: relation occurs positively")
    return out


def relation_negative(psi: Formula, relation: str) -> bool:
    """The polarity check: every occurrence of ``relation`` is negated."""
    return only_negative(psi, relation)


# ---------------------------------------------- definable quantifiers


def eliminate_definable_q(
    phi: Formula,
    quantifier: str,
    definition: Formula,
    relation: str | None = None,
    log: list | None = None,
) -> Formula:
    """Replace each ``[q x̄] θ`` by ``∃P (δ(P/R) ∧ ∀x̄ (¬P(x̄) ∨ θ))``.

    ``definition`` is a sentence δ over one free relation R that defines the
    (monotone) quantifier; it is trusted, not verified.
    """
    rels, funcs = free_symbols(definition)
    if relation is None:
        if len(rels) != 1:
            raise TranslationError(f"cannot tell the defined relation among {sorted(rels)}")
        (relation,) = rels
    if relation not in rels:
        raise TranslationError(f"{relation} does not occur in the definition")
    k = rels[relation]
    if free_variables(definition):
        raise TranslationError("the definition must be a sentence")
    fresh = FreshNames(all_names(phi) | all_names(definition))
    delta = rename_bound_apart(definition, fresh)

    def repl(node):
        body = replace_subformulas(node.body, is_q, repl)
        if len(node.vars) != k:
            raise TranslationError(f"[{quantifier}] binds {len(node.vars)} variables, the definition has arity {k}")
        P = fresh("P")
        _note(log, "q-elim", f"[{quantifier} {' '.join(node.vars)}] via {P}/{k}")
        pv = Rel(P, tuple(Var(v) for v in node.vars))
        return ExistsRel(P, k, And(rename_relation(delta, relation, P), forall_many(node.vars, disj(Neg(pv), body))))

    is_q = lambda n: isinstance(n, GQ) and n.quantifier == quantifier
    return replace_subformulas(phi, is_q, repl)


# ------------------------------------------------------------ front door


def _so_binders(phi):
    return {n.name: n.arity for n in walk(phi) if isinstance(n, (ExistsFunc, ExistsRel))}


def introduced_symbols(before: Formula, after: Formula) -> dict:
    """Reserved second-order symbols of ``after`` absent from ``before`` (name → arity)."""
    old = all_names(before)
    out = {}
    rels, funcs = free_symbols(after)
    for table in (_so_binders(after), rels, funcs):
        for name, ar in table.items():
            if name.startswith("_") and name not in old:
                out[name] = ar
    return dict(sorted(out.items()))


def translate(
    phi: Formula,
    to: str,
    *,
    flavor: str = "d",
    quantifier: str | None = None,
    arity: int = 1,
    relation: str = "_R",
    domain=None,
) -> TranslationResult:
    """Run one translation and collect its bookkeeping.

    ``to`` is one of ``nf`` (normal form), ``flat`` (flattened normal form),
    ``dq`` (ESO(Q) sentence → D(Q)), ``total`` (the variant that also covers
    sizes with M^k ∉ Q; needs ``quantifier``) and ``eso`` (team formula → ESO(Q)).
    """
    log: list = []
    min_size = 1
    if to in ("nf", "flat", "dq", "total"):
        min_size = 2 if uses_relation_elimination(phi) else 1
    if to == "nf":
        out = to_normal_form(phi, log)
        fresh = introduced_symbols(phi, out.to_formula())
    elif to == "flat":
        out = flatten_functions(to_normal_form(phi, log), log)
        fresh = introduced_symbols(phi, out.to_formula())
    elif to == "dq":
        out = eso_to_dq_sentence(phi, log)
        fresh = {}
    elif to == "total":
        if quantifier is None:
            raise TranslationError("translation 'total' needs a quantifier name")
        out = eso_to_dq_total(phi, quantifier, arity, log)
        fresh = {}
    elif to == "eso":
        out = dq_to_eso(phi, relation, flavor, domain, log)
        fresh = introduced_symbols(phi, out)
    else:
        raise ValueError(f"unknown translation target {to!r}")
    return TranslationResult(out, fresh, log, min_size)
