"""Small worked examples across every module, each as a zero-argument check.

``EXAMPLES`` holds (id, check) pairs; a check returns True when the example
comes out as worked by hand. The acceptance run evaluates all of them next to
the golden team cases.
"""

from teamlogic.harness import SweepSpec, check_equiv, random_formula, run_sweep
from teamlogic.model import (
    Team, count_structures, enumerate_structures, enumerate_teams, extend_function,
    extend_set_function, extend_universal, parse_structure, restrict, team_rel, term_value,
)
from teamlogic.quantifiers import all_subsets, always_false, default_registry, dual, extensional
from teamlogic.semantics import eval_eso, eval_fo, eval_sentence, eval_team, flatness_check
from teamlogic.syntax import (
    And, Dep, Eq, Exists, ExistsFunc, ExistsRel, Forall, Func, GQ, Indep, NormalFormSentence, Rel,
    Signature, Var, dialect_of, free_variables, parse_formula, prefix_text, replace_term, to_text,
)
from teamlogic.transform import (
    dq_to_eso, eliminate_definable_q, eso_to_dq_sentence, eso_to_dq_total, flatten_functions, function_tuples,
    is_flat, relation_negative, to_normal_form,
)

x, y, z, u = Var("x"), Var("y"), Var("z"), Var("u")
P1 = Signature.parse("P/1")
REG = default_registry()


def M(n, text=""):
    return parse_structure(f"universe {n}\n{text}")


def team(vars, *rows):
    return Team(tuple(vars), set(rows))


def members(name, n):
    return set(REG[name].members(n))


def sets(*items):
    return {frozenset((a,) for a in s) for s in items}


def team_eq(phi, m, X, expected):
    return eval_team(m, X, parse_formula(phi)) is expected


def _flat_ffx():
    out = flatten_functions(to_normal_form(parse_formula("Ef f/1. A x. P(f(f(x)))")))
    tuples = function_tuples(out)
    return (is_flat(out) and len(out.functions) == 2 and all(len(ts) == 1 for ts in tuples.values())
            and check_equiv("Ef f/1. A x. P(f(f(x)))", out.to_formula(), sizes=(2, 3)).passed)


def _flat_constant_arg():
    phi = parse_formula("Ef f/1. A x. E(f(x), f(c()))")
    out = flatten_functions(to_normal_form(phi))
    return (is_flat(out) and len(out.functions) == 2 and len(out.universal_vars()) == 2
            and check_equiv(phi, out.to_formula(), sizes=(2,), sig=Signature.parse("E/2,c/0")).passed)


def _dep_to_eso():
    psi = dq_to_eso(parse_formula("dep(x,y)"))
    m = M(2)
    return relation_negative(psi, "_R") and all(
        eval_eso(m, psi, {"_R": X.rows}) == eval_team(m, X, parse_formula("dep(x,y)"))
        for X in enumerate_teams(2, ("x", "y"))
    )


def _main_theorem_count():
    r = run_sweep(SweepSpec("main-theorem", sizes=(2, 3), quantifier="most"))
    return r.passed and r.checked == (count_structures(P1, 2) + count_structures(P1, 3)) * 10


def _flatness_most():
    phi = parse_formula("[most y] E(x,y)")
    return all(flatness_check(m, X, phi)
               for m in enumerate_structures(Signature.parse("E/2"), 2) for X in enumerate_teams(2, ("x",)))


EXAMPLES = [
    # syntax
    ("parse-dep", lambda: parse_formula("dep(x,y)") == Dep((x, y))),
    ("parse-perp", lambda: parse_formula("perp(y; x; z)") == Indep((y,), (x,), (z,))),
    ("parse-scope-right", lambda: parse_formula("[most x] P(x) & E y. y=x")
        == GQ("most", ("x",), And(Rel("P", (x,)), Exists("y", Eq(y, x))))),
    ("parse-so-function", lambda: parse_formula("Ef f/1. A x. P(f(x))")
        == ExistsFunc("f", 1, Forall("x", Rel("P", (Func("f", (x,)),))))),
    ("parse-so-relation", lambda: parse_formula("ER R/2. A x. R(x,x)") == ExistsRel("R", 2, Forall("x", Rel("R", (x, x))))),
    ("parse-skolem-constant", lambda: parse_formula("Ef f/0. A x. E(x, f())").body.body == Rel("E", (x, Func("f", ())))),
    ("fv-exists", lambda: free_variables(parse_formula("E y. x=y")) == {"x"}),
    ("fv-gq", lambda: free_variables(parse_formula("[most z] E(z,w)")) == {"w"}),
    ("replace-term", lambda: replace_term(parse_formula("P(f(x))"), Func("f", (x,)), y) == Rel("P", (y,))),
    ("print-dep", lambda: to_text(Dep((x, y))) == "dep(x,y)"),
    ("print-conjunction", lambda: to_text(parse_formula("P(x) & ~P(y) & x=y")) == "((P(x) & ~P(y)) & x=y)"),
    ("print-prefix", lambda: prefix_text(NormalFormSentence(
        (("f", 1),), (("forall", ("x",)), ("most", ("y",))), Rel("P", (Func("f", (x,)),)))) == "Ef f/1. A x. [most y]"),
    # model
    ("term-var", lambda: term_value(M(2), {"x": 1}, x) == 1),
    ("term-func", lambda: term_value(M(2, "fun f/1 = {0->1, 1->0}\n"), {"x": 0}, Func("f", (x,))) == 1),
    ("term-const", lambda: term_value(M(3, "fun c/0 = {()->2}\n"), {}, Func("c", ())) == 2),
    ("ext-univ-unit", lambda: extend_universal(M(2), Team.unit(), "y") == team(("y",), (0,), (1,))),
    ("ext-univ-empty", lambda: not extend_universal(M(2), Team.empty(("x",)), "y").rows),
    ("ext-univ-row", lambda: extend_universal(M(2), team("x", (0,)), "y") == team("xy", (0, 0), (0, 1))),
    ("ext-func-const", lambda: extend_function(M(2), team("x", (0,), (1,)), "y", lambda s: 0).rows == {(0, 0), (1, 0)}),
    ("ext-func-empty", lambda: not extend_function(M(2), Team.empty(("x",)), "y", lambda s: 0).rows),
    ("ext-func-copy", lambda: extend_function(M(2), team("x", (0,), (1,)), "y", lambda s: s["x"]).rows == {(0, 0), (1, 1)}),
    ("ext-set-two", lambda: len(extend_set_function(M(2), Team.unit(), ("y",), lambda s: [(0,), (1,)])) == 2),
    ("ext-set-empty", lambda: not extend_set_function(M(2), team("x", (0,), (1,)), ("y",), lambda s: []).rows),
    ("ext-set-three", lambda: len(extend_set_function(
        M(2), team("x", (0,), (1,)), ("y",), {(0,): [(0,)], (1,): [(0,), (1,)]})) == 3),
    ("restrict-collapse", lambda: restrict(team("xy", (0, 0), (0, 1)), {"x"}) == team("x", (0,))),
    ("restrict-identity", lambda: restrict(team("xy", (0, 0), (1, 1)), {"x", "y"}) == team("xy", (0, 0), (1, 1))),
    ("restrict-unit", lambda: restrict(Team.unit(), set()) == Team.unit()),
    ("rel-rows", lambda: team_rel(team("xy", (0, 1), (1, 1))) == {(0, 1), (1, 1)}),
    ("rel-unit", lambda: team_rel(Team.unit()) == {()}),
    ("rel-extended", lambda: team_rel(extend_universal(M(2), team("x", (1,)), "y")) == {(1, 0), (1, 1)}),
    ("count-p1", lambda: len(list(enumerate_structures(P1, 2))) == 4),
    ("count-e2", lambda: len(list(enumerate_structures(Signature.parse("E/2"), 2))) == 16),
    ("count-p1-c", lambda: len(list(enumerate_structures(Signature.parse("P/1,c/0"), 2))) == 8),
    ("teams-x", lambda: len(list(enumerate_teams(2, ("x",)))) == 4),
    ("teams-xy", lambda: len(list(enumerate_teams(2, ("x", "y")))) == 16),
    # quantifiers
    ("members-forall", lambda: members("forall", 2) == sets({0, 1})),
    ("members-most", lambda: members("most", 3) == {A for A in all_subsets(3, 1) if len(A) >= 2}),
    ("minimal-exists", lambda: set(REG["exists"].minimal_members(2)) == sets({0}, {1})),
    ("minimal-forall", lambda: set(REG["forall"].minimal_members(3)) == sets({0, 1, 2})),
    ("minimal-most", lambda: set(REG["most"].minimal_members(3)) == sets({0, 1}, {0, 2}, {1, 2})),
    ("monotone-most", lambda: REG["most"].is_monotone_on(3)),
    ("monotone-extensional", lambda: not extensional("only0", 1, {2: [frozenset({(0,)})]}).is_monotone_on(2)),
    ("monotone-forall", lambda: REG["forall"].is_monotone_on(2) and REG["forall"].is_monotone_on(3)),
    ("nontrivial-exists", lambda: all(REG["exists"].check_nontriviality(n) == (True, True) for n in (1, 2, 3))),
    ("nontrivial-false", lambda: always_false().check_nontriviality(2) == (True, False)),
    ("dual-exists", lambda: all(dual(REG["exists"])(n, A) == REG["forall"](n, A)
                                for n in (1, 2, 3, 4) for A in all_subsets(n, 1))),
    ("dual-forall", lambda: all(dual(REG["forall"])(n, A) == REG["exists"](n, A)
                                for n in (1, 2, 3) for A in all_subsets(n, 1))),
    ("dual-most-3", lambda: {A for A in all_subsets(3, 1) if dual(REG["most"])(3, A)} == members("most", 3)),
    # team semantics
    ("eval-literal", lambda: team_eq("P(x)", M(2, "rel P/1 = {1}\n"), team("x", (0,), (1,)), False)),
    ("eval-dep", lambda: team_eq("dep(x,y)", M(2), team("xy", (0, 0), (0, 1)), False)),
    ("eval-most", lambda: team_eq("[most y] P(y)", M(3, "rel P/1 = {1,2}\n"), Team.unit(), True)
        and team_eq("[most y] P(y)", M(3, "rel P/1 = {2}\n"), Team.unit(), False)),
    ("eval-perp", lambda: team_eq("perp(x;;y)", M(2), team("xy", (0, 0), (1, 1)), False)
        and team_eq("perp(x;;y)", M(2), team("xy", (0, 0), (0, 1), (1, 0), (1, 1)), True)),
    ("sentence-dep", lambda: eval_sentence(M(2), parse_formula("A x. E y. dep(x,y)"))),
    ("sentence-constants", lambda: not eval_sentence(M(2), parse_formula("bot"))
        and eval_sentence(M(2), parse_formula("top"))),
    ("sentence-most-top", lambda: eval_sentence(M(3), parse_formula("[most x] top"))),
    ("fo-most", lambda: eval_fo(M(3, "rel P/1 = {1,2}\n"), {}, parse_formula("[most y] P(y)"))),
    ("fo-exists-empty", lambda: not eval_fo(M(2, "rel P/1 = {}\n"), {}, parse_formula("E x. P(x)"))),
    ("eso-skolem", lambda: eval_eso(M(2, "rel P/1 = {1}\n"), parse_formula("Ef f/1. A x. P(f(x))"))),
    ("eso-skolem-empty", lambda: not eval_eso(M(2, "rel P/1 = {}\n"), parse_formula("Ef f/1. A x. P(f(x))"))),
    ("eso-q-elim", lambda: eval_eso(M(2), parse_formula("ER P/1. (E u. P(u) & A x. (~P(x) | S(x)))"), {"S": {(0,)}})
        and not eval_eso(M(2), parse_formula("ER P/1. (E u. P(u) & A x. (~P(x) | S(x)))"), {"S": set()})),
    ("flatness-literal", lambda: flatness_check(M(2, "rel P/1 = {1}\n"), team("x", (0,), (1,)), parse_formula("P(x)"))
        and not eval_team(M(2, "rel P/1 = {1}\n"), team("x", (0,), (1,)), parse_formula("P(x)"))),
    ("flatness-most", _flatness_most),
    # translations
    ("nf-skolem-constant", lambda: to_text(to_normal_form(parse_formula("E x. A y. E(x,y)")).to_formula())
        == "Ef _f0/0. A _y0. E(_f0(),_y0)"),
    ("nf-relation", lambda: check_equiv("[most x] (P(x) | ER R/2. R(x,x))",
                                        to_normal_form(parse_formula("[most x] (P(x) | ER R/2. R(x,x))")).to_formula(),
                                        sizes=(2, 3), sig=P1).passed),
    ("flatten-ffx", _flat_ffx),
    ("flatten-unchanged", lambda: flatten_functions(to_normal_form(parse_formula("Ef f/1. A x. P(f(x))")))
        == to_normal_form(parse_formula("Ef f/1. A x. P(f(x))"))),
    ("flatten-constant-arg", _flat_constant_arg),
    ("dq-constant", lambda: to_text(eso_to_dq_sentence(parse_formula("Ef c/0. A x. E(x,c())")))
        == "A _x0. E _y0. (dep(_y0) & E(_x0,_y0))"
        and check_equiv("Ef c/0. A x. E(x,c())", eso_to_dq_sentence(parse_formula("Ef c/0. A x. E(x,c())")),
                        sizes=(2,)).passed),
    ("total-qs", lambda: check_equiv("[QS_2 x] P(x)", eso_to_dq_total(parse_formula("[QS_2 x] P(x)"), "QS_2"),
                                     sizes=(2, 3), sig=P1).passed),
    ("total-no-q", lambda: check_equiv("E x. P(x)", eso_to_dq_total(parse_formula("E x. P(x)"), "QS_2"),
                                       sizes=(1, 2, 3), sig=P1).passed),
    ("total-bot", lambda: check_equiv("[QS_2 x] bot", eso_to_dq_total(parse_formula("[QS_2 x] bot"), "QS_2"),
                                      sizes=(1, 2, 3), sig=P1).passed),
    ("eso-dep", _dep_to_eso),
    ("eso-empty-team", lambda: eval_eso(M(2, "rel P/1 = {}\n"), dq_to_eso(parse_formula("P(x)")), {"_R": set()})),
    ("q-elim-atleast2", lambda: check_equiv(
        "A y. [atleast2 x] (S(x) | x=y)",
        eliminate_definable_q(parse_formula("A y. [atleast2 x] (S(x) | x=y)"), "atleast2",
                              parse_formula("E u. E v. (u!=v & R(u) & R(v))")),
        sizes=(2, 3), sig=Signature.parse("S/1")).passed),
    ("q-elim-unchanged", lambda: eliminate_definable_q(parse_formula("A x. S(x)"), "exists", parse_formula("E u. R(u)"))
        == parse_formula("A x. S(x)")),
    # harness
    ("random-depth0", lambda: isinstance(random_formula(1, 0, P1), (Rel, Eq, Dep))
        or dialect_of(random_formula(1, 0, P1)) == "fo"),
    ("random-fo", lambda: all(dialect_of(random_formula(s, 3, P1, dialect="fo")) == "fo" for s in range(50))),
    ("random-seed", lambda: random_formula(42, 3, P1) == random_formula(42, 3, P1)),
    ("main-theorem-count", _main_theorem_count),
    ("equiv-skolem", lambda: check_equiv("Ef f/1. A x. P(f(x))", "A x. E y. (dep(x,y) & P(y))", sizes=(2, 3)).passed),
    ("equiv-top-bot", lambda: check_equiv("top", "bot", sizes=(2, 3)).checked == 1),
]
