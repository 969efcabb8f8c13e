import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from teamlogic.errors import DialectError, ParseError, SignatureError
from teamlogic.harness import random_formula
from teamlogic.quantifiers import default_registry
from teamlogic.syntax import (
    And, Dep, Eq, Exists, ExistsFunc, ExistsRel, Forall, Func, GQ, Indep, Neg, NormalFormSentence,
    Or, Rel, Signature, Var, check_dialect, dialect_of, free_symbols, free_variables, parse_formula,
    parse_team_formula, prefix_text, rename_bound_apart, replace_subformulas, replace_term, substitute,
    substitute_relation, to_text,
)
from teamlogic.syntax.ops import only_negative

x, y, z = Var("x"), Var("y"), Var("z")
P1 = Signature.parse("P/1")


def test_dep_atom():
    assert parse_formula("dep(x,y)") == Dep((x, y))


def test_perp_atom():
    assert parse_formula("perp(y; x; z)") == Indep((y,), (x,), (z,))


def test_perp_with_empty_condition():
    assert parse_formula("perp(x;;y)") == Indep((x,), (), (y,))


def test_quantifier_scope_extends_right():
    phi = parse_formula("[most x] P(x) & E y. y=x")
    assert phi == GQ("most", ("x",), And(Rel("P", (x,)), Exists("y", Eq(y, x))))


def test_second_order_binders():
    assert parse_formula("Ef f/1. A x. P(f(x))") == ExistsFunc("f", 1, Forall("x", Rel("P", (Func("f", (x,)),))))
    assert parse_formula("ER R/2. A x. R(x,x)") == ExistsRel("R", 2, Forall("x", Rel("R", (x, x))))


def test_skolem_constant_sentence():
    phi = parse_formula("Ef f/0. A x. E(x, f())")
    assert phi.body.body == Rel("E", (x, Func("f", ())))


def test_and_binds_tighter_than_or():
    assert parse_formula("P(x) | P(y) & x=y") == Or(Rel("P", (x,)), And(Rel("P", (y,)), Eq(x, y)))


@pytest.mark.parametrize("text", [
    "~(P(x) & P(y))",
    "~perp(x;;y)",
    "~~P(x)",
    "P(x",
    "E . P(x)",
    "[most] P(x)",
    "[most x x] P(x)",
    "dep()",
    "Ef F/1. P(F(x))",
    "ER r/1. r(x)",
])
def test_parse_errors(text):
    with pytest.raises((ParseError, SignatureError)):
        parse_formula(text)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_formula("P(x) & & P(y)")
    assert info.value.position is not None


def test_signature_check():
    with pytest.raises(SignatureError):
        parse_formula("Q(x)", sig=P1)
    with pytest.raises(SignatureError):
        parse_formula("P(x,y)", sig=P1)


def test_quantifier_arity_checked_against_registry():
    with pytest.raises(SignatureError):
        parse_formula("[most x y] P(x)", registry=default_registry())
    with pytest.raises(SignatureError):
        parse_formula("[nosuch x] P(x)", registry=default_registry())


def test_team_formula_rejects_second_order():
    with pytest.raises(ParseError):
        parse_team_formula("Ef f/1. P(f(x))")


def test_negated_constants_fold():
    assert to_text(parse_formula("~top")) == "bot"
    assert to_text(parse_formula("~bot")) == "top"


@pytest.mark.parametrize("text, fv", [
    ("dep(x,y)", {"x", "y"}),
    ("E y. x=y", {"x"}),
    ("[most z] E(z,w)", {"w"}),
    ("perp(x; y; z)", {"x", "y", "z"}),
    ("Ef f/1. A x. P(f(x))", set()),
])
def test_free_variables(text, fv):
    assert free_variables(parse_formula(text)) == fv


def test_free_symbols_skip_bound_ones():
    rels, funs = free_symbols(parse_formula("ER R/1. Ef f/1. (R(f(x)) & S(g(x)))"))
    assert rels == {"S": 1}
    assert funs == {"g": 1}


def test_printer_dep():
    assert to_text(Dep((x, y))) == "dep(x,y)"


def test_printer_parenthesizes_conjunctions():
    assert to_text(And(And(Rel("P", (x,)), Rel("P", (y,))), Eq(x, y))) == "((P(x) & P(y)) & x=y)"


def test_prefix_text():
    nf = NormalFormSentence((("f", 1),), (("forall", ("x",)), ("most", ("y",))), Rel("P", (Func("f", (x,)),)))
    assert prefix_text(nf) == "Ef f/1. A x. [most y]"


def test_replace_term():
    assert replace_term(parse_formula("P(f(x))"), Func("f", (x,)), y) == Rel("P", (y,))


def test_substitute_variable():
    assert to_text(substitute(parse_formula("P(x) & E x. x=y"), {"x": Var("u")})) == "(P(u) & E x. x=y)"


def test_substitute_avoids_capture():
    out = substitute(parse_formula("E y. x=y"), {"x": Var("y")})
    assert isinstance(out, Exists) and out.var != "y"
    assert free_variables(out) == {"y"}


def test_substitute_relation_for_definition():
    phi = parse_formula("(R(x) & A y. (~R(y) | P(y)))")
    out = substitute_relation(phi, "R", ("u",), parse_formula("u=u"))
    assert "R(" not in to_text(out)


def test_replace_q_subformulas_with_bot():
    phi = parse_formula("(P(x) | [most y] P(y))")
    out = replace_subformulas(phi, lambda n: isinstance(n, GQ), lambda n: parse_formula("bot"))
    assert to_text(out) == "(P(x) | bot)"


def test_rename_bound_apart():
    phi = parse_formula("((E x. P(x)) & E x. ~P(x))")
    out = rename_bound_apart(phi)
    assert out.left.var != out.right.var


def test_only_negative():
    assert only_negative(parse_formula("A x. (~R(x) | P(x))"), "R")
    assert not only_negative(parse_formula("A x. (R(x) | P(x))"), "R")


def test_dialects():
    assert dialect_of(parse_formula("P(x)")) == "fo"
    assert dialect_of(parse_formula("dep(x,y)")) == "dq"
    assert dialect_of(parse_formula("perp(x;;y)")) == "iq"
    assert dialect_of(parse_formula("Ef f/1. P(f(x))")) == "eso"
    with pytest.raises(DialectError):
        check_dialect(parse_formula("dep(x,y)"), "fo")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 3), st.sampled_from(["fo", "dq", "iq"]))
def test_print_parse_roundtrip(seed, depth, dialect):
    phi = random_formula(seed, depth, Signature.parse("P/1,E/2"), ("exists", "forall", "most"), dialect)
    assert parse_formula(to_text(phi)) == phi


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_eso_roundtrip(seed):
    phi = random_formula(seed, 3, P1, dialect="eso", functions={"f": 1, "c": 0})
    assert parse_formula(to_text(phi)) == phi


def test_random_formula_depth_zero_is_atom():
    phi = random_formula(1, 0, P1)
    assert isinstance(phi, (Rel, Eq, Dep, Neg, Indep))


def test_random_formula_fo_has_no_team_atoms():
    for seed in range(100):
        assert dialect_of(random_formula(seed, 3, P1, dialect="fo")) == "fo"


def test_random_formula_deterministic():
    assert random_formula(42, 3, P1) == random_formula(42, 3, P1)
