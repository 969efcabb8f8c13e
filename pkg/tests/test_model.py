import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from teamlogic.errors import CapExceeded, EvaluationError, SignatureError
from teamlogic.model import (
    Structure, Team, count_structures, count_teams, enumerate_structures, enumerate_teams,
    extend_function, extend_set_function, extend_universal, format_structure, format_team,
    parse_structure, parse_team, restrict, subteams, team_rel, term_value,
)
from teamlogic.syntax import Func, Signature, Var

x = Var("x")


def M(n, rels=None, funs=None, sig="P/1"):
    return Structure(n, Signature.parse(sig), rels or {"P": frozenset()}, funs or {})


def test_term_value_variable():
    assert term_value(M(2), {"x": 1}, x) == 1


def test_term_value_function():
    m = M(2, funs={"f": {(0,): 1, (1,): 0}}, sig="P/1,f/1")
    assert term_value(m, {"x": 0}, Func("f", (x,))) == 1


def test_term_value_constant():
    m = M(3, funs={"c": {(): 2}}, sig="P/1,c/0")
    assert term_value(m, {}, Func("c", ())) == 2


def test_term_value_unbound():
    with pytest.raises(EvaluationError):
        term_value(M(2), {}, x)


def test_extend_universal_unit():
    assert extend_universal(M(2), Team.unit(), "y") == Team(("y",), {(0,), (1,)})


def test_extend_universal_empty():
    assert extend_universal(M(2), Team.empty(("x",)), "y").rows == frozenset()


def test_extend_universal_one_row():
    X = Team(("x",), {(0,)})
    assert extend_universal(M(2), X, "y") == Team(("x", "y"), {(0, 0), (0, 1)})


def test_extend_universal_rebinds_in_place():
    X = Team(("x", "y"), {(0, 0)})
    assert extend_universal(M(2), X, "x") == Team(("x", "y"), {(0, 0), (1, 0)})


def test_extend_function_constant():
    X = Team(("x",), {(0,), (1,)})
    assert extend_function(M(2), X, "y", lambda s: 0).rows == {(0, 0), (1, 0)}


def test_extend_function_empty():
    assert extend_function(M(2), Team.empty(("x",)), "y", lambda s: 0).rows == frozenset()


def test_extend_function_copy():
    X = Team(("x",), {(0,), (1,)})
    assert extend_function(M(2), X, "y", lambda s: s["x"]).rows == {(0, 0), (1, 1)}


def test_extend_function_rejects_values_outside():
    with pytest.raises(EvaluationError):
        extend_function(M(2), Team.unit(), "y", lambda s: 5)


def test_extend_set_function():
    assert len(extend_set_function(M(2), Team.unit(), ("y",), lambda s: [(0,), (1,)])) == 2
    X = Team(("x",), {(0,), (1,)})
    assert extend_set_function(M(2), X, ("y",), lambda s: []).rows == frozenset()


def test_extend_set_function_collapses():
    X = Team(("x",), {(0,), (1,)})
    F = {(0,): [(0,)], (1,): [(0,), (1,)]}
    assert extend_set_function(M(2), X, ("y",), F).rows == {(0, 0), (1, 0), (1, 1)}
    # overwriting x makes rows coincide
    assert extend_set_function(M(2), X, ("x",), F).rows == {(0,), (1,)}


def test_restrict():
    X = Team(("x", "y"), {(0, 0), (0, 1)})
    assert restrict(X, {"x"}) == Team(("x",), {(0,)})
    assert restrict(X, {"x", "y"}) == X
    assert restrict(Team.unit(), set()) == Team.unit()


def test_restrict_outside_domain():
    with pytest.raises(EvaluationError):
        restrict(Team(("x",), {(0,)}), {"y"})


def test_team_rel():
    assert team_rel(Team(("x", "y"), {(0, 1), (1, 1)})) == {(0, 1), (1, 1)}
    assert team_rel(Team.unit()) == {()}


def test_team_rel_after_universal():
    X = extend_universal(M(2), Team(("x",), {(1,)}), "y")
    assert team_rel(X) == {(1, 0), (1, 1)}


@pytest.mark.parametrize("sig, n, count", [
    ("P/1", 2, 4),
    ("E/2", 2, 16),
    ("P/1,c/0", 2, 8),
    ("f/1", 3, 27),
])
def test_count_structures(sig, n, count):
    s = Signature.parse(sig)
    assert count_structures(s, n) == count
    structures = list(enumerate_structures(s, n))
    assert len(structures) == count
    assert len(set(structures)) == count


def test_enumerate_structures_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_structures(Signature.parse("E/2"), 4, cap=1000))


@pytest.mark.parametrize("n, vars, count", [(2, ("x",), 4), (2, ("x", "y"), 16), (3, ("x",), 8)])
def test_enumerate_teams(n, vars, count):
    teams = list(enumerate_teams(n, vars))
    assert len(teams) == count == count_teams(n, len(vars))
    assert len(set(teams)) == count


def test_teams_over_empty_domain():
    teams = list(enumerate_teams(2, ()))
    assert teams == [Team.empty(), Team.unit()]
    assert Team.empty() != Team.unit()


def test_subteams():
    X = Team(("x",), {(0,), (1,)})
    assert {len(Y) for Y in subteams(X)} == {0, 1, 2}
    assert all(Y.issubset(X) for Y in subteams(X))


def test_team_rejects_repeated_vars():
    with pytest.raises(ValueError):
        Team(("x", "x"), set())


def test_structure_file_roundtrip():
    text = "universe 3\nrel E/2 = {(0,1), (2,2)}\nrel P/1 = {1}\nfun c/0 = {()->2}\nfun f/1 = {0->1, 1->2, 2->0}\n"
    m = parse_structure(text)
    assert m.size == 3
    assert m.relations["E"] == {(0, 1), (2, 2)}
    assert m.functions["f"][(2,)] == 0
    assert parse_structure(format_structure(m)) == m


def test_structure_labels():
    m = parse_structure("universe a b\nrel P/1 = {b}\n")
    assert m.relations["P"] == {(1,)}


@pytest.mark.parametrize("text", [
    "rel P/1 = {0}\n",
    "universe 2\nrel P/1 = {5}\n",
    "universe 2\nrel P/1 = {(0,1)}\n",
    "universe 2\nfun f/1 = {0->1}\n",
    "universe 2\nbogus\n",
])
def test_structure_file_errors(text):
    with pytest.raises(SignatureError):
        parse_structure(text)


def test_team_file():
    X = parse_team("vars x y\n0 1\n1 1  # comment\n")
    assert X == Team(("x", "y"), {(0, 1), (1, 1)})
    assert parse_team(format_team(X)) == X
    assert parse_team("vars\neps\n") == Team.unit()
    assert parse_team("vars\n") == Team.empty()


def test_team_file_errors():
    with pytest.raises(SignatureError):
        parse_team("x y\n0 1\n")
    with pytest.raises(SignatureError):
        parse_team("vars x\n0 1\n")
    with pytest.raises(SignatureError):
        parse_team("vars x\n4\n", n=2)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3), st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2))))
def test_team_roundtrip(n, rows):
    rows = {r for r in rows if max(r) < n}
    X = Team(("x", "y"), rows)
    assert parse_team(format_team(X)) == X
    assert restrict(extend_universal(Structure(n, Signature.parse("P/1"), {"P": frozenset()}, {}), X, "z"), {"x", "y"}) == X
