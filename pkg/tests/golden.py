"""Hand-checked evaluation cases shared by the unit tests and the acceptance run.

Team cases are (id, structure, team, formula, expected[, config changes]).
Structures and teams use the file formats of :mod:`teamlogic.model`.
"""

M2_P1 = "universe 2\nrel P/1 = {1}\n"
M2_P0 = "universe 2\nrel P/1 = {0}\n"
M2_PE = "universe 2\nrel P/1 = {}\n"
M3_P12 = "universe 3\nrel P/1 = {1, 2}\n"
M3_P2 = "universe 3\nrel P/1 = {2}\n"
M3_PE = "universe 3\nrel P/1 = {}\n"
M2_E = "universe 2\nrel E/2 = {(0,1), (1,1)}\nrel P/1 = {1}\n"

X_EPS = "vars\neps\n"
X_EMPTY_XY = "vars x y\n"
X_X01 = "vars x\n0\n1\n"
X_X1 = "vars x\n1\n"
X_DIAG = "vars x y\n0 0\n1 1\n"
X_FULL = "vars x y\n0 0\n0 1\n1 0\n1 1\n"
X_SAMEX = "vars x y\n0 0\n0 1\n"
X_FUNC = "vars x y\n0 1\n1 1\n"
X_OVERLAP3 = "vars x y\n0 0\n0 1\n1 0\n1 1\n1 2\n2 1\n2 2\n"

TEAM_CASES = [
    # literals are checked row by row
    ("lit-rel-fails", M2_P1, X_X01, "P(x)", False),
    ("lit-rel-holds", M2_P1, X_X1, "P(x)", True),
    ("lit-negrel", M2_P1, "vars x\n0\n", "~P(x)", True),
    ("lit-eq", M2_P1, X_DIAG, "x=y", True),
    ("lit-neq", M2_P1, X_FULL, "x!=y", False),
    ("top-bot-unit", M2_P1, X_EPS, "(top & ~bot)", True),
    ("bot-unit", M2_P1, X_EPS, "bot", False),
    # dependence atoms and their negation
    ("dep-same-x", M2_P1, X_SAMEX, "dep(x,y)", False),
    ("dep-function", M2_P1, X_FUNC, "dep(x,y)", True),
    ("dep-constancy", M2_P1, X_FUNC, "dep(y)", True),
    ("dep-constancy-fails", M2_P1, X_FULL, "dep(x)", False),
    ("negdep-nonempty", M2_P1, X_FUNC, "~dep(x,y)", False),
    ("negdep-empty", M2_P1, X_EMPTY_XY, "~dep(x,y)", True),
    # independence
    ("perp-diag", M2_P1, X_DIAG, "perp(x;;y)", False),
    ("perp-full", M2_P1, X_FULL, "perp(x;;y)", True),
    ("perp-dep-pattern", M2_P1, X_FUNC, "perp(y;x;y)", True),
    ("perp-dep-pattern-fails", M2_P1, X_SAMEX, "perp(y;x;y)", False),
    ("perp-conditional", M2_P1, X_DIAG, "perp(x;y;x)", True),
    # connectives
    ("and", M2_P1, X_FUNC, "(dep(x,y) & P(y))", True),
    ("or-split", M2_P1, X_X01, "(P(x) | ~P(x))", True),
    ("or-dep-split", M2_P1, X_FULL, "(dep(x,y) | dep(x,y))", True),
    ("or-dep-too-many", M3_PE, "vars x y\n0 0\n0 1\n0 2\n", "(dep(x,y) | dep(x,y))", False),
    ("or-cover-needs-overlap", M3_PE, X_OVERLAP3, "(perp(x;;y) | perp(x;;y))", True),
    ("or-strict-no-overlap", M3_PE, X_OVERLAP3, "(perp(x;;y) | perp(x;;y))", False, {"or_mode": "strict"}),
    # quantifiers
    ("exists-function", M2_P1, X_X01, "E y. (dep(y) & P(y))", True),
    ("exists-dep-fails", M2_P1, X_X01, "E y. (dep(y) & x=y)", False),
    ("forall-dep", M2_P1, X_EPS, "A x. E y. dep(x,y)", True),
    ("forall-extends", M2_P1, X_EPS, "A x. P(x)", False),
    ("forall-negdep", M2_P1, X_EPS, "A x. ~dep(x)", False),
    # generalized quantifiers: witnesses F(s) must lie in Q_M
    ("most-holds", M3_P12, X_EPS, "[most y] P(y)", True),
    ("most-fails", M3_P2, X_EPS, "[most y] P(y)", False),
    ("most-top", M3_PE, X_EPS, "[most x] top", True),
    ("exists-gq", M2_P1, X_EPS, "[exists x] P(x)", True),
    ("forall-gq", M2_P1, X_EPS, "[forall x] P(x)", False),
    ("atleast2-fails", M3_P2, X_EPS, "[atleast2 x] P(x)", False),
    ("atleast2-holds", M3_P12, X_EPS, "[atleast2 x] P(x)", True),
    ("qs-full-required", M2_P1, X_EPS, "[QS_2 x] P(x)", False),
    ("qs-nonempty-elsewhere", M3_P2, X_EPS, "[QS_2 x] P(x)", True),
    ("most-per-row", M3_P12, "vars x\n0\n1\n", "[most y] (P(y) | x=y)", True),
    ("most-dep-witness", M3_P12, X_EPS, "[most x] E y. (dep(y) & P(y))", True),
    ("most-minimal", M3_P12, X_EPS, "[most y] P(y)", True, {"gq_search": "minimal"}),
    # the empty team satisfies everything
    ("empty-team-bot", M2_P1, X_EMPTY_XY, "bot", True),
    ("empty-team-perp", M2_P1, X_EMPTY_XY, "(perp(x;;y) & [most x] bot)", True),
]

# (id, structure, formula, expected) with the empty assignment
SENTENCE_CASES = [
    ("forall-exists-dep", M2_P1, "A x. E y. dep(x,y)", True),
    ("bot", M2_P1, "bot", False),
    ("top", M2_P1, "top", True),
    ("most-top", M3_PE, "[most x] top", True),
]

# (id, structure, assignment, formula, expected)
FO_CASES = [
    ("most-satisfaction-set", M3_P12, {}, "[most y] P(y)", True),
    ("exists-empty", M2_PE, {}, "E x. P(x)", False),
    ("most-open", M2_E, {"x": 0}, "[most y] E(x,y)", False),
    ("most-open-full", M2_E, {"x": 0}, "[most y] (E(x,y) | x=y)", True),
]

# (id, structure, relation interpretation, formula, expected)
ESO_CASES = [
    ("skolem-holds", M2_P1, {}, "Ef f/1. A x. P(f(x))", True),
    ("skolem-fails", M2_PE, {}, "Ef f/1. A x. P(f(x))", False),
    ("exists-elim-holds", M2_PE, {"S": {(0,)}}, "ER P2/1. (E u. P2(u) & A x. (~P2(x) | S(x)))", True),
    ("exists-elim-fails", M2_PE, {"S": set()}, "ER P2/1. (E u. P2(u) & A x. (~P2(x) | S(x)))", False),
    ("constant", M2_P1, {}, "Ef c/0. (P(c()) & A x. (x=c() | ~P(x)))", True),
    ("team-relation", M2_P1, {"R": {(0, 1), (1, 1)}}, "A x. A y. (~R(x,y) | P(y))", True),
]
