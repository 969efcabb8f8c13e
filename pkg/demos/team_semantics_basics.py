"""
Teams, dependence and most
==========================

A formula is checked against a set of assignments at once.
"""

from teamlogic import Team, eval_fo, eval_team, parse_formula, parse_structure, parse_team

M = parse_structure("universe 3\nrel P/1 = {1, 2}\n")

# two rows with the same x but different y: y is not a function of x
X = parse_team("vars x y\n0 1\n0 2\n1 2\n")
print("dep(x,y) on X:", eval_team(M, X, parse_formula("dep(x,y)")))

# dropping a row repairs it, since dependence is closed under subteams
Y = parse_team("vars x y\n0 1\n1 2\n")
print("dep(x,y) on Y:", eval_team(M, Y, parse_formula("dep(x,y)")))

# negated dependence only holds of the empty team
print("~dep(x,y) on Y:", eval_team(M, Y, parse_formula("~dep(x,y)")))
print("~dep(x,y) on the empty team:", eval_team(M, Team.empty(("x", "y")), parse_formula("~dep(x,y)")))

# [most y] picks for each row a set of witnesses that is a majority
phi = parse_formula("[most y] P(y)")
print(f"[most y] P(y): {eval_team(M, Team.unit(), phi)} (first-order: {eval_fo(M, {}, phi)})")

# existential choice may depend on x; dep(y) forces one value for the whole team
X01 = parse_team("vars x\n0\n1\n")
print("E y. (x=y):", eval_team(M, X01, parse_formula("E y. x=y")))
print("E y. (dep(y) & x=y):", eval_team(M, X01, parse_formula("E y. (dep(y) & x=y)")))

# independence is not downward closed
full = parse_team("vars x y\n0 0\n0 1\n1 0\n1 1\n")
diag = parse_team("vars x y\n0 0\n1 1\n")
print("perp(x;;y) on the full square:", eval_team(M, full, parse_formula("perp(x;;y)")))
print("perp(x;;y) on the diagonal:", eval_team(M, diag, parse_formula("perp(x;;y)")))
