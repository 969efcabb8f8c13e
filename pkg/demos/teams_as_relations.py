"""
Reading a team as a relation
============================

A team formula becomes a second-order sentence about the relation of its
rows. Without independence atoms that relation only occurs negatively.
"""

from teamlogic import ESOEvaluator, dq_to_eso, enumerate_teams, eval_team, parse_formula, parse_structure, to_text
from teamlogic.transform import relation_negative

M = parse_structure("universe 2\nrel P/1 = {1}\n")

phi = parse_formula("dep(x,y)")
psi = dq_to_eso(phi)
print(to_text(psi))
print("relation only negative:", relation_negative(psi, "_R"))

ev = ESOEvaluator(M, psi)
agree = sum(ev({"_R": X.rows}) == eval_team(M, X, phi) for X in enumerate_teams(2, ("x", "y")))
print(f"agreement on {agree} of 16 teams")

# a quantified formula, and the flavor that also handles independence
phi = parse_formula("[most y] (P(y) | x=y)")
print(to_text(dq_to_eso(phi)))
print(to_text(dq_to_eso(parse_formula("perp(x;;y)"), flavor="i")))
