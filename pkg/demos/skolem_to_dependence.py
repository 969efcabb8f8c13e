"""
From function quantifiers to dependence atoms
=============================================

An existential second-order sentence is brought into normal form, its
function symbols are flattened, and the result becomes a team sentence.
"""

from teamlogic import check_equiv, eso_to_dq, flatten_functions, parse_formula, to_normal_form, to_text

phi = parse_formula("[most x] E y. (P(y) & x!=y)")
nf = to_normal_form(phi)
print("sentence:      ", to_text(phi))
print("normal form:   ", nf)

# nested applications get guarded by fresh universal variables
nested = to_normal_form(parse_formula("Ef f/1. A x. P(f(f(x)))"))
flat = flatten_functions(nested)
print("nested:        ", nested)
print("flattened:     ", flat)

# each flat function becomes an existential variable with a dependence atom
psi = eso_to_dq(flat)
print("team sentence: ", to_text(psi))

report = check_equiv(nested.to_formula(), psi, sizes=(1, 2, 3))
print(report.summary())
