"""
Dual quantifiers and sizes where Q accepts no set
=================================================

"""

from teamlogic import check_equiv, default_registry, dual, eso_to_dq_total, parse_formula, to_text
from teamlogic.quantifiers import all_subsets

reg = default_registry()
most = reg["most"]
d = dual(most)

# at size 3 most is self-dual, at size 2 its dual accepts half the universe
for n in (2, 3):
    accepted = [sorted(a for (a,) in A) for A in all_subsets(n, 1) if d(n, A)]
    print(f"most^d at size {n}:", accepted)

# QS_2 needs the whole universe at size 2 and any nonempty set elsewhere
phi = parse_formula("[QS_2 x] P(x)")
total = eso_to_dq_total(phi, "QS_2")
print(to_text(total))
print(check_equiv(phi, total, sizes=(1, 2, 3)).summary())
