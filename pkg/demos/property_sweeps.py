"""
Checking properties by exhaustive search
========================================

Every formula of the small space is evaluated on every team of a
two-element structure. A failing property comes back with its witness.
"""

from teamlogic import SweepSpec, run_sweep

for prop in ("empty-team", "locality", "gq-faithfulness"):
    print(run_sweep(SweepSpec(prop, depth=1, sizes=(2,))).summary())

# independence atoms break downward closure
report = run_sweep(SweepSpec("downward-closure", source="list", formulas=("perp(x;;y)",)))
print(report.summary())
for key, value in report.counterexample.items():
    print(f"  {key}: {value}")
