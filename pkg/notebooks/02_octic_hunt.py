"""
Hunting MK octics
=================

Degree 8 with A1, A2, A3 and D4 points. The MK equation has eight solutions
inside the Tjurina box; each one is then eliminated by a known result or by
the orbifold BMY inequality.
"""

from mkhunt import HuntRequest, hunt
from mkhunt.hunter import render_summary
from mkhunt.oracle import brute_force_solutions

req = HuntRequest(degree=8, alphabet=("A1", "A2", "A3", "D4"))
report = hunt(req)

# %% Raw solutions, cross-checked against an unpruned numpy scan
raw = list(report.raw_solutions)
print("raw solutions:", raw)
assert raw == brute_force_solutions(8, req.alphabet)

# %% Why each candidate fails
print()
print(render_summary(report))

# %% Without the literature facts the 17-cusp octic falls to BMY at 3/8
bare = hunt(HuntRequest(8, req.alphabet, enabled_constraints={"langer_bmy"}))
first = bare.outcomes[0]
print("\nBMY only:", first.counts, "->", first.eliminating_verdict.parameters["alpha"])

# %% Degree 10 over A1, A3, D4 has no solutions at all
ten = hunt(HuntRequest(10, ("A1", "A3", "D4")))
print("\ndegree 10:", ten.obstruction)
