"""
Curves with only E-type points
==============================

For a single class the MK equation fixes the number of points as a quadratic
in m = n/2, and BMY at the log canonical threshold bounds it by another
quadratic. Comparing the two settles every degree at once (E6 below a
threshold, E8 everywhere); E7 is checked degree by degree.
"""

from mkhunt import HuntRequest, hunt
from mkhunt.hunter import bmy_degree_threshold

for name in ("E6", "E7", "E8"):
    t = bmy_degree_threshold(name)
    print(f"{name}: MK count {t['mk_quadratic']}, BMY cap {t['bmy_quadratic']}, excluded: {t['excluded']}")

# %% Degree-by-degree E7 sweep
kinds = {}
for n in range(6, 120, 2):
    rep = hunt(HuntRequest(n, ("E7",)))
    assert not rep.survivors
    kinds.setdefault(rep.degree_eliminator, []).append(n)
for kind, degrees in kinds.items():
    print(f"E7 eliminated by {kind}: degrees {degrees[0]}..{degrees[-1]} ({len(degrees)} values)")
