"""
MK numbers and profile invariants
=================================

A walk through the singularity catalog and the profile evaluator. Every
number printed here is an exact ``Fraction``.
"""

from fractions import Fraction

from mkhunt import SingularityProfile, evaluate, parse_class
from mkhunt import catalog

# %% The catalog: m(p), tau(p) and the fractional part eps(p)
print("== catalog ==")
for name in ["A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"]:
    c = parse_class(name)
    m = catalog.mk_number(c)
    print(f"  {name:3s}  m={str(m):9s} tau={catalog.tjurina(c):2d}  eps={catalog.epsilon(c)}")

# m/3 always splits as tau + eps with 1/2 <= eps < 1
e8 = parse_class("E8")
assert catalog.mk_number(e8) / 3 == catalog.tjurina(e8) + catalog.epsilon(e8)

# %% Orbifold Euler numbers vanish at the log canonical threshold
print("\n== e_orb on its window ==")
a2 = parse_class("A2")
w = catalog.eorb_window(a2)
for k in range(5):
    alpha = w.lo + (w.hi - w.lo) * Fraction(k, 4)
    print(f"  A2  alpha={str(alpha):5s} e_orb={catalog.orbifold_euler(a2, alpha)}")

# %% The three MK sextics
print("\n== MK sextics ==")
for counts, irr in [({"A1": 6, "A3": 4}, False), ({"A2": 9}, True), ({"A1": 3, "D4": 4}, False)]:
    ev = evaluate(SingularityProfile(6, counts, irreducible=irr))
    print(f"  {counts}: m(C)={ev.total_mk}  MK={ev.is_mk}  nu={ev.freeness_defect}"
          + (f"  dual degree={ev.dual_degree}" if irr else ""))

# %% A near miss: the Steiner quartic with four lines
steiner = SingularityProfile(8, {"E7": 3, "D4": 1, "A3": 2, "A1": 6})
ev = evaluate(steiner)
print(f"\nSteiner octic: m(C)={ev.total_mk} = {float(ev.total_mk)}, target {ev.mk_target}, "
      f"defect {ev.mk_defect}")
