"""
Sweeping alpha
==============

The BMY inequality depends on a parameter alpha. Here we tabulate the slack
``rhs - lhs`` on a Farey grid for two octic candidates and plot where it
turns negative.
"""

from fractions import Fraction

import numpy as np

from mkhunt import SingularityProfile
from mkhunt.constraints import alpha_grid, bmy_window, check_langer_bmy, find_excluding_alpha

candidates = {
    "b": SingularityProfile(8, {"A1": 1, "A2": 8, "A3": 6}),
    "c": SingularityProfile(8, {"A1": 2, "A2": 8, "A3": 3, "D4": 2}),
}

for label, p in candidates.items():
    grid = alpha_grid(bmy_window(p.degree, p.counts), 100)
    slack = np.array([float(v.rhs - v.lhs) for v in (check_langer_bmy(p, a) for a in grid)])
    worst = int(np.argmin(slack))
    print(f"case {label}: {len(grid)} grid points, min slack {slack[worst]:.6f} at alpha={grid[worst]}")
    hit = find_excluding_alpha(p)
    print(f"  first violating alpha: {hit[0]}" if hit else "  never violated")

# %% The margin is tiny: exact arithmetic matters
v = check_langer_bmy(candidates["c"], Fraction(30, 67))
print(f"\ncase c at 30/67: lhs - rhs = {v.lhs - v.rhs}")

# %% Optional plot
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    fig, ax = plt.subplots()
    for label, p in candidates.items():
        grid = alpha_grid(bmy_window(p.degree, p.counts), 100)
        ax.plot([float(a) for a in grid],
                [float(check_langer_bmy(p, a).rhs - check_langer_bmy(p, a).lhs) for a in grid],
                label=f"case {label}")
    ax.axhline(0, color="k", lw=0.5)
    ax.set_xlabel("alpha")
    ax.set_ylabel("rhs - lhs")
    ax.legend()
    fig.savefig("bmy_slack.png", dpi=120)
    print("wrote bmy_slack.png")
