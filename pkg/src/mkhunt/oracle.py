"""Unpruned brute-force scan of the MK equation, used to cross-check the hunter."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from . import catalog
from .catalog import parse_class


def brute_force_solutions(degree: int, alphabet) -> list:
    """Every count vector in the Tjurina box that solves the MK equation.

    The box is ``0 <= c_t <= budget // tau(t)`` for each class, scanned in
    full (no remainder-based pruning). Lexicographically sorted.
    """
    alphabet = [parse_class(c) for c in alphabet]
    m = degree // 2
    budget = 3 * m * (m - 1) + 1
    target = Fraction(degree * (5 * degree - 6), 2)
    mks = [catalog.mk_number(c) for c in alphabet]
    den = 1
    for x in mks + [target]:
        den = den * x.denominator // math.gcd(den, x.denominator)
    coeffs = [int(x * den) for x in mks]
    rhs = int(target * den)
    taus = [catalog.tjurina(c) for c in alphabet]
    ranges = [np.arange(budget // t + 1, dtype=np.int64) for t in taus]

    out = []
    if len(alphabet) == 1:
        (r,) = ranges
        hits = r[(coeffs[0] * r == rhs) & (taus[0] * r <= budget)]
        return [(int(k),) for k in hits]
    # Outer axes in Python, last two axes as a broadcast grid.
    y, z = ranges[-2][:, None], ranges[-1][None, :]
    grid_val = coeffs[-2] * y + coeffs[-1] * z
    grid_tau = taus[-2] * y + taus[-1] * z
    for prefix in itertools.product(*(range(len(r)) for r in ranges[:-2])):
        val = sum(c * k for c, k in zip(coeffs, prefix))
        tau = sum(t * k for t, k in zip(taus, prefix))
        mask = (grid_val + val == rhs) & (grid_tau + tau <= budget)
        for i, j in zip(*np.nonzero(mask)):
            out.append(tuple(prefix) + (int(i), int(j)))
    return sorted(out)
