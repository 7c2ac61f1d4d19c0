"""Shared test helpers: random exact data and the brute-force LP vertex oracle.

The vertex oracle is deliberately independent of the production simplex: it
enumerates every choice of active constraints, solves the square system by
rational Gaussian elimination, filters for feasibility and takes the best
objective value.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from haargap.roots import CartanElement


def random_trace_zero(rng: random.Random, n: int) -> CartanElement:
    coords = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)]
    mean = sum(coords, Fraction(0)) / n
    return CartanElement(tuple(c - mean for c in coords))


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Gaussian elimination; returns the unique solution or None if singular."""
    n = len(rows)
    M = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = Fraction(1) / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def brute_force_lp_minimum(model) -> Fraction:
    """Minimum of the model objective over all basic feasible vertices.

    Constraint list: the sum-to-one equality, every >= row, and every bound
    w_j >= 0.  A vertex is any feasible solution of nv active constraints.
    """
    nv = len(model.variables)
    rows: list[tuple[list[Fraction], Fraction]] = []
    rows.append(([Fraction(1)] * nv, Fraction(1)))  # equality, always re-checked as ==
    for row, rhs in zip(model.ge_rows, model.ge_rhs):
        rows.append(([Fraction(v) for v in row], Fraction(rhs)))
    for j in range(nv):
        bound = [Fraction(0)] * nv
        bound[j] = Fraction(1)
        rows.append((bound, Fraction(0)))

    best = None
    for combo in itertools.combinations(range(len(rows)), nv):
        if 0 not in combo:
            continue  # the equality must always be active
        x = _solve_square([rows[i][0] for i in combo], [rows[i][1] for i in combo])
        if x is None:
            continue
        if sum(x, Fraction(0)) != 1:
            continue
        if any(v < 0 for v in x):
            continue
        feasible = all(
            sum((c * v for c, v in zip(coeffs, x)), Fraction(0)) >= rhs
            for coeffs, rhs in rows[1 : 1 + len(model.ge_rows)]
        )
        if not feasible:
            continue
        value = sum((c * v for c, v in zip(model.objective, x)), Fraction(0))
        if best is None or value < best:
            best = value
    return best
