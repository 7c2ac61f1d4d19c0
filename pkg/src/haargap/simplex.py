"""Exact two-phase simplex over the rationals.

Dense tableau implementation for small problems: every entry is a Fraction,
pivoting follows Bland's rule (lowest eligible index, ties by lowest basic
variable), which rules out cycling and makes the solved vertex deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

STATUS_OPTIMAL = "optimal"
STATUS_INFEASIBLE = "infeasible"
STATUS_UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class SimplexResult:
    status: str
    x: tuple[Fraction, ...] | None
    objective: Fraction | None
    basis: tuple[int, ...] | None


def _pivot(T, rhs, basis, row, col):
    piv = T[row][col]
    inv = Fraction(1) / piv
    T[row] = [v * inv for v in T[row]]
    rhs[row] *= inv
    prow = T[row]
    prhs = rhs[row]
    for i in range(len(T)):
        if i == row:
            continue
        f = T[i][col]
        if f:
            ti = T[i]
            T[i] = [a - f * b for a, b in zip(ti, prow)]
            rhs[i] -= f * prhs
    basis[row] = col


def _bland_entering(r, allowed_cols):
    for j in allowed_cols:
        if r[j] < 0:
            return j
    return None


def _ratio_leaving(T, rhs, basis, col):
    best = None
    best_row = None
    for i in range(len(T)):
        a = T[i][col]
        if a > 0:
            ratio = rhs[i] / a
            if best is None or ratio < best or (ratio == best and basis[i] < basis[best_row]):
                best = ratio
                best_row = i
    return best_row


def _reduced_costs(T, basis, c):
    # r_j = c_j - c_B . T[:, j]
    r = [Fraction(v) for v in c]
    for i, bi in enumerate(basis):
        cb = c[bi]
        if cb:
            ti = T[i]
            for j in range(len(r)):
                if ti[j]:
                    r[j] -= cb * ti[j]
    return r


def _run_phase(T, rhs, basis, r, allowed_cols):
    while True:
        col = _bland_entering(r, allowed_cols)
        if col is None:
            return STATUS_OPTIMAL
        row = _ratio_leaving(T, rhs, basis, col)
        if row is None:
            return STATUS_UNBOUNDED
        rc = r[col]
        _pivot(T, rhs, basis, row, col)
        prow = T[row]
        if rc:
            for j in range(len(r)):
                if prow[j]:
                    r[j] -= rc * prow[j]


def solve_standard_form(A, b, c) -> SimplexResult:
    """Minimize c.x subject to A x = b, x >= 0; all data rational.

    Rows with negative right-hand side are negated up front.  Returns the
    optimum with a vertex and the final basis, or an infeasible/unbounded
    status.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    T = []
    rhs = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        T.append(row)
        rhs.append(bi)
    c = [Fraction(v) for v in c]
    if len(c) != n:
        raise ValueError(f"objective length {len(c)} does not match {n} columns")

    # phase 1: artificial basis
    for i in range(m):
        T[i] = T[i] + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
    basis = [n + i for i in range(m)]
    phase1_c = [Fraction(0)] * n + [Fraction(1)] * m
    r = _reduced_costs(T, basis, phase1_c)
    status = _run_phase(T, rhs, basis, r, range(n + m))
    if status == STATUS_UNBOUNDED:
        # cannot happen: phase-1 objective is bounded below by zero
        raise RuntimeError("phase-1 simplex reported unbounded")
    if sum(phase1_c[bi] * rhs[i] for i, bi in enumerate(basis)) > 0:
        return SimplexResult(STATUS_INFEASIBLE, None, None, None)

    # drive artificials out of the basis; drop redundant rows
    keep = []
    for i in range(len(T)):
        if basis[i] < n:
            keep.append(i)
            continue
        piv_col = next((j for j in range(n) if T[i][j] != 0), None)
        if piv_col is None:
            continue  # redundant row
        _pivot(T, rhs, basis, i, piv_col)
        keep.append(i)
    T = [T[i][:n] for i in keep]
    rhs = [rhs[i] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2
    r = _reduced_costs(T, basis, c)
    status = _run_phase(T, rhs, basis, r, range(n))
    if status == STATUS_UNBOUNDED:
        return SimplexResult(STATUS_UNBOUNDED, None, None, None)
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = rhs[i]
    objective = sum((c[j] * x[j] for j in range(n)), Fraction(0))
    return SimplexResult(STATUS_OPTIMAL, tuple(x), objective, tuple(basis))
