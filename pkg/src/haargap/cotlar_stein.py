"""Desk-scale numerical checks of two operator estimates.

* Almost-orthogonality: for a finite family of equal-shape matrices A_1..A_k,
  the norm of the sum is at most max(R1, R2), where R1 bounds the row sums of
  the paired cross-norms ||A_a^* A_b||^(1/2) and R2 those of ||A_a A_b^*||^(1/2).
* Oscillatory decay: integrals of exp(i S(x)/h) a(x) over a compact interval
  decay superpolynomially in h when the phase derivative never vanishes on the
  support of the amplitude, and only like h^(1/2) at a nondegenerate
  stationary point.

This is the only module that touches floating point; every tolerance lives in
the single `TOLERANCES` record below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class NumericTolerances:
    norm_rtol: float = 1e-10          # power-iteration relative residual target
    bound_slack: float = 1e-8         # multiplicative slack on the orthogonality bound
    equality_tol: float = 1e-9        # degenerate cases must match to this
    slope_floor: float = 2.0          # asserted decay slope for a non-vanishing phase derivative
    stationary_slope: float = 0.5     # expected slope at a nondegenerate stationary point
    stationary_window: float = 0.1
    min_points_per_period: int = 20   # quadrature resolution guard
    power_iteration_max_iter: int = 2000
    dense_fallback_dim: int = 32


TOLERANCES = NumericTolerances()


def operator_norm(M, *, rtol: float = TOLERANCES.norm_rtol) -> float:
    """Largest singular value of a dense complex matrix.

    Power iteration on the (smaller) Gram matrix with a fixed deterministic
    start vector; convergence is declared when the eigen-residual drops below
    rtol relative to the Rayleigh quotient.  Matrices up to 32x32 fall back to
    a dense eigensolve if the iteration stalls.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {M.shape}")
    if not np.isfinite(M).all():
        raise ValueError("matrix has non-finite entries")
    if M.shape[1] <= M.shape[0]:
        G = M.conj().T @ M
    else:
        G = M @ M.conj().T
    k = G.shape[0]
    if not G.any():
        return 0.0
    v = (1.0 + np.arange(k) / k).astype(complex)
    v /= np.linalg.norm(v)
    rayleigh = 0.0
    for _ in range(TOLERANCES.power_iteration_max_iter):
        w = G @ v
        rayleigh = float(np.real(np.vdot(v, w)))
        residual = float(np.linalg.norm(w - rayleigh * v))
        if residual <= rtol * max(rayleigh, 1e-300):
            return math.sqrt(max(rayleigh, 0.0))
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
    if k <= TOLERANCES.dense_fallback_dim:
        top = float(np.linalg.eigvalsh(G)[-1])
        return math.sqrt(max(top, 0.0))
    raise RuntimeError(
        f"power iteration did not reach rtol={rtol} within "
        f"{TOLERANCES.power_iteration_max_iter} iterations on a {k}x{k} Gram matrix"
    )


@dataclass(frozen=True)
class MatrixFamily:
    """A nonempty family of dense complex matrices of identical shape."""

    members: tuple
    seed: int | None = None

    def __post_init__(self) -> None:
        members = tuple(np.asarray(m, dtype=complex) for m in self.members)
        if not members:
            raise ValueError("matrix family must be nonempty")
        shape = members[0].shape
        if any(m.shape != shape for m in members):
            raise ValueError("matrix family members must share one shape")
        object.__setattr__(self, "members", members)

    @property
    def shape(self):
        return self.members[0].shape

    @classmethod
    def random_gaussian(cls, num_members: int, rows: int, cols: int, seed: int) -> "MatrixFamily":
        rng = np.random.default_rng(seed)
        members = tuple(
            (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols)))
            / math.sqrt(2.0)
            for _ in range(num_members)
        )
        return cls(members, seed=seed)


@dataclass(frozen=True)
class CotlarCheck:
    R1: float
    R2: float
    lhs: float
    holds: bool
    trivial_sum: float


def cotlar_bound_check(family: MatrixFamily) -> CotlarCheck:
    """Evaluate the almost-orthogonality bound on a matrix family.

    R1 and R2 are the worst row sums of the square-rooted cross norms; `holds`
    records whether the norm of the summed family stays below max(R1, R2) up
    to the configured slack.  The much cruder triangle-inequality bound is
    reported alongside for comparison.
    """
    members = family.members
    k = len(members)
    star_products = np.zeros((k, k))
    prod_products = np.zeros((k, k))
    for a in range(k):
        for b in range(a, k):
            star_products[a, b] = star_products[b, a] = math.sqrt(
                operator_norm(members[a].conj().T @ members[b])
            )
            prod_products[a, b] = prod_products[b, a] = math.sqrt(
                operator_norm(members[a] @ members[b].conj().T)
            )
    R1 = float(star_products.sum(axis=1).max())
    R2 = float(prod_products.sum(axis=1).max())
    lhs = operator_norm(sum(members))
    holds = lhs <= max(R1, R2) * (1.0 + TOLERANCES.bound_slack)
    trivial = float(sum(operator_norm(m) for m in members))
    return CotlarCheck(R1, R2, lhs, holds, trivial)


def orthogonal_projector_family(num_blocks: int, block_size: int) -> MatrixFamily:
    """Indicator-block projectors with mutually orthogonal ranges."""
    dim = num_blocks * block_size
    members = []
    for b in range(num_blocks):
        m = np.zeros((dim, dim), dtype=complex)
        sl = slice(b * block_size, (b + 1) * block_size)
        m[sl, sl] = np.eye(block_size)
        members.append(m)
    return MatrixFamily(tuple(members))


def smooth_bump(x: np.ndarray) -> np.ndarray:
    """The standard compactly supported bump exp(-1/(1-x^2)) on (-1, 1)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1.0
    out[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    return out


@dataclass(frozen=True)
class OscillatoryProblem:
    """A phase and amplitude sampled on a uniform grid, plus a ladder of h values."""

    grid: np.ndarray
    phase: np.ndarray
    amplitude: np.ndarray
    hbar_values: tuple

    def __post_init__(self) -> None:
        grid = np.asarray(self.grid, dtype=float)
        phase = np.asarray(self.phase, dtype=float)
        amplitude = np.asarray(self.amplitude, dtype=float)
        if not (grid.shape == phase.shape == amplitude.shape) or grid.ndim != 1:
            raise ValueError("grid, phase and amplitude must be 1-d arrays of equal length")
        if grid.size < 3 or grid.size % 2 == 0:
            raise ValueError("composite Simpson needs an odd number of grid points (>= 3)")
        steps = np.diff(grid)
        if not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
            raise ValueError("grid must be uniform")
        hbars = tuple(float(h) for h in self.hbar_values)
        if not hbars or any(h <= 0 for h in hbars):
            raise ValueError("hbar values must be positive")
        if any(b >= a for a, b in zip(hbars, hbars[1:])):
            raise ValueError("hbar values must be strictly decreasing")
        amax = float(np.abs(amplitude).max())
        if amax > 0 and (abs(amplitude[0]) > 1e-12 * amax or abs(amplitude[-1]) > 1e-12 * amax):
            raise ValueError("amplitude must vanish at the interval endpoints")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "phase", phase)
        object.__setattr__(self, "amplitude", amplitude)
        object.__setattr__(self, "hbar_values", hbars)

    @classmethod
    def from_functions(
        cls,
        phase_fn,
        amplitude_fn,
        interval=(-1.0, 1.0),
        hbar_values=None,
        num_points: int = 2**17 + 1,
    ) -> "OscillatoryProblem":
        if hbar_values is None:
            hbar_values = tuple(np.logspace(-1, -3, 9))
        grid = np.linspace(interval[0], interval[1], num_points)
        return cls(grid, phase_fn(grid), amplitude_fn(grid), tuple(hbar_values))


@dataclass(frozen=True)
class OscillatoryDecay:
    hbar_values: tuple
    magnitudes: tuple
    fitted_slope: float
    min_phase_speed: float
    max_phase_speed: float


def oscillatory_decay(problem: OscillatoryProblem) -> OscillatoryDecay:
    """Quadrature magnitudes |I_h| and the log-log decay slope over the h ladder.

    Refuses to run when the fastest oscillation is resolved by fewer than 20
    grid points per period, since the fitted slope would then be quadrature
    noise rather than decay.
    """
    grid = problem.grid
    dx = grid[1] - grid[0]
    speed = np.gradient(problem.phase, dx)
    amax = float(np.abs(problem.amplitude).max())
    support = np.abs(problem.amplitude) > 1e-14 * amax if amax > 0 else np.zeros_like(grid, bool)
    if support.any():
        min_speed = float(np.abs(speed[support]).min())
        max_speed = float(np.abs(speed[support]).max())
    else:
        min_speed = max_speed = 0.0

    if max_speed > 0:
        shortest_period = 2.0 * math.pi * min(problem.hbar_values) / max_speed
        points_per_period = shortest_period / dx
        if points_per_period < TOLERANCES.min_points_per_period:
            needed = math.ceil(
                (grid[-1] - grid[0]) * TOLERANCES.min_points_per_period / shortest_period
            )
            raise ValueError(
                f"grid under-resolves the fastest oscillation "
                f"({points_per_period:.1f} points per period < "
                f"{TOLERANCES.min_points_per_period}); use at least {needed + 1} points"
            )

    weights = np.ones_like(grid)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    weights *= dx / 3.0

    mags = []
    for h in problem.hbar_values:
        integral = np.sum(weights * problem.amplitude * np.exp(1j * problem.phase / h))
        mags.append(float(abs(integral)))

    usable = [(math.log(h), math.log(m)) for h, m in zip(problem.hbar_values, mags) if m > 0]
    if len(usable) >= 2:
        xs = np.array([u[0] for u in usable])
        ys = np.array([u[1] for u in usable])
        xbar = xs.mean()
        slope = float(((xs - xbar) * (ys - ys.mean())).sum() / ((xs - xbar) ** 2).sum())
    else:
        slope = float("nan")
    return OscillatoryDecay(problem.hbar_values, tuple(mags), slope, min_speed, max_speed)


def seeded_family_corpus(seed: int, count: int = 50, max_members: int = 12, max_dim: int = 16):
    """The deterministic random-family corpus used by the validation suite."""
    rng = np.random.default_rng(seed)
    families = []
    for _ in range(count):
        k = int(rng.integers(1, max_members + 1))
        rows = int(rng.integers(2, max_dim + 1))
        cols = int(rng.integers(2, max_dim + 1))
        member_seed = int(rng.integers(0, 2**31 - 1))
        families.append(MatrixFamily.random_gaussian(k, rows, cols, member_seed))
    return families


def run_validation_suite(seed: int = 0) -> dict:
    """Run every numerical check once; returns a summary with per-check verdicts."""
    checks = []

    single = cotlar_bound_check(MatrixFamily.random_gaussian(1, 8, 8, seed + 1))
    eq = abs(single.lhs - max(single.R1, single.R2)) <= TOLERANCES.equality_tol * max(single.lhs, 1.0)
    checks.append({"name": "single-member family is tight", "passed": bool(single.holds and eq)})

    proj = cotlar_bound_check(orthogonal_projector_family(4, 2))
    eq = (
        abs(proj.lhs - 1.0) <= TOLERANCES.equality_tol
        and abs(max(proj.R1, proj.R2) - 1.0) <= TOLERANCES.equality_tol
    )
    checks.append({"name": "orthogonal projectors are tight", "passed": bool(proj.holds and eq)})

    corpus_ok = all(cotlar_bound_check(f).holds for f in seeded_family_corpus(seed))
    checks.append({"name": "random families satisfy the bound", "passed": bool(corpus_ok)})

    nonstationary = oscillatory_decay(
        OscillatoryProblem.from_functions(lambda x: x, smooth_bump)
    )
    checks.append(
        {
            "name": "non-vanishing phase derivative decays fast",
            "passed": bool(nonstationary.fitted_slope >= TOLERANCES.slope_floor),
            "slope": nonstationary.fitted_slope,
        }
    )

    stationary = oscillatory_decay(
        OscillatoryProblem.from_functions(lambda x: x**2 / 2.0, smooth_bump)
    )
    window = (
        TOLERANCES.stationary_slope - TOLERANCES.stationary_window,
        TOLERANCES.stationary_slope + TOLERANCES.stationary_window,
    )
    checks.append(
        {
            "name": "stationary point slows decay to square-root rate",
            "passed": bool(window[0] <= stationary.fitted_slope <= window[1]),
            "slope": stationary.fitted_slope,
        }
    )

    return {"seed": seed, "checks": checks, "all_passed": all(c["passed"] for c in checks)}
