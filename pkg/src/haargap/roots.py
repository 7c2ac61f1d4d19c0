"""Type A root systems, Cartan elements and Weyl-group operations, all in
exact rational arithmetic.

The ambient group is SL_n: Cartan elements are trace-zero rational vectors,
roots are the functionals X -> X_i - X_j, and the Weyl group acts by
coordinate permutations.  No floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _as_fraction_tuple(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Root:
    """The functional X -> X_i - X_j, stored with its coordinate vector e_i - e_j."""

    i: int
    j: int
    vector: tuple[Fraction, ...]

    def negated_pair(self) -> tuple[int, int]:
        return (self.j, self.i)


@dataclass(frozen=True)
class CartanElement:
    """A trace-zero rational vector (diagonal direction of a one-parameter flow)."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coords = _as_fraction_tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        trace = sum(coords, Fraction(0))
        if trace != 0:
            raise ValueError(
                f"Cartan element must have coordinates summing to zero; got trace {trace}"
            )

    @property
    def n(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def scaled(self, c) -> "CartanElement":
        c = Fraction(c)
        return CartanElement(tuple(c * x for x in self.coords))

    def negated(self) -> "CartanElement":
        return CartanElement(tuple(-x for x in self.coords))


def cartan(*coords) -> CartanElement:
    """Convenience constructor: cartan(2, -1, -1)."""
    return CartanElement(_as_fraction_tuple(coords))


class RootSystem:
    """The A_{n-1} root system of SL_n with its addition and negation tables.

    Roots are ordered lexicographically by their index pair (i, j), i != j,
    1-based; this order is deterministic, so bitmasks over root indices are
    reproducible across runs.  All multiplicities are 1 (split case).
    """

    def __init__(self, n: int, roots: Sequence[Root]):
        self.n = n
        self.roots: tuple[Root, ...] = tuple(roots)
        self.rank = n - 1
        self.index_of: dict[tuple[int, int], int] = {
            (r.i, r.j): k for k, r in enumerate(self.roots)
        }
        self.positive_indices: tuple[int, ...] = tuple(
            k for k, r in enumerate(self.roots) if r.i < r.j
        )
        self.multiplicities: dict[int, int] = {k: 1 for k in range(len(self.roots))}
        self.negation: tuple[int, ...] = tuple(
            self.index_of[(r.j, r.i)] for r in self.roots
        )
        # sum table: (a, b) -> index of roots[a] + roots[b] when that sum is a root,
        # i.e. when the index pairs chain in either order
        sums: dict[tuple[int, int], int] = {}
        for a, ra in enumerate(self.roots):
            for b, rb in enumerate(self.roots):
                if ra.j == rb.i and ra.i != rb.j:
                    sums[(a, b)] = self.index_of[(ra.i, rb.j)]
                elif rb.j == ra.i and rb.i != ra.j:
                    sums[(a, b)] = self.index_of[(rb.i, ra.j)]
        self.sum_index: dict[tuple[int, int], int] = sums
        # unordered chain triples (pair bitmask, forced-sum bit), for closure scans
        triples: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for (a, b), c in sums.items():
            key2 = (min(a, b), max(a, b))
            if key2 not in seen:
                seen.add(key2)
                triples.append(((1 << a) | (1 << b), 1 << c))
        self.chain_triples: tuple[tuple[int, int], ...] = tuple(triples)

    def __len__(self) -> int:
        return len(self.roots)

    def root(self, i: int, j: int) -> Root:
        return self.roots[self.index_of[(i, j)]]

    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(self.roots[k] for k in self.positive_indices)

    def full_mask(self) -> int:
        return (1 << len(self.roots)) - 1

    def pair_mask(self, i: int, j: int) -> int:
        """Bitmask of the symmetric pair {alpha_ij, alpha_ji}."""
        return (1 << self.index_of[(i, j)]) | (1 << self.index_of[(j, i)])


def build_type_a(n: int) -> RootSystem:
    """Construct the A_{n-1} root system for SL_n.

    Raises ValueError for n < 2.
    """
    if n < 2:
        raise ValueError(f"invalid dimension n={n}; the root system needs n >= 2")
    roots = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            vec = [Fraction(0)] * n
            vec[i - 1] = Fraction(1)
            vec[j - 1] = Fraction(-1)
            roots.append(Root(i, j, tuple(vec)))
    return RootSystem(n, roots)


def evaluate_root(rs: RootSystem, alpha: Root, X: CartanElement) -> Fraction:
    """Exact value of alpha on X, i.e. X_i - X_j."""
    if X.n != rs.n:
        raise ValueError(f"dimension mismatch: root system has n={rs.n}, element has n={X.n}")
    return X.coords[alpha.i - 1] - X.coords[alpha.j - 1]


def _distinct_permutations(items: tuple) -> Iterable[tuple]:
    # multiset permutations, emitted in lexicographic order of the output
    pool = sorted(items)
    n = len(pool)
    out: list = []

    def rec(remaining: list):
        if not remaining:
            yield tuple(out)
            return
        prev = object()
        for k in range(len(remaining)):
            if remaining[k] == prev:
                continue
            prev = remaining[k]
            out.append(remaining[k])
            yield from rec(remaining[:k] + remaining[k + 1 :])
            out.pop()

    if n == 0:
        yield ()
    else:
        yield from rec(pool)


def weyl_orbit(X: CartanElement) -> tuple[CartanElement, ...]:
    """All distinct coordinate permutations of X, deduplicated.

    Returned in descending lexicographic order, so the dominant representative
    comes first; the order is deterministic.
    """
    perms = sorted(_distinct_permutations(X.coords), reverse=True)
    return tuple(CartanElement(p) for p in perms)


def dominant_representative(X: CartanElement) -> CartanElement:
    """The unique orbit element with coordinates sorted in non-increasing order.

    Every positive root is >= 0 on the result.
    """
    return CartanElement(tuple(sorted(X.coords, reverse=True)))


def is_regular(X: CartanElement) -> bool:
    """True iff no root vanishes on X, i.e. all coordinates are pairwise distinct."""
    return len(set(X.coords)) == len(X.coords)


def apply_permutation(X: CartanElement, perm: Sequence[int]) -> CartanElement:
    """Weyl action on Cartan elements: position perm[k] receives coordinate k (0-based perm)."""
    coords = [Fraction(0)] * len(X.coords)
    for k, p in enumerate(perm):
        coords[p] = X.coords[k]
    return CartanElement(tuple(coords))


def permute_root(rs: RootSystem, alpha: Root, perm: Sequence[int]) -> Root:
    """Weyl action on roots: alpha_ij -> alpha_{perm(i) perm(j)} (0-based perm)."""
    return rs.root(perm[alpha.i - 1] + 1, perm[alpha.j - 1] + 1)
