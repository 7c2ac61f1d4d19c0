"""Enumeration of admissible ergodic-component supports.

A support is a subset R of the root set that is symmetric (R = -R) and closed
under root addition.  Two enumerations are provided: an exhaustive one over
symmetric bitmasks with a direct closure filter, and a combinatorial one that
produces the supports attached to equal-size block partitions of {1..n}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .roots import RootSystem, build_type_a

GENERIC_POSITIVE_ROOT_LIMIT = 15
BLOCK_PARTITION_DEFAULT_LIMIT = 12

KIND_EMPTY = "empty"
KIND_PAIR = "pair"
KIND_BLOCK = "block-partition"
KIND_FULL = "full"
KIND_OTHER = "other"


class CapacityError(Exception):
    """Raised when an enumeration exceeds its configured size limit."""


@dataclass(frozen=True)
class SupportSet:
    """A root subset given as a bitmask over a RootSystem's root order."""

    mask: int
    label: str
    kind: str


@lru_cache(maxsize=None)
def support_indices(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of a mask, ascending."""
    out = []
    m = mask
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return tuple(out)


def is_symmetric_mask(rs: RootSystem, mask: int) -> bool:
    return all(mask >> rs.negation[k] & 1 for k in support_indices(mask))


def closure_of(rs: RootSystem, mask: int) -> int:
    """Smallest addition-closed superset: repeatedly add forced sums."""
    closed = mask
    changed = True
    while changed:
        changed = False
        for pair, forced in rs.chain_triples:
            if closed & pair == pair and not closed & forced:
                closed |= forced
                changed = True
    return closed


def _blocks_of_mask(rs: RootSystem, mask: int) -> tuple[tuple[int, ...], ...] | None:
    """Recover the set partition of {1..n} whose block supports give this mask.

    Returns None when the mask is not exactly a union of within-block roots.
    """
    n = rs.n
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in support_indices(mask):
        r = rs.roots[k]
        parent[find(r.i)] = find(r.j)
    blocks: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        blocks.setdefault(find(x), []).append(x)
    ordered = tuple(tuple(sorted(b)) for b in sorted(blocks.values()))
    rebuilt = 0
    for block in ordered:
        for i, j in itertools.permutations(block, 2):
            rebuilt |= 1 << rs.index_of[(i, j)]
    if rebuilt != mask:
        return None
    return ordered


def make_support(rs: RootSystem, mask: int) -> SupportSet:
    """Attach a canonical label and kind to a mask."""
    if mask == 0:
        return SupportSet(0, "∅", KIND_EMPTY)
    if mask == rs.full_mask():
        return SupportSet(mask, "Δ", KIND_FULL)
    idx = support_indices(mask)
    if len(idx) == 2 and is_symmetric_mask(rs, mask):
        r = rs.roots[idx[0]]
        i, j = min(r.i, r.j), max(r.i, r.j)
        return SupportSet(mask, f"{{±α_{i}{j}}}", KIND_PAIR)
    blocks = _blocks_of_mask(rs, mask) if is_symmetric_mask(rs, mask) else None
    if blocks is not None:
        label = "blocks " + "".join("{" + ",".join(map(str, b)) + "}" for b in blocks)
        return SupportSet(mask, label, KIND_BLOCK)
    pos = [rs.roots[k] for k in idx if rs.roots[k].i < rs.roots[k].j]
    label = "{" + ", ".join(f"±α_{r.i}{r.j}" for r in pos) + "}"
    return SupportSet(mask, label, KIND_OTHER)


def is_admissible(rs: RootSystem, R: SupportSet) -> bool:
    """True iff R is symmetric and addition-closed."""
    if R.mask < 0 or R.mask > rs.full_mask():
        raise ValueError(f"mask {R.mask:#x} does not fit a root system with {len(rs)} roots")
    return is_symmetric_mask(rs, R.mask) and closure_of(rs, R.mask) == R.mask


def enumerate_symmetric_closed(rs: RootSystem) -> list[SupportSet]:
    """All symmetric, addition-closed subsets of the root set.

    Exhaustive scan over the 2^|Δ⁺| symmetric masks with a direct closure
    filter; ordered by popcount then mask value, so ∅ comes first and Δ last.
    """
    npos = len(rs.positive_indices)
    if npos > GENERIC_POSITIVE_ROOT_LIMIT:
        raise CapacityError(
            f"root system has {npos} positive roots; generic enumeration is "
            f"limited to {GENERIC_POSITIVE_ROOT_LIMIT}"
        )
    pos = rs.positive_indices
    neg = [rs.negation[k] for k in pos]
    triples = rs.chain_triples
    found: list[int] = []
    for choice in range(1 << npos):
        mask = 0
        c = choice
        while c:
            low = c & -c
            b = low.bit_length() - 1
            mask |= (1 << pos[b]) | (1 << neg[b])
            c ^= low
        ok = True
        for pair, forced in triples:
            if mask & pair == pair and not mask & forced:
                ok = False
                break
        if ok:
            found.append(mask)
    found.sort(key=lambda m: (m.bit_count(), m))
    return [make_support(rs, m) for m in found]


def _equal_size_partitions(elements: tuple[int, ...], k: int):
    """Partitions of `elements` into blocks of size k, in lexicographic order."""
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for combo in itertools.combinations(rest, k - 1):
        block = (first,) + combo
        taken = set(combo)
        remaining = tuple(x for x in rest if x not in taken)
        for tail in _equal_size_partitions(remaining, k):
            yield (block,) + tail


def enumerate_block_partitions(n: int, max_n: int = BLOCK_PARTITION_DEFAULT_LIMIT) -> list[SupportSet]:
    """Supports of equal-size block partitions of {1..n}, for every divisor k of n.

    k = 1 yields ∅ and k = n yields Δ.  Within each k the partitions come out
    in lexicographic order of their block lists.
    """
    if n < 2:
        raise ValueError(f"invalid dimension n={n}; need n >= 2")
    if n > max_n:
        raise CapacityError(f"n={n} exceeds the block-partition enumeration limit of {max_n}")
    rs = build_type_a(n)
    elements = tuple(range(1, n + 1))
    out: list[SupportSet] = []
    for k in range(1, n + 1):
        if n % k != 0:
            continue
        for blocks in _equal_size_partitions(elements, k):
            mask = 0
            for block in blocks:
                for i, j in itertools.permutations(block, 2):
                    mask |= 1 << rs.index_of[(i, j)]
            out.append(make_support(rs, mask))
    return out
