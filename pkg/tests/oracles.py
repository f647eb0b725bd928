"""Independent brute-force oracles used to pin library results in tests.

Each oracle deliberately avoids the data structures of the code under test:
decompositions are enumerated exhaustively, ideals are filtered from the full
power set by the coefficientwise order, and alcoves are enumerated by word
BFS over the affine generators.
"""

from __future__ import annotations

from functools import lru_cache

from alcoves import affine
from alcoves.rootsystem import RootSystem, poset_less


def decompositions(rs: RootSystem, k: int):
    """All multisets of positive-root indices summing to pos_roots[k],
    yielded as descending index tuples."""

    @lru_cache(maxsize=None)
    def rec(target, bound):
        if all(c == 0 for c in target):
            return ((),)
        out = []
        for i in range(bound, -1, -1):
            rem = tuple(t - c for t, c in zip(target, rs.pos_roots[i]))
            if all(c >= 0 for c in rem):
                for rest in rec(rem, i):
                    out.append((i,) + rest)
        return tuple(out)

    return rec(rs.pos_roots[k], rs.n_pos - 1)


def plus_oracle(rs: RootSystem, mask: int, k: int) -> int:
    """Max number of summands of root k drawn entirely from the ideal; 0 if none."""
    best = 0
    for parts in decompositions(rs, k):
        if all(mask >> i & 1 for i in parts):
            best = max(best, len(parts))
    return best


def minus_oracle(rs: RootSystem, mask: int, k: int) -> int:
    """Min number of summands of root k all avoiding the ideal, minus one."""
    best = None
    for parts in decompositions(rs, k):
        if all(not (mask >> i & 1) for i in parts):
            if best is None or len(parts) < best:
                best = len(parts)
    assert best is not None
    return best - 1


def brute_ideals(rs: RootSystem) -> set[int]:
    """All upward-closed subsets of the positive roots, from the power set."""
    out = set()
    above = [
        [j for j in range(rs.n_pos) if poset_less(rs, rs.pos_roots[i], rs.pos_roots[j])]
        for i in range(rs.n_pos)
    ]
    for mask in range(1 << rs.n_pos):
        if all(
            not (mask >> i & 1) or all(mask >> j & 1 for j in above[i])
            for i in range(rs.n_pos)
        ):
            out.add(mask)
    return out


def alcove_ball(rs: RootSystem, radius: int) -> dict[tuple[int, ...], int]:
    """k-vectors of all alcoves within the given word length, with their distance."""
    start = affine.identity(rs)
    seen = {affine.k_vector(rs, start): 0}
    frontier = [start]
    for dist in range(1, radius + 1):
        new = []
        for w in frontier:
            for i in range(rs.rank + 1):
                u = affine.mul(rs, w, affine.aff_simple_reflection(rs, i))
                kv = affine.k_vector(rs, u)
                if kv not in seen:
                    seen[kv] = dist
                    new.append(u)
        frontier = new
    return seen


def inversion_count(rs: RootSystem, w: affine.AffineElement, depth: int = 60) -> int:
    """|N(w)| counted directly: positive affine roots sent to negative ones.

    Affine roots (alpha, m) are scanned for |m| <= depth, which covers every
    inversion when depth exceeds max |k(alpha, w)|.
    """
    total = 0
    for alpha in rs.all_roots:
        for m in range(-depth, depth + 1):
            r = (alpha, m)
            if affine.is_positive_affine(rs, r) and not affine.is_positive_affine(
                rs, affine.act_affine(rs, w, r)
            ):
                total += 1
    return total
