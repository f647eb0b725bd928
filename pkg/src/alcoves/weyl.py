"""Finite Weyl group: reflections, actions, full generation, orbit searches.

Elements are stored as permutations of all root indices (positives then
negatives, in the root system's canonical order); permutation equality is the
identity test.  The coweight action is derived on demand from the root
permutation via the coroot map.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .rootsystem import Coeffs, CowCoords, RootSystem

GROUP_ORDER_CAP = 3_000_000  # covers E7; E8 full-group ops are refused
ORBIT_NODE_CAP = 10_000_000


class CapExceeded(RuntimeError):
    """A configured enumeration cap was hit before the computation finished."""


@dataclass(frozen=True)
class WeylElement:
    """A finite Weyl group element as a permutation of all root indices."""

    perm: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(alpha) = self(other(alpha))
        return WeylElement(tuple(self.perm[p] for p in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return WeylElement(tuple(inv))


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(tuple(range(2 * rs.n_pos)))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """s_i (1-indexed): beta -> beta - <beta, alpha_i^vee> alpha_i."""
    ai = rs.simple_root(i)
    ai_cw = rs.coroot(ai)
    perm = []
    for beta in rs.all_roots:
        c = rs.pairing(beta, ai_cw)
        img = tuple(b - c * a for b, a in zip(beta, ai))
        perm.append(rs.index[img])
    return WeylElement(tuple(perm))


def reflection(rs: RootSystem, alpha: Coeffs) -> WeylElement:
    """Reflection through the root alpha."""
    a_cw = rs.coroot(alpha)
    perm = []
    for beta in rs.all_roots:
        c = rs.pairing(beta, a_cw)
        img = tuple(b - c * a for b, a in zip(beta, alpha))
        perm.append(rs.index[img])
    return WeylElement(tuple(perm))


def compose(u: WeylElement, w: WeylElement) -> WeylElement:
    return u * w


def apply_root(rs: RootSystem, w: WeylElement, alpha: Coeffs) -> Coeffs:
    return rs.all_roots[w.perm[rs.index[alpha]]]


def cw_matrix(rs: RootSystem, w: WeylElement) -> list[CowCoords]:
    """Columns of the coweight-coordinate action: column i = coords of w(alpha_i^vee)."""
    cols = []
    for i in range(1, rs.rank + 1):
        img = apply_root(rs, w, rs.simple_root(i))
        cols.append(rs.coroot(img))
    return cols


def apply_cw(rs: RootSystem, w: WeylElement, lam) -> tuple:
    """Action on coweight coordinates (works for integer or Fraction coords)."""
    cols = cw_matrix(rs, w)
    n = rs.rank
    return tuple(sum(lam[i] * cols[i][k] for i in range(n)) for k in range(n))


def generate_group(rs: RootSystem, cap: int = GROUP_ORDER_CAP) -> list[WeylElement]:
    """All of W in BFS order from the identity; refuses when |W| exceeds the cap."""
    if rs.weyl_order > cap:
        raise CapExceeded(
            f"|W({rs.type_string})| = {rs.weyl_order} exceeds the group enumeration cap {cap}"
        )
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    e = identity(rs)
    seen = {e.perm}
    order = [e]
    frontier = [e]
    while frontier:
        new: list[WeylElement] = []
        for w in frontier:
            for s in gens:
                u = s * w
                if u.perm not in seen:
                    seen.add(u.perm)
                    order.append(u)
                    new.append(u)
        frontier = new
    assert len(order) == rs.weyl_order
    return order


def to_dominant_chamber(rs: RootSystem, lam: CowCoords) -> tuple[WeylElement, CowCoords]:
    """The unique x with x(beta) > 0 iff <beta, lam> > 0, or = 0 with beta positive.

    Ties <alpha_i, lam> = 0 are resolved as if lam were perturbed toward the
    interior of the dominant chamber, so x is minimal in its coset modulo the
    stabilizer of lam.  Returns (x, x(lam)).
    """
    cur = tuple(lam)
    mu = rs.strictly_dominant
    x = identity(rs)
    n = rs.rank
    while True:
        for i in range(1, n + 1):
            ai = rs.simple_root(i)
            p = rs.pairing(ai, cur)
            if p < 0 or (p == 0 and rs.pairing(ai, mu) < 0):
                s = simple_reflection(rs, i)
                ai_cw = rs.coroot(ai)
                cur = tuple(c - p * a for c, a in zip(cur, ai_cw))
                q = rs.pairing(ai, mu)
                mu = tuple(m - q * a for m, a in zip(mu, ai_cw))
                x = s * x
                break
        else:
            return x, cur


def subset_conjugacy_search(
    rs: RootSystem,
    roots: Iterable[Coeffs],
    predicate: Callable[[frozenset[Coeffs]], bool],
    node_cap: int = ORBIT_NODE_CAP,
) -> tuple[WeylElement, frozenset[Coeffs]] | None:
    """BFS over the W-orbit of a set of roots for an image satisfying predicate.

    Returns (y, y(S)) for the first hit in BFS layer order, None when the orbit
    is exhausted without a hit; raises CapExceeded when node_cap is reached.
    """
    start = frozenset(roots)
    gens = [(i, simple_reflection(rs, i)) for i in range(1, rs.rank + 1)]

    def canon(s: frozenset[Coeffs]) -> tuple[int, ...]:
        return tuple(sorted(rs.index[r] for r in s))

    if predicate(start):
        return identity(rs), start
    seen = {canon(start)}
    queue = deque([(start, identity(rs))])
    while queue:
        cur, y = queue.popleft()
        for _, s in gens:
            img = frozenset(rs.all_roots[s.perm[rs.index[r]]] for r in cur)
            key = canon(img)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > node_cap:
                raise CapExceeded(f"orbit search node cap {node_cap} exceeded")
            ys = s * y
            if predicate(img):
                return ys, img
            queue.append((img, ys))
    return None


def sub_roots(rs: RootSystem, J: Iterable[int]) -> frozenset[Coeffs]:
    """Phi_J: all roots supported on the simple indices J (1-indexed)."""
    Jset = {j - 1 for j in J}
    out = []
    for r in rs.all_roots:
        if all(c == 0 or k in Jset for k, c in enumerate(r)):
            out.append(r)
    return frozenset(out)


def parabolic_subgroup(rs: RootSystem, J: Iterable[int]) -> list[WeylElement]:
    """W_J generated by the simple reflections in J (1-indexed)."""
    gens = [simple_reflection(rs, j) for j in J]
    e = identity(rs)
    seen = {e.perm}
    out = [e]
    frontier = [e]
    while frontier:
        new = []
        for w in frontier:
            for s in gens:
                u = s * w
                if u.perm not in seen:
                    seen.add(u.perm)
                    out.append(u)
                    new.append(u)
        frontier = new
    return out


def normalizer_index(rs: RootSystem, J: Iterable[int]) -> int:
    """[N(W_J) : W_J] inside W, by brute force over the full group."""
    Jl = sorted(J)
    phi_j = sub_roots(rs, Jl)
    phi_j_idx = frozenset(rs.index[r] for r in phi_j)
    group = generate_group(rs)
    stab = 0
    for w in group:
        if frozenset(w.perm[i] for i in phi_j_idx) == phi_j_idx:
            stab += 1
    wj = len(parabolic_subgroup(rs, Jl))
    assert stab % wj == 0
    return stab // wj


def simple_subsets_up_to_conjugacy(rs: RootSystem) -> list[list[frozenset[int]]]:
    """Partition of the subsets of Pi (as 1-indexed sets) into W-conjugacy classes.

    Each class is sorted with the lex-least subset first.
    """
    all_subsets = []
    n = rs.rank
    for mask in range(1 << n):
        all_subsets.append(frozenset(i + 1 for i in range(n) if mask >> i & 1))
    unassigned = set(all_subsets)
    classes = []
    for J in sorted(all_subsets, key=lambda s: (len(s), sorted(s))):
        if J not in unassigned:
            continue
        members = _simple_subset_orbit(rs, J)
        for m in members:
            unassigned.discard(m)
        classes.append(sorted(members, key=lambda s: (len(s), sorted(s))))
    return classes


def _simple_subset_orbit(rs: RootSystem, J: frozenset[int]) -> set[frozenset[int]]:
    """All J' subset of Pi with w(J) = J' as root sets, via orbit BFS."""
    start = frozenset(rs.simple_root(j) for j in J)
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    simple_set = {rs.simple_root(i): i for i in range(1, rs.rank + 1)}

    def canon(s):
        return tuple(sorted(rs.index[r] for r in s))

    seen = {canon(start)}
    queue = deque([start])
    hits = {J}
    while queue:
        cur = queue.popleft()
        for s in gens:
            img = frozenset(rs.all_roots[s.perm[rs.index[r]]] for r in cur)
            key = canon(img)
            if key in seen:
                continue
            seen.add(key)
            if all(r in simple_set for r in img):
                hits.add(frozenset(simple_set[r] for r in img))
            queue.append(img)
    return hits
