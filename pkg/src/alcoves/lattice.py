"""Coroot-lattice simplices, the ideal bijections, and the counting formulas.

For t = a h + b coprime to h (1 <= b < h), the simplex is cut out by
<alpha, lam> <= a on the roots of height b and <alpha, lam> <= a + 1 on the
roots of height b - h.  The two cases of interest are t = h + 1 (all ideals)
and t = h - 1 (strictly positive ideals).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import affine, ideals as ideal_ops
from .rootsystem import Coeffs, CowCoords, RootSystem
from .weyl import (
    CapExceeded,
    apply_cw,
    apply_root,
    generate_group,
    to_dominant_chamber,
)

ORBIT_CLASS_CAP = 2_000_000


@dataclass(frozen=True)
class SimplexSpec:
    t: int
    a: int
    b: int
    upper_roots: tuple[Coeffs, ...]  # height b, bound a
    lower_roots: tuple[Coeffs, ...]  # height b - h, bound a + 1


def simplex_spec(rs: RootSystem, t: int) -> SimplexSpec:
    if t < 1 or math.gcd(t, rs.h) != 1:
        raise ValueError(f"t = {t} must be positive and coprime to the Coxeter number {rs.h}")
    a, b = divmod(t, rs.h)
    spec = SimplexSpec(
        t=t,
        a=a,
        b=b,
        upper_roots=tuple(rs.roots_of_height(b)),
        lower_roots=tuple(rs.roots_of_height(b - rs.h)),
    )
    if t == rs.h + 1:
        assert set(spec.upper_roots) == {rs.simple_root(i) for i in range(1, rs.rank + 1)}
        assert set(spec.lower_roots) == {tuple(-c for c in rs.theta)}
    if t == rs.h - 1:
        assert set(spec.upper_roots) == {rs.theta}
        assert set(spec.lower_roots) == {tuple(-c for c in rs.simple_root(i)) for i in range(1, rs.rank + 1)}
    return spec


def in_simplex(rs: RootSystem, spec: SimplexSpec, lam: CowCoords) -> bool:
    return all(rs.pairing(r, lam) <= spec.a for r in spec.upper_roots) and all(
        rs.pairing(r, lam) <= spec.a + 1 for r in spec.lower_roots
    )


def _simplex_pairing_bounds(rs: RootSystem, spec: SimplexSpec) -> list[tuple[int, int]]:
    """Exact per-coordinate bounds on u_i = <alpha_i, lam> over the simplex.

    Derived from the defining inequalities via the theta coefficients; only the
    cases b = 1 and b = h - 1 (covering t = h +- 1 mod h) are supported.
    """
    a, b, h = spec.a, spec.b, rs.h
    c = rs.theta_coeffs
    n = rs.rank
    if b == 1:
        # u_i <= a; c.u >= -(a+1)
        return [
            (math.ceil(Fraction(-(a + 1) - a * (h - 1 - c[i]), c[i])), a) for i in range(n)
        ]
    if b == h - 1:
        # c.u <= a; u_i >= -(a+1)
        return [
            (-(a + 1), math.floor(Fraction(a + (a + 1) * (h - 1 - c[i]), c[i]))) for i in range(n)
        ]
    raise ValueError(
        f"t = {spec.t}: only t congruent to +-1 mod h is supported for simplex point scans"
    )


def d_set(rs: RootSystem, t: int) -> list[CowCoords]:
    """All coroot lattice points of the simplex, in lexicographic coordinate order.

    Scans the tight box on the simple-root pairings u_j = <alpha_j, lam>, then
    keeps the u with an integral preimage lam = (C^T)^{-1} u.
    """
    spec = simplex_spec(rs, t)
    bounds = _simplex_pairing_bounds(rs, spec)
    n = rs.rank
    out = []
    for u in product(*(range(lo, hi + 1) for lo, hi in bounds)):
        coords = []
        for k in range(n):
            v = sum(rs.inv_cartan[j][k] * u[j] for j in range(n))
            if v.denominator != 1:
                break
            coords.append(int(v))
        if len(coords) < n:
            continue
        coords = tuple(coords)
        if in_simplex(rs, spec, coords):
            out.append(tuple(coords))
    return sorted(out)


def b_set(rs: RootSystem, t: int, lam: CowCoords) -> frozenset[Coeffs]:
    """The simplex walls on which lam lies, recorded as (possibly negative) roots."""
    spec = simplex_spec(rs, t)
    if not in_simplex(rs, spec, lam):
        raise ValueError("lam is not a point of the simplex")
    hits = [r for r in spec.upper_roots if rs.pairing(r, lam) == spec.a]
    hits += [r for r in spec.lower_roots if rs.pairing(r, lam) == spec.a + 1]
    return frozenset(hits)


def ideal_to_lambda(rs: RootSystem, mask: int) -> CowCoords:
    """Translation part of the shortest sign-type element; lands in D^{h+1}."""
    lam = affine.w_min(rs, mask).lam
    assert in_simplex(rs, simplex_spec(rs, rs.h + 1), lam)
    return lam


def lambda_to_ideal(rs: RootSystem, lam: CowCoords) -> int:
    """Support ideal of the unique dominant x tau_lam, for lam in D^{h+1}."""
    if not in_simplex(rs, simplex_spec(rs, rs.h + 1), lam):
        raise ValueError("lam is not a point of D^{h+1}")
    x, _ = to_dominant_chamber(rs, lam)
    return affine.support_mask(rs, affine.AffineElement(x, tuple(lam)))


def strict_ideal_to_lambda(rs: RootSystem, mask: int) -> CowCoords:
    """Translation part of the longest sign-type element; lands in D^{h-1}."""
    lam = affine.w_max(rs, mask).lam
    assert in_simplex(rs, simplex_spec(rs, rs.h - 1), lam)
    return lam


def lambda_to_strict_ideal(rs: RootSystem, lam: CowCoords) -> int:
    if not in_simplex(rs, simplex_spec(rs, rs.h - 1), lam):
        raise ValueError("lam is not a point of D^{h-1}")
    x, _ = to_dominant_chamber(rs, lam)
    mask = affine.support_mask(rs, affine.AffineElement(x, tuple(lam)))
    assert ideal_ops.is_strictly_positive(rs, mask)
    return mask


def verify_simples(rs: RootSystem, mask: int) -> dict:
    """Check that minimal roots (and complement maxima) match the simplex walls."""
    report: dict = {"ideal": mask, "pass": True, "witnesses": []}
    w = affine.w_min(rs, mask)
    xi = w.x.inverse()
    mins = {rs.pos_roots[k] for k in ideal_ops.minimal_roots(rs, mask)}
    lhs = frozenset(apply_root(rs, xi, r) for r in mins)
    rhs = b_set(rs, rs.h + 1, w.lam)
    if lhs != rhs:
        report["pass"] = False
        report["witnesses"].append({"part": 1, "lhs": sorted(lhs), "rhs": sorted(rhs)})
    if ideal_ops.is_strictly_positive(rs, mask):
        w2 = affine.w_max(rs, mask)
        xi2 = w2.x.inverse()
        maxs = {rs.pos_roots[k] for k in ideal_ops.max_complement_roots(rs, mask)}
        lhs2 = frozenset(apply_root(rs, xi2, r) for r in maxs)
        rhs2 = b_set(rs, rs.h - 1, w2.lam)
        if lhs2 != rhs2:
            report["pass"] = False
            report["witnesses"].append({"part": 2, "lhs": sorted(lhs2), "rhs": sorted(rhs2)})
    return report


def tA_points(rs: RootSystem, t: int) -> list[CowCoords]:
    """Coroot lattice points of the closed dilated fundamental alcove t.A."""
    n = rs.rank
    c = rs.theta_coeffs
    bounds = [(0, t // c[i]) for i in range(n)]
    out = []
    for u in product(*(range(lo, hi + 1) for lo, hi in bounds)):
        if sum(ci * ui for ci, ui in zip(c, u)) > t:
            continue
        coords = []
        for k in range(n):
            v = sum(rs.inv_cartan[j][k] * u[j] for j in range(n))
            if v.denominator != 1:
                break
            coords.append(int(v))
        if len(coords) == n:
            out.append(tuple(coords))
    return sorted(out)


def count_formula(rs: RootSystem, t: int) -> Fraction:
    """(1/|W|) prod (t + m_i), exact; integral whenever gcd(t, h) = 1."""
    num = 1
    for m in rs.exponents:
        num *= t + m
    val = Fraction(num, rs.weyl_order)
    if math.gcd(t, rs.h) == 1:
        assert val.denominator == 1
    return val


def count_orbits_mod(rs: RootSystem, t: int, cap: int = ORBIT_CLASS_CAP) -> int:
    """Number of W-orbits on Q_vee / t Q_vee by union-find over residue classes."""
    n = rs.rank
    total = t**n
    if total > cap:
        raise CapExceeded(f"t^n = {total} residue classes exceed cap {cap}")
    from .weyl import cw_matrix, simple_reflection

    gens = []
    for i in range(1, n + 1):
        cols = cw_matrix(rs, simple_reflection(rs, i))
        gens.append(cols)

    parent = list(range(total))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(u: int, v: int) -> None:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    def decode(v: int) -> list[int]:
        out = []
        for _ in range(n):
            out.append(v % t)
            v //= t
        return out

    for v in range(total):
        coords = decode(v)
        for cols in gens:
            img = [sum(coords[i] * cols[i][k] for i in range(n)) % t for k in range(n)]
            code = 0
            for k in reversed(range(n)):
                code = code * t + img[k]
            union(v, code)
    return sum(1 for v in range(total) if find(v) == v)


def _canon_hyperplane(rs: RootSystem, r: affine.AffineRoot) -> affine.AffineRoot:
    """Representative of the hyperplane {<alpha, v> = m} with positive finite part."""
    alpha, m = r
    if rs.index[alpha] >= rs.n_pos:
        return (tuple(-c for c in alpha), -m)
    return (alpha, m)


_simplex_map_cache: dict[tuple[str, int], affine.AffineElement] = {}


def find_simplex_map(rs: RootSystem, t: int) -> affine.AffineElement:
    """The affine element mapping the simplex onto the dilated alcove t.A.

    Searches W in canonical BFS order, anchoring the translation by matching
    the lex-least simplex lattice point to each candidate point of t.A, and
    accepts when the simplex walls map exactly onto the walls of t.A as affine
    hyperplanes (n+1 hyperplanes in general position bound a unique simplex,
    so wall matching pins the map).  The lattice points then match as well.
    """
    cached = _simplex_map_cache.get((rs.name, t))
    if cached is not None:
        return cached
    spec = simplex_spec(rs, t)
    dpts = d_set(rs, t)
    tpts = set(tA_points(rs, t))
    assert len(dpts) == len(tpts)
    wall_affine = [(r, spec.a) for r in spec.upper_roots] + [
        (r, spec.a + 1) for r in spec.lower_roots
    ]
    target = frozenset(
        [(rs.simple_root(i), 0) for i in range(1, rs.rank + 1)] + [(rs.theta, t)]
    )
    p0 = dpts[0]
    for x in generate_group(rs):
        xi = x.inverse()
        for q in sorted(tpts):
            lam = tuple(a - b for a, b in zip(apply_cw(rs, xi, q), p0))
            w = affine.AffineElement(x, lam)
            imgs = frozenset(
                _canon_hyperplane(rs, affine.act_affine(rs, w, r)) for r in wall_affine
            )
            if imgs == target:
                assert all(
                    tuple(apply_cw(rs, x, tuple(p + l for p, l in zip(pt, lam)))) in tpts
                    for pt in dpts
                )
                _simplex_map_cache[(rs.name, t)] = w
                return w
    raise RuntimeError("no simplex map found; existence expected at supported ranks")
