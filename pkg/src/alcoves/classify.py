"""Classifying ideals by the conjugacy class of their minimal roots.

Every antichain of the positive root poset is conjugate to a subset of the
simple roots; this module finds the conjugating element, computes the
characteristic polynomials of the hyperplane arrangements restricted to
parabolic fixed spaces, and counts ideals per class, matching the counts
against the polynomial values at h +- 1 divided by a normalizer index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import affine, ideals, lattice
from ._linalg import primitive_integer
from .rootsystem import Coeffs, RootSystem
from .weyl import (
    CapExceeded,
    WeylElement,
    apply_root,
    cw_matrix,
    identity,
    normalizer_index,
    simple_reflection,
    simple_subsets_up_to_conjugacy,
    subset_conjugacy_search,
)

CHARPOLY_DIM_CAP = 6
CROSSCHECK_PRIMES = (10007, 10009)


# ---------------------------------------------------------------------------
# Antichains and subsets of the extended simple roots


def conjugate_to_simples(
    rs: RootSystem, antichain: Iterable[Coeffs]
) -> tuple[WeylElement, frozenset[int]]:
    """An element y and J with y(antichain) = {alpha_j : j in J} (1-indexed).

    Existence is guaranteed for antichains of the positive root poset; the
    orbit search reports cap exhaustion otherwise.
    """
    roots = frozenset(antichain)
    if not roots:
        return identity(rs), frozenset()
    if not ideals.is_antichain(rs, [rs.index[r] for r in roots]):
        raise ValueError("input is not an antichain of positive roots")
    simple_index = {rs.simple_root(i): i for i in range(1, rs.rank + 1)}
    hit = subset_conjugacy_search(rs, roots, lambda s: all(r in simple_index for r in s))
    if hit is None:
        raise RuntimeError("antichain orbit contains no subset of the simple roots")
    y, img = hit
    return y, frozenset(simple_index[r] for r in img)


def extended_simples(rs: RootSystem) -> frozenset[Coeffs]:
    """The simple roots together with the negative of the highest root."""
    out = {rs.simple_root(i) for i in range(1, rs.rank + 1)}
    out.add(tuple(-c for c in rs.theta))
    return frozenset(out)


def gcd_certificate(rs: RootSystem, jprime: Iterable[Coeffs]) -> int:
    """gcd of the highest-root coefficients over the extended simples not in jprime.

    The negative highest root carries coefficient 1, so any subset omitting it
    certifies 1; the gcd is 0 only for the full extended set.
    """
    ext = extended_simples(rs)
    jset = frozenset(jprime)
    if not jset <= ext:
        raise ValueError("subset must consist of simple roots and the negated highest root")
    neg_theta = tuple(-c for c in rs.theta)
    marks = {rs.simple_root(i): rs.theta_coeffs[i - 1] for i in range(1, rs.rank + 1)}
    marks[neg_theta] = 1
    d = 0
    for r in ext - jset:
        d = math.gcd(d, marks[r])
    return d


def wall_image_subset(rs: RootSystem, mask: int) -> frozenset[Coeffs]:
    """Map an ideal's minimal roots into the extended simples via the simplex map.

    The minimal roots are carried to tight walls of the (h+1)-simplex, the
    simplex map sends those walls onto the negated extended simples, and
    negation lands the result inside the extended simples.
    """
    lam = lattice.ideal_to_lambda(rs, mask)
    walls = lattice.b_set(rs, rs.h + 1, lam)
    w = lattice.find_simplex_map(rs, rs.h + 1)
    img = frozenset(tuple(-c for c in apply_root(rs, w.x, r)) for r in walls)
    assert img <= extended_simples(rs)
    return img


# ---------------------------------------------------------------------------
# Fixed spaces and restricted arrangements


def fixed_space_basis(rs: RootSystem, J: Iterable[int]) -> list[tuple[int, ...]]:
    """Primitive integer basis (coroot coordinates) of the subspace fixed by W_J.

    Kernel of the stacked maps s_j - id over J (1-indexed); rank is n - |J|.
    """
    n = rs.rank
    rows = []
    for j in sorted(set(J)):
        cols = cw_matrix(rs, simple_reflection(rs, j))
        for r in range(n):
            rows.append([Fraction(cols[c][r] - (1 if c == r else 0)) for c in range(n)])
    if not rows:
        rows = [[Fraction(0)] * n]
    basis = _kernel(rows, n)
    return [primitive_integer(v) for v in basis]


def restricted_arrangement(rs: RootSystem, J: Iterable[int]) -> list[tuple[int, ...]]:
    """Distinct nonzero linear forms cut out on the fixed space by the root hyperplanes.

    Each positive root is paired against the fixed-space basis; zero restrictions
    are dropped and proportional ones deduplicated into primitive integer form.
    """
    basis = fixed_space_basis(rs, J)
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    for alpha in rs.pos_roots:
        form = tuple(rs.pairing(alpha, b) for b in basis)
        if all(c == 0 for c in form):
            continue
        canon = primitive_integer(form)
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return out


# ---------------------------------------------------------------------------
# Characteristic polynomials via the intersection lattice


def _kernel(rows, ncols: int, p: int | None = None):
    """Right-kernel basis by Gaussian elimination: exact rationals, or GF(p)."""
    if p is None:
        mat = [[Fraction(x) for x in row] for row in rows]
    else:
        mat = [[int(x) % p for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(mat[r][c], p - 2, p) if p else Fraction(1) / mat[r][c]
        mat[r] = [x * inv % p if p else x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [
                    (a - f * b) % p if p else a - f * b for a, b in zip(mat[i], mat[r])
                ]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols if p is None else [0] * ncols
        v[fc] = Fraction(1) if p is None else 1
        for pi, pc in enumerate(pivots):
            v[pc] = -mat[pi][fc] if p is None else (-mat[pi][fc]) % p
        basis.append(tuple(v))
    return basis


def _flat_dims(forms: list[tuple[int, ...]], d: int, p: int | None = None) -> dict[frozenset[int], int]:
    """Intersection lattice of the arrangement: each flat keyed by the full set
    of forms vanishing on it, mapped to its dimension."""
    one = 1 if p else Fraction(1)
    ident = [tuple(one if i == j else 0 * one for j in range(d)) for i in range(d)]
    flats: dict[frozenset[int], tuple[int, list]] = {frozenset(): (d, ident)}
    frontier = [frozenset()]

    def value(form, vec):
        s = sum(f * x for f, x in zip(form, vec))
        return s % p if p else s

    while frontier:
        new = []
        for key in frontier:
            dim, basis = flats[key]
            if dim == 0:
                continue
            for i, f in enumerate(forms):
                if i in key:
                    continue
                row = [value(f, vec) for vec in basis]
                coeffs = _kernel([row], dim, p)
                newbasis = [
                    tuple(
                        sum(c[k] * basis[k][j] for k in range(dim)) % p
                        if p
                        else sum(c[k] * basis[k][j] for k in range(dim))
                        for j in range(d)
                    )
                    for c in coeffs
                ]
                nkey = frozenset(
                    j
                    for j, g in enumerate(forms)
                    if all(value(g, vec) == 0 for vec in newbasis)
                )
                if nkey not in flats:
                    flats[nkey] = (len(newbasis), newbasis)
                    new.append(nkey)
        frontier = new
    return {k: v[0] for k, v in flats.items()}


def _poly_from_flats(flat_dims: dict[frozenset[int], int], d: int) -> tuple[int, ...]:
    """Whitney/Moebius sum over the lattice; coefficients in ascending powers."""
    mu: dict[frozenset[int], int] = {}
    coeffs = [0] * (d + 1)
    for key in sorted(flat_dims, key=len):
        m = 1 if not key else -sum(mu[k] for k in mu if k < key)
        mu[key] = m
        coeffs[flat_dims[key]] += m
    return tuple(coeffs)


@dataclass(frozen=True)
class CharPoly:
    """Integer polynomial, coefficients in ascending powers of t."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def char_poly(rs: RootSystem, J: Iterable[int], p: int | None = None) -> CharPoly:
    """Characteristic polynomial of the arrangement restricted to the fixed space.

    Computed over the rationals by default; a prime p redoes all rank
    computations in GF(p) as an independent cross-check of the exact route.
    """
    Jl = sorted(set(J))
    basis = fixed_space_basis(rs, Jl)
    d = len(basis)
    if d > CHARPOLY_DIM_CAP:
        raise CapExceeded(f"fixed-space dimension {d} exceeds cap {CHARPOLY_DIM_CAP}")
    forms = restricted_arrangement(rs, Jl)
    return CharPoly(_poly_from_flats(_flat_dims(forms, d, p), d))


def os_exponents(rs: RootSystem, J: Iterable[int]) -> list[int]:
    """Nonnegative integer roots of the restricted characteristic polynomial.

    Asserts that the polynomial factors completely over the nonnegative
    integers ("this arrangement is free" in effect).
    """
    poly = list(char_poly(rs, J).coeffs)
    bound = len(restricted_arrangement(rs, sorted(set(J)))) + 1
    roots: list[int] = []
    for r in range(bound + 1):
        while len(poly) > 1 and _eval(poly, r) == 0:
            poly = _deflate(poly, r)
            roots.append(r)
    assert len(poly) == 1 and poly[0] == 1, "polynomial does not split over the integers"
    return sorted(roots)


def _eval(coeffs: list[int], t: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _deflate(coeffs: list[int], r: int) -> list[int]:
    # synthetic division by (t - r), highest power first internally
    desc = list(reversed(coeffs))
    out = [desc[0]]
    for c in desc[1:]:
        out.append(c + r * out[-1])
    assert out[-1] == 0
    return list(reversed(out[:-1]))


def chi(rs: RootSystem, J: Iterable[int], t: int) -> Fraction:
    """Characteristic polynomial value divided by the parabolic normalizer index."""
    Jl = sorted(set(J))
    val = Fraction(int(char_poly(rs, Jl)(t)), normalizer_index(rs, Jl))
    if t in (rs.h - 1, rs.h + 1):
        assert val.denominator == 1, f"chi at t={t} must be an integer, got {val}"
    return val


# ---------------------------------------------------------------------------
# Per-class ideal counts


def classify_ideals(rs: RootSystem, strict: bool = False) -> dict[tuple[int, ...], int]:
    """Count ideals by the conjugacy class of their characteristic antichain.

    Plain ideals are classified by their minimal roots, strict ideals by the
    maximal roots of their complement.  Keys are the lex-least representative
    of each simple-subset class, as sorted 1-indexed tuples; every class
    appears, possibly with count 0.
    """
    classes = simple_subsets_up_to_conjugacy(rs)
    rep_of: dict[frozenset[int], tuple[int, ...]] = {}
    counts: dict[tuple[int, ...], int] = {}
    for cls in classes:
        rep = tuple(sorted(cls[0]))
        counts[rep] = 0
        for member in cls:
            rep_of[member] = rep
    for mask in ideals.enumerate_ideals(rs, strict_only=strict):
        if strict:
            anti = ideals.max_complement_roots(rs, mask)
        else:
            anti = ideals.minimal_roots(rs, mask)
        _, J = conjugate_to_simples(rs, [rs.pos_roots[k] for k in anti])
        counts[rep_of[J]] += 1
    return counts


def classify_table(rs: RootSystem, strict: bool = False) -> list[dict]:
    """Per-class rows: representative, class size, enumerated count, polynomial
    prediction at h -+ 1, and whether the two agree."""
    t = rs.h - 1 if strict else rs.h + 1
    counts = classify_ideals(rs, strict)
    classes = simple_subsets_up_to_conjugacy(rs)
    rows = []
    for cls in classes:
        rep = tuple(sorted(cls[0]))
        predicted = chi(rs, rep, t)
        rows.append(
            {
                "class": rep,
                "size": len(cls),
                "count": counts[rep],
                "predicted": int(predicted),
                "ok": counts[rep] == predicted,
            }
        )
    return rows
