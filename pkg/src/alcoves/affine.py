"""Affine Weyl group W x Q_vee: alcove coordinates, admissibility, walks, sign types.

An element w = x . tau_lambda acts on V by v -> x(v + lambda) and on affine
roots by w(alpha + m delta) = x(alpha) + (m + <alpha, lambda>) delta.  The
positivity convention for affine roots follows the source convention used
throughout this package: alpha + m delta is positive iff alpha is positive with
m > 0, or alpha is negative with m >= 0.  In particular the simple affine roots
are the negatives of the finite simple roots together with theta + delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ideals as ideal_ops
from .rootsystem import Coeffs, CowCoords, RootSystem
from .weyl import WeylElement, apply_cw, apply_root, identity as w_identity, reflection, simple_reflection

AffineRoot = tuple[Coeffs, int]  # (finite part, level)


@dataclass(frozen=True)
class AffineElement:
    """w = x . tau_lambda with x finite and lambda in the coroot lattice."""

    x: WeylElement
    lam: CowCoords


def identity(rs: RootSystem) -> AffineElement:
    return AffineElement(w_identity(rs), tuple([0] * rs.rank))


def translation(rs: RootSystem, lam: CowCoords) -> AffineElement:
    return AffineElement(w_identity(rs), tuple(lam))


def mul(rs: RootSystem, a: AffineElement, b: AffineElement) -> AffineElement:
    # (x1 t_l1)(x2 t_l2) = (x1 x2) t_{x2^-1(l1) + l2}
    lam = tuple(
        p + q for p, q in zip(apply_cw(rs, b.x.inverse(), a.lam), b.lam)
    )
    return AffineElement(a.x * b.x, lam)


def inv(rs: RootSystem, w: AffineElement) -> AffineElement:
    xi = w.x.inverse()
    return AffineElement(xi, tuple(-c for c in apply_cw(rs, w.x, w.lam)))


def aff_simple_reflection(rs: RootSystem, i: int) -> AffineElement:
    """Affine simple reflections: i = 1..n finite, i = 0 is s_theta tau_{-theta_vee}."""
    if i == 0:
        tv = rs.coroot(rs.theta)
        return AffineElement(reflection(rs, rs.theta), tuple(-c for c in tv))
    return AffineElement(simple_reflection(rs, i), tuple([0] * rs.rank))


def aff_simple_root(rs: RootSystem, i: int) -> AffineRoot:
    """The affine simple root crossed by right multiplication with s_i."""
    if i == 0:
        return (rs.theta, 1)
    return (tuple(-c for c in rs.simple_root(i)), 0)


def is_positive_affine(rs: RootSystem, r: AffineRoot) -> bool:
    alpha, m = r
    if rs.index[alpha] < rs.n_pos:
        return m > 0
    return m >= 0


def act_affine(rs: RootSystem, w: AffineElement, r: AffineRoot) -> AffineRoot:
    alpha, m = r
    return (apply_root(rs, w.x, alpha), m + rs.pairing(alpha, w.lam))


def k_of(rs: RootSystem, w: AffineElement, alpha: Coeffs) -> int:
    """Alcove coordinate of w at the positive root alpha (closed form)."""
    beta = apply_root(rs, w.x.inverse(), alpha)
    k = rs.pairing(beta, w.lam)
    if rs.index[beta] >= rs.n_pos:
        k -= 1
    return k


def k_vector(rs: RootSystem, w: AffineElement) -> tuple[int, ...]:
    xi = w.x.inverse()
    out = []
    for alpha in rs.pos_roots:
        beta = apply_root(rs, xi, alpha)
        k = rs.pairing(beta, w.lam)
        if rs.index[beta] >= rs.n_pos:
            k -= 1
        out.append(k)
    return tuple(out)


def alcove_point(rs: RootSystem, w: AffineElement) -> tuple[Fraction, ...]:
    """Image under w of the barycenter of the fundamental alcove's vertices."""
    n = rs.rank
    bary = [Fraction(0)] * n
    for i in range(n):
        wi = rs.fundamental_coweights[i]
        c = rs.theta_coeffs[i]
        for k in range(n):
            bary[k] += wi[k] / c
    bary = [b / (n + 1) for b in bary]
    shifted = tuple(b + l for b, l in zip(bary, w.lam))
    return apply_cw(rs, w.x, shifted)


def is_admissible(rs: RootSystem, kvec) -> bool:
    """Shi's admissibility: k_a + k_b <= k_{a+b} <= k_a + k_b + 1 on all triples."""
    for k, pairs in enumerate(rs.pairs_for):
        for i, j in pairs:
            s = kvec[i] + kvec[j]
            if not s <= kvec[k] <= s + 1:
                return False
    return True


def alcove_walk(rs: RootSystem, kvec) -> AffineElement:
    """The unique affine element whose k-vector equals kvec (must be admissible).

    Walks from the identity alcove, crossing at each step the first wall (finite
    simples in index order, then the theta wall) that strictly reduces the count
    of hyperplanes separating the current alcove from the target.
    """
    if not is_admissible(rs, kvec):
        raise ValueError("k-vector is not admissible")
    target = tuple(kvec)
    steps = [aff_simple_reflection(rs, i) for i in [*range(1, rs.rank + 1), 0]]
    cur = identity(rs)
    cur_k = k_vector(rs, cur)
    dist = sum(abs(a - b) for a, b in zip(cur_k, target))
    while dist > 0:
        for s in steps:
            cand = mul(rs, cur, s)
            ck = k_vector(rs, cand)
            d = sum(abs(a - b) for a, b in zip(ck, target))
            if d == dist - 1:
                cur, cur_k, dist = cand, ck, d
                break
        else:
            raise RuntimeError("walk stuck; admissible k-vector should be realizable")
    return cur


def length(rs: RootSystem, w: AffineElement) -> int:
    """l(w) = sum |k(alpha, w)|; asserted equal to |N(w)|."""
    kv = k_vector(rs, w)
    l = sum(abs(k) for k in kv)
    assert l == len(n_set(rs, w))
    return l


def n_set(rs: RootSystem, w: AffineElement) -> list[AffineRoot]:
    """Positive affine roots sent to negatives by w^-1, from the k-vector."""
    kv = k_vector(rs, w)
    out: list[AffineRoot] = []
    for idx, k in enumerate(kv):
        alpha = rs.pos_roots[idx]
        if k > 0:
            out.extend((alpha, m) for m in range(1, k + 1))
        elif k < 0:
            neg = tuple(-c for c in alpha)
            out.extend((neg, m) for m in range(0, -k))
    return out


def support(rs: RootSystem, w: AffineElement) -> frozenset[Coeffs]:
    kv = k_vector(rs, w)
    out = []
    for idx, k in enumerate(kv):
        if k >= 1:
            out.append(rs.pos_roots[idx])
        elif k <= -1:
            out.append(tuple(-c for c in rs.pos_roots[idx]))
    return frozenset(out)


def is_dominant(rs: RootSystem, w: AffineElement) -> bool:
    return all(k >= 0 for k in k_vector(rs, w))


def support_mask(rs: RootSystem, w: AffineElement) -> int:
    """Support of a dominant element as an ideal bitmask."""
    kv = k_vector(rs, w)
    if any(k < 0 for k in kv):
        raise ValueError("support mask only defined for dominant elements")
    mask = 0
    for idx, k in enumerate(kv):
        if k >= 1:
            mask |= 1 << idx
    return mask


def w_min(rs: RootSystem, mask: int) -> AffineElement:
    """Shortest element whose support is the given ideal."""
    w = alcove_walk(rs, tuple(ideal_ops.plus_stats(rs, mask)))
    assert support_mask(rs, w) == mask
    return w


def w_max(rs: RootSystem, mask: int) -> AffineElement:
    """Longest element whose support is the given (strictly positive) ideal."""
    w = alcove_walk(rs, tuple(ideal_ops.minus_stats(rs, mask)))
    assert support_mask(rs, w) == mask
    return w


def st_members(rs: RootSystem, mask: int, nonstrict_count: int = 3) -> tuple[bool, list[AffineElement]]:
    """Members of the sign type of an ideal.

    For a strictly positive ideal, returns (True, all members): the dominant
    elements whose k-vector lies in the per-root box between the plus and minus
    statistics with support exactly the ideal.  For a non-strict ideal the sign
    type is infinite, and the result is an explicitly flagged truncation
    (False, [shortest element] + witnesses of the infinite family).
    """
    if not ideal_ops.is_strictly_positive(rs, mask):
        base = w_min(rs, mask)
        return False, [base] + infinite_family_witness(rs, mask, base, nonstrict_count - 1)
    lo = ideal_ops.plus_stats(rs, mask)
    hi = ideal_ops.minus_stats(rs, mask)
    members: list[AffineElement] = []
    kvecs: list[tuple[int, ...]] = []

    def scan(idx: int, cur: list[int]) -> None:
        if idx == rs.n_pos:
            kv = tuple(cur)
            if is_admissible(rs, kv) and all(
                (k >= 1) == bool(mask >> i & 1) for i, k in enumerate(kv)
            ):
                kvecs.append(kv)
            return
        for v in range(lo[idx], hi[idx] + 1):
            cur.append(v)
            scan(idx + 1, cur)
            cur.pop()

    scan(0, [])
    for kv in sorted(kvecs):
        members.append(alcove_walk(rs, kv))
    return True, members


def infinite_family_witness(
    rs: RootSystem, mask: int, w: AffineElement, count: int
) -> list[AffineElement]:
    """count further sign-type members tau_{m omega_vee} w for a non-strict ideal."""
    if count <= 0:
        return []
    simples_in = [k for k in range(rs.rank) if mask >> k & 1]
    if not simples_in:
        raise ValueError("ideal is strictly positive; its sign type is finite")
    # low root indices are simples, but not necessarily in Cartan order
    omega = rs.fundamental_coweights[rs.pos_roots[simples_in[0]].index(1)]
    m0 = 1
    for v in omega:
        m0 = m0 * v.denominator // _gcd(m0, v.denominator)
    out = []
    for j in range(1, count + 1):
        lam = tuple(int(v * j * m0) for v in omega)
        elem = mul(rs, translation(rs, lam), w)
        assert support_mask(rs, elem) == mask
        out.append(elem)
    return out


def bruhat_neighbors(rs: RootSystem, w: AffineElement) -> list[tuple[int, AffineElement, str]]:
    """(i, w s_i, "down"/"up") for every affine simple reflection."""
    out = []
    for i in range(rs.rank + 1):
        img = act_affine(rs, w, aff_simple_root(rs, i))
        direction = "down" if not is_positive_affine(rs, img) else "up"
        out.append((i, mul(rs, w, aff_simple_reflection(rs, i)), direction))
    return out


def to_json(rs: RootSystem, w: AffineElement) -> dict:
    return {
        "x": list(w.x.perm),
        "lambda": list(w.lam),
        "k": list(k_vector(rs, w)),
    }


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
