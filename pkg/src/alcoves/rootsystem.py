"""Irreducible crystallographic root systems with exact integer arithmetic.

Roots are coefficient tuples in the simple-root basis; coweights are integer
coordinate tuples in the simple-coroot basis.  The Cartan convention is
``cartan[i][j] = <alpha_j, alpha_i^vee>`` (row i belongs to the i-th simple
coroot) and every pairing in the package flows through :meth:`RootSystem.pairing`.

Positive roots are stored in a canonical order (height, then lexicographic on
coefficients); every bitmask and k-vector elsewhere in the package indexes
into that order.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache

from ._linalg import mat_inv

Coeffs = tuple[int, ...]
CowCoords = tuple[int, ...]

# (series, minimum rank, maximum rank); None = unbounded.
_VALID = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


def parse_type(type_string: str) -> tuple[str, int]:
    """Parse a type string like "A2" or "E8" into (series, rank)."""
    m = _TYPE_RE.match(type_string.strip())
    if not m:
        raise ValueError(f"bad type string {type_string!r}: expected letter A-G followed by rank")
    series, rank = m.group(1), int(m.group(2))
    _check_type(series, rank)
    return series, rank


def _check_type(series: str, rank: int) -> None:
    if series not in _VALID:
        raise ValueError(f"unknown series {series!r}")
    lo, hi = _VALID[series]
    if rank < lo or (hi is not None and rank > hi):
        hi_s = "" if hi is None else f", at most {hi}"
        raise ValueError(f"rank {rank} invalid for series {series} (need at least {lo}{hi_s})")


def _cartan_matrix(series: str, n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        # cij = <alpha_j, alpha_i^vee>
        C[i][j] = cij
        C[j][i] = cji

    if series in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if series == "B" and n >= 2:
            # last simple root short
            bond(n - 2, n - 1, -1, -2)
        if series == "C":
            # last simple root long
            bond(n - 2, n - 1, -2, -1)
    elif series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(2, 3)
    elif series == "G":
        bond(0, 1, -3, -1)  # alpha_1 short, alpha_2 long
    return C


def _symmetrizer(C: list[list[int]]) -> tuple[int, ...]:
    """Positive integers d with d_i C[i][j] = d_j C[j][i], via the Dynkin graph."""
    n = len(C)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and C[i][j] != 0 and d[j] is None:
                d[j] = d[i] * C[i][j] / C[j][i]
                stack.append(j)
    assert all(x is not None for x in d), "Dynkin diagram not connected"
    denom_lcm = 1
    for x in d:
        denom_lcm = denom_lcm * x.denominator // _gcd(denom_lcm, x.denominator)
    out = tuple(int(x * denom_lcm) for x in d)
    g = 0
    for v in out:
        g = _gcd(g, v)
    return tuple(v // g for v in out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


class RootSystem:
    """Immutable tables for one irreducible root system.

    Use :func:`build_root_system` (or :meth:`RootSystem.from_string`) to
    construct; instances are safe for shared concurrent reads.
    """

    def __init__(self, series: str, rank: int):
        _check_type(series, rank)
        self.series = series
        self.rank = rank
        self.name = f"{series}{rank}"
        self.cartan = _cartan_matrix(series, rank)
        self.symmetrizer = _symmetrizer(self.cartan)
        self._generate_roots()
        self._finalize()

    # -- construction ------------------------------------------------------

    def _generate_roots(self) -> None:
        n = self.rank
        simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        known: set[Coeffs] = set(simples)
        frontier = list(simples)
        while frontier:
            new: list[Coeffs] = []
            for beta in frontier:
                for i in range(n):
                    # alpha_i-string through beta: beta + alpha_i is a root iff
                    # q - <beta, alpha_i^vee> > 0 with q the depth of the string.
                    q = 0
                    cur = list(beta)
                    while True:
                        cur[i] -= 1
                        t = tuple(cur)
                        if t == tuple([0] * n) or t not in known:
                            break
                        q += 1
                    pairing_i = sum(self.cartan[i][j] * beta[j] for j in range(n))
                    if q - pairing_i > 0:
                        up = tuple(c + (1 if j == i else 0) for j, c in enumerate(beta))
                        if up not in known:
                            known.add(up)
                            new.append(up)
            frontier = new
        self.pos_roots: list[Coeffs] = sorted(known, key=lambda r: (sum(r), r))

    def _finalize(self) -> None:
        n = self.rank
        N = len(self.pos_roots)
        self.n_pos = N
        self.heights = [sum(r) for r in self.pos_roots]
        self.theta_index = N - 1
        self.theta = self.pos_roots[-1]
        assert self.heights[-1] > self.heights[-2] if N > 1 else True, "highest root not unique"
        self.theta_coeffs = self.theta
        self.h = self.heights[-1] + 1
        assert 2 * N == n * self.h, f"|Phi+|={N} != n*h/2 for {self.series}{n}"

        # exponents: dual partition of the height distribution
        counts = [0] * self.h
        for ht in self.heights:
            counts[ht] += 1
        exps = []
        for j in range(1, counts[1] + 1):
            exps.append(sum(1 for k in range(1, self.h) if counts[k] >= j))
        self.exponents = tuple(sorted(exps))
        assert sum(self.exponents) == N
        assert all(self.exponents[i] + self.exponents[n - 1 - i] == self.h for i in range(n))
        self.weyl_order = 1
        for m in self.exponents:
            self.weyl_order *= m + 1

        # index over all roots: positives 0..N-1, negative of i at N+i
        self.all_roots: list[Coeffs] = self.pos_roots + [
            tuple(-c for c in r) for r in self.pos_roots
        ]
        self.index: dict[Coeffs, int] = {r: i for i, r in enumerate(self.all_roots)}

        # NB: theta coefficients divide h in all types except E7/E8 (marks 4 and 6);
        # nothing here relies on that divisibility, so it is checked in tests only.

        # half-norms d_alpha = (alpha, alpha)/2 in the symmetrized form
        self._norm = [self._half_norm(r) for r in self.pos_roots]

        # pair splits: pairs_for[k] = [(i, j)] with root_i + root_j = root_k, i <= j
        self.pairs_for: list[list[tuple[int, int]]] = [[] for _ in range(N)]
        for i in range(N):
            for j in range(i, N):
                s = tuple(x + y for x, y in zip(self.pos_roots[i], self.pos_roots[j]))
                k = self.index.get(s)
                if k is not None and k < N:
                    self.pairs_for[k].append((i, j))

        # up-sets and comparability masks over positive-root indices
        self.up_masks = [0] * N
        self.comp_masks = [0] * N
        for i in range(N):
            for j in range(N):
                if i == j or self._leq(i, j):
                    self.up_masks[i] |= 1 << j
                if i == j or self._leq(i, j) or self._leq(j, i):
                    self.comp_masks[i] |= 1 << j
        self.simple_mask = (1 << n) - 1  # simples are the n lowest-height roots

        Cf = [[Fraction(v) for v in row] for row in self.cartan]
        self.inv_cartan = mat_inv(Cf)
        # fundamental coweights: <alpha_j, omega_i> = delta_ij; row i of C^-1
        self.fundamental_coweights: list[tuple[Fraction, ...]] = [
            tuple(self.inv_cartan[i][j] for j in range(n)) for i in range(n)
        ]
        # an integer strictly dominant coweight (scaled sum of fundamental coweights)
        rho = [sum(self.fundamental_coweights[i][j] for i in range(n)) for j in range(n)]
        scale = 1
        for v in rho:
            scale = scale * v.denominator // _gcd(scale, v.denominator)
        self.strictly_dominant: CowCoords = tuple(int(v * scale) for v in rho)

    def _half_norm(self, alpha: Coeffs) -> int:
        n = self.rank
        tot = 0
        for i in range(n):
            for j in range(n):
                tot += alpha[i] * alpha[j] * self.symmetrizer[i] * self.cartan[i][j]
        assert tot % 2 == 0
        return tot // 2

    def _leq(self, i: int, j: int) -> bool:
        """root_i < root_j strictly in the poset order (componentwise difference)."""
        a, b = self.pos_roots[i], self.pos_roots[j]
        return a != b and all(x <= y for x, y in zip(a, b))

    # -- queries -----------------------------------------------------------

    @classmethod
    @lru_cache(maxsize=None)
    def from_string(cls, type_string: str) -> "RootSystem":
        return cls(*parse_type(type_string))

    @property
    def type_string(self) -> str:
        return f"{self.series}{self.rank}"

    def is_root(self, coeffs: Coeffs) -> bool:
        return coeffs in self.index

    def root_index(self, coeffs: Coeffs) -> int:
        """Index into all_roots (positives first, then negatives)."""
        return self.index[coeffs]

    def simple_root(self, i: int) -> Coeffs:
        """The i-th simple root, 1-indexed."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple root index {i} out of range 1..{self.rank}")
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def pairing(self, alpha: Coeffs, lam) -> int | Fraction:
        """<alpha, lam> for a root and a coweight in simple-coroot coordinates."""
        n = self.rank
        return sum(
            lam[i] * self.cartan[i][j] * alpha[j] for i in range(n) for j in range(n) if alpha[j]
        )

    def root_norm(self, alpha: Coeffs) -> int:
        """(alpha, alpha)/2; distinguishes long from short roots."""
        idx = self.index[alpha]
        return self._norm[idx % self.n_pos]

    def coroot(self, alpha: Coeffs) -> CowCoords:
        """Coordinates of alpha^vee in the simple-coroot basis (always integral)."""
        d = self.root_norm(alpha)
        out = []
        for j in range(self.rank):
            v = Fraction(alpha[j] * self.symmetrizer[j], d)
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def roots_of_height(self, k: int) -> list[Coeffs]:
        """All roots of height k (negative k gives negative roots)."""
        if k > 0:
            return [r for r, h in zip(self.pos_roots, self.heights) if h == k]
        return [tuple(-c for c in r) for r, h in zip(self.pos_roots, self.heights) if h == -k]

    def to_json(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "cartan": self.cartan,
            "positive_roots": [list(r) for r in self.pos_roots],
            "theta": list(self.theta),
            "exponents": list(self.exponents),
            "h": self.h,
            "weyl_order": self.weyl_order,
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.type_string}, |Phi+|={self.n_pos}, h={self.h})"


def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the irreducible root system of the given series and rank."""
    return RootSystem.from_string(f"{series}{rank}")


def root_add(rs: RootSystem, alpha: Coeffs, beta: Coeffs) -> Coeffs | None:
    """alpha + beta if it is a root of rs, else None (0 is not a root)."""
    s = tuple(x + y for x, y in zip(alpha, beta))
    return s if s in rs.index else None


def poset_less(rs: RootSystem, alpha: Coeffs, beta: Coeffs) -> bool:
    """alpha strictly below beta in the root poset: beta - alpha a nonzero nonnegative vector."""
    return alpha != beta and all(x <= y for x, y in zip(alpha, beta))


def exponents_from_heights(rs: RootSystem) -> tuple[int, ...]:
    """Exponents as the dual partition of the height distribution."""
    counts: dict[int, int] = {}
    for ht in rs.heights:
        counts[ht] = counts.get(ht, 0) + 1
    out = []
    for j in range(1, counts[1] + 1):
        out.append(sum(1 for k, c in counts.items() if c >= j))
    return tuple(sorted(out))


def dump_json(rs: RootSystem) -> str:
    return json.dumps(rs.to_json(), indent=2)
