"""Thin exact linear algebra helpers over Fractions (sympy-backed)."""

from __future__ import annotations

from fractions import Fraction

import sympy


def _to_sym(M):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sympy.Rational(x) for x in row] for row in M])


def _to_frac_rows(S) -> list[list[Fraction]]:
    return [[Fraction(int(x.p), int(x.q)) for x in S.row(i)] for i in range(S.rows)]


def mat_inv(M: list[list[Fraction]]) -> list[list[Fraction]]:
    return _to_frac_rows(_to_sym(M).inv())


def nullspace(M: list[list]) -> list[tuple[Fraction, ...]]:
    """Basis of the rational kernel of M (vectors as tuples)."""
    vecs = _to_sym(M).nullspace()
    return [tuple(Fraction(int(v[i].p), int(v[i].q)) for i in range(v.rows)) for v in vecs]


def primitive_integer(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector with positive leading entry."""
    fracs = [Fraction(x) for x in vec]
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for v in ints:
        g = _gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-x for x in ints]
            break
    return tuple(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
