"""Exact rational arithmetic and Hirzebruch-Jung continued fractions.

Every number in this package is an integer or a `fractions.Fraction`;
nothing is ever rounded, because klt verdicts are decided by strict
inequalities at rational boundary values (a discrepancy of exactly -1
must classify as not klt). Fractions are always stored in lowest terms
with a positive denominator, and serialize as ``p/q`` (or ``p`` when
the denominator is 1), never as decimals.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction


def rational_str(x: Fraction | int) -> str:
    """Serialize an exact rational as ``p/q``, or ``p`` when integral."""
    return str(Fraction(x))


def coeff(m: int) -> Fraction:
    """Boundary coefficient 1 - 1/m of a component of multiplicity m.

    m = 1 means "no orbifold structure on this component" and gives 0;
    any m >= 2 gives a value in [1/2, 1).
    """
    if m < 1:
        raise ValueError(f"multiplicity must be a positive integer, got {m}")
    return 1 - Fraction(1, m)


def gcd_list(values: Iterable[int]) -> int:
    """gcd of a nonempty collection of positive integers."""
    values = list(values)
    if not values:
        raise ValueError("gcd of an empty collection is undefined")
    for v in values:
        if v < 1:
            raise ValueError(f"gcd arguments must be positive integers, got {v}")
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def hj_expand(n: int, q: int) -> list[int]:
    """Hirzebruch-Jung expansion of n/q.

    Returns the unique chain [e_1, ..., e_k], all entries >= 2, with

        n/q = e_1 - 1/(e_2 - 1/(... - 1/e_k)).

    This is the self-intersection chain of the minimal resolution of
    the cyclic quotient singularity of type (n, q). Uses the ceiling
    division recurrence e = ceil(n/q), (n, q) <- (q, e*q - n), which
    terminates in at most n steps.
    """
    if not (0 < q < n):
        raise ValueError(f"need 0 < q < n, got (n, q) = ({n}, {q})")
    if gcd(n, q) != 1:
        raise ValueError(f"n and q must be coprime, got (n, q) = ({n}, {q})")
    entries = []
    while q > 0:
        e = -(-n // q)
        entries.append(e)
        n, q = q, e * q - n
    return entries


def hj_evaluate(chain: Sequence[int]) -> tuple[int, int]:
    """Evaluate a chain back to coprime (n, q) with 0 < q < n.

    Inverse of :func:`hj_expand`: the alternating continued fraction of
    the chain, all of whose entries must be >= 2.
    """
    if not chain:
        raise ValueError("chain must be nonempty")
    for e in chain:
        if e < 2:
            raise ValueError(f"chain entries must be >= 2, got {e}")
    value = Fraction(chain[-1])
    for e in reversed(chain[:-1]):
        value = e - 1 / value
    return value.numerator, value.denominator
