"""Exact integer and rational arithmetic helpers.

Integers are plain Python ``int`` (arbitrary precision); rationals are
``fractions.Fraction`` (always stored reduced, positive denominator).
This module adds square detection with a fast residue-class rejection
filter, exact rational square roots, and the canonical string forms used
everywhere else ("num/den" for rationals, decimal strings for integers).
"""

from __future__ import annotations

import math
from fractions import Fraction

# Residue tables for quick non-square rejection.  A square is a square
# modulo every base, so membership failure in any table is conclusive;
# only survivors pay for an exact isqrt.  The bases are chosen coprime-ish
# and cheap: mod 64 by masking, the rest by small modulo.
_FILTER_BASES = (64, 63, 65, 11)


def _square_residues(base: int) -> bytes:
    table = bytearray(base)
    for i in range(base):
        table[i * i % base] = 1
    return bytes(table)


_SQ64, _SQ63, _SQ65, _SQ11 = (_square_residues(b) for b in _FILTER_BASES)


def isqrt(n: int) -> int:
    """Floor of the exact square root of ``n >= 0``."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> tuple[bool, int | None]:
    """Return ``(True, r)`` when ``n == r*r`` with ``r >= 0``, else ``(False, None)``.

    Negative inputs are simply not squares.  The residue filter rejects
    most non-squares without computing an integer square root.
    """
    if n < 0:
        return False, None
    if not (_SQ64[n & 63] and _SQ63[n % 63] and _SQ65[n % 65] and _SQ11[n % 11]):
        return False, None
    r = math.isqrt(n)
    if r * r == n:
        return True, r
    return False, None


def rat_sqrt(q: Fraction) -> Fraction | None:
    """Exact nonnegative rational square root of ``q``, or ``None`` if irrational.

    A reduced fraction is a rational square iff numerator and denominator
    are both perfect squares.
    """
    if q < 0:
        return None
    ok_n, rn = is_perfect_square(q.numerator)
    if not ok_n:
        return None
    ok_d, rd = is_perfect_square(q.denominator)
    if not ok_d:
        return None
    return Fraction(rn, rd)


def format_rational(q: Fraction) -> str:
    """Canonical "num/den" form: reduced, den > 0, sign on the numerator."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer); sign allowed on the numerator only."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a valid rational: {text!r}") from exc
