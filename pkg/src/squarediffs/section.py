"""Euler's parametric construction of solutions from a free rational parameter m.

For any rational m outside {0, 1, -1}, setting a = m^2/(m^2-1) and choosing
s so that the quartic 1 + 4as + 6as^2 + 4as^3 + as^4 equals the square of
the parabola value w = 1 + 2as + (3a - 2a^2)s^2 yields p = 1 + s and
q = m p, from which x/z = (p^2+1)/(p^2-1) and y/z = (q^2+1)/(q^2-1)
produce a solution triple after clearing denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import format_rational
from .errors import DegeneracyError, ParameterError
from .triples import EulerTriple, verify_euler


@dataclass(frozen=True)
class SectionParams:
    """All intermediate quantities of the construction for one parameter m."""

    m: Fraction
    a: Fraction
    s: Fraction
    p: Fraction
    q: Fraction
    f: Fraction
    g: Fraction
    w: Fraction

    def to_json(self) -> dict[str, str]:
        return {
            name: format_rational(getattr(self, name))
            for name in ("m", "a", "s", "p", "q", "f", "g", "w")
        }


def params_from_m(m: Fraction) -> SectionParams:
    """Compute (a, s, p, q, f, g, w) for an admissible parameter m."""
    m = Fraction(m)
    if m == 0 or m == 1 or m == -1:
        raise ParameterError(f"parameter m = {m} is excluded (m not in {{0, 1, -1}})")
    a = m * m / (m * m - 1)
    denom = 4 * a * a - 8 * a + 1
    if denom == 0:
        raise DegeneracyError("denominator 4a^2 - 8a + 1 vanishes")
    s = (8 * a - 4) / denom
    p = 1 + s
    q = m * p
    if p * p == 1:
        raise DegeneracyError(f"degenerate p = {p} (p^2 = 1 makes x/z undefined)")
    if q * q == 1:
        raise DegeneracyError(f"degenerate q = {q} (q^2 = 1 makes y/z undefined)")
    f = 2 * a
    g = 3 * a - 2 * a * a
    w = 1 + f * s + g * s * s
    return SectionParams(m=m, a=a, s=s, p=p, q=q, f=f, g=g, w=w)


def triple_from_m(m: Fraction) -> EulerTriple:
    """The primitive solution triple produced by the construction at parameter m."""
    params = params_from_m(m)
    p, q = params.p, params.q
    rx = (p * p + 1) / (p * p - 1)  # x/z
    ry = (q * q + 1) / (q * q - 1)  # y/z
    z = math.lcm(rx.denominator, ry.denominator)
    x = abs(rx.numerator) * (z // rx.denominator)
    y = abs(ry.numerator) * (z // ry.denominator)
    g = math.gcd(math.gcd(x, y), z)
    triple, _ = verify_euler(x // g, y // g, z // g)
    return triple
