"""The three equivalent problems and the exact bijections among them.

An *Euler triple* is a primitive integer triple x > y > z > 0 whose three
pairwise differences of squares are all perfect squares.  Each such triple
is equivalent to

* a hyperbolic right triangle with rational multiplicative side lengths
  (a, b, c), all > 1, satisfying 2a/(1+a^2) * 2b/(1+b^2) = 2c/(1+c^2);
* a cuboid with integral edges, two integral face diagonals, and an
  integral body diagonal;
* three integers A < B < C whose pairwise sums and differences are all
  perfect squares.

The conversion functions here are exact and mutually inverse (up to the
canonical forms documented on each).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import format_rational, is_perfect_square
from .errors import (
    DegeneracyError,
    NonPrimitiveError,
    TrivialSolutionError,
    ValidationError,
)


@dataclass(frozen=True)
class SquareCertificate:
    """Square roots (t, u, v) of x^2-y^2, x^2-z^2, y^2-z^2 for an owning triple."""

    t: int
    u: int
    v: int


@dataclass(frozen=True)
class EulerTriple:
    """Canonical primitive solution: x > y > z > 0, gcd 1, square differences.

    Build through :func:`verify_euler`; the plain constructor does not validate.
    """

    x: int
    y: int
    z: int

    def certificate(self) -> SquareCertificate:
        ok_t, t = is_perfect_square(self.x * self.x - self.y * self.y)
        ok_u, u = is_perfect_square(self.x * self.x - self.z * self.z)
        ok_v, v = is_perfect_square(self.y * self.y - self.z * self.z)
        if not (ok_t and ok_u and ok_v):
            raise ValidationError("square_differences", f"{self} is not a valid triple")
        return SquareCertificate(t, u, v)

    def to_json(self) -> dict[str, str]:
        cert = self.certificate()
        return {
            "x": str(self.x),
            "y": str(self.y),
            "z": str(self.z),
            "t": str(cert.t),
            "u": str(cert.u),
            "v": str(cert.v),
        }


@dataclass(frozen=True)
class HyperbolicTriple:
    """Rational (a, b, c), all > 1, with sin-of-parallelism product relation."""

    a: Fraction
    b: Fraction
    c: Fraction

    def to_json(self) -> dict[str, str]:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "c": format_rational(self.c),
        }


@dataclass(frozen=True)
class Cuboid:
    """Cuboid with integral edges, two integral face diagonals, integral body diagonal."""

    edge_t: int
    edge_v: int
    edge_z: int
    face_tv: int
    face_vz: int
    body: int

    def to_json(self) -> dict[str, str]:
        return {
            "edge_t": str(self.edge_t),
            "edge_v": str(self.edge_v),
            "edge_z": str(self.edge_z),
            "face_tv": str(self.face_tv),
            "face_vz": str(self.face_vz),
            "body": str(self.body),
        }


@dataclass(frozen=True)
class SumDiffTriple:
    """Integers A < B < C whose six pairwise sums and differences are squares."""

    A: int
    B: int
    C: int

    def to_json(self) -> dict[str, str]:
        return {"A": str(self.A), "B": str(self.B), "C": str(self.C)}


def _parallelism_sine(x: Fraction) -> Fraction:
    return 2 * x / (1 + x * x)


def hyperbolic_relation_holds(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """Exact check of 2a/(1+a^2) * 2b/(1+b^2) = 2c/(1+c^2)."""
    return _parallelism_sine(a) * _parallelism_sine(b) == _parallelism_sine(c)


def verify_euler(x: int, y: int, z: int) -> tuple[EulerTriple, SquareCertificate]:
    """Canonicalize and validate a raw integer triple.

    Accepts the entries in any order and with any signs.  Returns the
    canonical triple (sorted descending by absolute value) together with
    its square-root certificate.

    Raises :class:`DegeneracyError` for zero or repeated entries,
    :class:`NonPrimitiveError` when gcd > 1 (carrying the reduced triple),
    and :class:`ValidationError` naming the first non-square difference.
    """
    xs = sorted((abs(x), abs(y), abs(z)), reverse=True)
    if xs[2] == 0:
        raise DegeneracyError("triple entries must be nonzero")
    if xs[0] == xs[1] or xs[1] == xs[2]:
        raise DegeneracyError("triple entries must be distinct")
    cx, cy, cz = xs
    g = math.gcd(math.gcd(cx, cy), cz)
    if g > 1:
        raise NonPrimitiveError((cx // g, cy // g, cz // g))
    checks = (
        ("x^2 - y^2", cx * cx - cy * cy),
        ("x^2 - z^2", cx * cx - cz * cz),
        ("y^2 - z^2", cy * cy - cz * cz),
    )
    roots = []
    for name, diff in checks:
        ok, root = is_perfect_square(diff)
        if not ok:
            raise ValidationError(name, f"{name} = {diff} is not a perfect square")
        roots.append(root)
    t, u, v = roots
    return EulerTriple(cx, cy, cz), SquareCertificate(t, u, v)


def companion_triple(e: EulerTriple) -> EulerTriple:
    """The companion solution (x, u, t); an involution giving the same cuboid."""
    cert = e.certificate()
    triple, _ = verify_euler(e.x, cert.u, cert.t)
    return triple


def euler_to_hyperbolic(e: EulerTriple) -> HyperbolicTriple:
    """a = (x+t)/y, b = (y+v)/z, c = (x+u)/z; all entries come out > 1."""
    cert = e.certificate()
    a = Fraction(e.x + cert.t, e.y)
    b = Fraction(e.y + cert.v, e.z)
    c = Fraction(e.x + cert.u, e.z)
    return HyperbolicTriple(a, b, c)


def hyperbolic_to_euler(h: HyperbolicTriple) -> EulerTriple:
    """Inverse of :func:`euler_to_hyperbolic`: clear denominators of the sine ratios."""
    ry = _parallelism_sine(h.a)  # y/x
    rz = _parallelism_sine(h.c)  # z/x
    rzy = _parallelism_sine(h.b)  # z/y
    if ry * rzy != rz:
        raise ValidationError(
            "hyperbolic_relation",
            f"({h.a}, {h.b}, {h.c}) does not satisfy the hyperbolic relation",
        )
    x = math.lcm(ry.denominator, rz.denominator)
    y = ry.numerator * (x // ry.denominator)
    z = rz.numerator * (x // rz.denominator)
    g = math.gcd(math.gcd(x, y), z)
    triple, _ = verify_euler(x // g, y // g, z // g)
    return triple


def canonicalize_hyperbolic(a: Fraction, b: Fraction, c: Fraction) -> HyperbolicTriple:
    """Normalize signs and inversions so that all entries are > 1.

    The defining relation is preserved by flipping an even number of signs
    and by replacing any entry with its inverse, so every nontrivial
    solution has a canonical representative with a, b, c > 1.
    """
    for v in (a, b, c):
        if v == 0 or v == 1 or v == -1:
            raise TrivialSolutionError(f"trivial hyperbolic entry {v}")
    if not hyperbolic_relation_holds(a, b, c):
        raise ValidationError(
            "hyperbolic_relation",
            f"({a}, {b}, {c}) does not satisfy the hyperbolic relation",
        )
    out = []
    for v in (a, b, c):
        v = abs(v)
        out.append(1 / v if v < 1 else v)
    ca, cb, cc = out
    assert hyperbolic_relation_holds(ca, cb, cc)
    return HyperbolicTriple(ca, cb, cc)


def euler_to_cuboid(e: EulerTriple) -> Cuboid:
    """Edges (t, v, z), face diagonals u and y, body diagonal x."""
    cert = e.certificate()
    return Cuboid(
        edge_t=cert.t,
        edge_v=cert.v,
        edge_z=e.z,
        face_tv=cert.u,
        face_vz=e.y,
        body=e.x,
    )


def euler_to_sumdiff(e: EulerTriple) -> SumDiffTriple:
    """Integers (A, B, C) with A+B, A+C, B+C the squares of (z, y, x) up to parity scaling.

    A is integral only when y^2 + z^2 - x^2 is even; otherwise the triple
    is scaled by 2 first (the pairwise sums are then the squares of
    2z, 2y, 2x).  A may be negative.
    """
    sx, sy, sz = e.x, e.y, e.z
    if (sy * sy + sz * sz - sx * sx) % 2 != 0:
        sx, sy, sz = 2 * sx, 2 * sy, 2 * sz
    a2, b2, c2 = sx * sx, sy * sy, sz * sz
    big_a = (b2 + c2 - a2) // 2
    big_b = (a2 + c2 - b2) // 2
    big_c = (a2 + b2 - c2) // 2
    return SumDiffTriple(big_a, big_b, big_c)


def integer_hyperbolic_triples(bound: int) -> list[tuple[int, int, int]]:
    """All integer solutions (a, b, c) of the hyperbolic relation with 1 < a,b,c <= bound.

    Expected to be empty for every bound (there are no integer solutions
    with all entries > 1); returned as a list so a counterexample would
    surface immediately.  For legs a, b the hypotenuse satisfies
    r c^2 - 2c + r = 0 with r = 4ab/((1+a^2)(1+b^2)), so c is rational
    only when (1+a^2)^2 (1+b^2)^2 - 16 a^2 b^2 is a perfect square.
    """
    found = []
    for a in range(2, bound + 1):
        da = 1 + a * a
        for b in range(a, bound + 1):
            n = 4 * a * b
            d = da * (1 + b * b)
            ok, k = is_perfect_square(d * d - n * n)
            if not ok:
                continue
            for num in (d + k, d - k):
                if num % n == 0:
                    c = num // n
                    if 1 < c <= bound:
                        found.append((a, b, c))
    return found


def sumdiff_to_euler(sd: SumDiffTriple) -> EulerTriple:
    """Recover the Euler triple as the canonicalization of the pairwise-sum roots."""
    combos = (
        ("B+C", sd.B + sd.C),
        ("A+C", sd.A + sd.C),
        ("A+B", sd.A + sd.B),
        ("C-B", sd.C - sd.B),
        ("C-A", sd.C - sd.A),
        ("B-A", sd.B - sd.A),
    )
    roots = {}
    for name, value in combos:
        ok, root = is_perfect_square(value)
        if not ok:
            raise ValidationError(name, f"{name} = {value} is not a perfect square")
        roots[name] = root
    x, y, z = roots["B+C"], roots["A+C"], roots["A+B"]
    g = math.gcd(math.gcd(x, y), z)
    triple, _ = verify_euler(x // g, y // g, z // g)
    return triple
