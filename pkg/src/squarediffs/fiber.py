"""The elliptic fiber w^2 = 1 + 4as + 6as^2 + 4as^3 + as^4 for fixed rational a.

Membership, the distinguished points O = (0, 1), P = (0, -1) and the
section point, a group law with identity O (computed by transport through
a short Weierstrass model y^2 = x^3 + Ax with A = 324(a^2 - a)), and the
map locating an integer solution triple on its fiber.

The model change is the classical one based at the rational point O: the
function t = (w + 1 + 2as)/s^2 spans, with the constants, the functions
with a double pole at O; eliminating s leaves a quadratic whose
discriminant is a cubic in t.  The maps below are exact and mutually
inverse on all rational points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import format_rational, rat_sqrt
from .errors import DegeneracyError, IrrationalityError, ValidationError
from .triples import EulerTriple


@dataclass(frozen=True)
class QuarticCurve:
    """One fiber of the family, indexed by the rational parameter a."""

    a: Fraction

    def __post_init__(self):
        if self.a == 0 or self.a == 1:
            raise DegeneracyError(f"fiber parameter a = {self.a} gives a singular fiber")

    def value_at(self, s: Fraction) -> Fraction:
        a = self.a
        return 1 + 4 * a * s + 6 * a * s * s + 4 * a * s**3 + a * s**4


@dataclass(frozen=True)
class QuarticPoint:
    """A point on a quartic fiber: affine (s, w) or one of the two points at infinity.

    The infinity branches are labelled by the sign of w/s^2 as s grows;
    they are rational points only when a is a rational square.
    """

    kind: str  # "affine" | "at-infinity"
    s: Fraction | None = None
    w: Fraction | None = None
    branch: str | None = None  # "plus" | "minus" for points at infinity

    @classmethod
    def affine(cls, s: Fraction, w: Fraction) -> "QuarticPoint":
        return cls(kind="affine", s=Fraction(s), w=Fraction(w))

    @classmethod
    def at_infinity(cls, branch: str) -> "QuarticPoint":
        if branch not in ("plus", "minus"):
            raise ValueError(f"unknown infinity branch {branch!r}")
        return cls(kind="at-infinity", branch=branch)

    def to_json(self) -> dict[str, str]:
        if self.kind == "affine":
            return {"s": format_rational(self.s), "w": format_rational(self.w)}
        return {"at_infinity": self.branch}


@dataclass(frozen=True)
class NonRationalResult:
    """Structured outcome for a point that exists only over an extension field."""

    reason: str


@dataclass(frozen=True)
class WeierstrassCurve:
    """Short model y^2 = x^3 + A x + B; here always B = 0, hence j-invariant 1728."""

    A: Fraction
    B: Fraction

    def __post_init__(self):
        if self.discriminant() == 0:
            raise DegeneracyError("singular Weierstrass curve")

    def discriminant(self) -> Fraction:
        return -16 * (4 * self.A**3 + 27 * self.B * self.B)

    def j_invariant(self) -> Fraction:
        return 1728 * 4 * self.A**3 / (4 * self.A**3 + 27 * self.B * self.B)

    def on_curve(self, pt: "WeierstrassPoint") -> bool:
        if pt.is_identity():
            return True
        return pt.y * pt.y == pt.x**3 + self.A * pt.x + self.B


@dataclass(frozen=True)
class WeierstrassPoint:
    """Affine point or the point at infinity (the group identity)."""

    x: Fraction | None
    y: Fraction | None

    @classmethod
    def identity(cls) -> "WeierstrassPoint":
        return cls(None, None)

    def is_identity(self) -> bool:
        return self.x is None


ORIGIN = QuarticPoint.affine(Fraction(0), Fraction(1))
POINT_P = QuarticPoint.affine(Fraction(0), Fraction(-1))


def two_torsion_point(curve: QuarticCurve) -> QuarticPoint:
    """The rational point of order 2 (with identity O); it lies above s = -2."""
    return QuarticPoint.affine(Fraction(-2), Fraction(-1))


def contains(curve: QuarticCurve, pt: QuarticPoint) -> bool:
    """Exact membership test for rational points."""
    if pt.kind == "at-infinity":
        return rat_sqrt(curve.a) is not None
    return pt.w * pt.w == curve.value_at(pt.s)


def euler_point(curve: QuarticCurve) -> QuarticPoint:
    """The section point: s making the quartic the square of the tangent parabola."""
    a = curve.a
    denom = 4 * a * a - 8 * a + 1
    if denom == 0:
        raise DegeneracyError("denominator 4a^2 - 8a + 1 vanishes")
    s = (8 * a - 4) / denom
    w = 1 + 2 * a * s + (3 * a - 2 * a * a) * s * s
    return QuarticPoint.affine(s, w)


def to_weierstrass(curve: QuarticCurve):
    """The short Weierstrass model and the exact point maps in both directions.

    Returns ``(W, fwd, bwd)`` where ``fwd`` sends O to the identity and
    ``bwd`` inverts it on all rational points.  ``fwd`` of an infinity
    branch over a non-square a returns :class:`NonRationalResult`.
    """
    a = curve.a
    big_a = 324 * (a * a - a)
    model = WeierstrassCurve(A=big_a, B=Fraction(0))

    def _xy_from_t(t: Fraction, y: Fraction) -> WeierstrassPoint:
        return WeierstrassPoint(18 * (t + a), 27 * y)

    def fwd(pt: QuarticPoint):
        if pt.kind == "at-infinity":
            root = rat_sqrt(a)
            if root is None:
                return NonRationalResult(
                    reason=f"infinity branch is rational only for square a; a = {a}"
                )
            t = root if pt.branch == "plus" else -root
            return _xy_from_t(t, 4 * a * (t + 1))
        if not contains(curve, pt):
            raise ValidationError("membership", f"{pt} is not on the fiber a = {a}")
        if pt.s == 0:
            if pt.w == 1:
                return WeierstrassPoint.identity()
            t = 2 * a * a - 3 * a
            return _xy_from_t(t, -4 * a * (t + 1))
        t = (pt.w + 1 + 2 * a * pt.s) / (pt.s * pt.s)
        y = 2 * (t * t - a) * pt.s - 4 * a * (t + 1)
        return _xy_from_t(t, y)

    def bwd(wpt: WeierstrassPoint) -> QuarticPoint:
        if wpt.is_identity():
            return ORIGIN
        if not model.on_curve(wpt):
            raise ValidationError("membership", f"{wpt} is not on {model}")
        t = wpt.x / 18 - a
        y = wpt.y / 27
        if t * t == a:
            # fiber of t contains one affine point and one infinity branch
            if y == -4 * a * (t + 1):
                s = (4 * a * a - 2 * t - 6 * a) / (4 * a * (t + 1))
                return QuarticPoint.affine(s, -1 - 2 * a * s + t * s * s)
            return QuarticPoint.at_infinity("plus" if t > 0 else "minus")
        s = (y + 4 * a * (t + 1)) / (2 * (t * t - a))
        if s == 0:
            return POINT_P if y == -4 * a * (t + 1) else ORIGIN
        return QuarticPoint.affine(s, -1 - 2 * a * s + t * s * s)

    return model, fwd, bwd


def _w_add(model: WeierstrassCurve, p1: WeierstrassPoint, p2: WeierstrassPoint) -> WeierstrassPoint:
    if p1.is_identity():
        return p2
    if p2.is_identity():
        return p1
    if p1.x == p2.x:
        if p1.y == -p2.y:
            return WeierstrassPoint.identity()
        slope = (3 * p1.x * p1.x + model.A) / (2 * p1.y)
    else:
        slope = (p2.y - p1.y) / (p2.x - p1.x)
    x3 = slope * slope - p1.x - p2.x
    y3 = slope * (p1.x - x3) - p1.y
    return WeierstrassPoint(x3, y3)


def _w_neg(pt: WeierstrassPoint) -> WeierstrassPoint:
    if pt.is_identity():
        return pt
    return WeierstrassPoint(pt.x, -pt.y)


def add(curve: QuarticCurve, p1: QuarticPoint, p2: QuarticPoint) -> QuarticPoint:
    """Group law on the fiber with identity O = (0, 1)."""
    model, fwd, bwd = to_weierstrass(curve)
    w1, w2 = fwd(p1), fwd(p2)
    if isinstance(w1, NonRationalResult) or isinstance(w2, NonRationalResult):
        raise IrrationalityError("cannot add non-rational points")
    return bwd(_w_add(model, w1, w2))


def negate(curve: QuarticCurve, pt: QuarticPoint) -> QuarticPoint:
    """The inverse of a point in the group with identity O."""
    model, fwd, bwd = to_weierstrass(curve)
    wpt = fwd(pt)
    if isinstance(wpt, NonRationalResult):
        raise IrrationalityError("cannot negate a non-rational point")
    return bwd(_w_neg(wpt))


def mul(curve: QuarticCurve, pt: QuarticPoint, n: int) -> QuarticPoint:
    """n-fold sum of a point; mul(pt, 0) is O and mul(pt, -n) the negation."""
    model, fwd, bwd = to_weierstrass(curve)
    wpt = fwd(pt)
    if isinstance(wpt, NonRationalResult):
        raise IrrationalityError("cannot multiply a non-rational point")
    if n < 0:
        wpt = _w_neg(wpt)
        n = -n
    acc = WeierstrassPoint.identity()
    addend = wpt
    while n:
        if n & 1:
            acc = _w_add(model, acc, addend)
        addend = _w_add(model, addend, addend)
        n >>= 1
    return bwd(acc)


def fiber_of_triple(e: EulerTriple) -> tuple[Fraction, QuarticCurve, QuarticPoint]:
    """Locate a solution triple on its fiber: the parameter m and the point above it."""
    cert = e.certificate()
    p = Fraction(e.x + e.z, cert.u)
    q = Fraction(e.y + e.z, cert.v)
    if p == 0 or q == 0:
        raise DegeneracyError("degenerate p or q")
    m = q / p
    if m * m == 1:
        raise DegeneracyError("parameter m = +/-1 gives no fiber")
    a = m * m / (m * m - 1)
    curve = QuarticCurve(a)
    s = p - 1
    w = rat_sqrt(curve.value_at(s))
    if w is None:
        raise IrrationalityError(f"quartic value at s = {s} is not a rational square")
    pt = QuarticPoint.affine(s, w)
    assert contains(curve, pt)
    return m, curve, pt
