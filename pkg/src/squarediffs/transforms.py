"""The order-5 cycle on solutions and the elementary doubling iteration.

Engel's association sends a hyperbolic right triangle to another one; five
applications return to the start.  On integer triples the same map is
(x, y, z) -> (u*y, u*z, t*z) followed by division by the gcd.  The
doubling step produces a strictly larger solution from any solution with
x + y + z > 6, giving an elementary proof that solutions are infinite in
number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import rat_sqrt
from .errors import IrrationalityError, ValidationError
from .triples import EulerTriple, HyperbolicTriple, verify_euler


@dataclass(frozen=True)
class EngelStep:
    """The intermediate quantity e and the new leg it determines."""

    e: Fraction
    beta_bar_prime: Fraction


@dataclass(frozen=True)
class SixTuple:
    """A (not necessarily primitive or sorted) solution with its square roots.

    Constraints: x^2 - y^2 = t^2, x^2 - z^2 = u^2, y^2 - z^2 = v^2.
    """

    x: int
    y: int
    z: int
    t: int
    u: int
    v: int

    @classmethod
    def from_triple(cls, e: EulerTriple) -> "SixTuple":
        cert = e.certificate()
        return cls(e.x, e.y, e.z, cert.t, cert.u, cert.v)

    def is_valid(self) -> bool:
        return (
            self.x * self.x - self.y * self.y == self.t * self.t
            and self.x * self.x - self.z * self.z == self.u * self.u
            and self.y * self.y - self.z * self.z == self.v * self.v
        )

    def to_json(self) -> dict[str, str]:
        return {k: str(getattr(self, k)) for k in ("x", "y", "z", "t", "u", "v")}


def engel_step(a: Fraction, b: Fraction) -> EngelStep:
    """From legs a and b, the quantity e and the new leg e + sqrt(1 + e^2)."""
    e = (2 * a / (a * a - 1)) * ((b * b - 1) / (b * b + 1))
    root = rat_sqrt(1 + e * e)
    if root is None:
        raise IrrationalityError(f"1 + e^2 is not a rational square for e = {e}")
    return EngelStep(e=e, beta_bar_prime=e + root)


def _sine(x: Fraction) -> Fraction:
    return 2 * x / (1 + x * x)


def engel_cycle_hyperbolic(h: HyperbolicTriple) -> HyperbolicTriple:
    """One step of the 5-cycle: (a, b, c) -> (b, beta', h') with h' the new hypotenuse.

    The hypotenuse solves S h'^2 - 2 h' + S = 0 with
    S = sine(b) * sine(beta'); the root > 1 is taken (the two roots are
    mutual inverses).
    """
    step = engel_step(h.a, h.b)
    new_leg = step.beta_bar_prime
    s_prod = _sine(h.b) * _sine(new_leg)
    disc = rat_sqrt(1 - s_prod * s_prod)
    if disc is None:
        raise IrrationalityError(f"1 - S^2 is not a rational square for S = {s_prod}")
    hyp = (1 + disc) / s_prod
    return HyperbolicTriple(h.b, new_leg, hyp)


def engel_cycle_euler(e: EulerTriple) -> EulerTriple:
    """One step of the 5-cycle on integer triples: (x, y, z) -> (u*y, u*z, t*z)/gcd."""
    cert = e.certificate()
    nx = cert.u * e.y
    ny = cert.u * e.z
    nz = cert.t * e.z
    g = math.gcd(math.gcd(nx, ny), nz)
    triple, _ = verify_euler(nx // g, ny // g, nz // g)
    return triple


def orbit(e: EulerTriple, steps: int) -> list[EulerTriple]:
    """Iterate the cycle ``steps`` times; five steps return to the start."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    out = []
    current = e
    for _ in range(steps):
        current = engel_cycle_euler(current)
        out.append(current)
    return out


def doubling_step(st: SixTuple) -> SixTuple:
    """Produce the next, larger solution from a primitive six-tuple.

    The new tuple is (x^2+v^2, z^2+t^2, |y^2-u^2|, 2xv, 2yu, 2zt) divided
    by its gcd d, which is always 1 or 2.  Whenever x + y + z > 6 the new
    entry sum strictly exceeds the old one.
    """
    if not st.is_valid():
        raise ValidationError("six_tuple", f"{st} does not satisfy the square constraints")
    g_in = math.gcd(math.gcd(math.gcd(st.x, st.y), math.gcd(st.z, st.t)), math.gcd(st.u, st.v))
    if g_in != 1:
        raise ValidationError("primitivity", f"input six-tuple has gcd {g_in} != 1")
    nx = st.x * st.x + st.v * st.v
    ny = st.z * st.z + st.t * st.t
    nz = abs(st.y * st.y - st.u * st.u)
    nt = 2 * st.x * st.v
    nu = 2 * st.y * st.u
    nv = 2 * st.z * st.t
    d = math.gcd(math.gcd(math.gcd(nx, ny), math.gcd(nz, nt)), math.gcd(nu, nv))
    assert d in (1, 2), f"doubling gcd {d} outside {{1, 2}}"
    result = SixTuple(nx // d, ny // d, nz // d, nt // d, nu // d, nv // d)
    assert result.is_valid()
    return result


def primitive_triple(st: SixTuple) -> EulerTriple:
    """Canonical primitive triple underlying a six-tuple."""
    g = math.gcd(math.gcd(st.x, st.y), st.z)
    triple, _ = verify_euler(st.x // g, st.y // g, st.z // g)
    return triple
