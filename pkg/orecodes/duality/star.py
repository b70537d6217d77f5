"""The star involution and the dual evaluation point.

This module provides:
- star: f -> f* on polynomials, Laurent elements and fractions
- star_central: The induced map on the centre (Z -> -Z, or Z -> Z^{-1})
- c_dual / dual_point: c -> c^vee on evaluation points and z -> -z or 1/z on central points
- ev_star: ev_{c^vee}(f*) with negative powers of Z evaluated through upsilon(c^vee)
- star_class / resdual_rhs: Star of residue classes, as used in the residue duality
"""

import logging
from typing import Union

from core.errors import RamifiedPoint, WrongKind
from fields.base import FieldElement
from ore.central import CentralPoly
from ore.fraction import OreFraction
from ore.laurent import LaurentOre
from ore.polynomial import OrePoly
from evaluation.evalmap import ev, ev_fraction
from evaluation.subspace import LinearOperator


# Configure logging
logger = logging.getLogger(__name__)

Starrable = Union[OrePoly, LaurentOre, OreFraction]


def _star_poly_differential(f: OrePoly) -> OrePoly:
    """sum (-1)^i X^i a_i."""
    ctx = f.ctx
    acc = OrePoly.zero(ctx)
    minus_x = -OrePoly.x(ctx)
    power = OrePoly.one(ctx)
    for i, a in enumerate(f.coeffs):
        if i:
            power = power * minus_x
        if not a.is_zero():
            acc = acc + power * OrePoly.constant(ctx, a)
    return acc


def _star_laurent(f: LaurentOre) -> LaurentOre:
    """sum c_v Y^v -> sum Y^{-v} c_v = sum theta^{-v}(c_v) Y^{-v}."""
    ctx = f.ctx
    coeffs = [ctx.theta_power(c, -(f.valuation + j)) for j, c in enumerate(f.coeffs)]
    return LaurentOre(ctx, -f.top, list(reversed(coeffs)))


def star_central(d: CentralPoly) -> OreFraction:
    """d(Z)* as a fraction: d(-Z) when theta = id, d(Z^{-1}) = rev(d)/Z^k otherwise."""
    ctx = d.ctx
    if ctx.is_differential:
        return OreFraction(CentralPoly(ctx, [c if k % 2 == 0 else -c for k, c in enumerate(d.coeffs)]).to_ore())
    k = d.degree
    reversed_d = CentralPoly(ctx, list(reversed(d.coeffs)))
    return OreFraction(reversed_d.to_ore(), CentralPoly.Z(ctx) ** k)


def star(f: Starrable) -> Starrable:
    """The anti-automorphism f -> f*; star(star(f)) = f and star(fg) = star(g) star(f).

    Polynomials of Frobenius contexts star to Laurent elements. Fractions keep
    a central denominator.
    """
    if isinstance(f, LaurentOre):
        return _star_laurent(f)
    if isinstance(f, OrePoly):
        if f.ctx.is_differential:
            return _star_poly_differential(f)
        return _star_laurent(LaurentOre.from_ore(f))
    if isinstance(f, OreFraction):
        return _star_fraction(f)
    raise WrongKind(f"cannot star {type(f).__name__}")


def _star_fraction(f: OreFraction) -> OreFraction:
    ctx = f.ctx
    den = f.den
    if ctx.is_differential:
        num = _star_poly_differential(f.num)
        flipped = CentralPoly(ctx, [c if k % 2 == 0 else -c for k, c in enumerate(den.coeffs)])
        return OreFraction(num, flipped)
    # (num / d(Z))* = num* Z^k / rev(d)(Z) with k = deg d
    k = den.degree
    shifted = _star_laurent(LaurentOre.from_ore(f.num))
    shifted = LaurentOre(ctx, shifted.valuation + ctx.s * k, shifted.coeffs)
    as_fraction = shifted.to_fraction()
    reversed_d = CentralPoly(ctx, list(reversed(den.coeffs)))
    return OreFraction(as_fraction.num, as_fraction.den * reversed_d)


def c_dual(ctx, c: FieldElement) -> FieldElement:
    """-c when theta = id, 1/(c + a) - a otherwise."""
    if ctx.is_ramified(c):
        raise RamifiedPoint(f"{c!r} is ramified and has no dual point")
    if ctx.is_differential:
        return -c
    return (c + ctx.a).inverse() - ctx.a


def dual_point(ctx, z: FieldElement) -> FieldElement:
    """Image of a central point under star: -z, or 1/z."""
    if ctx.is_differential:
        return -z
    return z.inverse()


def ev_star(f: OrePoly, c: FieldElement) -> LinearOperator:
    """ev_{c^vee}(f*); equals the adjoint of ev_c(f) under <x, y> = tau(xy)."""
    ctx = f.ctx
    point = c_dual(ctx, c)
    image = star(f)
    if isinstance(image, OrePoly):
        return ev(image, point)
    return ev_fraction(image.to_fraction(), point)


def star_class(r: OrePoly, z: FieldElement) -> OrePoly:
    """Star of the class of r modulo Z - z, as a class modulo Z - dual_point(z)."""
    ctx = r.ctx
    target = dual_point(ctx, z)
    image = star(r)
    if isinstance(image, OrePoly):
        return image.rmod(CentralPoly.linear(ctx, target))
    return image.reduce_mod(target)


def resdual_rhs(r: OrePoly, z_bar: FieldElement) -> OrePoly:
    """-r* (theta = id) or -(Z^{-2} r)* = -z^2 r* (theta != id), modulo Z - z for z the dual of z_bar."""
    ctx = r.ctx
    image = star_class(r, z_bar)
    if ctx.is_differential:
        return -image
    z = dual_point(ctx, z_bar)
    return -((z * z) * image)
