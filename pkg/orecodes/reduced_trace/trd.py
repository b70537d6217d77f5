"""Reduced trace and the central extensions of tau and upsilon.

This module provides:
- trd_matrix: Trace of x -> x f over C+ in the basis 1, X, ..., X^{s-1}
- trd_closed: Closed forms (field traces of the Z-coefficients, or tau of the top coordinate)
- trd_fraction / trd_class: Extensions to fractions and to classes modulo Z - z
- sigma0: Top centre coordinate (differential kind)
- tau_central / upsilon_central: Differential trace and norm on C+ = K[Z]
- comm_residue: Residue of a commutative fraction at an F-rational point
"""

import logging
from typing import List

from core.errors import NonSplitDenominator, VerificationFailure, WrongKind
from fields.base import FieldElement
from ore.central import CentralFraction, CentralPoly, centre_coords
from ore.fraction import OreFraction
from ore.polynomial import OrePoly


# Configure logging
logger = logging.getLogger(__name__)


def _require_centre(value: CentralPoly, label: str) -> CentralPoly:
    if not value.in_centre():
        raise VerificationFailure(f"{label} = {value!r} has coefficients outside F")
    return value


def trd_matrix(f: OrePoly) -> CentralPoly:
    """sum_i pi_i(X^i f), the trace of right multiplication by f."""
    ctx = f.ctx
    acc = CentralPoly.zero(ctx)
    xi_f = f
    for i in range(ctx.s):
        if i:
            xi_f = xi_f.x_times()
        acc = acc + centre_coords(xi_f)[i]
    return _require_centre(acc, "trd_matrix")


def sigma0(f: OrePoly) -> CentralPoly:
    """pi_{p-1}(f), the coefficient of X^{p-1} in f = sum g_i(Z) X^i."""
    ctx = f.ctx
    if not ctx.is_differential:
        raise WrongKind("sigma0 is defined for theta = id only")
    return centre_coords(f)[ctx.s - 1]


def sigma0_class(r: OrePoly) -> FieldElement:
    """sigma0 of a class modulo Z - z given by its representative of degree < s."""
    if not r.ctx.is_differential:
        raise WrongKind("sigma0 is defined for theta = id only")
    if r.degree >= r.ctx.s:
        raise VerificationFailure(f"class representative {r!r} is not reduced")
    return r.coeff(r.ctx.s - 1)


def tau_central(C: CentralPoly) -> CentralPoly:
    """tau applied coefficientwise; Z+ -linear with values in Z+."""
    ctx = C.ctx
    if not ctx.is_differential:
        raise WrongKind("the differential trace needs theta = id")
    return _require_centre(C.apply(ctx.tau), "tau_central")


def upsilon_central(C: CentralPoly) -> CentralPoly:
    """sum_i sum_{j<=i} (z_i delta^{p^j - 1}(C))^{p^{i-j}}, powers taken in K[Z]."""
    ctx = C.ctx
    if not ctx.is_differential:
        raise WrongKind("the differential norm needs theta = id")
    acc = CentralPoly.zero(ctx)
    for i, z in enumerate(ctx.z_coeffs):
        if z.is_zero():
            continue
        for j in range(i + 1):
            term = C.apply(lambda x: z * ctx.delta_power(x, ctx.p ** j - 1))
            acc = acc + term ** (ctx.p ** (i - j))
    return _require_centre(acc, "upsilon_central")


def trd_closed(f: OrePoly) -> CentralPoly:
    """Reduced trace in closed form.

    Frobenius kind: in the twisted variable Y = X + a, sum_k Tr(a_{sk}) Z^k.
    Differential kind: tau of the top centre coordinate.
    """
    ctx = f.ctx
    if ctx.is_differential:
        return tau_central(sigma0(f))
    g = ctx.to_working(f)
    coeffs = [ctx.field_trace(g.coeff(k * ctx.s)) for k in range(g.degree // ctx.s + 1)] if g.coeffs else []
    return _require_centre(CentralPoly(ctx, coeffs), "trd_closed")


trd = trd_closed


def trd_fraction(f: OreFraction) -> CentralFraction:
    """trd(num / den) = trd(num) / den."""
    return CentralFraction(trd_closed(f.num), f.den)


def trd_class(r: OrePoly, z: FieldElement) -> FieldElement:
    """Reduced trace of the class of r modulo Z - z, an element of F."""
    return trd_closed(r).evaluate(z)


def _series_quotient(num: List[FieldElement], den: List[FieldElement], count: int, zero: FieldElement) -> List[FieldElement]:
    """First count coefficients of num/den as power series (den[0] != 0)."""
    inv = den[0].inverse()
    out: List[FieldElement] = []
    for k in range(count):
        acc = num[k] if k < len(num) else zero
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv)
    return out


def comm_residue(g: CentralFraction, z: FieldElement) -> FieldElement:
    """Residue of g dZ at Z = z, with the denominator of g split over F."""
    den = g.den
    ctx = den.ctx
    if not den.splits():
        raise NonSplitDenominator(f"denominator {den!r} does not split over F")
    zero = ctx.K.zero
    if g.num.is_zero():
        return zero
    m = den.multiplicity(z)
    if m == 0:
        return zero
    rest = den // (CentralPoly.linear(ctx, z) ** m)
    expansion = _series_quotient(g.num.taylor_shift(z), rest.taylor_shift(z), m, zero)
    return expansion[m - 1]
