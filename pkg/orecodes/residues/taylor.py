"""Taylor expansions at F-rational central points and skew residues.

This module provides:
- AdmissibleIso / build_admissible: An element Y with Z(Y) = z modulo N^M, N = Z - z
- ts: Taylor series of Ore polynomials and fractions
- ord_and_principal: Order of vanishing and principal part
- sres / sres_simple: Coefficient of T^{-1}, generically and at simple poles of g D^{-1}
- residue_sum: Sum of reduced traces of skew residues over the poles, cross-checked pointwise

Frobenius contexts are expanded in the twisted variable of the working
context; classes are returned in the caller's coordinates.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple, Union

from core.errors import (
    NonSplitDenominator,
    ParameterError,
    TruncationTooSmall,
    VerificationFailure,
    ZeroFunction,
    ZeroPointFrobenius,
    ZeroTruncation,
)
from fields.base import FieldElement
from ore.central import CentralPoly, centre_coords
from ore.fraction import OreFraction
from ore.polynomial import OrePoly, ore_divmod
from evaluation.evalmap import central_product, complement_cofactor, multi_annihilator
from evaluation.subspace import Subspace
from reduced_trace.trd import comm_residue, trd_class, trd_fraction
from residues.series import TruncatedSeries


# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AdmissibleIso:
    """Image Y of X under an admissible isomorphism at z, known modulo N^M.

    Attributes:
        ctx: The caller's context
        z: The point, an element of F
        M: Truncation order
        Y: Element of the working context
        N: Z - z in the working context
    """
    ctx: Any
    z: FieldElement
    M: int
    Y: OrePoly
    N: CentralPoly
    N_ore: OrePoly = field(init=False)
    modulus: OrePoly = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "N_ore", self.N.to_ore())
        object.__setattr__(self, "modulus", (self.N ** self.M).to_ore())

    @property
    def working(self):
        return self.ctx.working

    def apply(self, g: OrePoly, modulus: Union[OrePoly, None] = None) -> OrePoly:
        """g(Y), reduced modulo the given power of N (N^M by default)."""
        return g.substitute(self.Y, self.modulus if modulus is None else modulus)

    def residual(self) -> OrePoly:
        """Z(Y) - z modulo N^M."""
        return (self.working.centre.substitute(self.Y, self.modulus) - self.z).rmod(self.modulus)

    def is_valid(self) -> bool:
        return self.residual().is_zero() and (self.Y - OrePoly.x(self.working)).rmod(self.N_ore).is_zero()

    def __repr__(self) -> str:
        return f"AdmissibleIso(z={self.z!r}, M={self.M}, Y={self.Y!r})"


def _candidate(W, correction: CentralPoly, unit: FieldElement) -> OrePoly:
    """X + a_tau zeta (differential) or X (1 + a_tau eta) (Frobenius)."""
    shift = unit * correction.to_ore()
    X = OrePoly.x(W)
    if W.is_differential:
        return X + shift
    return X * (OrePoly.one(W) + shift)


def _digit(W, Y: OrePoly, N: CentralPoly, z: FieldElement, m: int) -> FieldElement:
    """The coefficient rho with Z(Y) - z = rho N^m modulo N^{m+1}."""
    modulus = (N ** (m + 1)).to_ore()
    R = (W.centre.substitute(Y, modulus) - z).rmod(modulus)
    coords = centre_coords(R)
    if any(not g.is_zero() for g in coords[1:]):
        raise VerificationFailure(f"Z(Y) - z is not central at step {m}")
    digits = coords[0].taylor_shift(z)
    if any(not d.is_zero() for d in digits[:m]):
        raise VerificationFailure(f"Z(Y) - z does not vanish modulo N^{m}")
    rho = digits[m] if len(digits) > m else W.K.zero
    if not W.is_in_F(rho):
        raise VerificationFailure(f"correction {rho!r} at step {m} is not in F")
    return rho


@lru_cache(maxsize=256)
def build_admissible(ctx, z: FieldElement, M: int, unit: Optional[FieldElement] = None) -> AdmissibleIso:
    """Admissible isomorphism at z known modulo N^M, by successive approximation.

    Each step adds a multiple of N^m to the central correction so that
    Z(Y) - z vanishes to one more order. The correction is carried by unit
    (any element with tau(unit) = 1, ctx.tau_unit by default).
    """
    if M < 1:
        raise ZeroTruncation(f"truncation order must be at least 1, got {M}")
    if not ctx.is_in_F(z):
        raise ParameterError(f"expansion point {z!r} does not lie in F")
    if ctx.is_frobenius and z.is_zero():
        raise ZeroPointFrobenius("Taylor expansions at z = 0 are not available when theta != id")
    W = ctx.working
    if unit is None:
        unit = W.tau_unit
    elif W.tau(unit) != W.K.one:
        raise ParameterError(f"tau({unit!r}) = {W.tau(unit)!r}, expected 1")
    N = CentralPoly.linear(W, z)
    correction = CentralPoly.zero(W)
    for m in range(1, M):
        rho = _digit(W, _candidate(W, correction, unit), N, z, m)
        if rho.is_zero():
            continue
        if W.is_frobenius:
            rho = rho / z
        correction = correction - (N ** m) * rho
    modulus = (N ** M).to_ore()
    Y = _candidate(W, correction, unit).rmod(modulus)
    iso = AdmissibleIso(ctx, z, M, Y, N)
    if not iso.is_valid():
        raise VerificationFailure(f"Z(Y) - z does not vanish modulo N^{M} at z = {z!r}")
    logger.debug(f"[Taylor] admissible iso at {z!r} to order {M}: Y = {Y!r}")
    return iso


def _as_fraction(f: Union[OrePoly, OreFraction]) -> OreFraction:
    return f if isinstance(f, OreFraction) else OreFraction(f)


def _poly_series(iso: AdmissibleIso, g: OrePoly) -> TruncatedSeries:
    """Series of a polynomial of the working context to precision M."""
    coeffs: List[OrePoly] = []
    residual = g.rmod(iso.modulus)
    for k in range(iso.M):
        digit = residual.rmod(iso.N_ore)
        coeffs.append(digit)
        remaining = iso.M - k - 1
        if remaining == 0:
            break
        modulus = (iso.N ** (remaining + 1)).to_ore()
        diff = (residual - iso.apply(digit, modulus)).rmod(modulus)
        quotient, rem = ore_divmod(diff, iso.N_ore, "right")
        if not rem.is_zero():
            raise VerificationFailure("Taylor residual is not divisible by N")
        residual = quotient.rmod((iso.N ** remaining).to_ore())
    return TruncatedSeries(iso, 0, coeffs, iso.M)


def _central_series(iso: AdmissibleIso, d: CentralPoly) -> TruncatedSeries:
    """d(z + T), exact."""
    return TruncatedSeries.from_scalars(iso, 0, d.taylor_shift(iso.z), None)


def _series(
    f: OreFraction, z: FieldElement, M: int, unit: Optional[FieldElement] = None,
) -> Tuple[AdmissibleIso, TruncatedSeries]:
    ctx = f.ctx
    iso = build_admissible(ctx, z, M, unit)
    W = ctx.working
    num = _poly_series(iso, ctx.to_working(f.num))
    den = CentralPoly(W, f.den.coeffs)
    if den.degree == 0:
        return iso, num.scale_right(den.leading.inverse())
    inverse = _central_series(iso, den).inverse_central(M)
    return iso, num * inverse


def ts(f: Union[OrePoly, OreFraction], z: FieldElement, M: int, unit: Optional[FieldElement] = None) -> TruncatedSeries:
    """Taylor series of f at z; coefficients are classes in the working context."""
    f = _as_fraction(f)
    _, series = _series(f, z, M, unit)
    if series.is_zero() and not f.is_zero():
        raise TruncationTooSmall(
            f"all coefficients below T^{series.prec} vanish; retry with a larger truncation",
            details={"z": repr(z), "M": M},
        )
    return series


def to_caller(ctx, r: OrePoly) -> OrePoly:
    """Class representative of the working context in the caller's coordinates."""
    return ctx.from_working(r)


def ord_and_principal(
    f: Union[OrePoly, OreFraction], z: FieldElement, unit: Optional[FieldElement] = None,
) -> Tuple[int, OrePoly]:
    """(ord_z f, coefficient of T^{ord}) in the caller's coordinates.

    Both are the same for every admissible isomorphism, so unit only
    selects which one is used for the computation.
    """
    f = _as_fraction(f)
    if f.is_zero():
        raise ZeroFunction("the zero function has no order of vanishing")
    M = max(1, f.num.degree // f.ctx.s + 2)
    _, series = _series(f, z, M, unit)
    if series.is_zero():
        raise TruncationTooSmall(f"valuation at {z!r} not reached within {M} terms")
    return series.valuation, to_caller(f.ctx, series.leading())


def sres(f: Union[OrePoly, OreFraction], z: FieldElement) -> OrePoly:
    """Skew residue at z as a class modulo Z - z in the caller's coordinates."""
    f = _as_fraction(f)
    ctx = f.ctx
    order = f.den.multiplicity(z) if f.den.degree > 0 else 0
    if order == 0 or f.is_zero():
        return OrePoly.zero(ctx)
    _, series = _series(f, z, order + 1)
    return to_caller(ctx, series.residue())


def goppa_denominator(ctx, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> Tuple[OrePoly, OrePoly]:
    """(A, D): A = multi_annihilator(c, V) and D with D A = A D = N."""
    if not points:
        raise ParameterError("at least one point is needed")
    A = multi_annihilator(ctx, points, subspaces)
    return A, complement_cofactor(A, points, subspaces)


def sres_simple(g: OrePoly, points: Sequence[FieldElement], subspaces: Sequence[Subspace], i: int) -> OrePoly:
    """Residue of g D^{-1} = g A / N at z_i = upsilon(c_i), from the simple-pole formula.

    The result is the class of g A (N/N_i)(z_i)^{-1} modulo N_i.
    """
    ctx = g.ctx
    A, _ = goppa_denominator(g.ctx, points, subspaces)
    values = [ctx.upsilon(c) for c in points]
    z = values[i]
    others = CentralPoly.from_roots(ctx, values[:i] + values[i + 1:])
    scale = others.evaluate(z).inverse()
    return (scale * (g * A)).rmod(CentralPoly.linear(ctx, z))


def goppa_fraction(g: OrePoly, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> OreFraction:
    """g D^{-1} written as g A / N."""
    A, _ = goppa_denominator(g.ctx, points, subspaces)
    return OreFraction(g * A, central_product(g.ctx, points))


@dataclass
class ResidueReport:
    """Per-point reduced traces of skew residues.

    Attributes:
        points: Distinct roots of the denominator
        values: T_rd(sres_z f) at each point
        total: Their sum
        asserted: Whether the degree hypothesis makes the zero sum a theorem
    """
    points: List[FieldElement]
    values: List[FieldElement]
    total: FieldElement
    asserted: bool

    @property
    def ok(self) -> bool:
        return not self.asserted or self.total.is_zero()


def residue_degree_hypothesis(f: OreFraction) -> bool:
    """Whether the zero-sum statement applies to f = P/D."""
    ctx = f.ctx
    s, deg_p, deg_d = ctx.s, f.num.degree, f.den.degree
    if ctx.is_differential:
        return deg_p <= s * deg_d - 2
    return deg_p <= s * (deg_d - 1) - 1


def residue_sum(f: Union[OrePoly, OreFraction]) -> ResidueReport:
    """Sum over the poles of T_rd(sres_z f).

    Each summand is computed twice, as res_z(T_rd(f) dZ) and as the reduced
    trace of the Taylor residue, and the two must agree.
    """
    f = _as_fraction(f)
    ctx = f.ctx
    zero = ctx.K.zero
    if f.den.degree <= 0:
        return ResidueReport([], [], zero, True)
    if not f.den.splits():
        raise NonSplitDenominator(f"denominator {f.den!r} does not split over F")
    roots = list(f.den.roots())
    if ctx.is_frobenius and any(z.is_zero() for z in roots):
        raise ZeroPointFrobenius("the denominator vanishes at Z = 0")
    trace = trd_fraction(f)
    values: List[FieldElement] = []
    for z in roots:
        commutative = comm_residue(trace, z)
        skew = trd_class(sres(f, z), z)
        if commutative != skew:
            raise VerificationFailure(
                f"reduced trace of the residue at {z!r} is {skew!r}, commutative residue is {commutative!r}"
            )
        values.append(skew)
    total = zero
    for v in values:
        total = total + v
    asserted = residue_degree_hypothesis(f)
    logger.info(f"[Taylor] residue sum over {len(roots)} points: {total!r} (asserted={asserted})")
    return ResidueReport(roots, values, total, asserted)
