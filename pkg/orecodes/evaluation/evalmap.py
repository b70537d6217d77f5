"""Pseudo-linear evaluation of Ore polynomials on K.

This module provides:
- operator_matrix: Matrix of u = delta + c theta
- ev / ev_element: ev_c(P) = sum a_i u^i as an operator, or applied to one element
- ev_kernel: Kernel of ev_c(P) at an unramified point
- annihilator / multi_annihilator: Monic polynomials vanishing exactly on given subspaces
- complement_cofactor: D' with D' D = D D' = prod (Z - upsilon(c_i))
- ev_fraction: Evaluation of fractions whose denominator is invertible at upsilon(c)
- multiplication_matrix: mu_a
"""

import logging
from typing import List, Sequence

from core.errors import (
    NonDivisible,
    PreconditionError,
    RamifiedPoint,
    RepeatedUpsilon,
    ShapeMismatch,
    VerificationFailure,
)
from fields.base import FieldElement
from linalg.matrix import Matrix
from ore.central import CentralPoly
from ore.fraction import OreFraction
from ore.polynomial import OrePoly, ore_divmod, ore_lclm
from evaluation.subspace import LinearOperator, Subspace


# Configure logging
logger = logging.getLogger(__name__)


def _u(ctx, c: FieldElement, x: FieldElement) -> FieldElement:
    return ctx.delta(x) + c * ctx.theta(x)


def operator_matrix(ctx, c: FieldElement) -> LinearOperator:
    """Matrix of delta + c theta in the fixed basis."""
    return LinearOperator.of(ctx, lambda x: _u(ctx, c, x))


def multiplication_matrix(ctx, a: FieldElement) -> LinearOperator:
    """Matrix of x -> a x."""
    return LinearOperator.of(ctx, lambda x: a * x)


def ev_element(P: OrePoly, c: FieldElement, x: FieldElement) -> FieldElement:
    """ev_c(P)(x) = sum a_i u^i(x)."""
    ctx = P.ctx
    acc = ctx.K.zero
    y = x
    for i, a in enumerate(P.coeffs):
        if i:
            y = _u(ctx, c, y)
        if not a.is_zero():
            acc = acc + a * y
    return acc


def ev(P: OrePoly, c: FieldElement) -> LinearOperator:
    """ev_c(P) as an F-linear operator; ev_c(PQ) = ev_c(P) o ev_c(Q)."""
    ctx = P.ctx
    columns = [ctx.coordinates(ev_element(P, c, b)) for b in ctx.basis]
    return LinearOperator(ctx, Matrix.from_columns(ctx.K, columns, ctx.s))


def _require_unramified(ctx, c: FieldElement) -> None:
    if ctx.is_ramified(c):
        raise RamifiedPoint(f"{c!r} is ramified: delta + c theta is a multiple of the identity")


def ev_kernel(P: OrePoly, c: FieldElement) -> Subspace:
    """ker ev_c(P); its dimension is at most deg P."""
    _require_unramified(P.ctx, c)
    return ev(P, c).kernel()


def annihilator(ctx, c: FieldElement, V: Subspace) -> OrePoly:
    """The monic polynomial of degree dim V whose evaluation at c vanishes exactly on V.

    Basis vectors are processed left to right: after killing v with
    X - u(v)/v, the remaining vectors are pushed through that factor.
    """
    _require_unramified(ctx, c)
    P = OrePoly.one(ctx)
    remaining: List[FieldElement] = V.vectors()
    while remaining:
        v, rest = remaining[0], remaining[1:]
        factor = OrePoly(ctx, [-(_u(ctx, c, v) / v), ctx.K.one])
        P = factor * P
        remaining = [y for y in (ev_element(factor, c, w) for w in rest) if not y.is_zero()]
        if len(remaining) != len(rest):
            raise VerificationFailure("annihilator step collapsed an independent vector")
    logger.debug(f"[Evaluation] annihilator of dim {V.dimension} at {c!r}: {P!r}")
    return P


def check_points(ctx, points: Sequence[FieldElement]) -> List[FieldElement]:
    """Check that the points are unramified with pairwise distinct upsilon; return the upsilon values."""
    values: List[FieldElement] = []
    for c in points:
        _require_unramified(ctx, c)
        z = ctx.upsilon(c)
        if z in values:
            raise RepeatedUpsilon(
                f"upsilon({c!r}) = {z!r} repeats an earlier point",
                details={"point": repr(c), "upsilon": repr(z)},
            )
        values.append(z)
    return values


def multi_annihilator(ctx, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> OrePoly:
    """Monic D of degree sum dim V_i with ev_{c_i}(D) vanishing on V_i, as an iterated lclm."""
    if len(points) != len(subspaces):
        raise ShapeMismatch(f"{len(points)} points for {len(subspaces)} subspaces")
    check_points(ctx, points)
    D = OrePoly.one(ctx)
    for c, V in zip(points, subspaces):
        if V.dimension == 0:
            continue
        D = ore_lclm(D, annihilator(ctx, c, V))
    expected = sum(V.dimension for V in subspaces)
    if D.degree != expected:
        raise VerificationFailure(f"multi_annihilator has degree {D.degree}, expected {expected}")
    return D


def central_product(ctx, points: Sequence[FieldElement]) -> CentralPoly:
    """N = prod (Z - upsilon(c_i))."""
    return CentralPoly.from_roots(ctx, [ctx.upsilon(c) for c in points])


def complement_cofactor(D: OrePoly, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> OrePoly:
    """D' with D' D = N and D D' = N, where N = prod (Z - upsilon(c_i))."""
    ctx = D.ctx
    N = central_product(ctx, points).to_ore()
    Q, R = ore_divmod(N, D, "right")
    if not R.is_zero():
        raise NonDivisible(f"{D!r} does not right-divide {N!r}")
    if D * Q != N:
        raise NonDivisible(f"{D!r} does not left-divide {N!r}")
    return Q


def ev_fraction(f: OreFraction, c: FieldElement) -> LinearOperator:
    """ev_c(num / den) = den(upsilon(c))^{-1} ev_c(num)."""
    ctx = f.ctx
    value = f.den.evaluate(ctx.upsilon(c))
    if value.is_zero():
        raise PreconditionError(f"denominator {f.den!r} vanishes at upsilon({c!r})")
    return ev(f.num, c).scale(value.inverse())
