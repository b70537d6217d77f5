"""Linearized Reed-Solomon and linearized Goppa codes.

This module provides:
- lrs_encode / lrs_basis: ev_{c,V}(P) and the code ev_{c,V}(A_{<k})
- goppa_multiplier: The Ore fraction P of the Goppa construction
- lg_basis: gamma_{c,V}(A_{<k} P) as a CodeBasis over Hom_F(K/V_i, K)
- psi_setup: The isomorphism LRS(k, c, W) -> LG(k, c, V) given by tau_i
"""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence

from core.errors import KTooLarge, ParameterError, ShapeMismatch, VerificationFailure
from fields.base import FieldElement
from linalg.matrix import Matrix
from ore.central import CentralPoly
from ore.fraction import OreFraction
from ore.polynomial import OrePoly
from evaluation.evalmap import central_product, check_points, ev, ev_fraction, operator_matrix
from evaluation.subspace import LinearOperator, Subspace
from residues.taylor import goppa_denominator
from codes.hom import (
    CodeBasis,
    HomTuple,
    code_length,
    quotient_domains,
    subspace_domains,
    sum_rank_weight,
)


# Configure logging
logger = logging.getLogger(__name__)


def _check_shapes(points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> None:
    if len(points) != len(subspaces):
        raise ShapeMismatch(f"{len(points)} points for {len(subspaces)} subspaces")
    if not points:
        raise ParameterError("at least one point is needed")


def lrs_encode(P: OrePoly, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> HomTuple:
    """(ev_{c_1}(P)|V_1, ..., ev_{c_m}(P)|V_m)."""
    _check_shapes(points, subspaces)
    ctx = P.ctx
    blocks = [ev(P, c).restrict(V) for c, V in zip(points, subspaces)]
    return HomTuple(ctx, blocks, subspace_domains(subspaces))


def lrs_basis(ctx, k: int, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> CodeBasis:
    """Images of 1, X, ..., X^{k-1}; a K-basis of LRS(k, c, V) when k <= n."""
    _check_shapes(points, subspaces)
    check_points(ctx, points)
    domains = subspace_domains(subspaces)
    n = code_length(domains)
    if n == 0:
        raise ParameterError("code length is 0")
    if k < 0 or k > n:
        raise KTooLarge(f"k = {k} is outside [0, {n}]", details={"k": k, "n": n})

    generators: List[HomTuple] = []
    # ev_c(X^j) = u_c^j, accumulated per point
    powers = [LinearOperator.identity(ctx) for _ in points]
    steps = [operator_matrix(ctx, c) for c in points]
    for j in range(k):
        if j:
            powers = [u @ p for u, p in zip(steps, powers)]
        blocks = [p.restrict(V) for p, V in zip(powers, subspaces)]
        generators.append(HomTuple(ctx, blocks, domains))

    logger.info(f"[Codes] LRS basis: k={k}, n={n}, m={len(points)}")
    return CodeBasis(ctx, "lrs", k, list(points), list(subspaces), domains, generators)


def _quotient_length(ctx, subspaces: Sequence[Subspace]) -> int:
    return sum(ctx.s - V.dimension for V in subspaces)


def goppa_multiplier(ctx, k: int, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> OreFraction:
    """P = D^{-1} (theta = id) or Z^{-m-1} (X+a)^{n-k} D^{-1} (theta != id).

    D satisfies D A = A D = N with A = multi_annihilator(c, V), so D^{-1} = A/N
    and im ev_{c_i}(D) = V_i.
    """
    _check_shapes(points, subspaces)
    n = _quotient_length(ctx, subspaces)
    if n == 0:
        raise ParameterError("code length is 0")
    if k < 0 or k >= n:
        raise KTooLarge(f"k = {k} must satisfy 0 <= k < n = {n}", details={"k": k, "n": n})
    A, _ = goppa_denominator(ctx, points, subspaces)
    N = central_product(ctx, points)
    if ctx.is_differential:
        return OreFraction(A, N)
    twisted = OrePoly(ctx, [ctx.a, ctx.K.one]) ** (n - k)
    return OreFraction(twisted * A, N * CentralPoly.Z(ctx) ** (len(points) + 1))


def _regular_part(P: OreFraction, z: FieldElement) -> OreFraction:
    """P (Z - z); the denominator of P has a simple zero at z."""
    ctx = P.ctx
    quotient, remainder = divmod(P.den, CentralPoly.linear(ctx, z))
    if not remainder.is_zero():
        raise VerificationFailure(f"denominator of the Goppa multiplier does not vanish at {z!r}")
    return OreFraction(P.num, quotient)


def goppa_residue_operators(P: OreFraction, points: Sequence[FieldElement]) -> List[LinearOperator]:
    """tilde tau_i = ev_{c_i}(P N_i); ev_{c_i}(sres_{z_i}(g P)) = ev_{c_i}(g) o tilde tau_i."""
    ctx = P.ctx
    return [ev_fraction(_regular_part(P, ctx.upsilon(c)), c) for c in points]


def lg_basis(ctx, k: int, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> CodeBasis:
    """gamma(X^j P) for 0 <= j < k; block i lives in Hom_F(K/V_i, K)."""
    _check_shapes(points, subspaces)
    check_points(ctx, points)
    domains = quotient_domains(subspaces)
    n = code_length(domains)
    if k == 0:
        if n == 0:
            raise ParameterError("code length is 0")
        logger.info(f"[Codes] LG basis: k=0 gives the zero code (n={n})")
        return CodeBasis(ctx, "lg", 0, list(points), list(subspaces), domains, [])

    P = goppa_multiplier(ctx, k, points, subspaces)
    taus = goppa_residue_operators(P, points)
    for i, (tau, V) in enumerate(zip(taus, subspaces)):
        if V.dimension and not tau.restrict(V).is_zero():
            raise VerificationFailure(f"residue operator {i} does not vanish on V_{i}")

    generators: List[HomTuple] = []
    powers = list(taus)
    steps = [operator_matrix(ctx, c) for c in points]
    for j in range(k):
        if j:
            powers = [u @ p for u, p in zip(steps, powers)]
        generators.append(HomTuple(ctx, [p.matrix for p in powers], domains))

    logger.info(f"[Codes] LG basis: k={k}, n={n}, m={len(points)}")
    return CodeBasis(
        ctx, "lg", k, list(points), list(subspaces), domains, generators,
        metadata={"multiplier": repr(P)},
    )


@dataclass
class PsiIsomorphism:
    """LRS(k, c, W) -> LG(k, c, V), x_i -> x_i o tau_i.

    Attributes:
        ctx: The owning OreContext
        k: Code parameter
        points: c_i
        subspaces: V_i
        images: W_i = im tilde tau_i
        operators: tilde tau_i on K
        factors: tau_i in coordinates, dim W_i x s
    """
    ctx: object
    k: int
    points: List[FieldElement]
    subspaces: List[Subspace]
    images: List[Subspace]
    operators: List[LinearOperator]
    factors: List[Matrix] = field(default_factory=list)

    def __post_init__(self):
        if not self.factors:
            self.factors = [
                Matrix.from_columns(
                    self.ctx.K,
                    [W.coordinates_in_basis(col) for col in tau.matrix.columns()],
                    W.dimension,
                )
                for W, tau in zip(self.images, self.operators)
            ]

    def is_isomorphism(self) -> bool:
        """tau_i: K/V_i -> W_i is bijective for every i."""
        s = self.ctx.s
        return all(W.dimension == s - V.dimension for W, V in zip(self.images, self.subspaces))

    def apply(self, word: HomTuple) -> HomTuple:
        domains = quotient_domains(self.subspaces)
        if [d.space for d in word.domains] != self.images:
            raise ShapeMismatch("word does not live on the W_i")
        return HomTuple(self.ctx, [b @ T for b, T in zip(word.blocks, self.factors)], domains)

    def source_code(self) -> CodeBasis:
        return lrs_basis(self.ctx, self.k, self.points, self.images)

    def preserves_weight(self, word: HomTuple) -> bool:
        return sum_rank_weight(self.apply(word)) == sum_rank_weight(word)


def psi_setup(ctx, k: int, points: Sequence[FieldElement], subspaces: Sequence[Subspace]) -> PsiIsomorphism:
    """W_i = im ev_{c_i}(P N_i) and the induced tau_i."""
    check_points(ctx, points)
    P = goppa_multiplier(ctx, k, points, subspaces)
    operators = goppa_residue_operators(P, points)
    images = [tau.image() for tau in operators]
    psi = PsiIsomorphism(ctx, k, list(points), list(subspaces), images, operators)
    if not psi.is_isomorphism():
        dims = [W.dimension for W in images]
        raise VerificationFailure(f"tau_i is not an isomorphism onto its image: dim W = {dims}")
    logger.debug(f"[Codes] psi images: {[W.dimension for W in images]}")
    return psi
