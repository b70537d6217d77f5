"""The pairing between Hom_F(K/V^perp, K) and Hom_F(V, K), dual codes and the duality check.

This module provides:
- pairing: sum_i Tr(phi_i^* o psi_i)
- paired_domains: The Hom-space paired with a given one
- dual_code: K-basis of the orthogonal of a K-linear code
- check_duality: LRS(k, c, V)^perp against LG(n - k, c^vee, V^perp)
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Sequence

from core.errors import ParameterError, ShapeMismatch
from fields.base import FieldElement
from linalg.matrix import Matrix
from evaluation.subspace import LinearOperator, Subspace
from duality.pairing import adjoint, orthogonal_subspace
from duality.star import c_dual
from codes.hom import (
    BlockDomain,
    CodeBasis,
    HomTuple,
    ambient_basis,
    k_basis,
)
from codes.families import lg_basis, lrs_basis


# Configure logging
logger = logging.getLogger(__name__)


def _block_pairing(ctx, phi: Matrix, psi: Matrix, V: Subspace) -> FieldElement:
    """Tr(psi o phi^*) with phi^* = B_V C."""
    if V.dimension == 0:
        return ctx.K.zero
    star = adjoint(LinearOperator(ctx, phi)).matrix
    # im phi^* lies in V, so psi only needs to be known on V
    C = Matrix.from_columns(ctx.K, [V.coordinates_in_basis(col) for col in star.columns()], V.dimension)
    return (psi @ C).trace()


def pairing(phi: HomTuple, psi: HomTuple) -> FieldElement:
    """<phi, psi> for phi over Hom_F(K/V_i^perp, K) and psi over Hom_F(V_i, K)."""
    ctx = phi.ctx
    if phi.m != psi.m:
        raise ShapeMismatch(f"pairing of {phi.m} blocks with {psi.m} blocks")
    total = ctx.K.zero
    for i, (dq, ds) in enumerate(zip(phi.domains, psi.domains)):
        if dq.kind != "quot" or ds.kind != "sub":
            raise ShapeMismatch(f"block {i}: pairing needs a quotient domain and a subspace domain")
        if dq.space != orthogonal_subspace(ctx, ds.space):
            raise ShapeMismatch(f"block {i}: quotient subspace is not V_{i}^perp")
        total = total + _block_pairing(ctx, phi.blocks[i], psi.blocks[i], ds.space)
    return total


def pair_words(x: HomTuple, y: HomTuple) -> FieldElement:
    """pairing with the arguments put in order."""
    if x.domains and x.domains[0].kind == "sub":
        return pairing(y, x)
    return pairing(x, y)


def paired_domains(ctx, domains: Sequence[BlockDomain]) -> List[BlockDomain]:
    """Hom_F(V, K) <-> Hom_F(K/V^perp, K), blockwise."""
    paired = []
    for d in domains:
        other = "quot" if d.kind == "sub" else "sub"
        paired.append(BlockDomain(other, orthogonal_subspace(ctx, d.space)))
    return paired


def dual_code(code: CodeBasis) -> CodeBasis:
    """K-basis of C^perp inside the paired Hom-space; dim_K C + dim_K C^perp = n."""
    ctx = code.ctx
    domains = paired_domains(ctx, code.domains)
    candidates = ambient_basis(ctx, domains)
    words = code.f_basis()
    rows = [[pair_words(b, w) for b in candidates] for w in words]
    system = Matrix(ctx.K, rows, len(candidates))

    solutions = []
    for x in system.nullspace():
        acc = HomTuple.zero(ctx, domains)
        for coefficient, b in zip(x, candidates):
            if not coefficient.is_zero():
                acc = acc + b.scale_F(coefficient)
        solutions.append(acc)

    generators = k_basis(ctx, solutions)
    if len(solutions) != ctx.s * len(generators):
        raise ParameterError(
            f"orthogonal of the {code.family} code has F-dimension {len(solutions)}, not {ctx.s} x {len(generators)}",
            details={"f_dimension": len(solutions), "k_dimension": len(generators)},
        )
    dual = CodeBasis(
        ctx, "dual", len(generators), list(code.points),
        [d.space for d in domains], domains, generators,
        metadata={"of": code.family},
    )
    logger.info(f"[Duality] dual of {code.family} code: dim {code.dimension} -> {len(generators)} (n={code.n})")
    return dual


@dataclass
class DualityReport:
    """Outcome of the LRS / LG duality check.

    Attributes:
        k: LRS dimension
        n: Code length
        pairings: <lg_j, lrs_i> for every pair of generators
        lrs_dimension: dim_K LRS(k, c, V)
        lg_dimension: dim_K LG(n - k, c^vee, V^perp)
        matches_dual: LG equals dual_code(LRS) as a subspace
        corrupted: A generator was perturbed before checking
    """
    k: int
    n: int
    pairings: List[List[FieldElement]]
    lrs_dimension: int
    lg_dimension: int
    matches_dual: bool
    corrupted: bool = False
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def all_zero(self) -> bool:
        return all(v.is_zero() for row in self.pairings for v in row)

    @property
    def dimensions_sum(self) -> bool:
        return self.lrs_dimension + self.lg_dimension == self.n

    @property
    def ok(self) -> bool:
        return self.all_zero and self.dimensions_sum and self.matches_dual


def corrupt_word(ctx, word: HomTuple, code: CodeBasis) -> HomTuple:
    """Add a rank-one map killing the quotient subspace, chosen outside the code."""
    K = ctx.K
    i = next(i for i, d in enumerate(word.domains) if d.length > 0)
    domain = word.domains[i]
    if domain.space.dimension:
        rows = domain.space.basis.transpose().nullspace()
    else:
        rows = Matrix.identity(K, ctx.s).rows
    for r in range(ctx.s):
        for row in rows:
            entries = [[K.zero] * domain.ncols for _ in range(ctx.s)]
            entries[r] = list(row)
            blocks = list(word.blocks)
            blocks[i] = blocks[i] + Matrix(K, entries, domain.ncols)
            candidate = HomTuple(ctx, blocks, word.domains)
            if not code.contains(candidate):
                return candidate
    raise ShapeMismatch("the code is the whole space; nothing to corrupt")


def check_duality(
    ctx,
    k: int,
    points: Sequence[FieldElement],
    subspaces: Sequence[Subspace],
    corrupt: bool = False,
) -> DualityReport:
    """Build LRS(k, c, V) and LG(n - k, c^vee, V^perp) and pair every generator.

    With corrupt=True the first LG generator is perturbed by a map outside the
    code (or a nonzero word is added to the zero code), so the subspace
    comparison must fail.
    """
    lrs = lrs_basis(ctx, k, points, subspaces)
    n = lrs.n
    dual_points = [c_dual(ctx, c) for c in points]
    perps = [orthogonal_subspace(ctx, V) for V in subspaces]
    lg = lg_basis(ctx, n - k, dual_points, perps)

    if corrupt:
        original = replace(lg, generators=list(lg.generators))
        if lg.generators:
            lg.generators[0] = corrupt_word(ctx, lg.generators[0], original)
        else:
            lg.generators.append(ambient_basis(ctx, lg.domains)[0])

    pairings = [[pairing(g, h) for h in lrs.generators] for g in lg.generators]
    expected = dual_code(lrs)
    report = DualityReport(
        k=k,
        n=n,
        pairings=pairings,
        lrs_dimension=lrs.dimension,
        lg_dimension=lg.dimension,
        matches_dual=expected.same_code(lg),
        corrupted=corrupt,
        metadata={"dual_points": [ctx.K.encode(c) for c in dual_points]},
    )
    status = "pass" if report.ok else "FAIL"
    logger.info(f"[Duality] k={k}, n={n}: {status}")
    return report
