"""The trace pairing <x, y>_K = tau(xy) on K.

This module provides:
- gram: Gram matrix of the pairing on the fixed basis
- pair: <x, y>_K
- adjoint: phi* with <phi*(x), y> = <x, phi(y)>
- orthogonal_subspace: V^perp
"""

import logging
from functools import lru_cache

from fields.base import FieldElement
from linalg.matrix import Matrix
from evaluation.subspace import LinearOperator, Subspace


# Configure logging
logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def gram(ctx) -> Matrix:
    """G_ij = tau(b_i b_j); invertible since the pairing is nondegenerate."""
    return Matrix(ctx.K, [[ctx.tau(bi * bj) for bj in ctx.basis] for bi in ctx.basis])


@lru_cache(maxsize=32)
def gram_inverse(ctx) -> Matrix:
    return gram(ctx).inverse()


def pair(ctx, x: FieldElement, y: FieldElement) -> FieldElement:
    return ctx.tau(x * y)


def adjoint(op: LinearOperator) -> LinearOperator:
    """G^{-1} M^T G."""
    ctx = op.ctx
    return LinearOperator(ctx, gram_inverse(ctx) @ op.matrix.transpose() @ gram(ctx))


def orthogonal_subspace(ctx, V: Subspace) -> Subspace:
    """{x : tau(xv) = 0 for v in V}; dim V + dim V^perp = s."""
    if V.dimension == 0:
        return Subspace.full(ctx)
    G = gram(ctx)
    constraints = Matrix(ctx.K, [G.apply(v) for v in V.basis.columns()])
    return Subspace.from_vectors(ctx, constraints.nullspace())
