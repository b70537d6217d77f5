"""F-linear operators on K and F-subspaces of K.

This module provides:
- LinearOperator: s x s matrix over F in the fixed basis of K
- Subspace: F-subspace of K stored by its reduced column echelon basis
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence

from core.errors import ContextMismatch, ShapeMismatch
from fields.base import FieldElement
from linalg.matrix import Matrix, Vector


# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """F-linear endomorphism of K.

    Attributes:
        ctx: The owning OreContext
        matrix: Columns are the coordinates of the images of the basis
    """
    ctx: object
    matrix: Matrix

    @classmethod
    def identity(cls, ctx) -> "LinearOperator":
        return cls(ctx, Matrix.identity(ctx.K, ctx.s))

    @classmethod
    def zero(cls, ctx) -> "LinearOperator":
        return cls(ctx, Matrix.zeros(ctx.K, ctx.s, ctx.s))

    @classmethod
    def of(cls, ctx, func) -> "LinearOperator":
        return cls(ctx, ctx.matrix_of(func))

    def __call__(self, x: FieldElement) -> FieldElement:
        return self.ctx.from_coordinates(self.matrix.apply(self.ctx.coordinates(x)))

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        """Composition self o other."""
        return LinearOperator(self.ctx, self.matrix @ other.matrix)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.ctx, self.matrix + other.matrix)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.ctx, self.matrix - other.matrix)

    def scale(self, c: FieldElement) -> "LinearOperator":
        return LinearOperator(self.ctx, self.matrix.scale(c))

    def trace(self) -> FieldElement:
        return self.matrix.trace()

    def rank(self) -> int:
        return self.matrix.rank()

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def kernel(self) -> "Subspace":
        return Subspace.from_vectors(self.ctx, self.matrix.nullspace())

    def image(self) -> "Subspace":
        return Subspace.from_vectors(self.ctx, self.matrix.columns())

    def restrict(self, V: "Subspace") -> Matrix:
        """s x dim V matrix of the restriction to V, in the basis of V."""
        return self.matrix @ V.basis

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearOperator) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"LinearOperator({self.matrix!r})"


@dataclass(frozen=True, eq=False)
class Subspace:
    """F-subspace of K.

    Attributes:
        ctx: The owning OreContext
        basis: s x d matrix in reduced column echelon form, rank d
    """
    ctx: object
    basis: Matrix

    @classmethod
    def from_vectors(cls, ctx, vectors: Sequence[Vector]) -> "Subspace":
        """Span of coordinate vectors."""
        m = Matrix.from_columns(ctx.K, list(vectors), ctx.s)
        return cls(ctx, m.column_echelon())

    @classmethod
    def span(cls, ctx, elements: Sequence[FieldElement]) -> "Subspace":
        """F-span of elements of K."""
        return cls.from_vectors(ctx, [ctx.coordinates(x) for x in elements])

    @classmethod
    def full(cls, ctx) -> "Subspace":
        return cls(ctx, Matrix.identity(ctx.K, ctx.s))

    @classmethod
    def zero(cls, ctx) -> "Subspace":
        return cls(ctx, Matrix.zeros(ctx.K, ctx.s, 0))

    @property
    def dimension(self) -> int:
        return self.basis.ncols

    def vectors(self) -> List[FieldElement]:
        """Basis as elements of K."""
        return [self.ctx.from_coordinates(col) for col in self.basis.columns()]

    def contains(self, x: FieldElement) -> bool:
        if self.dimension == 0:
            return x.is_zero()
        return self.basis.solve(self.ctx.coordinates(x)) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def coordinates_in_basis(self, v: Vector) -> Vector:
        """Coordinates of the K-coordinate vector v in the basis of the subspace."""
        if self.dimension == 0:
            if any(not x.is_zero() for x in v):
                raise ShapeMismatch("nonzero vector in the zero subspace")
            return []
        solution = self.basis.solve(v)
        if solution is None:
            raise ShapeMismatch("vector does not lie in the subspace")
        return solution

    def complement_basis(self) -> List[Vector]:
        """Standard basis vectors completing the basis of the subspace to a basis of K."""
        K = self.ctx.K
        chosen: List[Vector] = self.basis.columns()
        extra: List[Vector] = []
        for i in range(self.ctx.s):
            e = [K.zero] * self.ctx.s
            e[i] = K.one
            trial = Matrix.from_columns(K, chosen + [e], self.ctx.s)
            if trial.rank() == len(chosen) + 1:
                chosen.append(e)
                extra.append(e)
        return extra

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(self.ctx, self.basis.columns() + other.basis.columns())

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.dimension == 0 or other.dimension == 0:
            return Subspace.zero(self.ctx)
        joined = self.basis.hstack(-other.basis)
        vectors = [self.basis.apply(sol[: self.dimension]) for sol in joined.nullspace()]
        return Subspace.from_vectors(self.ctx, vectors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return False
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ContextMismatch("subspaces of different contexts")
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dimension}, basis={[repr(v) for v in self.vectors()]})"
