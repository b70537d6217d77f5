"""Exact dense matrices over the package fields.

This module provides:
- Matrix: Immutable-by-convention dense matrix with Gauss-Jordan elimination
- Vector helpers: add, scale and zero tests on plain lists of field elements

Entries are field elements (finite field elements or rational functions);
all elimination is exact.
"""

from typing import List, Optional, Sequence, Tuple

from core.errors import ParameterError, ShapeMismatch
from fields.base import Field, FieldElement


Vector = List[FieldElement]


def vec_is_zero(v: Sequence[FieldElement]) -> bool:
    return all(x.is_zero() for x in v)


def vec_add(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> Vector:
    return [x + y for x, y in zip(a, b)]


def vec_sub(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> Vector:
    return [x - y for x, y in zip(a, b)]


def vec_scale(c: FieldElement, v: Sequence[FieldElement]) -> Vector:
    return [c * x for x in v]


class Matrix:
    """Dense matrix over a field.

    Attributes:
        field: Field of the entries
        rows: Row-major entries
        nrows: Number of rows
        ncols: Number of columns
    """

    def __init__(self, field: Field, rows: Sequence[Sequence[FieldElement]], ncols: Optional[int] = None):
        self.field = field
        self.rows: List[List[FieldElement]] = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ShapeMismatch("ragged matrix rows")

    # Constructors

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence[FieldElement]], nrows: int) -> "Matrix":
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return cls(field, rows, len(columns))

    # Access

    def column(self, j: int) -> Vector:
        return [r[j] for r in self.rows]

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, index: Tuple[int, int]) -> FieldElement:
        i, j = index
        return self.rows[i][j]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    # Arithmetic

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, [vec_add(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, [vec_sub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-x for x in r] for r in self.rows], self.ncols)

    def scale(self, c: FieldElement) -> "Matrix":
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        zero = self.field.zero
        rows = []
        for r in self.rows:
            out = []
            for col in cols:
                acc = zero
                for a, b in zip(r, col):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                out.append(acc)
            rows.append(out)
        return Matrix(self.field, rows, other.ncols)

    def apply(self, v: Sequence[FieldElement]) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ShapeMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)], self.nrows)

    def trace(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise ShapeMismatch("trace of a non-square matrix")
        acc = self.field.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ShapeMismatch("row counts differ")
        return Matrix(self.field, [a + b for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(tuple(tuple(r) for r in self.rows))

    def __repr__(self) -> str:
        return "Matrix(" + "; ".join(", ".join(repr(x) for x in r) for r in self.rows) + ")"

    # Elimination

    def rref(self) -> Tuple["Matrix", List[int]]:
        """Reduced row echelon form and pivot columns (Gauss-Jordan)."""
        m = [list(r) for r in self.rows]
        pivots: List[int] = []
        piv_r = 0
        for piv_c in range(self.ncols):
            if piv_r == self.nrows:
                break
            for i_row in range(piv_r, self.nrows):
                if not m[i_row][piv_c].is_zero():
                    break
            else:
                continue
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            inv = m[piv_r][piv_c].inverse()
            m[piv_r] = [x * inv for x in m[piv_r]]
            for r in range(self.nrows):
                if r == piv_r:
                    continue
                fr = m[r][piv_c]
                if fr.is_zero():
                    continue
                m[r] = [a - fr * b for a, b in zip(m[r], m[piv_r])]
            pivots.append(piv_c)
            piv_r += 1
        return Matrix(self.field, m, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> List[Vector]:
        """Basis of the right kernel, one vector per free column."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [self.field.zero] * self.ncols
            v[f] = self.field.one
            for r, pc in enumerate(pivots):
                v[pc] = -reduced.rows[r][f]
            basis.append(v)
        return basis

    def solve(self, b: Sequence[FieldElement]) -> Optional[Vector]:
        """One solution of self·x = b, or None when the system is inconsistent."""
        if len(b) != self.nrows:
            raise ShapeMismatch(f"right-hand side of length {len(b)} for {self.shape} matrix")
        augmented = Matrix(self.field, [r + [bi] for r, bi in zip(self.rows, b)], self.ncols + 1)
        reduced, pivots = augmented.rref()
        if self.ncols in pivots:
            return None
        x = [self.field.zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = reduced.rows[r][self.ncols]
        return x

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.nrows
        reduced, pivots = self.hstack(Matrix.identity(self.field, n)).rref()
        if pivots[:n] != list(range(n)):
            raise ParameterError("matrix is singular")
        return Matrix(self.field, [r[n:] for r in reduced.rows], n)

    def column_echelon(self) -> "Matrix":
        """Reduced column echelon form with zero columns dropped (canonical basis of the column space)."""
        reduced, pivots = self.transpose().rref()
        basis_rows = reduced.rows[: len(pivots)]
        return Matrix.from_columns(self.field, basis_rows, self.nrows)
