"""Exact linear algebra over the coefficient fields."""

from linalg.matrix import Matrix, Vector, vec_add, vec_is_zero, vec_scale, vec_sub

__all__ = [
    "Matrix",
    "Vector",
    "vec_add",
    "vec_is_zero",
    "vec_scale",
    "vec_sub",
]
