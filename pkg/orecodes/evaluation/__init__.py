"""Evaluation of Ore polynomials as F-linear operators on K."""

from evaluation.subspace import LinearOperator, Subspace
from evaluation.evalmap import (
    annihilator,
    central_product,
    check_points,
    complement_cofactor,
    ev,
    ev_element,
    ev_fraction,
    ev_kernel,
    multi_annihilator,
    multiplication_matrix,
    operator_matrix,
)

__all__ = [
    "LinearOperator",
    "Subspace",
    "annihilator",
    "central_product",
    "check_points",
    "complement_cofactor",
    "ev",
    "ev_element",
    "ev_fraction",
    "ev_kernel",
    "multi_annihilator",
    "multiplication_matrix",
    "operator_matrix",
]
