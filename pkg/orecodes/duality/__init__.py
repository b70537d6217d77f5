"""Star involution, dual points and the trace pairing on K."""

from duality.pairing import adjoint, gram, gram_inverse, orthogonal_subspace, pair
from duality.star import (
    c_dual,
    dual_point,
    ev_star,
    resdual_rhs,
    star,
    star_central,
    star_class,
)

__all__ = [
    "adjoint",
    "gram",
    "gram_inverse",
    "orthogonal_subspace",
    "pair",
    "c_dual",
    "dual_point",
    "ev_star",
    "resdual_rhs",
    "star",
    "star_central",
    "star_class",
]
