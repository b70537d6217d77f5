"""Ore polynomial rings: contexts, polynomials, centre, fractions and Laurent elements."""

from ore.context import (
    ContextKind,
    OreContext,
    compute_centre_generator,
    context_from_descriptor,
    make_differential_context,
    make_frobenius_context,
)
from ore.polynomial import OrePoly, lclm_by_linear_algebra, ore_divmod, ore_lclm, ore_mul, ore_rgcd
from ore.central import CentralFraction, CentralPoly, centre_coords, reconstruct
from ore.fraction import OreFraction
from ore.laurent import LaurentOre, laurent_mul
from ore.twist import HilbertTwist, apply_substitution, hilbert_twist

__all__ = [
    "ContextKind",
    "OreContext",
    "compute_centre_generator",
    "context_from_descriptor",
    "make_differential_context",
    "make_frobenius_context",
    "OrePoly",
    "lclm_by_linear_algebra",
    "ore_divmod",
    "ore_lclm",
    "ore_mul",
    "ore_rgcd",
    "CentralFraction",
    "CentralPoly",
    "centre_coords",
    "reconstruct",
    "OreFraction",
    "LaurentOre",
    "laurent_mul",
    "HilbertTwist",
    "apply_substitution",
    "hilbert_twist",
]
