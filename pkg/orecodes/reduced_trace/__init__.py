"""Reduced trace T_rd : A+ -> Z+ and commutative residues."""

from reduced_trace.trd import (
    comm_residue,
    sigma0,
    sigma0_class,
    tau_central,
    trd,
    trd_class,
    trd_closed,
    trd_fraction,
    trd_matrix,
    upsilon_central,
)

__all__ = [
    "comm_residue",
    "sigma0",
    "sigma0_class",
    "tau_central",
    "trd",
    "trd_class",
    "trd_closed",
    "trd_fraction",
    "trd_matrix",
    "upsilon_central",
]
