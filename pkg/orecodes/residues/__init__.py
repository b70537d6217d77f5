"""Taylor expansions, skew residues and the residue formula."""

from residues.series import TruncatedSeries, series_derivative, substitute_series
from residues.taylor import (
    AdmissibleIso,
    ResidueReport,
    build_admissible,
    goppa_denominator,
    goppa_fraction,
    ord_and_principal,
    residue_degree_hypothesis,
    residue_sum,
    sres,
    sres_simple,
    ts,
)

__all__ = [
    "TruncatedSeries",
    "series_derivative",
    "substitute_series",
    "AdmissibleIso",
    "ResidueReport",
    "build_admissible",
    "goppa_denominator",
    "goppa_fraction",
    "ord_and_principal",
    "residue_degree_hypothesis",
    "residue_sum",
    "sres",
    "sres_simple",
    "ts",
]
