"""JSON documents printed by the command line.

Every command emits one of these models with model_dump_json(indent=2).
Field elements use the field encodings: integers or ascending coefficient
lists for finite fields, {"num": [...], "den": [...]} for F_p(t).
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ore.context import OreContext, context_from_descriptor


class ContextDescriptor(BaseModel):
    """Parameters that rebuild a context."""
    kind: str
    p: int
    e: int = 1
    s: int
    twist: Optional[Any] = None
    a: Optional[Any] = None
    modulus: Optional[List[int]] = Field(default=None, description="Ascending defining polynomial of K over F_p")

    @classmethod
    def from_context(cls, ctx: OreContext) -> "ContextDescriptor":
        return cls(**ctx.descriptor())

    def to_context(self) -> OreContext:
        return context_from_descriptor(self.model_dump())


class ContextReport(BaseModel):
    """Output of the ctx command."""
    descriptor: ContextDescriptor
    s: int
    centre: List[Any] = Field(description="Ascending coefficients of Z(X)")
    z_coeffs: Optional[List[Any]] = Field(default=None, description="(z_0, z_1) with Z(X) = z_1 X^p + z_0 X")
    basis: List[Any]
    gram: List[List[Any]] = Field(description="tau(b_i b_j) on the fixed basis")


class HomTupleModel(BaseModel):
    """One codeword: row-major F-entries of each block."""
    blocks: List[List[List[Any]]]
    domains: List[str]


class CodeReport(BaseModel):
    """Output of the code command."""
    kind: str
    k: int
    n: int
    dimension: int
    points: List[Any]
    subspaces: List[List[Any]]
    generators: List[HomTupleModel]
    distance: Optional[int] = None
    msrd: Optional[bool] = None


class PairingReport(BaseModel):
    """<lg_i, lrs_j>."""
    lg_index: int
    lrs_index: int
    value: Any


class DualCheckReport(BaseModel):
    """Output of the dualcheck command."""
    k: int
    n: int
    lrs_dimension: int
    lg_dimension: int
    dual_points: List[Any]
    pairings: List[PairingReport]
    all_zero: bool
    dimensions_sum: bool
    matches_dual: bool
    corrupted: bool
    passed: bool


class ResidueReport(BaseModel):
    """Output of the residue-demo command."""
    points: List[Any]
    values: List[Any]
    total: Any
    asserted: bool
    unasserted: bool = Field(description="True when the degree hypothesis fails and the zero sum is not claimed")


class SuiteReport(BaseModel):
    number: int
    name: str
    status: str
    checked: int
    error: Optional[str] = None
    seconds: Optional[float] = None


class SelftestReport(BaseModel):
    """Output of the selftest command."""
    seed: int
    trials: float
    suites: List[SuiteReport]
    passed: bool
    metadata: Dict[str, Any] = Field(default_factory=dict)
