"""Sum-rank ambient spaces and codes given by K-bases.

This module provides:
- BlockDomain: Hom_F(V, K) ("sub") or Hom_F(K/W, K) ("quot") for one block
- HomTuple: Tuple of F-matrices, one per block
- sum_rank_weight: Sum of the F-ranks of the blocks
- ambient_basis: F-basis of the full Hom-space
- CodeBasis: K-linear code given by generators, with F-span helpers
- k_basis: Greedy K-basis extraction from an F-spanning family
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from core.errors import ShapeMismatch
from fields.base import FieldElement
from linalg.matrix import Matrix, Vector
from evaluation.evalmap import multiplication_matrix
from evaluation.subspace import Subspace


# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BlockDomain:
    """Domain of one block.

    Attributes:
        kind: "sub" for Hom_F(V, K), "quot" for Hom_F(K/W, K)
        space: V or W
    """
    kind: str
    space: Subspace

    def __post_init__(self):
        if self.kind not in ("sub", "quot"):
            raise ShapeMismatch(f"unknown block domain kind: {self.kind}")

    @property
    def ncols(self) -> int:
        """Columns of a block matrix."""
        return self.space.dimension if self.kind == "sub" else self.space.ctx.s

    @property
    def length(self) -> int:
        """Contribution to n: dim V, or dim K/W."""
        s = self.space.ctx.s
        return self.space.dimension if self.kind == "sub" else s - self.space.dimension

    def admits(self, block: Matrix) -> bool:
        s = self.space.ctx.s
        if block.shape != (s, self.ncols):
            return False
        if self.kind == "quot" and self.space.dimension:
            return (block @ self.space.basis).is_zero()
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BlockDomain) and self.kind == other.kind and self.space == other.space

    def __hash__(self) -> int:
        return hash((self.kind, self.space))


def subspace_domains(subspaces: Sequence[Subspace]) -> List[BlockDomain]:
    return [BlockDomain("sub", V) for V in subspaces]


def quotient_domains(subspaces: Sequence[Subspace]) -> List[BlockDomain]:
    return [BlockDomain("quot", W) for W in subspaces]


def code_length(domains: Sequence[BlockDomain]) -> int:
    return sum(d.length for d in domains)


class HomTuple:
    """Element of Hom_F(V_1 or K/W_1, K) x ... x Hom_F(V_m or K/W_m, K).

    Attributes:
        ctx: The owning OreContext
        blocks: One s x d_i matrix over F per block
        domains: Matching block domains
    """

    __slots__ = ("ctx", "blocks", "domains")

    def __init__(self, ctx, blocks: Sequence[Matrix], domains: Sequence[BlockDomain]):
        if len(blocks) != len(domains):
            raise ShapeMismatch(f"{len(blocks)} blocks for {len(domains)} domains")
        for i, (block, domain) in enumerate(zip(blocks, domains)):
            if block.shape != (ctx.s, domain.ncols):
                raise ShapeMismatch(f"block {i} has shape {block.shape}, expected {(ctx.s, domain.ncols)}")
        self.ctx = ctx
        self.blocks: List[Matrix] = list(blocks)
        self.domains: List[BlockDomain] = list(domains)

    @classmethod
    def zero(cls, ctx, domains: Sequence[BlockDomain]) -> "HomTuple":
        return cls(ctx, [Matrix.zeros(ctx.K, ctx.s, d.ncols) for d in domains], domains)

    @classmethod
    def from_flat(cls, ctx, flat: Sequence[FieldElement], domains: Sequence[BlockDomain]) -> "HomTuple":
        """Inverse of flatten."""
        blocks = []
        pos = 0
        for d in domains:
            rows = []
            for _ in range(ctx.s):
                rows.append(list(flat[pos:pos + d.ncols]))
                pos += d.ncols
            blocks.append(Matrix(ctx.K, rows, d.ncols))
        if pos != len(flat):
            raise ShapeMismatch(f"flat vector of length {len(flat)}, expected {pos}")
        return cls(ctx, blocks, domains)

    @property
    def m(self) -> int:
        return len(self.blocks)

    def flatten(self) -> Vector:
        """Row-major F-entries of every block."""
        return [x for block in self.blocks for row in block.rows for x in row]

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def satisfies_constraints(self) -> bool:
        return all(d.admits(b) for d, b in zip(self.domains, self.blocks))

    def _check(self, other: "HomTuple") -> None:
        if self.domains != other.domains:
            raise ShapeMismatch("codewords live in different ambient spaces")

    def __add__(self, other: "HomTuple") -> "HomTuple":
        self._check(other)
        return HomTuple(self.ctx, [a + b for a, b in zip(self.blocks, other.blocks)], self.domains)

    def __neg__(self) -> "HomTuple":
        return HomTuple(self.ctx, [-b for b in self.blocks], self.domains)

    def __sub__(self, other: "HomTuple") -> "HomTuple":
        return self + (-other)

    def scale(self, a: FieldElement) -> "HomTuple":
        """K-action: compose every block with x -> a x."""
        mu = multiplication_matrix(self.ctx, a).matrix
        return HomTuple(self.ctx, [mu @ b for b in self.blocks], self.domains)

    def scale_F(self, c: FieldElement) -> "HomTuple":
        return HomTuple(self.ctx, [b.scale(c) for b in self.blocks], self.domains)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HomTuple) and self.domains == other.domains and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(tuple(self.blocks))

    def to_dict(self) -> Dict[str, Any]:
        K = self.ctx.K
        return {
            "blocks": [[[K.encode(x) for x in row] for row in b.rows] for b in self.blocks],
            "domains": [d.kind for d in self.domains],
        }

    def __repr__(self) -> str:
        return f"HomTuple({self.blocks!r})"


def sum_rank_weight(w: HomTuple) -> int:
    """sum_i rank_F(block_i)."""
    return sum(b.rank() for b in w.blocks)


def sum_rank_distance(x: HomTuple, y: HomTuple) -> int:
    return sum_rank_weight(x - y)


def _left_annihilators(ctx, W: Subspace) -> List[Vector]:
    """Row vectors l with l^T B_W = 0."""
    if W.dimension == 0:
        return Matrix.identity(ctx.K, ctx.s).rows
    return W.basis.transpose().nullspace()


def ambient_basis(ctx, domains: Sequence[BlockDomain]) -> List[HomTuple]:
    """F-basis of the ambient space, one block nonzero at a time."""
    K = ctx.K
    basis: List[HomTuple] = []
    for i, d in enumerate(domains):
        if d.kind == "sub":
            rows = Matrix.identity(K, d.ncols).rows
        else:
            rows = _left_annihilators(ctx, d.space)
        for r in range(ctx.s):
            for row in rows:
                blocks = [Matrix.zeros(K, ctx.s, e.ncols) for e in domains]
                entries = [[K.zero] * d.ncols for _ in range(ctx.s)]
                entries[r] = list(row)
                blocks[i] = Matrix(K, entries, d.ncols)
                basis.append(HomTuple(ctx, blocks, domains))
    return basis


def k_multiples(ctx, word: HomTuple) -> List[HomTuple]:
    """b word for b in the F-basis of K; their F-span is the K-line of word."""
    return [word.scale(b) for b in ctx.basis]


def _rank(ctx, vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return Matrix(ctx.K, list(vectors)).rank()


def k_basis(ctx, words: Sequence[HomTuple]) -> List[HomTuple]:
    """Greedy K-basis of the K-span of words."""
    chosen: List[HomTuple] = []
    span: List[Vector] = []
    rank = 0
    for w in words:
        if w.is_zero():
            continue
        trial = span + [w.flatten()]
        if _rank(ctx, trial) == rank:
            continue
        chosen.append(w)
        span = span + [v.flatten() for v in k_multiples(ctx, w)]
        rank = _rank(ctx, span)
    return chosen


@dataclass
class CodeBasis:
    """K-linear sum-rank code.

    Attributes:
        ctx: The owning OreContext
        family: "lrs", "lg", "dual" or "ambient"
        k: Parameter k of the construction (the K-dimension for lrs and lg)
        points: Evaluation points c_i
        subspaces: V_i (lrs) or the quotient subspaces (lg)
        domains: Block domains of the ambient space
        generators: K-basis
        metadata: Construction details (e.g. the Goppa multiplier)
    """
    ctx: Any
    family: str
    k: int
    points: List[FieldElement]
    subspaces: List[Subspace]
    domains: List[BlockDomain]
    generators: List[HomTuple]
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return code_length(self.domains)

    def f_basis(self) -> List[HomTuple]:
        """F-spanning family: the K-multiples of the generators by the basis of K."""
        return [w for g in self.generators for w in k_multiples(self.ctx, g)]

    def f_dimension(self) -> int:
        return _rank(self.ctx, [w.flatten() for w in self.f_basis()])

    @property
    def dimension(self) -> int:
        """dim_K, from the F-dimension of the span."""
        return self.f_dimension() // self.ctx.s

    def is_k_free(self) -> bool:
        return self.dimension == len(self.generators)

    def contains(self, word: HomTuple) -> bool:
        vectors = [w.flatten() for w in self.f_basis()]
        return _rank(self.ctx, vectors + [word.flatten()]) == _rank(self.ctx, vectors)

    def is_k_stable(self) -> bool:
        return all(self.contains(w) for w in self.f_basis())

    def same_code(self, other: "CodeBasis") -> bool:
        """Equality of the F-spans."""
        if self.domains != other.domains:
            return False
        mine = [w.flatten() for w in self.f_basis()]
        theirs = [w.flatten() for w in other.f_basis()]
        r = _rank(self.ctx, mine)
        return r == _rank(self.ctx, theirs) and r == _rank(self.ctx, mine + theirs)

    def combine(self, coefficients: Sequence[FieldElement]) -> HomTuple:
        """sum lambda_j g_j for K-coefficients lambda_j."""
        acc = HomTuple.zero(self.ctx, self.domains)
        for lam, g in zip(coefficients, self.generators):
            if not lam.is_zero():
                acc = acc + g.scale(lam)
        return acc

    def to_dict(self) -> Dict[str, Any]:
        K = self.ctx.K
        return {
            "kind": self.family,
            "k": self.k,
            "n": self.n,
            "dimension": len(self.generators),
            "points": [K.encode(c) for c in self.points],
            "subspaces": [[K.encode(v) for v in V.vectors()] for V in self.subspaces],
            "generators": [g.to_dict() for g in self.generators],
        }


def ambient_code(ctx, domains: Sequence[BlockDomain], points: Optional[Sequence[FieldElement]] = None) -> CodeBasis:
    """The whole Hom-space as a code."""
    generators = k_basis(ctx, ambient_basis(ctx, domains))
    subspaces = [d.space for d in domains]
    return CodeBasis(ctx, "ambient", len(generators), list(points or []), subspaces, list(domains), generators)
