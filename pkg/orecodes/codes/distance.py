"""Minimum sum-rank distance by enumeration.

This module provides:
- EnumerationChunk: One range of normalised coefficient vectors
- DistanceEnumerator: Scans the chunks concurrently under a semaphore
- min_distance_async / min_distance: Exhaustive minimum weight over nonzero codewords
- sampled_weight_bound: Minimum weight over random codewords (infinite K)
"""

import asyncio
import logging
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from config import Settings, get_settings
from core.errors import BudgetExceeded
from fields.base import FieldElement
from codes.hom import CodeBasis, sum_rank_weight


# Configure logging
logger = logging.getLogger(__name__)


class ChunkStatus(Enum):
    """Status of an enumeration chunk."""
    PENDING = "pending"
    SCANNING = "scanning"
    COMPLETED = "completed"


@dataclass
class EnumerationChunk:
    """A range [start, stop) of normalised coefficient vectors.

    Attributes:
        index: Chunk number
        start: First vector index
        stop: One past the last vector index
        status: Current scan status
        best: Smallest nonzero weight seen, None if every word was zero
        started_at: When scanning started
        completed_at: When scanning completed
    """
    index: int
    start: int
    stop: int
    status: ChunkStatus = ChunkStatus.PENDING
    best: Optional[int] = None
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "index": self.index,
            "range": [self.start, self.stop],
            "status": self.status.value,
            "best": self.best,
            "started_at": self.started_at.isoformat() if self.started_at else None,
            "completed_at": self.completed_at.isoformat() if self.completed_at else None,
        }


def normalized_count(order: int, k: int) -> int:
    """(Q^k - 1) / (Q - 1): one coefficient vector per K-line."""
    return (order ** k - 1) // (order - 1)


def normalized_vector(index: int, k: int, elements: List[FieldElement]) -> List[FieldElement]:
    """The index-th vector whose first nonzero entry is 1.

    Vectors are ordered by the position of that entry, then by the base-Q
    digits of the tail.
    """
    order = len(elements)
    zero, one = elements[0], elements[1]
    for lead in range(k):
        block = order ** (k - 1 - lead)
        if index < block:
            tail = []
            for _ in range(k - 1 - lead):
                index, digit = divmod(index, order)
                tail.append(elements[digit])
            return [zero] * lead + [one] + list(reversed(tail))
        index -= block
    raise IndexError("coefficient vector index out of range")


class DistanceEnumerator:
    """Concurrent exhaustive search for the minimum weight of a code.

    Sum-rank weight is constant on K-lines, so only coefficient vectors with
    leading entry 1 are scanned.
    """

    def __init__(
        self,
        code: CodeBasis,
        max_concurrent: int = 4,
        chunk_size: int = 256,
        settings: Optional[Settings] = None,
        on_progress: Optional[Callable[[int, int, ChunkStatus], None]] = None,
    ):
        """Initialize the enumerator.

        Args:
            code: Code with a K-basis over a finite field
            max_concurrent: Maximum concurrent scanning workers
            chunk_size: Vectors per chunk
            settings: Application settings (the budget)
            on_progress: Callback for progress updates (index, total, status)
        """
        self.code = code
        self.max_concurrent = max_concurrent
        self.chunk_size = chunk_size
        self.settings = settings or get_settings()
        self.on_progress = on_progress

        self._chunks: List[EnumerationChunk] = []
        self._semaphore: asyncio.Semaphore = asyncio.Semaphore(max_concurrent)

        K = code.ctx.K
        if not K.is_finite:
            raise BudgetExceeded(f"cannot enumerate codewords over the infinite field {K}")
        self._elements = [K.zero, K.one] + [x for x in K.elements() if not x.is_zero() and x != K.one]
        self.total = normalized_count(len(self._elements), len(code.generators))
        if self.total > self.settings.budget:
            raise BudgetExceeded(
                f"{self.total} codewords exceed the enumeration budget {self.settings.budget}",
                details={"codewords": self.total, "budget": self.settings.budget},
            )

    @property
    def chunks(self) -> List[EnumerationChunk]:
        """Get all enumeration chunks."""
        return self._chunks.copy()

    def get_progress(self) -> Dict[str, Any]:
        """Get current enumeration progress."""
        total = len(self._chunks)
        completed = sum(1 for c in self._chunks if c.status == ChunkStatus.COMPLETED)
        return {
            "total": total,
            "completed": completed,
            "progress_percent": (completed / total * 100) if total > 0 else 0,
            "chunks": [c.to_dict() for c in self._chunks],
        }

    def _scan(self, start: int, stop: int) -> Optional[int]:
        k = len(self.code.generators)
        best: Optional[int] = None
        for index in range(start, stop):
            word = self.code.combine(normalized_vector(index, k, self._elements))
            if word.is_zero():
                continue
            w = sum_rank_weight(word)
            if best is None or w < best:
                best = w
                if best == 1:
                    break
        return best

    async def _scan_chunk(self, chunk: EnumerationChunk) -> None:
        async with self._semaphore:
            chunk.status = ChunkStatus.SCANNING
            chunk.started_at = datetime.now()
            if self.on_progress:
                self.on_progress(chunk.index, len(self._chunks), chunk.status)

            chunk.best = await asyncio.to_thread(self._scan, chunk.start, chunk.stop)
            chunk.status = ChunkStatus.COMPLETED
            chunk.completed_at = datetime.now()
            if self.on_progress:
                self.on_progress(chunk.index, len(self._chunks), chunk.status)

    async def run(self) -> Optional[int]:
        """Scan every chunk; None when the code has no nonzero word."""
        self._chunks = [
            EnumerationChunk(index=i, start=start, stop=min(start + self.chunk_size, self.total))
            for i, start in enumerate(range(0, self.total, self.chunk_size))
        ]
        self._semaphore = asyncio.Semaphore(self.max_concurrent)

        await asyncio.gather(*[self._scan_chunk(chunk) for chunk in self._chunks])

        found = [c.best for c in self._chunks if c.best is not None]
        return min(found) if found else None


async def min_distance_async(code: CodeBasis, settings: Optional[Settings] = None) -> int:
    """Minimum sum-rank weight of a nonzero codeword.

    The zero code gets n + 1, the value for which the Singleton bound is tight.
    """
    settings = settings or get_settings()
    if not code.generators:
        return code.n + 1
    enumerator = DistanceEnumerator(
        code,
        max_concurrent=settings.max_workers,
        chunk_size=settings.enum_chunk,
        settings=settings,
    )
    logger.info(f"[MinDistance] {code.family} code: scanning {enumerator.total} K-lines")
    best = await enumerator.run()
    result = code.n + 1 if best is None else best
    logger.info(f"[MinDistance] {code.family} code: n={code.n}, k={code.dimension}, d={result}")
    return result


def min_distance(code: CodeBasis, settings: Optional[Settings] = None) -> int:
    """Synchronous wrapper around min_distance_async."""
    return asyncio.run(min_distance_async(code, settings))


def sampled_weight_bound(code: CodeBasis, samples: int, rng: np.random.Generator) -> Optional[int]:
    """Minimum weight over random nonzero K-combinations of the generators.

    An upper bound on the minimum distance; used when K is infinite.
    """
    ctx = code.ctx
    best: Optional[int] = None
    for _ in range(samples):
        word = code.combine([ctx.random_element(rng) for _ in code.generators])
        if word.is_zero():
            continue
        w = sum_rank_weight(word)
        if best is None or w < best:
            best = w
    logger.debug(f"[MinDistance] sampled bound over {samples} words: {best}")
    return best
