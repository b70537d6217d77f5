"""The standard contexts and the code parameter grid.

CTX-A: F_9 / F_3 with theta = cube and delta = 0
CTX-B: F_2(t) / F_2(t^2) with delta = d/dt
CTX-C: F_3(t) / F_3(t^3) with delta = d/dt
CTX-D: F_9 / F_3 with delta = i (theta - id)
"""

from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

from fields.base import FieldElement
from ore.context import OreContext, make_differential_context, make_frobenius_context
from evaluation.subspace import Subspace


GridInstance = Tuple[List[FieldElement], List[Subspace]]


@lru_cache(maxsize=1)
def standard_contexts() -> Dict[str, OreContext]:
    return {
        "CTX-A": make_frobenius_context(3, 1, 2, 0),
        "CTX-B": make_differential_context(2, 1),
        "CTX-C": make_differential_context(3, 1),
        "CTX-D": make_frobenius_context(3, 1, 2, [0, 1]),
    }


def _grid_generators(ctx: OreContext) -> Tuple[List[FieldElement], List[FieldElement]]:
    """(points, spanning elements): (1, 1+i) and (1, i) for F_9; (1, t) and (1, t) for F_2(t)."""
    K = ctx.K
    if ctx.is_frobenius:
        i = K.gen
        return [K.one, K.one + i], [K.one, i]
    t = K.gen
    return [K.one, t], [K.one, t]


def grid_subspaces(ctx: OreContext) -> List[Subspace]:
    """0, span{1}, span{i or t}, K."""
    _, spans = _grid_generators(ctx)
    return [Subspace.zero(ctx)] + [Subspace.span(ctx, [x]) for x in spans] + [Subspace.full(ctx)]


def code_grid(ctx: OreContext) -> List[GridInstance]:
    """Every (c, V) with m in {1, 2} on the grid points and subspaces."""
    points, _ = _grid_generators(ctx)
    spaces = grid_subspaces(ctx)
    grid: List[GridInstance] = []
    for c in points:
        for V in spaces:
            grid.append(([c], [V]))
    for V1, V2 in product(spaces, repeat=2):
        grid.append((list(points), [V1, V2]))
    return grid
