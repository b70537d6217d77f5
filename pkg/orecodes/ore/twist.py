"""Hilbert twists of Frobenius contexts.

This module provides:
- HilbertTwist: The ring isomorphism K[X; theta, a delta_0] -> K[X; theta, (a+b) delta_0], X -> X + b
- hilbert_twist: Build the twisted context and the substitution
- apply_substitution: sum f_i (X + b)^i computed in a target context

Evaluation is compatible with the twist: ev_c(f) = ev_{c-b}(twist(f)).
"""

from dataclasses import dataclass
from typing import Tuple

from core.errors import ContextMismatch, NotApplicable
from fields.base import FieldElement
from ore.context import ContextKind, OreContext
from ore.polynomial import OrePoly


def apply_substitution(f: OrePoly, target: OreContext, b: FieldElement) -> OrePoly:
    """Image of f under X -> X + b, computed in the target context."""
    Y = OrePoly(target, [b, target.K.one])
    acc = OrePoly.zero(target)
    for c in reversed(f.coeffs):
        acc = acc * Y + OrePoly(target, (c,))
    return acc


@dataclass(frozen=True)
class HilbertTwist:
    """Substitution X -> X + shift from source to target.

    Attributes:
        source: Context with delta = a delta_0
        target: Context with delta = (a + shift) delta_0
        shift: The element b
    """
    source: OreContext
    target: OreContext
    shift: FieldElement

    def apply(self, f: OrePoly) -> OrePoly:
        if f.ctx != self.source:
            raise ContextMismatch("polynomial is not in the source context of the twist")
        return apply_substitution(f, self.target, self.shift)

    def inverse(self) -> "HilbertTwist":
        return HilbertTwist(self.target, self.source, -self.shift)

    def point(self, c: FieldElement) -> FieldElement:
        """Evaluation point in the target matching c in the source."""
        return c - self.shift


def hilbert_twist(ctx: OreContext, b: FieldElement) -> Tuple[OreContext, HilbertTwist]:
    """Twist ctx by b.

    Returns:
        The context with derivation delta + b delta_0 and the substitution X -> X + b
    """
    if not ctx.is_frobenius:
        raise NotApplicable("Hilbert twists only exist for theta != id")
    b = ctx.K(b) if not isinstance(b, FieldElement) else b
    new_a = ctx.a + b
    if b.is_zero():
        target = ctx
    elif new_a.is_zero():
        target = ctx.working
    else:
        target = OreContext(ContextKind.FROBENIUS, ctx.p, ctx.e, ctx.s, ctx.K, new_a, ctx.modulus)
    return target, HilbertTwist(ctx, target, b)
