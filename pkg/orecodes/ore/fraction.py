"""Ore fractions with central denominators.

This module provides:
- OreFraction: num / den with num in A+ and den a monic element of Z+ = F[Z(X)]

Denominators are central, so f = num/den = den^{-1} num and equality is
decided by cross-multiplication.
"""

from typing import Any, Union

from core.errors import DivisionByZeroPoly, ParameterError
from fields.base import FieldElement
from ore.central import CentralPoly
from ore.polynomial import OrePoly, ore_divmod


class OreFraction:
    """Element num / den of the localisation of A+ at Z+ \\ {0}.

    Attributes:
        num: Numerator
        den: Monic central denominator with coefficients in F
    """

    __slots__ = ("num", "den")

    def __init__(self, num: OrePoly, den: Union[CentralPoly, None] = None):
        ctx = num.ctx
        if den is None:
            den = CentralPoly.one(ctx)
        if den.is_zero():
            raise DivisionByZeroPoly("Ore fraction with zero denominator")
        if not den.in_centre():
            raise ParameterError(f"denominator {den!r} does not lie in F[Z]")
        lead = den.leading
        if lead != ctx.K.one:
            inv = lead.inverse()
            num = inv * num
            den = den.monic()
        self.num = num
        self.den = den

    @property
    def ctx(self):
        return self.num.ctx

    @classmethod
    def from_poly(cls, f: OrePoly) -> "OreFraction":
        return cls(f)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def reduced(self) -> "OreFraction":
        """Cancel the factors Z - z of the denominator that divide the numerator."""
        num, den = self.num, self.den
        if num.is_zero():
            return OreFraction(num)
        for z, m in den.roots().items():
            N = CentralPoly.linear(self.ctx, z)
            N_ore = N.to_ore()
            for _ in range(m):
                q, r = ore_divmod(num, N_ore, "right")
                if not r.is_zero():
                    break
                num, den = q, den // N
        return OreFraction(num, den)

    def pole_order(self, z: FieldElement) -> int:
        """Order of the pole at z (0 when regular)."""
        m = self.den.multiplicity(z)
        if m == 0 or self.num.is_zero():
            return 0
        N_ore = CentralPoly.linear(self.ctx, z).to_ore()
        num = self.num
        k = 0
        while k < m:
            q, r = ore_divmod(num, N_ore, "right")
            if not r.is_zero():
                break
            num, k = q, k + 1
        return m - k

    def is_regular_at(self, z: FieldElement) -> bool:
        return self.pole_order(z) == 0

    def _lift(self, other: Any) -> "OreFraction":
        if isinstance(other, OreFraction):
            return other
        if isinstance(other, OrePoly):
            return OreFraction(other)
        if isinstance(other, CentralPoly):
            return OreFraction(other.to_ore())
        if isinstance(other, (int, FieldElement)):
            return OreFraction(OrePoly.constant(self.ctx, other))
        return NotImplemented

    def __add__(self, other: Any) -> "OreFraction":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return OreFraction(self.num + other.num, self.den)
        num = other.den.to_ore() * self.num + self.den.to_ore() * other.num
        return OreFraction(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "OreFraction":
        return OreFraction(-self.num, self.den)

    def __sub__(self, other: Any) -> "OreFraction":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> "OreFraction":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return OreFraction(self.num * other.num, self.den * other.den)

    def __rmul__(self, other: Any) -> "OreFraction":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return OreFraction(other.num * self.num, self.den * other.den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (OrePoly, CentralPoly, int, FieldElement)):
            other = self._lift(other)
        if not isinstance(other, OreFraction):
            return False
        return other.den.to_ore() * self.num == self.den.to_ore() * other.num

    def __hash__(self) -> int:
        return hash(self.den.degree)

    def __repr__(self) -> str:
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"
