"""Laurent elements in the twisted variable Y = X + a (Frobenius kind).

This module provides:
- LaurentOre: sum_j c_j Y^{v+j} in A+[1/Y], with Y b = theta(b) Y and Y^{-1} b = theta^{-1}(b) Y^{-1}
- laurent_mul: Product of Laurent elements

Coefficients are stored in the twisted variable; conversion to and from the
caller's coordinates goes through the context's working coordinate.
"""

from typing import Any, List, Sequence, Tuple

from core.errors import ParameterError, WrongKind
from fields.base import FieldElement
from ore.central import CentralPoly
from ore.fraction import OreFraction
from ore.polynomial import OrePoly


class LaurentOre:
    """Laurent element sum_j coeffs[j] Y^{valuation + j}.

    Attributes:
        ctx: The owning (Frobenius) context, in the caller's coordinates
        valuation: Exponent of the first stored coefficient
        coeffs: K-coefficients, first and last nonzero unless zero
    """

    __slots__ = ("ctx", "valuation", "coeffs")

    def __init__(self, ctx, valuation: int, coeffs: Sequence[FieldElement]):
        if not ctx.is_frobenius:
            raise WrongKind("Laurent elements are only needed when theta != id")
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        while cs and cs[0].is_zero():
            cs.pop(0)
            valuation += 1
        self.ctx = ctx
        self.valuation = valuation if cs else 0
        self.coeffs: Tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def from_ore(cls, f: OrePoly) -> "LaurentOre":
        """Rewrite f in the twisted variable."""
        g = f.ctx.to_working(f)
        return cls(f.ctx, 0, g.coeffs)

    @classmethod
    def monomial(cls, ctx, c: FieldElement, n: int) -> "LaurentOre":
        return cls(ctx, n, [c])

    @classmethod
    def from_fraction(cls, f: OreFraction) -> "LaurentOre":
        """Fractions whose denominator is a power of Z(X) = Y^s."""
        den = f.den
        k = den.degree
        if any(not den.coeff(i).is_zero() for i in range(k)):
            raise ParameterError(f"denominator {den!r} is not a power of Z")
        base = cls.from_ore(f.num)
        return cls(f.ctx, base.valuation - f.ctx.s * k, base.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def top(self) -> int:
        """Largest exponent present."""
        return self.valuation + len(self.coeffs) - 1

    def coeff(self, n: int) -> FieldElement:
        j = n - self.valuation
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.ctx.K.zero

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentOre)
            and self.ctx == other.ctx
            and self.valuation == other.valuation
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.valuation, self.coeffs))

    def __add__(self, other: "LaurentOre") -> "LaurentOre":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.valuation, other.valuation)
        high = max(self.top, other.top)
        return LaurentOre(self.ctx, low, [self.coeff(n) + other.coeff(n) for n in range(low, high + 1)])

    def __neg__(self) -> "LaurentOre":
        return LaurentOre(self.ctx, self.valuation, [-c for c in self.coeffs])

    def __sub__(self, other: "LaurentOre") -> "LaurentOre":
        return self + (-other)

    def __mul__(self, other: Any) -> "LaurentOre":
        if isinstance(other, OrePoly):
            other = LaurentOre.from_ore(other)
        if not isinstance(other, LaurentOre):
            return NotImplemented
        return laurent_mul(self, other)

    def to_fraction(self) -> OreFraction:
        """num / Z^k in the caller's coordinates, with k the least power clearing negative exponents."""
        ctx = self.ctx
        s = ctx.s
        k = -(self.valuation // s) if self.valuation < 0 else 0
        shift = self.valuation + s * k
        working = ctx.working
        num = OrePoly(working, [working.K.zero] * shift + list(self.coeffs))
        den = CentralPoly(ctx, [ctx.K.zero] * k + [ctx.K.one])
        return OreFraction(ctx.from_working(num), den)

    def reduce_mod(self, z: FieldElement) -> OrePoly:
        """Class modulo Z - z (z != 0) as a polynomial of degree < s in the caller's coordinates."""
        if z.is_zero():
            raise ParameterError("Y is not invertible modulo Z")
        frac = self.to_fraction()
        scale = frac.den.evaluate(z).inverse()
        N = CentralPoly.linear(self.ctx, z)
        return (scale * frac.num).rmod(N)

    def __repr__(self) -> str:
        terms = [f"({c!r})Y^{self.valuation + j}" for j, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(reversed(terms)) if terms else "0"


def laurent_mul(f: LaurentOre, g: LaurentOre) -> LaurentOre:
    """Product using Y^i b = theta^i(b) Y^i for every integer i; valuations add."""
    if not f.ctx.is_frobenius or not g.ctx.is_frobenius:
        raise WrongKind("Laurent elements are only needed when theta != id")
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return LaurentOre(ctx, 0, [])
    out: List[FieldElement] = [ctx.K.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        power = f.valuation + i
        for j, b in enumerate(g.coeffs):
            if not b.is_zero():
                out[i + j] = out[i + j] + a * ctx.theta_power(b, power)
    return LaurentOre(ctx, f.valuation + g.valuation, out)
