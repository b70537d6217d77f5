"""Polynomials in the central element Z(X).

This module provides:
- CentralPoly: Element of C+ = K[Z(X)] (of Z+ = F[Z(X)] when every coefficient lies in F)
- CentralFraction: Commutative fraction num/den of central polynomials
- centre_coords / reconstruct: The decomposition f = sum_i g_i(Z) X^i, 0 <= i < s
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import galois

from core.errors import DivisionByZeroPoly, ParameterError
from fields.base import FieldElement
from ore.polynomial import OrePoly, ore_divmod


# Configure logging
logger = logging.getLogger(__name__)


class CentralPoly:
    """Polynomial sum c_k Z^k with K-coefficients.

    Attributes:
        ctx: The owning OreContext
        coeffs: Ascending coefficients, trimmed
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs: Sequence[Any] = ()):
        K = ctx.K
        cs = [c if isinstance(c, FieldElement) else K(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs: Tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def zero(cls, ctx) -> "CentralPoly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx) -> "CentralPoly":
        return cls(ctx, (ctx.K.one,))

    @classmethod
    def Z(cls, ctx) -> "CentralPoly":
        return cls(ctx, (ctx.K.zero, ctx.K.one))

    @classmethod
    def linear(cls, ctx, z: FieldElement) -> "CentralPoly":
        """Z - z."""
        return cls(ctx, (-z, ctx.K.one))

    @classmethod
    def from_roots(cls, ctx, roots: Sequence[FieldElement]) -> "CentralPoly":
        """prod (Z - r)."""
        acc = cls.one(ctx)
        for r in roots:
            acc = acc * cls.linear(ctx, r)
        return acc

    @classmethod
    def decode(cls, ctx, data: Any) -> "CentralPoly":
        if isinstance(data, str):
            data = [part.strip() for part in data.split(";") if part.strip()]
        return cls(ctx, [ctx.K.decode(c) for c in data])

    def encode(self) -> List[Any]:
        return [self.ctx.K.encode(c) for c in self.coeffs]

    # Properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.ctx.K.zero

    def coeff(self, k: int) -> FieldElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ctx.K.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def in_centre(self) -> bool:
        """Whether every coefficient lies in F, i.e. the element lies in Z+."""
        return all(self.ctx.is_in_F(c) for c in self.coeffs)

    def monic(self) -> "CentralPoly":
        if self.is_zero():
            raise DivisionByZeroPoly("the zero polynomial has no monic representative")
        inv = self.leading.inverse()
        return CentralPoly(self.ctx, [inv * c for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, FieldElement)):
            other = CentralPoly(self.ctx, (other,))
        return isinstance(other, CentralPoly) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            power = "" if k == 0 else ("Z" if k == 1 else f"Z^{k}")
            if k == 0:
                terms.append(f"{c!r}")
            elif c == self.ctx.K.one:
                terms.append(power)
            else:
                terms.append(f"({c!r}){power}")
        return " + ".join(reversed(terms)) if terms else "0"

    # Arithmetic (commutative)

    def _lift(self, other: Any) -> Optional["CentralPoly"]:
        if isinstance(other, CentralPoly):
            return other
        if isinstance(other, (int, FieldElement)):
            return CentralPoly(self.ctx, (other,))
        return None

    def __add__(self, other: Any) -> "CentralPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return CentralPoly(self.ctx, [self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "CentralPoly":
        return CentralPoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "CentralPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "CentralPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "CentralPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return CentralPoly.zero(self.ctx)
        out = [self.ctx.K.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return CentralPoly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CentralPoly":
        result = CentralPoly.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "CentralPoly") -> Tuple["CentralPoly", "CentralPoly"]:
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero central polynomial")
        K = self.ctx.K
        rem = list(self.coeffs)
        dg = other.degree
        inv = other.leading.inverse()
        quotient = [K.zero] * max(0, len(rem) - dg)
        for d in range(len(rem) - dg - 1, -1, -1):
            c = rem[d + dg] * inv
            if c.is_zero():
                continue
            quotient[d] = c
            for j, b in enumerate(other.coeffs):
                rem[d + j] = rem[d + j] - c * b
        return CentralPoly(self.ctx, quotient), CentralPoly(self.ctx, rem[:dg] if dg > 0 else [])

    def __floordiv__(self, other: "CentralPoly") -> "CentralPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "CentralPoly") -> "CentralPoly":
        return divmod(self, other)[1]

    def evaluate(self, z: FieldElement) -> FieldElement:
        acc = self.ctx.K.zero
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def taylor_shift(self, z: FieldElement) -> List[FieldElement]:
        """Coefficients b_k with self = sum b_k (Z - z)^k."""
        out = []
        cur = self
        N = CentralPoly.linear(self.ctx, z)
        while not cur.is_zero():
            cur, r = divmod(cur, N)
            out.append(r.coeff(0))
        return out

    def multiplicity(self, z: FieldElement) -> int:
        """Order of vanishing at z."""
        if self.is_zero():
            raise ParameterError("the zero polynomial vanishes to infinite order")
        m = 0
        cur = self
        N = CentralPoly.linear(self.ctx, z)
        while True:
            q, r = divmod(cur, N)
            if not r.is_zero():
                return m
            cur, m = q, m + 1

    def to_ore(self) -> OrePoly:
        """sum c_k Z(X)^k as an Ore polynomial."""
        Z = self.ctx.centre
        acc = OrePoly.zero(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * Z + OrePoly(self.ctx, (c,))
        return acc

    def apply_delta(self) -> "CentralPoly":
        """delta applied coefficientwise (delta(Z) = 0)."""
        return CentralPoly(self.ctx, [self.ctx.delta(c) for c in self.coeffs])

    def apply(self, func) -> "CentralPoly":
        return CentralPoly(self.ctx, [func(c) for c in self.coeffs])

    def roots(self) -> Dict[FieldElement, int]:
        """F-rational roots with multiplicity."""
        if self.is_zero():
            raise ParameterError("the zero polynomial has every point as a root")
        if self.ctx.K.is_finite:
            candidates = self.ctx.F_elements()
        else:
            candidates = _rational_root_candidates(self)
        roots: Dict[FieldElement, int] = {}
        for z in candidates:
            if z in roots:
                continue
            if self.evaluate(z).is_zero():
                roots[z] = self.multiplicity(z)
        return roots

    def splits(self) -> bool:
        """Whether self is a product of linear factors over F."""
        return sum(self.roots().values()) == self.degree


@dataclass(frozen=True)
class CentralFraction:
    """Commutative fraction of central polynomials.

    Attributes:
        num: Numerator
        den: Nonzero denominator
    """
    num: CentralPoly
    den: CentralPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise DivisionByZeroPoly("fraction with zero denominator")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CentralFraction) and self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash(self.den.degree)

    def __add__(self, other: "CentralFraction") -> "CentralFraction":
        return CentralFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: Any) -> "CentralFraction":
        if isinstance(other, CentralFraction):
            return CentralFraction(self.num * other.num, self.den * other.den)
        return CentralFraction(self.num * other, self.den)

    def __repr__(self) -> str:
        return f"({self.num!r})/({self.den!r})"


def _rational_root_candidates(g: CentralPoly) -> List[FieldElement]:
    """Candidate roots in F_p(u), u = t^p, by the rational root theorem over F_p[u]."""
    ctx = g.ctx
    K = ctx.K
    # clear denominators so that every coefficient is a polynomial in u
    pairs = [K.to_u(c) for c in g.coeffs]
    common = galois.Poly([1], field=K.gf)
    for _, den in pairs:
        common = common * den // galois.gcd(common, den)
    polys = [num * (common // den) for num, den in pairs]

    candidates = [K.zero]
    low = next(i for i, pol in enumerate(polys) if not K.is_zero_poly(pol))
    constant, lead = polys[low], polys[-1]
    units = [galois.Poly([c], field=K.gf) for c in range(1, K.p)]
    for a, b in itertools.product(_monic_divisors(constant), _monic_divisors(lead)):
        for unit in units:
            candidates.append(K.from_u(a * unit, b))
    return candidates


def _monic_divisors(poly: galois.Poly) -> List[galois.Poly]:
    gf = poly.field
    one = galois.Poly([1], field=gf)
    if poly.degree == 0:
        return [one]
    monic = poly // galois.Poly([poly.coeffs[0]], field=gf)
    factors, multiplicities = monic.factors()
    divisors = [one]
    for f, m in zip(factors, multiplicities):
        divisors = [d * f ** k for d in divisors for k in range(m + 1)]
    return divisors


def centre_coords(f: OrePoly) -> List[CentralPoly]:
    """Coefficients g_0..g_{s-1} in K[Z] with f = sum g_i(Z(X)) X^i."""
    ctx = f.ctx
    Z = ctx.centre
    digits: List[OrePoly] = []
    cur = f
    while not cur.is_zero():
        cur, r = ore_divmod(cur, Z, "right")
        digits.append(r)
    return [CentralPoly(ctx, [d.coeff(i) for d in digits]) for i in range(ctx.s)]


def reconstruct(ctx, coords: Sequence[CentralPoly]) -> OrePoly:
    """Inverse of centre_coords."""
    acc = OrePoly.zero(ctx)
    x = OrePoly.x(ctx)
    xi = OrePoly.one(ctx)
    for g in coords:
        acc = acc + g.to_ore() * xi
        xi = xi * x
    return acc
