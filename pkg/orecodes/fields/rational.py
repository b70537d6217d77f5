"""Rational function fields F_p(t).

This module provides:
- RationalFunctionField: F_p(t) with arithmetic on galois polynomials over F_p
- RatFunc: Immutable canonical fraction num/den (gcd 1, den monic)
- derivative: d/dt by the quotient rule

The subfield F_p(u), u = t^p, is the field of constants of d/dt. Its elements
are rational functions whose canonical form only uses exponents divisible by p.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, List, Optional, Sequence, Tuple

import galois
import numpy as np

from core.errors import DivisionByZero, InvalidModulus, ParameterError
from fields.base import Field, FieldElement


# Configure logging
logger = logging.getLogger(__name__)


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RationalFunctionField(Field):
    """The field F_p(t).

    Attributes:
        p: Characteristic
    """

    def __init__(self, p: int):
        if p < 2 or not galois.is_prime(p):
            raise InvalidModulus(f"characteristic must be prime, got {p}")
        self.p = p
        self.gf = galois.GF(p)

    # Polynomial helpers

    def poly(self, coeffs: Sequence[int]) -> galois.Poly:
        """galois polynomial from ascending integer coefficients."""
        values = [int(c) % self.p for c in coeffs] or [0]
        return galois.Poly(values, field=self.gf, order="asc")

    @staticmethod
    def coeffs_of(poly: galois.Poly) -> Tuple[int, ...]:
        """Ascending integer coefficients, trimmed (empty for zero)."""
        return _trim(int(c) for c in poly.coeffs[::-1])

    @staticmethod
    def is_zero_poly(poly: galois.Poly) -> bool:
        return np.count_nonzero(poly.coeffs) == 0

    def make(self, num: galois.Poly, den: galois.Poly) -> "RatFunc":
        """Canonical fraction num/den."""
        if self.is_zero_poly(den):
            raise DivisionByZero("denominator is zero")
        if self.is_zero_poly(num):
            return RatFunc(self, (), (1,))
        g = galois.gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = int(den.coeffs[0])
        if lead != 1:
            scale = galois.Poly([int(np.reciprocal(self.gf(lead)))], field=self.gf)
            num = num * scale
            den = den * scale
        return RatFunc(self, self.coeffs_of(num), self.coeffs_of(den))

    def element(self, num: Sequence[int], den: Sequence[int] = (1,)) -> "RatFunc":
        """Canonical element from ascending coefficient lists."""
        return self.make(self.poly(num), self.poly(den))

    def from_poly(self, poly: galois.Poly) -> "RatFunc":
        return RatFunc(self, self.coeffs_of(poly), (1,))

    @property
    def gen(self) -> "RatFunc":
        """The variable t."""
        return RatFunc(self, (0, 1), (1,))

    # Field interface

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return False

    def __call__(self, value: Any) -> "RatFunc":
        if isinstance(value, RatFunc):
            if value.field != self:
                raise ParameterError(f"element of {value.field} is not in {self}")
            return value
        if isinstance(value, (int, np.integer)):
            c = int(value) % self.p
            return RatFunc(self, (c,) if c else (), (1,))
        if isinstance(value, (list, tuple)):
            return self.element(value)
        raise ParameterError(f"cannot convert {value!r} into {self}")

    def random_element(self, rng: np.random.Generator, degree: int = 2) -> "RatFunc":
        num = rng.integers(0, self.p, size=degree + 1)
        den_degree = int(rng.integers(0, degree + 1))
        den = list(rng.integers(0, self.p, size=den_degree)) + [1]
        return self.element(num, den)

    def random_subfield_element(self, rng: np.random.Generator, degree: int = 1) -> "RatFunc":
        """Random element of F_p(t^p) with numerator and denominator of degree <= degree in t^p."""
        num = rng.integers(0, self.p, size=degree + 1)
        den_degree = int(rng.integers(0, degree + 1))
        den = list(rng.integers(0, self.p, size=den_degree)) + [1]
        return self.from_u(self.poly(num), self.poly(den))

    def encode(self, x: "RatFunc") -> Any:
        return {"num": list(x.num) or [0], "den": list(x.den)}

    def decode(self, data: Any) -> "RatFunc":
        """Decode {"num": [...], "den": [...]}, "num/den" strings, integers or coefficient lists."""
        if isinstance(data, dict):
            return self.element(data.get("num", [0]), data.get("den", [1]))
        if isinstance(data, str):
            num_text, _, den_text = data.partition("/")
            num = [int(c) for c in num_text.split(",") if c.strip()]
            den = [int(c) for c in den_text.split(",") if c.strip()] or [1]
            return self.element(num, den)
        return self(data)

    # The subfield F_p(t^p)

    def in_subfield(self, x: "RatFunc") -> bool:
        """Whether x lies in F_p(t^p); canonical forms of such elements only use p-th powers of t."""
        return all(c == 0 for i, c in enumerate(x.num) if i % self.p) and all(
            c == 0 for i, c in enumerate(x.den) if i % self.p
        )

    def to_u(self, x: "RatFunc") -> Tuple[galois.Poly, galois.Poly]:
        """Numerator and denominator of x in F_p(t^p) as polynomials in u = t^p."""
        if not self.in_subfield(x):
            raise ParameterError(f"{x} does not lie in F_{self.p}(t^{self.p})")
        return self.poly(x.num[:: self.p]), self.poly(x.den[:: self.p])

    def from_u(self, num: galois.Poly, den: Optional[galois.Poly] = None) -> "RatFunc":
        """Substitute u = t^p in num/den."""
        def spread(poly: galois.Poly) -> List[int]:
            out: List[int] = []
            for c in self.coeffs_of(poly):
                out.extend([c] + [0] * (self.p - 1))
            return out or [0]
        den_coeffs = spread(den) if den is not None else [1]
        return self.element(spread(num), den_coeffs)

    def p_split(self, x: "RatFunc") -> List["RatFunc"]:
        """Coordinates of x over F_p(t^p) in the basis 1, t, ..., t^{p-1}.

        Writes x = n d^{p-1} / d^p; d^p lies in the subfield and the monomials of
        n d^{p-1} are grouped by exponent modulo p.
        """
        p = self.p
        d_p = x.den_poly ** p
        spread = self.coeffs_of(x.num_poly * x.den_poly ** (p - 1))
        parts = []
        for j in range(p):
            shifted = [0] * len(spread)
            for k in range(j, len(spread), p):
                shifted[k - j] = spread[k]
            parts.append(self.make(self.poly(shifted), d_p))
        return parts

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalFunctionField) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("F_p(t)", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})(t)"


@dataclass(frozen=True, eq=False)
class RatFunc(FieldElement):
    """Canonical rational function num/den.

    Attributes:
        field: The owning field
        num: Ascending numerator coefficients (empty for zero)
        den: Ascending monic denominator coefficients, coprime to num
    """
    field: RationalFunctionField
    num: Tuple[int, ...]
    den: Tuple[int, ...]

    @cached_property
    def num_poly(self) -> galois.Poly:
        return self.field.poly(self.num)

    @cached_property
    def den_poly(self) -> galois.Poly:
        return self.field.poly(self.den)

    def _add(self, other: "RatFunc") -> "RatFunc":
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == (1,):
                return self.field.from_poly(self.num_poly + other.num_poly)
            return self.field.make(self.num_poly + other.num_poly, self.den_poly)
        num = self.num_poly * other.den_poly + other.num_poly * self.den_poly
        return self.field.make(num, self.den_poly * other.den_poly)

    def _mul(self, other: "RatFunc") -> "RatFunc":
        if not self.num or not other.num:
            return RatFunc(self.field, (), (1,))
        if self.den == (1,) and other.den == (1,):
            return self.field.from_poly(self.num_poly * other.num_poly)
        return self.field.make(self.num_poly * other.num_poly, self.den_poly * other.den_poly)

    def _neg(self) -> "RatFunc":
        p = self.field.p
        return RatFunc(self.field, tuple((-c) % p for c in self.num), self.den)

    def _inv(self) -> "RatFunc":
        return self.field.make(self.den_poly, self.num_poly)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            return self == self.field(int(other))
        return (
            isinstance(other, RatFunc)
            and self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        num = _poly_str(self.num)
        if self.den == (1,):
            return num
        den = _poly_str(self.den)
        if len([c for c in self.num if c]) > 1:
            num = f"({num})"
        if len([c for c in self.den if c]) > 1:
            den = f"({den})"
        return f"{num}/{den}"


def _poly_str(coeffs: Tuple[int, ...]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        power = "t" if i == 1 else f"t^{i}"
        terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(reversed(terms)) if terms else "0"


def derivative(f: RatFunc) -> RatFunc:
    """d/dt by the quotient rule, in canonical form."""
    field = f.field
    if not f.num:
        return f
    if f.den == (1,):
        return field.from_poly(f.num_poly.derivative())
    num = f.num_poly.derivative() * f.den_poly - f.num_poly * f.den_poly.derivative()
    return field.make(num, f.den_poly * f.den_poly)
