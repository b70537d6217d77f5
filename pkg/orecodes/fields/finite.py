"""Finite fields F_{p^m}.

This module provides:
- FiniteField: F_p[w]/(modulus) backed by galois, with lookup tables for small orders
- FFElem: Immutable element stored as its galois integer representation
- frobenius: The map x -> x^q
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterator, List, Optional, Sequence, Tuple

import galois
import numpy as np

from core.errors import InvalidModulus, NotAFiniteField, ParameterError
from fields.base import Field, FieldElement


# Configure logging
logger = logging.getLogger(__name__)

# Orders up to this size get full operation tables
TABLE_LIMIT = 256


class FiniteField(Field):
    """The finite field F_p[w]/(modulus).

    Elements are identified with integers whose base-p digits are the
    coefficients of 1, w, w^2, ... (the galois integer representation).

    Attributes:
        p: Characteristic
        degree: Extension degree over F_p
        order: Number of elements
        modulus: Ascending coefficients of the defining polynomial
    """

    def __init__(self, p: int, degree: int = 1, modulus: Optional[Sequence[int]] = None):
        if p < 2 or not galois.is_prime(p):
            raise InvalidModulus(f"characteristic must be prime, got {p}")
        if degree < 1:
            raise InvalidModulus(f"extension degree must be positive, got {degree}")

        self.p = p
        self.degree = degree
        self.order = p ** degree
        prime_field = galois.GF(p)

        if degree == 1:
            self._gf = prime_field
            self.modulus: Tuple[int, ...] = (0, 1)
        else:
            if modulus is None:
                poly = galois.irreducible_poly(p, degree, method="min")
            else:
                poly = galois.Poly([int(c) % p for c in modulus], field=prime_field, order="asc")
                if poly.degree != degree or int(poly.coeffs[0]) != 1:
                    raise InvalidModulus(f"modulus {list(modulus)} is not monic of degree {degree}")
                if not poly.is_irreducible():
                    raise InvalidModulus(f"modulus {list(modulus)} is reducible over F_{p}")
            self._gf = galois.GF(p ** degree, irreducible_poly=poly)
            self.modulus = tuple(int(c) for c in poly.coeffs[::-1])

        self._tables = self.order <= TABLE_LIMIT
        if self._tables:
            self._build_tables()
        logger.debug(f"[FiniteField] GF({p}^{degree}) modulus={self.modulus} tables={self._tables}")

    def _build_tables(self) -> None:
        els = self._gf.elements
        self._add_table = np.asarray((els[:, None] + els[None, :]).view(np.ndarray), dtype=np.int64)
        self._mul_table = np.asarray((els[:, None] * els[None, :]).view(np.ndarray), dtype=np.int64)
        self._neg_table = np.asarray((-els).view(np.ndarray), dtype=np.int64)
        self._inv_table = np.zeros(self.order, dtype=np.int64)
        self._inv_table[1:] = np.reciprocal(els[1:]).view(np.ndarray)

    # Raw integer operations

    def add_values(self, a: int, b: int) -> int:
        if self._tables:
            return int(self._add_table[a, b])
        return int(self._gf(a) + self._gf(b))

    def mul_values(self, a: int, b: int) -> int:
        if self._tables:
            return int(self._mul_table[a, b])
        return int(self._gf(a) * self._gf(b))

    def neg_values(self, a: int) -> int:
        if self._tables:
            return int(self._neg_table[a])
        return int(-self._gf(a))

    def inv_values(self, a: int) -> int:
        if self._tables:
            return int(self._inv_table[a])
        return int(np.reciprocal(self._gf(a)))

    # Field interface

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return True

    def __call__(self, value: Any) -> "FFElem":
        if isinstance(value, FFElem):
            if value.field != self:
                raise ParameterError(f"element of {value.field} is not in {self}")
            return value
        if isinstance(value, (int, np.integer)):
            return FFElem(self, int(value) % self.p)
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        raise ParameterError(f"cannot convert {value!r} into {self}")

    def from_coeffs(self, coeffs: Sequence[int]) -> "FFElem":
        """Build the element sum c_i w^i from ascending integer coefficients."""
        if len(coeffs) > self.degree:
            raise ParameterError(f"{len(coeffs)} coefficients given for a degree {self.degree} field")
        value = 0
        for c in reversed(list(coeffs)):
            value = value * self.p + int(c) % self.p
        return FFElem(self, value)

    def element(self, value: int) -> "FFElem":
        """Element with the given integer representation."""
        if not 0 <= value < self.order:
            raise ParameterError(f"integer representation {value} out of range for {self}")
        return FFElem(self, value)

    @property
    def gen(self) -> "FFElem":
        """The class of w."""
        if self.degree == 1:
            return self.one
        return FFElem(self, self.p)

    def elements(self) -> Iterator["FFElem"]:
        for value in range(self.order):
            yield FFElem(self, value)

    def subfield_elements(self, e: int) -> List["FFElem"]:
        """Elements of the subfield F_{p^e}, found as the fixed points of x -> x^{p^e}."""
        if e < 1 or self.degree % e:
            raise ParameterError(f"F_{self.p}^{e} is not a subfield of {self}")
        q = self.p ** e
        return [x for x in self.elements() if x ** q == x]

    def random_element(self, rng: np.random.Generator) -> "FFElem":
        return FFElem(self, int(rng.integers(0, self.order)))

    def random_nonzero(self, rng: np.random.Generator) -> "FFElem":
        return FFElem(self, int(rng.integers(1, self.order)))

    def encode(self, x: "FFElem") -> Any:
        if self.degree == 1:
            return x.value
        return list(x.coeffs)

    def decode(self, data: Any) -> "FFElem":
        if isinstance(data, str):
            data = [int(part) for part in data.split(",") if part.strip()]
            if len(data) == 1 and self.degree == 1:
                data = data[0]
        return self(data)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree})"


@dataclass(frozen=True, eq=False)
class FFElem(FieldElement):
    """Element of a finite field.

    Attributes:
        field: The owning field
        value: galois integer representation (base-p digits, ascending)
    """
    field: FiniteField
    value: int

    def _add(self, other: "FFElem") -> "FFElem":
        return FFElem(self.field, self.field.add_values(self.value, other.value))

    def _mul(self, other: "FFElem") -> "FFElem":
        return FFElem(self.field, self.field.mul_values(self.value, other.value))

    def _neg(self) -> "FFElem":
        return FFElem(self.field, self.field.neg_values(self.value))

    def _inv(self) -> "FFElem":
        return FFElem(self.field, self.field.inv_values(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Ascending coefficients over F_p, length = extension degree."""
        digits = []
        v = self.value
        for _ in range(self.field.degree):
            digits.append(v % self.field.p)
            v //= self.field.p
        return tuple(digits)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.value == self.field(int(other)).value
        return isinstance(other, FFElem) and self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        if self.field.degree == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = "w" if i == 1 else f"w^{i}"
                terms.append(power if c == 1 else f"{c}{power}")
        return "+".join(terms) if terms else "0"


def frobenius(x: FieldElement, q: int) -> FFElem:
    """Return x^q for q a power of the characteristic.

    Raises:
        NotAFiniteField: x does not lie in a finite field
    """
    if not isinstance(x, FFElem):
        raise NotAFiniteField(f"frobenius needs a finite field element, got {x!r}")
    p = x.field.p
    n = q
    while n % p == 0:
        n //= p
    if n != 1:
        raise ParameterError(f"{q} is not a power of the characteristic {p}")
    return x ** q
