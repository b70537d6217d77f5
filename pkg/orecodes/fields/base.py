"""Common field interface.

This module provides:
- Field: Abstract base class for the coefficient fields
- FieldElement: Operator plumbing shared by all field elements
- field_arith: Arithmetic selected by operation name
"""

from abc import ABC, abstractmethod
from typing import Any, Union

import numpy as np

from core.errors import DivisionByZero, FieldMismatch, ParameterError


class Field(ABC):
    """Abstract base class for the coefficient fields.

    Each field must implement:
    - characteristic: The prime p
    - is_finite: Whether the field has finitely many elements
    - __call__: Coercion of integers (and native encodings) into the field
    - random_element: Uniform-ish sampling driven by a numpy Generator
    - encode / decode: JSON encodings of elements
    """

    @property
    @abstractmethod
    def characteristic(self) -> int:
        pass

    @property
    @abstractmethod
    def is_finite(self) -> bool:
        pass

    @abstractmethod
    def __call__(self, value: Any) -> "FieldElement":
        pass

    @abstractmethod
    def random_element(self, rng: np.random.Generator) -> "FieldElement":
        pass

    @abstractmethod
    def encode(self, x: "FieldElement") -> Any:
        pass

    @abstractmethod
    def decode(self, data: Any) -> "FieldElement":
        pass

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)


class FieldElement(ABC):
    """Operator plumbing for field elements.

    Subclasses implement the primitive operations ``_add``, ``_mul``, ``_neg``,
    ``_inv`` and ``is_zero``; integers are coerced into the element's field.
    """

    field: Field

    @abstractmethod
    def _add(self, other: "FieldElement") -> "FieldElement":
        pass

    @abstractmethod
    def _mul(self, other: "FieldElement") -> "FieldElement":
        pass

    @abstractmethod
    def _neg(self) -> "FieldElement":
        pass

    @abstractmethod
    def _inv(self) -> "FieldElement":
        pass

    @abstractmethod
    def is_zero(self) -> bool:
        pass

    def _coerce(self, other: Any):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add(other)

    __radd__ = __add__

    def __neg__(self):
        return self._neg()

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add(other._neg())

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other._add(self._neg())

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._mul(other)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero(f"{self} has no inverse")
        return self._inv()

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._mul(other.inverse())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other._mul(self.inverse())

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result._mul(base)
            base = base._mul(base)
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return not self.is_zero()


Scalar = Union[FieldElement, int]


def field_arith(op: str, a: FieldElement, b: Scalar) -> FieldElement:
    """Apply a named field operation.

    Args:
        op: One of add, sub, mul, div
        a: Left operand
        b: Right operand (same field, or an integer)

    Returns:
        The canonical result
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ParameterError(f"unknown field operation: {op}")
