"""Coefficient fields: finite fields and rational function fields."""

from fields.base import Field, FieldElement, field_arith
from fields.finite import FFElem, FiniteField, frobenius
from fields.rational import RatFunc, RationalFunctionField, derivative

__all__ = [
    "Field",
    "FieldElement",
    "field_arith",
    "FiniteField",
    "FFElem",
    "frobenius",
    "RationalFunctionField",
    "RatFunc",
    "derivative",
]
