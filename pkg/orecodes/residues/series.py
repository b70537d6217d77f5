"""Truncated Laurent series over A+/NA+.

This module provides:
- TruncatedSeries: sum_j g_j T^{v+j} with class coefficients, known below an absolute precision
- substitute_series: f(S) for a series S with scalar coefficients and valuation 1
- series_derivative: dS/dT

T is central; coefficients are representatives of degree < s, reduced after
every product. A precision of None marks an exact (finite) series.
"""

from typing import Any, List, Optional, Sequence

from core.errors import ParameterError, TruncationTooSmall
from fields.base import FieldElement
from ore.polynomial import OrePoly


def _min_prec(*values: Optional[int]) -> Optional[int]:
    known = [v for v in values if v is not None]
    return min(known) if known else None


class TruncatedSeries:
    """Laurent series in T over A+/(Z - z)A+.

    Attributes:
        iso: The admissible isomorphism fixing z, the ring and the reduction
        valuation: Exponent of coeffs[0]
        coeffs: Class representatives; coeffs[0] nonzero unless the series is zero
        prec: Coefficients of T^n are known for n < prec (None: known for all n)
    """

    __slots__ = ("iso", "valuation", "coeffs", "prec")

    def __init__(self, iso, valuation: int, coeffs: Sequence[OrePoly], prec: Optional[int]):
        cs = [c.rmod(iso.N_ore) if c.degree >= iso.working.s else c for c in coeffs]
        if prec is not None:
            cs = cs[: max(0, prec - valuation)]
        while cs and cs[0].is_zero():
            cs.pop(0)
            valuation += 1
        if prec is None:
            while cs and cs[-1].is_zero():
                cs.pop()
        if not cs:
            valuation = prec if prec is not None else 0
        self.iso = iso
        self.valuation = valuation
        self.coeffs: List[OrePoly] = cs
        self.prec = prec

    # Constructors

    @classmethod
    def zero(cls, iso, prec: Optional[int] = None) -> "TruncatedSeries":
        return cls(iso, 0, [], prec)

    @classmethod
    def one(cls, iso) -> "TruncatedSeries":
        return cls(iso, 0, [OrePoly.one(iso.working)], None)

    @classmethod
    def T(cls, iso, power: int = 1) -> "TruncatedSeries":
        return cls(iso, power, [OrePoly.one(iso.working)], None)

    @classmethod
    def from_scalars(
        cls, iso, valuation: int, scalars: Sequence[Any], prec: Optional[int] = None
    ) -> "TruncatedSeries":
        """Series with coefficients in F (central classes)."""
        W = iso.working
        return cls(iso, valuation, [OrePoly.constant(W, W.K(c) if not isinstance(c, FieldElement) else c) for c in scalars], prec)

    # Access

    @property
    def ctx(self):
        return self.iso.working

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def relative_prec(self) -> Optional[int]:
        if self.prec is None:
            return None
        return self.prec - self.valuation

    def coeff(self, n: int) -> OrePoly:
        """Coefficient of T^n."""
        if self.prec is not None and n >= self.prec:
            raise TruncationTooSmall(f"coefficient of T^{n} is beyond the precision T^{self.prec}")
        j = n - self.valuation
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return OrePoly.zero(self.ctx)

    def leading(self) -> OrePoly:
        if self.is_zero():
            raise TruncationTooSmall("no nonzero coefficient within the precision")
        return self.coeffs[0]

    def residue(self) -> OrePoly:
        """Coefficient of T^{-1}."""
        return self.coeff(-1)

    def is_scalar(self) -> bool:
        """Whether every coefficient is a constant in F."""
        return all(c.degree <= 0 and self.ctx.is_in_F(c.coeff(0)) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return False
        prec = _min_prec(self.prec, other.prec)
        if prec is None:
            return self.valuation == other.valuation and self.coeffs == other.coeffs
        low = min(self.valuation, other.valuation)
        return all(self.coeff(n) == other.coeff(n) for n in range(low, prec))

    def __hash__(self) -> int:
        return hash((self.valuation, len(self.coeffs)))

    def __repr__(self) -> str:
        terms = [f"({c!r})T^{self.valuation + j}" for j, c in enumerate(self.coeffs) if not c.is_zero()]
        body = " + ".join(terms) if terms else "0"
        return body if self.prec is None else f"{body} + O(T^{self.prec})"

    # Arithmetic

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        prec = _min_prec(self.prec, other.prec)
        low = min(self.valuation, other.valuation)
        if prec is None:
            high = max(self.valuation + len(self.coeffs), other.valuation + len(other.coeffs))
        else:
            high = prec
        coeffs = [self._raw(n) + other._raw(n) for n in range(low, high)]
        return TruncatedSeries(self.iso, low, coeffs, prec)

    def _raw(self, n: int) -> OrePoly:
        j = n - self.valuation
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return OrePoly.zero(self.ctx)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.iso, self.valuation, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, (OrePoly, FieldElement, int)):
            return self.scale_right(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        valuation = self.valuation + other.valuation
        rel = _min_prec(self.relative_prec, other.relative_prec)
        prec = None if rel is None else valuation + rel
        length = len(self.coeffs) + len(other.coeffs) - 1 if rel is None else rel
        N = self.iso.N_ore
        zero = OrePoly.zero(self.ctx)
        out = [zero] * max(0, length)
        for i, a in enumerate(self.coeffs):
            if a.is_zero() or i >= len(out):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.iso, valuation, [c.rmod(N) for c in out], prec)

    def __rmul__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, (OrePoly, FieldElement, int)):
            return self.scale_left(other)
        return NotImplemented

    def _as_class(self, g: Any) -> OrePoly:
        if isinstance(g, OrePoly):
            return g
        return OrePoly.constant(self.ctx, g)

    def scale_left(self, g: Any) -> "TruncatedSeries":
        g = self._as_class(g)
        return TruncatedSeries(self.iso, self.valuation, [(g * c).rmod(self.iso.N_ore) for c in self.coeffs], self.prec)

    def scale_right(self, g: Any) -> "TruncatedSeries":
        g = self._as_class(g)
        return TruncatedSeries(self.iso, self.valuation, [(c * g).rmod(self.iso.N_ore) for c in self.coeffs], self.prec)

    def shift(self, k: int) -> "TruncatedSeries":
        """T^k times the series."""
        prec = None if self.prec is None else self.prec + k
        return TruncatedSeries(self.iso, self.valuation + k, self.coeffs, prec)

    def truncate(self, prec: int) -> "TruncatedSeries":
        return TruncatedSeries(self.iso, self.valuation, self.coeffs, _min_prec(self.prec, prec))

    def inverse_central(self, rel_prec: Optional[int] = None) -> "TruncatedSeries":
        """Inverse of a series with scalar coefficients, to the given relative precision."""
        if self.is_zero():
            raise TruncationTooSmall("cannot invert a series with no known nonzero coefficient")
        if not self.is_scalar():
            raise ParameterError("only series with coefficients in F are inverted")
        rel = _min_prec(self.relative_prec, rel_prec)
        if rel is None:
            raise ParameterError("inverting an exact series needs a relative precision")
        scalars = [c.coeff(0) for c in self.coeffs]
        zero = self.ctx.K.zero
        inv0 = scalars[0].inverse()
        out: List[FieldElement] = []
        for k in range(rel):
            acc = self.ctx.K.one if k == 0 else zero
            for j in range(1, min(k, len(scalars) - 1) + 1):
                acc = acc - scalars[j] * out[k - j]
            out.append(acc * inv0)
        return TruncatedSeries.from_scalars(self.iso, -self.valuation, out, -self.valuation + rel)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ParameterError("use inverse_central for negative powers")
        result = TruncatedSeries.one(self.iso)
        for _ in range(n):
            result = result * self
        return result

    def reconstruct(self) -> OrePoly:
        """sum g_k(Y) N^k modulo N^prec, for series without negative powers."""
        if self.prec is None or self.valuation < 0:
            raise ParameterError("reconstruction needs a truncated series with valuation >= 0")
        modulus = (self.iso.N ** self.prec).to_ore()
        N = self.iso.N_ore
        acc = OrePoly.zero(self.ctx)
        power = N ** self.valuation
        for c in self.coeffs:
            acc = acc + self.iso.apply(c, modulus) * power
            power = power * N
        return acc.rmod(modulus)


def series_derivative(S: TruncatedSeries) -> TruncatedSeries:
    """Term-by-term derivative in T."""
    coeffs = [(S.valuation + j) * c for j, c in enumerate(S.coeffs)]
    prec = None if S.prec is None else S.prec - 1
    return TruncatedSeries(S.iso, S.valuation - 1, coeffs, prec)


def substitute_series(f: TruncatedSeries, S: TruncatedSeries) -> TruncatedSeries:
    """f(S) = sum f_k S^k for S with scalar coefficients and valuation 1."""
    if S.valuation != 1 or not S.is_scalar():
        raise ParameterError("substitution needs a scalar series of valuation 1")
    if f.prec is None:
        raise ParameterError("substitution needs a truncated series")
    rel = f.prec - f.valuation + 1
    S = S.truncate(1 + rel)
    result = TruncatedSeries.zero(f.iso, f.prec)
    if f.valuation < 0:
        power = S.inverse_central(rel) ** (-f.valuation)
    else:
        power = S ** f.valuation
    for k in range(f.valuation, f.prec):
        term = power.scale_left(f._raw(k)).truncate(f.prec)
        result = result + term
        power = (power * S).truncate(f.prec + rel)
    return result.truncate(f.prec)
