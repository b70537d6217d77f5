"""Ore polynomials.

This module provides:
- OrePoly: Element of K[X; theta, delta], coefficients on the left, ascending in X
- ore_mul / ore_divmod: Product under Xa = theta(a)X + delta(a) and Euclidean division on either side
- ore_rgcd / ore_lclm: Right gcd and least common left multiple (monic)
- lclm_by_linear_algebra: Minimal left multiple found by solving the remainder conditions
"""

import logging
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import ContextMismatch, DivisionByZeroPoly, ParameterError, ZeroInput
from fields.base import FieldElement
from linalg.matrix import Matrix


# Configure logging
logger = logging.getLogger(__name__)


class OrePoly:
    """Ore polynomial sum a_i X^i.

    Attributes:
        ctx: The owning OreContext
        coeffs: Ascending K-coefficients, no trailing zeros (empty for zero)
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs: Sequence[Any] = ()):
        K = ctx.K
        cs = [c if isinstance(c, FieldElement) else K(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs: Tuple[FieldElement, ...] = tuple(cs)

    # Constructors

    @classmethod
    def zero(cls, ctx) -> "OrePoly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx) -> "OrePoly":
        return cls(ctx, (ctx.K.one,))

    @classmethod
    def x(cls, ctx) -> "OrePoly":
        return cls(ctx, (ctx.K.zero, ctx.K.one))

    @classmethod
    def constant(cls, ctx, c: Any) -> "OrePoly":
        return cls(ctx, (c,))

    @classmethod
    def monomial(cls, ctx, c: Any, n: int) -> "OrePoly":
        return cls(ctx, [ctx.K.zero] * n + [ctx.K(c) if not isinstance(c, FieldElement) else c])

    @classmethod
    def random(cls, ctx, degree: int, rng: np.random.Generator) -> "OrePoly":
        """Random polynomial of exact degree (zero when degree < 0)."""
        if degree < 0:
            return cls.zero(ctx)
        coeffs = [ctx.random_element(rng) for _ in range(degree)]
        return cls(ctx, coeffs + [ctx.random_nonzero(rng)])

    @classmethod
    def decode(cls, ctx, data: Any) -> "OrePoly":
        """From a list of K encodings or a ';'-separated string of them."""
        if isinstance(data, str):
            data = [part.strip() for part in data.split(";") if part.strip()]
        return cls(ctx, [ctx.K.decode(c) for c in data])

    def encode(self) -> List[Any]:
        return [self.ctx.K.encode(c) for c in self.coeffs]

    # Basic properties

    @property
    def degree(self) -> int:
        """Degree in X (-1 for the zero polynomial)."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> FieldElement:
        if not self.coeffs:
            return self.ctx.K.zero
        return self.coeffs[-1]

    def coeff(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.K.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.K.one

    def monic(self) -> "OrePoly":
        if self.is_zero():
            raise ZeroInput("the zero polynomial has no monic representative")
        return self.leading.inverse() * self

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, FieldElement)):
            other = OrePoly(self.ctx, (other,))
        return isinstance(other, OrePoly) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            power = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if i == 0:
                terms.append(f"{c!r}")
            elif c == self.ctx.K.one:
                terms.append(power)
            else:
                terms.append(f"({c!r}){power}")
        return " + ".join(reversed(terms)) if terms else "0"

    # Arithmetic

    def _lift(self, other: Any) -> Optional["OrePoly"]:
        if isinstance(other, OrePoly):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("polynomials belong to different contexts")
            return other
        if isinstance(other, (int, np.integer, FieldElement)):
            return OrePoly(self.ctx, (other,))
        return None

    def __add__(self, other: Any) -> "OrePoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "OrePoly":
        return OrePoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "OrePoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "OrePoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "OrePoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ore_mul(self, other)

    def __rmul__(self, other: Any) -> "OrePoly":
        # scalars on the left act coefficientwise
        if isinstance(other, (int, np.integer, FieldElement)):
            c = self.ctx.K(other) if not isinstance(other, FieldElement) else other
            return OrePoly(self.ctx, [c * a for a in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int) -> "OrePoly":
        if n < 0:
            raise ParameterError("negative powers of Ore polynomials are not polynomials")
        result = OrePoly.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def x_times(self) -> "OrePoly":
        """X * self, by X a = theta(a) X + delta(a)."""
        ctx = self.ctx
        out = [ctx.K.zero] * (len(self.coeffs) + 1)
        for j, h in enumerate(self.coeffs):
            out[j + 1] = out[j + 1] + ctx.theta(h)
            if not ctx.delta_vanishes:
                d = ctx.delta(h)
                if not d.is_zero():
                    out[j] = out[j] + d
        return OrePoly(ctx, out)

    def rmod(self, g: Any) -> "OrePoly":
        """Remainder of right division; g may be an OrePoly or a central polynomial."""
        if not isinstance(g, OrePoly):
            g = g.to_ore()
        return ore_divmod(self, g, "right")[1]

    def reduce_mod(self, modulus: Any) -> "OrePoly":
        return self.rmod(modulus)

    def substitute(self, Y: "OrePoly", modulus: Optional["OrePoly"] = None) -> "OrePoly":
        """sum a_i Y^i (Horner, coefficients kept on the left), optionally reduced mod modulus."""
        acc = OrePoly.zero(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * Y + OrePoly(self.ctx, (c,))
            if modulus is not None:
                acc = acc.rmod(modulus)
        return acc

    def evaluate_at(self, c: FieldElement):
        """Shortcut for evaluation.ev(self, c)."""
        from evaluation.evalmap import ev

        return ev(self, c)


def _check(f: OrePoly, g: OrePoly) -> None:
    if f.ctx is not g.ctx and f.ctx != g.ctx:
        raise ContextMismatch("polynomials belong to different contexts")


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    """Product f*g; deg(fg) = deg f + deg g."""
    _check(f, g)
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return OrePoly.zero(ctx)
    K = ctx.K
    out = [K.zero] * (f.degree + g.degree + 1)

    if ctx.delta_vanishes:
        # (a X^i)(b X^j) = a theta^i(b) X^{i+j}
        conjugates = []
        for b in g.coeffs:
            row = [b]
            for _ in range(ctx.s - 1):
                row.append(ctx.theta(row[-1]))
            conjugates.append(row)
        for i, a in enumerate(f.coeffs):
            if a.is_zero():
                continue
            r = i % ctx.s
            for j, row in enumerate(conjugates):
                b = row[r]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return OrePoly(ctx, out)

    h = g
    for i, a in enumerate(f.coeffs):
        if i:
            h = h.x_times()
        if a.is_zero():
            continue
        for j, b in enumerate(h.coeffs):
            if not b.is_zero():
                out[j] = out[j] + a * b
    return OrePoly(ctx, out)


def ore_divmod(f: OrePoly, g: OrePoly, side: str = "right") -> Tuple[OrePoly, OrePoly]:
    """Euclidean division.

    Args:
        f: Dividend
        g: Nonzero divisor
        side: "right" for f = Q g + R, "left" for f = g Q + R

    Returns:
        (Q, R) with deg R < deg g
    """
    _check(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero Ore polynomial")
    ctx = f.ctx
    K = ctx.K
    dg = g.degree
    if f.degree < dg:
        return OrePoly.zero(ctx), f
    quotient = [K.zero] * (f.degree - dg + 1)
    R = f

    if side == "right":
        shifted = [g]
        while R.degree >= dg:
            d = R.degree - dg
            while len(shifted) <= d:
                shifted.append(shifted[-1].x_times())
            xg = shifted[d]
            c = R.leading / xg.leading
            quotient[d] = quotient[d] + c
            R = R - c * xg
        return OrePoly(ctx, quotient), R

    if side == "left":
        lg = g.leading
        while R.degree >= dg:
            d = R.degree - dg
            c = ctx.theta_power(R.leading / lg, -dg)
            quotient[d] = quotient[d] + c
            R = R - ore_mul(g, OrePoly.monomial(ctx, c, d))
        return OrePoly(ctx, quotient), R

    raise ParameterError(f"unknown division side: {side}")


def ore_rgcd(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic greatest common right divisor by the right Euclidean algorithm."""
    _check(f, g)
    if f.is_zero() and g.is_zero():
        raise ZeroInput("rgcd(0, 0) is undefined")
    r0, r1 = f, g
    while not r1.is_zero():
        r0, r1 = r1, ore_divmod(r0, r1, "right")[1]
    return r0.monic()


def ore_lclm(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic least common left multiple via the extended right Euclidean algorithm.

    Keeps r_i = u_i f + v_i g; at the first zero remainder u f = -v g is the lclm.
    """
    _check(f, g)
    if f.is_zero() or g.is_zero():
        raise ZeroInput("lclm needs nonzero polynomials")
    ctx = f.ctx
    r0, u0 = f, OrePoly.one(ctx)
    r1, u1 = g, OrePoly.zero(ctx)
    while True:
        q, r2 = ore_divmod(r0, r1, "right")
        u2 = u0 - q * u1
        if r2.is_zero():
            return (u2 * f).monic()
        r0, u0, r1, u1 = r1, u1, r2, u2


def lclm_by_linear_algebra(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic left multiple of f and g of minimal degree, by solving for its coefficients.

    Right remainders are left K-linear, so L = X^n + sum l_i X^i is a common left
    multiple iff sum l_i rem(X^i) = -rem(X^n) for both divisors.
    """
    _check(f, g)
    ctx = f.ctx
    K = ctx.K
    df, dg = f.degree, g.degree

    def remainders(i: int) -> List[FieldElement]:
        xi = OrePoly.monomial(ctx, K.one, i)
        rf = xi.rmod(f)
        rg = xi.rmod(g)
        return [rf.coeff(j) for j in range(df)] + [rg.coeff(j) for j in range(dg)]

    rows = [remainders(i) for i in range(df + dg + 1)]
    for n in range(max(df, dg), df + dg + 1):
        if n == 0:
            return OrePoly.one(ctx)
        system = Matrix(K, rows[:n]).transpose()
        solution = system.solve([-x for x in rows[n]])
        if solution is not None:
            return OrePoly(ctx, list(solution) + [K.one])
    raise ParameterError("no common left multiple found within the degree bound")
