"""Ore ring contexts.

This module provides:
- ContextKind: The two supported instantiations
- OreContext: Immutable bundle (K, F, theta, delta, Z(X), tau, upsilon) with a fixed F-basis of K
- make_frobenius_context: K = F_{q^s}, theta = x -> x^q, delta = a (theta - id)
- make_differential_context: K = F_p(t), theta = id, delta = a d/dt
- context_from_descriptor: Rebuild a context from its JSON descriptor

Elements of F are represented as elements of K lying in F.
"""

import logging
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from core.errors import (
    NoLinearizedAnnihilator,
    ParameterError,
    SIsOne,
    VerificationFailure,
    ZeroDerivation,
)
from fields.base import Field, FieldElement
from fields.finite import FiniteField, frobenius
from fields.rational import RationalFunctionField, derivative
from linalg.matrix import Matrix, Vector


# Configure logging
logger = logging.getLogger(__name__)


class ContextKind(str, Enum):
    """Supported instantiations."""
    FROBENIUS = "frobenius"
    DIFFERENTIAL = "differential"


class OreContext:
    """Ambient data of an Ore polynomial ring K[X; theta, delta].

    Use make_frobenius_context / make_differential_context rather than the
    constructor.

    Attributes:
        kind: Frobenius or differential instantiation
        p: Characteristic
        e: Degree of F over F_p (Frobenius kind; 1 otherwise)
        s: Degree [K:F]
        K: Coefficient field
        a: The element with delta = a delta_0 (Frobenius) or delta = a d/dt (differential)
        basis: Fixed ordered F-basis of K
        z_coeffs: Coefficients z_0..z_r of the linearized Z(X) (differential kind)
    """

    def __init__(
        self,
        kind: ContextKind,
        p: int,
        e: int,
        s: int,
        K: Field,
        a: FieldElement,
        modulus: Optional[Sequence[int]] = None,
    ):
        self.kind = kind
        self.p = p
        self.e = e
        self.s = s
        self.K = K
        self.a = a
        self.modulus = tuple(modulus) if modulus is not None else None
        self.q = p ** e

        if kind == ContextKind.FROBENIUS:
            gen = K.gen
            self.basis: List[FieldElement] = [gen ** i for i in range(s)]
            self.z_coeffs: Optional[List[FieldElement]] = None
        else:
            t = K.gen
            self.basis = [t ** i for i in range(s)]
            self.z_coeffs = self._solve_linearized_annihilator()

        self.tau_unit = self._find_tau_unit()
        logger.info(f"[OreContext] built {self.describe()}")

    # Identification

    @property
    def is_frobenius(self) -> bool:
        return self.kind == ContextKind.FROBENIUS

    @property
    def is_differential(self) -> bool:
        return self.kind == ContextKind.DIFFERENTIAL

    @property
    def twist(self) -> FieldElement:
        """The twist point a of a Frobenius context (delta = a delta_0)."""
        return self.a

    @property
    def delta_vanishes(self) -> bool:
        return self.is_frobenius and self.a.is_zero()

    def descriptor(self) -> Dict[str, Any]:
        """JSON descriptor; context_from_descriptor inverts it."""
        if self.is_frobenius:
            return {
                "kind": self.kind.value,
                "p": self.p,
                "e": self.e,
                "s": self.s,
                "twist": self.K.encode(self.a),
                "a": None,
                "modulus": list(self.K.modulus),
            }
        return {
            "kind": self.kind.value,
            "p": self.p,
            "e": 1,
            "s": self.s,
            "twist": None,
            "a": self.K.encode(self.a),
            "modulus": None,
        }

    def describe(self) -> str:
        if self.is_frobenius:
            return f"frobenius K={self.K} s={self.s} twist={self.a!r}"
        return f"differential K={self.K} a={self.a!r} z={self.z_coeffs}"

    def _key(self):
        return (self.kind, self.p, self.e, self.s, self.K, self.a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OreContext) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.e, self.s))

    def __repr__(self) -> str:
        return f"OreContext({self.describe()})"

    # theta and delta

    def theta(self, x: FieldElement) -> FieldElement:
        if self.is_frobenius:
            return frobenius(x, self.q)
        return x

    def theta_power(self, x: FieldElement, n: int) -> FieldElement:
        """theta^n(x) for any integer n (theta has order s in the Frobenius kind)."""
        if self.is_differential:
            return x
        n %= self.s
        if n == 0:
            return x
        return x ** (self.q ** n)

    def theta_inv(self, x: FieldElement) -> FieldElement:
        return self.theta_power(x, -1)

    def delta(self, x: FieldElement) -> FieldElement:
        if self.is_frobenius:
            if self.a.is_zero():
                return self.K.zero
            return self.a * (self.theta(x) - x)
        return self.a * derivative(x)

    def delta_power(self, x: FieldElement, k: int) -> FieldElement:
        for _ in range(k):
            x = self.delta(x)
        return x

    # F and coordinates

    def is_in_F(self, x: FieldElement) -> bool:
        if self.is_frobenius:
            return self.theta(x) == x
        return self.K.in_subfield(x)

    def field_trace(self, x: FieldElement) -> FieldElement:
        """Tr_{K/F}(x) = sum of the s conjugates (Frobenius kind)."""
        acc = self.K.zero
        y = x
        for _ in range(self.s):
            acc = acc + y
            y = self.theta(y)
        return acc

    def field_norm(self, x: FieldElement) -> FieldElement:
        """N_{K/F}(x) = product of the s conjugates (Frobenius kind)."""
        acc = self.K.one
        y = x
        for _ in range(self.s):
            acc = acc * y
            y = self.theta(y)
        return acc

    @cached_property
    def _trace_dual(self) -> Matrix:
        gram = Matrix(
            self.K,
            [[self.field_trace(bi * bj) for bj in self.basis] for bi in self.basis],
        )
        return gram.inverse()

    def coordinates(self, x: FieldElement) -> Vector:
        """Coordinates of x over F in the fixed basis."""
        if self.is_differential:
            return self.K.p_split(x)
        if self.e == 1:
            return [self.K(c) for c in x.coeffs]
        traces = [self.field_trace(x * b) for b in self.basis]
        return self._trace_dual.apply(traces)

    def from_coordinates(self, v: Sequence[FieldElement]) -> FieldElement:
        acc = self.K.zero
        for c, b in zip(v, self.basis):
            if not c.is_zero():
                acc = acc + c * b
        return acc

    def matrix_of(self, func: Callable[[FieldElement], FieldElement]) -> Matrix:
        """Matrix over F of an F-linear map K -> K (columns = images of the basis)."""
        columns = [self.coordinates(func(b)) for b in self.basis]
        return Matrix.from_columns(self.K, columns, self.s)

    def delta_matrix(self) -> Matrix:
        return self.matrix_of(self.delta)

    def tau_matrix(self) -> Matrix:
        """1 x s matrix of tau."""
        return Matrix(self.K, [[self.tau(b) for b in self.basis]])

    # Sampling

    @cached_property
    def _F_elements(self) -> List[FieldElement]:
        if self.e == 1:
            return [self.K(i) for i in range(self.p)]
        return self.K.subfield_elements(self.e)

    def F_elements(self) -> List[FieldElement]:
        """All elements of F (finite F only)."""
        if not self.K.is_finite:
            raise ParameterError("F is infinite in differential contexts")
        return list(self._F_elements)

    def random_element(self, rng: np.random.Generator) -> FieldElement:
        return self.K.random_element(rng)

    def random_nonzero(self, rng: np.random.Generator) -> FieldElement:
        while True:
            x = self.K.random_element(rng)
            if not x.is_zero():
                return x

    def random_scalar(self, rng: np.random.Generator) -> FieldElement:
        """Random element of F."""
        if self.is_frobenius:
            elements = self._F_elements
            return elements[int(rng.integers(0, len(elements)))]
        return self.K.random_subfield_element(rng)

    def random_point(self, rng: np.random.Generator) -> FieldElement:
        """Random unramified evaluation point."""
        while True:
            c = self.random_element(rng)
            if not self.is_ramified(c):
                return c

    # Centre

    def _solve_linearized_annihilator(self) -> List[FieldElement]:
        """Solve delta^p = lambda * delta over F and return (z_0, z_1) = (-lambda, 1)."""
        dm = self.delta_matrix()
        power = dm
        for _ in range(self.p - 1):
            power = power @ dm
        system = Matrix(self.K, [[x] for row in dm.rows for x in row], 1)
        target = [x for row in power.rows for x in row]
        solution = system.solve(target)
        if solution is None or not self.is_in_F(solution[0]):
            raise NoLinearizedAnnihilator(f"delta^{self.p} is not an F-multiple of delta")
        z0 = -solution[0]
        logger.debug(f"[OreContext] Z(X) = X^{self.p} + ({z0!r}) X")
        return [z0, self.K.one]

    @cached_property
    def centre(self):
        """Z(X) as an Ore polynomial: (X + a)^s, or X^p + z_0 X."""
        from ore.polynomial import OrePoly

        if self.is_frobenius:
            return OrePoly(self, [self.a, self.K.one]) ** self.s
        coeffs = [self.K.zero] * (self.p + 1)
        coeffs[1] = self.z_coeffs[0]
        coeffs[self.p] = self.z_coeffs[1]
        return OrePoly(self, coeffs)

    # tau, upsilon, ramification

    def tau(self, x: FieldElement) -> FieldElement:
        """Field trace (Frobenius) or differential trace sum z_i delta^{p^i - 1}(x)."""
        if self.is_frobenius:
            value = self.field_trace(x)
        else:
            value = self.K.zero
            for i, z in enumerate(self.z_coeffs):
                if not z.is_zero():
                    value = value + z * self.delta_power(x, self.p ** i - 1)
        if not self.is_in_F(value):
            raise VerificationFailure(f"tau({x!r}) = {value!r} is not in F")
        return value

    def upsilon(self, c: FieldElement) -> FieldElement:
        """Remainder of Z(X) in right division by X - c, in closed form."""
        if self.is_frobenius:
            return self.field_norm(c + self.a)
        value = self.K.zero
        r = len(self.z_coeffs) - 1
        for i in range(r + 1):
            z = self.z_coeffs[i]
            if z.is_zero():
                continue
            for j in range(i + 1):
                term = z * self.delta_power(c, self.p ** j - 1)
                value = value + term ** (self.p ** (i - j))
        return value

    def is_ramified(self, c: FieldElement) -> bool:
        if self.is_frobenius:
            return c == -self.a
        return False

    def _find_tau_unit(self) -> FieldElement:
        for b in self.basis:
            t = self.tau(b)
            if not t.is_zero():
                return b / t
        raise VerificationFailure("tau vanishes on the whole basis")

    # Hilbert twist to the delta = 0 coordinate

    @cached_property
    def working(self) -> "OreContext":
        """The context used for centre, residue and duality computations.

        Frobenius contexts with a nonzero twist are moved to twist 0 by the
        substitution X -> X' - a; every other context is its own working context.
        """
        if self.is_frobenius and not self.a.is_zero():
            return OreContext(ContextKind.FROBENIUS, self.p, self.e, self.s, self.K, self.K.zero, self.modulus)
        return self

    def to_working(self, f):
        """Map an Ore polynomial of this context to the working context."""
        if self.working is self:
            return f
        from ore.twist import apply_substitution

        return apply_substitution(f, self.working, -self.a)

    def from_working(self, g):
        """Inverse of to_working."""
        if self.working is self:
            return g
        from ore.twist import apply_substitution

        return apply_substitution(g, self, self.a)


def make_frobenius_context(
    p: int,
    e: int,
    s: int,
    twist: Any = 0,
    modulus: Optional[Sequence[int]] = None,
) -> OreContext:
    """K = F_{q^s}, F = F_q with q = p^e, theta = x -> x^q, delta = twist * (theta - id).

    Args:
        p: Characteristic
        e: Degree of F over F_p
        s: Degree of K over F (at least 2)
        twist: Element a of K, as an element or an encoding
        modulus: Optional ascending defining polynomial of K over F_p

    Returns:
        The context, with centre F[(X + twist)^s]
    """
    if s < 2:
        raise SIsOne(f"s = {s}: theta is the identity and delta vanishes")
    if e < 1:
        raise ParameterError(f"e must be positive, got {e}")
    K = FiniteField(p, e * s, modulus)
    a = twist if isinstance(twist, FieldElement) else K.decode(twist)
    return OreContext(ContextKind.FROBENIUS, p, e, s, K, K(a), modulus)


def make_differential_context(p: int, a: Any = 1) -> OreContext:
    """K = F_p(t), F = F_p(t^p), theta = id, delta = a d/dt.

    Args:
        p: Characteristic
        a: Nonzero rational function, as an element or an encoding

    Returns:
        The context, with Z(X) = X^p + z_0 X
    """
    K = RationalFunctionField(p)
    elem = a if isinstance(a, FieldElement) else K.decode(a)
    elem = K(elem)
    if elem.is_zero():
        raise ZeroDerivation("delta = 0 * d/dt is the zero derivation")
    return OreContext(ContextKind.DIFFERENTIAL, p, 1, p, K, elem)


def context_from_descriptor(data: Dict[str, Any]) -> OreContext:
    """Rebuild a context from descriptor()."""
    kind = ContextKind(data["kind"])
    if kind == ContextKind.FROBENIUS:
        twist = data.get("twist")
        return make_frobenius_context(
            data["p"], data.get("e", 1), data["s"], 0 if twist is None else twist, data.get("modulus"),
        )
    return make_differential_context(data["p"], data.get("a", 1))


def compute_centre_generator(ctx: OreContext):
    """The distinguished generator Z(X) of the centre, checked to have degree [K:F]."""
    Z = ctx.centre
    if Z.degree != ctx.s:
        raise NoLinearizedAnnihilator(f"deg Z(X) = {Z.degree} differs from [K:F] = {ctx.s}")
    return Z
