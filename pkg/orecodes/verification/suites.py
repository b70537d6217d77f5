"""Acceptance suites 1-9.

Each suite samples settings.scaled(count) instances of the full-size count
and raises VerificationFailure on the first counterexample. Suites 8 and 9
walk the whole code grid whatever the scale.
"""

import logging
from typing import List, Optional

import numpy as np

from config import Settings
from core.errors import TruncationTooSmall, VerificationFailure
from fields.base import FieldElement
from linalg.matrix import Matrix
from ore.central import CentralFraction, CentralPoly
from ore.context import OreContext
from ore.fraction import OreFraction
from ore.polynomial import OrePoly, ore_divmod
from evaluation.evalmap import ev
from evaluation.subspace import Subspace
from reduced_trace.trd import comm_residue, sigma0, sigma0_class, trd_closed, trd_matrix
from residues.taylor import build_admissible, goppa_fraction, residue_sum, sres, sres_simple, ts
from duality.pairing import adjoint
from duality.star import dual_point, ev_star, resdual_rhs, star
from codes.distance import min_distance, sampled_weight_bound
from codes.duality import check_duality
from codes.families import lg_basis, lrs_basis, psi_setup
from verification.base import VerificationSuite, register_suite
from verification.contexts import code_grid, standard_contexts


# Configure logging
logger = logging.getLogger(__name__)


def _fail(message: str) -> None:
    raise VerificationFailure(message)


def _random_points(ctx: OreContext, m: int, rng: np.random.Generator) -> List[FieldElement]:
    """m unramified points with pairwise distinct, nonzero upsilon."""
    for _ in range(100):
        points = [ctx.random_point(rng) for _ in range(m)]
        values = [ctx.upsilon(c) for c in points]
        if len(set(values)) == m and all(not v.is_zero() for v in values):
            return points
    raise VerificationFailure(f"could not sample {m} points with distinct upsilon in {ctx.describe()}")


def _random_subspace(ctx: OreContext, rng: np.random.Generator) -> Subspace:
    dim = int(rng.integers(0, ctx.s + 1))
    return Subspace.span(ctx, [ctx.random_element(rng) for _ in range(dim)])


def _random_central_point(ctx: OreContext, rng: np.random.Generator, exclude: List[FieldElement]) -> Optional[FieldElement]:
    for _ in range(50):
        z = ctx.random_scalar(rng)
        if ctx.is_frobenius and z.is_zero():
            continue
        if z not in exclude:
            return z
    return None


def _random_nonzero_poly(ctx: OreContext, degree: int, rng: np.random.Generator) -> OrePoly:
    while True:
        f = OrePoly.random(ctx, degree, rng)
        if not f.is_zero():
            return f


@register_suite
class RingLawsSuite(VerificationSuite):
    number = 1
    name = "ring-laws"
    description = "Associativity, distributivity and Euclidean division"

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        count = settings.scaled(500)
        checked = 0
        for ctx in standard_contexts().values():
            for _ in range(count):
                f, g, h = (OrePoly.random(ctx, 3, rng) for _ in range(3))
                if (f * g) * h != f * (g * h):
                    _fail(f"associativity fails for {f!r}, {g!r}, {h!r}")
                if f * (g + h) != f * g + f * h or (f + g) * h != f * h + g * h:
                    _fail(f"distributivity fails for {f!r}, {g!r}, {h!r}")
                d = _random_nonzero_poly(ctx, 2, rng)
                for side in ("right", "left"):
                    Q, R = ore_divmod(f * g, d, side)
                    rebuilt = Q * d + R if side == "right" else d * Q + R
                    if rebuilt != f * g or R.degree >= d.degree:
                        _fail(f"{side} division of {f * g!r} by {d!r} fails")
                checked += 1
        return checked


@register_suite
class KernelSuite(VerificationSuite):
    number = 2
    name = "evaluation-kernel"
    description = "ev_c(Z - upsilon(c)) = 0, the kernel ideal and surjectivity of ev_c"

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        count = settings.scaled(50)
        checked = 0
        for ctx in standard_contexts().values():
            for _ in range(count):
                c = ctx.random_point(rng)
                N = CentralPoly.linear(ctx, ctx.upsilon(c)).to_ore()
                if not ev(N, c).is_zero():
                    _fail(f"ev_{c!r}(Z - upsilon(c)) is not zero")
                g = OrePoly.random(ctx, 2, rng)
                if not ev(g * N, c).is_zero():
                    _fail(f"ev_{c!r} does not kill the left ideal generated by Z - upsilon(c)")
                f = OrePoly.random(ctx, ctx.s + 1, rng)
                reduced = f.rmod(N)
                if ev(f, c).is_zero() != reduced.is_zero():
                    _fail(f"kernel of ev_{c!r} differs from the ideal at {f!r}")
                images = [
                    [x for row in ev(OrePoly.monomial(ctx, b, i), c).matrix.rows for x in row]
                    for b in ctx.basis
                    for i in range(ctx.s)
                ]
                if Matrix(ctx.K, images).rank() != ctx.s ** 2:
                    _fail(f"ev_{c!r} is not surjective onto End_F(K)")
                checked += 1
        return checked


@register_suite
class UpsilonSuite(VerificationSuite):
    number = 3
    name = "upsilon"
    description = "Closed-form upsilon equals the remainder of Z(X) by X - c and lies in F"

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        count = settings.scaled(100)
        checked = 0
        for ctx in standard_contexts().values():
            for _ in range(count):
                c = ctx.random_element(rng)
                remainder = ctx.centre.rmod(OrePoly(ctx, [-c, ctx.K.one]))
                value = ctx.upsilon(c)
                if remainder.coeff(0) != value or remainder.degree > 0:
                    _fail(f"upsilon({c!r}) = {value!r} but Z(X) mod (X - c) = {remainder!r}")
                if not ctx.is_in_F(value):
                    _fail(f"upsilon({c!r}) = {value!r} is not in F")
                checked += 1
        return checked


@register_suite
class ReducedTraceSuite(VerificationSuite):
    number = 4
    name = "reduced-trace"
    description = "trd_matrix = trd_closed, trd(fg) = trd(gf) and Tr ev_c(f) = trd(f)(upsilon(c))"

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        checked = 0
        contexts = standard_contexts()
        for ctx in contexts.values():
            for _ in range(settings.scaled(300)):
                f, g = OrePoly.random(ctx, 4, rng), OrePoly.random(ctx, 3, rng)
                if trd_matrix(f) != trd_closed(f):
                    _fail(f"trd_matrix and trd_closed differ at {f!r}")
                if trd_closed(f * g) != trd_closed(g * f):
                    _fail(f"trd(fg) != trd(gf) for {f!r}, {g!r}")
                checked += 1
            for _ in range(settings.scaled(100)):
                f, c = OrePoly.random(ctx, 4, rng), ctx.random_point(rng)
                if ev(f, c).trace() != trd_closed(f).evaluate(ctx.upsilon(c)):
                    _fail(f"Tr ev_{c!r}({f!r}) differs from the reduced trace")
                checked += 1

        ctx = contexts["CTX-B"]
        f = OrePoly(ctx, [ctx.K.zero, ctx.K.gen])
        one = ctx.K.one
        if ev(f, one).trace() != one or trd_closed(f).evaluate(ctx.upsilon(one)) != one:
            _fail("worked instance tX at c = 1 does not give 1")
        return checked + 1


@register_suite
class TaylorSuite(VerificationSuite):
    number = 5
    name = "taylor"
    description = "Admissible isomorphisms, Taylor reconstruction and simple-pole residues"

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        checked = 0
        for ctx in standard_contexts().values():
            for _ in range(settings.scaled(20)):
                z = _random_central_point(ctx, rng, [])
                for M in range(1, 7):
                    if not build_admissible(ctx, z, M).is_valid():
                        _fail(f"admissible iso at {z!r} is not valid modulo N^{M}")
                checked += 1

            for _ in range(settings.scaled(100)):
                z = _random_central_point(ctx, rng, [])
                M = int(rng.integers(1, 5))
                f = OrePoly.random(ctx, 5, rng)
                iso = build_admissible(ctx, z, M)
                target = ctx.to_working(f).rmod(iso.modulus)
                try:
                    series = ts(f, z, M)
                except TruncationTooSmall:
                    if target.is_zero():
                        continue
                    raise
                if series.reconstruct() != target:
                    _fail(f"Taylor series of {f!r} at {z!r} does not reconstruct modulo N^{M}")
                checked += 1

            for _ in range(settings.scaled(50)):
                m = 1 if ctx.is_frobenius else int(rng.integers(1, 3))
                points = _random_points(ctx, m, rng)
                subspaces = [_random_subspace(ctx, rng) for _ in points]
                g = OrePoly.random(ctx, 2, rng)
                f = goppa_fraction(g, points, subspaces)
                for i, c in enumerate(points):
                    if sres(f, ctx.upsilon(c)) != sres_simple(g, points, subspaces, i):
                        _fail(f"sres and sres_simple differ at point {c!r}")
                checked += 1
        return checked


def _random_split_fraction(ctx: OreContext, rng: np.random.Generator) -> Optional[OreFraction]:
    """P/D with D split over F, poles of order <= 2 and deg P within the residue-formula bound."""
    roots: List[FieldElement] = []
    D = CentralPoly.one(ctx)
    for _ in range(int(rng.integers(2, 4))):
        z = _random_central_point(ctx, rng, roots)
        if z is None:
            break
        roots.append(z)
        D = D * CentralPoly.linear(ctx, z) ** int(rng.integers(1, 3))
    if D.degree < 2:
        return None
    bound = ctx.s * D.degree - 2 if ctx.is_differential else ctx.s * (D.degree - 1) - 1
    return OreFraction(OrePoly.random(ctx, bound, rng), D)


@register_suite
class ResidueFormulaSuite(VerificationSuite):
    number = 6
    name = "residue-formula"
    description = "Commutative residues of trd, the sigma0 refinement and the zero residue sum"

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        checked = 0
        for ctx in standard_contexts().values():
            for _ in range(settings.scaled(50)):
                f = _random_split_fraction(ctx, rng)
                if f is None:
                    continue
                # residue_sum cross-checks comm_residue against trd(sres) pointwise
                report = residue_sum(f)
                if not report.asserted or not report.total.is_zero():
                    _fail(f"residue sum of {f!r} is {report.total!r}")
                if ctx.is_differential:
                    top = CentralFraction(sigma0(f.num), f.den)
                    for z in report.points:
                        lhs = sigma0_class(sres(f, z))
                        rhs = comm_residue(top, z)
                        if lhs != rhs:
                            _fail(f"sigma0 of the residue at {z!r} is {lhs!r}, res of sigma0 is {rhs!r} for {f!r}")
                checked += 1
        return checked


@register_suite
class DualityCommutationSuite(VerificationSuite):
    number = 7
    name = "duality-commutations"
    description = "ev_{c^vee}(f*) is the adjoint of ev_c(f); residues at simple poles commute with star"

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        checked = 0
        for ctx in standard_contexts().values():
            for _ in range(settings.scaled(50)):
                f, c = OrePoly.random(ctx, 3, rng), ctx.random_point(rng)
                if ev_star(f, c) != adjoint(ev(f, c)):
                    _fail(f"ev of f* at the dual point differs from the adjoint for {f!r}, c = {c!r}")
                checked += 1
            for _ in range(settings.scaled(50)):
                z_bar = _random_central_point(ctx, rng, [])
                other = _random_central_point(ctx, rng, [z_bar])
                if other is None:
                    continue
                D = CentralPoly.linear(ctx, z_bar) * CentralPoly.linear(ctx, other)
                f = OreFraction(OrePoly.random(ctx, 2 * ctx.s - 1, rng), D)
                lhs = sres(star(f), dual_point(ctx, z_bar))
                rhs = resdual_rhs(sres(f, z_bar), z_bar)
                if lhs != rhs:
                    _fail(f"residue of f* at the dual of {z_bar!r} is {lhs!r}, expected {rhs!r}")
                checked += 1
        return checked


def _msrd_contexts():
    contexts = standard_contexts()
    return [contexts["CTX-A"], contexts["CTX-B"]]


@register_suite
class CodesSuite(VerificationSuite):
    number = 8
    name = "codes-msrd"
    description = "LRS and LG codes reach d = n - k + 1; Psi preserves sum-rank weight"

    def _distance_ok(self, code, settings: Settings, rng: np.random.Generator) -> None:
        expected = code.n - code.k + 1
        if code.ctx.K.is_finite:
            d = min_distance(code, settings)
            if d != expected:
                _fail(f"{code.family} code n={code.n}, k={code.k} has d = {d}, expected {expected}")
        else:
            bound = sampled_weight_bound(code, settings.scaled(100), rng)
            if bound is not None and bound < expected:
                _fail(f"{code.family} code n={code.n}, k={code.k} has a word of weight {bound} < {expected}")
        if code.k + expected > code.n + 1:
            _fail("Singleton bound violated")

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        checked = 0
        for ctx in _msrd_contexts():
            for points, subspaces in code_grid(ctx):
                n_lrs = sum(V.dimension for V in subspaces)
                for k in range(1, n_lrs + 1):
                    code = lrs_basis(ctx, k, points, subspaces)
                    if code.dimension != k:
                        _fail(f"LRS generators are not K-free for k = {k}")
                    self._distance_ok(code, settings, rng)
                    checked += 1
                n_lg = sum(ctx.s - V.dimension for V in subspaces)
                for k in range(1, n_lg):
                    code = lg_basis(ctx, k, points, subspaces)
                    if code.dimension != k:
                        _fail(f"LG code has dimension {code.dimension}, expected {k}")
                    self._distance_ok(code, settings, rng)
                    psi = psi_setup(ctx, k, points, subspaces)
                    source = psi.source_code()
                    for g_lrs, g_lg in zip(source.generators, code.generators):
                        if psi.apply(g_lrs) != g_lg:
                            _fail("Psi does not map LRS(k, c, W) generators to LG generators")
                    for _ in range(settings.scaled(100)):
                        word = source.combine([ctx.random_element(rng) for _ in source.generators])
                        if not psi.preserves_weight(word):
                            _fail("Psi changes the sum-rank weight of a codeword")
                    checked += 1
        return checked


@register_suite
class MainDualitySuite(VerificationSuite):
    number = 9
    name = "main-duality"
    description = "LRS(k, c, V)^perp = LG(n - k, c^vee, V^perp)"

    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        checked = 0
        for ctx in _msrd_contexts():
            for points, subspaces in code_grid(ctx):
                n = sum(V.dimension for V in subspaces)
                for k in range(1, n + 1):
                    report = check_duality(ctx, k, points, subspaces)
                    if not report.ok:
                        _fail(
                            f"duality fails for k={k}, n={n}: pairings zero={report.all_zero}, "
                            f"dims {report.lrs_dimension}+{report.lg_dimension}, matches={report.matches_dual}"
                        )
                    checked += 1
        return checked
