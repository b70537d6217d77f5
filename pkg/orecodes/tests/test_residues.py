"""Tests for admissible isomorphisms, Taylor series and skew residues."""

import pytest

from core.errors import NonSplitDenominator, ParameterError, ZeroFunction, ZeroPointFrobenius, ZeroTruncation
from ore import CentralFraction, CentralPoly, OreFraction, OrePoly
from evaluation import Subspace
from reduced_trace import comm_residue, sigma0, sigma0_class
from residues import (
    build_admissible,
    goppa_fraction,
    ord_and_principal,
    residue_degree_hypothesis,
    residue_sum,
    sres,
    sres_simple,
    ts,
)


def demo_fraction(ctx, t):
    """t X / ((Z + 1)(Z + t^2 + 1)) over F_2(t)."""
    K = ctx.K
    num = OrePoly(ctx, [K.zero, t])
    den = CentralPoly.from_roots(ctx, [K.one, t * t + K.one])
    return OreFraction(num, den)


class TestAdmissible:
    def test_differential_at_zero(self, ctx_b, t_elem):
        iso = build_admissible(ctx_b, ctx_b.K.zero, 2)
        assert iso.Y == OrePoly(ctx_b, [0, 1, t_elem])
        assert iso.is_valid()

    def test_differential_at_one(self, ctx_b, t_elem):
        iso = build_admissible(ctx_b, ctx_b.K.one, 2)
        assert iso.Y == OrePoly(ctx_b, [t_elem, 1, t_elem])
        assert iso.is_valid()

    @pytest.mark.parametrize("M", [1, 2, 3, 4])
    def test_valid_for_every_order(self, ctx_a, ctx_c, ctx_d, M):
        for ctx in (ctx_a, ctx_c, ctx_d):
            z = ctx.K.one
            assert build_admissible(ctx, z, M).is_valid()

    def test_zero_point_frobenius(self, ctx_a):
        with pytest.raises(ZeroPointFrobenius):
            build_admissible(ctx_a, ctx_a.K.zero, 2)

    def test_zero_truncation(self, ctx_b):
        with pytest.raises(ZeroTruncation):
            build_admissible(ctx_b, ctx_b.K.one, 0)


class TestTaylor:
    def test_reconstruct(self, ctx_b, ctx_d, rng):
        for ctx in (ctx_b, ctx_d):
            z = ctx.K.one
            f = OrePoly.random(ctx, 5, rng)
            series = ts(f, z, 3)
            iso = build_admissible(ctx, z, 3)
            assert series.reconstruct() == ctx.to_working(f).rmod(iso.modulus)

    def test_order_of_vanishing(self, ctx_a):
        K = ctx_a.K
        N = CentralPoly.linear(ctx_a, K.one)
        f = (N ** 2).to_ore() * OrePoly.x(ctx_a)
        order, principal = ord_and_principal(f, K.one)
        assert order == 2
        assert not principal.is_zero()

    def test_pole_order(self, ctx_b):
        K = ctx_b.K
        f = OreFraction(OrePoly.one(ctx_b), CentralPoly.linear(ctx_b, K.one) ** 2)
        order, _ = ord_and_principal(f, K.one)
        assert order == -2

    def test_zero_function(self, ctx_b):
        with pytest.raises(ZeroFunction):
            ord_and_principal(OrePoly.zero(ctx_b), ctx_b.K.one)

    def test_independent_of_the_admissible_unit(self, ctx_a, ctx_b, rng):
        for ctx in (ctx_a, ctx_b):
            K = ctx.K
            # a nonzero element of ker tau moves the unit without changing tau(unit)
            shifts = [b - ctx.tau(b) * ctx.tau_unit for b in ctx.basis]
            unit = ctx.tau_unit + next(x for x in shifts if not x.is_zero())
            assert ctx.tau(unit) == K.one

            z = K.one
            iso = build_admissible(ctx, z, 3, unit)
            assert iso.is_valid()
            assert iso.Y != build_admissible(ctx, z, 3).Y

            N = CentralPoly.linear(ctx, z)
            g = OrePoly.random(ctx, 3, rng) + OrePoly.monomial(ctx, K.one, 4)
            for f in (OreFraction(g, N ** 2), OreFraction(g, N), (N ** 2).to_ore() * g):
                assert ord_and_principal(f, z, unit) == ord_and_principal(f, z)

    def test_unit_must_have_trace_one(self, ctx_b):
        with pytest.raises(ParameterError):
            build_admissible(ctx_b, ctx_b.K.one, 2, ctx_b.K.one)


class TestSkewResidues:
    def test_regular_point_has_no_residue(self, ctx_b):
        f = OrePoly.x(ctx_b)
        assert sres(f, ctx_b.K.one).is_zero()

    def test_simple_pole_formula_example(self, ctx_a):
        K = ctx_a.K
        points = [K.one]
        spaces = [Subspace.span(ctx_a, [K.one])]
        g = OrePoly.one(ctx_a)
        expected = OrePoly(ctx_a, [-K.one, K.one])
        assert sres_simple(g, points, spaces, 0) == expected
        assert sres(goppa_fraction(g, points, spaces), ctx_a.upsilon(K.one)) == expected

    def test_simple_pole_formula(self, ctx_b, t_elem, rng):
        K = ctx_b.K
        points = [K.one, t_elem]
        spaces = [Subspace.span(ctx_b, [t_elem]), Subspace.full(ctx_b)]
        g = OrePoly.random(ctx_b, 2, rng)
        f = goppa_fraction(g, points, spaces)
        for i, c in enumerate(points):
            assert sres(f, ctx_b.upsilon(c)) == sres_simple(g, points, spaces, i)

    def test_sigma0_of_residues(self, ctx_b, t_elem, rng):
        K = ctx_b.K
        u = t_elem * t_elem + K.one
        den = CentralPoly.linear(ctx_b, K.one) ** 2 * CentralPoly.linear(ctx_b, u)
        for f in (demo_fraction(ctx_b, t_elem), OreFraction(OrePoly.random(ctx_b, 4, rng), den)):
            top = CentralFraction(sigma0(f.num), f.den)
            for z in (K.one, u):
                assert sigma0_class(sres(f, z)) == comm_residue(top, z)


class TestResidueSum:
    def test_worked_example(self, ctx_b, t_elem):
        K = ctx_b.K
        report = residue_sum(demo_fraction(ctx_b, t_elem))
        assert set(report.points) == {K.one, t_elem * t_elem + K.one}
        assert report.values == [K.one / (t_elem * t_elem)] * 2
        assert report.total.is_zero()
        assert report.asserted
        assert report.ok

    def test_degree_hypothesis(self, ctx_a, ctx_b, t_elem):
        assert residue_degree_hypothesis(demo_fraction(ctx_b, t_elem))
        K = ctx_a.K
        den = CentralPoly.from_roots(ctx_a, [K.one, K(2)])
        assert residue_degree_hypothesis(OreFraction(OrePoly.x(ctx_a), den))
        assert not residue_degree_hypothesis(OreFraction(OrePoly.monomial(ctx_a, K.one, 2), den))

    def test_unasserted_sum(self, ctx_b, t_elem):
        K = ctx_b.K
        num = OrePoly.monomial(ctx_b, K.one, 3)
        den = CentralPoly.from_roots(ctx_b, [K.one])
        report = residue_sum(OreFraction(num, den))
        assert not report.asserted
        assert report.ok

    def test_frobenius_sum_vanishes(self, ctx_a, ctx_d, rng):
        for ctx in (ctx_a, ctx_d):
            K = ctx.K
            den = CentralPoly.from_roots(ctx, [K.one, K(2)])
            num = OrePoly.random(ctx, 1, rng)
            report = residue_sum(OreFraction(num, den))
            assert report.asserted
            assert report.total.is_zero()

    def test_non_split(self, ctx_a):
        K = ctx_a.K
        den = CentralPoly(ctx_a, [K.one, K.zero, K.one])
        with pytest.raises(NonSplitDenominator):
            residue_sum(OreFraction(OrePoly.x(ctx_a), den))

    def test_zero_point_frobenius(self, ctx_a):
        den = CentralPoly.from_roots(ctx_a, [ctx_a.K.zero, ctx_a.K.one])
        with pytest.raises(ZeroPointFrobenius):
            residue_sum(OreFraction(OrePoly.x(ctx_a), den))
