"""Tests for evaluation maps, kernels and annihilators."""

import pytest

from core.errors import RamifiedPoint, RepeatedUpsilon, ShapeMismatch
from ore import CentralPoly, OreFraction, OrePoly
from evaluation import (
    LinearOperator,
    Subspace,
    annihilator,
    central_product,
    check_points,
    complement_cofactor,
    ev,
    ev_element,
    ev_fraction,
    ev_kernel,
    multi_annihilator,
    operator_matrix,
)


class TestEvaluation:
    def test_ev_of_x_is_the_operator(self, ctx_a, ctx_b, rng):
        for ctx in (ctx_a, ctx_b):
            c = ctx.random_point(rng)
            assert ev(OrePoly.x(ctx), c) == operator_matrix(ctx, c)
            assert ev(OrePoly.one(ctx), c) == LinearOperator.identity(ctx)

    def test_ev_is_multiplicative(self, ctx_b, ctx_d, rng):
        for ctx in (ctx_b, ctx_d):
            c = ctx.random_point(rng)
            f = OrePoly.random(ctx, 2, rng)
            g = OrePoly.random(ctx, 2, rng)
            assert ev(f * g, c) == ev(f, c) @ ev(g, c)

    def test_evaluate_at_shortcut(self, ctx_d, rng):
        c = ctx_d.random_point(rng)
        f = OrePoly.random(ctx_d, 2, rng)
        assert f.evaluate_at(c) == ev(f, c)

    def test_ev_element_matches_matrix(self, ctx_c, rng):
        c = ctx_c.random_point(rng)
        f = OrePoly.random(ctx_c, 3, rng)
        x = ctx_c.random_element(rng)
        assert ev(f, c)(x) == ev_element(f, c, x)

    def test_centre_evaluates_to_upsilon(self, ctx_a, ctx_b, ctx_d, rng):
        for ctx in (ctx_a, ctx_b, ctx_d):
            c = ctx.random_point(rng)
            assert ev(ctx.centre, c) == LinearOperator.identity(ctx).scale(ctx.upsilon(c))

    def test_remainder_by_linear_factor(self, ctx_a, ctx_b, rng):
        # Z(X) = Q (X - c) + upsilon(c)
        for ctx in (ctx_a, ctx_b):
            c = ctx.random_point(rng)
            R = ctx.centre.rmod(OrePoly(ctx, [-c, ctx.K.one]))
            assert R == OrePoly.constant(ctx, ctx.upsilon(c))

    def test_kernel_dimension_bounded_by_degree(self, ctx_a, ctx_b, rng):
        for ctx in (ctx_a, ctx_b):
            c = ctx.random_point(rng)
            f = OrePoly.random(ctx, 1, rng)
            assert ev_kernel(f, c).dimension <= 1

    def test_ramified_point(self, ctx_d):
        i = ctx_d.K.gen
        with pytest.raises(RamifiedPoint):
            ev_kernel(OrePoly.x(ctx_d), -i)

    def test_ev_fraction(self, ctx_a, rng):
        c = ctx_a.K.one
        f = OrePoly.random(ctx_a, 2, rng)
        d = CentralPoly.linear(ctx_a, ctx_a.K(2))
        scale = d.evaluate(ctx_a.upsilon(c)).inverse()
        assert ev_fraction(OreFraction(f, d), c) == ev(f, c).scale(scale)


class TestAnnihilators:
    def test_differential_example(self, ctx_b, t_elem):
        K = ctx_b.K
        V = Subspace.span(ctx_b, [t_elem])
        P = annihilator(ctx_b, K.one, V)
        assert P == OrePoly(ctx_b, [-(K.one + t_elem) / t_elem, K.one])
        assert ev(P, K.one)(t_elem).is_zero()

    def test_kernel_is_exactly_v(self, ctx_a, ctx_b, ctx_d):
        for ctx in (ctx_a, ctx_b, ctx_d):
            c = ctx.K.one
            for V in (Subspace.span(ctx, [ctx.K.gen]), Subspace.full(ctx), Subspace.zero(ctx)):
                P = annihilator(ctx, c, V)
                assert P.is_monic()
                assert P.degree == V.dimension
                assert ev_kernel(P, c) == V

    def test_multi_annihilator(self, ctx_a, i_elem):
        K = ctx_a.K
        points = [K.one, K.one + i_elem]
        spaces = [Subspace.span(ctx_a, [K.one]), Subspace.full(ctx_a)]
        D = multi_annihilator(ctx_a, points, spaces)
        assert D.degree == 3
        for c, V in zip(points, spaces):
            assert V.contains_subspace(ev_kernel(D, c))
            assert ev_kernel(D, c).contains_subspace(V)

    def test_complement_cofactor(self, ctx_b, t_elem):
        K = ctx_b.K
        points = [K.one, t_elem]
        spaces = [Subspace.span(ctx_b, [K.one]), Subspace.span(ctx_b, [t_elem])]
        A = multi_annihilator(ctx_b, points, spaces)
        D = complement_cofactor(A, points, spaces)
        N = central_product(ctx_b, points).to_ore()
        assert D * A == N
        assert A * D == N

    def test_repeated_upsilon(self, ctx_d):
        K = ctx_d.K
        with pytest.raises(RepeatedUpsilon):
            check_points(ctx_d, [K.one, K.one + K.gen])

    def test_shape_mismatch(self, ctx_a):
        with pytest.raises(ShapeMismatch):
            multi_annihilator(ctx_a, [ctx_a.K.one], [])


class TestSubspace:
    def test_span_and_contains(self, ctx_a, i_elem):
        V = Subspace.span(ctx_a, [i_elem, ctx_a.K(2) * i_elem])
        assert V.dimension == 1
        assert V.contains(ctx_a.K(2) * i_elem)
        assert not V.contains(ctx_a.K.one)

    def test_sum_and_intersection(self, ctx_b, t_elem):
        one = Subspace.span(ctx_b, [ctx_b.K.one])
        t = Subspace.span(ctx_b, [t_elem])
        assert (one + t) == Subspace.full(ctx_b)
        assert one.intersect(t) == Subspace.zero(ctx_b)
        assert len(one.complement_basis()) == 1
