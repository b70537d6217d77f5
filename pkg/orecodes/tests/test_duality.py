"""Tests for the trace pairing, the star involution and dual points."""

import pytest

from core.errors import RamifiedPoint
from linalg.matrix import Matrix
from ore import CentralPoly, LaurentOre, OreFraction, OrePoly
from evaluation import Subspace, ev
from residues import sres
from duality import (
    adjoint,
    c_dual,
    dual_point,
    ev_star,
    gram,
    orthogonal_subspace,
    pair,
    resdual_rhs,
    star,
)


class TestPairing:
    def test_gram_matrices(self, ctx_a, ctx_b):
        Ka, Kb = ctx_a.K, ctx_b.K
        assert gram(ctx_a) == Matrix(Ka, [[Ka(2), Ka.zero], [Ka.zero, Ka.one]])
        assert gram(ctx_b) == Matrix(Kb, [[Kb.zero, Kb.one], [Kb.one, Kb.zero]])

    def test_orthogonal_examples(self, ctx_a, ctx_b, i_elem, t_elem):
        assert orthogonal_subspace(ctx_a, Subspace.span(ctx_a, [ctx_a.K.one])) == Subspace.span(ctx_a, [i_elem])
        assert orthogonal_subspace(ctx_b, Subspace.span(ctx_b, [t_elem])) == Subspace.span(ctx_b, [t_elem])

    def test_orthogonal_dimensions(self, ctx_c, ctx_d):
        for ctx in (ctx_c, ctx_d):
            for V in (Subspace.zero(ctx), Subspace.span(ctx, [ctx.K.gen]), Subspace.full(ctx)):
                W = orthogonal_subspace(ctx, V)
                assert V.dimension + W.dimension == ctx.s
                assert orthogonal_subspace(ctx, W) == V

    def test_adjoint(self, ctx_b, ctx_d, rng):
        for ctx in (ctx_b, ctx_d):
            phi = ev(OrePoly.random(ctx, 2, rng), ctx.random_point(rng))
            x, y = ctx.random_element(rng), ctx.random_element(rng)
            assert pair(ctx, adjoint(phi)(x), y) == pair(ctx, x, phi(y))
            assert adjoint(adjoint(phi)) == phi


class TestStar:
    def test_differential_example(self, ctx_b, t_elem):
        f = OrePoly(ctx_b, [0, t_elem])
        assert star(f) == OrePoly(ctx_b, [1, t_elem])

    def test_involution(self, ctx_b, ctx_c, rng):
        for ctx in (ctx_b, ctx_c):
            f = OrePoly.random(ctx, 3, rng)
            g = OrePoly.random(ctx, 2, rng)
            assert star(star(f)) == f
            assert star(f * g) == star(g) * star(f)

    def test_frobenius_laurent(self, ctx_a, ctx_d, rng):
        for ctx in (ctx_a, ctx_d):
            f = OrePoly.random(ctx, 2, rng)
            g = OrePoly.random(ctx, 2, rng)
            image = star(f)
            assert isinstance(image, LaurentOre)
            assert star(image) == LaurentOre.from_ore(f)
            assert star(f * g) == star(g) * star(f)

    def test_fraction(self, ctx_b, t_elem):
        K = ctx_b.K
        f = OreFraction(OrePoly(ctx_b, [0, t_elem]), CentralPoly.linear(ctx_b, K.one))
        assert star(star(f)) == f


class TestDualPoints:
    def test_c_dual_example(self, ctx_a, i_elem):
        K = ctx_a.K
        assert c_dual(ctx_a, K.one + i_elem) == K(2) + i_elem

    def test_c_dual_differential(self, ctx_b, t_elem):
        assert c_dual(ctx_b, t_elem) == -t_elem

    def test_ramified_has_no_dual(self, ctx_d):
        with pytest.raises(RamifiedPoint):
            c_dual(ctx_d, -ctx_d.K.gen)

    def test_upsilon_of_dual(self, ctx_a, ctx_d, rng):
        for ctx in (ctx_a, ctx_d):
            c = ctx.random_point(rng)
            if ctx.upsilon(c).is_zero():
                continue
            assert ctx.upsilon(c_dual(ctx, c)) == dual_point(ctx, ctx.upsilon(c))

    def test_ev_star_is_adjoint(self, ctx_a, ctx_b, ctx_d, rng):
        for ctx in (ctx_a, ctx_b, ctx_d):
            c = ctx.random_point(rng)
            if ctx.upsilon(c).is_zero():
                continue
            f = OrePoly.random(ctx, 2, rng)
            assert ev_star(f, c) == adjoint(ev(f, c))


class TestResidueDuality:
    def test_differential(self, ctx_b, t_elem):
        K = ctx_b.K
        den = CentralPoly.from_roots(ctx_b, [K.one, t_elem * t_elem + K.one])
        f = OreFraction(OrePoly(ctx_b, [0, t_elem]), den)
        z_bar = K.one
        assert sres(star(f), dual_point(ctx_b, z_bar)) == resdual_rhs(sres(f, z_bar), z_bar)

    def test_frobenius(self, ctx_a):
        K = ctx_a.K
        den = CentralPoly.from_roots(ctx_a, [K.one, K(2)])
        f = OreFraction(OrePoly.x(ctx_a), den)
        for z_bar in (K.one, K(2)):
            assert sres(star(f), dual_point(ctx_a, z_bar)) == resdual_rhs(sres(f, z_bar), z_bar)
