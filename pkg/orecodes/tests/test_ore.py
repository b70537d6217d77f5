"""Tests for contexts, Ore polynomial arithmetic, the centre and fractions."""

import pytest

from core.errors import (
    ContextMismatch,
    DivisionByZeroPoly,
    NotApplicable,
    SIsOne,
    ZeroDerivation,
    ZeroInput,
)
from ore import (
    CentralPoly,
    LaurentOre,
    OreFraction,
    OrePoly,
    centre_coords,
    compute_centre_generator,
    context_from_descriptor,
    hilbert_twist,
    laurent_mul,
    lclm_by_linear_algebra,
    make_differential_context,
    make_frobenius_context,
    ore_divmod,
    ore_lclm,
    ore_rgcd,
    reconstruct,
)


def X(ctx):
    return OrePoly.x(ctx)


def const(ctx, c):
    return OrePoly.constant(ctx, c)


class TestContexts:
    def test_tau_matrices(self, ctx_a, ctx_b):
        Ka, Kb = ctx_a.K, ctx_b.K
        assert ctx_a.tau_matrix().rows == [[Ka(2), Ka.zero]]
        assert ctx_b.tau_matrix().rows == [[Kb.zero, Kb.one]]

    def test_frobenius_centre(self, ctx_a):
        assert ctx_a.s == 2
        assert ctx_a.centre == X(ctx_a) ** 2
        assert compute_centre_generator(ctx_a).degree == 2

    def test_twisted_centre(self, ctx_d):
        i = ctx_d.K.gen
        assert ctx_d.centre == (X(ctx_d) + const(ctx_d, i)) ** 2

    def test_differential_centre(self, ctx_b, ctx_c):
        assert ctx_b.centre == X(ctx_b) ** 2
        assert [z == ctx_b.K.zero for z in ctx_b.z_coeffs] == [True, False]
        assert ctx_c.centre == X(ctx_c) ** 3

    def test_s_is_one(self):
        with pytest.raises(SIsOne):
            make_frobenius_context(3, 1, 1)

    def test_zero_derivation(self):
        with pytest.raises(ZeroDerivation):
            make_differential_context(2, 0)

    def test_descriptor_round_trip(self, ctx_a, ctx_b, ctx_d):
        for ctx in (ctx_a, ctx_b, ctx_d):
            assert context_from_descriptor(ctx.descriptor()) == ctx

    def test_upsilon(self, ctx_a, ctx_b, i_elem, t_elem):
        K = ctx_a.K
        assert ctx_a.upsilon(K.one + i_elem) == K(2)
        assert ctx_b.upsilon(t_elem) == t_elem * t_elem + ctx_b.K.one

    def test_tau_lands_in_F(self, ctx_a, ctx_b, ctx_c, rng):
        for ctx in (ctx_a, ctx_b, ctx_c):
            for _ in range(5):
                assert ctx.is_in_F(ctx.tau(ctx.random_element(rng)))

    def test_ramified_point(self, ctx_d):
        i = ctx_d.K.gen
        assert ctx_d.is_ramified(-i)
        assert not ctx_d.is_ramified(ctx_d.K.one)


class TestArithmetic:
    def test_commutation_rule(self, ctx_a, ctx_b, i_elem, t_elem):
        # X i = i^3 X
        assert X(ctx_a) * const(ctx_a, i_elem) == OrePoly(ctx_a, [0, i_elem ** 3])
        # X t = t X + 1
        assert X(ctx_b) * const(ctx_b, t_elem) == OrePoly(ctx_b, [1, t_elem])

    def test_associativity(self, ctx_b, ctx_d, rng):
        for ctx in (ctx_b, ctx_d):
            f, g, h = (OrePoly.random(ctx, d, rng) for d in (2, 1, 2))
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h

    def test_right_division_example(self, ctx_a, i_elem):
        K = ctx_a.K
        f = X(ctx_a) ** 2
        g = X(ctx_a) - const(ctx_a, K.one + i_elem)
        Q, R = ore_divmod(f, g, "right")
        assert Q == X(ctx_a) + const(ctx_a, K.one + K(2) * i_elem)
        assert R == const(ctx_a, K(2))
        assert Q * g + R == f

    def test_right_division_differential(self, ctx_b, t_elem):
        f = X(ctx_b) ** 2
        g = X(ctx_b) - const(ctx_b, t_elem)
        Q, R = ore_divmod(f, g, "right")
        assert Q == X(ctx_b) + const(ctx_b, t_elem)
        assert R == const(ctx_b, t_elem * t_elem + ctx_b.K.one)

    def test_left_division(self, ctx_d, rng):
        f = OrePoly.random(ctx_d, 4, rng)
        g = OrePoly.random(ctx_d, 2, rng)
        Q, R = ore_divmod(f, g, "left")
        assert g * Q + R == f
        assert R.degree < g.degree

    def test_division_by_zero(self, ctx_a):
        with pytest.raises(DivisionByZeroPoly):
            ore_divmod(X(ctx_a), OrePoly.zero(ctx_a))

    def test_rgcd(self, ctx_a, i_elem, rng):
        K = ctx_a.K
        f = X(ctx_a) - const(ctx_a, K.one)
        g = X(ctx_a) - const(ctx_a, K.one + i_elem)
        assert ore_rgcd(f, g) == OrePoly.one(ctx_a)
        h = OrePoly.random(ctx_a, 2, rng)
        assert ore_rgcd(h * f, f) == f

    def test_rgcd_zero(self, ctx_a):
        with pytest.raises(ZeroInput):
            ore_rgcd(OrePoly.zero(ctx_a), OrePoly.zero(ctx_a))

    def test_lclm_example(self, ctx_a, i_elem):
        K = ctx_a.K
        f = X(ctx_a) - const(ctx_a, K.one)
        g = X(ctx_a) - const(ctx_a, K.one + i_elem)
        L = ore_lclm(f, g)
        assert L == OrePoly(ctx_a, [K(2) + K(2) * i_elem, i_elem, K.one])
        assert L.rmod(f).is_zero() and L.rmod(g).is_zero()

    def test_lclm_matches_linear_algebra(self, ctx_b, ctx_d, rng):
        for ctx in (ctx_b, ctx_d):
            f = OrePoly.random(ctx, 1, rng)
            g = OrePoly.random(ctx, 2, rng)
            assert ore_lclm(f, g) == lclm_by_linear_algebra(f, g)

    def test_context_mismatch(self, ctx_a, ctx_d):
        with pytest.raises(ContextMismatch):
            ore_divmod(X(ctx_a), X(ctx_d))


class TestCentre:
    def test_centre_commutes(self, ctx_b, ctx_d, rng):
        for ctx in (ctx_b, ctx_d):
            Z = ctx.centre
            for _ in range(3):
                f = OrePoly.random(ctx, 2, rng)
                assert Z * f == f * Z

    def test_coordinates_round_trip(self, ctx_b, ctx_d, rng):
        for ctx in (ctx_b, ctx_d):
            f = OrePoly.random(ctx, 5, rng)
            coords = centre_coords(f)
            assert len(coords) == ctx.s
            assert reconstruct(ctx, coords) == f

    def test_central_poly_roots(self, ctx_b, t_elem):
        K = ctx_b.K
        d = CentralPoly.from_roots(ctx_b, [K.one, t_elem * t_elem + K.one])
        assert d.splits()
        assert set(d.roots()) == {K.one, t_elem * t_elem + K.one}
        assert d.multiplicity(K.one) == 1

    def test_apply_delta(self, ctx_b, t_elem):
        K = ctx_b.K
        C = CentralPoly(ctx_b, [t_elem, K.one])
        assert C.apply_delta() == CentralPoly.one(ctx_b)

    def test_central_poly_decode(self, ctx_a):
        d = CentralPoly.decode(ctx_a, "1;1")
        assert d == CentralPoly.linear(ctx_a, ctx_a.K(-1))


class TestFractionsAndLaurent:
    def test_fraction_reduces(self, ctx_a):
        Z = CentralPoly.Z(ctx_a)
        f = OreFraction(ctx_a.centre * X(ctx_a), Z)
        assert f.reduced().is_polynomial()
        assert f.reduced().num == X(ctx_a)

    def test_pole_order(self, ctx_b):
        K = ctx_b.K
        N = CentralPoly.linear(ctx_b, K.one)
        f = OreFraction(X(ctx_b), N ** 2)
        assert f.pole_order(K.one) == 2
        assert f.is_regular_at(K.zero)

    def test_laurent_product(self, ctx_a, i_elem):
        f = LaurentOre.monomial(ctx_a, ctx_a.K.one, -1)
        g = LaurentOre.monomial(ctx_a, i_elem, 1)
        # X^{-1} i X = theta^{-1}(i)
        assert laurent_mul(f, g) == LaurentOre.from_ore(const(ctx_a, ctx_a.theta_inv(i_elem)))

    def test_laurent_fraction_round_trip(self, ctx_a, ctx_d):
        for ctx in (ctx_a, ctx_d):
            f = LaurentOre(ctx, -3, [ctx.K.gen, ctx.K.zero, ctx.K.one])
            frac = f.to_fraction()
            assert frac.den == CentralPoly.Z(ctx) ** 2
            assert LaurentOre.from_fraction(frac) == f


class TestHilbertTwist:
    def test_twist_is_ring_map(self, ctx_a, rng):
        target, twist = hilbert_twist(ctx_a, ctx_a.K.gen)
        f = OrePoly.random(ctx_a, 2, rng)
        g = OrePoly.random(ctx_a, 1, rng)
        assert twist.apply(f * g) == twist.apply(f) * twist.apply(g)
        assert twist.inverse().apply(twist.apply(f)) == f

    def test_twist_needs_frobenius(self, ctx_b):
        with pytest.raises(NotApplicable):
            hilbert_twist(ctx_b, ctx_b.K.one)
