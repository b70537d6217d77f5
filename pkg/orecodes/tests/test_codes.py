"""Tests for sum-rank ambient spaces, LRS and LG codes, distances and duality."""

from itertools import combinations

import pytest

from config import Settings
from core.errors import BudgetExceeded, KTooLarge, ParameterError, ShapeMismatch
from linalg.matrix import Matrix
from ore import OreFraction, OrePoly
from evaluation import Subspace, ev
from residues import sres
from codes import (
    BlockDomain,
    CodeBasis,
    DistanceEnumerator,
    HomTuple,
    ambient_code,
    check_duality,
    dual_code,
    goppa_multiplier,
    lg_basis,
    lrs_basis,
    min_distance,
    min_distance_async,
    pairing,
    psi_setup,
    sampled_weight_bound,
    sum_rank_weight,
)
from codes.distance import ChunkStatus, normalized_count, normalized_vector


@pytest.fixture
def small_settings():
    return Settings(budget=1000, max_workers=2, enum_chunk=4)


def full_domain(ctx):
    return BlockDomain("sub", Subspace.full(ctx))


class TestHomTuple:
    def test_weights(self, ctx_a):
        K = ctx_a.K
        identity = Matrix.identity(K, 2)
        rank_one = Matrix(K, [[K.one, K.zero], [K.zero, K.zero]])
        one = HomTuple(ctx_a, [identity], [full_domain(ctx_a)])
        assert sum_rank_weight(one) == 2
        assert sum_rank_weight(HomTuple.zero(ctx_a, [full_domain(ctx_a)])) == 0
        two = HomTuple(ctx_a, [identity, rank_one], [full_domain(ctx_a)] * 2)
        assert sum_rank_weight(two) == 3

    def test_shape_checked(self, ctx_a):
        with pytest.raises(ShapeMismatch):
            HomTuple(ctx_a, [Matrix.identity(ctx_a.K, 2)], [BlockDomain("sub", Subspace.zero(ctx_a))])

    def test_flat_round_trip(self, ctx_b, t_elem):
        domains = [BlockDomain("sub", Subspace.span(ctx_b, [t_elem])), BlockDomain("quot", Subspace.zero(ctx_b))]
        word = HomTuple.zero(ctx_b, domains)
        assert HomTuple.from_flat(ctx_b, word.flatten(), domains) == word
        assert len(word.flatten()) == 2 * 1 + 2 * 2

    def test_quotient_constraint(self, ctx_a):
        K = ctx_a.K
        domain = BlockDomain("quot", Subspace.span(ctx_a, [K.one]))
        assert domain.length == 1
        good = Matrix(K, [[K.zero, K.one], [K.zero, K.zero]])
        bad = Matrix(K, [[K.one, K.zero], [K.zero, K.zero]])
        assert domain.admits(good)
        assert not domain.admits(bad)

    def test_ambient_code(self, ctx_a):
        domains = [full_domain(ctx_a), BlockDomain("quot", Subspace.span(ctx_a, [ctx_a.K.one]))]
        code = ambient_code(ctx_a, domains)
        assert code.n == 3
        assert code.dimension == 3
        assert code.is_k_free()


class TestLRS:
    def test_dimension_and_length(self, ctx_a, i_elem):
        K = ctx_a.K
        points = [K.one, K.one + i_elem]
        spaces = [Subspace.full(ctx_a), Subspace.span(ctx_a, [K.one])]
        code = lrs_basis(ctx_a, 2, points, spaces)
        assert code.n == 3
        assert code.dimension == 2
        assert code.is_k_free()
        assert code.is_k_stable()

    def test_k_bounds(self, ctx_a):
        K = ctx_a.K
        with pytest.raises(KTooLarge):
            lrs_basis(ctx_a, 3, [K.one], [Subspace.full(ctx_a)])
        with pytest.raises(ParameterError):
            lrs_basis(ctx_a, 0, [K.one], [Subspace.zero(ctx_a)])

    def test_min_distance_examples(self, ctx_a, i_elem, small_settings):
        K = ctx_a.K
        one = lrs_basis(ctx_a, 1, [K.one], [Subspace.full(ctx_a)])
        assert min_distance(one, small_settings) == 2
        two = lrs_basis(ctx_a, 2, [K.one, K.one + i_elem], [Subspace.full(ctx_a)] * 2)
        assert min_distance(two, small_settings) == 3

    def test_zero_code_distance(self, ctx_a, small_settings):
        code = lrs_basis(ctx_a, 0, [ctx_a.K.one], [Subspace.full(ctx_a)])
        assert min_distance(code, small_settings) == code.n + 1

    def test_sampled_bound_differential(self, ctx_b, t_elem, rng):
        K = ctx_b.K
        code = lrs_basis(ctx_b, 2, [K.one, t_elem], [Subspace.full(ctx_b), Subspace.span(ctx_b, [t_elem])])
        bound = sampled_weight_bound(code, 10, rng)
        assert bound is not None
        assert bound >= code.n - code.dimension + 1


class TestLG:
    def test_multiplier_kinds(self, ctx_a, ctx_b):
        K = ctx_b.K
        P = goppa_multiplier(ctx_b, 1, [K.one], [Subspace.zero(ctx_b)])
        assert isinstance(P, OreFraction)
        assert P.den.degree == 1
        Q = goppa_multiplier(ctx_a, 1, [ctx_a.K.one], [Subspace.zero(ctx_a)])
        # N Z^{m+1} with m = 1
        assert Q.den.degree == 3

    def test_k_bounds(self, ctx_a):
        K = ctx_a.K
        with pytest.raises(KTooLarge):
            lg_basis(ctx_a, 2, [K.one], [Subspace.zero(ctx_a)])

    def test_zero_code(self, ctx_a):
        code = lg_basis(ctx_a, 0, [ctx_a.K.one], [Subspace.zero(ctx_a)])
        assert code.generators == []
        assert code.n == 2

    def test_blocks_kill_the_subspace(self, ctx_b, t_elem):
        K = ctx_b.K
        spaces = [Subspace.span(ctx_b, [t_elem]), Subspace.zero(ctx_b)]
        code = lg_basis(ctx_b, 2, [K.one, t_elem], spaces)
        assert code.n == 3
        assert code.dimension == 2
        assert all(g.satisfies_constraints() for g in code.generators)

    def test_msrd(self, ctx_a, i_elem, small_settings):
        K = ctx_a.K
        points = [K.one, K.one + i_elem]
        spaces = [Subspace.zero(ctx_a), Subspace.span(ctx_a, [K.one])]
        code = lg_basis(ctx_a, 2, points, spaces)
        assert code.dimension == 2
        assert min_distance(code, small_settings) == code.n - code.k + 1

    def test_psi_maps_lrs_onto_lg(self, ctx_a, ctx_b, i_elem, t_elem):
        cases = [
            (ctx_a, [ctx_a.K.one, ctx_a.K.one + i_elem], [Subspace.zero(ctx_a), Subspace.span(ctx_a, [ctx_a.K.one])]),
            (ctx_b, [ctx_b.K.one, t_elem], [Subspace.span(ctx_b, [t_elem]), Subspace.zero(ctx_b)]),
        ]
        for ctx, points, spaces in cases:
            psi = psi_setup(ctx, 2, points, spaces)
            assert psi.is_isomorphism()
            source = psi.source_code()
            lg = lg_basis(ctx, 2, points, spaces)
            for g, h in zip(source.generators, lg.generators):
                assert psi.apply(g) == h
                assert psi.preserves_weight(g)

    def test_generators_are_skew_residues(self, ctx_a, ctx_b, ctx_d, i_elem, t_elem):
        cases = [
            (ctx_a, 2, [ctx_a.K.one, ctx_a.K.one + i_elem], [Subspace.zero(ctx_a), Subspace.span(ctx_a, [ctx_a.K.one])]),
            (ctx_b, 2, [ctx_b.K.one, t_elem], [Subspace.span(ctx_b, [t_elem]), Subspace.zero(ctx_b)]),
            # twisted Frobenius: the multiplier carries (X + a)^{n-k} Z^{-m-1}
            (ctx_d, 1, [ctx_d.K.one], [Subspace.zero(ctx_d)]),
        ]
        for ctx, k, points, spaces in cases:
            P = goppa_multiplier(ctx, k, points, spaces)
            code = lg_basis(ctx, k, points, spaces)
            assert len(code.generators) == k
            for j, generator in enumerate(code.generators):
                f = OreFraction(OrePoly.monomial(ctx, ctx.K.one, j) * P.num, P.den)
                for i, c in enumerate(points):
                    r = sres(f, ctx.upsilon(c))
                    assert ev(r, c).matrix == generator.blocks[i]


class TestDuality:
    def test_pairing_of_identities(self, ctx_a):
        K = ctx_a.K
        identity = Matrix.identity(K, 2)
        phi = HomTuple(ctx_a, [identity], [BlockDomain("quot", Subspace.zero(ctx_a))])
        psi = HomTuple(ctx_a, [identity], [full_domain(ctx_a)])
        assert pairing(phi, psi) == K(2)

    def test_pairing_needs_orthogonal(self, ctx_a):
        K = ctx_a.K
        phi = HomTuple.zero(ctx_a, [BlockDomain("quot", Subspace.full(ctx_a))])
        psi = HomTuple(ctx_a, [Matrix.identity(K, 2)], [full_domain(ctx_a)])
        with pytest.raises(ShapeMismatch):
            pairing(phi, psi)

    def test_dual_code_dimension(self, ctx_a, i_elem):
        K = ctx_a.K
        code = lrs_basis(ctx_a, 1, [K.one, K.one + i_elem], [Subspace.full(ctx_a), Subspace.span(ctx_a, [i_elem])])
        dual = dual_code(code)
        assert code.dimension + dual.dimension == code.n

    def test_dual_code_rejects_a_non_k_linear_orthogonal(self, ctx_a, monkeypatch):
        code = lrs_basis(ctx_a, 1, [ctx_a.K.one], [Subspace.full(ctx_a)])
        monkeypatch.setattr("codes.duality.k_basis", lambda ctx, words: [])
        with pytest.raises(ParameterError):
            dual_code(code)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_check_duality_frobenius(self, ctx_a, i_elem, k):
        K = ctx_a.K
        report = check_duality(ctx_a, k, [K.one, K.one + i_elem], [Subspace.span(ctx_a, [K.one]), Subspace.full(ctx_a)])
        assert report.n == 3
        assert report.all_zero
        assert report.dimensions_sum
        assert report.ok

    def test_check_duality_differential(self, ctx_b, t_elem):
        K = ctx_b.K
        report = check_duality(ctx_b, 2, [K.one, t_elem], [Subspace.span(ctx_b, [t_elem]), Subspace.full(ctx_b)])
        assert report.ok

    def test_corrupted_check_fails(self, ctx_a, i_elem):
        K = ctx_a.K
        report = check_duality(
            ctx_a, 1, [K.one, K.one + i_elem], [Subspace.span(ctx_a, [K.one]), Subspace.full(ctx_a)], corrupt=True
        )
        assert report.corrupted
        assert not report.ok

    def test_k_equal_n_pairs_with_zero_code(self, ctx_a):
        report = check_duality(ctx_a, 2, [ctx_a.K.one], [Subspace.full(ctx_a)])
        assert report.lg_dimension == 0
        assert report.ok


class TestEnumeration:
    def test_normalized_count(self):
        assert normalized_count(9, 1) == 1
        assert normalized_count(9, 2) == 10

    def test_normalized_vectors_are_distinct(self, ctx_a):
        K = ctx_a.K
        elements = [K.zero, K.one] + [x for x in K.elements() if not x.is_zero() and x != K.one]
        vectors = [normalized_vector(i, 2, elements) for i in range(10)]
        assert all(u != v for u, v in combinations(vectors, 2))
        assert all(next(x for x in v if not x.is_zero()) == K.one for v in vectors)

    def test_budget(self, ctx_a):
        K = ctx_a.K
        code = lrs_basis(ctx_a, 2, [K.one], [Subspace.full(ctx_a)])
        with pytest.raises(BudgetExceeded):
            DistanceEnumerator(code, settings=Settings(budget=5))

    def test_infinite_field(self, ctx_b):
        code = lrs_basis(ctx_b, 1, [ctx_b.K.one], [Subspace.full(ctx_b)])
        with pytest.raises(BudgetExceeded):
            min_distance(code)

    @pytest.mark.asyncio
    async def test_async_enumeration(self, ctx_a, i_elem, small_settings):
        K = ctx_a.K
        code = lrs_basis(ctx_a, 2, [K.one, K.one + i_elem], [Subspace.full(ctx_a)] * 2)
        events = []
        enumerator = DistanceEnumerator(
            code,
            max_concurrent=2,
            chunk_size=3,
            settings=small_settings,
            on_progress=lambda index, total, status: events.append(status),
        )
        assert await enumerator.run() == 3
        progress = enumerator.get_progress()
        assert progress["total"] == 4
        assert progress["completed"] == 4
        assert events.count(ChunkStatus.COMPLETED) == 4

    @pytest.mark.asyncio
    async def test_min_distance_async(self, ctx_a, small_settings):
        code = lrs_basis(ctx_a, 1, [ctx_a.K.one], [Subspace.full(ctx_a)])
        assert await min_distance_async(code, small_settings) == 2


def test_code_basis_to_dict(ctx_a):
    code = lrs_basis(ctx_a, 1, [ctx_a.K.one], [Subspace.full(ctx_a)])
    data = code.to_dict()
    assert data["kind"] == "lrs"
    assert data["n"] == 2
    assert data["generators"][0]["domains"] == ["sub"]
    assert isinstance(code, CodeBasis)
