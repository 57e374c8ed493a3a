from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from hchromatic import closedform as cf
from hchromatic.errors import PreconditionError
from hchromatic.graphs import (
    augmented_star,
    bipartite_profile,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    disjoint_union,
    edgeless,
    is_bipartite,
    parse_edge_list,
    path,
    star,
)
from hchromatic.hcolor import hcsf
from hchromatic.symfunc import SymFunc, change_basis, partitions_of
from hchromatic.suites import _forced_centre_oracle, scalar_witness

C5_TWIN = parse_edge_list("5\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5")
TWIN_VALUE = SymFunc.from_dict("m", 5, {(5,): 1, (4, 1): 5, (3, 2): 5})


class TestCompleteBipartiteH:
    def test_examples(self):
        assert cf.hcsf_complete_bipartite_H(path(2), 1, 1) == SymFunc.from_dict("m", 2, {(1, 1): 4})
        assert cf.hcsf_complete_bipartite_H(cycle(5), 2, 3).is_zero()
        g = disjoint_union(path(2), path(4))
        assert cf.hcsf_complete_bipartite_H(g, 1, 2) == hcsf(g, complete_bipartite(1, 2))

    @given(graphs(max_n=6), st.integers(1, 3), st.integers(1, 3))
    def test_matches_census(self, g, h1, h2):
        assert cf.hcsf_complete_bipartite_H(g, h1, h2) == hcsf(g, complete_bipartite(h1, h2))

    @given(graphs(max_n=6), st.integers(1, 3), st.integers(1, 3))
    def test_half_pair_sum(self, g, h1, h2):
        if is_bipartite(g):
            assert cf.kmn_half_pair_sum(g, h1, h2) == cf.hcsf_complete_bipartite_H(g, h1, h2)

    def test_pair_term(self):
        assert cf.kmn_pair_term(2, 3, 2, 2) == hcsf(complete_bipartite(2, 3), complete_bipartite(2, 2))


class TestStars:
    @given(graphs(max_n=6), st.integers(1, 4))
    def test_star_H(self, g, n):
        if is_bipartite(g):
            assert cf.hcsf_star_H(g, n) == hcsf(g, star(n + 1))

    def test_edgeless_centre_unused(self):
        assert cf.hcsf_star_H(edgeless(1), 1) == SymFunc.from_dict("m", 1, {(1,): 2})

    @pytest.mark.parametrize("args,lam,c", [((4, 1, 1), (4, 1), 1), ((3, 2, 1), (3, 2), 1), ((1, 1, 1), (1, 1), 2)])
    def test_partial_star_examples(self, args, lam, c):
        assert cf.partial_star(*args) == SymFunc.from_dict("m", sum(lam), {lam: c})

    @given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 4))
    def test_partial_star_forced_centre(self, k1, k2, n):
        assert cf.partial_star(k1, k2, n) == change_basis(_forced_centre_oracle(k1, k2, n), "m")

    @given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 4))
    def test_partial_star_split(self, k1, k2, n):
        total = cf.partial_star(k1, k2, n) + cf.partial_star(k2, k1, n)
        assert total == hcsf(complete_bipartite(k1, k2), star(n + 1))

    def test_scaling(self):
        for g in (path(4), star(4), cycle(4), path(5), complete_bipartite(2, 3)):
            a, b = bipartite_profile(g).per_component[0]
            for n in range(1, 6):
                diff = hcsf(g, star(n + 2)) - hcsf(g, star(n + 1)) * (n + 1)
                if n + 1 > max(a, b):
                    assert diff.is_zero()
                else:
                    assert {len(lam) for lam, _ in diff.terms} <= {n + 2}

    def test_star_G_examples(self):
        assert cf.hcsf_star_G(3, path(4)) == SymFunc.from_dict("m", 3, {(1, 1, 1): 24, (2, 1): 12})
        assert cf.hcsf_star_G(3, cycle(6)) == cf.hcsf_star_G(3, disjoint_union(cycle(3), cycle(3)))
        for k in range(3, 6):
            assert cf.hcsf_star_G(k, complete(2)) == hcsf(star(k), complete(2))

    @given(st.integers(2, 6), graphs(max_n=5))
    def test_star_G_census(self, k, h):
        assert cf.hcsf_star_G(k, h) == hcsf(star(k), h)


class TestAugmentedStars:
    def test_fixture_pair(self):
        assert cf.hcsf_augmented_star(cycle(5), 1) == TWIN_VALUE
        assert cf.hcsf_augmented_star(C5_TWIN, 1) == TWIN_VALUE
        assert cf.hcsf_augmented_star(cycle(5), 2) != cf.hcsf_augmented_star(C5_TWIN, 2)

    def test_edgeless_rejected(self):
        with pytest.raises(PreconditionError):
            cf.hcsf_augmented_star(edgeless(3), 2)

    @given(graphs(max_n=6), st.integers(1, 4))
    def test_census(self, g, n):
        if g.m:
            assert cf.hcsf_augmented_star(g, n) == hcsf(g, augmented_star(n + 1))


class TestMultipartite:
    def test_examples(self):
        assert cf.hcsf_multipartite((2, 1), complete(2)) == SymFunc.from_dict("m", 3, {(2, 1): 2})
        assert cf.hcsf_multipartite((1, 1), complete(2)) == SymFunc.from_dict("m", 2, {(1, 1): 4})
        for n in range(1, 5):
            f = cf.hcsf_multipartite((1,) * n, complete(n))
            assert f == hcsf(complete(n), complete(n))
        assert cf.hcsf_multipartite((3,), complete(1)) == SymFunc.single("m", (3,))

    def test_forbidden_named(self):
        with pytest.raises(PreconditionError, match="K_3 minus an edge"):
            cf.hcsf_multipartite((1, 1), path(3))

    @given(st.integers(1, 6).flatmap(lambda k: st.sampled_from(partitions_of(k))), graphs(max_n=5))
    def test_census(self, lam, h):
        try:
            f = cf.hcsf_multipartite(lam, h)
        except PreconditionError:
            return
        assert f == hcsf(complete_multipartite(lam), h)


class TestEdgeless:
    def test_examples(self):
        assert cf.hcsf_edgeless(2, 2) == SymFunc.from_dict("m", 2, {(2,): 2, (1, 1): 4})
        assert cf.hcsf_edgeless(2, 1) == SymFunc.single("m", (2,))

    def test_scalar_relation(self):
        for i in range(3, 7):
            assert cf.hcsf_edgeless(3, i + 1) == cf.hcsf_edgeless(3, i) * (i + 1)

    @given(st.integers(1, 6), graphs(max_n=4))
    def test_any_h(self, n, h):
        assert cf.hcsf_edgeless(n, h.n) == hcsf(edgeless(n), h)


class TestClassical:
    def test_examples(self):
        assert cf.classical_realizations((2,), "e") == SymFunc.from_dict("m", 2, {(1, 1): 1})
        assert cf.classical_realizations((2, 1), "p") == change_basis(SymFunc.single("p", (2, 1)), "m")
        assert len(cf.classical_realizations((4,), "beta_basis")) == 5

    @pytest.mark.parametrize("lam", [lam for k in range(1, 6) for lam in partitions_of(k)])
    def test_e_and_p(self, lam):
        assert cf.classical_realizations(lam, "e") == change_basis(SymFunc.single("e", lam), "m")
        assert cf.classical_realizations(lam, "p") == change_basis(SymFunc.single("p", lam), "m")

    def test_square_normaliser_fails_for_large_parts(self):
        assert cf.e_scalar((2, 2)) == cf.e_scalar_squares((2, 2))
        assert cf.e_scalar((3,)) == Fraction(1, 36) != cf.e_scalar_squares((3,))

    def test_unknown(self):
        with pytest.raises(PreconditionError):
            cf.classical_realizations((2,), "h")


class TestPowerSumExpansion:
    @pytest.mark.parametrize("k1,k2,n", [(1, 1, 2), (2, 2, 3), (2, 3, 3), (1, 3, 3), (3, 3, 4), (1, 2, 5)])
    def test_matches_census(self, k1, k2, n):
        assert cf.star_p_expansion(k1, k2, n) == change_basis(hcsf(complete_bipartite(k1, k2), star(n + 1)), "p")

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            cf.star_p_expansion(3, 1, 2)


class TestNonProportional:
    @pytest.mark.parametrize("n", [2, 3])
    def test_k33(self, n):
        g = complete_bipartite(3, 3)
        for m1, m2 in ((3, 4), (4, 5), (3, 5)):
            assert scalar_witness(hcsf(g, complete_bipartite(m1, n)), hcsf(g, complete_bipartite(m2, n))) is not None

    def test_single_vertex_side_is_proportional(self):
        # with n = 1 the functions collapse to m! times a fixed function
        g = complete_bipartite(3, 3)
        assert scalar_witness(hcsf(g, complete_bipartite(3, 1)), hcsf(g, complete_bipartite(4, 1))) is None

    def test_rainbow_coefficient(self):
        g = disjoint_union(complete_bipartite(2, 3), cycle(4))
        for n in range(1, 4):
            assert hcsf(g, complete_bipartite(1, n)).coeff((1,) * g.n) == 0
