import random
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given

from conftest import graphs
from hchromatic.errors import ParseError, PreconditionError, UnsupportedInputError
from hchromatic.graphs import (
    Graph,
    all_graphs,
    augmented_star,
    automorphism_count,
    bipartite_profile,
    build_named,
    canonical_form,
    complement,
    complete,
    complete_bipartite,
    complete_multipartite,
    components,
    connected_graphs,
    contains_subgraph,
    cycle,
    degree_and_star_sequences,
    disjoint_union,
    edgeless,
    embedding_count,
    free_trees,
    independent_set_census,
    independent_sets,
    is_connected,
    is_isomorphic,
    k_minus,
    k_minus_minus,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    path,
    star,
    star_counts_direct,
    to_edge_list,
    to_graph6,
)

C5_TWIN = "5\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5"


def brute_embeddings(g, h):
    count = 0
    for img in permutations(range(h.n), g.n):
        if all(h.adjacent(img[u], img[v]) for u, v in g.edges):
            count += 1
    return count


class TestBuilders:
    def test_cycle(self):
        g = build_named("cycle", [5])
        assert (g.n, g.m, g.loops) == (5, 5, frozenset())

    def test_augmented_star(self):
        g = build_named("augmented_star", [3])
        assert g.m == 2 and g.loops == frozenset({0})

    def test_multipartite_edge_count(self):
        g = build_named("complete_multipartite", (4, 3, 2, 2))
        assert g.n == 11 and g.m == 44

    def test_multipartite_numbering(self):
        g = complete_multipartite((2, 1))
        assert g.edges == frozenset({(0, 2), (1, 2)})

    @pytest.mark.parametrize("parts", [(), (2, 0)])
    def test_bad_partition(self, parts):
        with pytest.raises(PreconditionError):
            build_named("complete_multipartite", parts)

    def test_star_centre(self):
        assert star(4).degree(0) == 3

    def test_k_minus(self):
        assert k_minus(4).m == 5 and not k_minus(4).adjacent(0, 1)
        assert k_minus_minus(4).m == 4

    def test_complement_and_union(self):
        assert is_isomorphic(complement(cycle(5)), cycle(5))
        assert disjoint_union(complete(3), complete(3)).m == 6
        assert build_named("complement_of", [path(3)]).m == 1
        assert build_named("disjoint_union", [complete(1), complete(2)]).n == 3

    def test_two_cycle_rejected(self):
        with pytest.raises(PreconditionError):
            cycle(2)

    def test_unknown_kind(self):
        with pytest.raises(PreconditionError):
            build_named("wheel", [5])


class TestFormats:
    def test_graph6_roundtrip_fixture(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert to_graph6(g) == "D?{"

    def test_graph6_header(self):
        assert parse_graph6(">>graph6<<D?{") == parse_graph6("D?{")

    def test_graph6_errors(self):
        with pytest.raises(ParseError):
            parse_graph6("")
        with pytest.raises(ParseError) as exc:
            parse_graph6("D?{{")
        assert exc.value.offset >= 0

    def test_edge_list_with_comment(self):
        g = parse_edge_list(C5_TWIN)
        assert g.n == 5 and g.m == 6 and g.adjacent(3, 4)

    def test_loop_line(self):
        g = parse_edge_list("1\nloop 1")
        assert g.n == 1 and g.loops == frozenset({0}) and not g.is_simple()

    def test_edge_list_errors(self):
        with pytest.raises(ParseError):
            parse_edge_list("3\n1 4")
        with pytest.raises(ParseError):
            parse_edge_list("x\n")
        assert parse_edge_list("2\n1 1").loops == frozenset({0})

    def test_edge_list_roundtrip_with_loops(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)], [2])
        assert parse_edge_list(to_edge_list(g)) == g

    def test_graph6_rejects_loops(self):
        with pytest.raises(UnsupportedInputError):
            to_graph6(augmented_star(3))

    def test_dispatch(self):
        assert parse_graph("D?{", "graph6") == parse_graph6("D?{")
        with pytest.raises(PreconditionError):
            parse_graph("", "dot")

    def test_graph6_random_roundtrip(self):
        rng = random.Random(7)
        for _ in range(1000):
            n = rng.randint(0, 8)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
            g = Graph.from_edges(n, edges)
            assert parse_graph6(to_graph6(g)) == g


class TestStructure:
    def test_components(self):
        parts = components(disjoint_union(complete(1), complete(2)))
        assert [c.n for c in parts] == [1, 2]
        assert len(components(cycle(5))) == 1
        two = components(disjoint_union(cycle(3), cycle(3)))
        assert len(two) == 2 and all(is_isomorphic(c, cycle(3)) for c in two)

    def test_profile_examples(self):
        assert bipartite_profile(cycle(5)) is None
        p = bipartite_profile(disjoint_union(path(2), path(4)))
        assert sorted(p.per_component) == [(1, 1), (2, 2)]
        assert p.diff == (0, 0)
        assert sorted(p.s_multiset) == [3, 3, 3, 3]
        q = bipartite_profile(disjoint_union(path(3), path(3)))
        assert q.diff == (1, 1) and sorted(q.s_multiset) == [2, 3, 3, 4]

    def test_profile_rejects_loops(self):
        with pytest.raises(UnsupportedInputError):
            bipartite_profile(augmented_star(3))

    @given(graphs(max_n=7))
    def test_profile_invariants(self, g):
        p = bipartite_profile(g)
        if p is None:
            return
        assert sum(a + b for a, b in p.per_component) == g.n
        assert len(p.s_multiset) == 2 ** len(p.per_component)
        assert min(p.s_multiset) * 2 == g.n - sum(p.diff)

    def test_independent_sets(self):
        assert independent_set_census(cycle(5)) == Counter({1: 5, 2: 5})
        assert independent_set_census(parse_edge_list(C5_TWIN)) == Counter({1: 5, 2: 4, 3: 1})
        assert independent_set_census(edgeless(3)) == Counter({1: 3, 2: 3, 3: 1})
        assert independent_set_census(cycle(5), maximal_only=True) == Counter({2: 5})
        assert len(independent_sets(complete(4))) == 4

    def test_independent_sets_reject_loops(self):
        with pytest.raises(UnsupportedInputError):
            independent_set_census(augmented_star(3))

    def test_embedding_examples(self):
        assert embedding_count(path(3), path(3)) == 2
        assert embedding_count(complete(2), path(3)) == 4
        assert embedding_count(complete(3), complete(2)) == 0

    @given(graphs(max_n=4), graphs(max_n=5))
    def test_embedding_matches_brute_force(self, g, h):
        assert embedding_count(g, h) == brute_embeddings(g, h)

    @given(graphs(max_n=6))
    def test_more_edges_no_embedding(self, g):
        for h in all_graphs(g.n):
            if g.m > h.m:
                assert embedding_count(g, h) == 0

    def test_automorphisms(self):
        assert automorphism_count(cycle(5)) == 10
        assert automorphism_count(complete(4)) == 24
        assert automorphism_count(star(5)) == 24

    def test_contains_subgraph(self):
        assert contains_subgraph(complete(4), path(3))
        assert not contains_subgraph(cycle(5), cycle(4))
        assert contains_subgraph(complete_bipartite(2, 2), cycle(4))


class TestSequences:
    def test_examples(self):
        s = degree_and_star_sequences(path(4))
        assert s.degree_seq == (2, 2, 0, 0) and s.star_seq == (3, 2, 0)
        c6 = degree_and_star_sequences(cycle(6))
        assert c6.degree_seq == (0, 6, 0, 0, 0, 0) and c6.star_seq == (6, 6, 0, 0, 0)
        assert degree_and_star_sequences(disjoint_union(cycle(3), cycle(3))) == c6

    def test_all_graphs_up_to_seven(self):
        for n in range(2, 8):
            for g in all_graphs(n):
                s = degree_and_star_sequences(g)
                assert s.star_seq == star_counts_direct(g)
                assert sum((i + 1) * d for i, d in enumerate(s.degree_seq)) == 2 * g.m
                assert s.star_seq[0] == g.m


class TestIsomorphism:
    def test_examples(self):
        assert not is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3)))
        assert is_isomorphic(path(3), complete_bipartite(1, 2))
        assert is_isomorphic(cycle(4), complete_bipartite(2, 2))

    @given(graphs(max_n=7))
    def test_canonical_form_is_label_free(self, g):
        perm = list(range(g.n))
        random.Random(g.m).shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)

    def test_graph_counts(self):
        assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
        assert [len(connected_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
        assert all(is_connected(g) for g in connected_graphs(5))


class TestTrees:
    def test_counts(self):
        assert [len(free_trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_methods_agree(self, n):
        leaf = {canonical_form(t) for t in free_trees(n)}
        prufer = {canonical_form(t) for t in free_trees(n, method="prufer")}
        assert leaf == prufer

    def test_trees_are_trees(self):
        for t in free_trees(8):
            assert t.m == t.n - 1 and is_connected(t)
