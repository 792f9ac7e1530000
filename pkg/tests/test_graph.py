import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toughcycles.errors import InvalidParameter, InvalidVertex, LoopRejected, TooLarge, FormatError
from toughcycles.graph import (
    DegreeSequence,
    complete,
    complete_bipartite,
    components,
    construct_named,
    copies,
    cycle,
    degree_sequence,
    disjoint_union,
    edgeless,
    format_edge_list,
    from_edges,
    is_bipartite,
    join,
    parse_edge_list,
    star,
)
from toughcycles.theorems import construct_family, extremal_sequence

from oracles import cycle_lengths_dp


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)


class TestFromEdges:
    def test_triangle(self):
        g = from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert g == complete(3) and g.m == 3

    def test_edgeless(self):
        assert from_edges(4, []).m == 0

    def test_duplicates_collapse(self):
        g = from_edges(4, [(0, 1), (0, 1), (1, 2)])
        assert g.m == 2 and g.edges() == [(0, 1), (1, 2)]

    def test_errors(self):
        with pytest.raises(InvalidVertex):
            from_edges(3, [(0, 3)])
        with pytest.raises(LoopRejected):
            from_edges(3, [(1, 1)])
        with pytest.raises(TooLarge):
            from_edges(513, [])


class TestNamed:
    @pytest.mark.parametrize(
        "kind,params,m",
        [("complete", (5,), 10), ("cycle", (8,), 8), ("complete_bipartite", (3, 3), 9), ("edgeless", (6,), 0)],
    )
    def test_edge_counts(self, kind, params, m):
        g = construct_named(kind, *params)
        assert g.m == m
        g.check()

    def test_cycle_degrees(self):
        assert construct_named("cycle", 8).degrees() == [2] * 8

    def test_short_cycle_rejected(self):
        with pytest.raises(InvalidParameter):
            construct_named("cycle", 2)

    def test_k33_bipartite(self):
        xs, ys = is_bipartite(complete_bipartite(3, 3))
        assert sorted(map(len, (xs, ys))) == [3, 3]


class TestJoinUnion:
    def test_k2_join_3k1(self):
        g = join(complete(2), edgeless(3))
        assert g.n == 5 and g.m == 7
        assert g.with_edges([]).m == 7

    def test_star_as_join(self):
        assert join(edgeless(1), edgeless(6)) == star(7)

    def test_join_family_order(self):
        g = join(complete(4), disjoint_union(complete(8), cycle(8)))
        assert g.n == 20 and g.m == 6 + 28 + 8 + 4 * 16

    def test_unions(self):
        two_c4 = disjoint_union(cycle(4), cycle(4))
        assert two_c4.m == 8 and components(two_c4)[0] == 2
        assert disjoint_union(complete(1), complete(1)).m == 0
        four_k2 = copies(complete(2), 4)
        assert four_k2.m == 4 and components(four_k2)[0] == 4

    def test_cap(self):
        with pytest.raises(TooLarge):
            join(edgeless(300), edgeless(300))

    @given(graphs(8), graphs(8))
    def test_join_edge_identity(self, g1, g2):
        g = join(g1, g2)
        g.check()
        assert g.m == g1.m + g2.m + g1.n * g2.n

    @given(graphs(8), graphs(8))
    def test_union_components_add(self, g1, g2):
        g = disjoint_union(g1, g2)
        g.check()
        assert components(g)[0] == components(g1)[0] + components(g2)[0]


class TestDegreeSequence:
    def test_examples(self):
        assert degree_sequence(complete(4)).runs == [(3, 4)]
        assert degree_sequence(star(4)).runs == [(1, 3), (3, 1)]

    def test_extremal_sum(self):
        seq = extremal_sequence(4, 39, "case12")
        assert seq.runs == [(19, 24), (38, 15)] and seq.total() == 1026
        g = construct_family("extremal_seq", t=4, n=39, variant="case12").graph
        assert degree_sequence(g) == seq and 2 * g.m == 1026

    def test_rejects_unsorted(self):
        with pytest.raises(InvalidParameter):
            DegreeSequence((3, 1))

    @given(graphs())
    def test_sum_is_twice_m(self, g):
        ds = degree_sequence(g)
        assert ds.total() == 2 * g.m
        assert sum(x for _, x in ds.runs) == g.n
        assert ds.min == g.min_degree() and ds.max == g.max_degree()


class TestStructure:
    def test_bipartite_examples(self):
        xs, ys = is_bipartite(cycle(6))
        assert (len(xs), len(ys)) == (3, 3)
        assert is_bipartite(cycle(5)) is None

    @given(graphs())
    def test_bipartition_is_proper(self, g):
        sides = is_bipartite(g)
        if sides is not None:
            xs = set(sides[0])
            assert all((u in xs) != (v in xs) for u, v in g.edges())

    def test_components_examples(self):
        assert components(complete(5))[0] == 1
        assert components(copies(cycle(4), 2))[0] == 2
        assert components(edgeless(8))[0] == 8

    @given(graphs())
    def test_labels_constant_on_edges(self, g):
        count, labels = components(g)
        assert len(set(labels)) == count
        assert all(labels[u] == labels[v] for u, v in g.edges())

    def test_bipartite_iff_no_odd_cycle(self, connected_corpus):
        for line, g in connected_corpus:
            odd = any(k % 2 for k in cycle_lengths_dp(g))
            assert (is_bipartite(g) is None) == odd, line


class TestEdgeListFormat:
    def test_round_trip(self):
        g = join(complete(2), cycle(5))
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks(self):
        assert parse_edge_list("3\n# triangle\n0 1\n\n1 2\n0 2\n") == complete(3)

    def test_bad_line(self):
        with pytest.raises(FormatError) as exc:
            parse_edge_list("3\n0 1 2\n")
        assert exc.value.offset == 2


def test_random_constructions_are_simple():
    rng = random.Random(3)
    for _ in range(50):
        a = from_edges(rng.randint(1, 6), [])
        b = cycle(rng.randint(3, 7))
        for g in (join(a, b), disjoint_union(a, b), join(b, disjoint_union(a, b))):
            g.check()
