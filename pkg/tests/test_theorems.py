import math

import pytest

from toughcycles.answers import Answer
from toughcycles.closure import k_closure
from toughcycles.errors import InvalidParameter
from toughcycles.graph import DegreeSequence, complete, complete_bipartite, copies, cycle, degree_sequence, disjoint_union, join, star
from toughcycles.theorems import (
    TheoremQuery,
    check_theorems,
    construct_family,
    evaluate_conditions,
    extremal_sequence,
    is_graphical,
    realize_degree_sequence,
    claimed_hamiltonian,
    threshold_condition,
    threshold_size,
)

from oracles import erdos_gallai


class TestThresholds:
    @pytest.mark.parametrize("n,t,m", [(38, 4, 483), (28, 3, 258), (10, 4, 49), (6, 2, 13)])
    def test_size(self, n, t, m):
        assert threshold_size(n, t) == m

    def test_size_domain(self):
        with pytest.raises(InvalidParameter):
            threshold_size(8, 4)

    @pytest.mark.parametrize(
        "which,value",
        [("spectral", math.sqrt(929)), ("q", 966 / 37 + 36), ("distance", 53 - 168 / 38), ("dsl", 106 - 336 / 38)],
    )
    def test_real_thresholds(self, which, value):
        assert abs(threshold_condition(which, 38, 4).value - value) <= 1e-12

    def test_rounded_values(self):
        assert round(threshold_condition("spectral", 38, 4).value, 4) == 30.4795
        assert round(threshold_condition("q", 38, 4).value, 4) == 62.1081
        assert round(threshold_condition("dsl", 38, 4).value, 4) == 97.1579

    def test_unknown(self):
        with pytest.raises(InvalidParameter):
            threshold_condition("laplacian", 38, 4)


class TestCheckTheorems:
    def test_complete_40(self):
        v = check_theorems(complete(40), TheoremQuery(4, verify_conclusion=True))
        assert v.preconditions_pass and v.toughness == "yes"
        assert v.conditions["size"].holds and v.conditions["size"].value == 780
        assert v.implied and v.observed.hamiltonian is Answer.YES and v.observed.pancyclic is Answer.YES
        assert v.consistent

    def test_cycle_40(self):
        v = check_theorems(cycle(40), TheoremQuery(4))
        assert v.toughness == "no" and v.implied is None
        assert len(v.toughness_detail["cut"]) == 2

    def test_case11(self):
        g = construct_family("extremal_seq", t=4, n=38, variant="case11").graph
        v = check_theorems(g, TheoremQuery(4, assume_tough=True, verify_conclusion=True))
        assert v.conditions["size"].margin == 0 and v.conditions["size"].holds
        assert v.implied and v.observed.hamiltonian is Answer.YES and v.consistent
        assert k_closure(g, 37).is_complete

    def test_small_order(self):
        v = check_theorems(complete(3), TheoremQuery(4))
        assert not v.order_ok and v.implied is None
        assert v.as_json()["preconditions"]["order"]["requires"] == "n > 37"

    def test_rejects_t(self):
        with pytest.raises(InvalidParameter):
            TheoremQuery(0)


def test_conditions_skip_for_tiny_or_disconnected():
    c = evaluate_conditions(complete(3), 4)
    assert c["size"].as_json()["skipped"]
    c = evaluate_conditions(disjoint_union(complete(12), complete(1)), 4)
    assert c["size"].holds and c["spectral"].as_json() == {"skipped": "disconnected"}


class TestRealization:
    @pytest.mark.parametrize(
        "seq,expected",
        [
            ((1, 1, 1, 1), copies(complete(2), 2)),
            ((3, 3, 3, 3), complete(4)),
            ((3, 1, 1, 1, 1, 1), disjoint_union(star(4), complete(2))),
        ],
    )
    def test_examples(self, seq, expected):
        assert realize_degree_sequence(seq) == expected

    @pytest.mark.parametrize("seq", [(1,), (3, 3, 1, 1), (2, 2, 2, 1)])
    def test_non_graphical(self, seq):
        assert realize_degree_sequence(seq) is None
        assert not is_graphical(seq)

    def test_graphical_matches_oracle(self):
        import itertools

        for n in range(1, 7):
            for seq in itertools.combinations_with_replacement(range(n), n):
                assert is_graphical(seq) == erdos_gallai(seq)
                g = realize_degree_sequence(seq)
                assert (g is not None) == erdos_gallai(seq)
                if g is not None:
                    assert g.degrees() == list(seq)


class TestFamilies:
    def test_join_family(self):
        fam = construct_family("join_family", i=4, n=20, core="C8")
        assert fam.graph == join(complete(4), disjoint_union(complete(8), cycle(8)))

    def test_case12(self):
        fam = construct_family("extremal_seq", t=4, n=39, variant="case12")
        assert degree_sequence(fam.graph) == extremal_sequence(4, 39, "case12")
        assert str(fam.expected_degrees) == "(19^24, 38^15)"

    @pytest.mark.parametrize("n", [38, 40, 44])
    def test_case11_recount(self, n):
        fam = construct_family("extremal_seq", t=4, n=n, variant="case11")
        assert degree_sequence(fam.graph) == DegreeSequence.from_runs([(8, 8), (n - 9, n - 12), (n - 1, 4)])

    def test_bipartite(self):
        assert construct_family("balanced_bipartite", n=12).graph == complete_bipartite(6, 6)

    @pytest.mark.parametrize(
        "kind,params",
        [
            ("balanced_bipartite", {"n": 7}),
            ("extremal_seq", {"t": 4, "n": 40, "variant": "case12"}),
            ("join_family", {"i": 4, "n": 11, "core": "C8"}),
            ("join_family", {"i": 4, "n": 20, "core": "K8"}),
            ("triangle", {}),
        ],
    )
    def test_bad_params(self, kind, params):
        with pytest.raises(InvalidParameter):
            construct_family(kind, **params)

    def test_claimed_pairs(self):
        assert claimed_hamiltonian(4, "C8") and not claimed_hamiltonian(4, "4K2")
        assert claimed_hamiltonian(8, "8K1") and claimed_hamiltonian(12, "8K1")
        assert not claimed_hamiltonian(12, "C8")


@pytest.mark.parametrize("n", range(20, 25))
def test_join_family_hamiltonicity_characterized(n):
    # K_i v (K_r + core) is Hamiltonian exactly when the core's components plus one fit in i
    from toughcycles.cycles import is_hamiltonian_via_closure

    pieces = {"C8": 1, "2C4": 2, "4K2": 4, "8K1": 8}
    for i in range(4, n - 7):
        for core, c in pieces.items():
            g = construct_family("join_family", i=i, n=n, core=core).graph
            extra = 1 if n - 8 - i > 0 else 0
            expected = Answer.YES if c + extra <= i else Answer.NO
            assert is_hamiltonian_via_closure(g).answer is expected, (i, core)
