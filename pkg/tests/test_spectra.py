import math
import random

import numpy as np
import pytest

from toughcycles.errors import InvalidParameter, NotConnected
from toughcycles.graph import complete, complete_bipartite, cycle, edgeless, from_edges, is_connected, path, petersen, star
from toughcycles.spectra import (
    SymmetricMatrix,
    adjacency_matrix,
    adjacency_spectral_radius,
    distance_matrix,
    distance_signless_laplacian,
    distance_signless_laplacian_spectral_radius,
    distance_spectral_radius,
    lemma_bounds_report,
    signless_laplacian,
    signless_laplacian_spectral_radius,
    spectral_summary,
    symmetric_eigensystem,
    symmetric_eigenvalues,
    wiener_and_transmissions,
)

from oracles import distances_nx, lapack_radius


def _random_connected(rng, n, p):
    while True:
        g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if is_connected(g):
            return g


class TestEigen:
    def test_identity(self):
        assert np.allclose(symmetric_eigenvalues(SymmetricMatrix(np.eye(5))), [1] * 5)

    @pytest.mark.parametrize("g,expected", [(complete(4), [3, -1, -1, -1]), (cycle(4), [2, 0, 0, -2])])
    def test_small_spectra(self, g, expected):
        assert np.allclose(symmetric_eigenvalues(adjacency_matrix(g)), expected, atol=1e-10)

    def test_rejects_bad_input(self):
        with pytest.raises(InvalidParameter):
            SymmetricMatrix(np.zeros((2, 3)))
        with pytest.raises(AssertionError):
            SymmetricMatrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(InvalidParameter):
            symmetric_eigenvalues(SymmetricMatrix(np.eye(2)), tol=0)

    @pytest.mark.parametrize("seed", range(5))
    def test_against_lapack(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 40))
        a = rng.normal(size=(n, n))
        a = a + a.T
        mat = SymmetricMatrix(a)
        vals, vecs = symmetric_eigensystem(mat)
        assert np.allclose(vals, np.sort(np.linalg.eigvalsh(a))[::-1], atol=1e-9 * np.abs(a).max() * n)
        assert math.isclose(vals.sum(), mat.trace(), abs_tol=1e-8)
        assert np.allclose(a @ vecs, vecs * vals, atol=1e-8 * np.abs(a).max() * n)
        assert np.allclose(vecs.T @ vecs, np.eye(n), atol=1e-10)


class TestRadii:
    @pytest.mark.parametrize("n", [2, 5, 9])
    def test_complete(self, n):
        g = complete(n)
        assert math.isclose(adjacency_spectral_radius(g), n - 1, abs_tol=1e-9)
        assert math.isclose(signless_laplacian_spectral_radius(g), 2 * n - 2, abs_tol=1e-9)
        assert math.isclose(distance_spectral_radius(g), n - 1, abs_tol=1e-9)
        assert math.isclose(distance_signless_laplacian_spectral_radius(g), 2 * n - 2, abs_tol=1e-9)

    @pytest.mark.parametrize("n", [3, 4, 8])
    def test_star(self, n):
        assert math.isclose(adjacency_spectral_radius(star(n)), math.sqrt(n - 1), abs_tol=1e-9)
        assert math.isclose(signless_laplacian_spectral_radius(star(n)), n, abs_tol=1e-9)

    def test_cycles(self):
        assert math.isclose(adjacency_spectral_radius(cycle(8)), 2, abs_tol=1e-9)
        assert math.isclose(signless_laplacian_spectral_radius(cycle(8)), 4, abs_tol=1e-9)
        assert math.isclose(distance_signless_laplacian_spectral_radius(cycle(4)), 8, abs_tol=1e-9)
        assert math.isclose(distance_spectral_radius(cycle(5)), 6, abs_tol=1e-9)

    @pytest.mark.parametrize("seed", range(3))
    def test_against_lapack_on_graphs(self, seed):
        rng = random.Random(seed)
        for _ in range(15):
            g = _random_connected(rng, rng.randint(2, 30), rng.uniform(0.1, 0.9))
            s = spectral_summary(g)
            for value, mat in (
                (s.lambda1_A, adjacency_matrix(g)),
                (s.q1, signless_laplacian(g)),
                (s.lambda1_D, distance_matrix(g)),
                (s.eta1, distance_signless_laplacian(g)),
            ):
                assert math.isclose(value, lapack_radius(mat.data), rel_tol=1e-10, abs_tol=1e-10)

    @pytest.mark.parametrize("seed", range(3))
    def test_adjacency_envelope(self, seed):
        # average degree <= lambda1 <= maximum degree
        rng = random.Random(seed)
        for _ in range(20):
            g = _random_connected(rng, rng.randint(2, 20), 0.4)
            lam = adjacency_spectral_radius(g)
            assert 2 * g.m / g.n - 1e-9 <= lam <= g.max_degree() + 1e-9


class TestDistances:
    def test_complete(self):
        d = distance_matrix(complete(5)).data
        assert np.array_equal(d, np.ones((5, 5)) - np.eye(5))

    def test_path_and_cycle(self):
        assert distance_matrix(path(3)).data.max() == 2
        assert set(np.unique(distance_matrix(cycle(5)).data)) == {0, 1, 2}

    def test_disconnected(self):
        with pytest.raises(NotConnected):
            distance_matrix(edgeless(2))
        with pytest.raises(NotConnected):
            wiener_and_transmissions(from_edges(4, [(0, 1), (2, 3)]))

    @pytest.mark.parametrize(
        "g,w,tr",
        [(complete(6), 15, [5] * 6), (path(3), 4, [3, 2, 3]), (cycle(5), 15, [6] * 5), (petersen(), 75, [15] * 10)],
    )
    def test_wiener(self, g, w, tr):
        assert wiener_and_transmissions(g) == (w, tr, len(set(tr)) == 1)

    def test_against_networkx(self):
        rng = random.Random(1)
        for _ in range(30):
            g = _random_connected(rng, rng.randint(2, 15), 0.3)
            assert distance_matrix(g).data.astype(int).tolist() == distances_nx(g)


class TestLemmaReport:
    def test_complete_equalities(self):
        r = lemma_bounds_report(complete(6))
        assert r.adjacency.equality and r.signless_laplacian.equality and r.distance_signless_laplacian.equality

    def test_star_equalities(self):
        r = lemma_bounds_report(star(6))
        assert r.adjacency.equality and r.signless_laplacian.equality
        assert not r.distance_signless_laplacian.equality

    def test_c4(self):
        r = lemma_bounds_report(cycle(4))
        assert r.distance_signless_laplacian.equality and r.distance.equality
        assert not r.adjacency.equality

    def test_single_vertex(self):
        r = lemma_bounds_report(complete(1))
        assert r.signless_laplacian is None and r.all_hold
        assert r.as_json()["lemma_3_2"] == {"skipped": "n = 1"}

    def test_non_regular_is_strict(self):
        r = lemma_bounds_report(path(4))
        assert r.all_hold and not r.distance_signless_laplacian.equality
        assert r.wiener_floor[0] >= r.wiener_floor[1]

    def test_transmission_floor_tight_for_diameter_two(self):
        r = lemma_bounds_report(complete_bipartite(2, 3))
        assert r.transmission_floor_tight == tuple(range(5))
        assert r.wiener_floor[0] == r.wiener_floor[1]
