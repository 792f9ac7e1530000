"""Adjacency, signless Laplacian and distance spectra of graphs.

Eigenvalues come from a cyclic Jacobi rotation solver.  Distances and
transmissions stay exact integers until a matrix is assembled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import InvalidParameter, NotConnected
from .graph import Graph, bfs_distances

DEFAULT_TOL = 1e-10
EQUALITY_TOL = 1e-8


@dataclass(frozen=True)
class SymmetricMatrix:
    data: np.ndarray

    def __post_init__(self):
        a = self.data
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise InvalidParameter("matrix must be square and nonempty")
        assert np.array_equal(a, a.T), "matrix is not symmetric"

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.data))

    def max_norm(self) -> float:
        return float(np.max(np.abs(self.data)))


@njit(cache=True)
def _cyclic_jacobi(a, tol, max_sweeps):
    n = a.shape[0]
    a = a.copy()
    v = np.eye(n)
    scale = 0.0
    for i in range(n):
        for j in range(n):
            if abs(a[i, j]) > scale:
                scale = abs(a[i, j])
    if scale == 0.0:
        scale = 1.0
    threshold = tol * scale
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > off:
                    off = abs(a[p, q])
        if off <= threshold:
            return np.diag(a).copy(), v, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return np.diag(a).copy(), v, -1


def symmetric_eigensystem(mat: SymmetricMatrix, tol: float = DEFAULT_TOL, max_sweeps: int = 100):
    """Eigenvalues (nonincreasing) and matching eigenvector columns."""
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    vals, vecs, sweeps = _cyclic_jacobi(np.ascontiguousarray(mat.data, dtype=np.float64), tol, max_sweeps)
    if sweeps < 0:
        raise ArithmeticError(f"Jacobi did not converge in {max_sweeps} sweeps")
    order = np.argsort(-vals, kind="stable")
    return vals[order], vecs[:, order]


def symmetric_eigenvalues(mat: SymmetricMatrix, tol: float = DEFAULT_TOL) -> np.ndarray:
    return symmetric_eigensystem(mat, tol)[0]


def spectral_radius(mat: SymmetricMatrix) -> float:
    return float(symmetric_eigenvalues(mat)[0])


def adjacency_matrix(g: Graph) -> SymmetricMatrix:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return SymmetricMatrix(a)


def signless_laplacian(g: Graph) -> SymmetricMatrix:
    a = adjacency_matrix(g).data
    a[np.diag_indices(g.n)] = g.degrees()
    return SymmetricMatrix(a)


def distance_rows(g: Graph) -> list[list[int]]:
    """All-pairs hop distances; raises NotConnected if any pair is unreachable."""
    rows = [bfs_distances(g, s) for s in range(g.n)]
    if any(d < 0 for d in rows[0]):
        raise NotConnected("distances need a connected graph")
    return rows


def distance_matrix(g: Graph) -> SymmetricMatrix:
    return SymmetricMatrix(np.array(distance_rows(g), dtype=np.float64))


def distance_signless_laplacian(g: Graph) -> SymmetricMatrix:
    d = np.array(distance_rows(g), dtype=np.float64)
    d[np.diag_indices(g.n)] = d.sum(axis=1)
    return SymmetricMatrix(d)


def adjacency_spectral_radius(g: Graph) -> float:
    return spectral_radius(adjacency_matrix(g))


def signless_laplacian_spectral_radius(g: Graph) -> float:
    return spectral_radius(signless_laplacian(g))


def distance_spectral_radius(g: Graph) -> float:
    return spectral_radius(distance_matrix(g))


def distance_signless_laplacian_spectral_radius(g: Graph) -> float:
    return spectral_radius(distance_signless_laplacian(g))


def wiener_and_transmissions(g: Graph) -> tuple[int, list[int], bool]:
    """``(W, [Tr(v)], transmission_regular)`` as exact integers."""
    rows = distance_rows(g)
    tr = [sum(r) for r in rows]
    total = sum(tr)
    assert total % 2 == 0
    return total // 2, tr, len(set(tr)) == 1


@dataclass(frozen=True)
class SpectralSummary:
    lambda1_A: float
    q1: float
    lambda1_D: float
    eta1: float
    wiener: int
    transmissions: tuple[int, ...]
    transmission_regular: bool

    def as_json(self):
        return {
            "lambda1_A": self.lambda1_A,
            "q1": self.q1,
            "lambda1_D": self.lambda1_D,
            "eta1": self.eta1,
            "wiener": self.wiener,
            "transmissions": list(self.transmissions),
            "transmission_regular": self.transmission_regular,
        }


def spectral_summary(g: Graph) -> SpectralSummary:
    rows = distance_rows(g)
    tr = [sum(r) for r in rows]
    d = np.array(rows, dtype=np.float64)
    qd = d.copy()
    qd[np.diag_indices(g.n)] = tr
    return SpectralSummary(
        lambda1_A=adjacency_spectral_radius(g),
        q1=signless_laplacian_spectral_radius(g),
        lambda1_D=spectral_radius(SymmetricMatrix(d)),
        eta1=spectral_radius(SymmetricMatrix(qd)),
        wiener=sum(tr) // 2,
        transmissions=tuple(tr),
        transmission_regular=len(set(tr)) == 1,
    )


@dataclass(frozen=True)
class BoundCheck:
    """One inequality ``value <= bound`` (upper) or ``value >= bound`` (lower).

    ``slack`` is signed so that a nonnegative slack means the inequality holds.
    """

    name: str
    value: float
    bound: float
    direction: str  # "upper" or "lower"

    @property
    def slack(self) -> float:
        return self.bound - self.value if self.direction == "upper" else self.value - self.bound

    @property
    def holds(self) -> bool:
        return self.slack >= -EQUALITY_TOL

    @property
    def equality(self) -> bool:
        return abs(self.slack) <= EQUALITY_TOL

    def as_json(self):
        return {
            "value": self.value,
            "bound": self.bound,
            "direction": self.direction,
            "slack": self.slack,
            "holds": self.holds,
            "equality": self.equality,
        }


@dataclass(frozen=True)
class LemmaReport:
    adjacency: BoundCheck  # lambda1 <= sqrt(2m - n + 1)
    signless_laplacian: BoundCheck | None  # q <= 2m/(n-1) + n - 2; undefined for n = 1
    distance: BoundCheck  # lambda1(D) >= 2W/n
    distance_signless_laplacian: BoundCheck  # eta1 >= 4W/n
    transmission_floor_ok: bool  # Tr(v) >= 2(n-1) - d(v) for every v
    transmission_floor_tight: tuple[int, ...]  # vertices meeting it with equality
    wiener_floor: tuple[int, int]  # (W, n(n-1) - m)

    def checks(self) -> list[BoundCheck]:
        return [c for c in (self.adjacency, self.signless_laplacian, self.distance, self.distance_signless_laplacian) if c]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks()) and self.transmission_floor_ok and self.wiener_floor[0] >= self.wiener_floor[1]

    def as_json(self):
        return {
            "lemma_3_1": self.adjacency.as_json(),
            "lemma_3_2": self.signless_laplacian.as_json() if self.signless_laplacian else {"skipped": "n = 1"},
            "lemma_3_3": self.distance.as_json(),
            "lemma_3_4": self.distance_signless_laplacian.as_json(),
            "transmission_floor_ok": self.transmission_floor_ok,
            "transmission_floor_tight": list(self.transmission_floor_tight),
            "wiener": self.wiener_floor[0],
            "wiener_floor": self.wiener_floor[1],
        }


def lemma_bounds_report(g: Graph, summary: SpectralSummary | None = None) -> LemmaReport:
    """Evaluate the four radius bounds and the transmission/Wiener floors."""
    if summary is None:
        summary = spectral_summary(g)
    n, m = g.n, g.m
    w = summary.wiener
    deg = g.degrees()
    floor = [2 * (n - 1) - d for d in deg]
    return LemmaReport(
        adjacency=BoundCheck("lemma_3_1", summary.lambda1_A, math.sqrt(2 * m - n + 1), "upper"),
        signless_laplacian=BoundCheck("lemma_3_2", summary.q1, 2 * m / (n - 1) + n - 2, "upper") if n > 1 else None,
        distance=BoundCheck("lemma_3_3", summary.lambda1_D, 2 * w / n, "lower"),
        distance_signless_laplacian=BoundCheck("lemma_3_4", summary.eta1, 4 * w / n, "lower"),
        transmission_floor_ok=all(tr >= f for tr, f in zip(summary.transmissions, floor)),
        transmission_floor_tight=tuple(v for v in range(n) if summary.transmissions[v] == floor[v]),
        wiener_floor=(w, n * (n - 1) - m),
    )

