"""Degree-sum closure and degree-sequence side conditions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameter
from .graph import DegreeSequence, Graph


@dataclass(frozen=True)
class ClosureResult:
    closed: Graph
    added: tuple[tuple[int, int], ...]
    is_complete: bool


def k_closure(g: Graph, k: int, rng: Optional[random.Random] = None) -> ClosureResult:
    """Join nonadjacent pairs with degree sum >= ``k`` until none remain.

    Pairs are scanned lexicographically, repeating full passes until a pass
    adds nothing, so ``added`` is reproducible.  Passing ``rng`` shuffles the
    scan order of every pass instead; the final edge set is the same.
    """
    if k < 0:
        raise InvalidParameter("closure parameter must be nonnegative")
    n = g.n
    rows = list(g.rows)
    deg = [r.bit_count() for r in rows]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    added: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        if rng is not None:
            rng.shuffle(pairs)
        for u, v in pairs:
            if not rows[u] >> v & 1 and deg[u] + deg[v] >= k:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                added.append((u, v))
                changed = True
    closed = Graph(n, tuple(rows), g.m + len(added))
    return ClosureResult(closed, tuple(added), closed.is_complete())


@dataclass(frozen=True)
class PredicateWitness:
    k: int
    d_k: int
    d_shifted: int  # d_{n-k+t}

    def is_violation(self, n: int) -> bool:
        return self.d_k <= self.k and self.d_shifted <= n - self.k - 1


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    witness: Optional[PredicateWitness] = None
    skipped: tuple[int, ...] = ()  # k with d_k <= k whose shifted index falls outside [1, n]


def predicate_P(seq: DegreeSequence, t: int) -> PredicateResult:
    """For all ``k < n/2``: ``d_k <= k`` implies ``d_{n-k+t} >= n - k``.

    Returns the smallest violating ``k``.  Indices ``n - k + t`` beyond ``n``
    make the implication vacuous and are reported in ``skipped``.
    """
    if t < 1:
        raise InvalidParameter("t must be at least 1")
    n = seq.n
    skipped = []
    k = 1
    while 2 * k < n:
        if seq.d(k) <= k:
            idx = n - k + t
            if not 1 <= idx <= n:
                skipped.append(k)
            elif seq.d(idx) <= n - k - 1:
                return PredicateResult(False, PredicateWitness(k, seq.d(k), seq.d(idx)), tuple(skipped))
        k += 1
    return PredicateResult(True, None, tuple(skipped))


def corollary26_gap(g: Graph) -> Optional[tuple[int, int]]:
    """A nonadjacent pair of minimum degree sum, if that sum is at most ``n - 5``."""
    deg = g.degrees()
    best = None
    best_sum = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.rows[u] >> v & 1:
                s = deg[u] + deg[v]
                if best_sum is None or s < best_sum:
                    best, best_sum = (u, v), s
    if best is not None and best_sum <= g.n - 5:
        return best
    return None


def min_nonadjacent_degree_sum(g: Graph) -> Optional[int]:
    deg = g.degrees()
    sums = [deg[u] + deg[v] for u in range(g.n) for v in range(u + 1, g.n) if not g.rows[u] >> v & 1]
    return min(sums) if sums else None


def lemma27_condition(g: Graph) -> bool:
    """More than n/3 vertices have degree greater than n/2 (exact integer test)."""
    count = sum(1 for d in g.degrees() if 2 * d > g.n)
    return 3 * count > g.n
