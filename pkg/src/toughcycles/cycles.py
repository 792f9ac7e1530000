"""Exact Hamiltonicity, cycle-length spectrum and the conclusion classifier.

The searches are depth-first over bitset rows with a node-expansion budget.
Running out of budget yields ``Answer.UNKNOWN``; a negative answer is only
given when the search tree was exhausted.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Optional

from .answers import Answer
from .closure import ClosureResult, k_closure
from .errors import TooSmall
from .graph import Graph, bits, count_components, is_bipartite, is_connected

DEFAULT_BUDGET = 10**8


class _OutOfBudget(Exception):
    pass


class _Budget:
    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.cap:
            raise _OutOfBudget


@dataclass(frozen=True)
class HamiltonResult:
    answer: Answer
    cycle: Optional[tuple[int, ...]] = None
    expansions: int = 0
    reason: str = ""
    cut: Optional[tuple[int, ...]] = None  # S with c(G - S) > |S| when that refutes


def scattering_cut(g: Graph) -> Optional[tuple[int, ...]]:
    """A vertex set ``S`` with ``c(G - S) > |S|`` among cheap candidates, if any.

    Candidates are open neighbourhoods, unions and intersections of pairs of
    neighbourhoods.  Any such ``S`` rules out a Hamiltonian cycle.
    """
    rows = g.rows
    full = g.full_mask
    seen = set()

    def test(S: int) -> bool:
        if S in seen or S == 0:
            return False
        seen.add(S)
        rest = full & ~S
        return rest != 0 and count_components(rows, rest) > S.bit_count()

    for v in range(g.n):
        if test(rows[v]):
            return tuple(bits(rows[v]))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            pair = (1 << u) | (1 << v)
            for S in ((rows[u] | rows[v]) & ~pair, rows[u] & rows[v] & ~pair):
                if test(S):
                    return tuple(bits(S))
    return None


def is_hamiltonian_cycle(g: Graph, order) -> bool:
    """Check that ``order`` visits every vertex once along edges of ``g``, closing up."""
    order = list(order)
    if len(order) != g.n or sorted(order) != list(range(g.n)) or g.n < 3:
        return False
    return all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n))


def is_cycle_in(g: Graph, order) -> bool:
    order = list(order)
    if len(order) < 3 or len(set(order)) != len(order):
        return False
    return all(g.has_edge(order[i], order[(i + 1) % len(order)]) for i in range(len(order)))


def _with_recursion(depth: int):
    need = depth + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _path_articulation_ok(rows, unvisited: int, v: int, anchor: int) -> bool:
    """The rest of the cycle is a v-anchor path through ``unvisited``.

    Deleting any inner vertex x from that path leaves two pieces, one holding
    v and one holding anchor, so G[unvisited + v + anchor] - x may have at
    most two components and, if two, v and anchor lie in different ones.
    """
    if unvisited.bit_count() < 3:
        return True
    ends = (1 << v) | (1 << anchor)
    whole = unvisited | ends
    for x in bits(unvisited):
        rest = whole & ~(1 << x)
        comp = 1 << v
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = rows[low.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        if comp == rest:
            continue
        if comp >> anchor & 1:
            return False
        other = rest & ~comp
        if count_components(rows, other) != 1:
            return False
    return True


def _hamilton_dfs(rows: tuple[int, ...], n: int, budget: _Budget) -> Optional[list[int]]:
    anchor = min(range(n), key=lambda v: (rows[v].bit_count(), v))
    a_bit = 1 << anchor
    path = [anchor]

    def extend(v: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(rows[v] & a_bit)
        budget.tick()
        if not rows[anchor] & unvisited:
            return False
        ends = unvisited | (1 << v) | a_bit
        at_root = v == anchor
        forced = -1
        for u in bits(unvisited):
            free = rows[u] & ends
            k = free.bit_count()
            if k < 2:
                return False
            if k == 2 and free >> v & 1 and not at_root:
                # u's two cycle neighbours are fixed and one is v
                if forced >= 0:
                    return False
                forced = u
        if count_components(rows, unvisited) != 1:
            return False
        if not at_root and not _path_articulation_ok(rows, unvisited, v, anchor):
            return False
        if forced >= 0:
            order = [forced] if rows[v] >> forced & 1 else []
        else:
            order = sorted(bits(rows[v] & unvisited), key=lambda u: ((rows[u] & unvisited).bit_count(), u))
        for u in order:
            path.append(u)
            if extend(u, unvisited & ~(1 << u)):
                return True
            path.pop()
        return False

    if extend(anchor, ((1 << n) - 1) & ~a_bit):
        return path
    return None


def find_hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> HamiltonResult:
    if g.n < 3:
        raise TooSmall("Hamiltonian cycles need at least 3 vertices")
    if not is_connected(g):
        return HamiltonResult(Answer.NO, reason="disconnected")
    if g.min_degree() < 2:
        return HamiltonResult(Answer.NO, reason="vertex of degree < 2")
    cut = scattering_cut(g)
    if cut is not None:
        return HamiltonResult(Answer.NO, reason="removing cut leaves more components than its size", cut=cut)
    _with_recursion(g.n)
    state = _Budget(budget)
    try:
        found = _hamilton_dfs(g.rows, g.n, state)
    except _OutOfBudget:
        return HamiltonResult(Answer.UNKNOWN, expansions=state.used, reason=f"budget {budget} exhausted")
    if found is None:
        return HamiltonResult(Answer.NO, expansions=state.used, reason="search exhausted")
    assert is_hamiltonian_cycle(g, found)
    return HamiltonResult(Answer.YES, tuple(found), state.used, "search")


def unwind_closure_cycle(g: Graph, closure: ClosureResult, cycle) -> Optional[tuple[int, ...]]:
    """Turn a Hamiltonian cycle of the closure into one of ``g``.

    Added edges are removed newest first.  When the cycle uses a removed
    edge ``uv`` it is read as a Hamiltonian ``u``-``v`` path ``P`` and
    rerouted through some ``j`` with ``P[0] ~ P[j+1]`` and ``P[j] ~ P[-1]``,
    which exists whenever ``d(u) + d(v) >= n`` at the time ``uv`` was added.
    Returns ``None`` if some step finds no such ``j``.
    """
    n = g.n
    rows = list(closure.closed.rows)
    cyc = list(cycle)
    for u, v in reversed(closure.added):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        i = cyc.index(u)
        if cyc[(i + 1) % n] == v:
            p = [cyc[(i - s) % n] for s in range(n)]
        elif cyc[(i - 1) % n] == v:
            p = [cyc[(i + s) % n] for s in range(n)]
        else:
            continue
        for j in range(1, n - 2):
            if rows[p[0]] >> p[j + 1] & 1 and rows[p[j]] >> p[-1] & 1:
                cyc = [p[0]] + p[j + 1:] + p[j:0:-1]
                break
        else:
            return None
    if not is_hamiltonian_cycle(g, cyc):
        return None
    return tuple(cyc)


@dataclass(frozen=True)
class ClosureHamiltonResult:
    answer: Answer
    cycle: Optional[tuple[int, ...]]
    closure: ClosureResult
    method: str
    n_minus_1_closure_complete: Optional[bool] = None
    reason: str = ""


def is_hamiltonian_via_closure(
    g: Graph, budget: int = DEFAULT_BUDGET, assume_two_tough: bool = False
) -> ClosureHamiltonResult:
    """Decide Hamiltonicity through the n-closure and return a cycle of ``g``.

    A complete n-closure is unwound from the trivial cycle of K_n.  Otherwise
    the closure (denser than ``g``) is searched and any cycle found is unwound;
    a negative search on the closure is a negative answer for ``g``.  With
    ``assume_two_tough`` an unresolved search falls back to the
    (n-1)-closure, which decides Hamiltonicity for 2-tough graphs.
    """
    if g.n < 3:
        raise TooSmall("Hamiltonian cycles need at least 3 vertices")
    cl = k_closure(g, g.n)
    n1 = k_closure(g, g.n - 1).is_complete if assume_two_tough else None
    if not is_connected(g):
        return ClosureHamiltonResult(Answer.NO, None, cl, "connectivity", n1, "disconnected")
    if cl.is_complete:
        cyc = unwind_closure_cycle(g, cl, range(g.n))
        assert cyc is not None, "closure unwinding failed on a complete n-closure"
        return ClosureHamiltonResult(Answer.YES, cyc, cl, "complete-closure", n1, f"{len(cl.added)} edges unwound")
    res = find_hamiltonian_cycle(cl.closed, budget)
    if res.answer is Answer.YES:
        cyc = unwind_closure_cycle(g, cl, res.cycle)
        assert cyc is not None, "closure unwinding failed"
        return ClosureHamiltonResult(Answer.YES, cyc, cl, "closure-search", n1, res.reason)
    if res.answer is Answer.NO:
        return ClosureHamiltonResult(Answer.NO, None, cl, "closure-search", n1, res.reason)
    if n1:
        return ClosureHamiltonResult(
            Answer.YES, None, cl, "n-1-closure", n1, "(n-1)-closure complete; relies on 2-toughness"
        )
    return ClosureHamiltonResult(Answer.UNKNOWN, None, cl, "closure-search", n1, res.reason)


def _cycle_of_length(rows: tuple[int, ...], n: int, length: int, budget: _Budget) -> Optional[list[int]]:
    """Exhaustive search for a cycle on exactly ``length`` vertices.

    Each cycle is looked for from its smallest vertex, using only larger
    vertices, so restarting per anchor covers every cycle exactly once per
    direction.
    """
    for anchor in range(n):
        allowed = ((1 << n) - 1) & ~((1 << (anchor + 1)) - 1)
        if allowed.bit_count() + 1 < length:
            break
        if (rows[anchor] & allowed).bit_count() < 2:
            continue
        path = [anchor]

        def extend(v: int, avail: int) -> bool:
            need = length - len(path)
            if need == 0:
                return bool(rows[v] >> anchor & 1)
            budget.tick()
            # vertices still reachable from v must supply the rest of the cycle
            reach = 0
            frontier = rows[v] & avail
            while frontier:
                reach |= frontier
                nxt = 0
                for u in bits(frontier):
                    nxt |= rows[u]
                frontier = nxt & avail & ~reach
            if reach.bit_count() < need or not rows[anchor] & reach:
                return False
            for u in bits(rows[v] & avail):
                if need == 1 and not rows[u] >> anchor & 1:
                    continue
                path.append(u)
                if extend(u, avail & ~(1 << u)):
                    return True
                path.pop()
            return False

        if extend(anchor, allowed):
            return path
    return None


@dataclass(frozen=True)
class CycleSpectrum:
    n: int
    present: frozenset[int]
    absent: frozenset[int]
    unresolved: frozenset[int]
    bipartite: bool
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def exact(self) -> bool:
        return not self.unresolved

    @property
    def status(self) -> str:
        return "exact" if self.exact else "budget_exhausted"

    @property
    def hamiltonian(self) -> Answer:
        return _membership(self, self.n)

    @property
    def pancyclic(self) -> Answer:
        if self.n < 3:
            return Answer.NO
        if self.absent:
            return Answer.NO
        return Answer.YES if not self.unresolved else Answer.UNKNOWN


def _membership(spec: CycleSpectrum, length: int) -> Answer:
    if length in spec.present:
        return Answer.YES
    if length in spec.absent or spec.n < 3:
        return Answer.NO
    return Answer.UNKNOWN


def cycle_spectrum(g: Graph, budget: int = DEFAULT_BUDGET, use_parity: bool = True) -> CycleSpectrum:
    """Exact set of cycle lengths 3..n present in ``g``.

    The budget is divided evenly over the lengths.  With ``use_parity`` odd
    lengths of a bipartite graph are marked absent without searching.
    """
    n = g.n
    bip = is_bipartite(g) is not None
    present, absent, unresolved = set(), set(), set()
    witnesses = {}
    lengths = list(range(3, n + 1))
    if not lengths:
        return CycleSpectrum(n, frozenset(), frozenset(), frozenset(), bip)
    _with_recursion(n)
    share = max(1, budget // len(lengths))
    for length in lengths:
        if use_parity and bip and length % 2:
            absent.add(length)
            continue
        state = _Budget(share)
        try:
            found = _cycle_of_length(g.rows, n, length, state)
        except _OutOfBudget:
            unresolved.add(length)
            continue
        if found is None:
            absent.add(length)
        else:
            assert is_cycle_in(g, found) and len(found) == length
            present.add(length)
            witnesses[length] = tuple(found)
    return CycleSpectrum(n, frozenset(present), frozenset(absent), frozenset(unresolved), bip, witnesses)


@dataclass(frozen=True)
class Conclusion:
    hamiltonian: Answer
    pancyclic: Answer
    bipartite: bool

    def as_json(self):
        return {"hamiltonian": str(self.hamiltonian), "pancyclic": str(self.pancyclic), "bipartite": self.bipartite}


def classify_conclusion(g: Graph, budget: int = DEFAULT_BUDGET) -> Conclusion:
    """Exact (hamiltonian, pancyclic, bipartite) triple, closure-assisted."""
    bip = is_bipartite(g) is not None
    if g.n < 3:
        return Conclusion(Answer.NO, Answer.NO, bip)
    ham = is_hamiltonian_via_closure(g, budget).answer
    if ham is Answer.NO:
        return Conclusion(Answer.NO, Answer.NO, bip)
    if bip:
        # no triangle in a bipartite graph
        return Conclusion(ham, Answer.NO, bip)
    spec = cycle_spectrum(g, budget)
    return Conclusion(ham, spec.pancyclic, bip)
