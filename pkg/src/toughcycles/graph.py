"""Simple undirected graphs stored as rows of neighbour bitmasks.

Row ``i`` of a :class:`Graph` is a Python integer whose bit ``j`` is set when
``i`` and ``j`` are adjacent.  Graphs are immutable; every constructor and
operator returns a fresh value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import groupby
from typing import Iterable, Optional

from .errors import FormatError, InvalidParameter, InvalidVertex, LoopRejected, TooLarge

MAX_ORDER = 512


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    m: int = field(compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise TooLarge(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.rows) != self.n:
            raise InvalidParameter("row count does not match order")

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        m = sum(r.bit_count() for r in rows) // 2
        return cls(len(rows), rows, m)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.rows):
            out.extend((u, v) for v in bits(row >> (u + 1) << (u + 1)))
        return out

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def check(self) -> None:
        """Assert symmetry, loop-freeness and the cached edge count."""
        for i, row in enumerate(self.rows):
            assert not row >> i & 1, f"loop at {i}"
            assert row >> self.n == 0, f"row {i} has bits beyond n"
            for j in bits(row):
                assert self.rows[j] >> i & 1, f"asymmetric pair {i},{j}"
        assert self.m == sum(r.bit_count() for r in self.rows) // 2

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(sum(1 << index[u] for u in bits(self.rows[v]) if u in index))
        return Graph.from_rows(rows)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in extra:
            _check_pair(self.n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph.from_rows(rows)

    def without_vertices(self, mask: int) -> "Graph":
        return self.induced(v for v in range(self.n) if not mask >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidVertex(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
    if u == v:
        raise LoopRejected(f"self-loop at vertex {u}")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the given edges.

    Repeated pairs collapse to a single edge; loops are rejected.
    """
    if not 1 <= n <= MAX_ORDER:
        raise TooLarge(f"order {n} outside [1, {MAX_ORDER}]")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.from_rows(rows)


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph.from_rows(full ^ (1 << i) for i in range(n))


def edgeless(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter("edgeless graph needs n >= 1")
    return Graph.from_rows([0] * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameter("complete bipartite graph needs positive sides")
    return join(edgeless(a), edgeless(b))


def star(n: int) -> Graph:
    """K_{1,n-1}; vertex 0 is the centre."""
    if n < 2:
        raise InvalidParameter("star needs n >= 2")
    return complete_bipartite(1, n - 1)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def construct_named(kind: str, *params: int) -> Graph:
    """Build ``complete n``, ``cycle n``, ``complete_bipartite a b`` or ``edgeless n``."""
    builders = {
        "complete": (complete, 1),
        "cycle": (cycle, 1),
        "complete_bipartite": (complete_bipartite, 2),
        "edgeless": (edgeless, 1),
        "path": (path, 1),
        "star": (star, 1),
    }
    if kind not in builders:
        raise InvalidParameter(f"unknown graph kind {kind!r}")
    fn, arity = builders[kind]
    if len(params) != arity:
        raise InvalidParameter(f"{kind} takes {arity} parameter(s)")
    return fn(*params)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_ORDER:
        raise TooLarge(f"union order {g1.n + g2.n} exceeds {MAX_ORDER}")
    shift = g1.n
    return Graph(g1.n + g2.n, g1.rows + tuple(r << shift for r in g2.rows), g1.m + g2.m)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    if g1.n + g2.n > MAX_ORDER:
        raise TooLarge(f"join order {g1.n + g2.n} exceeds {MAX_ORDER}")
    shift = g1.n
    left_all = (1 << g1.n) - 1
    right_all = ((1 << g2.n) - 1) << shift
    rows = tuple(r | right_all for r in g1.rows) + tuple((r << shift) | left_all for r in g2.rows)
    return Graph(g1.n + g2.n, rows, g1.m + g2.m + g1.n * g2.n)


def union_many(*graphs: Graph) -> Graph:
    out = graphs[0]
    for g in graphs[1:]:
        out = disjoint_union(out, g)
    return out


def copies(g: Graph, k: int) -> Graph:
    """``k`` disjoint copies of ``g``."""
    if k < 1:
        raise InvalidParameter("need at least one copy")
    return union_many(*([g] * k))


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self):
        if list(self.degrees) != sorted(self.degrees):
            raise InvalidParameter("degree sequence must be nondecreasing")

    @classmethod
    def of(cls, values: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(sorted(values)))

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> "DegreeSequence":
        """Expand ``(value, multiplicity)`` pairs, e.g. ``[(19, 24), (38, 15)]``."""
        return cls.of(v for v, count in runs for _ in range(count))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def runs(self) -> list[tuple[int, int]]:
        return [(k, len(list(grp))) for k, grp in groupby(self.degrees)]

    @property
    def min(self) -> int:
        return self.degrees[0]

    @property
    def max(self) -> int:
        return self.degrees[-1]

    def d(self, i: int) -> int:
        """1-based access matching the usual d_1 <= ... <= d_n notation."""
        return self.degrees[i - 1]

    def total(self) -> int:
        return sum(self.degrees)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{k}^{x}" for k, x in self.runs) + ")"


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence.of(g.degrees())


def component_labels(g: Graph, mask: Optional[int] = None) -> tuple[int, list[int]]:
    """Count components of the subgraph induced by ``mask`` (default: all vertices).

    Returns ``(count, labels)``; vertices outside the mask get label ``-1``.
    """
    if mask is None:
        mask = g.full_mask
    labels = [-1] * g.n
    count = 0
    remaining = mask
    rows = g.rows
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= rows[v]
            grow &= mask & ~comp
            comp |= grow
            frontier = grow
        for v in bits(comp):
            labels[v] = count
        count += 1
        remaining &= ~comp
    return count, labels


def count_components(rows: tuple[int, ...] | list[int], mask: int) -> int:
    """Number of components induced by ``mask``; the hot loop of toughness search."""
    count = 0
    while mask:
        comp = mask & -mask
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = rows[low.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        mask &= ~comp
        count += 1
    return count


def components(g: Graph) -> tuple[int, list[int]]:
    return component_labels(g)


def is_connected(g: Graph) -> bool:
    return count_components(g.rows, g.full_mask) == 1


def is_bipartite(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """BFS 2-colouring; returns sides ``(X, Y)`` or ``None`` if an odd cycle exists."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.rows[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    xs = [v for v in range(g.n) if colour[v] == 0]
    ys = [v for v in range(g.n) if colour[v] == 1]
    return xs, ys


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``-1``."""
    dist = [-1] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n\\nu v\\n..."``; blank lines and ``#`` comments are ignored."""
    lines = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((offset, stripped))
        offset += len(raw.encode())
    if not lines:
        raise FormatError("empty edge list", 0)
    pos, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise FormatError(f"bad vertex count {head!r}", pos) from None
    edges = []
    for pos, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected two endpoints, got {line!r}", pos)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"non-integer endpoint in {line!r}", pos) from None
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"
