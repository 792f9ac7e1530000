"""Size and spectral sufficient conditions for tough graphs, plus the
extremal and join families that show how tight they are.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .answers import Answer
from .closure import predicate_P
from .cycles import DEFAULT_BUDGET, Conclusion, classify_conclusion
from .errors import InvalidParameter, NotRealizable
from .graph import (
    DegreeSequence,
    Graph,
    complete,
    complete_bipartite,
    copies,
    cycle,
    degree_sequence,
    disjoint_union,
    edgeless,
    is_connected,
    join,
)
from .spectra import spectral_summary
from .toughness import DEFAULT_LIMIT, is_t_tough

CONDITION_TOL = 1e-9
SCHEMA_NOTE_Q = "signless-Laplacian threshold uses (n^2-(4t+1)n+10t^2+2t)/(n-1)+n-2 (leading n^2, not 2n^2)"


def threshold_size(n: int, t: int) -> int:
    """Edge threshold C(n-2t, 2) + 3t^2."""
    if n <= 2 * t:
        raise InvalidParameter(f"size threshold needs n > 2t (n={n}, t={t})")
    return math.comb(n - 2 * t, 2) + 3 * t * t


@dataclass(frozen=True)
class Threshold:
    which: str
    value: float
    direction: str  # ">=" or "<="


def threshold_condition(which: str, n: int, t: int) -> Threshold:
    if n < 2:
        raise InvalidParameter("thresholds need n >= 2")
    if which == "spectral":
        return Threshold(which, math.sqrt(n * n - (4 * t + 2) * n + 10 * t * t + 2 * t + 1), ">=")
    if which == "q":
        return Threshold(which, (n * n - (4 * t + 1) * n + 10 * t * t + 2 * t) / (n - 1) + n - 2, ">=")
    if which == "distance":
        return Threshold(which, n + 4 * t - 1 - (10 * t * t + 2 * t) / n, "<=")
    if which == "dsl":
        return Threshold(which, 2 * n + 8 * t - 2 - (20 * t * t + 4 * t) / n, "<=")
    raise InvalidParameter(f"unknown threshold {which!r}")


@dataclass(frozen=True)
class ConditionCheck:
    name: str
    value: float
    bound: float
    direction: str
    margin: float  # >= 0 exactly when the condition holds (up to CONDITION_TOL for reals)
    holds: bool

    def as_json(self):
        return {
            "value": self.value,
            "bound": self.bound,
            "direction": self.direction,
            "margin": self.margin,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class Skipped:
    reason: str

    def as_json(self):
        return {"skipped": self.reason}


def _real_condition(name: str, value: float, th: Threshold) -> ConditionCheck:
    margin = value - th.value if th.direction == ">=" else th.value - value
    return ConditionCheck(name, value, th.value, th.direction, margin, margin >= -CONDITION_TOL)


def evaluate_conditions(g: Graph, t: int, summary=None) -> dict:
    """All five sufficient conditions for ``(g, t)`` with signed margins."""
    n, m = g.n, g.m
    out: dict = {}
    if n > 2 * t:
        ms = threshold_size(n, t)
        out["size"] = ConditionCheck("size", m, ms, ">=", m - ms, m >= ms)
    else:
        out["size"] = Skipped(f"n={n} <= 2t={2 * t}")
    connected = is_connected(g)
    if n < 2 or not connected:
        reason = "n < 2" if n < 2 else "disconnected"
        for name in ("spectral", "signless_laplacian", "distance", "distance_signless_laplacian"):
            out[name] = Skipped(reason)
        return out
    if summary is None:
        summary = spectral_summary(g)
    out["spectral"] = _real_condition("spectral", summary.lambda1_A, threshold_condition("spectral", n, t))
    out["signless_laplacian"] = _real_condition("signless_laplacian", summary.q1, threshold_condition("q", n, t))
    out["distance"] = _real_condition("distance", summary.lambda1_D, threshold_condition("distance", n, t))
    out["distance_signless_laplacian"] = _real_condition(
        "distance_signless_laplacian", summary.eta1, threshold_condition("dsl", n, t)
    )
    return out


@dataclass(frozen=True)
class TheoremQuery:
    t: int
    assume_tough: bool = False
    verify_conclusion: bool = False
    budget: int = DEFAULT_BUDGET
    tough_limit: int = DEFAULT_LIMIT

    def __post_init__(self):
        if self.t < 1:
            raise InvalidParameter("t must be at least 1")


@dataclass
class TheoremVerdict:
    n: int
    m: int
    t: int
    connected: bool
    order_ok: bool
    toughness: str  # yes / no / assumed / unknown / skipped
    toughness_detail: dict
    conditions: dict
    implied: Optional[dict]
    observed: Optional[Conclusion]
    consistent: bool
    notes: list = field(default_factory=list)

    @property
    def preconditions_pass(self) -> bool:
        return self.connected and self.order_ok and self.toughness in ("yes", "assumed")

    def any_condition(self) -> bool:
        return any(isinstance(c, ConditionCheck) and c.holds for c in self.conditions.values())

    def as_json(self):
        return {
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "preconditions": {
                "connected": self.connected,
                "order": {"holds": self.order_ok, "requires": f"n > {10 * self.t - 3}"},
                "toughness": self.toughness,
                "toughness_detail": self.toughness_detail,
            },
            "conditions": {k: v.as_json() for k, v in self.conditions.items()},
            "implied": self.implied,
            "observed": self.observed.as_json() if self.observed else None,
            "consistent": self.consistent,
            "notes": self.notes,
        }


def check_theorems(g: Graph, query: TheoremQuery, summary=None) -> TheoremVerdict:
    t = query.t
    connected = is_connected(g)
    order_ok = g.n > 10 * t - 3
    notes = [SCHEMA_NOTE_Q]
    if t < 4:
        notes.append("t in {1,2,3}: conclusion previously established (t=1, n>=7; t=2, n>=16; t=3, n>=28)")

    if not connected:
        tough, detail = "skipped", {"reason": "disconnected"}
    elif query.assume_tough:
        tough, detail = "assumed", {"reason": "caller asserted t-toughness"}
    else:
        dec = is_t_tough(g, t, limit=query.tough_limit)
        tough = str(dec.answer)
        detail = {"reason": dec.reason}
        if dec.certificate is not None:
            detail["cut"] = list(dec.certificate.S)
            detail["pieces"] = dec.certificate.pieces

    conditions = evaluate_conditions(g, t, summary)
    verdict = TheoremVerdict(g.n, g.m, t, connected, order_ok, tough, detail, conditions, None, None, True, notes)
    if verdict.preconditions_pass and verdict.any_condition():
        verdict.implied = {"hamiltonian": True, "pancyclic_or_bipartite": True}

    if query.verify_conclusion and connected and g.n >= 3:
        obs = classify_conclusion(g, query.budget)
        verdict.observed = obs
        if verdict.implied:
            if obs.hamiltonian is Answer.NO:
                verdict.consistent = False
            if obs.pancyclic is Answer.NO and not obs.bipartite:
                verdict.consistent = False
    return verdict


# -- degree sequences ------------------------------------------------------


def is_graphical(values: Sequence[int]) -> bool:
    """Erdos-Gallai test."""
    d = sorted(values, reverse=True)
    n = len(d)
    if any(x < 0 or x > n - 1 for x in d) or sum(d) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(x, k) for x in d[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def realize_degree_sequence(seq: Union[DegreeSequence, Sequence[int]]) -> Optional[Graph]:
    """Havel-Hakimi realization; vertex ``i`` receives degree ``seq[i]``.

    The vertex with the largest residual (lowest index on ties) is joined to
    the next-largest residuals.  Returns ``None`` for non-graphical input.
    """
    values = list(seq.degrees) if isinstance(seq, DegreeSequence) else list(seq)
    n = len(values)
    if n == 0 or not is_graphical(values):
        return None
    residual = values[:]
    rows = [0] * n
    while True:
        order = sorted((v for v in range(n) if residual[v] > 0), key=lambda v: (-residual[v], v))
        if not order:
            break
        head, rest = order[0], order[1:]
        need = residual[head]
        if need > len(rest):
            return None
        residual[head] = 0
        for u in rest[:need]:
            rows[head] |= 1 << u
            rows[u] |= 1 << head
            residual[u] -= 1
    g = Graph.from_rows(rows)
    assert g.degrees() == values
    return g


# -- families --------------------------------------------------------------

CORES = {
    "C8": lambda: cycle(8),
    "2C4": lambda: copies(cycle(4), 2),
    "4K2": lambda: copies(complete(2), 4),
    "8K1": lambda: edgeless(8),
}

# clique sizes paired with the cores whose joins are claimed Hamiltonian in the t=4 closure argument
CLAIMED_PAIRS = {
    4: ("C8", "2C4"),
    5: ("C8", "2C4", "4K2"),
    6: ("C8", "2C4", "4K2"),
    7: ("4K2",),
    8: ("8K1",),
}


def claimed_hamiltonian(i: int, core: str) -> bool:
    if i > 8:
        return core == "8K1"
    return core in CLAIMED_PAIRS.get(i, ())


@dataclass(frozen=True)
class Family:
    label: str
    graph: Graph
    params: dict
    expected_degrees: Optional[DegreeSequence] = None


def _join_family(i: int, n: int, core: str) -> Family:
    if core not in CORES:
        raise InvalidParameter(f"unknown core {core!r}")
    if i < 1:
        raise InvalidParameter("clique size must be positive")
    rest = n - 8 - i
    if rest < 0:
        raise InvalidParameter(f"n={n} too small for K_{i} v (K_{{n-8-i}} + {core})")
    inner = CORES[core]()
    if rest:
        inner = disjoint_union(complete(rest), inner)
    g = join(complete(i), inner)
    return Family(f"K{i} v (K{rest} + {core})", g, {"i": i, "n": n, "core": core})


def extremal_sequence(t: int, n: int, variant: str) -> DegreeSequence:
    if variant == "case11":
        if n - 3 * t < 1:
            raise InvalidParameter("case11 needs n > 3t")
        return DegreeSequence.from_runs([(2 * t, 2 * t), (n - 2 * t - 1, n - 3 * t), (n - 1, t)])
    if variant == "case12":
        if n != 10 * t - 1:
            raise InvalidParameter(f"case12 fixes n = 10t - 1 = {10 * t - 1}")
        return DegreeSequence.from_runs([(5 * t - 1, 6 * t), (10 * t - 2, 4 * t - 1)])
    raise InvalidParameter(f"unknown variant {variant!r}")


def _extremal_family(t: int, n: int, variant: str) -> Family:
    seq = extremal_sequence(t, n, variant)
    if variant == "case11":
        hubs = t
        block = [t] * (2 * t) + [n - 3 * t - 1] * (n - 3 * t)
    else:
        hubs = 4 * t - 1
        block = [t] * (6 * t)
    inner = realize_degree_sequence(block)
    if inner is None:
        raise NotRealizable(f"block sequence for {variant} at t={t}, n={n} is not graphical")
    g = join(complete(hubs), inner)
    assert degree_sequence(g) == seq
    return Family(f"extremal {variant} t={t} n={n} {seq}", g, {"t": t, "n": n, "variant": variant}, seq)


def construct_family(kind: str, **params) -> Family:
    """Build ``join_family`` (i, n, core), ``extremal_seq`` (t, n, variant) or
    ``balanced_bipartite`` (n)."""
    if kind == "join_family":
        return _join_family(params["i"], params["n"], params["core"])
    if kind == "extremal_seq":
        return _extremal_family(params["t"], params["n"], params["variant"])
    if kind == "balanced_bipartite":
        n = params["n"]
        if n < 2 or n % 2:
            raise InvalidParameter("balanced bipartite family needs even n >= 2")
        return Family(f"K{n // 2},{n // 2}", complete_bipartite(n // 2, n // 2), {"n": n})
    raise InvalidParameter(f"unknown family {kind!r}")


def sequence_predicate_report(seq: DegreeSequence, t: int) -> dict:
    res = predicate_P(seq, t)
    out = {"holds": res.holds}
    if res.witness:
        w = res.witness
        out["witness"] = {"k": w.k, "d_k": w.d_k, "d_n_minus_k_plus_t": w.d_shifted}
    return out
