"""Exact toughness by vertex-cut enumeration.

All ratios are kept as exact fractions.  Cuts are enumerated by increasing
size; since removing ``s`` vertices leaves at most ``n - s`` components, no
cut of size ``s`` can beat ratio ``s / (n - s)``, which ends the scan early.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .answers import Answer
from .errors import BudgetExceeded, InvalidParameter, NotConnected
from .graph import Graph, bits, count_components, is_connected

DEFAULT_LIMIT = 24
DEFAULT_DECISION_BUDGET = 250_000

Rational = Union[int, Fraction, str]


@dataclass(frozen=True)
class CutCertificate:
    S: tuple[int, ...]
    pieces: int

    def ratio(self) -> Fraction:
        return Fraction(len(self.S), self.pieces)


@dataclass(frozen=True)
class Toughness:
    value: Union[Fraction, float]  # math.inf for complete graphs
    witness: Optional[CutCertificate]

    @property
    def is_infinite(self) -> bool:
        return self.value == math.inf

    def as_json(self):
        if self.is_infinite:
            return {"value": "inf", "witness": None}
        return {
            "value": str(self.value),
            "witness": {"S": list(self.witness.S), "pieces": self.witness.pieces},
        }


@dataclass(frozen=True)
class ToughnessDecision:
    answer: Answer
    certificate: Optional[CutCertificate] = None
    reason: str = ""


def subsets_of_size(n: int, s: int) -> Iterator[int]:
    """All ``s``-subsets of ``range(n)`` as bitmasks, in increasing numeric order."""
    if s == 0:
        yield 0
        return
    x = (1 << s) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def _mask_tuple(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("toughness is only defined for connected graphs")


def toughness_exact(g: Graph, limit: int = DEFAULT_LIMIT) -> Toughness:
    """Minimum of ``|S| / c(G - S)`` over all cuts, with a minimising cut."""
    _require_connected(g)
    if g.is_complete():
        return Toughness(math.inf, None)
    n = g.n
    if n > limit:
        raise BudgetExceeded(f"n={n} exceeds exhaustive limit {limit}")
    rows = g.rows
    full = g.full_mask
    best_num, best_den, best_mask = 0, 0, 0
    for s in range(1, n - 1):
        # s/(n-s) >= best: nothing of this size or larger can win
        if best_den and s * best_den >= best_num * (n - s):
            break
        for S in subsets_of_size(n, s):
            c = count_components(rows, full & ~S)
            if c >= 2 and (not best_den or s * best_den < best_num * c):
                best_num, best_den, best_mask = s, c, S
    return Toughness(Fraction(best_num, best_den), CutCertificate(_mask_tuple(best_mask), best_den))


def _seed_cuts(g: Graph) -> Iterator[int]:
    """Cheap candidate cuts: open neighbourhoods of non-universal vertices."""
    full = g.full_mask
    for v in range(g.n):
        nb = g.rows[v]
        if nb | (1 << v) != full:
            yield nb
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.rows[u] >> v & 1:
                S = (g.rows[u] | g.rows[v]) & ~((1 << u) | (1 << v))
                if S | (1 << u) | (1 << v) != full:
                    yield S


def is_t_tough(
    g: Graph,
    t: Rational,
    limit: int = DEFAULT_LIMIT,
    budget: int = DEFAULT_DECISION_BUDGET,
) -> ToughnessDecision:
    """Decide whether ``t * c(G - S) <= |S|`` for every cut ``S``.

    Up to ``limit`` vertices the search is exhaustive.  Above it the same scan
    runs with a cap of ``budget`` examined subsets and answers UNKNOWN if the
    cap is hit before the size bound closes the search.
    """
    t = Fraction(t)
    if t <= 0:
        raise InvalidParameter("t must be positive")
    _require_connected(g)
    if g.is_complete():
        return ToughnessDecision(Answer.YES, reason="complete graph has no vertex cut")
    n = g.n
    rows = g.rows
    full = g.full_mask

    def violates(S: int) -> Optional[CutCertificate]:
        c = count_components(rows, full & ~S)
        if c >= 2 and t * c > S.bit_count():
            return CutCertificate(_mask_tuple(S), c)
        return None

    for S in _seed_cuts(g):
        cert = violates(S)
        if cert is not None:
            return ToughnessDecision(Answer.NO, cert, "violating cut among neighbourhood seeds")

    bounded = n > limit
    examined = 0
    for s in range(1, n - 1):
        if t * (n - s) <= s:
            break
        for S in subsets_of_size(n, s):
            examined += 1
            if bounded and examined > budget:
                return ToughnessDecision(
                    Answer.UNKNOWN, reason=f"budget of {budget} subsets exhausted at |S|={s}, n={n} > limit {limit}"
                )
            cert = violates(S)
            if cert is not None:
                return ToughnessDecision(Answer.NO, cert, f"violating cut of size {s}")
    return ToughnessDecision(Answer.YES, reason="no cut violates the ratio")
