"""Command-line harness: corpus scans, lemma suites, family checks and
random sampling, all emitting JSON lines.

Exit codes: 0 success, 1 input/format error, 2 an implied conclusion was
contradicted by an exact check.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, TextIO

from .answers import Answer
from .closure import corollary26_gap, k_closure, lemma27_condition
from .cycles import DEFAULT_BUDGET, classify_conclusion, cycle_spectrum, find_hamiltonian_cycle, is_hamiltonian_via_closure
from .errors import FormatError, GraphError
from .graph import Graph, degree_sequence, from_edges, is_bipartite, is_connected
from .graph6 import decode_graph6, encode_graph6
from .spectra import adjacency_spectral_radius, lemma_bounds_report, signless_laplacian_spectral_radius, spectral_summary
from .theorems import (
    CORES,
    ConditionCheck,
    TheoremQuery,
    check_theorems,
    construct_family,
    evaluate_conditions,
    claimed_hamiltonian,
    sequence_predicate_report,
    threshold_size,
)
from .toughness import DEFAULT_LIMIT, toughness_exact

SCHEMA_VERSION = 1
log = logging.getLogger("toughcycles")


@dataclass(frozen=True)
class ScanOptions:
    t: int = 4
    lemmas: bool = False
    verdict: bool = False
    verify_conclusion: bool = False
    tough_limit: int = DEFAULT_LIMIT
    budget: int = DEFAULT_BUDGET


def _dumps(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def implication_chain(g: Graph, conditions: dict, t: int) -> dict:
    """Each spectral condition that holds must come with m >= the size threshold."""
    if g.n <= 2 * t:
        return {"skipped": f"n={g.n} <= 2t"}
    need = threshold_size(g.n, t)
    out = {"size_threshold": need, "violations": []}
    for name in ("spectral", "signless_laplacian", "distance", "distance_signless_laplacian"):
        c = conditions.get(name)
        if isinstance(c, ConditionCheck) and c.holds and g.m < need:
            out["violations"].append(name)
    return out


def scan_record(index: int, line: str, g: Graph, opts: ScanOptions) -> dict:
    connected = is_connected(g)
    ds = degree_sequence(g)
    rec: dict = {
        "schema_version": SCHEMA_VERSION,
        "index": index,
        "graph6": line,
        "invariants": {
            "n": g.n,
            "m": g.m,
            "min_degree": ds.min,
            "max_degree": ds.max,
            "degree_sequence": str(ds),
            "bipartite": is_bipartite(g) is not None,
            "connected": connected,
        },
    }
    summary = None
    if connected:
        summary = spectral_summary(g)
        rec["spectral"] = summary.as_json()
    else:
        rec["spectral"] = {
            "lambda1_A": adjacency_spectral_radius(g),
            "q1": signless_laplacian_spectral_radius(g),
            "skipped": "disconnected: distance quantities undefined",
        }

    if not connected:
        rec["toughness"] = {"skipped": "disconnected"}
    elif g.n > opts.tough_limit and not g.is_complete():
        rec["toughness"] = {"skipped": f"n={g.n} > tough-limit {opts.tough_limit}"}
    else:
        rec["toughness"] = toughness_exact(g, opts.tough_limit).as_json()

    if opts.verdict:
        query = TheoremQuery(opts.t, verify_conclusion=opts.verify_conclusion, budget=opts.budget, tough_limit=opts.tough_limit)
        verdict = check_theorems(g, query, summary)
        rec["verdict"] = verdict.as_json()
        conditions = verdict.conditions
    else:
        conditions = evaluate_conditions(g, opts.t, summary)
        rec["conditions"] = {k: v.as_json() for k, v in conditions.items()}
        if opts.verify_conclusion:
            rec["observed"] = classify_conclusion(g, opts.budget).as_json() if connected and g.n >= 3 else {
                "skipped": "disconnected or n < 3"
            }
    rec["implication_chain"] = implication_chain(g, conditions, opts.t) if connected else {"skipped": "disconnected"}

    if opts.lemmas:
        rec["lemma_report"] = lemma_bounds_report(g, summary).as_json() if connected else {"skipped": "disconnected"}
    return rec


def _scan_one(item: tuple[int, str, ScanOptions]) -> dict:
    index, line, opts = item
    try:
        g = decode_graph6(line)
    except FormatError as exc:
        return {"schema_version": SCHEMA_VERSION, "index": index, "graph6": line, "error": str(exc), "offset": exc.offset}
    return scan_record(index, line, g, opts)


def scan_lines(lines: Iterable[str], opts: ScanOptions, workers: int = 1) -> Iterator[dict]:
    """Scan records in input order; blank lines are ignored.

    With ``workers > 1`` records are computed in a process pool and
    re-sequenced to input order.
    """
    items = ((i, line, opts) for i, line in enumerate(l.strip() for l in lines if l.strip()))
    if workers <= 1:
        yield from map(_scan_one, items)
        return
    with ProcessPoolExecutor(workers) as pool:
        yield from pool.map(_scan_one, items, chunksize=64)


def _emit(records: Iterable[dict], out: TextIO, strict: bool) -> int:
    code = 0
    for rec in records:
        out.write(_dumps(rec) + "\n")
        if "error" in rec:
            code = max(code, 1)
            if strict:
                return 1
        verdict = rec.get("verdict")
        if rec.get("consistent") is False or (verdict is not None and not verdict["consistent"]):
            code = 2
    return code


# -- lemma verification ----------------------------------------------------


def is_star(g: Graph) -> bool:
    if g.n < 2 or g.m != g.n - 1:
        return False
    return sorted(g.degrees()) == [1] * (g.n - 1) + [g.n - 1]


def verify_lemmas(graphs: Iterable[tuple[str, Graph]], budget: int = DEFAULT_BUDGET) -> dict:
    """Run the bound and closure/cycle instance suites over a corpus of connected graphs."""
    bounds = {name: {"checked": 0, "violations": [], "equality": []} for name in ("lemma_3_1", "lemma_3_2", "lemma_3_3", "lemma_3_4")}
    floors = {"checked": 0, "violations": []}
    char = {"lemma_3_1": [], "lemma_3_2": [], "lemma_3_4": []}
    closure = {"checked": 0, "disagreements": [], "unknown": []}
    pancyclic = {"hypothesis_met": 0, "exceptions": [], "unknown": []}
    delta = {"checked": 0, "violations": []}
    total = 0
    for line, g in graphs:
        if not is_connected(g):
            continue
        total += 1
        summary = spectral_summary(g)
        report = lemma_bounds_report(g, summary)
        special = g.is_complete() or is_star(g)
        for key, check in (
            ("lemma_3_1", report.adjacency),
            ("lemma_3_2", report.signless_laplacian),
            ("lemma_3_3", report.distance),
            ("lemma_3_4", report.distance_signless_laplacian),
        ):
            if check is None:
                continue
            bounds[key]["checked"] += 1
            if not check.holds:
                bounds[key]["violations"].append(line)
            if check.equality:
                bounds[key]["equality"].append(line)
        for key, check in (("lemma_3_1", report.adjacency), ("lemma_3_2", report.signless_laplacian)):
            if check is not None and check.equality != special:
                char[key].append(line)
        if report.distance_signless_laplacian.equality != summary.transmission_regular:
            char["lemma_3_4"].append(line)
        floors["checked"] += 1
        if not (report.transmission_floor_ok and report.wiener_floor[0] >= report.wiener_floor[1]):
            floors["violations"].append(line)

        if not g.is_complete():
            tau = toughness_exact(g)
            delta["checked"] += 1
            if g.min_degree() < 2 * tau.value:
                delta["violations"].append(line)

        if g.n >= 3:
            closure["checked"] += 1
            a = find_hamiltonian_cycle(g, budget).answer
            b = find_hamiltonian_cycle(k_closure(g, g.n).closed, budget).answer
            if Answer.UNKNOWN in (a, b):
                closure["unknown"].append(line)
            elif a is not b:
                closure["disagreements"].append(line)
            if a is Answer.YES and lemma27_condition(g):
                pancyclic["hypothesis_met"] += 1
                p = cycle_spectrum(g, budget).pancyclic
                if p is Answer.NO:
                    pancyclic["exceptions"].append(line)
                elif p is Answer.UNKNOWN:
                    pancyclic["unknown"].append(line)

    ok = (
        all(not b["violations"] for b in bounds.values())
        and not any(char.values())
        and not floors["violations"]
        and not delta["violations"]
        and not closure["disagreements"]
        and not closure["unknown"]
        and not pancyclic["exceptions"]
        and not pancyclic["unknown"]
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "graphs": total,
        "bounds": {k: {"checked": v["checked"], "violations": v["violations"], "equality_count": len(v["equality"]), "equality": v["equality"]} for k, v in bounds.items()},
        "equality_characterization_mismatches": char,
        "transmission_and_wiener_floors": floors,
        "min_degree_vs_toughness": delta,
        "closure_equivalence": closure,
        "dense_hamiltonian_pancyclic": pancyclic,
        "ok": ok,
    }


# -- families --------------------------------------------------------------


def family_record(fam, t: int, budget: int, claim: Optional[bool] = None) -> dict:
    g = fam.graph
    ham = is_hamiltonian_via_closure(g, budget)
    rec = {
        "schema_version": SCHEMA_VERSION,
        "family": fam.label,
        "params": fam.params,
        "n": g.n,
        "m": g.m,
        "degree_sequence": str(degree_sequence(g)),
        "hamiltonian": str(ham.answer),
        "method": ham.method,
        "reason": ham.reason,
    }
    if ham.cycle is not None:
        rec["cycle"] = list(ham.cycle)
    if ham.answer is Answer.NO:
        res = find_hamiltonian_cycle(g, budget)
        if res.cut is not None:
            rec["scattering_cut"] = {"S": list(res.cut), "size": len(res.cut)}
    if ham.answer is Answer.YES:
        rec["conclusion"] = classify_conclusion(g, budget).as_json()
    rec["predicate_P"] = sequence_predicate_report(degree_sequence(g), t)
    gap = corollary26_gap(g)
    rec["low_degree_nonadjacent_pair"] = list(gap) if gap else None
    rec["lemma27_condition"] = lemma27_condition(g)
    rec["conditions"] = {k: v.as_json() for k, v in evaluate_conditions(g, t).items()}
    if claim is not None:
        rec["claimed_hamiltonian"] = claim
        rec["consistent"] = not (claim and ham.answer is Answer.NO)
    return rec


def family_records(t: int, n_min: int, n_max: int, budget: int) -> Iterator[dict]:
    for n in range(n_min, n_max + 1):
        for i in range(4, n - 7):
            for core in CORES:
                if i > 8 and core != "8K1":
                    continue
                fam = construct_family("join_family", i=i, n=n, core=core)
                yield family_record(fam, t, budget, claimed_hamiltonian(i, core))
        try:
            fam = construct_family("extremal_seq", t=t, n=n, variant="case11")
        except GraphError as exc:
            yield {"schema_version": SCHEMA_VERSION, "family": f"extremal case11 t={t} n={n}", "skipped": str(exc)}
        else:
            yield family_record(fam, t, budget)
        if n % 2 == 0:
            yield family_record(construct_family("balanced_bipartite", n=n), t, budget)
    try:
        fam = construct_family("extremal_seq", t=t, n=10 * t - 1, variant="case12")
    except GraphError as exc:
        yield {"schema_version": SCHEMA_VERSION, "family": f"extremal case12 t={t}", "skipped": str(exc)}
    else:
        yield family_record(fam, t, budget)


# -- random sampling -------------------------------------------------------


def random_graphs(n: int, count: int, seed: int, p: Optional[float] = None, m: Optional[int] = None) -> Iterator[Graph]:
    """Seeded G(n, p) or G(n, m) samples."""
    if (p is None) == (m is None):
        raise ValueError("give exactly one of p or m")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    if m is not None and not 0 <= m <= len(pairs):
        raise ValueError(f"m={m} outside [0, {len(pairs)}]")
    if p is not None and not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    for _ in range(count):
        if p is not None:
            edges = [e for e in pairs if rng.random() < p]
        else:
            edges = rng.sample(pairs, m)
        yield from_edges(n, edges)


def random_records(n, count, seed, opts: ScanOptions, p=None, m=None) -> Iterator[dict]:
    for i, g in enumerate(random_graphs(n, count, seed, p, m)):
        line = encode_graph6(g)
        yield scan_record(i, line, g, opts)


# -- CLI -------------------------------------------------------------------


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--t", type=int, default=4, help="toughness parameter (default 4)")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node-expansion cap")
    sp.add_argument("--out", help="write JSON lines here instead of stdout")


def _add_scan_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--lemmas", action="store_true", help="include radius-bound report")
    sp.add_argument("--verdict", action="store_true", help="include full theorem verdict")
    sp.add_argument("--verify-conclusion", action="store_true", help="check Hamiltonicity/pancyclicity exactly")
    sp.add_argument("--tough-limit", type=int, default=DEFAULT_LIMIT, help="largest order for exact toughness")
    sp.add_argument("--strict", action="store_true", help="stop at the first malformed line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toughcycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("scan", help="scan graph6 lines")
    sp.add_argument("input", nargs="?", default="-", help="graph6 file (default stdin)")
    _add_common(sp)
    _add_scan_flags(sp)

    sp = sub.add_parser("verify-lemmas", help="run lemma suites over a graph6 corpus")
    sp.add_argument("max_n", type=int)
    sp.add_argument("corpus")
    _add_common(sp)

    sp = sub.add_parser("families", help="build and check the extremal and join families")
    sp.add_argument("n_min", type=int)
    sp.add_argument("n_max", type=int)
    _add_common(sp)

    sp = sub.add_parser("random", help="scan seeded random graphs")
    sp.add_argument("n", type=int)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=float, help="edge probability")
    group.add_argument("--m", type=int, help="exact edge count")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--seed", type=int, required=True)
    _add_common(sp)
    _add_scan_flags(sp)
    return parser


def _scan_options(args) -> ScanOptions:
    return ScanOptions(args.t, args.lemmas, args.verdict, args.verify_conclusion, args.tough_limit, args.budget)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    if args.t < 1:
        log.error("--t must be at least 1")
        return 1
    try:
        out = open(args.out, "w") if args.out else sys.stdout
    except OSError as exc:
        log.error("cannot open output: %s", exc)
        return 1
    try:
        if args.command == "scan":
            try:
                src = sys.stdin if args.input == "-" else open(args.input)
            except OSError as exc:
                log.error("cannot read input: %s", exc)
                return 1
            with src:
                return _emit(scan_lines(src, _scan_options(args)), out, args.strict)

        if args.command == "verify-lemmas":
            try:
                with open(args.corpus) as fh:
                    lines = [l.strip() for l in fh if l.strip()]
            except OSError as exc:
                log.error("cannot read corpus: %s", exc)
                return 1
            try:
                graphs = [(l, decode_graph6(l)) for l in lines]
            except FormatError as exc:
                log.error("corpus line is not graph6: %s", exc)
                return 1
            graphs = [(l, g) for l, g in graphs if g.n <= args.max_n]
            summary = verify_lemmas(graphs, args.budget)
            out.write(json.dumps(summary, indent=1) + "\n")
            return 0 if summary["ok"] else 2

        if args.command == "families":
            return _emit(family_records(args.t, args.n_min, args.n_max, args.budget), out, False)

        if args.command == "random":
            try:
                records = random_records(args.n, args.count, args.seed, _scan_options(args), p=args.p, m=args.m)
                return _emit(records, out, args.strict)
            except (ValueError, GraphError) as exc:
                log.error("%s", exc)
                return 1
    finally:
        if out is not sys.stdout:
            out.close()
    return 1
