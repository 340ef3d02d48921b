"""Built-in self test: oracle equivalence plus reduced-bound inequality scans."""

from __future__ import annotations

from itertools import combinations
from random import Random

from .coloring_engine import ProfileCache, brute_force_profile, profile
from .graph_core import Graph, random_graph
from .inequality_verifier import INEQUALITY_IDS, prop7_sample_check, scan, summarize

EXHAUSTIVE_MAX_ORDER = 4
RANDOM_GRAPHS = 60
PROP7_TRIALS = 20


def _all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def run(seed: int = 12345, n_max: int = 12, p_max: int = 2) -> dict:
    """Run the suite and return a deterministic, JSON-ready report."""
    memo = ProfileCache()

    checked = mismatches = 0
    for n in range(EXHAUSTIVE_MAX_ORDER + 1):
        for g in _all_graphs(n):
            checked += 1
            if profile(g, memo) != brute_force_profile(g):
                mismatches += 1
    rng = Random(seed)
    random_checked = 0
    for i in range(RANDOM_GRAPHS):
        g = random_graph(5 + i % 4, rng)
        random_checked += 1
        if profile(g, memo) != brute_force_profile(g):
            mismatches += 1

    scans = []
    scan_reports = scan_violations = 0
    for id in INEQUALITY_IDS:
        reports = scan(id, n_max, p_max)
        summary = summarize(reports)
        scans.append(
            {"id": id, "reports": summary["reports"], "violations": summary["violations"]}
        )
        scan_reports += summary["reports"]
        scan_violations += summary["violations"]

    prop7_ok = prop7_sample_check(PROP7_TRIALS, seed)

    passed = (checked + random_checked - mismatches) + (scan_reports - scan_violations)
    failed = mismatches + scan_violations
    if prop7_ok:
        passed += PROP7_TRIALS
    else:
        failed += 1

    return {
        "seed": seed,
        "bounds": {"n_max": n_max, "p_max": p_max},
        "oracle": {
            "exhaustive_graphs": checked,
            "random_graphs": random_checked,
            "mismatches": mismatches,
        },
        "scans": scans,
        "mediant_trials": {"trials": PROP7_TRIALS, "all_strict": prop7_ok},
        "pass": passed,
        "fail": failed,
    }
