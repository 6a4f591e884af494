"""Verification suites: exhaustive property checks over desk-scale corpora.

Each suite sweeps the stacked-triangulation corpus (plus any supplied
planar_code files) and checks one of the theory's guarantees on every
instance.  A suite report carries counts and concrete witnesses for any
failure; an empty failure list is the PASS criterion.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .coloring import (
    EdgeColoring,
    RGB,
    exists_4coloring,
    induce_edge_coloring,
    is_proper,
    enumerate_4colorings,
)
from .errors import CorpusMissing
from .kempe import apply_ecs, rings_of
from .planar import (
    Host,
    generate_stacked,
    parse_planar_code,
    remove_edge,
    single_triangle,
)
from .tiling import (
    GrandWitness,
    boundary_signature,
    check_tiling,
    classify_diamond,
    enumerate_tilings,
    is_grand,
    mono_odd_cycle,
)

SUITES = ("one-piece", "equivalence", "parity", "induced-diamond", "ecs")


@dataclass
class SuiteReport:
    suite: str
    graphs: int = 0
    tilings: int = 0
    checks: int = 0
    seconds: float = 0.0
    warnings: list[str] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, detail: str, witness=None) -> None:
        self.failures.append({"detail": detail, "witness": witness})

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "status": "PASS" if self.passed else "FAIL",
            "graphs": self.graphs,
            "tilings": self.tilings,
            "checks": self.checks,
            "seconds": round(self.seconds, 3),
            "warnings": self.warnings,
            "failures": self.failures,
        }


def corpus_hosts(
    max_n: int, corpus: Sequence[str | Path] = (), report: SuiteReport | None = None
) -> list[Host]:
    """Stacked triangulations up to max_n plus any planar_code corpora."""
    hosts: list[Host] = []
    for n in range(4, max_n + 1):
        hosts.extend(generate_stacked(n))
    for path in corpus:
        p = Path(path)
        if not p.exists():
            if report is not None:
                report.warnings.append(
                    f"corpus file {p} missing; continuing with generator output"
                )
                continue
            raise CorpusMissing(str(p))
        for g in parse_planar_code(p.read_bytes()):
            if g.n <= max_n:
                hosts.append(g)
    return hosts


def run_suite(
    name: str,
    max_n: int = 8,
    corpus: Sequence[str | Path] = (),
    trials: int = 1000,
    seed: int = 2024,
) -> SuiteReport:
    report = SuiteReport(suite=name)
    t0 = time.time()
    if name == "one-piece":
        _suite_one_piece(report, max_n, corpus)
    elif name == "equivalence":
        _suite_equivalence(report, max_n, corpus)
    elif name == "parity":
        _suite_parity(report, max_n, corpus)
    elif name == "induced-diamond":
        _suite_induced_diamond(report, max_n, corpus)
    elif name == "ecs":
        _suite_ecs(report, max_n, corpus, trials, seed)
    else:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    report.seconds = time.time() - t0
    return report


def _suite_one_piece(report: SuiteReport, max_n: int, corpus) -> None:
    """Every R-tiling on every one-piece host splits into a grand partition."""
    hosts: list[Host] = corpus_hosts(max_n, corpus, report)
    hosts.append(single_triangle())
    for g in hosts:
        report.graphs += 1
        for t in enumerate_tilings(g, "r"):
            report.tilings += 1
            report.checks += 1
            w = is_grand(g, t)
            if not isinstance(w, GrandWitness):
                report.fail(
                    f"R-tiling not grand on {g.n}-vertex host: {w.reason}",
                    {"graph": g.to_json(), "tiling": t.to_json()},
                )


def _suite_equivalence(report: SuiteReport, max_n: int, corpus) -> None:
    """4-coloring, RGB-tiling and odd-cycle-free R-tiling exist together."""
    for g in corpus_hosts(max_n, corpus, report):
        report.graphs += 1
        has_vc = exists_4coloring(g)
        rgb_tilings = list(enumerate_tilings(g, "rgb"))
        has_rgb = bool(rgb_tilings)
        has_good_r = any(
            mono_odd_cycle(g, t, "r") is None for t in enumerate_tilings(g, "r")
        )
        report.checks += 3
        if not (has_vc == has_rgb == has_good_r):
            report.fail(
                f"equivalence broken on {g.n}-vertex host: "
                f"4col={has_vc} rgb={has_rgb} r-no-odd={has_good_r}",
                {"graph": g.to_json()},
            )
        for t in rgb_tilings:
            report.tilings += 1
            report.checks += 1
            from .coloring import induce_vertex_coloring

            vc = induce_vertex_coloring(g, t)
            if not is_proper(g, vc):
                report.fail(
                    "induced coloring improper",
                    {"graph": g.to_json(), "tiling": t.to_json()},
                )


def _suite_parity(report: SuiteReport, max_n: int, corpus) -> None:
    """Boundary signatures of all tilings of every M-e pass the parity law."""
    tri = single_triangle()
    for t in enumerate_tilings(tri, "rgb"):
        report.tilings += 1
        report.checks += 1
        sig = boundary_signature(tri, t, "rgb")
        if not sig.verdict or sig.triples[0].as_tuple() != (1, 1, 1):
            report.fail("single triangle signature != (1,1,1)", t.to_json())
    report.graphs += 1
    for g in corpus_hosts(max_n, corpus, report):
        report.graphs += 1
        for e in g.edges():
            q = remove_edge(g, e)
            for t in enumerate_tilings(q, "rgb"):
                report.tilings += 1
                report.checks += 1
                sig = boundary_signature(q, t, "rgb")
                bad_triple = any(x % 2 for x in sig.triples[-1].as_tuple())
                if not sig.verdict or bad_triple:
                    report.fail(
                        f"parity violated on {g.n}-vertex host minus {e}",
                        {"graph": g.to_json(), "tiling": t.to_json()},
                    )


def _suite_induced_diamond(report: SuiteReport, max_n: int, corpus) -> None:
    """Tilings induced from proper colorings restrict to C/D diamonds only."""
    for g in corpus_hosts(max_n, corpus, report):
        report.graphs += 1
        vc = next(enumerate_4colorings(g, limit=1), None)
        if vc is None:
            report.fail(f"{g.n}-vertex host has no 4-coloring", g.to_json())
            continue
        t = induce_edge_coloring(g, vc)
        report.tilings += 1
        for e in g.edges():
            q = remove_edge(g, e)
            restricted = EdgeColoring(
                {d: c for d, c in t.assignment.items() if d != e}
            )
            verdict = classify_diamond(q, restricted, e)
            report.checks += 1
            if verdict.verdict not in ("C", "D"):
                report.fail(
                    f"induced diamond at {e} is {verdict.verdict} on "
                    f"{g.n}-vertex host",
                    {"graph": g.to_json(), "surround": verdict.surround},
                )


def _suite_ecs(report: SuiteReport, max_n: int, corpus, trials: int, seed: int) -> None:
    """Random (host, tiling, ring) triples: involution, validity, locality."""
    rng = random.Random(seed)
    hosts = corpus_hosts(max_n, corpus, report)
    report.graphs = len(hosts)
    pool: list[tuple[Host, EdgeColoring]] = []
    for g in hosts:
        tilings = []
        for i, t in enumerate(enumerate_tilings(g, "rgb")):
            tilings.append(t)
            if i >= 20:
                break
        for t in tilings:
            pool.append((g, t))
    if not pool:
        report.fail("no RGB tilings available for sampling", None)
        return
    done = 0
    while done < trials:
        g, t = rng.choice(pool)
        color = rng.choice(RGB)
        rings = rings_of(g, t, color)
        if not rings:
            continue
        ring = rng.choice(rings)
        report.tilings += 1
        t2 = apply_ecs(g, t, ring)
        crossed = set(ring.edges())
        report.checks += 3
        if not check_tiling(g, t2, "rgb").ok:
            report.fail("ECS broke validity", ring.to_json())
        if any(
            t2[e] != t[e]
            for e in g.edges()
            if e not in crossed
        ):
            report.fail("ECS touched an off-ring edge", ring.to_json())
        if apply_ecs(g, t2, ring).key() != t.key():
            report.fail("ECS not an involution", ring.to_json())
        done += 1
