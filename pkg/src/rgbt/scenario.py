"""Proof-replay scenarios: a region Sigma, pinned colors, exterior-skeleton
constraints, and a script of ECS / assertion steps.

The exterior of a scenario is never a concrete graph.  Everything the
surrounding structure is assumed to provide (Kempe chains between border
vertices, their length parities) enters as SkeletonConstraints, and every
transcript conclusion is conditional on those constraints; the provenance
notes of each builtin say where its construction comes from.

Scenario states may be partial: black edges stand for not-yet-committed
colors, and triangles touching them are exempt from validity checks until a
set_colors step fills them in.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coloring import BLACK, EdgeColoring, RGB, YELLOW
from .errors import (
    InconsistentFixedColors,
    MalformedWalk,
    ScenarioError,
    StepInapplicable,
)
from .kempe import CanalRing, apply_ecs
from .planar import Edge, SemiMpg, canon_edge, graph_from_faces, triangles_of
from .tiling import _face_edges, enumerate_tilings


@dataclass(frozen=True)
class SkeletonConstraint:
    """A fact about the abstract exterior: a chain between border vertices."""

    kind: str  # chain_exists | chain_absent | chain_parity
    color: str
    u: int
    v: int
    parity: str | None = None  # even | odd | None (unknown)

    def to_json(self, names: Mapping[int, str] | None = None) -> dict:
        nm = (lambda x: names[x]) if names else (lambda x: x)
        doc = {"kind": self.kind, "color": self.color, "u": nm(self.u), "v": nm(self.v)}
        if self.parity:
            doc["parity"] = self.parity
        return doc


@dataclass
class ScriptStep:
    kind: str
    args: dict = field(default_factory=dict)


@dataclass
class Scenario:
    name: str
    sigma: SemiMpg
    names: dict[str, int]
    fixed: EdgeColoring
    constraints: list[SkeletonConstraint] = field(default_factory=list)
    script: list[ScriptStep] = field(default_factory=list)
    notes: str = ""
    symmetries: list[list[int]] = field(default_factory=list)
    mode: str = "ergb"
    degrees: dict[int, int] = field(default_factory=dict)  # declared TD degrees

    @property
    def index_names(self) -> dict[int, str]:
        return {v: k for k, v in self.names.items()}

    def vertex(self, label) -> int:
        if isinstance(label, int):
            return label
        if label in self.names:
            return self.names[label]
        raise ScenarioError(f"unknown vertex label {label!r} in scenario {self.name}")

    def edge(self, spec) -> Edge:
        if isinstance(spec, str):
            a, b = spec.split("-")
            return canon_edge(self.vertex(a), self.vertex(b))
        u, v = spec
        return canon_edge(self.vertex(u), self.vertex(v))

    def boundary_edges(self) -> list[Edge]:
        return self.sigma.boundary_edges()


def _check_fixed(scn: Scenario) -> None:
    boundary = set(scn.boundary_edges())
    for e, c in scn.fixed.assignment.items():
        if not scn.sigma.has_edge(*e):
            raise InconsistentFixedColors(f"fixed color on non-edge {e}")
        if c == YELLOW and e in boundary:
            raise InconsistentFixedColors(f"yellow pinned on boundary edge {e}")


def scenario_from_json(doc: Mapping) -> Scenario:
    """Validated scenario from a JSON document (see builtin catalog for shape)."""
    names = {str(k): int(v) for k, v in doc.get("names", {}).items()}
    graph = doc["graph"]
    if "faces" in graph:
        sigma = graph_from_faces(graph["faces"], graph.get("outer_facets", ()))
    else:
        from .planar import validate

        sigma = validate(graph)
    if not isinstance(sigma, SemiMpg):
        raise ScenarioError("scenario region must be a semi-MPG with a border")
    scn = Scenario(
        name=doc.get("name", "scenario"),
        sigma=sigma,
        names=names,
        fixed=EdgeColoring({}),
        notes=doc.get("notes", ""),
        symmetries=[list(p) for p in doc.get("symmetries", [])],
        mode=doc.get("mode", "ergb"),
        degrees={int(k): int(v) for k, v in doc.get("degrees", {}).items()},
    )
    fixed = {}
    for key, c in doc.get("fixed", {}).items():
        fixed[scn.edge(key)] = c
    scn.fixed = EdgeColoring(fixed)
    for cdoc in doc.get("constraints", []):
        scn.constraints.append(
            SkeletonConstraint(
                cdoc["kind"],
                cdoc["color"],
                scn.vertex(cdoc["u"]),
                scn.vertex(cdoc["v"]),
                cdoc.get("parity"),
            )
        )
    for sdoc in doc.get("script", []):
        args = dict(sdoc)
        kind = args.pop("kind")
        scn.script.append(ScriptStep(kind, args))
    _check_fixed(scn)
    return scn


def load_scenario(source) -> Scenario:
    """Builtin name, JSON document (dict), or JSON text."""
    if isinstance(source, Mapping):
        return scenario_from_json(source)
    text = str(source)
    if text.lstrip().startswith("{"):
        return scenario_from_json(json.loads(text))
    from .scenarios_builtin import builtin_scenario

    return builtin_scenario(text)


# ---------------------------------------------------------------------------
# partial validity
# ---------------------------------------------------------------------------

def state_violations(scn: Scenario, t: EdgeColoring) -> list[dict]:
    """eRGB-local triangle violations, ignoring triangles with black edges."""
    out = []
    boundary = set(scn.boundary_edges())
    for f in triangles_of(scn.sigma):
        cs = [t.get(e, BLACK) for e in _face_edges(f)]
        if BLACK in cs:
            continue
        ys = cs.count(YELLOW)
        if ys > 1:
            out.append({"kind": "triangle", "where": f, "detail": f"two yellows {cs}"})
        elif ys == 0 and sorted(cs) != sorted(RGB):
            out.append({"kind": "triangle", "where": f, "detail": f"not rainbow {cs}"})
    for e in t.edges_of_color(YELLOW):
        if e in boundary:
            out.append({"kind": "yellow-on-boundary", "where": e, "detail": ""})
    return out


# ---------------------------------------------------------------------------
# sigma adjustment
# ---------------------------------------------------------------------------

def sigma_adjust(
    scn: Scenario,
    mode: str | None = None,
    fixed: Mapping[Edge, str] | EdgeColoring | None = None,
    max_yellows: int | None = None,
    cap_free: int = 40,
) -> list[EdgeColoring]:
    """All interior completions honoring the pinned colors, canonical order."""
    mode = mode or scn.mode
    base = dict(scn.fixed.assignment)
    if fixed is not None:
        items = fixed.assignment.items() if isinstance(fixed, EdgeColoring) else fixed.items()
        for e, c in items:
            base[canon_edge(*e)] = c
    # black marks uncommitted edges; colors outside the target mode (yellow
    # when re-solving in plain RGB) are freed for the adjustment as well
    allowed = {"r": {"r", "k"}, "rgb": set(RGB), "ergb": {*RGB, YELLOW}}[mode]
    base = {e: c for e, c in base.items() if c != BLACK and c in allowed}
    out = []
    for t in enumerate_tilings(scn.sigma, mode, fixed=base, cap_free=cap_free):
        if max_yellows is not None and len(t.edges_of_color(YELLOW)) > max_yellows:
            continue
        out.append(t)
    return out


# ---------------------------------------------------------------------------
# chain parity deduction (Lemma 1.8(b) arithmetic on an enclosed region)
# ---------------------------------------------------------------------------

def deduce_chain_parity(scn: Scenario | None, walk: Mapping) -> str:
    """Parity of one unknown monochrome chain closing a cycle of known edges.

    walk = {"chain": {"color": c, "u": ..., "v": ...},
            "known": [{"edge": "x-y" | [u,v], "color": c}, ...]}
    The known edges must form a walk from the chain's v back to its u.  With
    p, q the counts of the two non-chain colors among known edges, all three
    color counts around the closed cycle share one parity: p != q (mod 2) is
    impossible; otherwise the chain's parity is p + (known chain-color count).
    """
    chain = walk["chain"]
    color = chain["color"]
    resolve = scn.vertex if scn else (lambda x: int(x))

    def edge_of(spec) -> Edge:
        if scn:
            return scn.edge(spec)
        if isinstance(spec, str):
            a, b = spec.split("-")
            return canon_edge(int(a), int(b))
        return canon_edge(int(spec[0]), int(spec[1]))

    u, v = resolve(chain["u"]), resolve(chain["v"])
    known = [(edge_of(k["edge"]), k["color"]) for k in walk["known"]]
    # the known edges must chain from v back to u
    cur = v
    for (x, y), _ in known:
        if cur == x:
            cur = y
        elif cur == y:
            cur = x
        else:
            raise MalformedWalk(f"edge {(x, y)} does not continue the walk at {cur}")
    if cur != u:
        raise MalformedWalk(f"walk ends at {cur}, chain expects {u}")
    others = [c for c in RGB if c != color]
    p = sum(1 for _, c in known if c == others[0])
    q = sum(1 for _, c in known if c == others[1])
    if p % 2 != q % 2:
        return "impossible"
    k_c = sum(1 for _, c in known if c == color)
    return "even" if (p + k_c) % 2 == 0 else "odd"


# ---------------------------------------------------------------------------
# odd-cycle checks with declared exterior chains
# ---------------------------------------------------------------------------

def odd_cycle_with_constraints(
    scn: Scenario,
    t: EdgeColoring,
    color: str,
    extra: Sequence[SkeletonConstraint] = (),
) -> str | None:
    """None if no monochrome odd cycle can arise, else a description.

    The color subgraph inside Sigma is combined with one virtual edge per
    declared chain of that color; chains of unknown parity are tried both
    ways, and the check only passes when every assignment stays bipartite.
    """
    chains = [
        c
        for c in list(scn.constraints) + list(extra)
        if c.color == color and c.kind in ("chain_exists", "chain_parity")
    ]
    unknown = [c for c in chains if c.parity is None]
    edges = [(u, v) for u, v in scn.sigma.edges() if t.get((u, v)) == color]
    for bits in itertools.product((0, 1), repeat=len(unknown)):
        guessed = {id(c): p for c, p in zip(unknown, bits)}
        adj: dict[int, list[tuple[int, int]]] = {}

        def add(u, v, p):
            adj.setdefault(u, []).append((v, p))
            adj.setdefault(v, []).append((u, p))

        for u, v in edges:
            add(u, v, 1)
        for c in chains:
            p = guessed[id(c)] if c.parity is None else (0 if c.parity == "even" else 1)
            add(c.u, c.v, p)
        side: dict[int, int] = {}
        for root in list(adj):
            if root in side:
                continue
            side[root] = 0
            stack = [root]
            while stack:
                x = stack.pop()
                for y, p in adj[x]:
                    if y not in side:
                        side[y] = side[x] ^ p
                        stack.append(y)
                    elif side[y] != side[x] ^ p:
                        names = scn.index_names
                        return (
                            f"odd {color} cycle through {names.get(x, x)}-"
                            f"{names.get(y, y)}"
                            + (" (for some undeclared chain parity)" if unknown else "")
                        )
    return None


# ---------------------------------------------------------------------------
# script runner
# ---------------------------------------------------------------------------

@dataclass
class Transcript:
    scenario: str
    status: str = "PASS"
    steps: list[dict] = field(default_factory=list)
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "status": self.status,
            "notes": self.notes,
            "steps": self.steps,
        }

    def to_text(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


def _boundary_pattern(scn: Scenario, t: EdgeColoring) -> tuple[int, int, int]:
    cnt = {c: 0 for c in (*RGB, BLACK, YELLOW)}
    for e in scn.boundary_edges():
        cnt[t.get(e, BLACK)] += 1
    return (cnt["r"], cnt["g"], cnt["b"])


def canonical_pattern_key(scn: Scenario, t: EdgeColoring):
    """Coloring key minimized over synonyms and the declared symmetries."""
    syms = [list(range(scn.sigma.n))] + [list(p) for p in scn.symmetries]
    best = None
    for sym in syms:
        tt = t.relabeled(sym)
        for p in itertools.permutations(RGB):
            k = tt.permuted(dict(zip(RGB, p))).key()
            if best is None or k < best:
                best = k
    return best


def run_script(scn: Scenario) -> Transcript:
    """Execute the scenario's steps in order; FAIL atomically on the first
    violated assertion.  Transcripts are deterministic and replay-stable."""
    tr = Transcript(scenario=scn.name, notes=scn.notes)
    state = scn.fixed
    deduced: list[SkeletonConstraint] = []

    def record(step: ScriptStep, verdict: str, detail: str = "") -> bool:
        tr.steps.append(
            {
                "step": len(tr.steps),
                "kind": step.kind,
                "verdict": verdict,
                "detail": detail,
            }
        )
        if verdict == "FAIL":
            tr.status = "FAIL"
            return False
        return True

    for step in scn.script:
        if tr.status == "FAIL":
            break
        kind, args = step.kind, step.args
        try:
            if kind == "set_colors":
                patch = {scn.edge(k): c for k, c in args["assignments"].items()}
                state = state.with_edges(patch)
                bad = state_violations(scn, state)
                record(step, "FAIL" if bad else "OK", f"{len(patch)} edges set" if not bad else str(bad[:3]))
            elif kind == "apply_ecs":
                ring = _ring_from_doc(scn, args["ring"])
                state = apply_ecs(scn.sigma, state, ring)
                bad = state_violations(scn, state)
                ys = ",".join(
                    f"{scn.index_names.get(u,u)}-{scn.index_names.get(v,v)}"
                    for u, v in state.edges_of_color(YELLOW)
                )
                record(step, "FAIL" if bad else "OK",
                       f"yellows now [{ys}]" if not bad else str(bad[:3]))
            elif kind == "assert_boundary":
                ok, detail = _assert_boundary(scn, state, args)
                record(step, "OK" if ok else "FAIL", detail)
            elif kind == "assert_parity":
                got = deduce_chain_parity(scn, args["walk"])
                want = args["expect"]
                if got == want and got in ("even", "odd") and args.get("register", True):
                    ch = args["walk"]["chain"]
                    deduced.append(
                        SkeletonConstraint(
                            "chain_parity", ch["color"],
                            scn.vertex(ch["u"]), scn.vertex(ch["v"]), got,
                        )
                    )
                record(step, "OK" if got == want else "FAIL", f"deduced {got}, expected {want}")
            elif kind == "assert_no_mono_odd_cycle":
                witness = odd_cycle_with_constraints(scn, state, args["color"], deduced)
                record(step, "OK" if witness is None else "FAIL", witness or "bipartite with declared chains")
            elif kind == "assert_completion_exists":
                sols = sigma_adjust(scn, args.get("mode", scn.mode), fixed=state,
                                    max_yellows=args.get("max_yellows"))
                want = args.get("count")
                if want is not None:
                    ok = len(sols) == want
                    record(step, "OK" if ok else "FAIL", f"{len(sols)} completions, expected {want}")
                else:
                    record(step, "OK" if sols else "FAIL", f"{len(sols)} completions")
            elif kind == "assert_no_completion":
                sols = sigma_adjust(scn, args.get("mode", scn.mode), fixed=state,
                                    max_yellows=args.get("max_yellows"))
                record(step, "OK" if not sols else "FAIL", f"{len(sols)} completions found")
            else:
                record(step, "FAIL", f"unknown step kind {kind}")
        except Exception as exc:
            raise StepInapplicable(f"step {len(tr.steps)} ({kind}): {exc}") from exc
    return tr


def _ring_from_doc(scn: Scenario, doc) -> CanalRing:
    if isinstance(doc, CanalRing):
        return doc
    crossings = []
    from .kempe import Crossing

    faces = {frozenset(f): f for f in scn.sigma.faces}
    for c in doc["crossings"]:
        e = scn.edge(c["edge"])
        face = None
        if c.get("face") is not None:
            key = frozenset(scn.vertex(x) for x in c["face"])
            face = faces.get(key)
        crossings.append(Crossing(face, e, c["kind"]))
    return CanalRing(doc["color"], tuple(crossings), doc.get("closed", True))


def _assert_boundary(scn: Scenario, state: EdgeColoring, args) -> tuple[bool, str]:
    pat = args["pattern"]
    if "triple" in pat:
        got = _boundary_pattern(scn, state)
        want = tuple(pat["triple"])
        if pat.get("sorted", False):
            return tuple(sorted(got)) == tuple(sorted(want)), f"triple {got}"
        return got == want, f"triple {got}, expected {want}"
    if "edges" in pat:
        want = {scn.edge(k): c for k, c in pat["edges"].items()}
        scope = list(want)
        if pat.get("up_to") == "pattern":
            sub_state = EdgeColoring({e: state.get(e, BLACK) for e in scn.sigma.edges()})
            sub_want = state.with_edges(want)
            ok = canonical_pattern_key(scn, sub_state) == canonical_pattern_key(scn, sub_want)
            return ok, "pattern comparison up to synonym and symmetry"
        bad = [e for e in scope if state.get(e) != want[e]]
        return not bad, f"{len(bad)} boundary edges differ" if bad else "exact match"
    if "state" in pat:
        want = EdgeColoring({scn.edge(k): c for k, c in pat["state"].items()})
        ok = canonical_pattern_key(scn, state) == canonical_pattern_key(scn, want)
        return ok, "full-state pattern " + ("matches" if ok else "differs") + " up to synonym and symmetry"
    return False, "empty boundary pattern"
