"""Validation, enumeration and diamond classification for R/RGB/eRGB-tilings.

Modes:
  "r"    every triangle has exactly one red edge, the other two black.
  "rgb"  every triangle carries all three of red, green, blue.
  "ergb" yellow double-lines allowed: at most one per triangle, never on an
         outer facet; deleting them must leave a valid RGB-tiling and (in
         strict checks) every yellow edge's diamond must be Type A or B.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .coloring import (
    BLACK,
    BLUE,
    EdgeColoring,
    GREEN,
    RED,
    RGB,
    YELLOW,
    third_color,
)
from .errors import CapExceeded, EdgePresent, GraphError
from .planar import Edge, Face, Host, SemiMpg, canon_edge, remove_edge, triangles_of

R_MODE, RGB_MODE, ERGB_MODE = "r", "rgb", "ergb"
_ALLOWED = {R_MODE: {RED, BLACK}, RGB_MODE: set(RGB), ERGB_MODE: {*RGB, YELLOW}}


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

@dataclass
class TilingVerdict:
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, where, detail: str) -> None:
        self.violations.append({"kind": kind, "where": where, "detail": detail})

    def to_json(self) -> dict:
        return {"valid": self.ok, "violations": self.violations}


@dataclass(frozen=True)
class GrandWitness:
    v13: frozenset[int]
    v24: frozenset[int]


@dataclass(frozen=True)
class NotGrand:
    reason: str
    edge: Edge | None = None


# ---------------------------------------------------------------------------
# monochrome subgraph helpers (shared with the Kempe machinery)
# ---------------------------------------------------------------------------

def color_adjacency(host: Host, t: EdgeColoring, color: str) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(host.n)}
    for u, v in host.edges():
        if t.get((u, v)) == color:
            adj[u].append(v)
            adj[v].append(u)
    return adj


def mono_path(
    host: Host, t: EdgeColoring, color: str, u: int, v: int
) -> list[int] | None:
    """Shortest path from u to v using only edges of the given color."""
    if u == v:
        return [u]
    adj = color_adjacency(host, t, color)
    prev: dict[int, int] = {u: u}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    if y == v:
                        path = [v]
                        while path[-1] != u:
                            path.append(prev[path[-1]])
                        return list(reversed(path))
                    nxt.append(y)
        frontier = nxt
    return None


def mono_odd_cycle(host: Host, t: EdgeColoring, color: str) -> list[int] | None:
    """An odd cycle in the chosen color's subgraph, or None if it is bipartite."""
    adj = color_adjacency(host, t, color)
    side: dict[int, int] = {}
    prev: dict[int, int] = {}
    for root in range(host.n):
        if root in side or not adj[root]:
            continue
        side[root] = 0
        prev[root] = root
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in side:
                    side[y] = side[x] ^ 1
                    prev[y] = x
                    stack.append(y)
                elif side[y] == side[x]:
                    # walk both endpoints up to their common ancestor
                    px = [x]
                    py = [y]
                    while px[-1] != root:
                        px.append(prev[px[-1]])
                    while py[-1] != root:
                        py.append(prev[py[-1]])
                    sx, sy = set(px), set(py)
                    meet = next(z for z in px if z in sy)
                    del sx
                    cyc = px[: px.index(meet) + 1] + list(
                        reversed(py[: py.index(meet)])
                    )
                    return cyc
    return None


def even_mono_path_exists(
    host: Host, t: EdgeColoring, color: str, u: int, v: int
) -> list[int] | None:
    """An even-length monochrome u-v path (the parity that blocks extension).

    Returns a witness path, or None.  If the color subgraph has an odd cycle
    in u's component both parities exist, so a witness is still produced.
    """
    adj = color_adjacency(host, t, color)
    # BFS over (vertex, parity) states
    start = (u, 0)
    prev: dict[tuple[int, int], tuple[int, int]] = {start: start}
    frontier = [start]
    goal = (v, 0)
    while frontier and goal not in prev:
        nxt = []
        for state in frontier:
            x, p = state
            for y in adj[x]:
                s2 = (y, p ^ 1)
                if s2 not in prev:
                    prev[s2] = state
                    nxt.append(s2)
        frontier = nxt
    if goal not in prev:
        return None
    path = [goal]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return [x for x, _ in reversed(path)]


def project_to_r(t: EdgeColoring, yellow_to: str = RED) -> EdgeColoring:
    """Collapse an RGB/eRGB tiling to mode R: green and blue become black."""
    out = {}
    for e, c in t.assignment.items():
        if c == RED:
            out[e] = RED
        elif c == YELLOW:
            out[e] = yellow_to
        elif c == BLACK:
            out[e] = BLACK
        else:
            out[e] = BLACK
    return EdgeColoring(out)


# ---------------------------------------------------------------------------
# check_tiling
# ---------------------------------------------------------------------------

def _face_edges(f: Face) -> list[Edge]:
    return [canon_edge(f[i], f[(i + 1) % len(f)]) for i in range(len(f))]


def check_tiling(
    host: Host,
    t: EdgeColoring,
    mode: str,
    ergb_diamonds: str = "strict",
) -> TilingVerdict:
    """Verdict on per-triangle constraints (plus eRGB yellow placement rules).

    ergb_diamonds: "strict" classifies every yellow diamond and demands Type
    A or B within the given host; "local" skips that (for scenario regions
    whose exterior is abstract, blocking chains may live outside the host).
    """
    verdict = TilingVerdict()
    allowed = _ALLOWED[mode]
    edges = host.edges()
    for e in edges:
        c = t.get(e)
        if c is None:
            verdict.add("missing-edge", e, "no color assigned")
        elif c not in allowed:
            verdict.add("bad-color", e, f"color {c} not allowed in mode {mode}")
    if not verdict.ok:
        return verdict

    for f in triangles_of(host):
        cs = [t[e] for e in _face_edges(f)]
        if mode == R_MODE:
            if cs.count(RED) != 1:
                verdict.add("triangle", f, f"needs exactly one red, got {cs}")
        elif mode == RGB_MODE:
            if sorted(cs) != sorted(RGB):
                verdict.add("triangle", f, f"not rainbow: {cs}")
        else:
            ys = cs.count(YELLOW)
            if ys > 1:
                verdict.add("triangle", f, f"two yellow double-lines: {cs}")
            elif ys == 0 and sorted(cs) != sorted(RGB):
                verdict.add("triangle", f, f"not rainbow: {cs}")

    if mode == ERGB_MODE and verdict.ok:
        ydls = t.edges_of_color(YELLOW)
        boundary = set(host.boundary_edges()) if isinstance(host, SemiMpg) else set()
        counts: dict[Edge, int] = {}
        for f in triangles_of(host):
            for e in _face_edges(f):
                counts[e] = counts.get(e, 0) + 1
        for e in ydls:
            if e in boundary:
                verdict.add("yellow-on-boundary", e, "yellow must be interior")
            elif counts.get(e, 0) != 2:
                verdict.add("yellow-no-diamond", e, "yellow edge needs two triangles")
        if verdict.ok and ydls and ergb_diamonds == "strict":
            q = host
            try:
                for e in ydls:
                    q = remove_edge(q, e)
            except GraphError as exc:
                verdict.add("yellow-removal", tuple(ydls), str(exc))
                return verdict
            residual = EdgeColoring(
                {e: c for e, c in t.assignment.items() if c != YELLOW}
            )
            sub = check_tiling(q, residual, RGB_MODE)
            if not sub.ok:
                verdict.violations.extend(sub.violations)
                return verdict
            for e in ydls:
                d = classify_diamond(q, residual, e)
                if d.verdict not in ("A", "B"):
                    verdict.add(
                        "diamond", e, f"yellow diamond is {d.verdict}, needs A or B"
                    )
    return verdict


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_tilings(
    host: Host,
    mode: str,
    fixed: Mapping[Edge, str] | EdgeColoring | None = None,
    cap_free: int = 40,
    max_yellows: int | None = None,
) -> Iterator[EdgeColoring]:
    """All valid tilings by face-by-face backtracking, canonical order.

    Honors partial assignments in `fixed`; colors are tried in the order
    r < g < b < k < Y, faces in the host's canonical face order, so the
    stream is reproducible.  max_yellows prunes eRGB branches early.
    """
    if isinstance(fixed, EdgeColoring):
        fixed = dict(fixed.assignment)
    fixed = {canon_edge(*e): c for e, c in (fixed or {}).items()}
    allowed = _ALLOWED[mode]
    for e, c in fixed.items():
        if c not in allowed:
            raise GraphError(f"fixed color {c} on {e} not allowed in mode {mode}")

    tris = list(triangles_of(host))
    all_edges = host.edges()
    boundary = set(host.boundary_edges()) if isinstance(host, SemiMpg) else set()
    tri_count: dict[Edge, int] = {}
    for f in tris:
        for e in _face_edges(f):
            tri_count[e] = tri_count.get(e, 0) + 1

    order: list[Edge] = []
    seen: set[Edge] = set()
    for f in tris:
        for e in sorted(_face_edges(f)):
            if e not in seen:
                seen.add(e)
                order.append(e)
    for e in all_edges:
        if e not in seen:
            seen.add(e)
            order.append(e)

    free = [e for e in order if e not in fixed]
    if len(free) > cap_free:
        raise CapExceeded(f"{len(free)} free edges exceeds cap {cap_free}")

    faces_of_edge: dict[Edge, list[int]] = {e: [] for e in order}
    for i, f in enumerate(tris):
        for e in _face_edges(f):
            faces_of_edge[e].append(i)
    face_edges = [_face_edges(f) for f in tris]

    color_order = [c for c in (RED, GREEN, BLUE, BLACK, YELLOW) if c in allowed]
    assign: dict[Edge, str] = {}

    def face_ok(i: int) -> bool:
        cs = [assign.get(e) for e in face_edges[i]]
        known = [c for c in cs if c is not None]
        complete = None not in cs
        if mode == R_MODE:
            reds = known.count(RED)
            return reds <= 1 and (not complete or reds == 1)
        if mode == RGB_MODE:
            return len(set(known)) == len(known)
        ys = known.count(YELLOW)
        if ys > 1:
            return False
        if ys == 1:
            return True  # the two companions of a yellow edge are unconstrained
        # no yellow yet: a finished face must be rainbow; an unfinished one is
        # always completable (missing color, or yellow on the open slot)
        return not complete or sorted(known) == sorted(RGB)

    yellows = 0

    def choice_ok(e: Edge, c: str) -> bool:
        if c == YELLOW:
            if e in boundary or tri_count.get(e, 0) != 2:
                return False
            if max_yellows is not None and yellows >= max_yellows:
                return False
        assign[e] = c
        ok = all(face_ok(i) for i in faces_of_edge[e])
        del assign[e]
        return ok

    for e, c in fixed.items():
        if c == YELLOW and (e in boundary or tri_count.get(e, 0) != 2):
            raise GraphError(f"fixed yellow on {e} violates placement rules")
        assign[e] = c
        if c == YELLOW:
            yellows += 1
    if not all(face_ok(i) for i in range(len(tris))):
        return

    def backtrack(k: int) -> Iterator[EdgeColoring]:
        nonlocal yellows
        if k == len(order):
            yield EdgeColoring(dict(assign))
            return
        e = order[k]
        if e in fixed:
            yield from backtrack(k + 1)
            return
        for c in color_order:
            if choice_ok(e, c):
                assign[e] = c
                if c == YELLOW:
                    yellows += 1
                yield from backtrack(k + 1)
                if c == YELLOW:
                    yellows -= 1
                del assign[e]

    yield from backtrack(0)


# ---------------------------------------------------------------------------
# grandness
# ---------------------------------------------------------------------------

def is_grand(host: Host, t: EdgeColoring) -> GrandWitness | NotGrand:
    """Split V into V13/V24 with black edges crossing, red edges inside parts.

    Union-find with parity: a black edge forces opposite parts, a red edge
    the same part.  V13 is the part containing vertex 0.
    """
    parent = list(range(host.n))
    parity = [0] * host.n  # parity relative to parent

    def resolve(x: int) -> tuple[int, int]:
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    for u, v in host.edges():
        c = t.get((u, v))
        want = 0 if c == RED else 1
        ru, pu = resolve(u)
        rv, pv = resolve(v)
        if ru == rv:
            if pu ^ pv != want:
                return NotGrand(
                    f"{'red' if c == RED else 'black'} edge {canon_edge(u, v)} "
                    "closes an odd constraint cycle",
                    canon_edge(u, v),
                )
        else:
            parent[rv] = ru
            parity[rv] = pu ^ pv ^ want
    # the graph is connected, so every vertex resolves to one root
    v13 = frozenset(v for v in range(host.n) if resolve(v)[1] == resolve(0)[1])
    v24 = frozenset(range(host.n)) - v13
    return GrandWitness(v13, v24)


# ---------------------------------------------------------------------------
# boundary signatures (Lemma 1.8)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ColorTriple:
    r: int
    g: int
    b: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.g, self.b)

    def sorted(self) -> tuple[int, int, int]:
        return tuple(sorted((self.r, self.g, self.b)))


@dataclass
class BoundarySignature:
    triples: list[ColorTriple]
    black_counts: list[int]
    facet_lengths: list[int]
    verdict: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "per_facet": [
                {
                    "length": ln,
                    "triple": tr.as_tuple(),
                    "black": bk,
                }
                for ln, tr, bk in zip(self.facet_lengths, self.triples, self.black_counts)
            ],
            "verdict": "PASS" if self.verdict else "FAIL",
            "detail": self.detail,
        }


def boundary_signature(host: SemiMpg, t: EdgeColoring, mode: str) -> BoundarySignature:
    """Per-facet color triples plus the parity verdict over all outer facets.

    Shared boundary edges count once per facet (multiplicity 2 overall); the
    verdict follows the totals: even black count in mode R, and in RGB/eRGB
    all three color counts congruent to the total boundary length mod 2.
    """
    triples: list[ColorTriple] = []
    blacks: list[int] = []
    lengths: list[int] = []
    tot = {RED: 0, GREEN: 0, BLUE: 0, BLACK: 0, YELLOW: 0}
    tot_len = 0
    for f in host.outer_facets:
        cnt = {RED: 0, GREEN: 0, BLUE: 0, BLACK: 0, YELLOW: 0}
        for e in _face_edges(f):
            cnt[t[e]] += 1
            tot[t[e]] += 1
        triples.append(ColorTriple(cnt[RED], cnt[GREEN], cnt[BLUE]))
        blacks.append(cnt[BLACK])
        lengths.append(len(f))
        tot_len += len(f)
    if mode == R_MODE:
        ok = tot[BLACK] % 2 == 0
        detail = f"total black along outer facets = {tot[BLACK]}"
    else:
        par = tot_len % 2
        ok = all(tot[c] % 2 == par for c in RGB) and tot[YELLOW] == 0
        detail = (
            f"totals (r,g,b)=({tot[RED]},{tot[GREEN]},{tot[BLUE]}), "
            f"boundary length {tot_len}"
        )
    return BoundarySignature(triples, blacks, lengths, ok, detail)


# ---------------------------------------------------------------------------
# diamond classification
# ---------------------------------------------------------------------------

@dataclass
class DiamondVerdict:
    verdict: str  # A | B | C | D | NoCandidate
    edge: Edge
    corners: tuple[int, int]  # (N, S)
    surround: tuple[str, str, str, str]  # colors of aN, Nb, bS, Sa
    candidates: list[str]
    chains: dict[str, list[int]]  # blocking chain witness per blocked color
    extensions: dict[str, EdgeColoring]  # valid full-host colorings per open color

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "edge": list(self.edge),
            "corners": list(self.corners),
            "surround": list(self.surround),
            "candidates": self.candidates,
            "chains": {c: p for c, p in self.chains.items()},
            "extensions": {c: x.to_json() for c, x in self.extensions.items()},
        }


def kempe_component_swap(
    host: Host, t: EdgeColoring, color: str, seed: int
) -> EdgeColoring:
    """Edge-level Kempe swap: flip the other two tiling colors on the boundary
    of seed's monochrome component in `color`."""
    adj = color_adjacency(host, t, color)
    comp = {seed}
    stack = [seed]
    while stack:
        for y in adj[stack.pop()]:
            if y not in comp:
                comp.add(y)
                stack.append(y)
    p, q = [c for c in RGB if c != color]
    patch: dict[Edge, str] = {}
    for u, v in host.edges():
        if (u in comp) != (v in comp):
            c = t[(u, v)]
            if c == p:
                patch[canon_edge(u, v)] = q
            elif c == q:
                patch[canon_edge(u, v)] = p
    return t.with_edges(patch)


def _find_diamond_facet(q: Host, e: Edge) -> tuple[int, int]:
    a, b = e
    if q.has_edge(a, b):
        raise EdgePresent(f"edge {e} is still present in the host")
    if isinstance(q, SemiMpg):
        for f in q.outer_facets:
            if len(f) == 4 and a in f and b in f:
                ia, ib = f.index(a), f.index(b)
                if (ia - ib) % 4 == 2:
                    return f[(ia + 1) % 4], f[(ia + 3) % 4]
    raise GraphError(f"no 4-gon facet with {e[0]},{e[1]} opposite; not a diamond host")


def classify_diamond(q: Host, t: EdgeColoring, e: Edge) -> DiamondVerdict:
    """Type A/B/C/D verdict for the e-diamond of a tiling on q = M - e.

    Writing the surrounding colors as (aN, Nb | bS, Sa):

    * all four equal ("surround monochrome"): the two other colors are
      candidates, each extendable by a Kempe component swap at `a` unless an
      equally-colored chain joins a to b.  Both blocked -> A, else C.
    * both triangles bichromatic: the unique missing color is the direct
      candidate; an even chain of that color would close an odd monochrome
      cycle, blocking it.  Blocked -> B, else D.
    * adjacent-equal patterns have no candidate at all -> NoCandidate.

    C and D verdicts carry the extended colorings (the starred forms).
    """
    a, b = canon_edge(*e)
    north, south = _find_diamond_facet(q, (a, b))
    surround = (
        t[(a, north)],
        t[(north, b)],
        t[(b, south)],
        t[(south, a)],
    )
    c_an, c_nb, c_bs, c_sa = surround
    chains: dict[str, list[int]] = {}
    extensions: dict[str, EdgeColoring] = {}

    if c_an == c_nb == c_bs == c_sa:
        cands = [c for c in RGB if c != c_an]
        for x in cands:
            path = mono_path(q, t, x, a, b)
            if path is not None:
                chains[x] = path
            else:
                swapped = kempe_component_swap(q, t, x, a)
                extensions[x] = swapped.with_edges({(a, b): x})
        if len(chains) == len(cands):
            return DiamondVerdict("A", (a, b), (north, south), surround, cands, chains, {})
        return DiamondVerdict(
            "C", (a, b), (north, south), surround, cands, chains, extensions
        )

    if c_an != c_nb and c_bs != c_sa:
        x1 = third_color(c_an, c_nb)
        x2 = third_color(c_bs, c_sa)
        if x1 != x2:
            return DiamondVerdict(
                "NoCandidate", (a, b), (north, south), surround, [], {}, {}
            )
        even = even_mono_path_exists(q, t, x1, a, b)
        if even is not None:
            chains[x1] = even
            return DiamondVerdict(
                "B", (a, b), (north, south), surround, [x1], chains, {}
            )
        extensions[x1] = t.with_edges({(a, b): x1})
        return DiamondVerdict(
            "D", (a, b), (north, south), surround, [x1], {}, extensions
        )

    return DiamondVerdict("NoCandidate", (a, b), (north, south), surround, [], {}, {})


def extend_over_edge(q: Host, t: EdgeColoring, e: Edge) -> list[str]:
    """Colors that validly extend t over the removed edge e (empty = abandoned)."""
    return sorted(classify_diamond(q, t, e).extensions)
