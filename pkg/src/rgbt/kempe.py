"""Kempe chains, canal rings, ECS/VCS moves, skeletons, congruence search.

A canal for color c is a walk through triangles crossing edges: normally it
alternates between the two non-c colors ("the canal banks are c-colored");
generalized crossings pass through yellow double-lines or c-colored edges.
ECS along a closed ring swaps the two non-c colors on normal crossings and
swaps c with yellow on generalized ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .coloring import (
    EdgeColoring,
    RGB,
    YELLOW,
    canonical_synonym,
    induce_edge_coloring,
    induce_vertex_coloring,
    is_proper,
)
from .errors import (
    AmbiguousTrace,
    CapExceeded,
    OpenRing,
    SeedNotInPair,
    StaleRing,
)
from .planar import Edge, Face, Host, SemiMpg, canon_edge
from .tiling import check_tiling, mono_path, _face_edges

NORMAL, GENERALIZED = "normal", "generalized"


@dataclass(frozen=True)
class Chain:
    color: str
    endpoints: Edge
    path: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def parity(self) -> str:
        return "even" if self.length % 2 == 0 else "odd"


def chain(host: Host, t: EdgeColoring, color: str, u: int, v: int) -> Chain | None:
    """Shortest monochrome u-v path in the given color, or None."""
    path = mono_path(host, t, color, u, v)
    if path is None:
        return None
    return Chain(color, canon_edge(u, v), tuple(path))


# ---------------------------------------------------------------------------
# canal rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    face: Face | None  # None marks a declared exterior arc step
    edge: Edge
    kind: str

    def to_json(self) -> dict:
        return {
            "face": list(self.face) if self.face is not None else None,
            "edge": f"{self.edge[0]}-{self.edge[1]}",
            "kind": self.kind,
        }


@dataclass(frozen=True)
class CanalRing:
    color: str
    crossings: tuple[Crossing, ...]
    closed: bool = True

    def edges(self) -> list[Edge]:
        return [c.edge for c in self.crossings]

    def key(self) -> tuple:
        return (self.color, frozenset((c.edge, c.kind) for c in self.crossings))

    def to_json(self) -> dict:
        return {
            "color": self.color,
            "closed": self.closed,
            "crossings": [c.to_json() for c in self.crossings],
        }

    @staticmethod
    def from_json(doc: Mapping) -> "CanalRing":
        crossings = []
        for c in doc["crossings"]:
            u, v = c["edge"].split("-")
            face = tuple(c["face"]) if c.get("face") is not None else None
            crossings.append(Crossing(face, canon_edge(int(u), int(v)), c["kind"]))
        return CanalRing(doc["color"], tuple(crossings), doc.get("closed", True))


@dataclass(frozen=True)
class CanalPath:
    color: str
    crossings: tuple[Crossing, ...]
    closed: bool = False


def _edge_faces(host: Host) -> dict[Edge, list[Face]]:
    out: dict[Edge, list[Face]] = {}
    for f in host.faces:
        for e in _face_edges(f):
            out.setdefault(e, []).append(f)
    return out


def trace_canal(
    host: Host,
    t: EdgeColoring,
    start_triangle: Face,
    color: str,
    first_exit: Edge | None = None,
) -> CanalRing | CanalPath:
    """Follow the c-canal through start_triangle until it closes or hits a hole.

    Exit priority in a triangle entered via edge x: (1) the unique edge of the
    expected alternating normal color, (2) the yellow edge, (3) the c-colored
    edge.  Anything non-unique raises AmbiguousTrace; scenario scripts then
    supply explicit ring descriptors instead.
    """
    others = [c for c in RGB if c != color]
    ef = _edge_faces(host)
    outer = set(host.outer_facets)

    def exits(face: Face, entry: Edge | None, expect: str | None) -> list[tuple[Edge, str]]:
        es = [e for e in _face_edges(face) if e != entry]
        if expect is not None:
            normal = [e for e in es if t[e] == expect]
        else:
            normal = [e for e in es if t[e] in others]
        if normal:
            return [(e, NORMAL) for e in normal]
        yellow = [e for e in es if t[e] == YELLOW]
        if yellow:
            return [(e, GENERALIZED) for e in yellow]
        own = [e for e in es if t[e] == color]
        return [(e, GENERALIZED) for e in own]

    if start_triangle not in set(host.faces) or len(start_triangle) != 3:
        raise AmbiguousTrace(f"start {start_triangle} is not a triangle of the host")

    if first_exit is None:
        cand = exits(start_triangle, None, None)
        if not cand:
            raise AmbiguousTrace(f"no exit from {start_triangle} for color {color}")
        cand.sort(key=lambda ek: (ek[1] != NORMAL, t[ek[0]], ek[0]))
        first_exit, first_kind = cand[0]
    else:
        first_exit = canon_edge(*first_exit)
        kinds = dict((e, k) for e, k in exits(start_triangle, None, None))
        if first_exit not in kinds:
            raise AmbiguousTrace(f"{first_exit} is not a legal exit of {start_triangle}")
        first_kind = kinds[first_exit]

    crossings: list[Crossing] = []
    face = start_triangle
    edge, kind = first_exit, first_kind
    first_state = (face, edge)
    expect: str | None = None
    if kind == NORMAL:
        expect = others[0] if t[edge] == others[1] else others[1]
    seen: set[tuple[Face, Edge]] = set()
    while True:
        if crossings and (face, edge) == first_state:
            return CanalRing(color, tuple(crossings))
        if (face, edge) in seen:
            raise AmbiguousTrace("trace revisited a state without closing")
        seen.add((face, edge))
        crossings.append(Crossing(face, edge, kind))
        nxt = [f for f in ef[edge] if f != face]
        if len(nxt) != 1 or nxt[0] in outer or len(nxt[0]) != 3:
            return CanalPath(color, tuple(crossings))
        face = nxt[0]
        cand = exits(face, edge, expect)
        if len(cand) != 1:
            raise AmbiguousTrace(
                f"no unique exit from {face} entered via {edge} (expect {expect})"
            )
        edge, kind = cand[0]
        if kind == NORMAL:
            expect = others[0] if t[edge] == others[1] else others[1]


def rings_of(host: Host, t: EdgeColoring, color: str) -> list[CanalRing]:
    """All distinct closed rings traceable from every triangle of the host."""
    out: dict[tuple, CanalRing] = {}
    for f in host.faces:
        if len(f) != 3 or f in set(host.outer_facets):
            continue
        for e in _face_edges(f):
            try:
                r = trace_canal(host, t, f, color, first_exit=e)
            except AmbiguousTrace:
                continue
            if isinstance(r, CanalRing):
                out.setdefault(r.key(), r)
    return [out[k] for k in sorted(out, key=repr)]


def _kind_for(c: str | None, color: str) -> str | None:
    if c in RGB and c != color:
        return NORMAL
    if c == color or c == YELLOW:
        return GENERALIZED
    return None


def vertex_ring(host: Host, t: EdgeColoring, x: int, color: str) -> CanalRing | None:
    """The tight generalized ring around an interior vertex, crossing all of
    its spokes in rotation order (the paper's around-a / around-b GCLs).
    None when some spoke is uncolored or x touches a hole."""
    rotx = host.rotation[x]
    fmap = {frozenset(f): f for f in host.faces if len(f) == 3}
    crossings = []
    for i, u in enumerate(rotx):
        e = canon_edge(x, u)
        k = _kind_for(t.get(e), color)
        f = fmap.get(frozenset((x, rotx[i - 1], u)))
        if f is None or k is None:
            return None
        crossings.append(Crossing(f, e, k))
    return CanalRing(color, tuple(crossings))


def boundary_crossing_rings(
    host: Host, t: EdgeColoring, color: str, max_len: int = 12
) -> list[CanalRing]:
    """Dual paths from one boundary edge to another, closed through the
    abstract exterior.  Scenario machinery only: applying such a ring changes
    the crossed boundary edges and leaves the exterior to the constraints."""
    if not isinstance(host, SemiMpg):
        return []
    boundary = host.boundary_edges()
    edge_tris: dict[Edge, list] = {}
    for f in host.faces:
        if len(f) != 3 or f in set(host.outer_facets):
            continue
        for e in _face_edges(f):
            edge_tris.setdefault(e, []).append(f)
    out: list[CanalRing] = []

    def extend(path: list[Edge], used: set, face) -> None:
        if len(path) > max_len:
            return
        for i in range(3):
            e = canon_edge(face[i], face[(i + 1) % 3])
            if e in path:
                continue
            k = _kind_for(t.get(e), color)
            if k is None:
                continue
            flank = [f2 for f2 in edge_tris.get(e, []) if f2 != face]
            if not flank:
                if e in boundary:
                    out.append(path + [e])
            elif flank[0] not in used:
                extend(path + [e], used | {flank[0]}, flank[0])

    for e0 in boundary:
        if _kind_for(t.get(e0), color) is None or e0 not in edge_tris:
            continue
        extend([e0], {edge_tris[e0][0]}, edge_tris[e0][0])
    rings = {}
    for path in out:
        crossings = tuple(
            Crossing(edge_tris[e][0], e, _kind_for(t.get(e), color)) for e in path
        )
        r = CanalRing(color, crossings)
        rings.setdefault(r.key(), r)
    return [rings[k] for k in sorted(rings, key=repr)]


def apply_ecs(host: Host, t: EdgeColoring, ring: CanalRing) -> EdgeColoring:
    """Edge-color switch along a closed canal ring.

    Normal crossings swap the two non-c colors; generalized crossings swap c
    with yellow.  Edges off the ring are untouched.  The descriptor must be
    consistent with t (colors and kinds), else StaleRing.
    """
    if not ring.closed:
        raise OpenRing("ECS needs a closed ring")
    others = [c for c in RGB if c != ring.color]
    patch: dict[Edge, str] = {}
    for cr in ring.crossings:
        c = t.get(cr.edge)
        if c is None:
            raise StaleRing(f"ring crosses unknown edge {cr.edge}")
        if cr.kind == NORMAL:
            if c not in others:
                raise StaleRing(f"normal crossing at {cr.edge} but color is {c}")
            patch[cr.edge] = others[0] if c == others[1] else others[1]
        elif cr.kind == GENERALIZED:
            if c == ring.color:
                patch[cr.edge] = YELLOW
            elif c == YELLOW:
                patch[cr.edge] = ring.color
            else:
                raise StaleRing(f"generalized crossing at {cr.edge} but color is {c}")
        else:
            raise StaleRing(f"unknown crossing kind {cr.kind}")
        if patch.get(cr.edge) == c:
            raise StaleRing(f"crossing at {cr.edge} would not change anything")
    counts: dict[Edge, int] = {}
    for cr in ring.crossings:
        counts[cr.edge] = counts.get(cr.edge, 0) + 1
    dup = [e for e, k in counts.items() if k > 1]
    if dup:
        raise StaleRing(f"ring crosses edges twice: {dup}")
    return t.with_edges(patch)


def apply_vcs(
    host: Host, vc: Mapping[int, int], pair: Iterable[int], seed: int
) -> dict[int, int]:
    """Swap the two colors of `pair` on the pair-component containing seed."""
    x, y = sorted(pair)
    if vc[seed] not in (x, y):
        raise SeedNotInPair(f"seed {seed} has color {vc[seed]}, not in {{{x},{y}}}")
    comp = {seed}
    stack = [seed]
    while stack:
        u = stack.pop()
        for w in host.rotation[u]:
            if w not in comp and vc[w] in (x, y):
                comp.add(w)
                stack.append(w)
    out = dict(vc)
    for v in comp:
        out[v] = y if vc[v] == x else x
    return out


# ---------------------------------------------------------------------------
# skeletons, equivalence, congruence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Skeleton:
    boundary: tuple[tuple[Edge, str], ...]  # T restricted to the border cycle
    partitions: tuple[tuple[str, tuple[tuple[int, ...], ...]], ...]

    def key(self) -> tuple:
        return (self.boundary, self.partitions)

    def to_json(self) -> dict:
        return {
            "boundary": {f"{u}-{v}": c for (u, v), c in self.boundary},
            "partitions": {
                color: [list(block) for block in blocks]
                for color, blocks in self.partitions
            },
        }


def skeleton(host: Host, t: EdgeColoring, omega: Sequence[int]) -> Skeleton:
    """Boundary colors plus, per color, which border vertices the region connects."""
    boundary = []
    k = len(omega)
    for i in range(k):
        e = canon_edge(omega[i], omega[(i + 1) % k])
        boundary.append((e, t[e]))
    boundary.sort()
    partitions = []
    for color in RGB:
        comp_of: dict[int, int] = {}
        nxt = 0
        for v in range(host.n):
            if v in comp_of:
                continue
            comp = [v]
            stack = [v]
            comp_of[v] = nxt
            while stack:
                u = stack.pop()
                for w in host.rotation[u]:
                    if w not in comp_of and t.get((u, w)) == color:
                        comp_of[w] = nxt
                        comp.append(w)
                        stack.append(w)
            nxt += 1
        blocks: dict[int, list[int]] = {}
        for v in omega:
            blocks.setdefault(comp_of[v], []).append(v)
        norm = tuple(sorted(tuple(sorted(b)) for b in blocks.values()))
        partitions.append((color, norm))
    return Skeleton(tuple(boundary), tuple(partitions))


def _synonym_skeleton_keys(host: Host, t: EdgeColoring, omega: Sequence[int]) -> tuple:
    from .coloring import synonyms

    return min(skeleton(host, s, omega).key() for s in synonyms(t))


def equivalent(
    host: Host, t1: EdgeColoring, t2: EdgeColoring, omega: Sequence[int]
) -> bool:
    """Same skeleton after canonical synonym normalization of the pair."""
    return _synonym_skeleton_keys(host, t1, omega) == _synonym_skeleton_keys(
        host, t2, omega
    )


def vcs_moves(host: Host, t: EdgeColoring) -> list[EdgeColoring]:
    """Tilings reachable by one vertex-color switch of the induced coloring."""
    try:
        vc = induce_vertex_coloring(host, t)
    except Exception:
        return []
    out: dict[tuple, EdgeColoring] = {}
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    seen_comp: set[tuple] = set()
    for pair in pairs:
        for seed in range(host.n):
            if vc[seed] not in pair:
                continue
            vc2 = apply_vcs(host, vc, pair, seed)
            sig = (pair, tuple(sorted(v for v in range(host.n) if vc2[v] != vc[v])))
            if sig in seen_comp:
                continue
            seen_comp.add(sig)
            if is_proper(host, vc2):
                t2 = induce_edge_coloring(host, vc2)
                out.setdefault(t2.key(), t2)
    return [out[k] for k in sorted(out)]


def congruence_classes(
    host: Host,
    tilings: Sequence[EdgeColoring],
    mode: str = "rgb",
    moves: tuple[str, ...] = ("ECS", "VCS"),
    cap: int = 20000,
) -> list[list[EdgeColoring]]:
    """Partition tilings into congruence classes under ECS (+ VCS) closure.

    States are canonical synonym representatives; the BFS applies every
    traceable closed ring (all colors) and, when the host is one piece, every
    vertex-color-switch component flip.
    """
    if len(tilings) > cap:
        raise CapExceeded(f"{len(tilings)} tilings exceeds cap {cap}")

    def state_of(t: EdgeColoring) -> tuple:
        return canonical_synonym(t).key()

    parent = list(range(len(tilings)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    def neighbors(t: EdgeColoring) -> list[EdgeColoring]:
        out: list[EdgeColoring] = []
        if "ECS" in moves:
            for color in RGB:
                for ring in rings_of(host, t, color):
                    try:
                        t2 = apply_ecs(host, t, ring)
                    except StaleRing:
                        continue
                    if check_tiling(host, t2, mode, ergb_diamonds="local").ok:
                        out.append(t2)
        if "VCS" in moves and host.is_one_piece and mode == "rgb":
            out.extend(vcs_moves(host, t))
        return out

    # flood fill the move graph once; moves are involutions, so meeting a
    # state owned by another seed merges the two classes
    owner: dict[tuple, int] = {}
    frontier: list[tuple[EdgeColoring, int]] = []
    for i, t in enumerate(tilings):
        s = state_of(t)
        if s in owner:
            union(i, owner[s])
        else:
            owner[s] = i
            frontier.append((t, i))
    expanded = 0
    while frontier:
        t, i = frontier.pop()
        expanded += 1
        if expanded > cap:
            raise CapExceeded(f"congruence closure exceeded {cap} states")
        i = find(i)
        for t2 in neighbors(t):
            s = state_of(t2)
            if s in owner:
                union(i, owner[s])
            else:
                owner[s] = i
                frontier.append((t2, i))

    groups: dict[int, list[EdgeColoring]] = {}
    for i, t in enumerate(tilings):
        groups.setdefault(find(i), []).append(t)
    return [groups[k] for k in sorted(groups)]
