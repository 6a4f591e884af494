"""Rotation-system planar triangulations and semi-MPGs.

A graph is stored as a rotation system: for every vertex the cyclic sequence
of its neighbors in embedding order.  Faces are traced with the rule

    next(u -> v) = (v, w)   where w immediately precedes u in rotation[v]

so every directed edge lies on exactly one face and Euler's formula decides
planarity of the embedding.  An MPG keeps all faces triangular; a semi-MPG
designates some faces as outer facets (holes).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BoundaryMismatch,
    CapExceeded,
    ContractionCreatesMultiEdge,
    DisconnectedGraph,
    EdgeNotFound,
    GraphError,
    HeaderMismatch,
    MultiEdge,
    NonTriangleFace,
    NotConnectedTD,
    NotPlanarRotation,
    NotSimpleCycle,
    ResultNotSimple,
    TruncatedStream,
    VertexIndexOutOfRange,
)

Edge = tuple[int, int]
Face = tuple[int, ...]

PLANAR_CODE_HEADER = b">>planar_code<<"


def canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _face_key(face: Face) -> tuple:
    edges = sorted(canon_edge(face[i], face[(i + 1) % len(face)]) for i in range(len(face)))
    return (len(face), tuple(edges), face)


def _normalize_cycle(cycle: Sequence[int]) -> Face:
    """Rotate a cyclic vertex sequence to start at its minimum, keeping direction."""
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def _cycles_match(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if two vertex cycles are equal up to rotation and reversal."""
    if len(a) != len(b):
        return False
    fwd = _normalize_cycle(list(a))
    return fwd == _normalize_cycle(list(b)) or fwd == _normalize_cycle(list(reversed(b)))


def trace_faces(rotation: Sequence[Sequence[int]]) -> list[Face]:
    """Orbit decomposition of directed edges under the face-successor rule."""
    idx = [
        {u: i for i, u in enumerate(nbrs)}
        for nbrs in rotation
    ]
    seen: set[tuple[int, int]] = set()
    faces: list[Face] = []
    for v0, nbrs in enumerate(rotation):
        for u0 in nbrs:
            if (v0, u0) in seen:
                continue
            cycle = []
            u, v = v0, u0
            while (u, v) not in seen:
                seen.add((u, v))
                cycle.append(u)
                r = rotation[v]
                u, v = v, r[(idx[v][u] - 1) % len(r)]
            faces.append(_normalize_cycle(cycle))
    faces.sort(key=_face_key)
    return faces


def _check_rotation(n: int, rotation: Sequence[Sequence[int]]) -> set[Edge]:
    if n < 3:
        raise GraphError(f"need n >= 3, got {n}")
    if len(rotation) != n:
        raise GraphError("rotation table size differs from n")
    edges: set[Edge] = set()
    for v, nbrs in enumerate(rotation):
        if len(set(nbrs)) != len(nbrs):
            raise MultiEdge(f"repeated neighbor at vertex {v}")
        for u in nbrs:
            if u == v:
                raise MultiEdge(f"loop at vertex {v}")
            if not 0 <= u < n:
                raise GraphError(f"neighbor {u} out of range at vertex {v}")
            edges.add(canon_edge(u, v))
    for u, v in edges:
        if u not in rotation[v] or v not in rotation[u]:
            raise MultiEdge(f"rotation not symmetric on edge {u}-{v}")
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        for u in rotation[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != n:
        raise DisconnectedGraph(f"only {len(seen)} of {n} vertices reachable")
    return edges


@dataclass(frozen=True)
class Triangulation:
    """Maximal planar graph; every face (including the unbounded one) is a triangle."""

    n: int
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...] = field(compare=False)

    @staticmethod
    def build(rotation: Sequence[Sequence[int]]) -> "Triangulation":
        n = len(rotation)
        edges = _check_rotation(n, rotation)
        faces = trace_faces(rotation)
        if n - len(edges) + len(faces) != 2:
            raise NotPlanarRotation(
                f"Euler check failed: n={n} E={len(edges)} F={len(faces)}"
            )
        for f in faces:
            if len(f) != 3:
                raise NonTriangleFace(f"face {f} has {len(f)} sides")
        if len(edges) != 3 * n - 6:
            raise NonTriangleFace(f"|E|={len(edges)} != 3n-6={3 * n - 6}")
        return Triangulation(n, tuple(tuple(r) for r in rotation), tuple(faces))

    # -- shared graph protocol -------------------------------------------------

    @property
    def triangles(self) -> tuple[Face, ...]:
        return self.faces

    @property
    def outer_facets(self) -> tuple[Face, ...]:
        return ()

    @property
    def is_one_piece(self) -> bool:
        return True

    def edges(self) -> list[Edge]:
        return sorted({canon_edge(u, v) for v, ns in enumerate(self.rotation) for u in ns})

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation[u] if 0 <= u < self.n else False

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def to_json(self) -> dict:
        return {"n": self.n, "rotation": [list(r) for r in self.rotation]}


@dataclass(frozen=True)
class SemiMpg:
    """Planar graph whose non-triangular faces are designated outer facets."""

    n: int
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...] = field(compare=False)
    outer_facets: tuple[Face, ...] = ()
    shared_edge_allowed: bool = False

    @staticmethod
    def build(
        rotation: Sequence[Sequence[int]],
        outer_facets: Sequence[Sequence[int]],
        shared_edge_allowed: bool = False,
    ) -> "SemiMpg":
        n = len(rotation)
        edges = _check_rotation(n, rotation)
        faces = trace_faces(rotation)
        if n - len(edges) + len(faces) != 2:
            raise NotPlanarRotation(
                f"Euler check failed: n={n} E={len(edges)} F={len(faces)}"
            )
        matched: list[Face] = []
        used: set[int] = set()
        for of in outer_facets:
            if len(set(of)) != len(of):
                raise NotSimpleCycle(f"outer facet {of} repeats a vertex")
            if len(of) < 3:
                raise GraphError(f"outer facet {of} shorter than a 3-gon")
            hit = None
            for i, f in enumerate(faces):
                if i not in used and _cycles_match(of, f):
                    hit = i
                    break
            if hit is None:
                raise GraphError(f"declared outer facet {of} is not a face")
            used.add(hit)
            matched.append(faces[hit])
        for i, f in enumerate(faces):
            if i not in used and len(f) != 3:
                raise NonTriangleFace(f"non-outer face {f} has {len(f)} sides")
        if not shared_edge_allowed:
            taken: set[Edge] = set()
            for f in matched:
                for i in range(len(f)):
                    e = canon_edge(f[i], f[(i + 1) % len(f)])
                    if e in taken:
                        raise GraphError(
                            f"outer facets share edge {e}; pass shared_edge_allowed"
                        )
                    taken.add(e)
        matched.sort(key=_face_key)
        return SemiMpg(
            n,
            tuple(tuple(r) for r in rotation),
            tuple(faces),
            tuple(matched),
            shared_edge_allowed,
        )

    # -- shared graph protocol -------------------------------------------------

    @property
    def triangles(self) -> tuple[Face, ...]:
        outer = set(self.outer_facets)
        return tuple(f for f in self.faces if f not in outer or len(f) != 3 and False)

    @property
    def is_one_piece(self) -> bool:
        return len(self.outer_facets) <= 1

    def edges(self) -> list[Edge]:
        return sorted({canon_edge(u, v) for v, ns in enumerate(self.rotation) for u in ns})

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation[u] if 0 <= u < self.n else False

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def boundary_edges(self) -> list[Edge]:
        out = []
        for f in self.outer_facets:
            for i in range(len(f)):
                out.append(canon_edge(f[i], f[(i + 1) % len(f)]))
        return out

    def to_json(self) -> dict:
        doc = {
            "n": self.n,
            "rotation": [list(r) for r in self.rotation],
            "outer_facets": [list(f) for f in self.outer_facets],
        }
        if self.shared_edge_allowed:
            doc["shared_edge_allowed"] = True
        return doc


Host = Triangulation | SemiMpg


def triangles_of(g: Host) -> tuple[Face, ...]:
    """All triangle faces that carry a tiling constraint (outer facets excluded)."""
    if isinstance(g, Triangulation):
        return g.faces
    outer = set(g.outer_facets)
    return tuple(f for f in g.faces if not (f in outer))


def validate(raw: dict) -> Host:
    """Parse and validate a JSON graph document into a Triangulation or SemiMpg."""
    try:
        n = int(raw["n"])
        rotation = [list(map(int, r)) for r in raw["rotation"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc
    if n != len(rotation):
        raise GraphError("n does not match rotation length")
    outer = raw.get("outer_facets") or []
    if outer:
        return SemiMpg.build(rotation, outer, bool(raw.get("shared_edge_allowed", False)))
    return Triangulation.build(rotation)


# ---------------------------------------------------------------------------
# planar_code ingestion
# ---------------------------------------------------------------------------

def parse_planar_code(data: bytes) -> list[Host]:
    """Decode a planar_code byte stream into validated graphs, order preserved.

    Layout: optional ASCII header ">>planar_code<<"; per graph one byte n,
    then for each vertex its 1-based neighbors in rotation order, 0-terminated.
    Records whose faces are all triangles validate as Triangulations; any
    non-triangular faces become outer facets of a SemiMpg.
    """
    pos = 0
    if data[:2] == b">>":
        end = data.find(b"<<", 2)
        if end < 0:
            raise HeaderMismatch("unterminated >>...<< header")
        if data[: end + 2] != PLANAR_CODE_HEADER:
            raise HeaderMismatch(f"unexpected header {data[:end + 2]!r}")
        pos = end + 2
    graphs: list[Host] = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise VertexIndexOutOfRange("graph with n=0")
        rotation: list[list[int]] = []
        for v in range(n):
            nbrs: list[int] = []
            while True:
                if pos >= len(data):
                    raise TruncatedStream(
                        f"stream ended inside record (vertex {v + 1} of {n})"
                    )
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise VertexIndexOutOfRange(f"neighbor byte {b} > n={n}")
                nbrs.append(b - 1)
            rotation.append(nbrs)
        faces = trace_faces(rotation)
        non_tri = [f for f in faces if len(f) != 3]
        if non_tri:
            graphs.append(SemiMpg.build(rotation, non_tri))
        else:
            graphs.append(Triangulation.build(rotation))
    return graphs


def to_planar_code(graphs: Iterable[Host], header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for g in graphs:
        if g.n > 255:
            raise CapExceeded("planar_code limited to n <= 255")
        out.append(g.n)
        for nbrs in g.rotation:
            out.extend(u + 1 for u in nbrs)
            out.append(0)
    return bytes(out)


# ---------------------------------------------------------------------------
# canonical form, relabeling
# ---------------------------------------------------------------------------

def rotation_from_faces(
    n: int, faces: Sequence[Sequence[int]]
) -> list[tuple[int, ...]]:
    """Rotation system from a complete face list (outer holes included).

    Every edge must lie on exactly two faces.  Orientations are propagated
    from the first face so that adjacent faces traverse their shared edge in
    opposite directions; the rotation then reads each vertex's corners off
    the oriented faces.
    """
    by_edge: dict[Edge, list[int]] = {}
    for i, f in enumerate(faces):
        for j in range(len(f)):
            by_edge.setdefault(canon_edge(f[j], f[(j + 1) % len(f)]), []).append(i)
    for e, fs in by_edge.items():
        if len(fs) != 2:
            raise GraphError(f"edge {e} lies on {len(fs)} faces, need 2")
    oriented: dict[int, tuple[int, ...]] = {0: tuple(faces[0])}
    stack = [0]
    while stack:
        i = stack.pop()
        f = oriented[i]
        for j in range(len(f)):
            u, v = f[j], f[(j + 1) % len(f)]
            other = next(k for k in by_edge[canon_edge(u, v)] if k != i)
            g = list(faces[other])
            # the neighbor must traverse the shared edge as v -> u
            iu = g.index(u)
            fwd = g[(iu + 1) % len(g)] == v
            want = tuple(reversed(g)) if fwd else tuple(g)
            if other in oriented:
                if _normalize_cycle(list(oriented[other])) != _normalize_cycle(list(want)):
                    raise NotPlanarRotation("face orientations cannot be made coherent")
            else:
                oriented[other] = want
                stack.append(other)
    if len(oriented) != len(faces):
        raise GraphError("face complex is not connected")
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for f in oriented.values():
        k = len(f)
        for j in range(k):
            u, v, w = f[j], f[(j + 1) % k], f[(j + 2) % k]
            # corner u -> v -> w: u follows w in rotation[v]
            succ[v][w] = u
    rotation: list[tuple[int, ...]] = []
    for v in range(n):
        if not succ[v]:
            raise GraphError(f"vertex {v} appears in no face")
        start = next(iter(succ[v]))
        cyc = [start]
        while True:
            nxt = succ[v][cyc[-1]]
            if nxt == start:
                break
            cyc.append(nxt)
        if len(cyc) != len(succ[v]):
            raise NotPlanarRotation(f"corners at vertex {v} do not close one cycle")
        rotation.append(tuple(cyc))
    return rotation


def graph_from_faces(
    faces: Sequence[Sequence[int]],
    outer: Sequence[Sequence[int]] = (),
    shared_edge_allowed: bool = False,
) -> Host:
    """Build and validate a host straight from its face list."""
    n = 1 + max(v for f in faces for v in f)
    rotation = rotation_from_faces(n, faces)
    try:
        if outer:
            return SemiMpg.build(rotation, outer, shared_edge_allowed)
        return Triangulation.build(rotation)
    except NotPlanarRotation:
        # the propagated orientation may be globally mirrored relative to the
        # trace rule; the mirror is the same embedded graph
        rotation = [tuple(reversed(r)) for r in rotation]
        if outer:
            return SemiMpg.build(rotation, outer, shared_edge_allowed)
        return Triangulation.build(rotation)


def relabel(g: Host, perm: Sequence[int]) -> Host:
    """Apply vertex permutation perm (old index -> new index)."""
    rot: list[tuple[int, ...]] = [()] * g.n
    for v, nbrs in enumerate(g.rotation):
        rot[perm[v]] = tuple(perm[u] for u in nbrs)
    if isinstance(g, Triangulation):
        return Triangulation.build(rot)
    outer = [[perm[v] for v in f] for f in g.outer_facets]
    return SemiMpg.build(rot, outer, g.shared_edge_allowed)


def mirror(g: Host) -> Host:
    """Reverse every rotation list: the mirror-image embedding."""
    rot = [tuple(reversed(nbrs)) for nbrs in g.rotation]
    if isinstance(g, Triangulation):
        return Triangulation.build(rot)
    return SemiMpg.build(rot, [list(f) for f in g.outer_facets], g.shared_edge_allowed)


def _bfs_code(g: Host, start: tuple[int, int], sign: int) -> tuple[int, ...]:
    label = {start[0]: 0, start[1]: 1}
    order = [start[0], start[1]]
    ref = {start[0]: start[1], start[1]: start[0]}
    code: list[int] = []
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        nbrs = g.rotation[x] if sign > 0 else tuple(reversed(g.rotation[x]))
        k = nbrs.index(ref[x])
        for j in range(len(nbrs)):
            w = nbrs[(k + j) % len(nbrs)]
            if w not in label:
                label[w] = len(order)
                order.append(w)
                ref[w] = x
            code.append(label[w])
        code.append(-1)
    if isinstance(g, SemiMpg) and g.outer_facets:
        tagged = []
        for f in g.outer_facets:
            cyc = [label[v] for v in f]
            tagged.append(min(_normalize_cycle(cyc), _normalize_cycle(list(reversed(cyc)))))
        for f in sorted(tagged):
            code.append(-2)
            code.extend(f)
    return tuple(code)


def canonical_code(g: Host) -> bytes:
    """Canonical byte string: equal iff isomorphic as embedded graphs.

    Minimum BFS rotation code over every starting directed edge and both
    orientations; fine for desk-scale graphs (n <= 16 or so).
    """
    best: tuple[int, ...] | None = None
    for v, nbrs in enumerate(g.rotation):
        for u in nbrs:
            for sign in (1, -1):
                c = _bfs_code(g, (v, u), sign)
                if best is None or c < best:
                    best = c
    assert best is not None
    return repr((g.n, best)).encode()


def isomorphic_brute(g: Host, h: Host) -> bool:
    """Abstract-graph isomorphism by permutation search (oracle; small n only)."""
    from itertools import permutations

    if g.n != h.n or len(g.edges()) != len(h.edges()):
        return False
    ge = set(g.edges())
    degs_g = sorted(len(r) for r in g.rotation)
    degs_h = sorted(len(r) for r in h.rotation)
    if degs_g != degs_h:
        return False
    he = set(h.edges())
    for perm in permutations(range(g.n)):
        if all(canon_edge(perm[u], perm[v]) in he for u, v in ge):
            return True
    return False


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def k4() -> Triangulation:
    return Triangulation.build([(1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2)])


def _subdivide(g: Triangulation, face: Face) -> Triangulation:
    """Insert a new vertex inside a face (stacked-triangulation step)."""
    a, b, c = face
    v = g.n
    rot = [list(r) for r in g.rotation] + [[a, b, c]]
    # at each corner the new vertex slots between the two face neighbors,
    # matching the face-successor rule (pred-of-incoming == outgoing)
    for x, after in ((a, b), (b, c), (c, a)):
        i = rot[x].index(after)
        rot[x].insert(i + 1, v)
    return Triangulation.build(rot)


def generate_stacked(
    n: int,
    mode: str = "exhaustive",
    seed: int = 0,
    cap_exhaustive: int = 10,
    cap_random: int = 16,
) -> list[Triangulation]:
    """Stacked (face-subdivision) triangulations on n vertices.

    Exhaustive mode deduplicates by canonical_code and is deterministic;
    random mode returns a single seeded sample path from K4.
    """
    if n < 4:
        raise CapExceeded(f"stacked triangulations need n >= 4, got {n}")
    if mode == "exhaustive":
        if n > cap_exhaustive:
            raise CapExceeded(f"exhaustive generation capped at n={cap_exhaustive}")
        level: dict[bytes, Triangulation] = {canonical_code(k4()): k4()}
        for _ in range(n - 4):
            nxt: dict[bytes, Triangulation] = {}
            for g in level.values():
                for face in g.faces:
                    h = _subdivide(g, face)
                    nxt.setdefault(canonical_code(h), h)
            level = nxt
        return [level[k] for k in sorted(level)]
    if mode == "random":
        if n > cap_random:
            raise CapExceeded(f"random generation capped at n={cap_random}")
        rng = random.Random(seed)
        g = k4()
        for _ in range(n - 4):
            g = _subdivide(g, rng.choice(g.faces))
        return [g]
    raise ValueError(f"unknown mode {mode!r}")


def wheel(k: int) -> SemiMpg:
    """Wheel with hub 0 and k rim vertices, rim declared as the outer facet."""
    rim = list(range(1, k + 1))
    rot: list[list[int]] = [rim]
    for i, v in enumerate(rim):
        prv = rim[(i - 1) % k]
        nxt = rim[(i + 1) % k]
        rot.append([nxt, 0, prv])
    return SemiMpg.build(rot, [rim])


def single_triangle() -> SemiMpg:
    """A lone 3-facet: the smallest one-piece semi-MPG."""
    return SemiMpg.build([(1, 2), (2, 0), (0, 1)], [[0, 2, 1]])


def octahedron() -> Triangulation:
    return Triangulation.build(
        [
            (1, 2, 3, 4),
            (0, 4, 5, 2),
            (0, 1, 5, 3),
            (0, 2, 5, 4),
            (0, 3, 5, 1),
            (2, 1, 4, 3),
        ]
    )


def icosahedron() -> Triangulation:
    # top 0, upper ring 1-5, lower ring 6-10 (offset half a step), bottom 11
    rot = [
        (1, 2, 3, 4, 5),
        (0, 5, 6, 7, 2),
        (0, 1, 7, 8, 3),
        (0, 2, 8, 9, 4),
        (0, 3, 9, 10, 5),
        (0, 4, 10, 6, 1),
        (11, 7, 1, 5, 10),
        (11, 8, 2, 1, 6),
        (11, 9, 3, 2, 7),
        (11, 10, 4, 3, 8),
        (11, 6, 5, 4, 9),
        (6, 10, 9, 8, 7),
    ]
    return Triangulation.build(rot)


# ---------------------------------------------------------------------------
# surgery
# ---------------------------------------------------------------------------

def _faces_with_directed_edge(g: Host) -> dict[tuple[int, int], Face]:
    m: dict[tuple[int, int], Face] = {}
    for f in g.faces:
        for i in range(len(f)):
            m[(f[i], f[(i + 1) % len(f)])] = f
    return m


def diamond_of(g: Host, e: Edge) -> tuple[int, int]:
    """The two opposite corners (N, S) of the two faces flanking edge e."""
    a, b = e
    de = _faces_with_directed_edge(g)
    f1 = de.get((a, b))
    f2 = de.get((b, a))
    if f1 is None or f2 is None:
        raise EdgeNotFound(f"edge {e} not in host")
    if len(f1) != 3 or len(f2) != 3:
        raise GraphError(f"edge {e} does not lie between two triangles")
    n = next(x for x in f1 if x not in (a, b))
    s = next(x for x in f2 if x not in (a, b))
    return n, s


def remove_edge(g: Host, e: Edge) -> SemiMpg:
    """Delete edge e, merging its two incident faces into a new outer facet."""
    a, b = canon_edge(*e)
    if not g.has_edge(a, b):
        raise EdgeNotFound(f"edge {a}-{b} not in host")
    rot = [list(r) for r in g.rotation]
    rot[a].remove(b)
    rot[b].remove(a)
    old = {f for f in g.faces}
    new_faces = trace_faces(rot)
    merged = [f for f in new_faces if f not in old]
    if len(merged) != 1:
        raise NotSimpleCycle(f"removing {a}-{b} does not leave a single merged face")
    survivors = [list(f) for f in g.outer_facets if f in set(new_faces)]
    shared = isinstance(g, SemiMpg) and g.shared_edge_allowed
    return SemiMpg.build(rot, survivors + [list(merged[0])], shared)


def add_edge_in_facet(g: SemiMpg, e: Edge) -> Host:
    """Inverse of remove_edge: draw e across an outer facet, splitting it."""
    a, b = canon_edge(*e)
    facet = None
    for f in g.outer_facets:
        if a in f and b in f:
            facet = f
            break
    if facet is None:
        raise EdgeNotFound(f"no outer facet contains both {a} and {b}")
    if g.has_edge(a, b):
        raise MultiEdge(f"edge {a}-{b} already present")
    # the new neighbor slots in right after the facet-successor at each endpoint
    rot = [list(r) for r in g.rotation]
    k = len(facet)
    for x, y in ((a, b), (b, a)):
        i = facet.index(x)
        nxt = facet[(i + 1) % k]
        rot[x].insert(rot[x].index(nxt) + 1, y)
    ia, ib = facet.index(a), facet.index(b)
    if ia > ib:
        ia, ib = ib, ia
    part1 = list(facet[ia : ib + 1])
    part2 = list(facet[ib:]) + list(facet[: ia + 1])
    outer = [list(f) for f in g.outer_facets if f != facet]
    outer += [p for p in (part1, part2) if len(p) > 3]
    remaining_triangles = [p for p in (part1, part2) if len(p) == 3]
    del remaining_triangles
    if outer:
        return SemiMpg.build(rot, outer, g.shared_edge_allowed)
    return Triangulation.build(rot)


def contract_edge(g: Triangulation, e: Edge) -> Triangulation:
    """Merge the endpoints of e into one vertex (the paper's a=b construction)."""
    a, b = canon_edge(*e)
    if not g.has_edge(a, b):
        raise EdgeNotFound(f"edge {a}-{b} not in host")
    north, south = diamond_of(g, (a, b))
    common = set(g.rotation[a]) & set(g.rotation[b])
    if common != {north, south}:
        raise ContractionCreatesMultiEdge(
            f"{a} and {b} share neighbors {sorted(common - {north, south})} besides N,S"
        )
    rot = [list(r) for r in g.rotation]
    # splice b's fan (minus a, N, S) into a's rotation in place of b
    rb = rot[b]
    ib = rb.index(a)
    fan = [rb[(ib + j) % len(rb)] for j in range(1, len(rb))]  # from after a around
    fan = [x for x in fan if x not in (north, south)]
    ia = rot[a].index(b)
    rot[a] = rot[a][:ia] + fan + rot[a][ia + 1 :]
    for w in fan:
        rot[w][rot[w].index(b)] = a
    rot[north].remove(b)
    rot[south].remove(b)
    rot[b] = []
    # drop b and compact labels
    rot.pop(b)
    remap = [v if v < b else v - 1 for v in range(g.n)]
    rot = [[remap[u] for u in nbrs] for nbrs in rot]
    return Triangulation.build(rot)


def link_cycle(g: Host, td: Iterable[int]) -> Face:
    """Boundary cycle of the neighbors surrounding td, in embedding order."""
    td_set = set(td)
    if not td_set or not td_set <= set(range(g.n)):
        raise NotConnectedTD(f"bad TD vertex set {sorted(td_set)}")
    # induced connectivity
    start = next(iter(td_set))
    seen = {start}
    stack = [start]
    while stack:
        for u in g.rotation[stack.pop()]:
            if u in td_set and u not in seen:
                seen.add(u)
                stack.append(u)
    if seen != td_set:
        raise NotConnectedTD("TD does not induce a connected subgraph")
    rot = [
        [u for u in nbrs if u not in td_set] if v not in td_set else []
        for v, nbrs in enumerate(g.rotation)
    ]
    keep = [v for v in range(g.n) if v not in td_set]
    if any(not rot[v] for v in keep):
        raise NotSimpleCycle("deleting TD isolates a vertex")
    comp = {keep[0]}
    stack = [keep[0]]
    while stack:
        for u in rot[stack.pop()]:
            if u not in comp:
                comp.add(u)
                stack.append(u)
    if len(comp) != len(keep):
        raise NotSimpleCycle("TD is not solid: deleting it disconnects the graph")
    sub_faces = trace_faces([rot[v] if v in comp else [] for v in range(g.n)])
    sub_faces = [f for f in sub_faces if f]
    old = set(g.faces)
    fresh = [f for f in sub_faces if f not in old]
    if len(fresh) != 1:
        raise NotSimpleCycle(f"deleting TD opens {len(fresh)} holes, expected 1")
    omega = fresh[0]
    if len(set(omega)) != len(omega):
        raise NotSimpleCycle(f"link walk {omega} repeats a vertex")
    nbhd = {u for v in td_set for u in g.rotation[v] if u not in td_set}
    if set(omega) != nbhd:
        raise NotSimpleCycle("link cycle misses some neighbors of TD")
    return omega


def extract_interior(g: Host, td: Iterable[int]) -> tuple[SemiMpg, list[int]]:
    """The region Sigma = TD + its link, as a SemiMpg with the link as outer facet.

    Returns (piece, boundary) where boundary lists the piece's vertex ids in
    the same order as link_cycle(g, td); feeding both back to transplant
    reproduces the host.
    """
    td_set = set(td)
    omega = link_cycle(g, td_set)
    keep = sorted(td_set | set(omega))
    to_new = {v: i for i, v in enumerate(keep)}
    keep_set = set(keep)
    rot = [[to_new[u] for u in g.rotation[v] if u in keep_set] for v in keep]
    boundary = [to_new[v] for v in omega]
    piece = SemiMpg.build(rot, [boundary])
    return piece, boundary


def transplant(
    g: Host,
    td: Iterable[int],
    piece: SemiMpg,
    piece_boundary: Sequence[int] | None = None,
) -> Host:
    """Replace the interior of TD's link with another region.

    piece must be one piece with a single outer facet whose length matches the
    host link cycle; piece_boundary (default: the stored outer facet) pairs the
    piece's boundary vertices position-by-position with link_cycle(g, td).
    """
    td_set = set(td)
    omega = link_cycle(g, td_set)
    if len(piece.outer_facets) != 1:
        raise BoundaryMismatch("interior piece must have exactly one outer facet")
    facet = piece.outer_facets[0]
    if piece_boundary is None:
        piece_boundary = list(facet)
    if len(piece_boundary) != len(omega):
        raise BoundaryMismatch(
            f"piece boundary has {len(piece_boundary)} vertices, host link {len(omega)}"
        )
    if not _cycles_match(piece_boundary, facet):
        raise BoundaryMismatch("piece_boundary is not the piece's outer facet cycle")
    b_index = {v: i for i, v in enumerate(piece_boundary)}
    interior = [v for v in range(piece.n) if v not in b_index]

    # piece chords between non-consecutive boundary vertices would double host edges
    k = len(omega)
    for u in range(piece.n):
        for w in piece.rotation[u]:
            if u in b_index and w in b_index:
                d = abs(b_index[u] - b_index[w]) % k
                if d not in (1, k - 1):
                    hu, hw = omega[b_index[u]], omega[b_index[w]]
                    if g.has_edge(hu, hw):
                        raise ResultNotSimple(
                            f"chord {u}-{w} duplicates host edge {hu}-{hw}"
                        )

    survivors = [v for v in range(g.n) if v not in td_set]
    to_new = {v: i for i, v in enumerate(survivors)}
    fresh = {v: len(survivors) + i for i, v in enumerate(interior)}

    def piece_to_new(v: int) -> int:
        if v in b_index:
            return to_new[omega[b_index[v]]]
        return fresh[v]

    rot: list[list[int]] = []
    for v in survivors:
        if v not in set(omega):
            rot.append([to_new[u] for u in g.rotation[v]])
            continue
        i = omega.index(v)
        p = piece_boundary[i]
        # piece-side arc at p: strictly between next and previous boundary vertex
        pn = piece_boundary[(i + 1) % k]
        pp = piece_boundary[(i - 1) % k]
        pr = piece.rotation[p]
        j = pr.index(pn)
        arc: list[int] = []
        step = 1
        # walk from pn toward pp; the stored outer facet fixes the direction
        probe = [pr[(j + s) % len(pr)] for s in range(1, len(pr))]
        if pp in probe:
            arc = probe[: probe.index(pp)]
        else:
            raise BoundaryMismatch(f"boundary neighbors not adjacent at piece vertex {p}")
        del step
        host_r = list(g.rotation[v])
        out: list[int] = []
        # replace the td-arc with the mapped piece arc, anchored at omega neighbors
        m = len(host_r)
        j0 = host_r.index(omega[(i + 1) % k])
        seq = [host_r[(j0 + s) % m] for s in range(m)]
        td_run = [x for x in seq if x in td_set]
        first_td = next((ix for ix, x in enumerate(seq) if x in td_set), None)
        if first_td is not None:
            run_len = len(td_run)
            if seq[first_td : first_td + run_len] != td_run:
                raise BoundaryMismatch(f"TD neighbors not contiguous at host vertex {v}")
            seq = seq[:first_td] + ["ARC"] + seq[first_td + run_len :]
        else:
            seq = ["ARC"] + seq
        for x in seq:
            if x == "ARC":
                out.extend(piece_to_new(u) for u in arc)
            else:
                out.append(to_new[x])
        rot.append(out)
    for v in interior:
        rot.append([piece_to_new(u) for u in piece.rotation[v]])

    outer = [
        [to_new[x] for x in f]
        for f in g.outer_facets
        if not (set(f) & td_set)
    ]
    try:
        if outer:
            return SemiMpg.build(rot, outer, getattr(g, "shared_edge_allowed", False))
        return Triangulation.build(rot)
    except MultiEdge as exc:
        raise ResultNotSimple(str(exc)) from exc
