"""Vertex 4-colorings and the vertex <-> edge color correspondence.

Edge colors are the single letters r, g, b (tiling colors), k (black) and
Y (yellow double-line).  The translation rule between a proper 4-coloring
and an RGB edge coloring:

    {1,3} and {2,4} pairs -> r
    {1,4} and {2,3} pairs -> g
    {1,2} and {3,4} pairs -> b

Each tiling color acts on {1,2,3,4} as an involution; together they form the
Klein group, which is what makes the correspondence propagate consistently
around triangles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import CapExceeded, NotGrandError, NotProper, RedOddCycle
from .planar import Edge, Host, canon_edge

RED, GREEN, BLUE, BLACK, YELLOW = "r", "g", "b", "k", "Y"
RGB = (RED, GREEN, BLUE)
ALL_COLORS = (RED, GREEN, BLUE, BLACK, YELLOW)

# Klein-group offset of each tiling color on GF(2)^2; vertex colors are
# 1=(0,0) 3=(1,0) 2=(0,1) 4=(1,1).
_OFFSET = {RED: (1, 0), GREEN: (1, 1), BLUE: (0, 1)}
_VERTEX_OF = {(0, 0): 1, (1, 0): 3, (0, 1): 2, (1, 1): 4}

_PAIR_COLOR = {
    frozenset({1, 3}): RED,
    frozenset({2, 4}): RED,
    frozenset({1, 4}): GREEN,
    frozenset({2, 3}): GREEN,
    frozenset({1, 2}): BLUE,
    frozenset({3, 4}): BLUE,
}


def third_color(a: str, b: str) -> str:
    """The missing tiling color of a bichromatic pair."""
    return next(c for c in RGB if c not in (a, b))


@dataclass(frozen=True)
class EdgeColoring:
    """Total map edge -> color letter, keyed by canonical (min, max) pairs."""

    assignment: Mapping[Edge, str]

    def __getitem__(self, e: Edge) -> str:
        return self.assignment[canon_edge(*e)]

    def get(self, e: Edge, default: str | None = None) -> str | None:
        return self.assignment.get(canon_edge(*e), default)

    def __contains__(self, e: Edge) -> bool:
        return canon_edge(*e) in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def items(self) -> Iterator[tuple[Edge, str]]:
        return iter(sorted(self.assignment.items()))

    def with_edges(self, patch: Mapping[Edge, str]) -> "EdgeColoring":
        merged = dict(self.assignment)
        for e, c in patch.items():
            merged[canon_edge(*e)] = c
        return EdgeColoring(merged)

    def edges_of_color(self, color: str) -> list[Edge]:
        return sorted(e for e, c in self.assignment.items() if c == color)

    def total_on(self, host: Host) -> bool:
        return all(canon_edge(u, v) in self.assignment for u, v in host.edges())

    def key(self) -> tuple[tuple[Edge, str], ...]:
        return tuple(sorted(self.assignment.items()))

    def permuted(self, mapping: Mapping[str, str]) -> "EdgeColoring":
        """Apply a permutation of r/g/b; black and yellow stay fixed."""
        return EdgeColoring(
            {e: mapping.get(c, c) for e, c in self.assignment.items()}
        )

    def relabeled(self, perm: Sequence[int]) -> "EdgeColoring":
        return EdgeColoring(
            {canon_edge(perm[u], perm[v]): c for (u, v), c in self.assignment.items()}
        )

    def to_json(self) -> dict:
        return {
            "edges": {f"{u}-{v}": c for (u, v), c in sorted(self.assignment.items())}
        }

    @staticmethod
    def from_json(doc: Mapping) -> "EdgeColoring":
        out = {}
        for key, c in doc["edges"].items():
            u, v = key.split("-")
            out[canon_edge(int(u), int(v))] = c
        return EdgeColoring(out)


def coloring_from_pairs(pairs: Mapping | Sequence) -> EdgeColoring:
    items = pairs.items() if isinstance(pairs, Mapping) else pairs
    return EdgeColoring({canon_edge(*e): c for e, c in items})


def vertex_coloring_to_json(vc: Mapping[int, int]) -> dict:
    return {"vertices": {str(v): c for v, c in sorted(vc.items())}}


def vertex_coloring_from_json(doc: Mapping) -> dict[int, int]:
    return {int(v): int(c) for v, c in doc["vertices"].items()}


def is_proper(host: Host, vc: Mapping[int, int]) -> bool:
    return all(vc[u] != vc[v] for u, v in host.edges())


def induce_edge_coloring(host: Host, vc: Mapping[int, int]) -> EdgeColoring:
    """Translate a proper 4-coloring into its RGB edge coloring."""
    if not is_proper(host, vc):
        bad = next((u, v) for u, v in host.edges() if vc[u] == vc[v])
        raise NotProper(f"vertices {bad[0]} and {bad[1]} share color {vc[bad[0]]}")
    return EdgeColoring(
        {
            (u, v): _PAIR_COLOR[frozenset({vc[u], vc[v]})]
            for u, v in host.edges()
        }
    )


def induce_vertex_coloring(host: Host, t: EdgeColoring) -> dict[int, int]:
    """Recover a proper 4-coloring from an RGB tiling on a one-piece host.

    Propagates Klein-group offsets from vertex 0 (anchored to color 1, so the
    red-side part V13 contains vertex 0).  Fails with NotGrandError when the
    black-side bipartition clashes, RedOddCycle when the red alternation does.
    """
    if not host.is_one_piece:
        raise NotGrandError("induced colorings need a one-piece host")
    phi: dict[int, tuple[int, int]] = {0: (0, 0)}
    stack = [0]
    conflict: tuple[int, int, str] | None = None
    while stack and conflict is None:
        u = stack.pop()
        for v in host.rotation[u]:
            c = t[(u, v)]
            if c not in _OFFSET:
                raise RedOddCycle(
                    f"edge {canon_edge(u, v)} is {c}; induced colorings need pure RGB"
                )
            ox, oy = _OFFSET[c]
            want = (phi[u][0] ^ ox, phi[u][1] ^ oy)
            if v not in phi:
                phi[v] = want
                stack.append(v)
            elif phi[v] != want:
                conflict = (u, v, c)
    if conflict is not None:
        u, v, c = conflict
        ox, oy = _OFFSET[c]
        if (phi[u][1] ^ oy) != phi[v][1]:
            raise NotGrandError(
                f"green/blue subgraph is not bipartite around edge {canon_edge(u, v)}"
            )
        raise RedOddCycle(
            f"red alternation clashes on edge {canon_edge(u, v)}"
        )
    return {v: _VERTEX_OF[phi[v]] for v in range(host.n)}


def enumerate_4colorings(
    host: Host, cap_n: int = 18, limit: int | None = None
) -> Iterator[dict[int, int]]:
    """Exhaustive proper 4-colorings by backtracking, deterministic order.

    Vertices are processed by degree descending (index as tie-break); colors
    tried in increasing order.  Trustworthiness over speed: this is the oracle
    the tiling equivalences are checked against.
    """
    if host.n > cap_n:
        raise CapExceeded(f"4-coloring oracle capped at n={cap_n}")
    order = sorted(range(host.n), key=lambda v: (-host.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    vc: dict[int, int] = {}
    count = 0

    def backtrack(i: int) -> Iterator[dict[int, int]]:
        nonlocal count
        if i == host.n:
            yield dict(vc)
            return
        v = order[i]
        banned = {vc[u] for u in host.rotation[v] if pos[u] < i}
        for c in (1, 2, 3, 4):
            if c not in banned:
                vc[v] = c
                yield from backtrack(i + 1)
                del vc[v]

    for coloring in backtrack(0):
        yield coloring
        count += 1
        if limit is not None and count >= limit:
            return


def count_4colorings(host: Host, cap_n: int = 18) -> int:
    return sum(1 for _ in enumerate_4colorings(host, cap_n=cap_n))


def exists_4coloring(host: Host) -> bool:
    return next(enumerate_4colorings(host, limit=1), None) is not None


_S3 = [
    dict(zip(RGB, p)) for p in sorted(itertools.permutations(RGB))
]


def synonyms(t: EdgeColoring) -> list[EdgeColoring]:
    """Orbit of t under the six r/g/b permutations, deduplicated and sorted.

    The canonical representative is the first element (lexicographically
    least key); orbit size always divides 6.
    """
    orbit = {}
    for perm in _S3:
        s = t.permuted(perm)
        orbit[s.key()] = s
    return [orbit[k] for k in sorted(orbit)]


def canonical_synonym(t: EdgeColoring) -> EdgeColoring:
    return synonyms(t)[0]
