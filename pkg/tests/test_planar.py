from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from rgbt import planar
from rgbt.errors import (
    BoundaryMismatch,
    CapExceeded,
    ContractionCreatesMultiEdge,
    DisconnectedGraph,
    EdgeNotFound,
    HeaderMismatch,
    MultiEdge,
    NotConnectedTD,
    NotPlanarRotation,
    TruncatedStream,
    VertexIndexOutOfRange,
)
from rgbt.planar import (
    SemiMpg,
    Triangulation,
    add_edge_in_facet,
    canonical_code,
    contract_edge,
    extract_interior,
    generate_stacked,
    graph_from_faces,
    icosahedron,
    isomorphic_brute,
    k4,
    link_cycle,
    mirror,
    octahedron,
    parse_planar_code,
    relabel,
    remove_edge,
    to_planar_code,
    transplant,
    triangles_of,
    validate,
    wheel,
)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def test_k4_validates(g_k4):
    assert g_k4.n == 4
    assert len(g_k4.edges()) == 6
    assert len(g_k4.faces) == 4


def test_w5_semi_mpg(g_w5):
    assert isinstance(g_w5, SemiMpg)
    assert len(triangles_of(g_w5)) == 5
    assert len(g_w5.outer_facets[0]) == 5
    assert g_w5.is_one_piece


def test_validate_json_document(g_k4):
    doc = g_k4.to_json()
    g = validate(doc)
    assert isinstance(g, Triangulation)
    assert canonical_code(g) == canonical_code(g_k4)


def test_reversed_rotation_breaks_planarity(g_k4):
    rot = [list(r) for r in g_k4.rotation]
    rot[0] = list(reversed(rot[0]))
    with pytest.raises(NotPlanarRotation):
        Triangulation.build(rot)


def test_multi_edge_rejected():
    with pytest.raises(MultiEdge):
        Triangulation.build([(1, 1, 2), (0, 2, 0), (0, 1)])


def test_disconnected_rejected():
    # two disjoint triangles share no edges: rotation valid, graph disconnected
    rot = [(1, 2), (2, 0), (0, 1), (4, 5), (5, 3), (3, 4)]
    with pytest.raises(DisconnectedGraph):
        SemiMpg.build(rot, [[0, 1, 2]])


def test_euler_counts_on_fixtures():
    for g in (k4(), octahedron(), icosahedron()):
        n, e, f = g.n, len(g.edges()), len(g.faces)
        assert n - e + f == 2
        assert e == 3 * n - 6
        assert all(len(face) == 3 for face in g.faces)


# ---------------------------------------------------------------------------
# planar_code
# ---------------------------------------------------------------------------

def test_planar_code_roundtrip():
    graphs = [k4(), octahedron(), wheel(5)]
    data = to_planar_code(graphs)
    back = parse_planar_code(data)
    assert len(back) == 3
    for a, b in zip(graphs, back):
        assert canonical_code(a) == canonical_code(b)


def test_planar_code_no_header():
    data = to_planar_code([k4()], header=False)
    assert len(parse_planar_code(data)) == 1


def test_planar_code_bad_header():
    with pytest.raises(HeaderMismatch):
        parse_planar_code(b">>not_planar_code<<" + to_planar_code([k4()], header=False))


def test_planar_code_truncated():
    data = to_planar_code([k4()])
    with pytest.raises(TruncatedStream):
        parse_planar_code(data[:-3])


def test_planar_code_bad_neighbor():
    # n=3 then a neighbor byte 9 > n
    with pytest.raises(VertexIndexOutOfRange):
        parse_planar_code(bytes([3, 2, 9, 0, 1, 3, 0, 1, 2, 0]))


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_canonical_code_invariant_under_relabeling(rnd):
    g = generate_stacked(7)[1]
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_code(relabel(g, perm)) == canonical_code(g)


def test_canonical_code_100_random_permutations():
    rnd = random.Random(7)
    for g in (k4(), octahedron()):
        code = canonical_code(g)
        for _ in range(100):
            perm = list(range(g.n))
            rnd.shuffle(perm)
            assert canonical_code(relabel(g, perm)) == code


def test_canonical_code_mirror():
    for g in (k4(), octahedron(), icosahedron(), generate_stacked(8)[3]):
        assert canonical_code(mirror(g)) == canonical_code(g)


def test_canonical_code_distinguishes(g_k4, g_w5):
    assert canonical_code(g_k4) != canonical_code(g_w5)


def test_semi_mpg_code_includes_outer_designation(g_triangle, q_k4):
    # relabeling a semi-MPG keeps its code, outer facets included
    perm = [2, 0, 1]
    assert canonical_code(relabel(g_triangle, perm)) == canonical_code(g_triangle)
    perm4 = [3, 1, 0, 2]
    assert canonical_code(relabel(q_k4, perm4)) == canonical_code(q_k4)


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def test_stacked_base_case():
    gs = generate_stacked(4)
    assert len(gs) == 1
    assert canonical_code(gs[0]) == canonical_code(k4())


def test_stacked_n5_unique():
    assert len(generate_stacked(5)) == 1


def test_stacked_n7_against_brute_force_oracle():
    # independent oracle: raw subdivision paths deduplicated by permutation
    # search on adjacency sets (no canonical_code involved)
    raw = [k4()]
    for _ in range(3):
        raw = [planar._subdivide(g, f) for g in raw for f in g.faces]
    classes: list = []
    for g in raw:
        if not any(isomorphic_brute(g, h) for h in classes):
            classes.append(g)
    generated = generate_stacked(7)
    assert len(generated) == len(classes) == 3


def test_stacked_deterministic():
    a = [canonical_code(g) for g in generate_stacked(8)]
    b = [canonical_code(g) for g in generate_stacked(8)]
    assert a == b
    assert len(a) == 7


def test_stacked_random_seeded():
    a = generate_stacked(12, mode="random", seed=5)[0]
    b = generate_stacked(12, mode="random", seed=5)[0]
    assert a.rotation == b.rotation


def test_stacked_cap():
    with pytest.raises(CapExceeded):
        generate_stacked(11, mode="exhaustive")


# ---------------------------------------------------------------------------
# surgery
# ---------------------------------------------------------------------------

def test_remove_edge_k4(g_k4, q_k4):
    assert isinstance(q_k4, SemiMpg)
    assert len(q_k4.outer_facets[0]) == 4
    assert len(triangles_of(q_k4)) == 2


def test_remove_edge_missing(g_k4):
    with pytest.raises(EdgeNotFound):
        remove_edge(remove_edge(g_k4, (0, 1)), (0, 1))


def test_remove_edge_icosahedron(g_ico):
    q = remove_edge(g_ico, (0, 1))
    assert len(triangles_of(q)) == 18


def test_remove_edge_twice_sharing_triangle(g_ico):
    q = remove_edge(g_ico, (0, 1))
    # edge 0-2 lies on the 4-gon and one triangle: merged 5-gon
    q2 = remove_edge(q, (0, 2))
    assert sorted(len(f) for f in q2.outer_facets) == [5]
    # an independent second removal opens a second 4-gon
    q3 = remove_edge(q, (3, 4))
    assert sorted(len(f) for f in q3.outer_facets) == [4, 4]


def test_remove_then_readd_roundtrip(g_ico):
    for e in [(0, 1), (5, 6), (11, 8)]:
        q = remove_edge(g_ico, e)
        m = add_edge_in_facet(q, e)
        assert canonical_code(m) == canonical_code(g_ico)


def test_contract_k4_gives_triangle(g_k4):
    t = contract_edge(g_k4, (0, 1))
    assert t.n == 3
    assert len(t.faces) == 2


def test_contract_octahedron(g_octa):
    t = contract_edge(g_octa, (1, 2))
    assert t.n == 5
    assert len(t.edges()) == len(g_octa.edges()) - 3
    assert len(t.faces) == 6  # exhaustive face recount


def test_contract_shared_neighbors_rejected():
    # in a stacked K4, the two corners of the subdivided face share three
    # neighbors: the third corner, the new vertex and the remaining original
    g = generate_stacked(5)[0]
    bad = next(
        (u, v)
        for u, v in g.edges()
        if len(set(g.rotation[u]) & set(g.rotation[v])) > 2
    )
    with pytest.raises(ContractionCreatesMultiEdge):
        contract_edge(g, bad)


def test_link_cycle_vertex(g_ico):
    om = link_cycle(g_ico, [0])
    assert tuple(om) == tuple(g_ico.rotation[0])


def test_link_cycle_two_adjacent(g_ico):
    om = link_cycle(g_ico, [0, 1])
    assert len(om) == 6
    assert set(om) == (set(g_ico.rotation[0]) | set(g_ico.rotation[1])) - {0, 1}


def test_link_cycle_disconnected_td(g_ico):
    with pytest.raises(NotConnectedTD):
        link_cycle(g_ico, [0, 11])


def test_link_cycle_pinched(g_k4):
    # removing both interior vertices of K4 leaves a disconnected rest
    with pytest.raises(Exception):
        link_cycle(g_k4, [0, 1, 2])


def test_transplant_identity(g_ico):
    for td in ([0], [0, 1], [0, 1, 2]):
        piece, boundary = extract_interior(g_ico, td)
        back = transplant(g_ico, td, piece, boundary)
        assert canonical_code(back) == canonical_code(g_ico)


def test_transplant_boundary_mismatch(g_ico):
    piece, boundary = extract_interior(g_ico, [0])  # 5-gon boundary
    with pytest.raises(BoundaryMismatch):
        transplant(g_ico, [0, 1], piece, boundary)  # 6-cycle link


def test_transplant_swaps_interior(g_ico):
    # replace the star of vertex 0 by a 5-wheel with the hub rotated: the
    # result is still a triangulation on 12 vertices
    piece, boundary = extract_interior(g_ico, [0])
    out = transplant(g_ico, [0], piece, boundary[1:] + boundary[:1])
    assert out.n == g_ico.n
    assert len(out.faces) == len(g_ico.faces)


def test_graph_from_faces_roundtrip(g_octa):
    g = graph_from_faces([list(f) for f in g_octa.faces])
    assert canonical_code(g) == canonical_code(g_octa)
