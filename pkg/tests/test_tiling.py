from __future__ import annotations

import itertools

import pytest

from rgbt.coloring import EdgeColoring, coloring_from_pairs, induce_edge_coloring
from rgbt.errors import EdgePresent, GraphError
from rgbt.planar import canon_edge, generate_stacked, icosahedron, remove_edge
from rgbt.tiling import (
    GrandWitness,
    NotGrand,
    boundary_signature,
    check_tiling,
    classify_diamond,
    enumerate_tilings,
    extend_over_edge,
    is_grand,
    kempe_component_swap,
    mono_odd_cycle,
    project_to_r,
)

W5_RIM = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
W5_SPOKES = [(0, i) for i in range(1, 6)]


def _w5_rim_red():
    return coloring_from_pairs(
        {canon_edge(*e): "r" for e in W5_RIM}
        | {canon_edge(*e): "k" for e in W5_SPOKES}
    )


# ---------------------------------------------------------------------------
# check + enumerate against brute-force oracles
# ---------------------------------------------------------------------------

def test_k4_r_tilings_match_2pow6_oracle(g_k4):
    edges = g_k4.edges()
    oracle = {
        tuple(combo)
        for combo in itertools.product("rk", repeat=6)
        if check_tiling(g_k4, EdgeColoring(dict(zip(edges, combo))), "r").ok
    }
    assert len(oracle) == 3
    mine = {tuple(t[e] for e in edges) for t in enumerate_tilings(g_k4, "r")}
    assert mine == oracle


def test_k4_rgb_tilings_match_3pow6_oracle(g_k4):
    edges = g_k4.edges()
    oracle = {
        tuple(combo)
        for combo in itertools.product("rgb", repeat=6)
        if check_tiling(g_k4, EdgeColoring(dict(zip(edges, combo))), "rgb").ok
    }
    assert len(oracle) == 6
    mine = {tuple(t[e] for e in edges) for t in enumerate_tilings(g_k4, "rgb")}
    assert mine == oracle


def test_k4_red_matchings_are_the_r_tilings(g_k4):
    for t in enumerate_tilings(g_k4, "r"):
        red = t.edges_of_color("r")
        assert len(red) == 2
        assert not set(red[0]) & set(red[1])  # a perfect matching


def test_single_red_edge_violates(g_k4):
    t = EdgeColoring({e: ("r" if e == (0, 1) else "k") for e in g_k4.edges()})
    verdict = check_tiling(g_k4, t, "r")
    assert not verdict.ok
    assert len(verdict.violations) == 2  # the two faces missing a red edge


def test_triangle_rgb_tilings(g_triangle):
    assert sum(1 for _ in enumerate_tilings(g_triangle, "rgb")) == 6


def test_enumerate_honors_fixed(g_k4):
    fixed = {(0, 1): "r"}
    for t in enumerate_tilings(g_k4, "rgb", fixed=fixed):
        assert t[(0, 1)] == "r"
    n_fixed = sum(1 for _ in enumerate_tilings(g_k4, "rgb", fixed=fixed))
    assert n_fixed == 2


def test_projection_property(g_octa):
    # every RGB-tiling projects to a valid R-tiling by blackening g and b
    for t in enumerate_tilings(g_octa, "rgb"):
        assert check_tiling(g_octa, project_to_r(t), "r").ok


# ---------------------------------------------------------------------------
# grandness
# ---------------------------------------------------------------------------

def test_every_k4_r_tiling_grand(g_k4):
    for t in enumerate_tilings(g_k4, "r"):
        assert isinstance(is_grand(g_k4, t), GrandWitness)


def test_w5_rim_red_grand(g_w5):
    w = is_grand(g_w5, _w5_rim_red())
    assert isinstance(w, GrandWitness)
    assert w.v13 == frozenset({0})


def test_two_hole_host_not_grand():
    # search 2-hole hosts (two independent edges deleted from small MPGs)
    # for an R-tiling with a black-parity clash
    from rgbt.errors import GraphError
    from rgbt.planar import octahedron

    hosts = [octahedron()] + generate_stacked(7)
    for g in hosts:
        edges = g.edges()
        for i, e1 in enumerate(edges):
            for e2 in edges[i + 1 :]:
                if set(e1) & set(e2):
                    continue
                try:
                    q = remove_edge(remove_edge(g, e1), e2)
                except GraphError:
                    continue
                if len(q.outer_facets) != 2:
                    continue
                for t in enumerate_tilings(q, "r"):
                    if isinstance(is_grand(q, t), NotGrand):
                        return
    pytest.fail("no non-grand R-tiling found on any 2-hole host")


def test_grand_witness_partition(g_k4):
    t = next(enumerate_tilings(g_k4, "r"))
    w = is_grand(g_k4, t)
    assert w.v13 | w.v24 == frozenset(range(4))
    assert not w.v13 & w.v24
    assert 0 in w.v13


# ---------------------------------------------------------------------------
# monochrome cycles
# ---------------------------------------------------------------------------

def test_w5_rim_red_odd_cycle(g_w5):
    cyc = mono_odd_cycle(g_w5, _w5_rim_red(), "r")
    assert cyc is not None
    assert len(cyc) == 5
    assert set(cyc) == {1, 2, 3, 4, 5}


def test_w5_matching_red_no_cycle(g_w5):
    t = coloring_from_pairs(
        {
            canon_edge(0, 1): "r",
            canon_edge(2, 3): "r",
            canon_edge(0, 4): "r",
            **{canon_edge(*e): "k" for e in W5_RIM if canon_edge(*e) != (2, 3)},
            **{
                canon_edge(0, i): "k"
                for i in (2, 3, 5)
            },
        }
    )
    assert check_tiling(g_w5, t, "r").ok
    assert mono_odd_cycle(g_w5, t, "r") is None


def test_induced_tilings_have_no_mono_odd_cycles():
    for n in range(4, 8):
        for g in generate_stacked(n):
            from rgbt.coloring import enumerate_4colorings

            vc = next(enumerate_4colorings(g, limit=1))
            t = induce_edge_coloring(g, vc)
            for color in "rgb":
                assert mono_odd_cycle(g, t, color) is None


# ---------------------------------------------------------------------------
# boundary signatures
# ---------------------------------------------------------------------------

def test_triangle_signature(g_triangle):
    for t in enumerate_tilings(g_triangle, "rgb"):
        sig = boundary_signature(g_triangle, t, "rgb")
        assert sig.verdict
        assert sig.triples[0].as_tuple() == (1, 1, 1)


def test_k4_minus_edge_triples(q_k4):
    triples = set()
    for t in enumerate_tilings(q_k4, "rgb"):
        sig = boundary_signature(q_k4, t, "rgb")
        assert sig.verdict
        triples.add(sig.triples[0].sorted())
    # exhaustive enumeration shows only (0,2,2) patterns arise
    assert triples == {(0, 2, 2)}


def test_artificial_parity_violation(q_k4):
    t0 = next(enumerate_tilings(q_k4, "rgb"))
    bad = t0.with_edges({(0, 2): "r", (1, 2): "g", (1, 3): "g", (0, 3): "b"})
    assert not boundary_signature(q_k4, bad, "rgb").verdict


def test_r_mode_signature(g_w5):
    sig = boundary_signature(g_w5, _w5_rim_red(), "r")
    assert sig.verdict  # zero black edges along the rim


# ---------------------------------------------------------------------------
# diamond classification
# ---------------------------------------------------------------------------

def test_spec_type_d_example(q_k4, g_k4):
    t = coloring_from_pairs(
        {(2, 3): "r", (0, 2): "b", (0, 3): "g", (1, 2): "g", (1, 3): "b"}
    )
    d = classify_diamond(q_k4, t, (0, 1))
    assert d.verdict == "D"
    assert d.candidates == ["r"]
    ext = d.extensions["r"]
    assert check_tiling(g_k4, ext, "rgb").ok
    assert extend_over_edge(q_k4, t, (0, 1)) == ["r"]


def test_all_twelve_q_tilings(q_k4, g_k4):
    verdicts = {"D": 0, "NoCandidate": 0}
    for t in enumerate_tilings(q_k4, "rgb"):
        d = classify_diamond(q_k4, t, (0, 1))
        verdicts[d.verdict] += 1
        for ext in d.extensions.values():
            assert check_tiling(g_k4, ext, "rgb").ok
            for color in "rgb":
                assert mono_odd_cycle(g_k4, ext, color) is None
    assert verdicts == {"D": 6, "NoCandidate": 6}


def test_adjacent_equal_witness(q_k4):
    # surround (b,b,g,g) occurs among the twelve tilings and has no candidate
    found = False
    for t in enumerate_tilings(q_k4, "rgb"):
        d = classify_diamond(q_k4, t, (0, 1))
        if d.surround == ("b", "b", "g", "g"):
            assert d.verdict == "NoCandidate"
            assert extend_over_edge(q_k4, t, (0, 1)) == []
            found = True
    assert found


def test_monochrome_surround_classifies_a_or_c():
    # search small hosts for an all-same surround
    ico = icosahedron()
    q = remove_edge(ico, (0, 1))
    seen = set()
    for t in enumerate_tilings(q, "rgb"):
        d = classify_diamond(q, t, (0, 1))
        seen.add(d.verdict)
        if len(d.surround) == 4 and len(set(d.surround)) == 1:
            assert d.verdict in ("A", "C")
            assert len(d.candidates) == 2
            if d.verdict == "A":
                for chain in d.chains.values():
                    assert chain[0] in (0, 1) and chain[-1] in (0, 1)
            for color, ext in d.extensions.items():
                full = icosahedron()
                assert check_tiling(full, ext, "rgb").ok
    assert "D" in seen


def test_classify_requires_removed_edge(g_k4):
    t = next(enumerate_tilings(g_k4, "rgb"))
    with pytest.raises(EdgePresent):
        classify_diamond(g_k4, t, (0, 1))


def test_induced_restrictions_only_c_or_d(g_ico):
    from rgbt.coloring import enumerate_4colorings

    vc = next(enumerate_4colorings(g_ico, limit=1))
    t = induce_edge_coloring(g_ico, vc)
    for e in g_ico.edges():
        q = remove_edge(g_ico, e)
        restricted = EdgeColoring({d: c for d, c in t.assignment.items() if d != e})
        verdict = classify_diamond(q, restricted, e)
        assert verdict.verdict in ("C", "D")


def test_kempe_component_swap_preserves_validity(q_k4):
    for t in enumerate_tilings(q_k4, "rgb"):
        for color in "rgb":
            swapped = kempe_component_swap(q_k4, t, color, 0)
            assert check_tiling(q_k4, swapped, "rgb").ok


def test_strict_ergb_rejects_repairable_yellow(g_ico):
    # a yellow whose diamond is Type D is not a legitimate abandoned edge
    q = remove_edge(g_ico, (0, 1))
    t = next(
        t
        for t in enumerate_tilings(q, "rgb")
        if classify_diamond(q, t, (0, 1)).verdict == "D"
    )
    et = t.with_edges({(0, 1): "Y"})
    strict = check_tiling(g_ico, et, "ergb")
    assert not strict.ok
    assert any(v["kind"] == "diamond" for v in strict.violations)
    # scenario regions skip the in-host classification (abstract exterior)
    assert check_tiling(g_ico, et, "ergb", ergb_diamonds="local").ok


def test_two_yellows_in_one_triangle_rejected(g_ico):
    t = next(enumerate_tilings(g_ico, "rgb"))
    f = g_ico.faces[0]
    et = t.with_edges(
        {canon_edge(f[0], f[1]): "Y", canon_edge(f[1], f[2]): "Y"}
    )
    verdict = check_tiling(g_ico, et, "ergb", ergb_diamonds="local")
    assert not verdict.ok


def test_yellow_on_boundary_rejected(q_k4):
    t = next(enumerate_tilings(q_k4, "rgb"))
    boundary_edge = q_k4.boundary_edges()[0]
    et = t.with_edges({boundary_edge: "Y"})
    verdict = check_tiling(q_k4, et, "ergb", ergb_diamonds="local")
    assert any(
        v["kind"] in ("yellow-on-boundary", "triangle") for v in verdict.violations
    )
