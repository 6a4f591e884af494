from __future__ import annotations

import itertools

import pytest

from rgbt.coloring import (
    EdgeColoring,
    canonical_synonym,
    coloring_from_pairs,
    count_4colorings,
    enumerate_4colorings,
    exists_4coloring,
    induce_edge_coloring,
    induce_vertex_coloring,
    is_proper,
    synonyms,
    vertex_coloring_from_json,
    vertex_coloring_to_json,
)
from rgbt.errors import NotProper, RedOddCycle
from rgbt.planar import canon_edge, generate_stacked
from rgbt.tiling import enumerate_tilings


def test_k4_identity_coloring_edge_rule(g_k4):
    # vertices colored by their own index + 1
    t = induce_edge_coloring(g_k4, {0: 1, 1: 2, 2: 3, 3: 4})
    assert t[(0, 2)] == "r" and t[(1, 3)] == "r"   # 1-3 and 2-4 pairs
    assert t[(0, 3)] == "g" and t[(1, 2)] == "g"   # 1-4 and 2-3 pairs
    assert t[(0, 1)] == "b" and t[(2, 3)] == "b"   # 1-2 and 3-4 pairs


def test_triangle_rainbow_forced(g_triangle):
    t = induce_edge_coloring(g_triangle, {0: 1, 1: 2, 2: 3})
    assert sorted(t.assignment.values()) == ["b", "g", "r"]


def test_improper_rejected(g_k4):
    with pytest.raises(NotProper):
        induce_edge_coloring(g_k4, {0: 1, 1: 1, 2: 3, 3: 4})


def test_roundtrip_k4(g_k4):
    vc = {0: 1, 1: 2, 2: 3, 3: 4}
    t = induce_edge_coloring(g_k4, vc)
    back = induce_vertex_coloring(g_k4, t)
    assert is_proper(g_k4, back)
    assert induce_edge_coloring(g_k4, back).key() == t.key()


def test_roundtrip_every_proper_coloring(g_octa):
    # the induced edge coloring is recovered exactly for every coloring
    for vc in enumerate_4colorings(g_octa):
        t = induce_edge_coloring(g_octa, vc)
        back = induce_vertex_coloring(g_octa, t)
        assert induce_edge_coloring(g_octa, back).key() == t.key()


def test_rim_red_tiling_raises_red_odd_cycle(g_w5):
    rim = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    # complete the rim-red R-tiling to an RGB-like assignment is impossible;
    # feed a non-RGB coloring and expect the error
    t = coloring_from_pairs(
        {canon_edge(*e): "r" for e in rim}
        | {canon_edge(0, i): "k" for i in range(1, 6)}
    )
    with pytest.raises(RedOddCycle):
        induce_vertex_coloring(g_w5, t)


def test_count_k4(g_k4):
    assert count_4colorings(g_k4) == 24


def test_count_single_triangle(g_triangle):
    assert count_4colorings(g_triangle) == 24


def test_count_octahedron_frozen_oracle(g_octa):
    # independent oracle: plain product over 4^6
    edges = g_octa.edges()
    oracle = sum(
        1
        for combo in itertools.product((1, 2, 3, 4), repeat=6)
        if all(combo[u] != combo[v] for u, v in edges)
    )
    assert oracle == 96
    assert count_4colorings(g_octa) == 96


def test_enumeration_deterministic(g_k4):
    a = list(enumerate_4colorings(g_k4))
    b = list(enumerate_4colorings(g_k4))
    assert a == b


def test_four_color_theorem_on_corpus():
    for n in range(4, 8):
        for g in generate_stacked(n):
            assert exists_4coloring(g)


def test_synonym_orbit_k4(g_k4):
    ts = list(enumerate_tilings(g_k4, "rgb"))
    orbit = synonyms(ts[0])
    assert len(orbit) == 6
    assert sorted(t.key() for t in orbit) == sorted(t.key() for t in ts)


def test_synonym_orbit_of_r_tiling(g_k4):
    t = next(enumerate_tilings(g_k4, "r"))
    assert len(synonyms(t)) == 3  # red moves to green or blue; black fixed


def test_synonym_fixed_point_orbit_size():
    # a coloring symmetric under one swap has orbit size 3
    t = coloring_from_pairs({(0, 1): "r", (0, 2): "g", (1, 2): "b"})
    orbit = synonyms(t)
    assert len(orbit) == 6  # rainbow triangle: all six distinct
    t2 = coloring_from_pairs({(0, 1): "r", (0, 2): "r", (1, 2): "r"})
    assert len(synonyms(t2)) == 3
    t3 = coloring_from_pairs({(0, 1): "k"})
    assert len(synonyms(t3)) == 1
    for t_any in (t, t2, t3):
        assert 6 % len(synonyms(t_any)) == 0


def test_canonical_synonym_least(g_k4):
    ts = list(enumerate_tilings(g_k4, "rgb"))
    reps = {canonical_synonym(t).key() for t in ts}
    assert len(reps) == 1


def test_json_documents(g_k4):
    vc = {0: 1, 1: 2, 2: 3, 3: 4}
    assert vertex_coloring_from_json(vertex_coloring_to_json(vc)) == vc
    t = induce_edge_coloring(g_k4, vc)
    assert EdgeColoring.from_json(t.to_json()).key() == t.key()
