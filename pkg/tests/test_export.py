from __future__ import annotations

from rgbt.coloring import coloring_from_pairs
from rgbt.export import export_dot
from rgbt.planar import canon_edge
from rgbt.render import save_host_figure, tutte_layout
from rgbt.tiling import enumerate_tilings


def test_dot_k4_color_groups(g_k4):
    t = next(iter(enumerate_tilings(g_k4, "rgb")))
    dot = export_dot(g_k4, t)
    assert dot.count('color="red"') == 2
    assert dot.count('color="green3"') == 2
    assert dot.count('color="blue"') == 2


def test_dot_w5_rim_red(g_w5):
    rim = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    t = coloring_from_pairs(
        {canon_edge(*e): "r" for e in rim}
        | {canon_edge(0, i): "k" for i in range(1, 6)}
    )
    dot = export_dot(g_w5, t)
    assert dot.count('color="red"') == 5


def test_dot_yellow_double_line():
    from rgbt.scenarios_builtin import builtin_scenario

    scn = builtin_scenario("atlas_55")
    dot = export_dot(scn.sigma, scn.fixed, names=scn.index_names)
    assert 'color="gold:gold"' in dot
    assert "penwidth=2" in dot


def test_dot_deterministic(g_k4):
    t = next(iter(enumerate_tilings(g_k4, "rgb")))
    assert export_dot(g_k4, t) == export_dot(g_k4, t)


def test_tutte_layout_positions(g_ico):
    pos = tutte_layout(g_ico)
    assert len(pos) == g_ico.n
    xs = [p[0] for p in pos.values()]
    assert max(xs) <= 1.01 and min(xs) >= -1.01


def test_save_figure(tmp_path, g_k4):
    t = next(iter(enumerate_tilings(g_k4, "rgb")))
    out = save_host_figure(tmp_path / "k4.png", g_k4, t, title="k4")
    assert out.exists() and out.stat().st_size > 1000


def test_save_figure_with_yellow(tmp_path):
    from rgbt.scenarios_builtin import builtin_scenario

    scn = builtin_scenario("atlas_55")
    out = save_host_figure(
        tmp_path / "s55.png", scn.sigma, scn.fixed, names=scn.index_names
    )
    assert out.exists()
