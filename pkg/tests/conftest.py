from __future__ import annotations

import pytest

from rgbt.planar import (
    icosahedron,
    k4,
    octahedron,
    remove_edge,
    single_triangle,
    wheel,
)


@pytest.fixture
def g_k4():
    return k4()


@pytest.fixture
def g_w5():
    return wheel(5)


@pytest.fixture
def g_octa():
    return octahedron()


@pytest.fixture
def g_ico():
    return icosahedron()


@pytest.fixture
def g_triangle():
    return single_triangle()


@pytest.fixture
def q_k4():
    """K4 minus the edge 0-1: a 4-semi-MPG with outer 4-gon 0-2-1-3."""
    return remove_edge(k4(), (0, 1))
