import pytest

from barClasses import (
    TooSmall,
    InvalidPlan,
    gen_triangle_bridge,
    gen_triangle_chain,
    gen_triangle_circuit,
    gen_triangle_cycle,
    gen_wheel,
    is_wheel,
    stream_roles,
    wheel_hub,
)
from graphModel import enumerate_triangles


# ---------------------------------------------------------------------------
# Wheels
# ---------------------------------------------------------------------------

def test_wheel_4_is_k4():
    g = gen_wheel(4)
    assert g.is_complete()
    assert len(g) == 4


def test_wheel_5_counts():
    g = gen_wheel(5)
    assert len(g) == 5
    assert g.num_edges == 8
    assert len(enumerate_triangles(g)) == 4
    assert wheel_hub(g) == 0


def test_wheel_too_small():
    with pytest.raises(TooSmall, match="at least 4"):
        gen_wheel(3)


# ---------------------------------------------------------------------------
# Chains
# ---------------------------------------------------------------------------

def test_chain_single_triangle():
    g, s = gen_triangle_chain(1)
    assert len(g) == 3
    assert len(s) == 1


@pytest.mark.parametrize("m", [2, 4, 10])
def test_chain_node_and_edge_counts(m):
    g, s = gen_triangle_chain(m)
    assert len(g) == m + 2
    assert g.num_edges == 2 * m + 1
    assert len(s) == m


def test_chain_end_pendants_are_unique_and_distinct():
    _, s = gen_triangle_chain(4)
    roles = stream_roles(s)
    assert roles[0].pendants == {0}
    assert roles[-1].pendants == {5}


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------

def test_cycle_3_is_k4():
    g, _ = gen_triangle_cycle(3)
    assert len(g) == 4
    assert g.is_complete()


def test_cycle_4_is_w5():
    g, _ = gen_triangle_cycle(4)
    assert is_wheel(g)
    assert len(g) == 5


def test_cycle_6_is_seven_node_wheel():
    g, s = gen_triangle_cycle(6)
    assert len(g) == 7
    assert is_wheel(g)
    assert len(s) == 6


@pytest.mark.parametrize("m", [3, 5, 8])
def test_cycle_triangles_have_two_inner_and_one_outer_side(m):
    _, s = gen_triangle_cycle(m)
    for role in stream_roles(s):
        assert len(role.inner_sides) == 2
        assert len(role.outer_sides) == 1


@pytest.mark.parametrize("m", [8, 10, 12])
def test_zigzag_cycle_is_degree_four_annulus(m):
    g, s = gen_triangle_cycle(m, zigzag=True)
    assert len(g) == m
    assert all(g.degree(n) == 4 for n in g.nodes)
    assert not is_wheel(g)
    assert set(enumerate_triangles(g)) == set(s)


def test_zigzag_cycle_needs_even_size():
    with pytest.raises(InvalidPlan, match="even"):
        gen_triangle_cycle(9, zigzag=True)


def test_cycle_too_small():
    with pytest.raises(TooSmall):
        gen_triangle_cycle(2)


# ---------------------------------------------------------------------------
# Circuits and bridges
# ---------------------------------------------------------------------------

def test_circuit_4_has_five_nodes_and_degree_four_knot():
    g, s, knot = gen_triangle_circuit(4)
    assert len(g) == 5
    assert g.degree(knot) == 4
    assert knot in s.first and knot in s.last


@pytest.mark.parametrize("m", [6, 7, 9])
def test_circuit_union_holds_only_stream_triangles(m):
    g, s, _ = gen_triangle_circuit(m)
    assert len(g) == m + 1
    assert set(enumerate_triangles(g)) == set(s)


@pytest.mark.parametrize("m", [2, 3])
def test_circuit_too_small(m):
    with pytest.raises(TooSmall):
        gen_triangle_circuit(m)


def test_bridge_2_is_k4():
    g, _, e = gen_triangle_bridge(2)
    assert g.is_complete()
    assert len(g) == 4
    assert e == (0, 3)


def test_bridge_is_chain_plus_edge():
    g, s, e = gen_triangle_bridge(4)
    chain, _ = gen_triangle_chain(4)
    assert g.num_edges == chain.num_edges + 1
    assert g.has_edge(*e)
    assert not chain.has_edge(*e)


def test_bridge_too_small():
    with pytest.raises(TooSmall):
        gen_triangle_bridge(1)
