import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gridstab.errors import (
    AlreadyAdjacent,
    Disconnected,
    HopOutOfRange,
    InputError,
    InvalidCode,
    NotATree,
    OddRequired,
    TooFewNodes,
    Unreachable,
)
from gridstab.grid import (
    Edge,
    GridSpec,
    Node,
    NodeKind,
    all_pruefer_codes,
    central_node,
    cycle_length_of_edge,
    diameter,
    distance,
    generate_named,
    is_connected,
    is_tree,
    tree_from_pruefer,
    two_generators_one_load,
)


def test_circulant_full_hops_is_complete():
    assert generate_named("circulant", 7, 3).edge_set() == generate_named("complete", 7).edge_set()


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_circulant_degree_and_complete(n):
    for k in range(1, (n - 1) // 2 + 1):
        g = generate_named("circulant", n, k)
        assert all(len(a) == 2 * k for a in g.adjacency)
    assert generate_named("circulant", n, (n - 1) // 2).edge_set() == \
        generate_named("complete", n).edge_set()


def test_k3_coincidence():
    sets = {generate_named(k, 3, 1).edge_set() for k in ("ring", "complete", "circulant")}
    assert len(sets) == 1


def test_star():
    g = generate_named("star", 7)
    assert len(g.adjacency[0]) == 6
    assert all(len(g.adjacency[i]) == 1 for i in range(1, 7))
    assert diameter(g) == 2
    assert distance(g, 1, 2) == 2


def test_generate_errors():
    with pytest.raises(OddRequired):
        generate_named("circulant", 8, 2)
    with pytest.raises(HopOutOfRange):
        generate_named("circulant", 7, 4)
    with pytest.raises(HopOutOfRange):
        generate_named("circulant", 7, 0)
    with pytest.raises(TooFewNodes):
        generate_named("ring", 2)
    with pytest.raises(TooFewNodes):
        generate_named("path", 1)
    with pytest.raises(InputError):
        generate_named("wheel", 5)


def test_gridspec_invariants():
    with pytest.raises(InputError):
        GridSpec.build(2, [(0, 0)])
    with pytest.raises(InputError):
        GridSpec.build(2, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        GridSpec((Node(0, NodeKind.GENERATOR), Node(1, NodeKind.LOAD),
                  Node(2, NodeKind.GENERATOR)), ())
    with pytest.raises(InputError):
        GridSpec((Node(0, NodeKind.LOAD),), ())
    with pytest.raises(InputError):
        GridSpec((Node(0, NodeKind.GENERATOR),), (Edge(0, 3, -1j),))


def test_pruefer_small():
    assert tree_from_pruefer(()).edge_set() == {frozenset((0, 1))}
    star = tree_from_pruefer((0, 0))
    assert star.edge_set() == generate_named("star", 4).edge_set()
    with pytest.raises(InvalidCode):
        tree_from_pruefer((0, 5))
    with pytest.raises(InvalidCode):
        tree_from_pruefer((0,), n=5)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_pruefer_bijection(n):
    # Cayley: n^(n-2) distinct labeled trees
    trees = [tree_from_pruefer(c) for c in all_pruefer_codes(n)]
    assert len(trees) == n ** (n - 2)
    assert len({t.edge_set() for t in trees}) == n ** (n - 2)
    for t in trees:
        assert len(t.edges) == n - 1 and is_connected(t)
        assert diameter(t) >= 2


def test_pruefer_four_node_count_is_16():
    assert len({tree_from_pruefer(c).edge_set() for c in itertools.product(range(4), repeat=2)}) == 16


def test_connectivity():
    assert is_connected(GridSpec.build(1, []))
    assert not is_connected(GridSpec.build(2, []))
    assert is_connected(two_generators_one_load(1, 1, 1))


def test_distance():
    g = generate_named("path", 6)
    assert distance(g, 0, 5) == 5
    assert distance(g, 2, 2) == 0
    assert distance(g, 2, 3) == 1
    with pytest.raises(Unreachable):
        distance(GridSpec.build(2, []), 0, 1)


def test_diameter():
    assert diameter(generate_named("complete", 6)) == 1
    assert diameter(generate_named("star", 7)) == 2
    with pytest.raises(Disconnected):
        diameter(GridSpec.build(3, [(0, 1)]))


def test_joined_stars_diameter_three():
    # two 4-node stars with centers 0 and 4 joined center to center
    g = GridSpec.build(8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (0, 4)])
    assert diameter(g) == 3


def test_cycle_length():
    p3 = generate_named("path", 3)
    assert cycle_length_of_edge(p3, 0, 2) == 3
    p5 = generate_named("path", 5)
    assert cycle_length_of_edge(p5, 0, 4) == 5
    assert cycle_length_of_edge(p5, 1, 3) == 3
    with pytest.raises(AlreadyAdjacent):
        cycle_length_of_edge(p5, 0, 1)
    with pytest.raises(NotATree):
        cycle_length_of_edge(generate_named("ring", 5), 0, 2)


def test_central_node_tie_break():
    assert central_node(generate_named("path", 4)) == 1
    assert central_node(generate_named("star", 5)) == 0


@given(st.integers(3, 9).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2,
                                                     max_size=n - 2)))
def test_random_tree_properties(code):
    t = tree_from_pruefer(code)
    n = len(code) + 2
    assert is_tree(t)
    assert diameter(t) >= 2
    for x, y in itertools.combinations(range(n), 2):
        assert distance(t, x, y) <= diameter(t)
