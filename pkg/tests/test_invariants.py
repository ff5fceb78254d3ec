import itertools

import pytest

from splitkit import (
    NamedPattern,
    OrderTooLargeForColoring,
    OrderTooLargeForPerfection,
    VertexOutOfRange,
    build,
    chromatic_number,
    clique_number,
    complement,
    complete_graph,
    contains_2k2,
    contains_c4,
    contains_c5,
    cycle_graph,
    dominates,
    enumerate_all,
    enumerate_connected,
    find_induced,
    has_induced,
    independence_number,
    induced,
    is_perfect,
    max_clique,
    path_graph,
    star_graph,
)

from oracles import (
    chromatic_number_assignments,
    clique_number_subsets,
    has_induced_copy,
    independence_number_subsets,
)


def all_graphs_upto(n):
    for k in range(1, n + 1):
        yield from enumerate_all(k)


# ---------------------------------------------------------------------------
# clique, independence, chromatic


def test_clique_number_matches_subset_scan():
    for g in all_graphs_upto(5):
        assert clique_number(g) == clique_number_subsets(g)
    for g in enumerate_connected(6):
        assert clique_number(g) == clique_number_subsets(g)


def test_independence_number_matches_subset_scan():
    for g in all_graphs_upto(5):
        assert independence_number(g) == independence_number_subsets(g)


def test_max_clique_is_a_maximum_clique():
    for g in all_graphs_upto(5):
        c = max_clique(g)
        assert len(c) == clique_number_subsets(g)
        assert all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))


def test_max_clique_prefers_low_vertices():
    assert max_clique(cycle_graph(5)) == (0, 1)


def test_chromatic_number_matches_assignment_scan():
    for g in all_graphs_upto(5):
        assert chromatic_number(g) == chromatic_number_assignments(g)


@pytest.mark.parametrize(
    "g,chi",
    [
        (cycle_graph(5), 3),
        (cycle_graph(6), 2),
        (complete_graph(6), 6),
        (NamedPattern("W4").template, 3),
        (NamedPattern("OCTAHEDRON").template, 3),
        (build(3), 1),
    ],
)
def test_chromatic_number_known_values(g, chi):
    assert chromatic_number(g) == chi


def test_chromatic_number_order_cap():
    with pytest.raises(OrderTooLargeForColoring):
        chromatic_number(build(13))


def test_dominates():
    c5 = cycle_graph(5)
    assert not dominates(c5, [0, 1])
    assert dominates(c5, [0, 2])
    assert dominates(build(1), [0])
    assert not dominates(c5, [])
    with pytest.raises(VertexOutOfRange):
        dominates(c5, [7])


# ---------------------------------------------------------------------------
# induced-subgraph search

SMALL_PATTERNS = [
    NamedPattern("TWO_K2"),
    NamedPattern("C4"),
    NamedPattern("C5"),
    NamedPattern("P4"),
    NamedPattern("P5"),
    NamedPattern("CLAW"),
    NamedPattern("K_2_L", 2),
    NamedPattern("K_2_L", 3),
    NamedPattern("W4"),
    NamedPattern("HAMMER"),
    NamedPattern("BUTTERFLY"),
    NamedPattern("STAR", 2),
]


def test_has_induced_matches_permutation_scan():
    for g in all_graphs_upto(5):
        for pattern in SMALL_PATTERNS:
            assert has_induced(g, pattern) == has_induced_copy(g, pattern.template)


def test_fast_containment_agrees_with_generic_search():
    for g in all_graphs_upto(6):
        assert contains_2k2(g) == (find_induced(g, NamedPattern("TWO_K2")) is not None)
        assert contains_c4(g) == (find_induced(g, NamedPattern("C4")) is not None)
        assert contains_c5(g) == (find_induced(g, NamedPattern("C5")) is not None)


def test_find_induced_returns_first_witness():
    wit = find_induced(cycle_graph(6), NamedPattern("P5"))
    assert wit is not None
    assert wit.pattern == NamedPattern("P5")
    assert wit.vertices == (0, 1, 2, 3, 4)
    # the witness really induces the pattern
    assert sorted(induced(cycle_graph(6), wit.vertices).degrees()) == [1, 1, 2, 2, 2]


def test_find_induced_none_when_absent():
    assert find_induced(complete_graph(5), NamedPattern("C4")) is None
    assert find_induced(build(3), NamedPattern("P4")) is None  # pattern larger than host


def test_containment_spot_checks():
    assert contains_c5(cycle_graph(5))
    assert not contains_c5(cycle_graph(6))
    assert contains_2k2(path_graph(5))
    assert not contains_2k2(path_graph(4))
    assert contains_c4(cycle_graph(4))
    assert not contains_c4(complete_graph(6))


# ---------------------------------------------------------------------------
# perfection


def _perfect_by_subgraphs(g):
    # chi = omega on every nonempty induced subgraph
    for r in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            h = induced(g, s)
            if chromatic_number(h) != clique_number(h):
                return False
    return True


def test_is_perfect_matches_subgraph_definition():
    for g in all_graphs_upto(5):
        assert is_perfect(g) == _perfect_by_subgraphs(g)


@pytest.mark.parametrize(
    "g,expected",
    [
        (cycle_graph(4), True),
        (cycle_graph(5), False),
        (cycle_graph(7), False),
        (complement(cycle_graph(7)), False),
        (complete_graph(6), True),
        (path_graph(6), True),
        (star_graph(5), True),
        (NamedPattern("OCTAHEDRON").template, True),
    ],
)
def test_is_perfect_known_values(g, expected):
    assert is_perfect(g) == expected


def test_is_perfect_order_cap():
    with pytest.raises(OrderTooLargeForPerfection):
        is_perfect(build(13))
