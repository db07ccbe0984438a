import pytest
from hypothesis import given, strategies as st

from degseq.errors import InvalidInstanceError, PreconditionError
from degseq.graphs import (
    EdgeColoring,
    EdgeSubset,
    Graph,
    SeparableObjective,
    complete_graph,
    degree_sequence,
    edge_degree_vector,
    evaluate_separable,
    path_graph,
    perfect_matching_graph,
    table_indicator,
    table_interval,
    table_neg_square_shift,
    table_square,
)


def test_canonicalization_sorts_and_orients():
    g = Graph.from_pairs(4, [(3, 1), (0, 2), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))


def test_loops_and_duplicates_rejected():
    with pytest.raises(InvalidInstanceError):
        Graph.from_pairs(3, [(1, 1)])
    with pytest.raises(InvalidInstanceError):
        Graph.from_pairs(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidInstanceError):
        Graph.from_pairs(2, [(0, 2)])


def test_degree_sequence_examples():
    k3 = complete_graph(3)
    assert degree_sequence(k3, EdgeSubset.full(3)) == (2, 2, 2)
    assert degree_sequence(k3, EdgeSubset.empty(3)) == (0, 0, 0)
    p3 = path_graph(3)
    assert degree_sequence(p3, EdgeSubset.from_indices(2, [0])) == (1, 1, 0)


def test_edge_degree_vector_examples():
    k3 = complete_graph(3)
    assert edge_degree_vector(k3, 0) == (1, 1, 0)
    assert edge_degree_vector(k3, 2) == (0, 1, 1)
    with pytest.raises(PreconditionError):
        edge_degree_vector(k3, 3)


def test_subset_length_mismatch():
    with pytest.raises(PreconditionError):
        degree_sequence(complete_graph(3), EdgeSubset.empty(2))


@st.composite
def graph_and_subset(draw):
    n = draw(st.integers(1, 7))
    import itertools

    pool = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool))) if pool else []
    graph = Graph.from_pairs(n, edges)
    flags = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    return graph, EdgeSubset(tuple(flags))


@given(graph_and_subset())
def test_degree_sum_is_twice_subset_size(gs):
    graph, subset = gs
    degrees = degree_sequence(graph, subset)
    assert sum(degrees) == 2 * subset.size()
    # the degree map is additive over selected edges
    acc = [0] * graph.n
    for e in subset.indices():
        for i, x in enumerate(edge_degree_vector(graph, e)):
            acc[i] += x
    assert tuple(acc) == degrees


def test_separable_evaluation():
    k3 = complete_graph(3)
    zeros = SeparableObjective.zeros(k3)
    assert evaluate_separable(zeros, (2, 2, 2)) == 0
    squares = SeparableObjective.from_tables(k3, [[0, 1, 4]] * 3)
    assert evaluate_separable(squares, (2, 2, 2)) == 12
    pm = perfect_matching_graph(3)
    shifted = SeparableObjective.from_tables(pm, [table_neg_square_shift(1, 1)] * 6)
    assert evaluate_separable(shifted, (1,) * 6) == 0
    with pytest.raises(PreconditionError):
        evaluate_separable(squares, (3, 0, 0))


def test_separable_table_domain_enforced():
    k3 = complete_graph(3)
    with pytest.raises(InvalidInstanceError):
        SeparableObjective.from_tables(k3, [[0, 1, 4, 9], [0, 1, 4], [0, 1, 4]])


def test_builtin_tables():
    assert table_square(3) == (0, 1, 4, 9)
    assert table_neg_square_shift(3, 1) == (-1, 0, -1, -4)
    assert table_interval(4, 1, 2) == (-1, 0, 0, -1, -2)
    assert table_indicator(3, (0, 3)) == (0, -1, -1, 0)
    with pytest.raises(InvalidInstanceError):
        table_interval(2, 1, 3)
    with pytest.raises(InvalidInstanceError):
        table_indicator(2, (3,))
    with pytest.raises(InvalidInstanceError):
        table_indicator(2, ())


def test_coloring_invariants():
    with pytest.raises(InvalidInstanceError):
        EdgeColoring(p=1, colors=(0, 0), counts=(3,))
    with pytest.raises(InvalidInstanceError):
        EdgeColoring(p=2, colors=(0, 2), counts=(1, 0))
    c = EdgeColoring(p=2, colors=(0, 1, 0), counts=(1, 1))
    assert c.class_sizes() == (2, 1)
    assert c.class_edges(0) == (0, 2)
    assert c.count_selected(EdgeSubset((True, True, False))) == (1, 1)
