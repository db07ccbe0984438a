import itertools

import pytest

from degseq.errors import CapExceededError, InvalidInstanceError, PreconditionError
from degseq.graphs import Graph, complete_graph, path_graph, perfect_matching_graph
from degseq.ip import build_colored_ip
from degseq.randgen import random_coloring, random_tables
from degseq.treedepth import (
    EliminationForest,
    build_constraint_tree,
    constraint_graph,
    find_forest_violation,
    heuristic_forest,
    parse_forest,
    serialize_forest,
    treedepth_exact,
    validate_forest,
)
from degseq.verify import min_tree_height_bruteforce

from conftest import random_small_graph


def test_forest_structure_validation():
    with pytest.raises(InvalidInstanceError):
        EliminationForest((0,))  # own parent
    with pytest.raises(InvalidInstanceError):
        EliminationForest((1, 0))  # 2-cycle
    with pytest.raises(InvalidInstanceError):
        EliminationForest((5,))
    f = EliminationForest((None, 0, 1, 0))
    assert f.roots() == (0,)
    assert f.depths() == (1, 2, 3, 2)
    assert f.height == 3
    assert f.children() == ((1, 3), (2,), (), ())


def test_validate_forest_paper_tree():
    # matching on [6] with the star-augmented tree rooted at vertex 1
    pm = perfect_matching_graph(3)
    tree = EliminationForest((None, 0, 0, 0, 1, 2))
    assert validate_forest(pm, tree) and tree.height == 3

    p4 = path_graph(4)
    chain = EliminationForest((None, 0, 1, 2))
    assert validate_forest(p4, chain) and chain.height == 4

    triangle_star = EliminationForest((None, 0, 0))
    assert not validate_forest(complete_graph(3), triangle_star)
    assert find_forest_violation(complete_graph(3), triangle_star) == (1, 2)

    with pytest.raises(PreconditionError):
        validate_forest(complete_graph(3), EliminationForest((None, 0)))


def test_cross_tree_edges_are_invalid():
    g = path_graph(2)
    two_roots = EliminationForest((None, None))
    assert not validate_forest(g, two_roots)


def test_treedepth_ground_truths():
    assert treedepth_exact(perfect_matching_graph(3))[0] == 3
    assert treedepth_exact(path_graph(2))[0] == 2
    for n in range(1, 16):
        depth, forest = treedepth_exact(path_graph(n))
        assert depth == n.bit_length()  # ceil(log2(n + 1))
        assert validate_forest(path_graph(n), forest)
        assert forest.height == depth


def test_treedepth_certificate_is_single_tree():
    depth, forest = treedepth_exact(perfect_matching_graph(3))
    assert len(forest.roots()) == 1 and forest.height == depth


def test_treedepth_cap():
    with pytest.raises(CapExceededError):
        treedepth_exact(Graph(16, ()))
    assert treedepth_exact(Graph(16, ()), cap=16)[0] == 2


def test_treedepth_matches_exhaustive_orderings(rng):
    for _ in range(8):
        g = random_small_graph(rng, n_max=6, edge_prob=0.5)
        assert treedepth_exact(g)[0] == min_tree_height_bruteforce(g)


def test_heuristic_forest_properties(rng):
    pm = perfect_matching_graph(3)
    h = heuristic_forest(pm)
    assert validate_forest(pm, h)
    assert h.height >= 3  # cannot beat the exact single-tree tree-depth

    empty = Graph(4, ())
    h = heuristic_forest(empty)
    assert h.parent == (None,) * 4 and h.height == 1

    for _ in range(15):
        g = random_small_graph(rng, n_max=8, edge_prob=0.4)
        h = heuristic_forest(g)
        assert validate_forest(g, h)
        assert heuristic_forest(g) == h  # deterministic
        if g.edges and g.n <= 7:
            assert h.height >= treedepth_exact(g)[0]


def test_constraint_tree_examples():
    # P_3 with its chain tree (height 3), p=1: height 1 + 3 + 1 = 5
    chain = EliminationForest((None, 0, 1))
    t = build_constraint_tree(chain, 3, 1)
    assert t.height == 5
    # single vertex, no edges, p=1: c_1 - a_1 - b_1
    single = build_constraint_tree(EliminationForest((None,)), 1, 1)
    assert single.height == 3
    assert single.forest.parent == (2, 0, None)
    # p=2 over the matching tree of height 3: height <= 6
    pm_tree = EliminationForest((None, 0, 0, 0, 1, 2))
    t = build_constraint_tree(pm_tree, 6, 2)
    assert t.height <= 2 + 3 + 1
    # p=0 keeps the host roots
    t0 = build_constraint_tree(chain, 3, 0)
    assert t0.height == 4 and t0.forest.parent[0] is None


def test_constraint_tree_valid_for_constraint_graph(rng):
    for _ in range(10):
        g = random_small_graph(rng, n_max=6, edge_prob=0.5)
        p = rng.randint(0, 2)
        coloring = random_coloring(rng, g, p) if p >= 1 and g.num_edges else None
        model = build_colored_ip(g, coloring, random_tables(rng, g))
        cg = constraint_graph(model)
        assert cg.n == 2 * g.n + model.p
        _, tree = treedepth_exact(g)
        tprime = build_constraint_tree(tree, g.n, model.p)
        assert validate_forest(cg, tprime.forest)
        assert tprime.height <= model.p + tree.height + 1


def test_constraint_graph_adjacency_facts():
    g = complete_graph(3)
    from degseq.graphs import EdgeColoring, SeparableObjective

    coloring = EdgeColoring(p=1, colors=(0, 0, 0), counts=(1,))
    model = build_colored_ip(g, coloring, SeparableObjective.zeros(g))
    cg = constraint_graph(model)
    edges = set(cg.edges)
    n = 3
    # a_i ~ a_j exactly when {i,j} is an edge of H (shared x_e)
    for i, j in itertools.combinations(range(n), 2):
        assert ((i, j) in edges) == ((i, j) in set(g.edges))
    # b_s never adjacent to b_t
    for i, j in itertools.combinations(range(n), 2):
        assert (n + i, n + j) not in edges
    # a_i ~ b_i via the shared y_i^j (degree >= 1 here)
    for i in range(n):
        assert (i, n + i) in edges
    # c_1 adjacent to every a_i (shared x variables)
    for i in range(n):
        assert (i, 2 * n) in edges


def test_isolated_vertex_has_no_ab_edge():
    g = Graph(2, ())
    from degseq.graphs import SeparableObjective

    model = build_colored_ip(g, None, SeparableObjective.zeros(g))
    cg = constraint_graph(model)
    assert cg.edges == ()  # only y_i^0 variables, all with zero a-row coefficient


def test_forest_file_round_trip():
    f = EliminationForest((None, 0, 1, 0))
    text = serialize_forest(f)
    assert parse_forest(text, 4) == f
    assert parse_forest("[0, 1, 2, 1]", 4) == f
    with pytest.raises(InvalidInstanceError):
        parse_forest("[0, 1]", 4)
    with pytest.raises(InvalidInstanceError):
        parse_forest('{"parent": [1, 1, 2, 1]}', 4)  # vertex 1 its own parent
