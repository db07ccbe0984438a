import itertools

import pytest

from degseq.colored import solve_colored_bruteforce
from degseq.errors import InvalidInstanceError, PreconditionError
from degseq.gadgets import (
    FactorSpec,
    LuFactorSpec,
    bipartite_concave_convex_instance,
    cubic_subgraph_instance,
    exact_matching_instance,
    general_factor_instance,
    lu_factor_objective,
    partition_gadget,
    subdivision_hardness_instance,
    weighted_bruteforce,
    weighted_objective_eval,
)
from degseq.graphs import (
    EdgeSubset,
    SeparableObjective,
    WeightedInstance,
    complete_graph,
    cycle_graph,
    degree_sequence,
    evaluate_separable,
    path_graph,
    star_graph,
)
from degseq.verify import run_gadget_suite

from conftest import random_small_graph


def optimum(instance):
    return solve_colored_bruteforce(instance.graph, instance.coloring, instance.vertex_functions).value


def test_gadget_suite_passes():
    suite = run_gadget_suite()
    failures = [c for c in suite.checks if not c.ok]
    assert not failures, failures


def test_general_factor_examples():
    edge = path_graph(2)
    assert optimum(general_factor_instance(FactorSpec(edge, ((1,), (1,))))) == 0
    p3 = path_graph(3)
    assert optimum(general_factor_instance(FactorSpec(p3, ((1,), (1,), (1,))))) == -1
    c4 = cycle_graph(4)
    assert optimum(general_factor_instance(FactorSpec(c4, ((2,),) * 4))) == 0
    with pytest.raises(InvalidInstanceError):
        FactorSpec(p3, ((1,), (), (1,)))
    with pytest.raises(InvalidInstanceError):
        FactorSpec(p3, ((1,), (9,), (1,)))


def test_factor_yes_iff_optimum_zero(rng):
    for _ in range(15):
        g = random_small_graph(rng, n_max=5, edge_prob=0.6)
        degs = g.host_degrees()
        admissible = tuple(
            tuple(sorted(rng.sample(range(d + 1), rng.randint(1, d + 1)))) for d in degs
        )
        inst = general_factor_instance(FactorSpec(g, admissible))
        exists = any(
            all(
                d in admissible[i]
                for i, d in enumerate(
                    degree_sequence(g, EdgeSubset.from_indices(g.num_edges, comb))
                )
            )
            for k in range(g.num_edges + 1)
            for comb in itertools.combinations(range(g.num_edges), k)
        )
        assert (optimum(inst) == 0) == exists


def test_lu_factor_tables():
    g = path_graph(3)
    obj = lu_factor_objective(LuFactorSpec((1, 1, 1), (1, 1, 1)), g)
    assert obj.tables[1] == (-1, 0, -1)
    assert obj.tables[0] == (-1, 0)
    zero = lu_factor_objective(LuFactorSpec((0, 0, 0), (1, 2, 1)), g)
    assert all(all(v == 0 for v in t) for t in zero.tables)
    with pytest.raises(PreconditionError):
        lu_factor_objective(LuFactorSpec((0, 0, 0), (1, 5, 1)), g)
    for t in obj.tables:
        assert all(t[z + 1] - t[z] <= t[z] - t[z - 1] for z in range(1, len(t) - 1))


def test_exact_matching_instances():
    inst, meta = exact_matching_instance(2, (0, 1, 1, 0), (2, 0))
    assert meta["target_reachable"]
    assert optimum(inst) == 0
    inst, _ = exact_matching_instance(2, (0, 1, 1, 0), (1, 1))
    assert optimum(inst) == -2
    inst, meta = exact_matching_instance(2, (0, 1, 1, 0), (2, 1))
    assert not meta["target_reachable"] and optimum(inst) < 0
    inst, _ = exact_matching_instance(1, (0,), (1,))
    assert optimum(inst) == 0
    with pytest.raises(InvalidInstanceError):
        exact_matching_instance(2, (0, 1, 1), (2, 0))


def test_cubic_instances():
    assert optimum(cubic_subgraph_instance(complete_graph(4))) == 0
    assert optimum(cubic_subgraph_instance(path_graph(3))) == 0
    assert optimum(cubic_subgraph_instance(star_graph(3))) == 0
    # low-degree vertices get clipped tables
    inst = cubic_subgraph_instance(path_graph(2))
    assert inst.vertex_functions.tables == ((0, -1), (0, -1))


def test_bipartite_concave_convex():
    star = star_graph(3)
    inst = bipartite_concave_convex_instance(star, left=(1, 2, 3))
    assert optimum(inst) == 0
    # table shapes: concave on the left, convex on the right
    assert inst.vertex_functions.tables[1] == (-1, 0)
    assert inst.vertex_functions.tables[0] == (0, -2, -2, 0)
    edge = path_graph(2)
    assert optimum(bipartite_concave_convex_instance(edge, left=(0,))) == -1
    with pytest.raises(PreconditionError):
        bipartite_concave_convex_instance(path_graph(3), left=(0, 1))


def test_partition_gadget():
    w = partition_gadget((2, 3, 5))
    assert weighted_bruteforce(w)[0] == 0
    assert weighted_bruteforce(partition_gadget((1, 1, 3)))[0] <= -1
    assert weighted_bruteforce(partition_gadget((1,)))[0] == -1
    with pytest.raises(PreconditionError):
        partition_gadget((0, 2))
    # K_{2,q} shape and duplicated column weights
    assert w.graph.n == 5 and w.graph.num_edges == 6
    by_col = {}
    for e, (i, j) in enumerate(w.graph.edges):
        by_col.setdefault(j, []).append(w.weights[e])
    assert all(len(v) == 2 and v[0] == v[1] for v in by_col.values())


def test_weighted_eval():
    w = partition_gadget((2, 3, 5))
    empty = EdgeSubset.empty(w.graph.num_edges)
    assert weighted_objective_eval(w, empty) == -(10 ** 2)
    # unit weights reduce to the separable objective
    g = path_graph(3)
    unit = WeightedInstance(
        graph=g,
        weights=(1, 1),
        vertex_functions=(lambda z: z * z, lambda z: -z, lambda z: 3 * z),
    )
    subset = EdgeSubset((True, True))
    assert weighted_objective_eval(unit, subset) == 1 - 2 + 3


def test_subdivision_gadget_all_small_hosts(rng):
    hosts = [path_graph(2), path_graph(3), star_graph(3), cycle_graph(3), cycle_graph(4), path_graph(4)]
    for host in hosts:
        assert host.num_edges <= 4
        squares = SeparableObjective(
            tuple(tuple(z * z for z in range(d + 1)) for d in host.host_degrees())
        )
        for m in range(host.num_edges + 1):
            gadget = subdivision_hardness_instance(host, m)
            best = solve_colored_bruteforce(
                gadget.instance.graph, None, gadget.instance.vertex_functions
            )
            extracted = gadget.extract(best.subset)
            assert extracted.size() == m
            want = max(
                evaluate_separable(squares, degree_sequence(host, EdgeSubset.from_indices(host.num_edges, comb)))
                for comb in itertools.combinations(range(host.num_edges), m)
            )
            assert best.value == want
            assert evaluate_separable(squares, degree_sequence(host, extracted)) == want


def test_subdivision_single_edge_example():
    gadget = subdivision_hardness_instance(path_graph(2), 1)
    best = solve_colored_bruteforce(gadget.instance.graph, None, gadget.instance.vertex_functions)
    assert best.value == 2
    sub_vertex = gadget.subdivision_vertex(0)
    degs = degree_sequence(gadget.instance.graph, best.subset)
    assert degs[sub_vertex] == 3


def test_all_gadget_tables_respect_domains(rng):
    for _ in range(10):
        g = random_small_graph(rng, n_max=5, edge_prob=0.6)
        for inst in (
            cubic_subgraph_instance(g),
            general_factor_instance(
                FactorSpec(g, tuple((0,) if d == 0 else (0, d) for d in g.host_degrees()))
            ),
        ):
            for table, d in zip(inst.vertex_functions.tables, g.host_degrees()):
                assert len(table) == d + 1
