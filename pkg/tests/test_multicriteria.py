import math

import pytest

from degseq.errors import PreconditionError
from degseq.graphs import (
    MaxAffine,
    MultiCriteriaObjective,
    SumSquaredAffine,
    complete_graph,
    identity_objective,
    path_graph,
    perfect_matching_graph,
    star_graph,
)
from degseq.multicriteria import (
    ChamberPipeline,
    ProjectedGenerators,
    enumerate_chamber_witnesses,
    maximize_multicriteria,
    maximize_multicriteria_unprescribed,
    project_directions,
)
from degseq.oracles import directions_unprescribed, linopt_prescribed

from conftest import brute_force_best_subsets, random_small_graph


def sweep_cells_2d(gens):
    """Independent cell count/witness oracle for central line arrangements in
    the plane: sort the 2g boundary rays by angle exactly, then each sector
    between consecutive rays holds one cell; its witness is the ray sum."""
    rays = []
    for g in gens:
        rays.append((-g[1], g[0]))
        rays.append((g[1], -g[0]))
    rays = sorted(set(rays))
    if len(gens) == 1:
        witnesses = [gens[0], tuple(-x for x in gens[0])]
    else:

        def half(v):
            return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

        def angle_key(v):
            return half(v)

        def cmp_sorted(rays):
            # sort by angle: split into half-planes, then cross-product order
            def cross(a, b):
                return a[0] * b[1] - a[1] * b[0]

            import functools

            def cmp(a, b):
                ha, hb = half(a), half(b)
                if ha != hb:
                    return -1 if ha < hb else 1
                c = cross(a, b)
                return 0 if c == 0 else (-1 if c > 0 else 1)

            return sorted(rays, key=functools.cmp_to_key(cmp))

        ordered = cmp_sorted(rays)
        witnesses = []
        for a, b in zip(ordered, ordered[1:] + ordered[:1]):
            witnesses.append((a[0] + b[0], a[1] + b[1]))
    cells = set()
    for w in witnesses:
        signs = tuple(
            1 if w[0] * g[0] + w[1] * g[1] > 0 else -1 if w[0] * g[0] + w[1] * g[1] < 0 else 0
            for g in gens
        )
        assert 0 not in signs, "sweep witness landed on a line"
        cells.add(signs)
    return cells


def test_project_directions_examples():
    d = directions_unprescribed(path_graph(3))
    gens = project_directions(d, ((1, 0, 0), (0, 0, 1)))
    assert set(gens.vectors) == {(1, 0), (0, 1)}
    assert gens.span_dim == 2

    zero = project_directions(d, ((0, 0, 0),))
    assert zero.vectors == () and zero.span_dim == 0

    class FakeDirections:
        vectors = ((1, 1, 0), (2, 2, 0))

    gens = project_directions(FakeDirections(), ((1, 0, 0), (0, 1, 0)))
    assert gens.vectors == ((1, 1),)  # parallel images collapse


def test_witness_counts_coordinate_and_three_lines():
    g2 = ProjectedGenerators(((1, 0), (0, 1)), 2, 2)
    assert len(enumerate_chamber_witnesses(g2)) == 4
    g3 = ProjectedGenerators(((1, 0), (0, 1), (1, 1)), 2, 2)
    assert len(enumerate_chamber_witnesses(g3)) == 6
    g1 = ProjectedGenerators(((5,),), 1, 1)
    ws = enumerate_chamber_witnesses(g1)
    assert sorted(w.signs for w in ws) == [(-1,), (1,)]
    empty = ProjectedGenerators((), 3, 0)
    ws = enumerate_chamber_witnesses(empty)
    assert len(ws) == 1 and ws[0].point == (0, 0, 0)


def test_witness_signs_nonzero_and_consistent(rng):
    for _ in range(40):
        r = rng.randint(1, 3)
        raw = [tuple(rng.randint(-4, 4) for _ in range(r)) for _ in range(rng.randint(1, 8))]

        class D:
            vectors = tuple(raw)

        gens = project_directions(D(), tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r)))
        witnesses = enumerate_chamber_witnesses(gens)
        for w in witnesses:
            for sign, g in zip(w.signs, gens.vectors):
                dot = sum(a * b for a, b in zip(w.point, g))
                assert dot != 0 and (dot > 0) == (sign > 0)
        # one witness per sign vector
        assert len({w.signs for w in witnesses}) == len(witnesses)


def test_witness_cells_match_sweep_oracle(rng):
    for _ in range(40):
        g = rng.randint(1, 7)
        seen = set()
        gens = []
        while len(gens) < g:
            v = (rng.randint(-5, 5), rng.randint(-5, 5))
            from degseq.oracles import primitive

            p = primitive(v)
            if p is not None and p not in seen:
                seen.add(p)
                gens.append(p)
        proj = ProjectedGenerators(tuple(gens), 2, 2 if len(gens) > 1 else 1)
        witnesses = enumerate_chamber_witnesses(proj)
        cells = sweep_cells_2d(gens)
        assert {w.signs for w in witnesses} == cells
        if len(gens) >= 2:
            assert len(witnesses) == 2 * len(gens)


def test_witness_count_bound(rng):
    # cells of a central arrangement of g hyperplanes in rank s space:
    # at most 2 * sum_{k < s} C(g-1, k)
    for _ in range(25):
        r = rng.randint(2, 3)
        raw = [tuple(rng.randint(-3, 3) for _ in range(r)) for _ in range(rng.randint(2, 7))]

        class D:
            vectors = tuple(raw)

        gens = project_directions(D(), tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r)))
        if not gens.vectors:
            continue
        witnesses = enumerate_chamber_witnesses(gens)
        g = len(gens.vectors)
        bound = 2 * sum(math.comb(g - 1, k) for k in range(gens.span_dim))
        assert len(witnesses) <= bound


def test_prescribed_solver_examples():
    star = star_graph(3)
    obj = MultiCriteriaObjective(((1, 0, 0, 0),), SumSquaredAffine((((1,), 0),)))
    sol = maximize_multicriteria(star, 2, obj)
    assert sol.value == 4 and sol.degrees[0] == 2

    p3 = path_graph(3)
    obj = MultiCriteriaObjective(((1, 0, 0), (0, 0, 1)), SumSquaredAffine((((1, -1), 0),)))
    assert maximize_multicriteria(p3, 1, obj).value == 1

    obj = MultiCriteriaObjective(((1, 1, 1),), identity_objective())
    sol = maximize_multicriteria(complete_graph(3), 0, obj)
    assert sol.value == 0 and sol.subset.indices() == ()


def test_unprescribed_solver_examples():
    k3 = complete_graph(3)
    obj = MultiCriteriaObjective(((1, 1, 1),), identity_objective())
    sol = maximize_multicriteria_unprescribed(k3, obj)
    assert sol.value == 6 and sol.subset.size() == 3

    zero = MultiCriteriaObjective(((1, 1, 1),), MaxAffine((((0,), 0),)))
    assert maximize_multicriteria_unprescribed(k3, zero).value == 0

    pm = perfect_matching_graph(3)
    obj = MultiCriteriaObjective(((1, 1, 1, -5, -5, -5),), identity_objective())
    sol = maximize_multicriteria_unprescribed(pm, obj)
    assert sol.value == 0 and sol.subset.indices() == ()


def test_solver_matches_bruteforce(rng):
    for _ in range(25):
        g = random_small_graph(rng, n_max=6, edge_prob=0.6)
        if g.num_edges > 9:
            continue
        r = rng.randint(1, 3)
        weights = tuple(tuple(rng.randint(-3, 3) for _ in range(g.n)) for _ in range(r))
        if rng.random() < 0.5:
            balance = MaxAffine(
                tuple(
                    (tuple(rng.randint(-3, 3) for _ in range(r)), rng.randint(-4, 4))
                    for _ in range(rng.randint(1, 3))
                )
            )
        else:
            balance = SumSquaredAffine(
                tuple(
                    (tuple(rng.randint(-3, 3) for _ in range(r)), rng.randint(-4, 4))
                    for _ in range(rng.randint(1, 2))
                )
            )
        obj = MultiCriteriaObjective(weights, balance)

        def score(degrees):
            y = tuple(sum(w[i] * d for i, d in enumerate(degrees)) for w in weights)
            return balance(y)

        values = []
        for m in range(g.num_edges + 1):
            want, _ = brute_force_best_subsets(g, m, score)
            got = maximize_multicriteria(g, m, obj)
            assert got.value == want
            assert score(got.degrees) == want  # witness consistency
            values.append(want)
        assert maximize_multicriteria_unprescribed(g, obj).value == max(values)


def test_tie_break_prefers_lexicographically_smallest():
    # all-zero weights: every 2-subset ties at value 0
    k3 = complete_graph(3)
    obj = MultiCriteriaObjective(((0, 0, 0),), identity_objective())
    sol = maximize_multicriteria(k3, 2, obj)
    assert sol.subset.indices() == (0, 1)


def test_criteria_cap():
    g = path_graph(3)
    weights = tuple((1, 0, 0) for _ in range(5))
    obj = MultiCriteriaObjective(weights, MaxAffine((((1, 0, 0, 0, 0), 0),)))
    with pytest.raises(PreconditionError):
        maximize_multicriteria(g, 1, obj)
    assert maximize_multicriteria(g, 1, obj, max_criteria=5).value == 1


def test_callback_objective_flagged():
    from degseq.graphs import ConvexCallback

    g = path_graph(3)
    obj = MultiCriteriaObjective(((1, 1, 1),), ConvexCallback(lambda y: y[0]))
    sol = maximize_multicriteria(g, 1, obj)
    assert sol.guarantee == "optimal-if-convex"
    assert maximize_multicriteria(g, 1, MultiCriteriaObjective(((1, 1, 1),), identity_objective())).guarantee == "optimal"


def test_pipeline_oracle_matches_single_linopt(rng):
    # the batched prescribed evaluation must agree with linopt_prescribed
    for _ in range(10):
        g = random_small_graph(rng, n_max=6, edge_prob=0.7)
        r = rng.randint(1, 2)
        weights = tuple(tuple(rng.randint(-3, 3) for _ in range(g.n)) for _ in range(r))
        pipeline = ChamberPipeline(g, weights)
        for idx, witness in enumerate(pipeline.witnesses):
            u = tuple(
                sum(witness.point[k] * weights[k][i] for k in range(r)) for i in range(g.n)
            )
            for m in range(g.num_edges + 1):
                res = linopt_prescribed(g, m, u)
                assert set(pipeline.chosen_edges(idx, m)) == set(res.subset.indices())
                point = pipeline.oracle_points(m)[idx]
                assert point == tuple(
                    sum(w[i] * d for i, d in enumerate(res.degrees)) for w in weights
                )


def test_threads_do_not_change_output():
    g = complete_graph(5)
    obj = MultiCriteriaObjective(
        ((1, -2, 0, 3, 1), (0, 1, 1, -1, 2)),
        MaxAffine((((2, -1), 1), ((-1, 1), 0))),
    )
    assert maximize_multicriteria(g, 4, obj, threads=1) == maximize_multicriteria(
        g, 4, obj, threads=4
    )
    assert maximize_multicriteria_unprescribed(g, obj, threads=1) == (
        maximize_multicriteria_unprescribed(g, obj, threads=3)
    )
