"""Seeded random instance generators.

Every generator takes an explicit ``random.Random`` (or seed) and is fully
deterministic given (parameters, seed); the CLI's ``gen`` command and the
verification suites build their corpora through these.
"""

from __future__ import annotations

import itertools
import random

from .errors import PreconditionError
from .graphs import EdgeColoring, Graph, SeparableObjective
from .instances import Instance
from .treedepth import EliminationForest


def rng_of(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_graph(seed_or_rng, n: int, edge_prob: float) -> Graph:
    rng = rng_of(seed_or_rng)
    pairs = [e for e in itertools.combinations(range(n), 2) if rng.random() < edge_prob]
    return Graph.from_pairs(n, pairs)


def random_graph_with_edge_count(seed_or_rng, n: int, num_edges: int) -> Graph:
    rng = rng_of(seed_or_rng)
    pool = list(itertools.combinations(range(n), 2))
    if num_edges > len(pool):
        raise PreconditionError(f"cannot place {num_edges} edges on {n} vertices")
    return Graph.from_pairs(n, rng.sample(pool, num_edges))


def random_tables(seed_or_rng, graph: Graph, lo: int = -9, hi: int = 9) -> SeparableObjective:
    rng = rng_of(seed_or_rng)
    return SeparableObjective(
        tuple(tuple(rng.randint(lo, hi) for _ in range(d + 1)) for d in graph.host_degrees())
    )


def random_coloring(seed_or_rng, graph: Graph, p: int, counts=None) -> EdgeColoring:
    rng = rng_of(seed_or_rng)
    colors = tuple(rng.randrange(p) for _ in range(graph.num_edges))
    sizes = [0] * p
    for c in colors:
        sizes[c] += 1
    if counts is None:
        counts = tuple(rng.randint(0, s) for s in sizes)
    else:
        counts = tuple(counts)
    return EdgeColoring(p=p, colors=colors, counts=counts)


def random_forest(seed_or_rng, n: int, height: int, root_prob: float = 0.1) -> EliminationForest:
    """Random rooted forest on n vertices with height at most ``height``."""
    rng = rng_of(seed_or_rng)
    parent: list[int | None] = []
    depth: list[int] = []
    for v in range(n):
        shallow = [w for w in range(v) if depth[w] < height]
        if v == 0 or not shallow or rng.random() < root_prob:
            parent.append(None)
            depth.append(1)
        else:
            w = rng.choice(shallow)
            parent.append(w)
            depth.append(depth[w] + 1)
    return EliminationForest(tuple(parent))


def random_bounded_td_instance(
    seed_or_rng,
    n: int,
    height: int,
    p: int,
    edge_prob: float = 0.5,
    counts=None,
    table_lo: int = -9,
    table_hi: int = 9,
    max_edges: int | None = None,
) -> tuple[Instance, EliminationForest]:
    """Instance whose edges all join ancestor-descendant pairs of a random
    forest of height <= ``height``; the forest ships as the certificate."""
    rng = rng_of(seed_or_rng)
    forest = random_forest(rng, n, height)
    pairs = []
    for v in range(n):
        w = forest.parent[v]
        while w is not None:
            if rng.random() < edge_prob:
                pairs.append((w, v))
            w = forest.parent[w]
    if max_edges is not None and len(pairs) > max_edges:
        pairs = rng.sample(pairs, max_edges)
    graph = Graph.from_pairs(n, pairs)
    coloring = None
    if p >= 1:
        coloring = random_coloring(rng, graph, p, counts=counts)
    objective = random_tables(rng, graph, table_lo, table_hi)
    return Instance(graph=graph, coloring=coloring, vertex_functions=objective), forest


def random_weight_rows(seed_or_rng, n: int, r: int, lo: int = -3, hi: int = 3):
    rng = rng_of(seed_or_rng)
    return tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(r))


def random_max_affine(seed_or_rng, r: int, max_terms: int = 3):
    from .graphs import MaxAffine

    rng = rng_of(seed_or_rng)
    terms = tuple(
        (tuple(rng.randint(-3, 3) for _ in range(r)), rng.randint(-4, 4))
        for _ in range(rng.randint(1, max_terms))
    )
    return MaxAffine(terms)


def random_sum_sq_affine(seed_or_rng, r: int, max_terms: int = 2):
    from .graphs import SumSquaredAffine

    rng = rng_of(seed_or_rng)
    terms = tuple(
        (tuple(rng.randint(-3, 3) for _ in range(r)), rng.randint(-4, 4))
        for _ in range(rng.randint(1, max_terms))
    )
    return SumSquaredAffine(terms)
