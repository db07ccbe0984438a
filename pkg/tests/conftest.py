import itertools
import random

import pytest

from degseq.graphs import EdgeSubset, Graph, degree_sequence


@pytest.fixture
def rng():
    return random.Random(20240817)


def random_small_graph(rng, n_max=6, edge_prob=0.5):
    n = rng.randint(1, n_max)
    pairs = [e for e in itertools.combinations(range(n), 2) if rng.random() < edge_prob]
    return Graph.from_pairs(n, pairs)


def brute_force_best_subsets(graph, m, score):
    """All m-subsets achieving the best score; score takes a degree sequence."""
    best = None
    winners = []
    for comb in itertools.combinations(range(graph.num_edges), m):
        subset = EdgeSubset.from_indices(graph.num_edges, comb)
        v = score(degree_sequence(graph, subset))
        if best is None or v > best:
            best = v
            winners = [comb]
        elif v == best:
            winners.append(comb)
    return best, winners
