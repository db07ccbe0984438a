"""Edge-direction sets and linear optimization oracles over degree sequences.

The prescribed oracle maximizes u . d(F) over all m-edge subsets by taking
the m edges with the largest values u . d(e) (additivity of the degree map
over edges); the unprescribed oracle keeps exactly the edges with strictly
positive value.  Direction sets collect, in primitive sign-normalized form,
one representative per direction of the respective degree-sequence polytope's
edges: differences d(e) - d(f) over edge pairs in the prescribed case, the
vectors d(e) themselves in the unprescribed case.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .graphs import DegreeSequence, EdgeSubset, Graph, degree_sequence

PRESCRIBED = "prescribed"
UNPRESCRIBED = "unprescribed"


@dataclass(frozen=True)
class DirectionSet:
    """Primitive integer direction vectors, no two of which are parallel."""

    vectors: tuple[tuple[int, ...], ...]
    provenance: str
    degenerate: bool = False


@dataclass(frozen=True)
class LinOptResult:
    subset: EdgeSubset
    degrees: DegreeSequence
    value: int


def primitive(vector) -> tuple[int, ...] | None:
    """Divide by the gcd and flip so the first nonzero entry is positive.

    Returns None for the zero vector.
    """
    g = 0
    lead = 0
    for x in vector:
        if x != 0 and lead == 0:
            lead = x
        g = gcd(g, x)
    if g == 0:
        return None
    if lead < 0:
        g = -g
    return tuple(x // g for x in vector)


def directions_prescribed(graph: Graph) -> DirectionSet:
    """One representative of +-(d(e) - d(f)) per unordered pair of distinct edges."""
    m = graph.num_edges
    if m < 2:
        return DirectionSet((), PRESCRIBED, degenerate=True)
    seen = set()
    out = []
    n = graph.n
    for a in range(m):
        i, j = graph.edges[a]
        for b in range(a + 1, m):
            k, l = graph.edges[b]
            vec = [0] * n
            vec[i] += 1
            vec[j] += 1
            vec[k] -= 1
            vec[l] -= 1
            p = primitive(vec)
            if p is not None and p not in seen:
                seen.add(p)
                out.append(p)
    return DirectionSet(tuple(out), PRESCRIBED)


def directions_unprescribed(graph: Graph) -> DirectionSet:
    """The vectors d(e) themselves; distinct 0/1 vectors, already primitive."""
    out = []
    for i, j in graph.edges:
        vec = [0] * graph.n
        vec[i] = 1
        vec[j] = 1
        out.append(tuple(vec))
    return DirectionSet(tuple(out), UNPRESCRIBED)


def edge_values(graph: Graph, u) -> list[int]:
    """u . d(e) for every edge e, i.e. u_i + u_j."""
    return [u[i] + u[j] for i, j in graph.edges]


def linopt_prescribed(graph: Graph, m: int, u) -> LinOptResult:
    """Maximize u . d(F) over subsets with exactly m edges.

    Ties between equal-valued edges go to the lowest edge index, so the
    result is deterministic.
    """
    if not 0 <= m <= graph.num_edges:
        raise PreconditionError(f"m={m} outside 0..{graph.num_edges}")
    values = edge_values(graph, u)
    order = sorted(range(graph.num_edges), key=lambda e: (-values[e], e))
    chosen = order[:m]
    subset = EdgeSubset.from_indices(graph.num_edges, chosen)
    degrees = degree_sequence(graph, subset)
    return LinOptResult(subset, degrees, sum(values[e] for e in chosen))


def linopt_unprescribed(graph: Graph, u) -> LinOptResult:
    """Maximize u . d(F) over all subsets: keep edges with positive value."""
    values = edge_values(graph, u)
    chosen = [e for e, v in enumerate(values) if v > 0]
    subset = EdgeSubset.from_indices(graph.num_edges, chosen)
    degrees = degree_sequence(graph, subset)
    return LinOptResult(subset, degrees, sum(values[e] for e in chosen))
