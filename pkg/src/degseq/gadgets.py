"""Instance generators for the reductions from factor/matching/partition
questions to degree sequence optimization.

All gadgets share the zero-threshold convention: the decision answer is YES
exactly when the generated instance has optimum 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceededError, InvalidInstanceError, PreconditionError
from .graphs import (
    EdgeColoring,
    EdgeSubset,
    Graph,
    SeparableObjective,
    WeightedInstance,
    complete_bipartite,
    table_indicator,
    table_interval,
    table_neg_square_shift,
)
from .instances import Instance


@dataclass(frozen=True)
class FactorSpec:
    """General factor question: is there G with d_i(G) in B_i for all i?"""

    graph: Graph
    admissible: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.admissible) != self.graph.n:
            raise InvalidInstanceError("one admissible set per vertex is required")
        for i, (b, d) in enumerate(zip(self.admissible, self.graph.host_degrees())):
            if not b:
                raise InvalidInstanceError(f"admissible set of vertex {i + 1} is empty")
            if any(not 0 <= z <= d for z in b):
                raise InvalidInstanceError(
                    f"admissible set of vertex {i + 1} leaves the degree domain 0..{d}"
                )


@dataclass(frozen=True)
class LuFactorSpec:
    """Interval factor question with per-vertex degree bounds l_i <= u_i."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        for i, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if not 0 <= lo <= hi:
                raise InvalidInstanceError(f"bounds of vertex {i + 1} must satisfy 0 <= l <= u")


def general_factor_instance(spec: FactorSpec) -> Instance:
    """Unprescribed instance with f_i = 0 on B_i and -1 elsewhere; the optimum
    is 0 iff a factor exists, and any optimal subgraph then is one."""
    degs = spec.graph.host_degrees()
    tables = tuple(table_indicator(degs[i], spec.admissible[i]) for i in range(spec.graph.n))
    return Instance(graph=spec.graph, vertex_functions=SeparableObjective(tables))


def lu_factor_objective(spec: LuFactorSpec, graph: Graph) -> SeparableObjective:
    """Concave tables vanishing exactly on [l_i, u_i]: z - l_i below, u_i - z above."""
    if len(spec.lower) != graph.n:
        raise PreconditionError("one (l, u) pair per vertex is required")
    degs = graph.host_degrees()
    tables = []
    for i in range(graph.n):
        if spec.upper[i] > degs[i]:
            raise PreconditionError(
                f"upper bound {spec.upper[i]} of vertex {i + 1} exceeds its degree {degs[i]}"
            )
        tables.append(table_interval(degs[i], spec.lower[i], spec.upper[i]))
    return SeparableObjective(tuple(tables))


def lu_factor_instance(spec: LuFactorSpec, graph: Graph) -> Instance:
    return Instance(graph=graph, vertex_functions=lu_factor_objective(spec, graph))


def exact_matching_instance(
    r: int,
    edge_colors: Sequence[int],
    counts: Sequence[int],
) -> tuple[Instance, dict]:
    """Colored instance on K_{r,r} with f_i(z) = -(z-1)^2 for every vertex.

    ``edge_colors`` assigns a 0-based color to each of the r*r edges in
    canonical order.  Optimum 0 iff a perfect matching uses exactly counts[k]
    edges of each color; when sum(counts) != r the target 0 is unreachable,
    which the returned metadata flags.
    """
    graph = complete_bipartite(r, r)
    if len(edge_colors) != graph.num_edges:
        raise InvalidInstanceError(f"need one color per edge of K_{{{r},{r}}}")
    p = len(counts)
    coloring = EdgeColoring(p=p, colors=tuple(edge_colors), counts=tuple(counts))
    degs = graph.host_degrees()
    tables = tuple(table_neg_square_shift(degs[i], 1) for i in range(graph.n))
    instance = Instance(
        graph=graph,
        coloring=coloring,
        vertex_functions=SeparableObjective(tables),
    )
    meta = {"target_reachable": sum(counts) == r}
    return instance, meta


def cubic_subgraph_instance(graph: Graph) -> Instance:
    """Unprescribed instance with f_i zero at degrees 0 and 3 (clipped to the
    vertex domain), -1 elsewhere; optimum 0 iff a cubic subgraph exists."""
    tables = []
    for d in graph.host_degrees():
        good = [z for z in (0, 3) if z <= d]
        tables.append(table_indicator(d, good))
    return Instance(graph=graph, vertex_functions=SeparableObjective(tuple(tables)))


def bipartite_concave_convex_instance(graph: Graph, left: Sequence[int]) -> Instance:
    """Unprescribed instance encoding the factor question B_i = {1} on the
    left side and B_j = {0, 3} on the right: f = -(z-1)^2 on the left
    (concave), f = z(z-3) on the right (convex); optimum 0 iff a factor exists."""
    left_set = set(left)
    for i, j in graph.edges:
        if (i in left_set) == (j in left_set):
            raise PreconditionError(f"edge ({i + 1}, {j + 1}) does not cross the bipartition")
    degs = graph.host_degrees()
    tables = []
    for v in range(graph.n):
        if v in left_set:
            tables.append(table_neg_square_shift(degs[v], 1))
        else:
            tables.append(tuple(z * (z - 3) for z in range(degs[v] + 1)))
    return Instance(graph=graph, vertex_functions=SeparableObjective(tuple(tables)))


@dataclass(frozen=True)
class SubdivisionGadget:
    """Bipartite lift of a prescribed all-squares instance.

    The lifted graph keeps the original vertices, adds one vertex per original
    edge (adjacent to both endpoints) and an apex adjacent to all subdivision
    vertices.  At any optimum of the unprescribed lifted instance, exactly m
    subdivision vertices have degree 3 and the rest degree 0; those m original
    edges solve the prescribed problem max sum d_i(F)^2 over |F| = m.
    """

    instance: Instance
    original: Graph
    m: int
    penalty: int

    def subdivision_vertex(self, edge_index: int) -> int:
        return self.original.n + edge_index

    @property
    def apex(self) -> int:
        return self.original.n + self.original.num_edges

    def extract(self, lifted_subset: EdgeSubset) -> EdgeSubset:
        """Original edges whose subdivision vertex has degree 3 in the lifted pick."""
        lifted = self.instance.graph
        deg = [0] * lifted.n
        for e, keep in enumerate(lifted_subset.flags):
            if keep:
                i, j = lifted.edges[e]
                deg[i] += 1
                deg[j] += 1
        chosen = [
            e for e in range(self.original.num_edges)
            if deg[self.subdivision_vertex(e)] == 3
        ]
        return EdgeSubset.from_indices(self.original.num_edges, chosen)


def subdivision_hardness_instance(graph: Graph, m: int) -> SubdivisionGadget:
    """Lift the prescribed all-squares problem on ``graph`` with edge budget m
    to an unprescribed instance on the subdivided graph plus an apex.

    Tables: z^2 on original vertices, a*z*(z-3) on subdivision vertices and
    -a*(z-m)^2 on the apex.  The penalty scale a = 1 + n*(n-1)^2 exceeds the
    largest possible sum of squared degrees, so any configuration violating
    the degree pattern loses to a conforming one.
    """
    if not 0 <= m <= graph.num_edges:
        raise PreconditionError(f"m={m} outside 0..{graph.num_edges}")
    n = graph.n
    num = graph.num_edges
    penalty = 1 + n * (n - 1) ** 2
    apex = n + num
    lifted_edges = []
    for e, (i, j) in enumerate(graph.edges):
        sub = n + e
        lifted_edges.append((i, sub))
        lifted_edges.append((j, sub))
        lifted_edges.append((sub, apex))
    lifted = Graph.from_pairs(n + num + 1, lifted_edges)
    degs = lifted.host_degrees()
    tables: list[tuple[int, ...]] = []
    for v in range(n):
        tables.append(tuple(z * z for z in range(degs[v] + 1)))
    for e in range(num):
        d = degs[n + e]
        tables.append(tuple(penalty * z * (z - 3) for z in range(d + 1)))
    tables.append(tuple(-penalty * (z - m) ** 2 for z in range(degs[apex] + 1)))
    instance = Instance(graph=lifted, vertex_functions=SeparableObjective(tuple(tables)))
    return SubdivisionGadget(instance=instance, original=graph, m=m, penalty=penalty)


def partition_gadget(values: Sequence[int]) -> WeightedInstance:
    """Weighted instance on K_{2,q} whose optimum is 0 iff the values split
    into two halves of equal sum.

    Both edges at column j carry weight a_j.  The only nonzero vertex function
    sits on the first side vertex: f(z) = -(2z - sum(a))^2, which vanishes
    exactly when 2z equals the total (the doubling keeps values integral for
    odd totals and preserves concavity and the zero set).
    """
    if any(a < 1 for a in values):
        raise PreconditionError("partition values must be positive")
    q = len(values)
    graph = complete_bipartite(2, q)
    weights = [0] * graph.num_edges
    for e, (i, j) in enumerate(graph.edges):
        weights[e] = values[j - 2]
    total = sum(values)

    def f_v1(z: int) -> int:
        return -((2 * z - total) ** 2)

    def zero(_z: int) -> int:
        return 0

    fns = [f_v1] + [zero] * (graph.n - 1)
    return WeightedInstance(graph=graph, weights=tuple(weights), vertex_functions=tuple(fns))


def weighted_objective_eval(instance: WeightedInstance, subset: EdgeSubset) -> int:
    """sum_i f_i(sum of w(e) over selected edges at i), exactly."""
    if len(subset.flags) != instance.graph.num_edges:
        raise PreconditionError("subset does not match the host edge count")
    sums = [0] * instance.graph.n
    for e, keep in enumerate(subset.flags):
        if keep:
            i, j = instance.graph.edges[e]
            sums[i] += instance.weights[e]
            sums[j] += instance.weights[e]
    return sum(f(s) for f, s in zip(instance.vertex_functions, sums))


def weighted_bruteforce(instance: WeightedInstance, cap: int = 20) -> tuple[int, EdgeSubset]:
    """Exhaustive optimum of a weighted instance (no polynomial solver exists
    for this class; the partition reduction shows NP-hardness)."""
    num = instance.graph.num_edges
    if num > cap:
        raise CapExceededError(f"weighted brute force capped at {cap} edges (got {num})")
    best_value = None
    best = None
    for mask in range(1 << num):
        subset = EdgeSubset.from_indices(num, [e for e in range(num) if mask >> e & 1])
        value = weighted_objective_eval(instance, subset)
        if best_value is None or value > best_value:
            best_value = value
            best = subset
    return best_value, best
