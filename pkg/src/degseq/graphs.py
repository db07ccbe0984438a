"""Graphs, subgraphs, degree sequences, colorings and objective types.

Vertices are 0-based everywhere in the library; the file layer
(:mod:`degseq.instances`) converts to/from the 1-based convention used in
instance documents.  All types are immutable after construction and all
operations are pure functions, so everything here is safe to share across
threads.

Objective values are plain Python integers (arbitrary precision), so
arithmetic never wraps around.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import InvalidInstanceError, PreconditionError

Edge = tuple[int, int]
DegreeSequence = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``edges`` is canonical: each pair (i, j) has i < j, pairs are unique and
    sorted lexicographically.  Use :meth:`from_pairs` to normalize arbitrary
    input.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInstanceError("vertex count must be nonnegative")
        prev = None
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise InvalidInstanceError(
                    f"edge ({i}, {j}) is not a sorted pair of distinct vertices in range"
                )
            if prev is not None and (i, j) <= prev:
                raise InvalidInstanceError("edge list is not sorted and duplicate-free")
            prev = (i, j)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Normalize (sort endpoints and edge list) and validate a pair list."""
        norm = []
        for pair in pairs:
            i, j = pair
            if i == j:
                raise InvalidInstanceError(f"loop at vertex {i} is not allowed")
            if i > j:
                i, j = j, i
            norm.append((i, j))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise InvalidInstanceError(f"duplicate edge {a}")
        return cls(n, tuple(norm))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def host_degrees(self) -> DegreeSequence:
        """Degree of every vertex in this graph (d_i(H))."""
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (i, j) in enumerate(self.edges):
            inc[i].append(e)
            inc[j].append(e)
        return tuple(tuple(x) for x in inc)

    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(s) for s in adj)


@dataclass(frozen=True)
class EdgeSubset:
    """A subgraph of a host graph, as membership flags over its edge list."""

    flags: tuple[bool, ...]

    @classmethod
    def from_indices(cls, num_edges: int, indices: Iterable[int]) -> "EdgeSubset":
        flags = [False] * num_edges
        for e in indices:
            flags[e] = True
        return cls(tuple(flags))

    @classmethod
    def full(cls, num_edges: int) -> "EdgeSubset":
        return cls((True,) * num_edges)

    @classmethod
    def empty(cls, num_edges: int) -> "EdgeSubset":
        return cls((False,) * num_edges)

    def indices(self) -> tuple[int, ...]:
        return tuple(e for e, f in enumerate(self.flags) if f)

    def size(self) -> int:
        return sum(self.flags)

    def __len__(self) -> int:
        return len(self.flags)


def check_subset(graph: Graph, subset: EdgeSubset) -> None:
    if len(subset.flags) != graph.num_edges:
        raise PreconditionError(
            f"edge subset has {len(subset.flags)} flags but host has {graph.num_edges} edges"
        )


def degree_sequence(graph: Graph, subset: EdgeSubset) -> DegreeSequence:
    """Degree of every vertex in the subgraph selected by ``subset``."""
    check_subset(graph, subset)
    deg = [0] * graph.n
    for e, keep in enumerate(subset.flags):
        if keep:
            i, j = graph.edges[e]
            deg[i] += 1
            deg[j] += 1
    return tuple(deg)


def edge_degree_vector(graph: Graph, edge_index: int) -> DegreeSequence:
    """The 0/1 vector with ones exactly at the two endpoints of an edge."""
    if not 0 <= edge_index < graph.num_edges:
        raise PreconditionError(f"edge index {edge_index} out of range")
    i, j = graph.edges[edge_index]
    vec = [0] * graph.n
    vec[i] = 1
    vec[j] = 1
    return tuple(vec)


@dataclass(frozen=True)
class EdgeColoring:
    """A partition of the host's edges into p color classes with target counts.

    ``colors`` holds a 0-based class index per edge position; ``counts`` is the
    required number of selected edges of each class.
    """

    p: int
    colors: tuple[int, ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.p < 1:
            raise InvalidInstanceError("coloring needs at least one color class")
        if len(self.counts) != self.p:
            raise InvalidInstanceError("counts length must equal the number of colors")
        if any(not 0 <= c < self.p for c in self.colors):
            raise InvalidInstanceError("edge color out of range")
        sizes = self.class_sizes()
        for k, (m_k, size) in enumerate(zip(self.counts, sizes)):
            if not 0 <= m_k <= size:
                raise InvalidInstanceError(
                    f"count {m_k} for color {k + 1} outside 0..|E_{k + 1}|={size}"
                )

    def class_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.p
        for c in self.colors:
            sizes[c] += 1
        return tuple(sizes)

    def class_edges(self, k: int) -> tuple[int, ...]:
        return tuple(e for e, c in enumerate(self.colors) if c == k)

    def count_selected(self, subset: EdgeSubset) -> tuple[int, ...]:
        got = [0] * self.p
        for e, keep in enumerate(subset.flags):
            if keep:
                got[self.colors[e]] += 1
        return tuple(got)


@dataclass(frozen=True)
class SeparableObjective:
    """Per-vertex integer value tables f_i over exactly {0, ..., d_i(H)}."""

    tables: tuple[tuple[int, ...], ...]

    @classmethod
    def from_tables(cls, graph: Graph, tables: Sequence[Sequence[int]]) -> "SeparableObjective":
        if len(tables) != graph.n:
            raise InvalidInstanceError(
                f"{len(tables)} vertex functions supplied for {graph.n} vertices"
            )
        degs = graph.host_degrees()
        out = []
        for i, table in enumerate(tables):
            if len(table) != degs[i] + 1:
                raise InvalidInstanceError(
                    f"vertex {i + 1}: table has {len(table)} entries, "
                    f"domain {{0..{degs[i]}}} needs {degs[i] + 1}"
                )
            out.append(tuple(int(v) for v in table))
        return cls(tuple(out))

    @classmethod
    def zeros(cls, graph: Graph) -> "SeparableObjective":
        return cls(tuple((0,) * (d + 1) for d in graph.host_degrees()))


def evaluate_separable(objective: SeparableObjective, degrees: Sequence[int]) -> int:
    """Exact value of sum_i f_i(d_i); rejects degrees outside any table domain."""
    if len(degrees) != len(objective.tables):
        raise PreconditionError("degree sequence length does not match objective")
    total = 0
    for i, d in enumerate(degrees):
        table = objective.tables[i]
        if not 0 <= d < len(table):
            raise PreconditionError(
                f"degree {d} of vertex {i + 1} outside table domain 0..{len(table) - 1}"
            )
        total += table[d]
    return total


# Builtin table constructors used by instance files and the gadget generators.

def table_square(dmax: int) -> tuple[int, ...]:
    return tuple(z * z for z in range(dmax + 1))


def table_neg_square_shift(dmax: int, c: int) -> tuple[int, ...]:
    return tuple(-((z - c) ** 2) for z in range(dmax + 1))


def table_interval(dmax: int, lo: int, hi: int) -> tuple[int, ...]:
    """Concave penalty that is zero exactly on [lo, hi]: z-lo below, hi-z above."""
    if not 0 <= lo <= hi:
        raise InvalidInstanceError(f"interval bounds ({lo}, {hi}) must satisfy 0 <= l <= u")
    if hi > dmax:
        raise InvalidInstanceError(f"interval upper bound {hi} exceeds vertex degree {dmax}")
    out = []
    for z in range(dmax + 1):
        if z < lo:
            out.append(z - lo)
        elif z <= hi:
            out.append(0)
        else:
            out.append(hi - z)
    return tuple(out)


def table_indicator(dmax: int, admissible: Iterable[int]) -> tuple[int, ...]:
    """0 on the admissible set, -1 elsewhere."""
    good = set(admissible)
    if not good:
        raise InvalidInstanceError("admissible degree set must be nonempty")
    if any(not 0 <= z <= dmax for z in good):
        raise InvalidInstanceError(
            f"admissible set {sorted(good)} leaves the degree domain 0..{dmax}"
        )
    return tuple(0 if z in good else -1 for z in range(dmax + 1))


# Convex balancing functions for the multi-criteria problem.

@dataclass(frozen=True)
class MaxAffine:
    """f(y) = max_t (alpha_t . y + beta_t); convex by construction."""

    terms: tuple[tuple[tuple[int, ...], int], ...]

    def __call__(self, y: Sequence[int]) -> int:
        return max(sum(a * v for a, v in zip(alpha, y)) + beta for alpha, beta in self.terms)


@dataclass(frozen=True)
class SumSquaredAffine:
    """f(y) = sum_t (alpha_t . y + beta_t)^2; convex by construction."""

    terms: tuple[tuple[tuple[int, ...], int], ...]

    def __call__(self, y: Sequence[int]) -> int:
        return sum(
            (sum(a * v for a, v in zip(alpha, y)) + beta) ** 2 for alpha, beta in self.terms
        )


@dataclass(frozen=True)
class ConvexCallback:
    """A user-supplied oracle f: Z^r -> Z, trusted (not checked) to be convex."""

    fn: Callable[[tuple[int, ...]], int]

    def __call__(self, y: Sequence[int]) -> int:
        return int(self.fn(tuple(y)))


ConvexFunction = MaxAffine | SumSquaredAffine | ConvexCallback


def identity_objective() -> MaxAffine:
    """f(y) = y_1, the single-criterion linear case."""
    return MaxAffine((((1,), 0),))


@dataclass(frozen=True)
class MultiCriteriaObjective:
    """r linear criteria (rows of ``weights``) balanced by a convex function."""

    weights: tuple[tuple[int, ...], ...]
    balance: ConvexFunction

    def __post_init__(self):
        if len(self.weights) < 1:
            raise InvalidInstanceError("at least one criterion row is required")
        ncols = {len(w) for w in self.weights}
        if len(ncols) != 1:
            raise InvalidInstanceError("criterion rows must all have the same length")

    @property
    def r(self) -> int:
        return len(self.weights)

    def valid_for(self, graph: Graph) -> bool:
        return all(len(w) == graph.n for w in self.weights)

    def certified_convex(self) -> bool:
        """Builtin families are convex by construction; callbacks are trusted."""
        return not isinstance(self.balance, ConvexCallback)


@dataclass(frozen=True)
class WeightedInstance:
    """Edge-weighted separable problem: maximize sum_i f_i(sum of w(e) over e in F at i).

    ``vertex_functions`` are callbacks so that arbitrary weighted-degree
    domains (including negative sums) are supported.
    """

    graph: Graph
    weights: tuple[int, ...]
    vertex_functions: tuple[Callable[[int], int], ...] = field(repr=False)

    def __post_init__(self):
        if len(self.weights) != self.graph.num_edges:
            raise InvalidInstanceError("one weight per edge is required")
        if len(self.vertex_functions) != self.graph.n:
            raise InvalidInstanceError("one vertex function per vertex is required")


# Small named graphs shared by generators and tests.

def path_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least 3 vertices")
    return Graph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_pairs(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_pairs(leaves + 1, [(0, i + 1) for i in range(leaves)])


def perfect_matching_graph(m: int) -> Graph:
    """The oracle-hardness instance: m disjoint edges {i, m+i} on 2m vertices."""
    return Graph.from_pairs(2 * m, [(i, m + i) for i in range(m)])
