"""Exact convex multi-criteria degree sequence optimization.

Pipeline: collect edge directions of the degree-sequence polytope, project
them through the criteria map x -> (w_1 x, ..., w_r x), enumerate one interior
witness per full-dimensional cell of the central hyperplane arrangement of
the projected directions, query the linear oracle once per witness, evaluate
the convex balancing function at the resulting criteria points and keep the
best.  Every witness is computed in exact integer arithmetic: a rational
interior point scaled by a positive integer stays interior to the same cell,
so witnesses are stored as primitive integer vectors.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _kernels
from .errors import PreconditionError
from .graphs import (
    DegreeSequence,
    EdgeSubset,
    Graph,
    MultiCriteriaObjective,
    degree_sequence,
)
from .oracles import (
    DirectionSet,
    directions_prescribed,
    directions_unprescribed,
    primitive,
)

DEFAULT_MAX_CRITERIA = 4


@dataclass(frozen=True)
class ProjectedGenerators:
    """Nonzero, pairwise non-parallel primitive images of direction vectors."""

    vectors: tuple[tuple[int, ...], ...]
    dim: int
    span_dim: int


@dataclass(frozen=True)
class ChamberWitness:
    """An interior point of one cell, with its sign pattern on the generators.

    ``point`` is a primitive integer representative of the rational witness;
    sign(point . g_j) = signs[j] != 0 for every generator g_j.
    """

    point: tuple[int, ...]
    signs: tuple[int, ...]


@dataclass(frozen=True)
class MultiCriteriaSolution:
    subset: EdgeSubset
    degrees: DegreeSequence
    criteria_point: tuple[int, ...]
    value: int
    oracle_queries: int
    guarantee: str  # "optimal" for builtin convex families, "optimal-if-convex" for callbacks


def project_directions(directions: DirectionSet, weights) -> ProjectedGenerators:
    """Project each direction through the criteria rows; drop zero images,
    reduce to primitive sign-normalized form, deduplicate, and record the
    dimension of the linear span (by exact rational rank)."""
    r = len(weights)
    seen = set()
    out = []
    for vec in directions.vectors:
        img = tuple(sum(w[i] * x for i, x in enumerate(vec) if x) for w in weights)
        p = primitive(img)
        if p is not None and p not in seen:
            seen.add(p)
            out.append(p)
    return ProjectedGenerators(tuple(out), r, _int_rank(out, r))


def _int_rank(vectors, ncols: int) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / lead
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _record(found: dict, point, dots) -> None:
    g = 0
    for x in point:
        g = gcd(g, x)
    point = tuple(x // g for x in point)
    dots = tuple(d // g for d in dots)
    signs = tuple(1 if d > 0 else -1 if d < 0 else 0 for d in dots)
    assert 0 not in signs, "witness landed on a hyperplane"
    found.setdefault(signs, point)


def _descend(gens: list[tuple[int, ...]]) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Facet descent: {sign vector: interior point} per cell of the central
    arrangement of ``gens`` (nonzero, pairwise non-parallel), within their span.

    For each generator g_i, recurse on the arrangement induced inside the
    hyperplane orthogonal to g_i, then push each recursive witness c' off the
    hyperplane both ways: c' +- eps*g_i with eps = min_j |c'.g_j| / (2 max_j
    |g_i.g_j|) over nonzero products, small enough to keep every already
    nonzero sign.  Every cell has a facet on some hyperplane, and the two
    perturbations reach both cells adjacent to that facet, so all cells are
    found; duplicates collapse on the sign vector.
    """
    r = len(gens[0])
    g = len(gens)
    gram = _kernels.imatmul(gens, gens)
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    for i in range(g):
        gi = gens[i]
        scale = gram[i][i]
        proj = []
        seen = set()
        for j in range(g):
            if j == i:
                continue
            coef = gram[i][j]
            h = primitive(tuple(scale * gens[j][k] - coef * gi[k] for k in range(r)))
            if h is not None and h not in seen:
                seen.add(h)
                proj.append(h)
        if not proj:
            # single direction: the two open half-lines are the cells
            for sign in (1, -1):
                _record(
                    found,
                    tuple(sign * x for x in gi),
                    tuple(sign * gram[i][j] for j in range(g)),
                )
            continue
        sub = _descend(proj)
        sub_points = list(sub.values())
        dot_rows = _kernels.imatmul(sub_points, gens)
        denom = 2 * max(abs(gram[i][j]) for j in range(g))
        for row, sub_point in enumerate(sub_points):
            dots_sub = dot_rows[row]
            num = min(abs(d) for d in dots_sub if d != 0)
            for sign in (1, -1):
                point = tuple(denom * a + sign * num * b for a, b in zip(sub_point, gi))
                dots = tuple(denom * da + sign * num * db for da, db in zip(dots_sub, gram[i]))
                _record(found, point, dots)
    return found


def enumerate_chamber_witnesses(generators: ProjectedGenerators) -> list[ChamberWitness]:
    """One witness per full-dimensional cell (within the generator span) of
    the central arrangement {c : c . g_j = 0}.

    With no generators the whole space is a single cell and the zero witness
    is returned; a single generator yields the two witnesses +-g_1.
    """
    if not generators.vectors:
        return [ChamberWitness((0,) * generators.dim, ())]
    cells = _descend(list(generators.vectors))
    return [ChamberWitness(point, signs) for signs, point in cells.items()]


class ChamberPipeline:
    """Shared work for one (graph, criteria rows) pair.

    Directions, projected generators and chamber witnesses depend on neither
    the edge budget m nor the balancing function, so callers solving many
    (m, f) combinations construct one pipeline.  Each witness's oracle answer
    is resolved once: the edges get sorted by (value desc, index asc) a single
    time and running criteria sums then give the oracle's criteria point for
    every m at once.
    """

    def __init__(self, graph: Graph, weights, prescribed: bool = True,
                 max_criteria: int = DEFAULT_MAX_CRITERIA):
        r = len(weights)
        if r > max_criteria:
            raise PreconditionError(
                f"r={r} criteria exceed the cap {max_criteria}; raise max_criteria explicitly"
            )
        if any(len(w) != graph.n for w in weights):
            raise PreconditionError("criterion rows must have length n")
        self.graph = graph
        self.weights = tuple(tuple(w) for w in weights)
        self.r = r
        self.prescribed = prescribed
        directions = directions_prescribed(graph) if prescribed else directions_unprescribed(graph)
        self.generators = project_directions(directions, self.weights)
        self.witnesses = enumerate_chamber_witnesses(self.generators)
        # criteria vector of each edge: (w_1 . d(e), ..., w_r . d(e))
        self.edge_criteria = [
            tuple(w[i] + w[j] for w in self.weights) for i, j in graph.edges
        ]
        if self.edge_criteria:
            witness_values = _kernels.imatmul(
                [w.point for w in self.witnesses], self.edge_criteria
            )
        else:
            witness_values = [[] for _ in self.witnesses]
        num = graph.num_edges
        if prescribed:
            # per witness: edge order and running criteria sums over its prefixes
            self._orders = []
            self._prefix_points = []
            for values in witness_values:
                order = sorted(range(num), key=lambda e: (-values[e], e))
                prefix = [(0,) * r]
                acc = [0] * r
                for e in order:
                    ec = self.edge_criteria[e]
                    for k in range(r):
                        acc[k] += ec[k]
                    prefix.append(tuple(acc))
                self._orders.append(order)
                self._prefix_points.append(prefix)
        else:
            self._chosen = []
            self._points = []
            for values in witness_values:
                chosen = tuple(e for e in range(num) if values[e] > 0)
                point = [0] * r
                for e in chosen:
                    ec = self.edge_criteria[e]
                    for k in range(r):
                        point[k] += ec[k]
                self._chosen.append(chosen)
                self._points.append(tuple(point))

    def oracle_points(self, m: int | None) -> list[tuple[int, ...]]:
        """The criteria point of each witness's oracle answer."""
        if m is None:
            if self.prescribed:
                raise PreconditionError("prescribed pipeline needs an edge budget m")
            return self._points
        if not 0 <= m <= self.graph.num_edges:
            raise PreconditionError(f"m={m} outside 0..{self.graph.num_edges}")
        return [prefix[m] for prefix in self._prefix_points]

    def chosen_edges(self, witness_index: int, m: int | None) -> tuple[int, ...]:
        if m is None:
            return self._chosen[witness_index]
        return tuple(sorted(self._orders[witness_index][:m]))

    def solve(self, m: int | None, balance, threads: int = 1) -> MultiCriteriaSolution:
        points = self.oracle_points(m)
        if threads > 1 and len(points) > threads:
            chunks = [range(t, len(points), threads) for t in range(threads)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                values_parts = pool.map(
                    lambda idxs: [(balance(points[i]), i) for i in idxs], chunks
                )
            scored = [pair for part in values_parts for pair in part]
        else:
            scored = [(balance(p), i) for i, p in enumerate(points)]
        best_value = max(v for v, _ in scored)
        # ties between witnesses go to the lexicographically smallest edge set
        best_edges = None
        best_index = None
        for v, i in scored:
            if v != best_value:
                continue
            edges = self.chosen_edges(i, m)
            if best_edges is None or edges < best_edges:
                best_edges = edges
                best_index = i
        subset = EdgeSubset.from_indices(self.graph.num_edges, best_edges)
        return MultiCriteriaSolution(
            subset=subset,
            degrees=degree_sequence(self.graph, subset),
            criteria_point=points[best_index],
            value=best_value,
            oracle_queries=len(self.witnesses),
            guarantee="optimal",
        )


def maximize_multicriteria(
    graph: Graph,
    m: int,
    objective: MultiCriteriaObjective,
    max_criteria: int = DEFAULT_MAX_CRITERIA,
    threads: int = 1,
) -> MultiCriteriaSolution:
    """Global maximum of f(w_1 d(G), ..., w_r d(G)) over subgraphs with
    exactly m edges, for convex f."""
    if not 0 <= m <= graph.num_edges:
        raise PreconditionError(f"m={m} outside 0..{graph.num_edges}")
    pipeline = ChamberPipeline(graph, objective.weights, prescribed=True, max_criteria=max_criteria)
    solution = pipeline.solve(m, objective.balance, threads=threads)
    if not objective.certified_convex():
        solution = _as_lower_bound(solution)
    return solution


def maximize_multicriteria_unprescribed(
    graph: Graph,
    objective: MultiCriteriaObjective,
    max_criteria: int = DEFAULT_MAX_CRITERIA,
    threads: int = 1,
) -> MultiCriteriaSolution:
    """Unprescribed variant: no constraint on the number of edges.  Uses the
    smaller direction set {d(e)} and the sign-based oracle."""
    pipeline = ChamberPipeline(graph, objective.weights, prescribed=False, max_criteria=max_criteria)
    solution = pipeline.solve(None, objective.balance, threads=threads)
    if not objective.certified_convex():
        solution = _as_lower_bound(solution)
    return solution


def _as_lower_bound(solution: MultiCriteriaSolution) -> MultiCriteriaSolution:
    """Callback objectives are trusted to be convex; if not, the result is
    only the best over the queried candidates, flagged here."""
    return MultiCriteriaSolution(
        subset=solution.subset,
        degrees=solution.degrees,
        criteria_point=solution.criteria_point,
        value=solution.value,
        oracle_queries=solution.oracle_queries,
        guarantee="optimal-if-convex",
    )
