"""The colored degree optimization problem as a binary integer program.

Variables: x_e per edge, y_i^j per vertex i and candidate degree
j in {0..d_i(H)} (n + 3|E| variables in total).  Equality rows: a_i couples
the selected edges at i to the unique chosen degree level, b_i makes the
levels one-hot, c_k pins the per-color edge counts (2n + p rows).  The
objective puts f_i(j) on y_i^j; all variables are binary.  The largest
coefficient magnitude is max(1, n-1), attained by the level terms in the
a-rows.

The model is a first-class artifact: it serializes to a deterministic text
format and a brute-force solver validates its equivalence with the subgraph
formulation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceededError, InfeasibleAssignmentError, PreconditionError
from .graphs import (
    EdgeColoring,
    EdgeSubset,
    Graph,
    SeparableObjective,
    degree_sequence,
)


@dataclass(frozen=True)
class IpVariable:
    name: str
    kind: str  # "edge" or "level"
    edge: int | None
    vertex: int | None
    level: int | None
    objective: int


@dataclass(frozen=True)
class IpRow:
    name: str
    rhs: int
    coeffs: tuple[tuple[int, int], ...]  # (variable index, nonzero coefficient)


@dataclass(frozen=True)
class IpModel:
    """Equality-constrained binary program max c.z : Az = b, z in {0,1}^N."""

    n: int
    p: int
    num_edges: int
    variables: tuple[IpVariable, ...]
    rows: tuple[IpRow, ...]

    def max_abs_coeff(self) -> int:
        return max(
            (abs(c) for row in self.rows for _, c in row.coeffs),
            default=0,
        )

    def row_value(self, row: IpRow, assignment: Sequence[int]) -> int:
        return sum(c * assignment[v] for v, c in row.coeffs)


def build_colored_ip(
    graph: Graph,
    coloring: EdgeColoring | None,
    objective: SeparableObjective,
) -> IpModel:
    """Construct the program for (H, coloring, f); coloring None means no
    count rows (p = 0, the plain separable problem)."""
    if coloring is not None and len(coloring.colors) != graph.num_edges:
        raise PreconditionError("coloring does not match the host edge count")
    if len(objective.tables) != graph.n:
        raise PreconditionError("objective does not match the host vertex count")
    degs = graph.host_degrees()
    for i, table in enumerate(objective.tables):
        if len(table) != degs[i] + 1:
            raise PreconditionError(f"table of vertex {i + 1} does not match its degree domain")

    variables: list[IpVariable] = []
    for e in range(graph.num_edges):
        variables.append(IpVariable(f"x{e + 1}", "edge", e, None, None, 0))
    level_index: dict[tuple[int, int], int] = {}
    for i in range(graph.n):
        for j in range(degs[i] + 1):
            level_index[(i, j)] = len(variables)
            variables.append(
                IpVariable(f"y{i + 1}_{j}", "level", None, i, j, objective.tables[i][j])
            )

    incident = graph.incident_edges()
    rows: list[IpRow] = []
    for i in range(graph.n):
        coeffs = [(e, 1) for e in incident[i]]
        coeffs += [(level_index[(i, j)], -j) for j in range(1, degs[i] + 1)]
        rows.append(IpRow(f"a{i + 1}", 0, tuple(coeffs)))
    for i in range(graph.n):
        coeffs = [(level_index[(i, j)], 1) for j in range(degs[i] + 1)]
        rows.append(IpRow(f"b{i + 1}", 1, tuple(coeffs)))
    p = 0
    if coloring is not None:
        p = coloring.p
        for k in range(p):
            coeffs = [(e, 1) for e in coloring.class_edges(k)]
            rows.append(IpRow(f"c{k + 1}", coloring.counts[k], tuple(coeffs)))

    model = IpModel(
        n=graph.n,
        p=p,
        num_edges=graph.num_edges,
        variables=tuple(variables),
        rows=tuple(rows),
    )
    assert len(model.variables) == graph.n + 3 * graph.num_edges
    assert len(model.rows) == 2 * graph.n + p
    assert model.max_abs_coeff() <= max(1, graph.n - 1)
    return model


def serialize_ip(model: IpModel) -> str:
    """Deterministic text form: VAR lines in variable order, one MAX line with
    the nonzero objective terms, EQ lines in row order (terms in variable
    order, zero coefficients omitted).  Byte-identical for equal models."""
    lines = [f"VAR {v.name} BIN" for v in model.variables]
    obj_terms = " ".join(f"{v.name} {v.objective}" for v in model.variables if v.objective != 0)
    lines.append(f"MAX {obj_terms}".rstrip())
    for row in model.rows:
        terms = " ".join(f"{model.variables[v].name} {c}" for v, c in sorted(row.coeffs))
        lines.append(f"EQ {row.name} {row.rhs} {terms}".rstrip())
    return "\n".join(lines) + "\n"


def ip_assignment_to_subgraph(model: IpModel, assignment: Sequence[int]) -> tuple[EdgeSubset, int]:
    """Map a feasible binary assignment to its subgraph and objective value;
    infeasibility is reported with the first violated row."""
    if len(assignment) != len(model.variables):
        raise PreconditionError("assignment length does not match the variable count")
    for z in assignment:
        if z not in (0, 1):
            raise PreconditionError("assignment must be binary")
    for row in model.rows:
        lhs = model.row_value(row, assignment)
        if lhs != row.rhs:
            raise InfeasibleAssignmentError(
                row.name, f"row {row.name} violated: lhs={lhs} != rhs={row.rhs}"
            )
    flags = [False] * model.num_edges
    value = 0
    for var, z in zip(model.variables, assignment):
        if var.kind == "edge" and z:
            flags[var.edge] = True
        value += var.objective * z
    return EdgeSubset(tuple(flags)), value


def subgraph_to_ip_assignment(graph: Graph, subset: EdgeSubset) -> tuple[int, ...]:
    """Canonical assignment for a subgraph: x from the subset, the matching
    one-hot degree level per vertex."""
    degrees = degree_sequence(graph, subset)
    out = [1 if f else 0 for f in subset.flags]
    for i, d in enumerate(graph.host_degrees()):
        for j in range(d + 1):
            out.append(1 if degrees[i] == j else 0)
    return tuple(out)


def solve_ip_bruteforce(model: IpModel, cap: int = 24) -> tuple[tuple[int, ...] | None, int | None]:
    """Exhaustive optimum of the program, or (None, None) if infeasible.

    Enumerates the edge variables (per count row, only subsets of the right
    size); the one-hot rows then admit exactly one level assignment per
    vertex, which is checked against every row before scoring.
    """
    nvars = len(model.variables)
    if nvars > cap:
        raise CapExceededError(
            f"IP brute force capped at {cap} variables (got {nvars}); pass a larger cap"
        )
    edge_vars = [i for i, v in enumerate(model.variables) if v.kind == "edge"]
    level_of: dict[tuple[int, int], int] = {
        (v.vertex, v.level): i for i, v in enumerate(model.variables) if v.kind == "level"
    }
    count_rows = [row for row in model.rows if row.name.startswith("c")]
    covered = set()
    groups = []
    for row in count_rows:
        members = [v for v, c in row.coeffs if c != 0]
        groups.append((members, row.rhs))
        covered.update(members)
    free = [v for v in edge_vars if v not in covered]

    # edges incident to each vertex, read off the a-rows
    incident: dict[int, list[int]] = {}
    a_rows = [row for row in model.rows if row.name.startswith("a")]
    for i, row in enumerate(a_rows):
        incident[i] = [v for v, c in row.coeffs if model.variables[v].kind == "edge"]

    for members, rhs in groups:
        if rhs < 0 or rhs > len(members):
            return None, None
    best_value = None
    best_assignment = None
    group_choices = [list(itertools.combinations(members, rhs)) for members, rhs in groups]
    for picks in itertools.product(*group_choices):
        base = set(itertools.chain.from_iterable(picks))
        for extra_bits in range(1 << len(free)):
            chosen = set(base)
            for t, v in enumerate(free):
                if extra_bits >> t & 1:
                    chosen.add(v)
            assignment = [0] * nvars
            for v in chosen:
                assignment[v] = 1
            feasible = True
            for i in range(model.n):
                deg = sum(assignment[v] for v in incident[i])
                level = level_of.get((i, deg))
                if level is None:
                    feasible = False
                    break
                assignment[level] = 1
            if not feasible:
                continue
            for row in model.rows:
                if model.row_value(row, assignment) != row.rhs:
                    feasible = False
                    break
            if not feasible:
                continue
            value = sum(v.objective * z for v, z in zip(model.variables, assignment))
            if best_value is None or value > best_value:
                best_value = value
                best_assignment = tuple(assignment)
    return best_assignment, best_value
