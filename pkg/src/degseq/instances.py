"""Instance documents: a single JSON object describing a host graph plus
optional coloring, vertex functions, edge weights and multi-criteria data.

File convention: vertices and colors are 1-based in documents and 0-based in
memory.  ``serialize_instance`` always emits the canonical form (sorted edge
list, builtin vertex functions expanded to explicit tables), so
parse(serialize(x)) == x and serialize(parse(text)) is idempotent.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any

from .errors import InvalidInstanceError, ParseError
from .graphs import (
    EdgeColoring,
    Graph,
    MaxAffine,
    MultiCriteriaObjective,
    SeparableObjective,
    SumSquaredAffine,
    WeightedInstance,
    table_indicator,
    table_interval,
    table_neg_square_shift,
    table_square,
)


@dataclass(frozen=True)
class Instance:
    graph: Graph
    coloring: EdgeColoring | None = None
    vertex_functions: SeparableObjective | None = None
    weights: tuple[int, ...] | None = None
    criteria: MultiCriteriaObjective | None = None

    def as_weighted(self) -> WeightedInstance:
        """View this instance as a weighted problem (tables become callbacks)."""
        if self.weights is None or self.vertex_functions is None:
            raise InvalidInstanceError("weighted view needs both weights and vertex_functions")

        def lookup(table):
            def fn(z, _t=table):
                if not 0 <= z < len(_t):
                    raise InvalidInstanceError(f"weighted degree {z} outside table domain")
                return _t[z]

            return fn

        return WeightedInstance(
            graph=self.graph,
            weights=self.weights,
            vertex_functions=tuple(lookup(t) for t in self.vertex_functions.tables),
        )


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidInstanceError(message)


def _int_list(value: Any, what: str) -> list[int]:
    _require(isinstance(value, list), f"{what} must be an array")
    out = []
    for v in value:
        _require(isinstance(v, int) and not isinstance(v, bool), f"{what} must contain integers")
        out.append(v)
    return out


def _expand_function(spec: Any, dmax: int, vertex: int) -> tuple[int, ...]:
    if isinstance(spec, list):
        return tuple(_int_list(spec, f"vertex function {vertex + 1}"))
    _require(isinstance(spec, dict) and "kind" in spec, f"vertex function {vertex + 1} must be a table or a named builtin")
    kind = spec["kind"]
    if kind == "square":
        return table_square(dmax)
    if kind == "neg_square_shift":
        _require("c" in spec, "neg_square_shift needs field c")
        return table_neg_square_shift(dmax, int(spec["c"]))
    if kind == "interval":
        _require("l" in spec and "u" in spec, "interval needs fields l and u")
        return table_interval(dmax, int(spec["l"]), int(spec["u"]))
    if kind == "indicator":
        _require("B" in spec, "indicator needs field B")
        return table_indicator(dmax, _int_list(spec["B"], "indicator set B"))
    raise InvalidInstanceError(f"unknown vertex function kind {kind!r}")


def _parse_criteria(spec: Any, n: int) -> MultiCriteriaObjective:
    _require(isinstance(spec, dict), "criteria must be an object")
    _require("w" in spec and "f" in spec, "criteria needs fields w and f")
    rows = spec["w"]
    _require(isinstance(rows, list) and rows, "criteria.w must be a nonempty matrix")
    weights = []
    for row in rows:
        vals = _int_list(row, "criteria.w row")
        _require(len(vals) == n, f"criteria.w rows must have length n={n}")
        weights.append(tuple(vals))
    fspec = spec["f"]
    _require(isinstance(fspec, dict) and "kind" in fspec, "criteria.f must name a builtin kind")
    kind = fspec["kind"]
    _require("terms" in fspec and isinstance(fspec["terms"], list) and fspec["terms"],
             "criteria.f needs a nonempty terms array")
    r = len(weights)
    terms = []
    for term in fspec["terms"]:
        _require(isinstance(term, list) and len(term) == 2, "criteria.f terms must be [alpha, beta] pairs")
        alpha = _int_list(term[0], "criteria.f alpha")
        _require(len(alpha) == r, f"criteria.f alpha vectors must have length r={r}")
        _require(isinstance(term[1], int) and not isinstance(term[1], bool), "criteria.f beta must be an integer")
        terms.append((tuple(alpha), term[1]))
    if kind == "max_affine":
        balance = MaxAffine(tuple(terms))
    elif kind == "sum_sq_affine":
        balance = SumSquaredAffine(tuple(terms))
    else:
        raise InvalidInstanceError(f"unknown criteria.f kind {kind!r}")
    return MultiCriteriaObjective(weights=tuple(weights), balance=balance)


def parse_instance(text: str) -> Instance:
    """Parse and validate an instance document; raises ParseError for syntax
    problems (with line/column) and InvalidInstanceError for invariant
    violations."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _require(isinstance(doc, dict), "instance document must be a JSON object")
    known = {"n", "edges", "colors", "m", "vertex_functions", "weights", "criteria"}
    for key in doc:
        _require(key in known, f"unknown field {key!r}")
    _require("n" in doc and "edges" in doc, "fields n and edges are required")
    n = doc["n"]
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 0, "n must be a nonnegative integer")

    raw_edges = doc["edges"]
    _require(isinstance(raw_edges, list), "edges must be an array")
    pairs = []
    for idx, pair in enumerate(raw_edges):
        vals = _int_list(pair, f"edge {idx}")
        _require(len(vals) == 2, f"edge {idx} must be a pair")
        i, j = vals
        _require(1 <= i <= n and 1 <= j <= n, f"edge {idx} endpoint outside 1..{n}")
        _require(i != j, f"edge {idx} is a loop")
        a, b = (i - 1, j - 1) if i < j else (j - 1, i - 1)
        pairs.append((a, b))

    # Edge-positional fields travel with their edge through canonical sorting.
    order = sorted(range(len(pairs)), key=lambda e: pairs[e])
    graph = Graph.from_pairs(n, pairs)

    coloring = None
    if "colors" in doc or "m" in doc:
        _require("colors" in doc and "m" in doc, "colors and m must appear together")
        colors = _int_list(doc["colors"], "colors")
        _require(len(colors) == graph.num_edges, "colors must have one entry per edge")
        counts = _int_list(doc["m"], "m")
        p = len(counts)
        _require(p >= 1, "m must list at least one color count")
        _require(all(1 <= c <= p for c in colors), f"edge colors must lie in 1..{p}")
        coloring = EdgeColoring(
            p=p,
            colors=tuple(colors[e] - 1 for e in order),
            counts=tuple(counts),
        )

    weights = None
    if "weights" in doc:
        w = _int_list(doc["weights"], "weights")
        _require(len(w) == graph.num_edges, "weights must have one entry per edge")
        _require(all(v >= 0 for v in w), "file weights must be nonnegative (general weights are API-only)")
        weights = tuple(w[e] for e in order)

    vertex_functions = None
    if "vertex_functions" in doc:
        specs = doc["vertex_functions"]
        _require(isinstance(specs, list) and len(specs) == n, "vertex_functions must list one entry per vertex")
        if weights is None:
            dmaxes = graph.host_degrees()
        else:
            dmaxes = [0] * n
            for e, (i, j) in enumerate(graph.edges):
                dmaxes[i] += weights[e]
                dmaxes[j] += weights[e]
        tables = [_expand_function(spec, dmaxes[i], i) for i, spec in enumerate(specs)]
        for i, table in enumerate(tables):
            _require(
                len(table) == dmaxes[i] + 1,
                f"vertex {i + 1}: table has {len(table)} entries, domain 0..{dmaxes[i]} "
                f"needs {dmaxes[i] + 1}",
            )
        vertex_functions = SeparableObjective(tuple(tables))

    criteria = _parse_criteria(doc["criteria"], n) if "criteria" in doc else None

    return Instance(
        graph=graph,
        coloring=coloring,
        vertex_functions=vertex_functions,
        weights=weights,
        criteria=criteria,
    )


def serialize_instance(instance: Instance) -> str:
    """Canonical single-document JSON text for an instance."""
    doc: dict[str, Any] = {
        "n": instance.graph.n,
        "edges": [[i + 1, j + 1] for i, j in instance.graph.edges],
    }
    if instance.coloring is not None:
        doc["colors"] = [c + 1 for c in instance.coloring.colors]
        doc["m"] = list(instance.coloring.counts)
    if instance.vertex_functions is not None:
        doc["vertex_functions"] = [list(t) for t in instance.vertex_functions.tables]
    if instance.weights is not None:
        doc["weights"] = list(instance.weights)
    if instance.criteria is not None:
        balance = instance.criteria.balance
        if isinstance(balance, MaxAffine):
            kind = "max_affine"
        elif isinstance(balance, SumSquaredAffine):
            kind = "sum_sq_affine"
        else:
            raise InvalidInstanceError("callback criteria cannot be serialized")
        doc["criteria"] = {
            "w": [list(row) for row in instance.criteria.weights],
            "f": {"kind": kind, "terms": [[list(alpha), beta] for alpha, beta in balance.terms]},
        }
    return json.dumps(doc, indent=1)


def instance_digest(instance: Instance) -> str:
    """sha256 of the canonical serialization; used in run reports."""
    return hashlib.sha256(serialize_instance(instance).encode()).hexdigest()
