"""Tree-depth: elimination forests, exact computation, a deterministic
heuristic, and the constraint tree certifying bounded tree-depth of the
colored IP's constraint interaction graph.

The height of a rooted forest counts vertices on a longest root-to-leaf
path.  A forest is valid for a graph when every edge joins an
ancestor-descendant pair; the tree-depth is the smallest height of a valid
forest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import CapExceededError, InvalidInstanceError, ParseError, PreconditionError
from .graphs import Graph

if TYPE_CHECKING:
    from .ip import IpModel


@dataclass(frozen=True)
class EliminationForest:
    """A rooted forest given by a parent index per vertex (None for roots)."""

    parent: tuple[int | None, ...]

    def __post_init__(self):
        n = len(self.parent)
        for v, par in enumerate(self.parent):
            if par is not None and not 0 <= par < n:
                raise InvalidInstanceError(f"parent of vertex {v} out of range")
            if par == v:
                raise InvalidInstanceError(f"vertex {v} is its own parent")
        # acyclicity: walking up must terminate for every start
        state = [0] * n  # 0 unseen, 1 on stack, 2 done
        for start in range(n):
            path = []
            v = start
            while v is not None and state[v] == 0:
                state[v] = 1
                path.append(v)
                v = self.parent[v]
            if v is not None and state[v] == 1:
                raise InvalidInstanceError(f"parent links contain a cycle through vertex {v}")
            for w in path:
                state[w] = 2

    @property
    def n(self) -> int:
        return len(self.parent)

    def roots(self) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parent) if p is None)

    def depths(self) -> tuple[int, ...]:
        """Number of vertices on the path from the root to each vertex."""
        depth = [0] * self.n
        for start in range(self.n):
            chain = []
            v = start
            while v is not None and depth[v] == 0:
                chain.append(v)
                v = self.parent[v]
            base = depth[v] if v is not None else 0
            for w in reversed(chain):
                base += 1
                depth[w] = base
        return tuple(depth)

    @property
    def height(self) -> int:
        return max(self.depths(), default=0)

    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)


def find_forest_violation(graph: Graph, forest: EliminationForest):
    """First edge of the graph that does not join an ancestor-descendant pair."""
    if forest.n != graph.n:
        raise PreconditionError(
            f"forest covers {forest.n} vertices but the graph has {graph.n}"
        )
    depth = forest.depths()
    for i, j in graph.edges:
        lo, hi = (i, j) if depth[i] <= depth[j] else (j, i)
        v = hi
        while depth[v] > depth[lo]:
            v = forest.parent[v]
        if v != lo:
            return (i, j)
    return None


def validate_forest(graph: Graph, forest: EliminationForest) -> bool:
    """True iff every edge joins an ancestor-descendant pair of the forest."""
    return find_forest_violation(graph, forest) is None


def _component_masks(mask: int, adj: list[int]) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            grow = adj[v] & rest & ~comp
            comp |= grow
            frontier |= grow
        comps.append(comp)
        rest &= ~comp
    return comps


def treedepth_exact(graph: Graph, cap: int = 15) -> tuple[int, EliminationForest]:
    """Exact tree-depth with an optimal certificate.

    Tree-depth here is the smallest height of a single rooted tree on the
    whole vertex set that is valid for the graph (so a perfect matching on 6
    vertices has tree-depth 3, not 2: the extra components must hang below
    the root).  Computed by td(G) = 1 + min_v max over components C of G - v
    of td(C), memoized on connected vertex subsets.
    """
    n = graph.n
    if n > cap:
        raise CapExceededError(
            f"exact tree-depth is capped at {cap} vertices (got {n}); "
            "use heuristic_forest or supply a forest"
        )
    if n == 0:
        return 0, EliminationForest(())
    adj = [0] * n
    for i, j in graph.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    memo: dict[int, tuple[int, int]] = {}

    def best_root(mask: int) -> tuple[int, int]:
        """(height, root) of an optimal single tree on ``mask`` (any subset)."""
        best_depth = n + 1
        root = -1
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            sub = mask & ~(1 << v)
            depth = 1 + max((td_connected(c) for c in _component_masks(sub, adj)), default=0)
            if depth < best_depth:
                best_depth = depth
                root = v
        return best_depth, root

    def td_connected(mask: int) -> int:
        if mask & (mask - 1) == 0:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit[0]
        result = best_root(mask)
        memo[mask] = result
        return result[0]

    parents: list[int | None] = [None] * n

    def build(mask: int, parent: int | None) -> None:
        for comp in _component_masks(mask, adj):
            if comp & (comp - 1) == 0:
                root = comp.bit_length() - 1
            else:
                root = memo[comp][1]
            parents[root] = parent
            build(comp & ~(1 << root), root)

    full = (1 << n) - 1
    depth, root = best_root(full)
    parents[root] = None
    build(full & ~(1 << root), root)
    forest = EliminationForest(tuple(parents))
    assert forest.height == depth and validate_forest(graph, forest)
    assert len(forest.roots()) == 1
    return depth, forest


def heuristic_forest(graph: Graph) -> EliminationForest:
    """Valid certificate from a minimum-degree elimination ordering.

    Eliminating a vertex adds fill edges among its remaining neighbors; the
    elimination tree of the filled graph (parent = the earliest-eliminated
    later neighbor) is valid for the input.  When the graph has any edge, the
    per-component trees are linked into a single tree (other roots attached
    below the root of the tallest tree) so the height is an upper bound on
    the single-tree tree-depth; an edgeless graph keeps its singleton roots.
    Height carries no optimality claim.  Ties break on vertex index, so the
    output is deterministic.
    """
    n = graph.n
    adj = [set(a) for a in graph.adjacency()]
    alive = set(range(n))
    position = [0] * n
    higher: list[set[int]] = [set() for _ in range(n)]
    for step in range(n):
        v = min(alive, key=lambda w: (len(adj[w]), w))
        position[v] = step
        higher[v] = set(adj[v])
        alive.remove(v)
        for w in adj[v]:
            adj[w].discard(v)
        for w in adj[v]:
            for x in adj[v]:
                if w < x:
                    adj[w].add(x)
                    adj[x].add(w)
        adj[v] = set()
    parent: list[int | None] = [None] * n
    for v in range(n):
        if higher[v]:
            parent[v] = min(higher[v], key=lambda w: position[w])
    forest = EliminationForest(tuple(parent))
    if graph.edges and len(forest.roots()) > 1:
        depths = forest.depths()
        subtree_height = {r: 0 for r in forest.roots()}
        top = {}
        for v in range(n):
            w = v
            while forest.parent[w] is not None:
                w = forest.parent[w]
            top[v] = w
        for v in range(n):
            r = top[v]
            subtree_height[r] = max(subtree_height[r], depths[v])
        main = min(forest.roots(), key=lambda r: (-subtree_height[r], r))
        linked = list(forest.parent)
        for r in forest.roots():
            if r != main:
                linked[r] = main
        forest = EliminationForest(tuple(linked))
    assert validate_forest(graph, forest)
    return forest


@dataclass(frozen=True)
class ConstraintTree:
    """Rooted tree over the IP's constraint set {a_1..a_n, b_1..b_n, c_1..c_p}.

    Vertex layout in the underlying forest: a_i at i, b_i at n+i, c_k at 2n+k.
    """

    forest: EliminationForest
    n: int
    p: int

    def a_index(self, i: int) -> int:
        return i

    def b_index(self, i: int) -> int:
        return self.n + i

    def c_index(self, k: int) -> int:
        return 2 * self.n + k

    @property
    def height(self) -> int:
        return self.forest.height


def build_constraint_tree(tree: EliminationForest, n: int, p: int) -> ConstraintTree:
    """Lift a forest valid for the host graph to the constraint set: chain
    c_1 - ... - c_p on top, every root of the host forest attached to c_p,
    the host edges among the a's, and each b_i hanging below its a_i.

    Height is at most p + height(tree) + 1.  With p = 0 (no count rows) the
    c-chain is empty and the host roots stay roots.
    """
    if tree.n != n:
        raise PreconditionError(f"forest covers {tree.n} vertices, expected {n}")
    if p < 0:
        raise PreconditionError("p must be nonnegative")
    parent: list[int | None] = [None] * (2 * n + p)
    for i in range(n):
        if tree.parent[i] is not None:
            parent[i] = tree.parent[i]
        elif p >= 1:
            parent[i] = 2 * n + (p - 1)  # attach each host root below c_p
        parent[n + i] = i
    for k in range(1, p):
        parent[2 * n + k] = 2 * n + k - 1
    result = ConstraintTree(EliminationForest(tuple(parent)), n, p)
    assert result.height <= p + tree.height + 1
    return result


def constraint_graph(model: "IpModel") -> Graph:
    """Graph on the model's constraint rows; two rows are adjacent iff some
    variable has a nonzero coefficient in both."""
    var_rows: dict[int, list[int]] = {}
    for r, row in enumerate(model.rows):
        for var_idx, coef in row.coeffs:
            if coef != 0:
                var_rows.setdefault(var_idx, []).append(r)
    edges = set()
    for rows in var_rows.values():
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                edges.add((rows[a], rows[b]))
    return Graph.from_pairs(len(model.rows), sorted(edges))


def parse_forest(text: str, n: int) -> EliminationForest:
    """Forest file: JSON object with field ``parent``, an array of length n
    holding the 1-based parent of each vertex (0 for roots)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if isinstance(doc, dict):
        if "parent" not in doc:
            raise InvalidInstanceError("forest document needs field 'parent'")
        raw = doc["parent"]
    else:
        raw = doc
    if not isinstance(raw, list) or len(raw) != n:
        raise InvalidInstanceError(f"forest parent array must have length n={n}")
    parent: list[int | None] = []
    for v, p in enumerate(raw):
        if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p <= n:
            raise InvalidInstanceError(f"parent of vertex {v + 1} must be an integer in 0..{n}")
        parent.append(None if p == 0 else p - 1)
    return EliminationForest(tuple(parent))


def serialize_forest(forest: EliminationForest) -> str:
    return json.dumps({"parent": [0 if p is None else p + 1 for p in forest.parent]})
