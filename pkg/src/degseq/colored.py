"""Exact solvers for colored separable degree optimization.

``solve_colored_dp`` is the production path: a bottom-up dynamic program over
an elimination forest valid for the host graph.  Every edge joins an
ancestor-descendant pair, so an edge can be charged to its deeper endpoint;
the state after finishing a subtree records how many charged edges went up to
each ancestor on the root path (the degree increments delta) and how many
edges of each color were taken (kappa).  Sibling subtrees combine by max-plus
convolution over (delta, kappa); a vertex's own degree is complete once its
subtree and its edges to ancestors are decided, at which point its vertex
function is added.  A virtual super-root joins multiple trees and pins kappa
to the required counts.

``solve_colored_bruteforce`` is the independent validation oracle: exhaustive
enumeration of the edge subsets meeting the color counts.

Ties inside the DP (equal cell values) always prefer the lexicographically
smallest predecessor pair, so reconstructed witnesses do not depend on the
kernel backend, merge strategy, or thread count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernels
from .errors import CapExceededError, PreconditionError
from .graphs import (
    EdgeColoring,
    EdgeSubset,
    Graph,
    SeparableObjective,
    degree_sequence,
    evaluate_separable,
)
from .treedepth import EliminationForest, find_forest_violation

#: Operand-volume threshold above which a merge goes through the dense kernel.
DENSE_MERGE_THRESHOLD = 4096


@dataclass(frozen=True)
class ColoredSolution:
    feasible: bool
    subset: EdgeSubset | None
    value: int | None
    color_counts: tuple[int, ...] | None
    forest_height: int | None = None


def solve_colored_bruteforce(
    graph: Graph,
    coloring: EdgeColoring | None,
    objective: SeparableObjective,
    cap: int = 20,
) -> ColoredSolution:
    """Exhaustive optimum over all edge subsets meeting the color counts."""
    num = graph.num_edges
    if num > cap:
        raise CapExceededError(f"brute force capped at {cap} edges (got {num})")
    if coloring is None:
        return _bruteforce_all_subsets(graph, objective)
    sizes = coloring.class_sizes()
    for k in range(coloring.p):
        if not 0 <= coloring.counts[k] <= sizes[k]:
            return ColoredSolution(False, None, None, None)
    per_class = [
        list(itertools.combinations(coloring.class_edges(k), coloring.counts[k]))
        for k in range(coloring.p)
    ]
    best_value = None
    best_indices = None
    for picks in itertools.product(*per_class):
        indices = tuple(sorted(itertools.chain.from_iterable(picks)))
        subset = EdgeSubset.from_indices(num, indices)
        value = evaluate_separable(objective, degree_sequence(graph, subset))
        if best_value is None or value > best_value:
            best_value = value
            best_indices = indices
    subset = EdgeSubset.from_indices(num, best_indices)
    return ColoredSolution(True, subset, best_value, coloring.counts)


def _bruteforce_all_subsets(graph: Graph, objective: SeparableObjective) -> ColoredSolution:
    """Gray-code walk over all subsets with O(1) incremental value updates."""
    num = graph.num_edges
    deg = [0] * graph.n
    value = sum(t[0] for t in objective.tables)
    best_value = value
    best_mask = 0
    for step in range(1, 1 << num):
        e = (step & -step).bit_length() - 1
        mask = step ^ (step >> 1)
        add = mask >> e & 1
        i, j = graph.edges[e]
        for v in (i, j):
            old = deg[v]
            new = old + 1 if add else old - 1
            value += objective.tables[v][new] - objective.tables[v][old]
            deg[v] = new
        if value > best_value:
            best_value = value
            best_mask = mask
    subset = EdgeSubset.from_indices(num, [e for e in range(num) if best_mask >> e & 1])
    return ColoredSolution(True, subset, best_value, ())


def _merge_cells(acc: dict, other: dict, caps: tuple[int, ...], dense_ok: bool):
    """Max-plus merge of two cell tables (componentwise index sums, capped).

    Returns (table, back) where back maps each output cell to its winning
    (acc_cell, other_cell) pair; ties prefer the lexicographically smallest
    pair in both the sparse and the dense implementation.
    """
    if not acc or not other:
        return {}, {}
    if dense_ok and len(acc) * len(other) >= DENSE_MERGE_THRESHOLD:
        return _merge_dense(acc, other, caps)
    out: dict[tuple, int] = {}
    back: dict[tuple, tuple] = {}
    for cell_a, va in acc.items():
        for cell_b in other:
            key = tuple(x + y for x, y in zip(cell_a, cell_b))
            if any(k > c for k, c in zip(key, caps)):
                continue
            val = va + other[cell_b]
            cur = out.get(key)
            if cur is None or val > cur or (val == cur and (cell_a, cell_b) < back[key]):
                out[key] = val
                back[key] = (cell_a, cell_b)
    return out, back


def _dense_of(cells: dict) -> tuple[list, tuple[int, ...]]:
    ndim = len(next(iter(cells)))
    shape = tuple(max(c[d] for c in cells) + 1 for d in range(ndim))
    size = 1
    for s in shape:
        size *= s
    vals: list[int | None] = [None] * size
    for cell, v in cells.items():
        flat = 0
        for d in range(ndim):
            flat = flat * shape[d] + cell[d]
        vals[flat] = v
    return vals, shape


def _unravel(flat: int, shape: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for s in reversed(shape):
        out.append(flat % s)
        flat //= s
    return tuple(reversed(out))


def _merge_dense(acc: dict, other: dict, caps: tuple[int, ...]):
    a_vals, a_shape = _dense_of(acc)
    b_vals, b_shape = _dense_of(other)
    sizes = tuple(c + 1 for c in caps)  # cap is the max index, kernel wants sizes
    out_vals, back_a, back_b, out_shape = _kernels.maxplus_convolve(
        a_vals, a_shape, b_vals, b_shape, sizes
    )
    out: dict[tuple, int] = {}
    back: dict[tuple, tuple] = {}
    for flat, v in enumerate(out_vals):
        if v is None:
            continue
        cell = _unravel(flat, out_shape)
        out[cell] = v
        back[cell] = (_unravel(back_a[flat], a_shape), _unravel(back_b[flat], b_shape))
    return out, back


def solve_colored_dp(
    graph: Graph,
    forest: EliminationForest,
    coloring: EdgeColoring | None,
    objective: SeparableObjective,
    threads: int = 1,
) -> ColoredSolution:
    """Globally optimal colored separable optimization over a valid forest."""
    violation = find_forest_violation(graph, forest)
    if violation is not None:
        i, j = violation
        raise PreconditionError(
            f"forest is not valid for the graph: edge ({i + 1}, {j + 1}) "
            "does not join an ancestor-descendant pair"
        )
    if len(objective.tables) != graph.n:
        raise PreconditionError("objective does not match the host vertex count")
    degs = graph.host_degrees()
    for i, table in enumerate(objective.tables):
        if len(table) != degs[i] + 1:
            raise PreconditionError(f"table of vertex {i + 1} does not match its degree domain")

    p = coloring.p if coloring is not None else 0
    counts = coloring.counts if coloring is not None else ()
    colors = coloring.colors if coloring is not None else (0,) * graph.num_edges

    n = graph.n
    depth = forest.depths()
    children = forest.children()
    # root path of each vertex, parent first
    path: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        w = forest.parent[v]
        while w is not None:
            path[v].append(w)
            w = forest.parent[w]
    pos_in_path = [{a: idx for idx, a in enumerate(path[v])} for v in range(n)]

    # charge each edge to its deeper endpoint
    anchored: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # (edge, ancestor)
    for e, (i, j) in enumerate(graph.edges):
        lo, hi = (i, j) if depth[i] > depth[j] else (j, i)
        anchored[lo].append((e, hi))

    # per vertex: every subset of its anchored edges with its state increments
    choice_meta: list[list[tuple[tuple[int, ...], int, tuple[int, ...], tuple[int, ...]]]] = []
    for v in range(n):
        h = len(path[v])
        metas = []
        edges_here = anchored[v]
        for mask in range(1 << len(edges_here)):
            picked = []
            dinc = [0] * h
            kinc = [0] * p
            for t, (e, anc) in enumerate(edges_here):
                if mask >> t & 1:
                    picked.append(e)
                    dinc[pos_in_path[v][anc]] += 1
                    if p:
                        kinc[colors[e]] += 1
            metas.append((tuple(picked), len(picked), tuple(dinc), tuple(kinc)))
        choice_meta.append(metas)

    dense_ok = _kernels.backend_name() == "c"
    tables: list[dict | None] = [None] * n
    child_backs: list[list[tuple[int, dict]]] = [[] for _ in range(n)]
    fin_backs: list[dict] = [{} for _ in range(n)]

    def process_tree(root: int) -> None:
        # iterative post-order over the tree below root
        stack = [(root, False)]
        order = []
        while stack:
            v, done = stack.pop()
            if done:
                order.append(v)
                continue
            stack.append((v, True))
            for c in children[v]:
                stack.append((c, False))
        for v in order:
            h = len(path[v])
            caps = (degs[v],) + tuple(degs[a] for a in path[v]) + counts
            acc: dict[tuple, int] = {(0,) * (1 + h + p): 0}
            for c in children[v]:
                acc, back = _merge_cells(acc, tables[c], caps, dense_ok)
                child_backs[v].append((c, back))
            final: dict[tuple, int] = {}
            fback: dict[tuple, tuple] = {}
            for cell in sorted(acc):
                val = acc[cell]
                t = cell[0]
                delta = cell[1 : 1 + h]
                kappa = cell[1 + h :]
                for s_idx, (_, size, dinc, kinc) in enumerate(choice_meta[v]):
                    d_v = t + size
                    if d_v > degs[v]:
                        continue
                    kap = tuple(a + b for a, b in zip(kappa, kinc))
                    if any(kap[k] > counts[k] for k in range(p)):
                        continue
                    key = tuple(a + b for a, b in zip(delta, dinc)) + kap
                    value = val + objective.tables[v][d_v]
                    cur = final.get(key)
                    if cur is None or value > cur or (value == cur and (cell, s_idx) < fback[key]):
                        final[key] = value
                        fback[key] = (cell, s_idx)
            tables[v] = final
            fin_backs[v] = fback

    roots = forest.roots()
    if threads > 1 and len(roots) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(process_tree, roots))
    else:
        for r in roots:
            process_tree(r)

    # virtual super-root: combine the trees over kappa and pin the counts
    acc: dict[tuple, int] = {(0,) * p: 0}
    super_backs: list[tuple[int, dict]] = []
    for r in roots:
        acc, back = _merge_cells(acc, tables[r], counts, dense_ok)
        super_backs.append((r, back))

    target = tuple(counts)
    if target not in acc:
        return ColoredSolution(False, None, None, None, forest_height=forest.height)
    best_value = acc[target]

    # walk the back pointers to reconstruct the witness
    chosen: list[int] = []
    todo: list[tuple[int, tuple]] = []
    cell = target
    for r, back in reversed(super_backs):
        prev, root_cell = back[cell]
        todo.append((r, root_cell))
        cell = prev
    while todo:
        v, cell = todo.pop()
        acc_cell, s_idx = fin_backs[v][cell]
        chosen.extend(choice_meta[v][s_idx][0])
        cur = acc_cell
        for c, back in reversed(child_backs[v]):
            prev, child_cell = back[cur]
            todo.append((c, child_cell))
            cur = prev

    subset = EdgeSubset.from_indices(graph.num_edges, chosen)
    got_counts = coloring.count_selected(subset) if coloring is not None else ()
    value_check = evaluate_separable(objective, degree_sequence(graph, subset))
    assert value_check == best_value, "DP witness does not re-evaluate to its value"
    assert got_counts == target, "DP witness violates the color counts"
    return ColoredSolution(
        feasible=True,
        subset=subset,
        value=best_value,
        color_counts=got_counts,
        forest_height=forest.height,
    )
