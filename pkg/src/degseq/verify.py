"""Oracle-equivalence and property suites.

Each suite runs a battery of checks against independent brute-force oracles
and returns per-check results.  The CLI's ``verify`` command runs them at desk
scale; the acceptance tests call the same runners with the full corpus sizes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .colored import solve_colored_bruteforce, solve_colored_dp
from .gadgets import (
    FactorSpec,
    LuFactorSpec,
    bipartite_concave_convex_instance,
    cubic_subgraph_instance,
    exact_matching_instance,
    general_factor_instance,
    lu_factor_objective,
    partition_gadget,
    subdivision_hardness_instance,
    weighted_bruteforce,
)
from .graphs import (
    EdgeColoring,
    EdgeSubset,
    Graph,
    MultiCriteriaObjective,
    SeparableObjective,
    complete_graph,
    degree_sequence,
    evaluate_separable,
    path_graph,
    perfect_matching_graph,
    star_graph,
)
from .instances import Instance, serialize_instance
from .ip import (
    build_colored_ip,
    ip_assignment_to_subgraph,
    solve_ip_bruteforce,
    subgraph_to_ip_assignment,
)
from .multicriteria import ChamberPipeline
from .randgen import (
    random_bounded_td_instance,
    random_coloring,
    random_graph_with_edge_count,
    random_max_affine,
    random_sum_sq_affine,
    random_tables,
    random_weight_rows,
    rng_of,
)
from .treedepth import (
    build_constraint_tree,
    constraint_graph,
    heuristic_forest,
    treedepth_exact,
    validate_forest,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    counterexample: str | None = None


@dataclass
class Suite:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "", counterexample: str | None = None):
        self.checks.append(CheckResult(name, bool(ok), detail, counterexample))

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


# ---------------------------------------------------------------------------
# independent oracles

def criteria_points_by_size(graph: Graph, weights) -> list[set[tuple[int, ...]]]:
    """For every subset size m, the set of criteria points (w_1 d(F), ...)
    over all m-edge subsets, by a Gray-code walk over all subsets."""
    r = len(weights)
    num = graph.num_edges
    edge_vec = [tuple(w[i] + w[j] for w in weights) for i, j in graph.edges]
    buckets: list[set[tuple[int, ...]]] = [set() for _ in range(num + 1)]
    point = [0] * r
    size = 0
    buckets[0].add(tuple(point))
    for step in range(1, 1 << num):
        e = (step & -step).bit_length() - 1
        mask = step ^ (step >> 1)
        sign = 1 if mask >> e & 1 else -1
        for k in range(r):
            point[k] += sign * edge_vec[e][k]
        size += sign
        buckets[size].add(tuple(point))
    return buckets


def hull_vertices_2d(points) -> list[tuple[int, int]]:
    """Extreme points of the convex hull of integer 2D points (monotone
    chain with exact cross products; collinear points are dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


_ISO_CACHE: dict[int, list[Graph]] = {}


def connected_graphs_up_to_iso(max_n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on
    1..max_n vertices (1, 1, 2, 6, 21 classes for n = 1..5)."""
    if max_n in _ISO_CACHE:
        return _ISO_CACHE[max_n]
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        index = {e: k for k, e in enumerate(pairs)}
        perms = list(itertools.permutations(range(n)))
        seen = set()
        for bits in range(1 << len(pairs)):
            chosen = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
            if not _connected(n, chosen):
                continue
            canon = min(
                sum(
                    1 << index[tuple(sorted((perm[i], perm[j])))]
                    for i, j in chosen
                )
                for perm in perms
            )
            if canon not in seen:
                seen.add(canon)
                out.append(Graph.from_pairs(n, chosen))
    _ISO_CACHE[max_n] = out
    return out


def _connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    reach = {0}
    frontier = [0]
    adj: dict[int, list[int]] = {}
    for i, j in edges:
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    while frontier:
        v = frontier.pop()
        for w in adj.get(v, ()):
            if w not in reach:
                reach.add(w)
                frontier.append(w)
    return len(reach) == n


def min_tree_height_bruteforce(graph: Graph) -> int:
    """Independent tree-depth oracle: minimum, over every vertex ordering, of
    the height of the single tree derived from it (the first vertex roots the
    whole graph, then each component of the remainder is rooted recursively at
    its own first vertex).  Shares no code or memoization with the production
    recursion."""
    n = graph.n
    if n == 0:
        return 0
    adj = [0] * n
    for i, j in graph.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    def components(mask: int) -> list[int]:
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

    best = n + 1
    for sigma in itertools.permutations(range(n)):
        pos = {v: k for k, v in enumerate(sigma)}

        def height(mask: int) -> int:
            if mask == 0:
                return 0
            root = min((v for v in range(n) if mask >> v & 1), key=pos.__getitem__)
            sub = mask & ~(1 << root)
            return 1 + max((height(c) for c in components(sub)), default=0)

        best = min(best, height((1 << n) - 1))
    return best


# ---------------------------------------------------------------------------
# multicriteria suite

def run_multicriteria_suite(
    graphs,
    draws_per_graph: int,
    seed: int,
    rs=(1, 2, 3),
    max_terms_affine: int = 3,
    max_terms_sq: int = 2,
) -> Suite:
    """Criteria 1-3 in one pass: prescribed exactness against subset brute
    force, unprescribed consistency, and r=2 hull completeness."""
    rng = rng_of(seed)
    suite = Suite()
    exact_checked = unpres_checked = hull_checked = 0
    for graph in graphs:
        for draw in range(draws_per_graph):
            r = rs[draw % len(rs)]
            weights = random_weight_rows(rng, graph.n, r)
            balances = [
                random_max_affine(rng, r, max_terms_affine),
                random_sum_sq_affine(rng, r, max_terms_sq),
            ]
            pipeline = ChamberPipeline(graph, weights)
            unpres = ChamberPipeline(graph, weights, prescribed=False)
            buckets = criteria_points_by_size(graph, weights)
            for balance in balances:
                best_over_m = None
                for m in range(graph.num_edges + 1):
                    got = pipeline.solve(m, balance).value
                    want = max(balance(p) for p in buckets[m])
                    exact_checked += 1
                    if got != want:
                        suite.add(
                            "prescribed-exactness",
                            False,
                            f"m={m} r={r} solver={got} brute={want}",
                            counterexample=serialize_instance(
                                Instance(graph=graph, criteria=MultiCriteriaObjective(weights, balance))
                            ),
                        )
                        return suite
                    if best_over_m is None or got > best_over_m:
                        best_over_m = got
                got_unpres = unpres.solve(None, balance).value
                unpres_checked += 1
                if got_unpres != best_over_m:
                    suite.add(
                        "unprescribed-consistency",
                        False,
                        f"r={r} unprescribed={got_unpres} max over m={best_over_m}",
                        counterexample=serialize_instance(
                            Instance(graph=graph, criteria=MultiCriteriaObjective(weights, balance))
                        ),
                    )
                    return suite
            if r == 2:
                for m in range(graph.num_edges + 1):
                    attained = set(pipeline.oracle_points(m))
                    missing = [v for v in hull_vertices_2d(buckets[m]) if v not in attained]
                    hull_checked += 1
                    if missing:
                        suite.add(
                            "hull-completeness",
                            False,
                            f"m={m} hull vertices not attained: {missing}",
                            counterexample=serialize_instance(Instance(graph=graph)),
                        )
                        return suite
    suite.add("prescribed-exactness", True, f"{exact_checked} (graph, weights, f, m) combinations")
    suite.add("unprescribed-consistency", True, f"{unpres_checked} (graph, weights, f) combinations")
    suite.add("hull-completeness", True, f"{hull_checked} (graph, weights, m) combinations (r=2)")
    return suite


def multicriteria_corpus(seed: int, num_random: int, max_n: int = 8, max_edges: int = 10):
    """All connected isomorphism classes with n <= 5 plus seeded random graphs."""
    rng = rng_of(seed)
    graphs = list(connected_graphs_up_to_iso(5))
    while len(graphs) < 31 + num_random:
        n = rng.randint(6, max_n)
        num = rng.randint(n - 1, max_edges)
        graphs.append(random_graph_with_edge_count(rng, n, num))
    return graphs


# ---------------------------------------------------------------------------
# colored suite

def run_colored_suite(
    num_instances: int,
    seed: int,
    n_max: int = 12,
    height: int = 4,
    p_max: int = 3,
    max_edges: int = 14,
    heuristic_every: int = 5,
) -> Suite:
    """Criterion 6: DP against exhaustive enumeration on random bounded
    tree-depth instances; every few instances also re-solve over the
    min-degree heuristic forest instead of the shipped certificate."""
    rng = rng_of(seed)
    suite = Suite()
    agreements = 0
    for t in range(num_instances):
        n = rng.randint(2, n_max)
        p = rng.randint(0, p_max)
        instance, forest = random_bounded_td_instance(
            rng, n, height, p, edge_prob=rng.uniform(0.3, 0.9), max_edges=max_edges
        )
        brute = solve_colored_bruteforce(instance.graph, instance.coloring, instance.vertex_functions)
        dp = solve_colored_dp(instance.graph, forest, instance.coloring, instance.vertex_functions)
        ok = dp.feasible == brute.feasible and dp.value == brute.value
        if ok and t % heuristic_every == 0:
            alt = solve_colored_dp(
                instance.graph,
                heuristic_forest(instance.graph),
                instance.coloring,
                instance.vertex_functions,
            )
            ok = alt.feasible == brute.feasible and alt.value == brute.value
        if not ok:
            suite.add(
                "dp-vs-bruteforce",
                False,
                f"dp={dp.value} (feasible={dp.feasible}) brute={brute.value} (feasible={brute.feasible})",
                counterexample=serialize_instance(instance),
            )
            return suite
        agreements += 1
    suite.add("dp-vs-bruteforce", True, f"{agreements} random bounded-tree-depth instances")
    return suite


# ---------------------------------------------------------------------------
# IP suite

def ip_corpus():
    """Graphs with at most 6 edges: all connected classes with n <= 5
    filtered by edge count, plus named shapes."""
    graphs = [g for g in connected_graphs_up_to_iso(5) if g.num_edges <= 6]
    graphs += [complete_graph(4), star_graph(3), perfect_matching_graph(3), Graph(3, ())]
    return graphs


def run_ip_suite(
    seed: int,
    graphs=None,
    colorings_per_graph: int = 3,
    single_color_sweep: bool = False,
) -> Suite:
    """Criteria 4-5: structural invariants of every generated model, validity
    of the lifted constraint tree, and IP <-> subgraph equivalence.

    With ``single_color_sweep`` every graph is additionally checked with one
    color class and every edge budget m = 0..|E|.
    """
    rng = rng_of(seed)
    suite = Suite()
    if graphs is None:
        graphs = ip_corpus()
    structural = equivalence = maps = trees = 0
    for graph in graphs:
        cases = [None] * colorings_per_graph
        if single_color_sweep and graph.num_edges:
            cases += [
                EdgeColoring(p=1, colors=(0,) * graph.num_edges, counts=(m,))
                for m in range(graph.num_edges + 1)
            ]
        for case in cases:
            if case is None:
                p = rng.randint(0, 2)
                coloring = random_coloring(rng, graph, p) if p >= 1 else None
            else:
                coloring = case
            objective = random_tables(rng, graph, -5, 5)
            instance = Instance(graph=graph, coloring=coloring, vertex_functions=objective)
            model = build_colored_ip(graph, coloring, objective)

            ok = (
                len(model.variables) == graph.n + 3 * graph.num_edges
                and len(model.rows) == 2 * graph.n + (coloring.p if coloring else 0)
                and model.max_abs_coeff() <= max(1, graph.n - 1)
            )
            structural += 1
            if not ok:
                suite.add("ip-structure", False, "variable/row/coefficient bound violated",
                          counterexample=serialize_instance(instance))
                return suite

            depth, tree = treedepth_exact(graph) if graph.n <= 12 else (None, heuristic_forest(graph))
            tprime = build_constraint_tree(tree, graph.n, model.p)
            trees += 1
            if not validate_forest(constraint_graph(model), tprime.forest):
                suite.add("constraint-tree-valid", False, "T' invalid for G(A^T)",
                          counterexample=serialize_instance(instance))
                return suite
            if tprime.height > model.p + tree.height + 1:
                suite.add("constraint-tree-height", False,
                          f"height {tprime.height} > p+d+1 = {model.p + tree.height + 1}",
                          counterexample=serialize_instance(instance))
                return suite

            assignment, ip_value = solve_ip_bruteforce(model, cap=max(24, len(model.variables)))
            brute = solve_colored_bruteforce(graph, coloring, objective)
            equivalence += 1
            if (assignment is None) != (not brute.feasible) or (
                assignment is not None and ip_value != brute.value
            ):
                suite.add("ip-subgraph-equivalence", False,
                          f"ip={ip_value} brute={brute.value}",
                          counterexample=serialize_instance(instance))
                return suite

            if assignment is not None:
                subset, value = ip_assignment_to_subgraph(model, assignment)
                sep = evaluate_separable(objective, degree_sequence(graph, subset))
                back = subgraph_to_ip_assignment(graph, subset)
                _, back_value = ip_assignment_to_subgraph(model, back)
                maps += 1
                if not (value == ip_value == sep == back_value):
                    suite.add("assignment-maps", False,
                              f"values diverge: {value}, {ip_value}, {sep}, {back_value}",
                              counterexample=serialize_instance(instance))
                    return suite
    suite.add("ip-structure", True, f"{structural} models")
    suite.add("constraint-tree-valid", True, f"{trees} lifted trees")
    suite.add("ip-subgraph-equivalence", True, f"{equivalence} instances")
    suite.add("assignment-maps", True, f"{maps} optima mapped both ways")
    return suite


# ---------------------------------------------------------------------------
# treedepth suite

def run_treedepth_suite(seed: int, minimality_samples: int = 8, sample_n_max: int = 7) -> Suite:
    rng = rng_of(seed)
    suite = Suite()

    depth, forest = treedepth_exact(perfect_matching_graph(3))
    suite.add("matching-on-6", depth == 3 and validate_forest(perfect_matching_graph(3), forest),
              f"tree-depth {depth}, expected 3")
    depth, _ = treedepth_exact(path_graph(2))
    suite.add("single-edge", depth == 2, f"tree-depth {depth}, expected 2")

    ok = True
    detail = []
    for n in range(1, 16):
        want = _ceil_log2(n + 1)
        got, f = treedepth_exact(path_graph(n))
        if got != want or not validate_forest(path_graph(n), f):
            ok = False
            detail.append(f"P_{n}: got {got}, want {want}")
    suite.add("paths-closed-form", ok, "; ".join(detail) or "P_1..P_15 match ceil(log2(n+1))")

    ok = True
    detail = []
    checked = 0
    samples = [perfect_matching_graph(3)]
    while len(samples) < minimality_samples:
        # force full-size graphs into the sample so the n = sample_n_max case
        # is always exercised
        n = sample_n_max if len(samples) % 3 == 0 else rng.randint(2, sample_n_max)
        pairs = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.45]
        samples.append(Graph.from_pairs(n, pairs))
    for graph in samples:
        exact, f = treedepth_exact(graph)
        brute = min_tree_height_bruteforce(graph)
        heur = heuristic_forest(graph)
        checked += 1
        if exact != brute:
            ok = False
            detail.append(f"exact {exact} != exhaustive {brute} on {graph.edges}")
        if not validate_forest(graph, heur):
            ok = False
            detail.append(f"heuristic invalid on {graph.edges}")
        if graph.edges and heur.height < exact:
            ok = False
            detail.append(f"heuristic height {heur.height} below tree-depth {exact}")
    suite.add("exhaustive-minimality", ok, "; ".join(detail) or f"{checked} graphs, all orderings enumerated")
    return suite


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length()


# ---------------------------------------------------------------------------
# gadget suite

def _unprescribed_optimum(instance: Instance) -> int:
    return solve_colored_bruteforce(instance.graph, None, instance.vertex_functions).value


def k22_exact_matching(counts) -> tuple[Instance, dict]:
    # colors: the identity matching {(1,1'),(2,2')} is color 1, the crossing pair color 2
    return exact_matching_instance(2, (0, 1, 1, 0), counts)


def run_gadget_suite(subdivision_edge_cap: int = 4) -> Suite:
    suite = Suite()

    inst, meta = k22_exact_matching((2, 0))
    v = solve_colored_bruteforce(inst.graph, inst.coloring, inst.vertex_functions).value
    suite.add("exact-matching-(2,0)", v == 0 and meta["target_reachable"], f"optimum {v}, expected 0")
    inst, meta = k22_exact_matching((1, 1))
    v = solve_colored_bruteforce(inst.graph, inst.coloring, inst.vertex_functions).value
    suite.add("exact-matching-(1,1)", v == -2 and meta["target_reachable"], f"optimum {v}, expected -2")
    inst, meta = exact_matching_instance(2, (0, 1, 1, 0), (2, 1))
    v = solve_colored_bruteforce(inst.graph, inst.coloring, inst.vertex_functions).value
    suite.add("exact-matching-sum-mismatch", v < 0 and not meta["target_reachable"],
              f"optimum {v} < 0 with sum(counts) != r")
    inst, _ = exact_matching_instance(1, (0,), (1,))
    v = solve_colored_bruteforce(inst.graph, inst.coloring, inst.vertex_functions).value
    suite.add("exact-matching-r1", v == 0, f"optimum {v}, expected 0")

    for name, graph, want in (
        ("cubic-K4", complete_graph(4), 0),
        ("cubic-P3", path_graph(3), 0),
        ("cubic-K13", star_graph(3), 0),
    ):
        v = _unprescribed_optimum(cubic_subgraph_instance(graph))
        suite.add(name, v == want, f"optimum {v}, expected {want}")

    v = _unprescribed_optimum(general_factor_instance(
        FactorSpec(path_graph(2), ((1,), (1,)))))
    suite.add("perfect-matching-edge", v == 0, f"optimum {v}, expected 0")
    v = _unprescribed_optimum(general_factor_instance(
        FactorSpec(path_graph(3), ((1,), (1,), (1,)))))
    suite.add("perfect-matching-P3", v == -1, f"optimum {v}, expected -1")
    from .graphs import cycle_graph
    v = _unprescribed_optimum(general_factor_instance(
        FactorSpec(cycle_graph(4), ((2,), (2,), (2,), (2,)))))
    suite.add("factor-C4-two-regular", v == 0, f"optimum {v}, expected 0")

    for name, values, check in (
        ("partition-(2,3,5)", (2, 3, 5), lambda v: v == 0),
        ("partition-(1,1,3)", (1, 1, 3), lambda v: v <= -1),
        ("partition-(1)", (1,), lambda v: v == -1),
    ):
        v, _ = weighted_bruteforce(partition_gadget(values))
        suite.add(name, check(v), f"optimum {v}")

    # bipartite concave-convex: left side wants degree 1, right side degree 0 or 3
    star = star_graph(3)  # center 0 on the right side, leaves on the left
    v = _unprescribed_optimum(bipartite_concave_convex_instance(star, left=(1, 2, 3)))
    suite.add("bipartite-cc-K13", v == 0, f"optimum {v}, expected 0")
    edge = path_graph(2)
    v = _unprescribed_optimum(bipartite_concave_convex_instance(edge, left=(0,)))
    suite.add("bipartite-cc-edge", v == -1, f"optimum {v}, expected -1")
    right_only = Graph(2, ())
    v = _unprescribed_optimum(bipartite_concave_convex_instance(right_only, left=()))
    suite.add("bipartite-cc-empty-left", v == 0, f"optimum {v}, expected 0")

    # lu-factor tables: the stated example and concavity of every table
    g = path_graph(3)
    obj = lu_factor_objective(LuFactorSpec(lower=(1, 1, 1), upper=(1, 1, 1)), g)
    suite.add("lu-table-example", obj.tables[1] == (-1, 0, -1),
              f"middle vertex table {obj.tables[1]}, expected (-1, 0, -1)")
    zero = lu_factor_objective(LuFactorSpec(lower=(0, 0, 0), upper=(1, 2, 1)), g)
    suite.add("lu-table-unconstrained", all(all(v == 0 for v in t) for t in zero.tables),
              "l=0, u=d gives all-zero tables")
    concave = all(
        all(t[z + 1] - t[z] <= t[z] - t[z - 1] for z in range(1, len(t) - 1))
        for t in obj.tables + zero.tables
    )
    suite.add("lu-tables-concave", concave, "second differences <= 0")

    # subdivision gadget on every host with at most subdivision_edge_cap edges
    ok = True
    detail = []
    checked = 0
    hosts = [g for g in connected_graphs_up_to_iso(5) if 1 <= g.num_edges <= subdivision_edge_cap]
    for host in hosts:
        squares = SeparableObjective(
            tuple(tuple(z * z for z in range(d + 1)) for d in host.host_degrees())
        )
        for m in range(host.num_edges + 1):
            gadget = subdivision_hardness_instance(host, m)
            lifted_best = solve_colored_bruteforce(
                gadget.instance.graph, None, gadget.instance.vertex_functions
            )
            extracted = gadget.extract(lifted_best.subset)
            prescribed_best = max(
                evaluate_separable(squares, degree_sequence(host, EdgeSubset.from_indices(host.num_edges, comb)))
                for comb in itertools.combinations(range(host.num_edges), m)
            )
            got = evaluate_separable(squares, degree_sequence(host, extracted))
            checked += 1
            if extracted.size() != m or got != prescribed_best or lifted_best.value != prescribed_best:
                ok = False
                detail.append(
                    f"host={host.edges} m={m}: size {extracted.size()}, value {got}, "
                    f"lifted {lifted_best.value}, prescribed optimum {prescribed_best}"
                )
    suite.add("subdivision-encodes-prescribed", ok,
              "; ".join(detail) or f"{checked} (host, m) pairs")

    # table shape assertions for the gadget families
    gadget = subdivision_hardness_instance(path_graph(3), 1)
    tabs = gadget.instance.vertex_functions.tables
    n0 = gadget.original.n
    convex_ok = all(
        all(t[z + 1] - t[z] >= t[z] - t[z - 1] for z in range(1, len(t) - 1))
        for t in tabs[n0 : n0 + gadget.original.num_edges]
    )
    apex_t = tabs[gadget.apex]
    concave_ok = all(
        apex_t[z + 1] - apex_t[z] <= apex_t[z] - apex_t[z - 1] for z in range(1, len(apex_t) - 1)
    )
    suite.add("subdivision-table-shapes", convex_ok and concave_ok,
              "subdivision tables convex, apex table concave")
    return suite


def _small_multi_corpus():
    rng = rng_of(5)
    graphs = list(connected_graphs_up_to_iso(4))
    for _ in range(6):
        n = rng.randint(5, 6)
        graphs.append(random_graph_with_edge_count(rng, n, rng.randint(n - 1, 8)))
    return graphs


SUITES = {
    "small-multi": lambda: run_multicriteria_suite(
        _small_multi_corpus(),
        draws_per_graph=4,
        seed=101,
    ),
    "small-colored": lambda: run_colored_suite(40, seed=11, n_max=10),
    "ip-equivalence": lambda: run_ip_suite(seed=7),
    "treedepth": lambda: run_treedepth_suite(seed=3),
    "gadgets": lambda: run_gadget_suite(),
}
