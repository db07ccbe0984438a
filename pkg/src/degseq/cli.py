"""Command-line front end.

Commands: solve-multi, solve-colored, emit-ip, gen, verify, treedepth.
Reports are a single JSON object on standard output; diagnostics go to
standard error.  Exit codes: 0 success (including feasible=false results),
2 input error (syntax or violated invariant), 3 precondition/limit error.
Every run report's witness is re-evaluated against its reported value before
emission.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import _kernels
from .colored import solve_colored_bruteforce, solve_colored_dp
from .errors import DegseqError, InvalidInstanceError, ParseError, PreconditionError
from .gadgets import (
    FactorSpec,
    LuFactorSpec,
    bipartite_concave_convex_instance,
    cubic_subgraph_instance,
    exact_matching_instance,
    general_factor_instance,
    lu_factor_instance,
    partition_gadget,
    subdivision_hardness_instance,
    weighted_bruteforce,
    weighted_objective_eval,
)
from .graphs import (
    Graph,
    SeparableObjective,
    complete_bipartite,
    complete_graph,
    degree_sequence,
    evaluate_separable,
)
from .instances import Instance, instance_digest, parse_instance, serialize_instance
from .ip import build_colored_ip, serialize_ip
from .multicriteria import DEFAULT_MAX_CRITERIA, maximize_multicriteria, maximize_multicriteria_unprescribed
from .randgen import (
    random_bounded_td_instance,
    random_coloring,
    random_graph,
    random_tables,
    rng_of,
)
from .treedepth import heuristic_forest, parse_forest, serialize_forest, treedepth_exact
from .verify import SUITES


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_instance(path: str) -> Instance:
    return parse_instance(_read(path))


def _edges_1based(graph: Graph, subset) -> list[list[int]]:
    return [[i + 1, j + 1] for e, (i, j) in enumerate(graph.edges) if subset.flags[e]]


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=1))


def _base_report(args, instance: Instance | None) -> dict:
    report = {"command": ["degseq"] + list(args.argv)}
    if instance is not None:
        report["instance_digest"] = instance_digest(instance)
    report["backend"] = _kernels.backend_name()
    return report


def cmd_solve_multi(args) -> int:
    instance = _load_instance(args.instance)
    if instance.criteria is None:
        raise InvalidInstanceError("instance has no criteria block")
    objective = instance.criteria
    start = time.perf_counter()
    if args.unprescribed:
        solution = maximize_multicriteria_unprescribed(
            instance.graph, objective, max_criteria=args.max_criteria, threads=args.threads
        )
    else:
        solution = maximize_multicriteria(
            instance.graph, args.m, objective, max_criteria=args.max_criteria, threads=args.threads
        )
    elapsed = time.perf_counter() - start
    # self-check: the witness must re-evaluate to the reported value
    point = tuple(
        sum(w[i] * d for i, d in enumerate(solution.degrees)) for w in objective.weights
    )
    if point != solution.criteria_point or objective.balance(point) != solution.value:
        raise RuntimeError("internal error: witness does not re-evaluate to the reported value")
    report = _base_report(args, instance)
    report.update(
        solver="multicriteria-unprescribed" if args.unprescribed else "multicriteria-prescribed",
        value=solution.value,
        witness_edges=_edges_1based(instance.graph, solution.subset),
        criteria_point=list(solution.criteria_point),
        oracle_queries=solution.oracle_queries,
        guarantee=solution.guarantee,
        threads=args.threads,
        wall_time_s=elapsed,
    )
    if not args.unprescribed:
        report["m"] = args.m
    _emit(report)
    return 0


def cmd_solve_colored(args) -> int:
    instance = _load_instance(args.instance)
    if instance.vertex_functions is None:
        raise InvalidInstanceError("instance has no vertex_functions")
    report = _base_report(args, instance)
    start = time.perf_counter()
    if instance.weights is not None:
        if not args.brute:
            raise PreconditionError(
                "weighted degree optimization is NP-hard in general; rerun with --brute"
            )
        if instance.coloring is not None:
            raise PreconditionError("weighted instances with colorings are not supported")
        weighted = instance.as_weighted()
        value, subset = weighted_bruteforce(weighted)
        if weighted_objective_eval(weighted, subset) != value:
            raise RuntimeError("internal error: witness does not re-evaluate to the reported value")
        report.update(
            solver="weighted-bruteforce",
            feasible=True,
            value=value,
            witness_edges=_edges_1based(instance.graph, subset),
            wall_time_s=time.perf_counter() - start,
        )
        _emit(report)
        return 0

    if args.brute:
        solution = solve_colored_bruteforce(
            instance.graph, instance.coloring, instance.vertex_functions
        )
        solver = "colored-bruteforce"
        forest = None
    else:
        if args.forest:
            forest = parse_forest(_read(args.forest), instance.graph.n)
        elif args.exact_treedepth:
            _, forest = treedepth_exact(instance.graph)
        else:
            forest = heuristic_forest(instance.graph)
        solution = solve_colored_dp(
            instance.graph, forest, instance.coloring, instance.vertex_functions,
            threads=args.threads,
        )
        solver = "colored-dp"
    elapsed = time.perf_counter() - start
    report["solver"] = solver
    report["feasible"] = solution.feasible
    if solution.feasible:
        value = evaluate_separable(
            instance.vertex_functions, degree_sequence(instance.graph, solution.subset)
        )
        if value != solution.value:
            raise RuntimeError("internal error: witness does not re-evaluate to the reported value")
        report["value"] = solution.value
        report["witness_edges"] = _edges_1based(instance.graph, solution.subset)
        if instance.coloring is not None:
            report["per_color_counts"] = list(solution.color_counts)
    if solution.forest_height is not None:
        report["forest_height"] = solution.forest_height
    report["threads"] = args.threads
    report["wall_time_s"] = elapsed
    _emit(report)
    return 0


def cmd_emit_ip(args) -> int:
    instance = _load_instance(args.instance)
    if instance.vertex_functions is None:
        raise InvalidInstanceError("instance has no vertex_functions")
    if instance.weights is not None:
        raise PreconditionError("weighted instances have no IP form")
    model = build_colored_ip(instance.graph, instance.coloring, instance.vertex_functions)
    text = serialize_ip(model)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    report = _base_report(args, instance)
    report.update(
        solver="emit-ip",
        out=args.out,
        variables=len(model.variables),
        rows=len(model.rows),
        max_abs_coeff=model.max_abs_coeff(),
    )
    _emit(report)
    return 0


def _gen_instance(args) -> tuple[Instance, dict | None]:
    rng = rng_of(args.seed)
    kind = args.kind
    if kind == "exact-matching":
        r = args.r
        colors = tuple(rng.randrange(args.p) for _ in range(r * r))
        if args.counts:
            counts = tuple(int(x) for x in args.counts.split(","))
        else:
            # counts of the diagonal perfect matching, so the target 0 is reachable
            graph = complete_bipartite(r, r)
            counts_list = [0] * args.p
            for e, (i, j) in enumerate(graph.edges):
                if j == i + r:
                    counts_list[colors[e]] += 1
            counts = tuple(counts_list)
        instance, meta = exact_matching_instance(r, colors, counts)
        return instance, meta
    if kind == "factor":
        graph = random_graph(rng, args.n, args.edge_prob)
        degs = graph.host_degrees()
        admissible = tuple(
            tuple(sorted(rng.sample(range(d + 1), rng.randint(1, d + 1)))) for d in degs
        )
        return general_factor_instance(FactorSpec(graph, admissible)), None
    if kind == "lu-factor":
        graph = random_graph(rng, args.n, args.edge_prob)
        degs = graph.host_degrees()
        lower = []
        upper = []
        for d in degs:
            lo = rng.randint(0, d)
            lower.append(lo)
            upper.append(rng.randint(lo, d))
        return lu_factor_instance(LuFactorSpec(tuple(lower), tuple(upper)), graph), None
    if kind == "cubic":
        if args.complete:
            graph = complete_graph(args.complete)
        else:
            graph = random_graph(rng, args.n, args.edge_prob)
        return cubic_subgraph_instance(graph), None
    if kind == "bipartite-cc":
        left, right = args.left, args.right
        pairs = []
        for j in range(right):
            neighbors = [l for l in range(left) if rng.random() < args.edge_prob][:3]
            pairs.extend((l, left + j) for l in neighbors)
        graph = Graph.from_pairs(left + right, pairs)
        return bipartite_concave_convex_instance(graph, left=range(left)), None
    if kind == "subdivision":
        host = random_graph(rng, args.n, args.edge_prob)
        gadget = subdivision_hardness_instance(host, args.m)
        return gadget.instance, {"penalty": gadget.penalty, "host_edges": [[i + 1, j + 1] for i, j in host.edges]}
    if kind == "partition":
        values = tuple(int(x) for x in args.values.split(","))
        weighted = partition_gadget(values)
        total = sum(values)
        tables = []
        degs = [0] * weighted.graph.n
        for e, (i, j) in enumerate(weighted.graph.edges):
            degs[i] += weighted.weights[e]
            degs[j] += weighted.weights[e]
        for v in range(weighted.graph.n):
            tables.append([weighted.vertex_functions[v](z) for z in range(degs[v] + 1)])
        return (
            Instance(
                graph=weighted.graph,
                vertex_functions=SeparableObjective(tuple(tuple(t) for t in tables)),
                weights=weighted.weights,
            ),
            {"total": total},
        )
    if kind == "random":
        graph = random_graph(rng, args.n, args.edge_prob)
        coloring = random_coloring(rng, graph, args.p) if args.p >= 1 else None
        return (
            Instance(graph=graph, coloring=coloring, vertex_functions=random_tables(rng, graph)),
            None,
        )
    if kind == "random-bounded-td":
        counts = tuple(int(x) for x in args.counts.split(",")) if args.counts else None
        instance, forest = random_bounded_td_instance(
            rng, args.n, args.d, args.p, edge_prob=args.edge_prob, counts=counts
        )
        return instance, {"forest": forest, "height": forest.height}
    raise PreconditionError(f"unknown generator kind {kind!r}")


def cmd_gen(args) -> int:
    instance, meta = _gen_instance(args)
    text = serialize_instance(instance)
    forest = meta.pop("forest") if meta and "forest" in meta else None
    if args.kind == "random-bounded-td" and not args.out:
        raise PreconditionError("random-bounded-td ships a forest certificate; --out is required")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        report = {
            "command": ["degseq"] + list(args.argv),
            "kind": args.kind,
            "out": args.out,
            "instance_digest": instance_digest(instance),
        }
        if forest is not None:
            forest_path = args.out + ".forest.json"
            with open(forest_path, "w", encoding="utf-8") as fh:
                fh.write(serialize_forest(forest))
            report["forest_out"] = forest_path
            report["forest_height"] = meta["height"]
        if meta:
            report["meta"] = {k: v for k, v in meta.items() if k != "forest"}
        _emit(report)
    else:
        print(text)
    return 0


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]()
    checks = []
    for c in suite.checks:
        entry = {"name": c.name, "ok": c.ok, "detail": c.detail}
        if c.counterexample is not None:
            entry["counterexample"] = json.loads(c.counterexample)
        checks.append(entry)
        print(f"[{'PASS' if c.ok else 'FAIL'}] {args.suite}/{c.name}: {c.detail}", file=sys.stderr)
    _emit({
        "command": ["degseq"] + list(args.argv),
        "suite": args.suite,
        "passed": suite.passed,
        "checks": checks,
    })
    return 0 if suite.passed else 1


def cmd_treedepth(args) -> int:
    instance = _load_instance(args.instance)
    start = time.perf_counter()
    depth, forest = treedepth_exact(instance.graph, cap=args.cap)
    elapsed = time.perf_counter() - start
    report = _base_report(args, instance)
    report.update(
        solver="treedepth-exact",
        treedepth=depth,
        height=forest.height,
        parent=[0 if p is None else p + 1 for p in forest.parent],
        wall_time_s=elapsed,
    )
    _emit(report)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Exact degree sequence optimization: convex multi-criteria and "
        "colored separable objectives, gadget generators, and verification suites.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    sm = sub.add_parser("solve-multi", help="solve the convex multi-criteria problem")
    sm.add_argument("instance")
    group = sm.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int, help="exact number of edges")
    group.add_argument("--unprescribed", action="store_true", help="no edge-count constraint")
    sm.add_argument("--threads", type=int, default=1)
    sm.add_argument("--max-criteria", type=int, default=DEFAULT_MAX_CRITERIA)
    sm.set_defaults(func=cmd_solve_multi)

    sc = sub.add_parser("solve-colored", help="solve the colored separable problem")
    sc.add_argument("instance")
    fsrc = sc.add_mutually_exclusive_group()
    fsrc.add_argument("--forest", help="forest certificate file (JSON parent array)")
    fsrc.add_argument("--exact-treedepth", action="store_true", help="compute an optimal forest")
    fsrc.add_argument("--heuristic", action="store_true", help="min-degree heuristic forest (default)")
    sc.add_argument("--brute", action="store_true", help="use the brute-force oracle instead of the DP")
    sc.add_argument("--threads", type=int, default=1)
    sc.set_defaults(func=cmd_solve_colored)

    ei = sub.add_parser("emit-ip", help="write the binary IP in the deterministic text format")
    ei.add_argument("instance")
    ei.add_argument("--out", required=True)
    ei.set_defaults(func=cmd_emit_ip)

    gen = sub.add_parser("gen", help="generate instances (gadgets and random families)")
    gen.add_argument(
        "kind",
        choices=[
            "exact-matching", "factor", "lu-factor", "cubic", "bipartite-cc",
            "subdivision", "partition", "random", "random-bounded-td",
        ],
    )
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.add_argument("--n", type=int, default=6)
    gen.add_argument("--r", type=int, default=2, help="half size of K_{r,r} (exact-matching)")
    gen.add_argument("--p", type=int, default=2, help="number of colors")
    gen.add_argument("--d", type=int, default=4, help="forest height bound (random-bounded-td)")
    gen.add_argument("--m", type=int, default=1, help="edge budget (subdivision)")
    gen.add_argument("--edge-prob", type=float, default=0.5)
    gen.add_argument("--complete", type=int, help="use the complete graph K_n (cubic)")
    gen.add_argument("--left", type=int, default=3, help="left side size (bipartite-cc)")
    gen.add_argument("--right", type=int, default=2, help="right side size (bipartite-cc)")
    gen.add_argument("--values", default="2,3,5", help="comma-separated values (partition)")
    gen.add_argument("--counts", help="comma-separated per-color counts override")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="run an oracle-equivalence/property suite")
    ver.add_argument("suite", choices=sorted(SUITES))
    ver.set_defaults(func=cmd_verify)

    td = sub.add_parser("treedepth", help="exact tree-depth and certificate of a small instance")
    td.add_argument("instance")
    td.add_argument("--cap", type=int, default=15)
    td.set_defaults(func=cmd_treedepth)
    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    args.argv = list(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DegseqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
