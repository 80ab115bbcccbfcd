"""Command-line front end.

Exit codes: 0 = YES / valid, 1 = NO / invalid, 2 = usage, parse or
engine-inapplicability errors.  Output is deterministic for fixed inputs,
engine and seed, including under --parallel.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import kdd, oracle, structured
from .fileformat import (ParseError, parse_instance, parse_solution,
                         serialize_instance, serialize_solution)
from .graph import Graph, GraphError
from .model import Instance, InstanceError, MetricUndefinedError, verify_solution
from .oracle import Verdict
from .randinst import random_instance
from .reductions import (SourceProblem, gen_diameter2_clique,
                         gen_diameter2_weighted, gen_dominating_set_star,
                         gen_multicolored_clique, gen_spanner_edgeless)
from .structured import EngineInapplicable

ENGINES = ("brute", "tree", "bounded-gamma", "bounded-g", "kdd", "auto")

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _pick_auto(inst: Instance, d: int | None) -> str:
    if inst.gamma.is_tree() and inst.t < 3:
        return "tree"
    if inst.t == Fraction(2) and d is not None and inst.gamma.is_unweighted():
        return "kdd"
    if inst.n <= 10:
        return "brute"
    g_degree = Graph(inst.n, inst.g_edges).max_degree()
    if inst.gamma.max_degree() <= g_degree:
        return "bounded-gamma"
    return "bounded-g"


def dispatch(inst: Instance, engine: str, d: int | None = None,
             parallel: int = 1) -> Verdict:
    if engine == "auto":
        engine = _pick_auto(inst, d)
    if engine == "brute":
        return oracle.solve_min(inst, parallel=parallel)
    if engine == "tree":
        return structured.solve_tree_gamma(inst)
    if engine == "bounded-gamma":
        return structured.solve_bounded_gamma(inst, parallel=parallel)
    if engine == "bounded-g":
        return structured.solve_bounded_g(inst, parallel=parallel)
    if engine == "kdd":
        if d is None:
            raise CliError("--d is required for the kdd engine")
        return kdd.solve_kdd(inst, d)
    raise CliError(f"unknown engine {engine!r}")


def _load_instance(path: str) -> Instance:
    try:
        return parse_instance(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    except ParseError as exc:
        raise CliError(f"{path}: {exc}")


def cmd_solve(args, out) -> int:
    inst = _load_instance(args.input)
    try:
        verdict = dispatch(inst, args.engine, d=args.d, parallel=args.parallel)
    except EngineInapplicable as exc:
        raise CliError(f"engine inapplicable: {exc}")
    if verdict.yes:
        out.write("YES\n")
        out.write(serialize_solution(verdict.solution))
        return EXIT_YES
    out.write("NO\n")
    return EXIT_NO


def cmd_verify(args, out) -> int:
    inst = _load_instance(args.input)
    try:
        sol = parse_solution(Path(args.solution).read_text(), inst.n)
    except OSError as exc:
        raise CliError(f"cannot read {args.solution}: {exc}")
    except ParseError as exc:
        raise CliError(f"{args.solution}: {exc}")
    result = verify_solution(inst, sol)
    if result.ok:
        out.write("valid\n")
        return EXIT_YES
    out.write(f"invalid {result.reason}\n")
    return EXIT_NO


def _parse_source(text: str, want_partition: bool):
    header = None
    edges = []
    colors: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "src":
                raise CliError(f"line {lineno}: header must be 'p src <n> <k>'")
            header = (int(parts[2]), int(parts[3]))
        elif parts[0] == "e":
            if header is None or len(parts) != 3:
                raise CliError(f"line {lineno}: bad edge line")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        elif parts[0] == "v":
            if header is None or len(parts) != 3:
                raise CliError(f"line {lineno}: bad color line")
            colors[int(parts[1]) - 1] = int(parts[2])
        else:
            raise CliError(f"line {lineno}: unknown line type {parts[0]!r}")
    if header is None:
        raise CliError("missing 'p src' header")
    n, k = header
    try:
        graph = Graph(n, edges)
    except GraphError as exc:
        raise CliError(str(exc))
    partition = None
    if want_partition:
        if set(colors) != set(range(n)):
            raise CliError("multicolored clique source needs a color for every vertex")
        partition = tuple(tuple(sorted(v for v, c in colors.items() if c == i))
                          for i in range(1, k + 1))
    return graph, k, partition


def cmd_gen(args, out) -> int:
    want_partition = args.generator == "mcq"
    try:
        source_text = Path(args.source).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {args.source}: {exc}")
    graph, k, partition = _parse_source(source_text, want_partition)
    try:
        if args.generator == "mcq":
            src = SourceProblem("multicolored-clique", graph, k, partition=partition)
            gen = gen_multicolored_clique(src)
        elif args.generator == "domset":
            gen = gen_dominating_set_star(SourceProblem("dominating-set", graph, k))
        elif args.generator == "diam2w":
            if args.epsilon is None:
                raise CliError("diam2w requires --epsilon")
            eps = parse_stretch_like(args.epsilon)
            src = SourceProblem("diameter2-augmentation", graph, k, epsilon=eps)
            gen = gen_diameter2_weighted(src, eps)
        elif args.generator == "spanner":
            gen = gen_spanner_edgeless(SourceProblem("two-spanner", graph, k))
        elif args.generator == "diam2k":
            gen = gen_diameter2_clique(SourceProblem("diameter2-augmentation", graph, k))
        else:
            raise CliError(f"unknown generator {args.generator!r}")
    except (ValueError, MetricUndefinedError, InstanceError) as exc:
        if isinstance(exc, CliError):
            raise
        raise CliError(str(exc))
    body = serialize_instance(gen.instance)
    labels = "".join(f"l {v + 1} {gen.labels[v]}\n" for v in sorted(gen.labels))
    if args.output:
        Path(args.output).write_text(body)
        Path(args.output + ".labels").write_text(labels)
        out.write(f"wrote {args.output} and {args.output}.labels\n")
    else:
        out.write(body)
        out.write(labels)
    return EXIT_YES


def parse_stretch_like(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad rational {text!r}") from exc


def _applicable_engines(inst: Instance):
    yield "bounded-gamma", lambda: structured.solve_bounded_gamma(inst)
    yield "bounded-g", lambda: structured.solve_bounded_g(inst)
    if inst.gamma.is_tree() and inst.t < 3:
        yield "tree", lambda: structured.solve_tree_gamma(inst)
    if inst.t == Fraction(2) and inst.gamma.is_unweighted():
        g = Graph(inst.n, inst.g_edges)
        if len(g.edges) == 0 or not _has_cycle(g):
            yield "kdd", lambda: kdd.solve_kdd(inst, 2)


def _has_cycle(g: Graph) -> bool:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sorted(g.edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def cmd_fuzz(args, out) -> int:
    rng = random.Random(args.seed)
    failures = 0
    for i in range(args.count):
        inst = random_instance(rng, n_max=8, k_max=2,
                               forest_g=(i % 2 == 0))
        expected = oracle.solve_min(inst)
        for name, run in _applicable_engines(inst):
            got = run()
            if got.yes != expected.yes:
                failures += 1
                dump = f"fuzz_fail_{args.seed}_{i}_{name}.dilaug"
                Path(dump).write_text(serialize_instance(inst))
                out.write(f"DISAGREEMENT engine={name} oracle={expected.yes} "
                          f"got={got.yes} dumped={dump}\n")
    out.write(f"fuzz: {args.count} instances, {failures} disagreements\n")
    return EXIT_YES if failures == 0 else EXIT_NO


def cmd_bench(args, out) -> int:
    if args.suite != "quick":
        raise CliError(f"unknown bench suite {args.suite!r}")
    rng = random.Random(12345)
    rows = []
    for i in range(10):
        inst = random_instance(rng, n_max=8, k_max=2, forest_g=(i % 2 == 0))
        for name, run in [("brute", lambda: oracle.solve_min(inst))] + \
                list(_applicable_engines(inst)):
            start = time.perf_counter()
            verdict = run()
            elapsed = time.perf_counter() - start
            rows.append((i, name, verdict.yes, elapsed))
    out.write(f"{'inst':>4} {'engine':>14} {'answer':>6} {'seconds':>10}\n")
    for i, name, yes, elapsed in rows:
        out.write(f"{i:>4} {name:>14} {'YES' if yes else 'NO':>6} {elapsed:>10.4f}\n")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dilaug",
        description="Exact solvers for the dilation t-augmentation problem")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide an instance")
    p_solve.add_argument("--engine", choices=ENGINES, default="auto")
    p_solve.add_argument("--d", type=int, default=None,
                         help="biclique parameter for the kdd engine")
    p_solve.add_argument("--parallel", type=int, default=1)
    p_solve.add_argument("--input", required=True)

    p_verify = sub.add_parser("verify", help="check a solution file")
    p_verify.add_argument("--input", required=True)
    p_verify.add_argument("--solution", required=True)

    p_gen = sub.add_parser("gen", help="generate a hardness-construction instance")
    p_gen.add_argument("generator",
                       choices=("mcq", "domset", "diam2w", "spanner", "diam2k"))
    p_gen.add_argument("--source", required=True,
                       help="source problem file ('p src <n> <k>', 'e u v', 'v u color')")
    p_gen.add_argument("--epsilon", default=None, help="rational in (0,1), diam2w only")
    p_gen.add_argument("--output", default=None)

    p_fuzz = sub.add_parser("fuzz", help="cross-check engines against the oracle")
    p_fuzz.add_argument("--seed", type=int, required=True)
    p_fuzz.add_argument("--count", type=int, required=True)

    p_bench = sub.add_parser("bench", help="timing report")
    p_bench.add_argument("--suite", required=True)
    return parser


def run(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    handlers = {"solve": cmd_solve, "verify": cmd_verify, "gen": cmd_gen,
                "fuzz": cmd_fuzz, "bench": cmd_bench}
    try:
        return handlers[args.command](args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
