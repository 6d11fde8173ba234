"""Command line surface: chordal, color, verify, oracle, gen.

Exit codes: 0 success; 1 hole found (chordal); 2 hypothesis violation
(color); 3 coloring defect (verify); 4 unsatisfiable, 5 node limit (oracle);
64 usage or file-access problems; 65 malformed input data.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .chordal import chordality_certificate, uniform_lists
from .generate import MODELS, GeneratorConfig, InfeasibleConfig, generate
from .graph import GraphError
from .instance_io import ParseError, emit_coloring, emit_instance, parse_coloring, parse_instance
from .oracle import IncompleteColoring, OracleOutcome, brute_force_list_color, verify_coloring
from .solver import HypothesisViolation, brooks_list_color, check_hypotheses

EXIT_OK = 0
EXIT_HOLE = 1
EXIT_HYPOTHESIS = 2
EXIT_DEFECT = 3
EXIT_UNSAT = 4
EXIT_LIMIT = 5
EXIT_USAGE = 64
EXIT_DATA = 65

THREADS_ENV = "BROOKS_COLOR_THREADS"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="brookscolor", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")

    gen_opts = argparse.ArgumentParser(add_help=False)
    gen_opts.add_argument("--n", type=int, default=30, help="vertex count")
    gen_opts.add_argument("--delta", type=int, default=4, help="max-degree cap")
    gen_opts.add_argument("--model", choices=MODELS, default="tree-plus-edges")
    gen_opts.add_argument("--seed", type=int, default=0)
    gen_opts.add_argument("--list-size", type=int, default=None,
                          help="colors per list (default: delta)")
    gen_opts.add_argument("--palette", type=int, default=None,
                          help="palette size, colors are 1..palette (default: 2*delta)")

    p = sub.add_parser("chordal", help="print an elimination order or a hole")
    p.add_argument("file")

    p = sub.add_parser("color", parents=[gen_opts],
                       help="list-color an instance (or a seeded batch)")
    p.add_argument("file", nargs="?")
    p.add_argument("--uniform", type=int, metavar="K",
                   help="use lists {1..K} everywhere, ignoring any in the file")
    p.add_argument("--seedrun", type=int, metavar="N",
                   help="generate and color N instances, report pass/fail counts")

    p = sub.add_parser("verify", help="check a coloring file against an instance")
    p.add_argument("file")
    p.add_argument("coloring_file")

    p = sub.add_parser("oracle", help="exhaustive search for a list coloring")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=10_000_000, help="node limit")

    sub.add_parser("gen", parents=[gen_opts], help="write a generated instance to stdout")
    return parser


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _config_from_args(args: argparse.Namespace, seed: int | None = None) -> GeneratorConfig:
    list_size = args.list_size if args.list_size is not None else args.delta
    palette = args.palette if args.palette is not None else 2 * args.delta
    return GeneratorConfig(
        n=args.n,
        delta=args.delta,
        model=args.model,
        seed=args.seed if seed is None else seed,
        palette=palette,
        list_size=list_size,
    )


def _cmd_chordal(args: argparse.Namespace) -> int:
    g, _ = parse_instance(_read(args.file))
    certificate = chordality_certificate(g)
    if certificate.peo is not None:
        print(" ".join(["chordal", *map(str, certificate.peo.order)]).rstrip())
        return EXIT_OK
    assert certificate.hole is not None
    print(" ".join(["hole", *map(str, certificate.hole.cycle)]))
    return EXIT_HOLE


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise _UsageError(f"{THREADS_ENV} must be positive, got {value}")
    return value


def _cmd_seedrun(args: argparse.Namespace) -> int:
    if args.file is not None:
        raise _UsageError("--seedrun generates its own instances; drop the FILE argument")
    count = args.seedrun
    if count < 1:
        raise _UsageError("--seedrun needs a positive instance count")
    instances = []
    seed = args.seed
    attempts = 0
    while len(instances) < count:
        attempts += 1
        if attempts > 100 * count + 1000:
            raise _UsageError("could not generate enough hypothesis-satisfying instances")
        g, lists = generate(_config_from_args(args, seed=seed))
        if check_hypotheses(g, lists).ok:
            instances.append((seed, g, lists))
        seed += 1

    def run(item: tuple[int, object, object]) -> tuple[int, bool]:
        s, g, lists = item
        try:
            phi = brooks_list_color(g, lists)  # type: ignore[arg-type]
            ok = verify_coloring(g, lists, phi) is None  # type: ignore[arg-type]
        except Exception:
            ok = False
        return s, ok

    workers = min(_threads(), count)
    if workers == 1:
        results = [run(item) for item in instances]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, instances))
    results.sort()
    passed = sum(1 for _, ok in results if ok)
    for s, ok in results:
        print(f"seed {s} {'pass' if ok else 'fail'}")
    print(f"pass {passed} fail {len(results) - passed}")
    return EXIT_OK if passed == len(results) else 1


def _cmd_color(args: argparse.Namespace) -> int:
    if args.seedrun is not None:
        return _cmd_seedrun(args)
    if args.file is None:
        raise _UsageError("color needs an instance FILE (or --seedrun N)")
    g, lists = parse_instance(_read(args.file))
    if args.uniform is not None:
        lists = uniform_lists(g, args.uniform)
    if lists is None:
        raise _UsageError("instance has no color lists; add 'l' lines or pass --uniform K")
    try:
        phi = brooks_list_color(g, lists)
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    sys.stdout.write(emit_coloring(phi))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g, lists = parse_instance(_read(args.file))
    phi = parse_coloring(_read(args.coloring_file))
    try:
        defect = verify_coloring(g, lists, phi)
    except IncompleteColoring as exc:
        print(f"defect: {exc}")
        return EXIT_DEFECT
    if defect is not None:
        print(f"defect: {defect}")
        return EXIT_DEFECT
    print("ok")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    g, lists = parse_instance(_read(args.file))
    if lists is None:
        raise _UsageError("oracle needs an instance with 'l' color-list lines")
    result = brute_force_list_color(g, lists, node_limit=args.limit)
    if result is OracleOutcome.UNSATISFIABLE:
        print("unsatisfiable")
        return EXIT_UNSAT
    if result is OracleOutcome.LIMIT_EXCEEDED:
        print("limit-exceeded")
        return EXIT_LIMIT
    sys.stdout.write(emit_coloring(result))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    g, lists = generate(_config_from_args(args))
    sys.stdout.write(emit_instance(g, lists))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("missing command")
        handler = {
            "chordal": _cmd_chordal,
            "color": _cmd_color,
            "verify": _cmd_verify,
            "oracle": _cmd_oracle,
            "gen": _cmd_gen,
        }[args.command]
        return handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleConfig as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, GraphError) as exc:
        print(f"bad input data: {exc}", file=sys.stderr)
        return EXIT_DATA


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
