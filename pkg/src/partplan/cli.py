"""Command line entry point.

Exit codes: ``decide`` and ``oracle`` return 0 for YES and 1 for NO; ``verify``
returns 0 when the report checks out and 1 when it does not; ``crosscheck``
returns 1 on any disagreement. Every command returns 2 on bad input, and
``oracle`` returns 3 when the instance is over its size guard.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from itertools import combinations
from typing import Sequence

from . import __version__
from .arrangement import WiringError
from .decider import decide
from .formats import (
    ParseError,
    ReportMismatch,
    emit_instance,
    emit_report,
    parse_instance,
    parse_report,
    verify_report,
)
from .generators import GeneratorError, generate
from .graph import GraphError, build_graph
from .oracle import OracleSizeError, oracle_decide

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_TOO_LARGE = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _parse_order(text: str | None) -> list[int] | None:
    if text is None:
        return None
    return [int(tok) for tok in text.replace(",", " ").split()]


def cmd_decide(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    decision = decide(inst.graph, inst.f, _parse_order(args.order))
    s = decision.stats
    print(
        f"{decision.label} equations={s.num_equations} variables={s.num_variables_used} "
        f"rank={s.rank} elapsed_ms={s.elapsed_seconds * 1000:.1f}"
    )
    if args.report:
        _write(args.report, emit_report(decision, inst.graph, inst.f))
    return EXIT_YES if decision.answer else EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    try:
        result = oracle_decide(inst.graph, inst.f)
    except OracleSizeError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    print(f"{result.label} ({result.reason})")
    return EXIT_YES if result.answer else EXIT_NO


def cmd_verify(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    report = parse_report(_read(args.report))
    ok, message = verify_report(inst.graph, inst.f, report)
    print(("OK: " if ok else "FAILED: ") + message)
    return EXIT_YES if ok else EXIT_NO


def cmd_gen(args: argparse.Namespace) -> int:
    params: dict[str, object] = {}
    for key in ("n", "m", "f", "extra", "which", "wiring"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    g, f = generate(args.kind, params, args.seed)
    meta: dict[str, object] = {"generator": args.kind, "seed": args.seed}
    meta.update(params)
    _write(args.out, emit_instance(g, f, meta))
    return 0


def crosscheck(max_n: int, trials: int, seed: int, max_m: int = 9) -> list[str]:
    """Random decider-vs-oracle comparisons; returns a line per disagreement."""
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        n = rng.randint(1, max_n)
        pairs = list(combinations(range(n), 2))
        m = rng.randint(0, min(max_m, len(pairs)))
        edges = sorted(rng.sample(pairs, m))
        g, f = build_graph(n, edges, [rng.random() < 0.5 for _ in edges])
        try:
            truth = oracle_decide(g, f)
        except OracleSizeError:
            continue
        ours = decide(g, f)
        if ours.answer != truth.answer:
            failures.append(f"trial {trial}: decide={ours.label} oracle={truth.label} edges={edges} F={f.indices()}")
    return failures


def cmd_crosscheck(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    failures = crosscheck(args.n, args.trials, args.seed)
    for line in failures:
        print(line)
    print(
        f"{args.trials - len(failures)}/{args.trials} agree "
        f"({time.perf_counter() - start:.1f}s)"
    )
    return 1 if failures else 0


def cmd_bench(args: argparse.Namespace) -> int:
    g, f = generate("random", {"n": args.n, "m": args.m, "f": args.f}, args.seed)
    decision = decide(g, f)
    s = decision.stats
    print(
        f"n={g.n} m={g.m} |F|={f.size} answer={decision.label} equations={s.num_equations} "
        f"variables={s.num_variables_used} rank={s.rank} elapsed_s={s.elapsed_seconds:.3f}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partplan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide partial planarity with the GF(2) system")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--order", help="cyclic vertex order of the initial drawing, e.g. 0,2,1,3")
    p.add_argument("--report", help="write a decision report here (- for stdout)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="decide by exhaustive embedding search (small instances)")
    p.add_argument("instance")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="re-check a decision report against its instance")
    p.add_argument("instance")
    p.add_argument("report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance document")
    p.add_argument("kind", choices=["random", "k5_family", "kuratowski", "spanning_tree", "arrangement"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--f", type=int)
    p.add_argument("--extra", type=int)
    p.add_argument("--which", help="k5_family: all|minus_one|minus_two_disjoint|star; kuratowski: k5|k33")
    p.add_argument("--wiring", help="arrangement: 'k; i1 i2 ...'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("crosscheck", help="compare decider and oracle on random instances")
    p.add_argument("--n", type=int, default=6, help="maximum vertex count")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("bench", help="time the decider on a random instance")
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--m", type=int, default=150)
    p.add_argument("--f", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return args.func(args)
    except (ParseError, GraphError, ReportMismatch, GeneratorError, WiringError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
