"""ruler-wrap command line.

Exit codes: 0 feasible/ok, 1 infeasible/invalid, 2 usage or parse error,
3 a solver witness failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import run_bench, write_csv
from .core import Partition, VerificationError, WrapError, validate_wrapping
from .instance import generate_instance, parse_instance, serialize_instance
from .solvers import ALGORITHMS, frontier, result_record, solve
from .svg import render_svg

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _name_list(text: str) -> list[str]:
    names = [tok.strip() for tok in text.split(",") if tok.strip()]
    for name in names:
        if name not in ALGORITHMS:
            raise argparse.ArgumentTypeError(f"unknown algorithm {name!r}")
    return names


def _load(args):
    data = sys.stdin.buffer.read() if args.input == "-" else Path(args.input).read_bytes()
    return parse_instance(data, args.format)


def cmd_solve(args) -> int:
    inst = _load(args)
    lengths, bound = inst.ruler, inst.bound(args.allow_rotate)
    try:
        outcome = solve(lengths, bound, args.algorithm)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    w = outcome.witness
    if w is not None:
        # re-check independently of the solver before anything is emitted
        check = validate_wrapping(lengths, w.partition, bound)
        if not check.ok or check.sides != w.side_sums or check.rotated != w.rotated:
            print(f"error: witness {w.breakpoints} failed verification", file=sys.stderr)
            return EXIT_VERIFY
    rec = result_record(outcome, args.algorithm)
    if args.json:
        print(json.dumps(rec))
    else:
        verdict = "feasible" if outcome.feasible else "infeasible"
        print(f"{verdict} ({args.algorithm}, {rec['elapsed_ms']:.1f} ms)")
        if w is not None:
            print(f"rotated: {'yes' if w.rotated else 'no'}")
            print("breakpoints:", ",".join(map(str, w.breakpoints)))
            print("side sums:  ", ",".join(map(str, w.side_sums)))
    if args.svg and w is not None:
        Path(args.svg).write_text(render_svg(w))
    return EXIT_OK if outcome.feasible else EXIT_INFEASIBLE


def cmd_frontier(args) -> int:
    inst = _load(args)
    pairs = frontier(inst.ruler, args.algorithm)
    print(json.dumps([list(p) for p in pairs]))
    return EXIT_OK


def cmd_gen(args) -> int:
    inst = generate_instance(args.n, args.max_len, args.seed)
    sys.stdout.write(serialize_instance(inst, args.format or "json"))
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = run_bench(args.sizes, args.reps, args.algorithms, args.seed, args.max_len, args.warmup)
    write_csv(rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _load(args)
    lengths = inst.ruler
    p = Partition(args.breakpoints)
    check = validate_wrapping(lengths, p, inst.bound(args.allow_rotate))
    print(f"{check.verdict.value}: sides {','.join(map(str, check.sides))}")
    for v in check.violations:
        print(f"  violated: {v}")
    return EXIT_OK if check.ok else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ruler-wrap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", required=True, help="instance file, or - for stdin")
        p.add_argument("--format", choices=("json", "text"), help="default: sniff the content")

    p = sub.add_parser("solve", help="decide feasibility and print a witness")
    with_input(p)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="grid")
    p.add_argument("--allow-rotate", action="store_true")
    p.add_argument("--svg", metavar="OUT.svg")
    p.add_argument("--json", action="store_true", help="emit the result record as JSON")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("frontier", help="Pareto-minimal (height side, width side) pairs")
    with_input(p)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="grid")
    p.set_defaults(func=cmd_frontier)

    p = sub.add_parser("gen", help="write a random instance to stdout")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time solvers, CSV to stdout")
    p.add_argument("--sizes", type=_int_list, default=[50, 100, 200])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--algorithms", type=_name_list, default=["grid", "quartic"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=100)
    p.add_argument("--warmup", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="check a breakpoint list against an instance")
    with_input(p)
    p.add_argument("--breakpoints", type=_int_list, required=True)
    p.add_argument("--allow-rotate", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WrapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
