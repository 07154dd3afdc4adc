"""Command-line interface: ``invsort {sort,count,gentree,verify}``.

Results go to standard output, diagnostics to standard error.  The JSON
format wraps the result in a run report; its ``result`` field depends only
on the arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import __version__
from .core import ResourceLimitError, Universe, enumerate_universe, format_word, is_sorted, parse_word
from .gentree import RuleSet, format_counts, level_counts
from .machines import (
    KINDS,
    MachineConfig,
    UnsupportedMachineError,
    format_trace,
    simulate,
)
from .patterns import avoids_all, count_avoiders, format_basis, parse_basis
from .verify import SUITES, run_suite

MACHINE_ALIASES = {
    "tortoise": "tortoise-pop-stack",
    "21-pop-stack": "generalized-pop-stack",
    "generalized": "generalized-pop-stack",
}


def _machine(args) -> MachineConfig:
    kind = MACHINE_ALIASES.get(args.machine, args.machine)
    r = args.r if args.r is not None else (2 if kind == "generalized-pop-stack" else 1)
    depth = args.depth
    if kind == "generalized-pop-stack" and depth is None:
        depth = 2
    return MachineConfig(kind, depth=depth, r=r)


def _report(command: str, params: dict, result, started: float) -> str:
    return json.dumps(
        {
            "command": command,
            "parameters": params,
            "result": result,
            "elapsed_seconds": round(time.perf_counter() - started, 6),
            "version": __version__,
        },
        indent=2,
    )


def cmd_sort(args) -> int:
    started = time.perf_counter()
    m = _machine(args)
    w = parse_word(args.input)
    trace: list | None = [] if args.trace else None
    out = simulate(w, m, trace)
    ok = is_sorted(out)
    if args.format == "json":
        result = {"output": format_word(out), "sorted": ok}
        if trace is not None:
            result["trace"] = [
                {"action": s.action, "cursor": s.cursor, "stack": list(s.stack), "output": list(s.output)} for s in trace
            ]
        print(_report("sort", {"machine": str(m), "input": format_word(w)}, result, started))
    else:
        if trace is not None:
            print(format_trace(trace))
        print(f"{format_word(out)} sorted={'true' if ok else 'false'}")
    return 0


def _universe(args, n: int) -> Universe:
    if args.universe == "inv":
        return Universe.inversion_sequences(n)
    if args.universe == "perm":
        return Universe.permutations(n)
    if args.k is None:
        raise ValueError("--universe words needs --k")
    return Universe.words(n, args.k)


def cmd_count(args) -> int:
    started = time.perf_counter()
    if args.basis is None and args.machine is None:
        raise ValueError("give --basis, --machine or both")
    if args.n > args.max_n:
        raise ResourceLimitError(f"--n {args.n} exceeds --max-n {args.max_n}")
    basis = parse_basis(args.basis) if args.basis else None
    m = _machine(args) if args.machine else None
    start = args.start if args.start is not None else (0 if args.universe == "words" else 1)
    counts = []
    mismatch = None
    for n in range(start, args.n + 1):
        u = _universe(args, n)
        if m is None:
            counts.append(count_avoiders(u, basis, workers=args.workers, max_nodes=args.max_states))
            continue
        c = 0
        for w in enumerate_universe(u, limit=args.max_states):
            ok = is_sorted(simulate(w, m))
            c += ok
            if basis is not None and mismatch is None and ok != avoids_all(w, basis):
                mismatch = {"word": format_word(w), "sortable": ok, "avoids": not ok}
        counts.append(c)
    offset = args.offset if args.offset is not None else start
    if args.format == "json":
        params = {"universe": args.universe, "n": args.n, "k": args.k, "start": start,
                  "basis": format_basis(basis) if basis else None, "machine": str(m) if m else None}
        result = {"counts": counts}
        if basis is not None and m is not None:
            result["agree"] = mismatch is None
            result["counterexample"] = mismatch
        print(_report("count", params, result, started))
    else:
        print(format_counts(counts, args.format, offset))
        if mismatch is not None:
            print(f"machine and basis disagree at {mismatch['word']}", file=sys.stderr)
    return 0 if mismatch is None else 1


def cmd_gentree(args) -> int:
    started = time.perf_counter()
    rs = RuleSet.parse(args.ruleset)
    counts = level_counts(rs, args.levels, guard=args.max_n)
    if args.format == "json":
        print(_report("gentree", {"ruleset": rs.value, "levels": args.levels}, counts, started))
    else:
        offset = args.offset if args.offset is not None else 1
        print(format_counts(counts, args.format, offset))
    return 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    results = run_suite(args.suite, args.max_n, args.max_k)
    for r in results:
        print(r.line(), file=sys.stderr)
    passed = all(r.passed for r in results)
    print(
        _report(
            "verify",
            {"suite": args.suite, "max_n": args.max_n, "max_k": args.max_k},
            {"passed": passed, "checks": [r.to_dict() for r in results]},
            started,
        )
    )
    return 0 if passed else 1


def _add_machine_flags(p, required: bool) -> None:
    names = sorted(set(KINDS) | set(MACHINE_ALIASES))
    p.add_argument("--machine", required=required, choices=names,
                   help="device to simulate")
    p.add_argument("--depth", type=int, default=None, help="max distinct values held (default unbounded)")
    p.add_argument("--r", type=int, default=None, help="value positions a push may target")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invsort", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"invsort {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="run one word through a sorting device")
    _add_machine_flags(p, required=True)
    p.add_argument("--input", required=True, help='word, e.g. "0,1,1,0" or "0110"')
    p.add_argument("--trace", action="store_true", help="print each push/pop step")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("count", help="count avoiders and/or sortable words by length")
    p.add_argument("--universe", choices=["inv", "words", "perm"], default="inv")
    p.add_argument("--n", type=int, required=True, help="largest length")
    p.add_argument("--k", type=int, default=None, help="alphabet size for --universe words")
    p.add_argument("--basis", default=None, help='forbidden patterns, e.g. "120+201+1010"')
    _add_machine_flags(p, required=False)
    p.add_argument("--start", type=int, default=None,
                   help="smallest length (default 1, or 0 for words)")
    p.add_argument("--format", choices=["text", "json", "bfile", "csv"], default="text")
    p.add_argument("--offset", type=int, default=None, help="index of the first term in bfile/csv")
    p.add_argument("--max-n", type=int, default=12, help="refuse lengths above this")
    p.add_argument("--max-states", type=int, default=10_000_000,
                   help="search/enumeration budget per length")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes for basis counting (capped by INVSORT_THREADS)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("gentree", help="level counts of a generating tree")
    p.add_argument("--ruleset", required=True, choices=[r.value for r in RuleSet])
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--format", choices=["json", "bfile", "csv", "text"], default="json")
    p.add_argument("--offset", type=int, default=None)
    p.add_argument("--max-n", type=int, default=200, help="refuse more levels than this")
    p.set_defaults(func=cmd_gentree)

    p = sub.add_parser("verify", help="run an exhaustive cross-check suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--max-k", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, UnsupportedMachineError, ResourceLimitError) as exc:
        print(f"invsort {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
