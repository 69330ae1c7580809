"""Command-line front end.

Exit codes: 0 success, 1 usage or I/O or parse error, 2 input not chordal.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable, Sequence

from nbhdpoly import oracle
from nbhdpoly.chordal import find_peo
from nbhdpoly.engine import ComputationResult, NotChordalError, compute
from nbhdpoly.graph import (
    Graph,
    GraphError,
    gen_basic,
    gen_interval_family,
    gen_random_chordal,
    gen_split,
    parse_edge_list,
)
from nbhdpoly.poly import render_json, render_text

EXIT_OK, EXIT_USAGE, EXIT_NOT_CHORDAL = 0, 1, 2
ORACLE_CHECK_MAX_N = 16
FAMILIES = ("path", "cycle", "complete", "star", "split", "interval", "random-chordal")


class UsageError(Exception):
    pass


def _read_graph(path: str | None) -> Graph:
    if path is None or path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def generate(family: str, params: Sequence[int], seed: int = 0) -> Graph:
    """Build a named family member; ``params`` follow the family's generator."""

    def need(k: int) -> list[int]:
        if len(params) != k:
            raise UsageError(f"{family} takes {k} parameter(s), got {len(params)}")
        return list(params)

    try:
        if family in ("path", "cycle", "complete", "star"):
            return gen_basic(family, *need(1))
        if family == "split":
            return gen_split(*need(1))
        if family == "interval":
            return gen_interval_family(*need(1))
        if family == "random-chordal":
            n, attach_max = need(2)
            return gen_random_chordal(n, attach_max, seed)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _result_json(g: Graph, res: ComputationResult, extra: dict | None = None) -> str:
    doc = {
        "n": g.n,
        "m": g.m,
        "coefficients": render_json(res.poly),
        "anchor_width": res.anchor_width,
        "peak_width": res.peak_width,
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, sort_keys=True)


def _not_chordal(exc: NotChordalError) -> int:
    print(
        f"not chordal: candidate elimination order fails at vertex {exc.certificate.vertex}",
        file=sys.stderr,
    )
    return EXIT_NOT_CHORDAL


def cmd_compute(args) -> int:
    g = _read_graph(args.input)
    try:
        res = compute(g, trace=sys.stderr if args.trace else None)
    except NotChordalError as exc:
        return _not_chordal(exc)

    verdict = None
    if args.oracle_check:
        if g.n <= ORACLE_CHECK_MAX_N:
            verdict = "MATCH" if oracle.brute_neighborhood_poly(g) == res.poly else "MISMATCH"
        else:
            verdict = "SKIP"

    if args.format == "json":
        print(_result_json(g, res, {"oracle": verdict} if verdict else None))
    else:
        print(render_text(res.poly))
        print(f"n: {g.n}")
        print(f"m: {g.m}")
        print(f"anchor_width: {res.anchor_width}")
        print(f"peak_width: {res.peak_width}")
        if verdict:
            print(f"oracle: {verdict}")
    return EXIT_OK if verdict != "MISMATCH" else EXIT_USAGE


def cmd_anchor_width(args) -> int:
    g = _read_graph(args.input)
    try:
        print(compute(g).anchor_width)
    except NotChordalError as exc:
        return _not_chordal(exc)
    return EXIT_OK


def cmd_generate(args) -> int:
    family = args.family or args.family_opt
    if family is None:
        raise UsageError("generate needs a family name")
    params = list(args.params) + list(args.param or [])
    sys.stdout.write(generate(family, params, args.seed).to_edge_list())
    return EXIT_OK


def _check(label: str, fn: Callable[[], bool]) -> str:
    try:
        ok = fn()
    except oracle.OracleLimitError:
        status = "SKIP"
    else:
        status = "PASS" if ok else "FAIL"
    print(f"{status} {label}")
    return status


def verify_graph(g: Graph, label: str, expected_width: Callable[[int], bool] | None = None) -> list[str]:
    """Run every engine-vs-oracle check on one graph; raises NotChordalError."""
    res = compute(g)
    order = list(reversed(find_peo(g)))
    statuses = [
        _check(f"{label} engine=brute", lambda: res.poly == oracle.brute_neighborhood_poly(g)),
        _check(
            f"{label} engine=attachment-replay",
            lambda: res.poly == oracle.replay_attachment(g, order),
        ),
        _check(f"{label} complement-identity", lambda: oracle.check_complement_identity(g)),
    ]
    if expected_width is not None:
        statuses.append(_check(f"{label} width={res.anchor_width}", lambda: expected_width(res.anchor_width)))
    return statuses


def _sweep(args) -> list[tuple[str, Graph, Callable[[int], bool] | None]]:
    family = args.family
    rng = random.Random(args.seed)
    graphs = []
    if family == "random-chordal":
        for _ in range(args.count):
            n = rng.randint(1, args.max_n)
            attach_max = rng.randint(1, 5)
            s = rng.getrandbits(64)
            graphs.append((f"random-chordal[n={n},k={attach_max},seed={s}]", gen_random_chordal(n, attach_max, s), None))
        return graphs
    params = args.param or []
    if family == "split":
        ms = params or range(1, 6)
        return [(f"split[{m}]", gen_split(m), lambda w, m=m: w == 2**m - 1) for m in ms]
    if family == "interval":
        ms = params or range(1, 4)
        return [
            (f"interval[{m}]", gen_interval_family(m), lambda w, m=m: m * m <= w <= (4 * m + 1) ** 2)
            for m in ms
        ]
    if family in ("path", "complete", "star", "cycle"):
        ns = params or range(1 if family != "cycle" else 3, args.max_n + 1)
        return [(f"{family}[{n}]", gen_basic(family, n), None) for n in ns]
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def cmd_verify(args) -> int:
    if args.family:
        targets = _sweep(args)
    else:
        targets = [(args.input or "stdin", _read_graph(args.input), None)]
    statuses: list[str] = []
    not_chordal = False
    for label, g, width_ok in targets:
        try:
            statuses += verify_graph(g, label, width_ok)
        except NotChordalError as exc:
            _not_chordal(exc)
            print(f"FAIL {label} not-chordal")
            not_chordal = True
    failed = statuses.count("FAIL")
    print(f"summary: {statuses.count('PASS')} pass, {failed} fail, {statuses.count('SKIP')} skip")
    if not_chordal:
        return EXIT_NOT_CHORDAL
    return EXIT_OK if failed == 0 else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbhdpoly", description="Neighborhood polynomials of chordal graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="neighborhood polynomial and anchor width")
    p.add_argument("--input", help="edge-list file (default: stdin)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--oracle-check", action="store_true", help="compare with brute force (n <= 16)")
    p.add_argument("--trace", action="store_true", help="write one line per attachment to stderr")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("anchor-width", help="print the anchor width only")
    p.add_argument("--input")
    p.set_defaults(func=cmd_anchor_width)

    p = sub.add_parser("generate", help="emit a family member as an edge list")
    p.add_argument("family", nargs="?", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--family", dest="family_opt", choices=FAMILIES)
    p.add_argument("--param", type=int, action="append")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check the engine against the oracles")
    p.add_argument("--input")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--param", type=int, action="append")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
