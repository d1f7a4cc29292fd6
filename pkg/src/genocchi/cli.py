"""Command-line interface.

Subcommands: seq (integer sequences), poly (q-polynomials), enumerate
(stream combinatorial objects), count (brute-force oracles), series
(continued-fraction expansions), verify (the cross-check matrix).

Exit status: 0 success, 1 verification failures, 2 usage error, 3 resource
limit exceeded.  All output is deterministic; JSON payloads use decimal
strings for big integers and round-trip byte-identically.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .contfrac import NAMED_FRACTIONS, expand, spec_from_dict
from .dellac import enumerate_dellac
from .admissible import enumerate_admissible
from .errors import ResourceLimitError
from .exactalg import IntPoly, PowerSeries
from .hanzeng import hanzeng_barc
from .motzkin import enumerate_motzkin, h_poly_fermionic, tilde_h
from .oracles import count_dumont, count_triangle_pairs
from .seidel import genocchi_first_sequence, h_sequence, median_sequence
from .verify import CROSSCHECK_MAX_N, crosscheck

USAGE_ERROR = 2
RESOURCE_ERROR = 3


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _print_poly(p: IntPoly, as_json: bool) -> None:
    if as_json:
        print(_dump({"coeffs": p.coeff_strings()}))
    else:
        print(p.render())


def _print_series(series: PowerSeries, as_json: bool) -> None:
    if as_json:
        print(
            _dump(
                {
                    "order": series.order,
                    "coeffs": [{"coeffs": c.coeff_strings()} for c in series.coeffs],
                }
            )
        )
        return
    if all(c.is_zero or c.degree == 0 for c in series.coeffs):
        print(" ".join(str(c.constant_term) for c in series.coeffs))
    else:
        for n, c in enumerate(series.coeffs):
            print(f"s^{n}: {c.render()}")


def _cmd_seq(args) -> int:
    if args.count < 1:
        raise ValueError("--count must be positive")
    values = {
        "h": h_sequence,
        "H": median_sequence,
        "genocchi1": genocchi_first_sequence,
    }[args.name](args.count)
    if args.json:
        payload: dict = {"name": args.name}
        if args.name == "H":
            payload["label"] = "H_{2n-1}"
        payload["values"] = [str(v) for v in values]
        print(_dump(payload))
    else:
        print(" ".join(str(v) for v in values))
    return 0


def _cmd_poly(args) -> int:
    which = {"hq": h_poly_fermionic, "tildehq": tilde_h, "barc": hanzeng_barc}
    _print_poly(which[args.name](args.n), args.json)
    return 0


def _cmd_enumerate(args) -> int:
    limit = args.limit if args.limit is not None else None
    shown = 0

    def emit(text_render: str, json_dict: dict) -> None:
        nonlocal shown
        if limit is not None and shown >= limit:
            return
        shown += 1
        if args.json:
            print(_dump(json_dict))
        else:
            print(text_render)
            if args.model == "dellac":
                print()

    if args.model == "dellac":
        total = enumerate_dellac(args.n, lambda c: emit(c.render(), c.json_dict()))
    elif args.model == "admissible":
        total = enumerate_admissible(args.n, lambda a: emit(a.render(), a.json_dict()))
    else:
        total = enumerate_motzkin(args.n, lambda p: emit(p.render(), p.json_dict()))

    if args.json:
        print(_dump({"total": str(total)}))
    else:
        print(f"total {total}")
    return 0


def _cmd_count(args) -> int:
    fn = {"dumont": count_dumont, "triangles": count_triangle_pairs}[args.model]
    print(fn(args.n))
    return 0


def _cmd_series(args) -> int:
    if args.name == "custom":
        if not args.spec:
            raise ValueError("series custom requires --spec FILE")
        with open(args.spec, encoding="utf-8") as fh:
            spec = spec_from_dict(json.load(fh))
    else:
        if args.spec:
            raise ValueError("--spec applies only to 'series custom'")
        spec = NAMED_FRACTIONS[args.name]()
    _print_series(expand(spec, args.order), args.json)
    return 0


def _cmd_verify(args) -> int:
    started = time.monotonic()
    report = crosscheck(args.n_max, seed=args.seed)
    if args.json:
        print(_dump(report.json_dict()))
    else:
        print(report.table())
        elapsed = time.monotonic() - started
        print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    return 1 if report.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genocchi",
        description="Median Genocchi numbers and their q-analogues, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print the first terms of a sequence")
    p.add_argument("name", choices=("h", "H", "genocchi1"))
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_seq)

    p = sub.add_parser("poly", help="print one q-polynomial")
    p.add_argument("name", choices=("hq", "tildehq", "barc"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("enumerate", help="stream combinatorial objects")
    p.add_argument("model", choices=("dellac", "admissible", "motzkin"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("count", help="run a brute-force oracle count")
    p.add_argument("model", choices=("dumont", "triangles"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("series", help="expand a continued fraction")
    p.add_argument("name", choices=("f1", "f2", "hn", "viennot", "custom"))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--spec", default=None, help="JSON spec file for 'custom'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("verify", help="run the cross-check matrix")
    p.add_argument("--n-max", type=int, default=CROSSCHECK_MAX_N - 1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RESOURCE_ERROR
    except (ValueError, OSError) as exc:  # includes malformed JSON spec files
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
