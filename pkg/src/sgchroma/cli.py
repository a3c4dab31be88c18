"""Command line entry point.

Exit codes: 0 completed, 1 usage or input error, 2 internal defect.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import witness
from .color import chi_b, verify_cover
from .core import BoundExceeded, ParseError, SignedGraph, canonical_form, is_balanced, parse, underlying
from .fraclp import LPError, chi_fb, verify_weighting
from .harness.report import report
from .harness.scan import CHECKS, ScanSpec, run_scan
from .minor import (
    CriticalDefect,
    has_even_odd_minor,
    has_ktilde_minor,
    has_ktilde_subdivision,
    has_odd_minor,
    negative_path_dichotomy,
    verify_certificate,
    verify_dichotomy,
    verify_even_odd,
)
from .quotient import balanced_quotient, verify_quotient

PATTERNS = ("ktilde", "odd", "evenodd", "subdivision")


class UsageError(Exception):
    pass


class Defect(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_graph(path: str) -> SignedGraph:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return parse(text)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _pattern(s: str) -> tuple[str, int]:
    try:
        kind, t = s.split(":")
        t = int(t)
    except ValueError:
        raise UsageError(f"pattern must look like kind:t, got {s!r}") from None
    if kind not in PATTERNS or t < 1:
        raise UsageError(f"pattern kind must be one of {PATTERNS} with t >= 1")
    return kind, t


def _vertex_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad vertex list {s!r}") from None


def cmd_parse(args) -> None:
    g = _read_graph(args.file)
    _emit({"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges], "canonical": canonical_form(g).hex()})


def cmd_balance(args) -> None:
    res = is_balanced(_read_graph(args.file))
    if res:
        _emit({"balanced": True, "switching": list(res.switching)})
    else:
        _emit({"balanced": False, "cycle": witness.to_json(res.cycle)})


def cmd_chib(args) -> None:
    g = _read_graph(args.file)
    k, cover = chi_b(g)
    if cover is None:
        _emit({"chi_b": "inf", "cover": None})
        return
    if verify_cover(g, cover):
        raise Defect("cover failed verification")
    _emit({"chi_b": k, "cover": [list(p) for p in cover.parts]})


def cmd_chifb(args) -> None:
    g = _read_graph(args.file)
    value, w = chi_fb(g)
    if verify_weighting(g, w):
        raise Defect("weighting failed verification")
    _emit({"chi_fb": witness.rational(value), "weighting": witness.to_json(w)})


def cmd_quotient(args) -> None:
    g = _read_graph(args.file)
    q = balanced_quotient(g)
    bad = verify_quotient(g, q)
    if bad:
        raise Defect(f"quotient failed verification: {bad}")
    _emit(witness.to_json(q))


def cmd_minor(args) -> None:
    kind, t = _pattern(args.pattern)
    g = _read_graph(args.file)
    if kind == "evenodd":
        G = underlying(g)
        cert = has_even_odd_minor(G, t)
        bad = cert and verify_even_odd(G, cert)
    else:
        search = {"ktilde": has_ktilde_minor, "odd": has_odd_minor, "subdivision": has_ktilde_subdivision}[kind]
        cert = search(g, t)
        bad = cert and verify_certificate(g, cert)
    if bad:
        raise Defect(f"certificate failed verification: {bad}")
    _emit({"pattern": f"{kind}:{t}", "found": cert is not None,
           "certificate": witness.to_json(cert) if cert else None})


def cmd_dichotomy(args) -> None:
    g = _read_graph(args.file)
    H = _vertex_list(args.H)
    res = negative_path_dichotomy(g, H, args.k)
    bad = verify_dichotomy(g, H, res)
    if bad:
        raise Defect(f"dichotomy result failed verification: {bad}")
    _emit(witness.to_json(res))


def cmd_scan(args) -> None:
    corpus = args.corpus or ("random" if args.seed is not None else "all")
    spec = ScanSpec(args.check, args.n, args.t, corpus, args.seed or 0, args.count)
    try:
        spec.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    record = run_scan(spec, workers=args.workers, checkpoint_dir=args.checkpoint)
    sys.stdout.buffer.write(report(record, args.format))
    sys.stdout.flush()


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sgchroma", description="Signed graph colouring, minors and scans.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, fn, help_ in (
        ("parse", cmd_parse, "parse a graph and print its canonical form"),
        ("balance", cmd_balance, "balance test with switching or negative cycle"),
        ("chib", cmd_chib, "balanced chromatic number with a cover"),
        ("chifb", cmd_chifb, "fractional balanced chromatic number"),
        ("quotient", cmd_quotient, "balanced quotient with its trace"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="graph in text format, '-' for stdin")
        sp.set_defaults(fn=fn)
    sp = sub.add_parser("minor", help="search for a minor or subdivision")
    sp.add_argument("file")
    sp.add_argument("--pattern", required=True, help="ktilde:t, odd:t, evenodd:t or subdivision:t")
    sp.set_defaults(fn=cmd_minor)
    sp = sub.add_parser("dichotomy", help="disjoint negative H-paths or a small hitting set")
    sp.add_argument("file")
    sp.add_argument("--H", required=True, help="vertices of H, comma separated")
    sp.add_argument("--k", required=True, type=int)
    sp.set_defaults(fn=cmd_dichotomy)
    sp = sub.add_parser("scan", help="run a bounded-order scan")
    sp.add_argument("--check", required=True, choices=sorted(CHECKS))
    sp.add_argument("--t", type=int, default=3)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=None, help="random corpus seed (implies --corpus random)")
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--corpus", choices=("all", "random"), default=None)
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sp.add_argument("--workers", type=int, default=None, help="worker processes (default: SGCHROMA_THREADS or 1)")
    sp.add_argument("--checkpoint", default=None, help="directory for resumable chunk results")
    sp.set_defaults(fn=cmd_scan)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except (UsageError, ParseError, BoundExceeded) as exc:
        print(f"sgchroma: {exc}", file=sys.stderr)
        return 1
    except (Defect, CriticalDefect, LPError) as exc:
        print(f"sgchroma: internal defect: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"sgchroma: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"sgchroma: internal defect: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
