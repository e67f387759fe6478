"""Command line entry point: ``menergy <subcommand> ...``.

Exit status is 0 on success, 1 when a verification cell fails and 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import families as fam
from .enumerate import EnumQuery, count_class, dump_jsonl, enumerate_class, enumerate_connected
from .graph import Graph, GraphClass, GraphError, format_graph_text, key_hex, parse_graph_text
from .matching import DEFAULT_CACHE, IntPolynomial, default_cache_path, matching_polynomial, matching_vector
from .order import compare_coeff, compare_matching
from .spectral import Method, QuadratureError, char_poly, energy_report
from .roots import RootIsolationError
from .verify import (IDENTITIES, THEOREMS, CellRangeError, all_passed, render_report,
                     verify_identity, verify_theorem)


class UsageError(Exception):
    pass


def _parse_range(text: Optional[str]):
    if text is None:
        return None
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad range {text!r}; use A..B or A") from None


def _load_graph(path: Optional[str], spec: Optional[str], which: str = "") -> Graph:
    if (path is None) == (spec is None):
        raise UsageError(f"give exactly one of --graph{which} or --family{which}")
    if spec is not None:
        return fam.build_from_text(spec)
    try:
        with open(path) as fh:
            return parse_graph_text(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _positive(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def _at_least_one(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="menergy", description=__doc__.splitlines()[0])
    parser.add_argument("--cache", help="matching-vector cache file (loaded first, appended on exit)")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, second=False):
        p.add_argument("--graph", help="graph text file")
        p.add_argument("--family", help="family spec, e.g. U:n=8,d=6")
        if second:
            p.add_argument("--graph2")
            p.add_argument("--family2")

    def output_args(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out")

    p = sub.add_parser("poly", help="matching polynomial and vector")
    graph_args(p)
    output_args(p)

    p = sub.add_parser("charpoly", help="characteristic polynomial")
    graph_args(p)
    output_args(p)

    p = sub.add_parser("energy", help="eigenvalues, E, ME, TRE as JSON")
    graph_args(p)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.ROOTS.value)
    p.add_argument("--tol", type=_positive, default=1e-8)
    p.add_argument("--out")

    p = sub.add_parser("compare", help="quasi-order between two graphs")
    graph_args(p, second=True)
    p.add_argument("--order", choices=("matching", "coeff"), default="matching")
    p.add_argument("--out")

    p = sub.add_parser("enum", help="dump a class as JSON lines")
    p.add_argument("--kind", choices=("tree", "unicyclic", "bicyclic", "connected"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--count", action="store_true", help="print only the class size")
    p.add_argument("--out")

    p = sub.add_parser("family", help="build a named family member")
    p.add_argument("--family")
    p.add_argument("--list", action="store_true", help="print the family catalog as JSON")
    p.add_argument("--out")

    for name, registry in (("verify", THEOREMS), ("identities", IDENTITIES)):
        p = sub.add_parser(name, help=f"run {'claim' if name == 'verify' else 'identity'} checks")
        p.add_argument("--claim" if name == "verify" else "--id", dest="ids", action="append",
                       help=f"one of {', '.join(registry)} or 'all' (repeatable)")
        p.add_argument("--n", help="n range A..B (defaults per claim)")
        p.add_argument("--d", help="d range A..B")
        p.add_argument("--jobs", type=_at_least_one, default=1)
        p.add_argument("--timing", action="store_true", help="emit wall times (output no longer reproducible)")
        output_args(p, ("json", "csv"))
    return parser


def _cmd_poly(args) -> int:
    g = _load_graph(args.graph, args.family)
    poly = matching_polynomial(g)
    vec = matching_vector(g)
    if args.format == "json":
        text = json.dumps({"polynomial": poly.format("u"), "coefficients": poly.to_json(),
                           "matching_vector": list(vec)}) + "\n"
    else:
        text = f"{poly.format('u')}\nm = {list(vec)}\n"
    _write(text, args.out)
    return 0


def _cmd_charpoly(args) -> int:
    g = _load_graph(args.graph, args.family)
    cp = char_poly(g)
    poly = IntPolynomial(cp.a)
    if args.format == "json":
        text = json.dumps({"polynomial": poly.format("x"), "coefficients": list(cp.a), "b": list(cp.b)}) + "\n"
    else:
        text = f"{poly.format('x')}\nb = {list(cp.b)}\n"
    _write(text, args.out)
    return 0


def _cmd_energy(args) -> int:
    g = _load_graph(args.graph, args.family)
    report = energy_report(g, args.method, args.tol)
    _write(report.to_json() + "\n", args.out)
    return 0


def _cmd_compare(args) -> int:
    g = _load_graph(args.graph, args.family)
    h = _load_graph(args.graph2, args.family2, "2")
    res = compare_matching(g, h) if args.order == "matching" else compare_coeff(g, h)
    _write(json.dumps(res.to_dict()) + "\n", args.out)
    return 0


_KINDS = {"tree": GraphClass.TREE, "unicyclic": GraphClass.UNICYCLIC, "bicyclic": GraphClass.BICYCLIC}


def _cmd_enum(args) -> int:
    if args.kind == "connected":
        if args.d is not None:
            raise UsageError("--d is not supported with --kind connected")
        graphs = list(enumerate_connected(args.n))
    else:
        q = EnumQuery(_KINDS[args.kind], args.n, args.d)
        if args.count:
            _write(f"{count_class(q)}\n", args.out)
            return 0
        graphs = list(enumerate_class(q))
    if args.count:
        _write(f"{len(graphs)}\n", args.out)
        return 0
    if args.out:
        with open(args.out, "w") as fh:
            dump_jsonl(graphs, fh)
    else:
        dump_jsonl(graphs, sys.stdout)
    return 0


def _cmd_family(args) -> int:
    if args.list:
        _write(json.dumps([t.to_dict() for t in fam.list_supported()], indent=2) + "\n", args.out)
        return 0
    if not args.family:
        raise UsageError("give --family SPEC or --list")
    g = fam.build_from_text(args.family)
    _write(f"# {args.family} key={key_hex(g)}\n" + format_graph_text(g), args.out)
    return 0


def _expand_ids(ids, registry) -> list[str]:
    if not ids:
        raise UsageError(f"choose at least one of: {', '.join(registry)}")
    out = []
    for i in ids:
        if i == "all":
            out.extend(registry)
        elif i in registry:
            out.append(i)
        else:
            raise UsageError(f"unknown id {i!r}; known: {', '.join(registry)}")
    return list(dict.fromkeys(out))


def _cmd_checks(args, registry, runner) -> int:
    n_range, d_range = _parse_range(args.n), _parse_range(args.d)
    reports = []
    for cid in _expand_ids(args.ids, registry):
        reports.extend(runner(cid, n_range, d_range, args.jobs))
    _write(render_report(reports, args.format, include_timing=args.timing), args.out)
    return 0 if all_passed(reports) else 1


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cache_path = args.cache or default_cache_path()
    try:
        if cache_path:
            DEFAULT_CACHE.load(cache_path)
        handlers = {
            "poly": _cmd_poly,
            "charpoly": _cmd_charpoly,
            "energy": _cmd_energy,
            "compare": _cmd_compare,
            "enum": _cmd_enum,
            "family": _cmd_family,
            "verify": lambda a: _cmd_checks(a, THEOREMS, verify_theorem),
            "identities": lambda a: _cmd_checks(a, IDENTITIES, verify_identity),
        }
        status = handlers[args.command](args)
        if cache_path:
            DEFAULT_CACHE.save(cache_path)
        return status
    except (UsageError, GraphError, CellRangeError, ValueError, OSError) as exc:
        print(f"menergy: error: {exc}", file=sys.stderr)
        return 2
    except (RootIsolationError, QuadratureError) as exc:
        print(f"menergy: numerical failure: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
