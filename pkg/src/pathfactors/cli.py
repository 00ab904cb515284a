"""Command-line interface.

Exit codes: 0 ok, 1 property fails (verify/hunt), 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Iterable

from . import families
from .corpus import CorpusSpec, corpus_stream
from .factor import PathFactor, certify
from .graph import BudgetExceeded, Graph, GraphError, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .report import (
    analysis_report,
    certificate_doc,
    hunt_doc,
    robustness_doc,
    sigma_doc,
    toughness_doc,
)
from .robustness import DEFAULT_BUDGET, THEOREMS, hunt, is_critical, is_deleted, sigma_k
from .sun import sun_toughness

EXIT_OK, EXIT_FAILS, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("pathfactors")


class InputError(Exception):
    pass


def _read_inputs(args: argparse.Namespace) -> list[tuple[str, Graph]]:
    if getattr(args, "family", None):
        g = families.generate_family(args.family, **_family_params(args))
        return [(f"family:{args.family}", g)]
    if not args.input:
        raise InputError("give a graph6 string, a file path, or --family")
    src = args.input
    if os.path.exists(src):
        with open(src, encoding="ascii") as fh:
            text = fh.read()
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        if args.format == "edgelist" or (args.format == "auto" and first.isdigit() and " " not in first):
            return [(src, parse_edge_list(text))]
        lines = [ln for ln in text.splitlines() if ln.strip()]
        return [(f"{src}:{i + 1}", parse_graph6(ln)) for i, ln in enumerate(lines)]
    return [(src, parse_graph6(src))]


def _family_params(args: argparse.Namespace) -> dict:
    params = {}
    for name in ("n", "a", "b", "l", "m"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    return params


def _emit(doc, args: argparse.Namespace) -> None:
    indent = 2 if getattr(args, "pretty", False) else None
    sys.stdout.write(json.dumps(doc, indent=indent, sort_keys=True) + "\n")


def cmd_analyze(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for source, g in _read_inputs(args):
        doc = analysis_report(g, source, max_n=args.max_n, timing=not args.no_timing)
        if doc["skipped"]:
            code = EXIT_BUDGET
        _emit(doc, args)
    return code


def cmd_certify(args: argparse.Namespace) -> int:
    for source, g in _read_inputs(args):
        cert = certify(g, args.max_n)
        _emit(
            {
                "input": {"source": source, "graph6": to_graph6(g)},
                "has_p3_factor": isinstance(cert, PathFactor),
                "certificate": certificate_doc(g, cert),
            },
            args,
        )
    return EXIT_OK


def cmd_toughness(args: argparse.Namespace) -> int:
    for source, g in _read_inputs(args):
        doc = toughness_doc(sun_toughness(g, args.max_n))
        doc["input"] = {"source": source, "graph6": to_graph6(g)}
        _emit(doc, args)
    return EXIT_OK


def cmd_sigma(args: argparse.Namespace) -> int:
    for source, g in _read_inputs(args):
        doc = sigma_doc(sigma_k(g, args.k), args.k)
        doc["input"] = {"source": source, "graph6": to_graph6(g)}
        _emit(doc, args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for source, g in _read_inputs(args):
        if args.property == "critical":
            if args.l is None:
                raise InputError("verify critical needs --l")
            v = is_critical(g, args.l, args.budget, args.max_n, full_listing=args.all)
        else:
            if args.m is None:
                raise InputError("verify deleted needs --m")
            v = is_deleted(g, args.m, args.budget, args.max_n, full_listing=args.all)
        doc = robustness_doc(v)
        doc["input"] = {"source": source, "graph6": to_graph6(g)}
        _emit(doc, args)
        if not v.holds:
            code = EXIT_FAILS
    return code


def _hunt_corpus(args: argparse.Namespace) -> CorpusSpec:
    if args.exhaustive is not None:
        return CorpusSpec("exhaustive", n=args.exhaustive)
    if args.gnp is not None:
        if args.seed is None:
            raise InputError("--gnp needs an explicit --seed")
        n, p = args.gnp
        return CorpusSpec("gnp", n=int(n), p=float(p), seed=args.seed, count=args.count)
    if args.input:
        return CorpusSpec("file", path=args.input)
    raise InputError("hunt needs a graph6 file, --exhaustive N, or --gnp N P --seed S")


def cmd_hunt(args: argparse.Namespace) -> int:
    param = args.l if args.theorem in ("T2", "T3") else args.m
    if param is None:
        raise InputError(f"{args.theorem} needs --{'l' if args.theorem in ('T2', 'T3') else 'm'}")
    spec = _hunt_corpus(args)

    def progress(done: int) -> None:
        if done % args.progress_every == 0:
            print(f"[hunt {args.theorem}] {done} graphs checked", file=sys.stderr, flush=True)

    report = hunt(
        corpus_stream(spec),
        args.theorem,
        param,
        jobs=args.jobs,
        budget=args.budget,
        max_n=args.max_n,
        corpus_name=spec.describe(),
        progress=progress,
    )
    _emit(hunt_doc(report), args)
    if report.counterexamples:
        return EXIT_FAILS
    return EXIT_BUDGET if report.skipped else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    g = families.generate_family(args.family, **_family_params(args))
    if args.format == "edgelist":
        sys.stdout.write(to_edge_list(g))
    else:
        sys.stdout.write(to_graph6(g) + "\n")
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph6 string or path to a graph6 / edge-list file")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--family", choices=families.INTEGER_FAMILIES, help="generate the input instead")
    _add_family_params(p)


def _add_family_params(p: argparse.ArgumentParser) -> None:
    # --l / --m double as the verify parameter
    for name in ("n", "a", "b", "l", "m"):
        p.add_argument(f"--{name}", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathfactors", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="every quantity plus a factor certificate")
    _add_input(p)
    p.add_argument("--max-n", type=int, default=20, help="exact-mode vertex bound")
    p.add_argument("--no-timing", action="store_true", help="omit timing for byte-stable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="path factor or obstruction")
    _add_input(p)
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("toughness", help="exact sun toughness with witness")
    _add_input(p)
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_toughness)

    p = sub.add_parser("sigma", help="minimum degree sum over independent k-sets")
    _add_input(p)
    p.add_argument("--k", type=int, default=3)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("verify", help="(P>=3,l)-critical or (P>=3,m)-deleted check")
    props = p.add_subparsers(dest="property", required=True)
    for name, what in (("critical", "every l-vertex deletion"), ("deleted", "every m-edge deletion")):
        q = props.add_parser(name, help=f"P>=3-factor after {what}")
        _add_input(q)
        q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        q.add_argument("--max-n", type=int, default=20)
        q.add_argument("--all", action="store_true", help="list every failing deletion set")
        q.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", help="search a corpus for counterexamples to a theorem")
    p.add_argument("input", nargs="?", help="graph6 file")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--exhaustive", type=int, metavar="N")
    p.add_argument("--gnp", nargs=2, metavar=("N", "P"))
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--progress-every", type=int, default=5000)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("gen", help="emit a family member as graph6")
    p.add_argument("--family", choices=families.INTEGER_FAMILIES, required=True)
    _add_family_params(p)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        _emit({"skipped": str(exc)}, args)
        return EXIT_BUDGET
    except (GraphError, InputError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
