"""qha: command-line front end.

Exit codes: 0 ok, 1 input error, 2 infinite-dimensional algebra,
3 property violation.
"""
from __future__ import annotations

import argparse
import os
import sys
import warnings

from . import checks, report
from .algebra import DEFAULT_BASIS_LIMIT, Algebra, build
from .errors import InfiniteDimensional, InputError, QhaError, UnknownVertex
from .families import FAMILIES, generate
from .presentation import load

EXIT_OK, EXIT_INPUT, EXIT_INFINITE, EXIT_VIOLATION = 0, 1, 2, 3


def basis_limit() -> int:
    raw = os.environ.get("QHA_BASIS_LIMIT")
    if raw is None:
        return DEFAULT_BASIS_LIMIT
    try:
        val = int(raw)
    except ValueError:
        raise InputError(f"QHA_BASIS_LIMIT must be an integer, got {raw!r}") from None
    if val < 1:
        raise InputError("QHA_BASIS_LIMIT must be positive")
    return val


def load_algebra(path: str) -> Algebra:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        p = load(text)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return build(p, basis_limit=basis_limit())


def parse_V(alg: Algebra, raw: str | None) -> tuple[str, ...]:
    if raw is None:
        return ()
    V = tuple(v.strip() for v in raw.split(",") if v.strip())
    for v in V:
        if v not in alg.vertex_index:
            raise UnknownVertex(f"unknown vertex {v!r} in --V")
    return V


def emit(args, doc, text: str) -> None:
    sys.stdout.write(report.dumps(doc) if args.json else text)


def cmd_analyze(args) -> int:
    alg = load_algebra(args.file)
    sec = report.algebra_section(alg)
    emit(args, {"algebra": sec}, report.text_algebra(sec))
    return EXIT_OK


def cmd_simples(args) -> int:
    alg = load_algebra(args.file)
    rows = report.simples_section(alg)
    classes = report.classes_section(alg)
    text = report.text_simples(rows)
    text += f"S^<inf = {{{', '.join(classes['finitePd'])}}}\n"
    emit(args, {"simples": rows, "classes": classes}, text)
    return EXIT_OK


def cmd_layerlen(args) -> int:
    alg = load_algebra(args.file)
    sec = report.layer_section(alg, parse_V(alg, args.V))
    emit(args, {"layer": sec}, report.text_layer(sec))
    return EXIT_OK


def cmd_bounds(args) -> int:
    alg = load_algebra(args.file)
    V = parse_V(alg, args.V)
    doc = report.full_report(alg, V, optimize=args.optimize)
    emit(args, doc, report.text_full(doc))
    return EXIT_OK


def cmd_gen(args) -> int:
    sys.stdout.write(generate(args.family, args.m))
    return EXIT_OK


def cmd_check(args) -> int:
    alg = load_algebra(args.file)
    rep = checks.run_all(alg, seed=args.seed, cases=args.cases)
    for name, violations in rep.results.items():
        print(f"{'ok  ' if not violations else 'FAIL'} {name}")
        for v in violations[:10]:
            print(f"       {v}")
        if len(violations) > 10:
            print(f"       ... {len(violations) - 10} more")
    if rep.ok:
        print(f"all properties hold (seed {args.seed}, {args.cases} cases)")
        return EXIT_OK
    print(f"reproduce with: qha check {args.file} --seed {args.seed} --cases {args.cases}")
    return EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qha", description="Homological invariants and dimension "
                                 "bounds for monomial quiver algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, help_, fn):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="presentation file")
        p.add_argument("--json", action="store_true", help="print the machine-readable document")
        p.set_defaults(fn=fn)
        return p

    with_file("analyze", "dimension, Loewy length and basis size", cmd_analyze)
    with_file("simples", "pd/id of every simple module", cmd_simples)
    p = with_file("layerlen", "t_V-radical layer lengths of the projectives", cmd_layerlen)
    p.add_argument("--V", metavar="LIST", help="comma-separated vertex ids (default: empty)")
    p = with_file("bounds", "derived and singularity category bounds", cmd_bounds)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--V", metavar="LIST", help="comma-separated vertex ids (default: empty)")
    g.add_argument("--optimize", action="store_true", help="search all V for the best bounds")

    p = sub.add_parser("gen", help="print a presentation from a parameterized family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("check", help="run the invariant and cross-engine suites")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cases", type=int, default=50)
    p.set_defaults(fn=cmd_check)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse uses 2 for usage errors; here 2 means infinite-dimensional
        return EXIT_INPUT if e.code == 2 else (e.code or 0)
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InfiniteDimensional as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INFINITE
    except QhaError as e:  # basis limit, too many simples for --optimize
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
