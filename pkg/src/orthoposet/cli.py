"""Command line interface.

Subcommands: analyze, closure, pseudo, check, gen, dot.  Input posets come
from ``--fixture NAME`` or ``--file PATH`` (the text format of
:mod:`orthoposet.formats`); ``check`` and ``gen`` can also sweep generated
corpora.  Exit codes: 0 on success, 1 on input errors, 2 when a theorem
check fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .analysis import (
    FAIL,
    HYPOTHESIS_NOT_MET,
    PASS,
    analyze,
    generate_posets,
    product_closure_check,
)
from .errors import OrthoposetError
from .fixtures import fixture
from .formats import PosetDocument, parse_poset, render_poset, report_json, to_dot
from .ortho import closure_lattice, ortho_from_meet
from .poset import Poset
from .pseudo import pseudo_structure

THEOREMS = ("t1", "t2", "glivenko", "product", "forbidden")


def _add_input_args(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--fixture", help="built-in poset name, e.g. L1 or M(3)")
    group.add_argument("--file", help="path to a poset text file")


def _load_document(args: argparse.Namespace) -> PosetDocument:
    if args.fixture:
        return fixture(args.fixture)
    return parse_poset(Path(args.file).read_text(encoding="utf-8"))


def _corpus(args: argparse.Namespace) -> list[tuple[str, Poset]]:
    if getattr(args, "gen", None) is not None:
        raw = args.gen
        n = int(raw.split("=", 1)[1] if "=" in raw else raw)
        posets = generate_posets(n, args.mode, seed=args.seed, count=args.count)
        return [(f"{args.mode}{n}_{i}", p) for i, p in enumerate(posets)]
    doc = _load_document(args)
    return [(doc.name, doc.build())]


def cmd_analyze(args: argparse.Namespace) -> int:
    doc = _load_document(args)
    p = doc.build()
    report = analyze(p)
    if args.json:
        sys.stdout.write(report_json(doc, report, __version__))
    else:
        print(f"poset {doc.name}: {p.n} elements")
        flag_text = " ".join(
            f"{k}={'-' if v is None else ('yes' if v else 'no')}"
            for k, v in report.flags.items()
        )
        print(f"flags: {flag_text}")
        size_text = " ".join(
            f"{k}={'-' if v is None else v}" for k, v in report.sizes.items()
        )
        print(f"sizes: {size_text}")
        if report.star_table is not None:
            row = " ".join(report.star_table[x] for x in p.names)
            print(f"star: {' '.join(p.names)} -> {row}")
        if report.closed_sets is not None:
            shown = " ".join("{" + ",".join(s) + "}" for s in report.closed_sets)
            print(f"closed sets ({len(report.closed_sets)}): {shown}")
        print(
            "theorems: "
            + " ".join(f"{k}={v}" for k, v in report.theorems.items())
        )
    return 2 if FAIL in report.theorems.values() else 0


def cmd_closure(args: argparse.Namespace) -> int:
    doc = _load_document(args)
    lat = closure_lattice(ortho_from_meet(doc.build()))
    for k in range(len(lat)):
        print(lat.set_label(k))
    return 0


def cmd_pseudo(args: argparse.Namespace) -> int:
    doc = _load_document(args)
    p = doc.build()
    ps = pseudo_structure(p)
    if ps is None:
        from .pseudo import pseudocomplement

        witness = next(x for x in p.names if pseudocomplement(p, x) is None)
        print(f"not pseudocomplemented: witness {witness}")
        return 0
    table = ps.star_table()
    print("x  : " + " ".join(p.names))
    print("x* : " + " ".join(table[x] for x in p.names))
    print("skeleton: {" + ",".join(ps.skeleton().labels) + "}")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    corpus = _corpus(args)
    selected = THEOREMS if args.theorem == "all" else (args.theorem,)
    reports = None
    if any(t != "product" for t in selected):
        reports = [(name, analyze(p)) for name, p in corpus]
    any_failed = False
    for theorem in selected:
        passed = failed = skipped = 0
        if theorem == "product":
            pairs = [
                (corpus[i], corpus[j])
                for i in range(len(corpus))
                for j in range(i, len(corpus))
            ]
            for (name1, p1), (name2, p2) in pairs:
                if p1.n * p2.n > 4096 or p1.bottom_idx is None or p2.bottom_idx is None:
                    skipped += 1
                    continue
                check = product_closure_check(p1, p2)
                ok = check.closed_product_ok and (
                    not check.iso_checked or check.iso is not None
                )
                if ok:
                    passed += 1
                else:
                    failed += 1
                    print(f"  product failure: {name1} x {name2}", file=sys.stderr)
        else:
            for name, report in reports:
                verdict = report.theorems[theorem]
                if verdict == PASS:
                    passed += 1
                elif verdict == HYPOTHESIS_NOT_MET:
                    skipped += 1
                else:
                    failed += 1
                    print(f"  {theorem} failure: {name}", file=sys.stderr)
        total = passed + failed
        print(
            f"theorem {theorem}: checked={total} passed={passed} "
            f"failed={failed} hypothesis-not-met={skipped}"
        )
        any_failed = any_failed or failed > 0
    return 2 if any_failed else 0


def cmd_gen(args: argparse.Namespace) -> int:
    posets = generate_posets(args.n, args.mode, seed=args.seed, count=args.count)
    for i, p in enumerate(posets):
        doc = PosetDocument(
            name=f"{args.mode}{args.n}_{i}",
            labels=p.names,
            pairs=tuple(p.transitive_reduction()),
        )
        sys.stdout.write(render_poset(doc))
        sys.stdout.write("\n")
    return 0


def cmd_dot(args: argparse.Namespace) -> int:
    doc = _load_document(args)
    p = doc.build()
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    base = out_dir / f"{doc.name}.dot"
    base.write_text(to_dot(p, doc.name), encoding="utf-8")
    written = [base]
    if p.bottom_idx is not None:
        lat = closure_lattice(ortho_from_meet(p))
        cl_path = out_dir / f"{doc.name}.closure.dot"
        cl_path.write_text(to_dot(lat.as_poset(), f"{doc.name}_closure"), encoding="utf-8")
        written.append(cl_path)
    for path in written:
        print(path)
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthoposet",
        description="Analyze orthogonality-closed subsets of finite posets.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("analyze", help="classify a poset and run all checks")
    _add_input_args(sub)
    sub.add_argument("--json", action="store_true", help="emit the JSON report")
    sub.set_defaults(func=cmd_analyze)

    sub = subs.add_parser("closure", help="list the closed subsets")
    _add_input_args(sub)
    sub.set_defaults(func=cmd_closure)

    sub = subs.add_parser("pseudo", help="print the pseudocomplement table")
    _add_input_args(sub)
    sub.set_defaults(func=cmd_pseudo)

    sub = subs.add_parser("check", help="run a theorem suite over a corpus")
    sub.add_argument("--theorem", choices=THEOREMS + ("all",), default="all")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--fixture")
    group.add_argument("--file")
    group.add_argument("--gen", help="generate a corpus: a size like 6 or n=6")
    sub.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--count", type=int, default=100)
    sub.set_defaults(func=cmd_check)

    sub = subs.add_parser("gen", help="print generated posets in the text format")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--count", type=int, default=100)
    sub.set_defaults(func=cmd_gen)

    sub = subs.add_parser("dot", help="write Hasse diagrams as DOT files")
    _add_input_args(sub)
    sub.add_argument("--out", default=".", help="output directory")
    sub.set_defaults(func=cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (OrthoposetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
