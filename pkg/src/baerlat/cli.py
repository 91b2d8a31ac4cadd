"""Command-line front end.

Exit codes: 0 success or all PASS, 1 a FAIL or a counterexample was found,
2 usage, parse or validation errors (reported on stderr).
"""

from __future__ import annotations

import argparse
import sys

from . import baer as bz
from . import elements as el
from .corpus.enumeration import MAX_N, EnumerationConfig
from .corpus.generators import LatticeSpecifier
from .corpus.mlat import emit_dot, emit_mlat
from .errors import ParseError, StructureError, UnknownFixture, UnknownPredicate, ValidationError
from .quantale import is_reduced
from .verifier import run_suite, search


class UsageError(Exception):
    pass


def _load(spec):
    try:
        return LatticeSpecifier.parse(spec).build()
    except (OSError, UnicodeDecodeError) as e:
        raise UsageError(f"cannot read {spec}: {e}") from e
    except (ParseError, ValidationError) as e:
        raise UsageError(f"{spec}: {e}") from e
    except UnknownFixture as e:
        raise UsageError(e.args[0]) from e
    except (StructureError, ValueError) as e:
        raise UsageError(f"{spec}: {e}") from e


def _element(M, token):
    try:
        return M.lookup(token)
    except (KeyError, ValueError, IndexError):
        raise UsageError(f"no element {token!r}") from None


def _yes(flag):
    return "yes" if flag else "no"


def cmd_validate(args, out):
    M = _load(args.file)
    print(f"ok: {M.n} elements", file=out)
    return 0


def cmd_info(args, out):
    M = _load(args.file)
    reduced = is_reduced(M)
    print(f"size: {M.n}", file=out)
    print(f"bottom: {M.label(M.bottom)}", file=out)
    print(f"top: {M.label(M.top)}", file=out)
    print(f"reduced: {_yes(reduced)}", file=out)
    print(f"semisimple: {_yes(el.is_semisimple(M))}", file=out)
    print(f"domain: {_yes(el.is_domain(M))}", file=out)
    # B-multiplicativity is only meaningful on reduced lattices
    bm = _yes(bz.is_B_multiplicative(M)) if reduced else "n/a (not reduced)"
    print(f"B-multiplicative: {bm}", file=out)
    return 0


def cmd_baer(args, out):
    M = _load(args.file)
    print(" ".join(M.label(b) for b in sorted(bz.baer_elements(M))), file=out)
    return 0


def cmd_closure(args, out):
    M = _load(args.file)
    a = _element(M, args.element)
    print(f"cz: {M.label(bz.baer_closure(M).table[a])}", file=out)
    print(f"d: {M.label(bz.d_closure(M).table[a])}", file=out)
    return 0


def cmd_radical(args, out):
    M = _load(args.file)
    print(M.label(el.radical(M, _element(M, args.element))), file=out)
    return 0


def cmd_annihilator(args, out):
    M = _load(args.file)
    print(M.label(el.annihilator(M, _element(M, args.element))), file=out)
    return 0


def cmd_frame(args, out):
    M = _load(args.file)
    try:
        F = bz.baer_frame(M)
    except StructureError as e:
        print(f"error: Baer elements do not form a frame: {e}", file=sys.stderr)
        return 1
    out.write(emit_mlat(F.frame))
    return 0


def cmd_check(args, out):
    M = _load(args.file)
    only = [t.strip() for part in args.only or [] for t in part.split(",") if t.strip()]
    try:
        report = run_suite(M, only=only or None, name=args.file)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    out.write(report.to_json() if args.json else report.to_text())
    return 0 if report.ok else 1


def cmd_gen(args, out):
    spec = args.kind if not args.params else f"{args.kind}:{args.params[0]}"
    if args.kind == "product":
        if len(args.params) != 2:
            raise UsageError("product needs two lattice specifiers")
        spec = "*".join(args.params)
    elif args.kind == "fixture" and not args.params:
        raise UsageError("fixture needs a name")
    elif args.kind not in ("chain", "boolean", "zn", "fixture"):
        raise UsageError(f"unknown kind {args.kind!r}; use chain, boolean, zn, fixture or product")
    M = _load(spec)
    out.write(emit_mlat(M))
    return 0


def cmd_search(args, out):
    try:
        config = EnumerationConfig(args.max_n, require_reduced=args.reduced, min_n=args.min_n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    try:
        res = search(config, args.predicate)
    except UnknownPredicate as e:
        raise UsageError(e.args[0]) from None
    if res.found is None:
        print(f"none found ({res.examined} structures examined)", file=out)
        return 0
    print(f"# found after {res.examined} structures; witness "
          + " ".join(map(str, res.witness)), file=out)
    out.write(emit_mlat(res.found))
    return 1


def cmd_export_dot(args, out):
    out.write(emit_dot(_load(args.file)))
    return 0


LATTICE_HELP = ("MLAT file, fixture name (C1 C2 C3 B2 N4 Z30), chain:K, boolean:K, "
                "zn:N or A*B")


def build_parser():
    p = argparse.ArgumentParser(prog="baerlat",
                                description="Baer elements in finite multiplicative lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, elt=False):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", metavar="FILE", help=LATTICE_HELP)
        if elt:
            sp.add_argument("element", metavar="ELT", help="element name or index")
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "parse and validate a lattice")
    add("info", cmd_info, "summary properties")
    add("baer", cmd_baer, "list the Baer elements")
    add("closure", cmd_closure, "Baer closure and d-closure of an element", elt=True)
    add("radical", cmd_radical, "radical of an element", elt=True)
    add("annihilator", cmd_annihilator, "annihilator of an element", elt=True)
    add("frame", cmd_frame, "emit the frame of Baer elements as MLAT")
    c = add("check", cmd_check, "run the theorem checks")
    c.add_argument("--only", action="append", metavar="T..",
                   help="check id or prefix (repeatable, comma separated)")
    c.add_argument("--json", action="store_true", help="JSON report")
    add("export-dot", cmd_export_dot, "Hasse diagram in Graphviz DOT")

    g = sub.add_parser("gen", help="generate a lattice as MLAT")
    g.add_argument("kind", metavar="KIND", help="chain, boolean, zn, fixture or product")
    g.add_argument("params", metavar="PARAMS", nargs="*")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("search", help="search small lattices for a property")
    s.add_argument("--max-n", type=int, required=True, metavar="K", help=f"1..{MAX_N}")
    s.add_argument("--min-n", type=int, default=None)
    s.add_argument("--predicate", required=True, metavar="NAME")
    s.add_argument("--reduced", action="store_true", help="only reduced structures")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
