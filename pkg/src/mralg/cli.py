"""Command-line entry point.

Exit status: 0 when everything checked holds, 1 on axiom violations or a
failed construction, 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import axioms as ax
from . import signed as sg
from .boolean import Universe
from .collapse import CollapseError, build_quotient, check_implication_lattice
from .formats import FormatError, dumps, export_dot, export_quotient_dot, filter_doc, \
    interval_doc, read_doc, signed_doc, structure_from_doc, table_doc, write_doc
from .reconstruct import ReconstructionError, reconstruct_iso
from .search import SearchConfig, search_models

OK, VIOLATION, BAD_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_elems(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated element names, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mralg", description="Finite MR-algebra workbench.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a structure file")
    g.add_argument("kind", choices=["signed", "interval", "filter"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--f", type=_parse_elems, default=None, help="filter generator, e.g. 1,3")
    g.add_argument("--table", action="store_true", help="write expanded operation tables")
    g.add_argument("-o", "--output", required=True)

    c = sub.add_parser("check", help="run an axiom suite")
    c.add_argument("suite", choices=["cubic", "mr", "caret", "caret-extra", "thm-mr", "p-freedom"])
    c.add_argument("file")
    c.add_argument("--json", action="store_true")

    s = sub.add_parser("search", help="find all finite models of the caret axioms")
    s.add_argument("--max-size", type=int, default=6)
    s.add_argument("--extra", action="store_true", help="include axiom (i)")
    s.add_argument("--parallel", action="store_true")
    s.add_argument("--timeout", type=float, default=None, help="seconds per size")

    q = sub.add_parser("collapse", help="build the quotient by ~")
    q.add_argument("file")
    q.add_argument("-o", "--output", required=True)

    r = sub.add_parser("reconstruct", help="map a finite MR-algebra onto a cube")
    r.add_argument("file")
    r.add_argument("-o", "--output", required=True)
    r.add_argument("--all-v0", action="store_true", help="verify every base vertex")

    d = sub.add_parser("export-dot", help="Hasse diagram in Graphviz format")
    d.add_argument("file")
    d.add_argument("-o", "--output", required=True)
    d.add_argument("--quotient", action="store_true")

    m = sub.add_parser("compose", help="tabulate A o B against A ^ Delta(1, B)")
    m.add_argument("--n", type=int, required=True)
    return p


def _gen(args, out):
    if args.kind == "filter":
        if args.f is None:
            raise FormatError("gen filter needs --f")
        doc = filter_doc(args.n, args.f)
    elif args.f is not None:
        raise FormatError("--f only applies to gen filter")
    else:
        doc = signed_doc(args.n) if args.kind == "signed" else interval_doc(args.n)
    if args.table:
        doc = table_doc(structure_from_doc(doc))
    write_doc(doc, args.output)
    return OK


def _check(args, out):
    doc = read_doc(args.file)
    s = structure_from_doc(doc)
    suite = args.suite
    if suite == "p-freedom":
        if doc.get("kind") not in ("signed", "interval"):
            raise FormatError("p-freedom needs a signed or interval file")
        reports = [ax.check_p_freedom(Universe(doc["n"]))]
    elif suite in ("caret", "caret-extra"):
        if s.caret is None:
            raise FormatError("structure has no caret table")
        reports = ax.check_caret_axioms(s, include_extra=suite == "caret-extra")
    else:
        if s.delta is None and s.caret is None:
            raise FormatError("structure has neither a delta nor a caret table")
        if suite == "cubic":
            reports = ax.check_cubic(s)
        elif suite == "mr":
            reports = [ax.check_mr_axiom(s)]
        else:
            reports = ax.check_thmMR_conditions(s)
    if args.json:
        out.write(json.dumps([r.to_json() for r in reports]) + "\n")
    else:
        for r in reports:
            out.write(str(r) + "\n")
    return OK if ax.all_passed(reports) else VIOLATION


def _search(args, out):
    try:
        cfg = SearchConfig(args.max_size, args.extra, args.parallel, args.timeout)
    except ValueError as e:
        raise FormatError(str(e)) from None

    def emit(size, model):
        out.write(dumps(table_doc(model)))
        out.flush()

    catalog = search_models(cfg, on_model=emit)
    out.write(catalog.summary() + "\n")
    return OK


def _collapse(args, out):
    s = structure_from_doc(read_doc(args.file))
    try:
        q = build_quotient(s)
    except CollapseError as e:
        out.write(f"collapse failed: {e} {list(e.witness)}\n")
        return VIOLATION
    reports = check_implication_lattice(q)
    write_doc(q.to_json(), args.output)
    out.write(f"{q.size} classes\n")
    for r in reports:
        if not r.passed:
            out.write(str(r) + "\n")
    return OK if ax.all_passed(reports) else VIOLATION


def _reconstruct(args, out):
    s = structure_from_doc(read_doc(args.file))
    try:
        rec = reconstruct_iso(s, all_v0=args.all_v0)
    except ReconstructionError as e:
        out.write(f"reconstruction failed: {e} {list(e.witness)}\n")
        return VIOLATION
    write_doc(rec.to_json(), args.output)
    out.write(f"isomorphic to the face lattice of the {rec.dim}-cube\n")
    return OK


def _export_dot(args, out):
    s = structure_from_doc(read_doc(args.file))
    if args.quotient:
        try:
            text = export_quotient_dot(build_quotient(s))
        except CollapseError as e:
            out.write(f"collapse failed: {e}\n")
            return VIOLATION
    else:
        text = export_dot(s)
    with open(args.output, "w") as fh:
        fh.write(text)
    return OK


def _compose(args, out):
    u = Universe(args.n)
    elems = sg.enumerate_s(u)
    one = sg.top(u)
    bad = 0
    show = len(elems) <= 9
    if show:
        out.write(f"{'A':<14}{'B':<14}{'A o B':<14}A ^ Delta(1,B)\n")
    for a in elems:
        for b in elems:
            c = sg.compose_s(a, b)
            d = sg.caret_s(a, sg.delta_s(one, b))
            bad += c != d
            if show:
                row = f"{str(a):<14}{str(b):<14}{str(c):<14}{str(d)}"
                out.write(row + ("" if c == d else "  MISMATCH") + "\n")
    out.write(f"{len(elems) ** 2} pairs, {bad} mismatches\n")
    return OK if bad == 0 else VIOLATION


COMMANDS = {"gen": _gen, "check": _check, "search": _search, "collapse": _collapse,
            "reconstruct": _reconstruct, "export-dot": _export_dot, "compose": _compose}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError, argparse.ArgumentTypeError) as e:
        print(f"mralg: error: {e}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
