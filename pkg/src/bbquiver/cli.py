"""Command-line interface.

Exit status: 0 on success, 1 when an input fails validation (axioms,
bracket conditions, endomorphism sets), 2 for usage or parse errors.
File arguments accept a path or ``builtin:<name>`` for a bundled fixture.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import AxiomError, FormatError, parse_biquandle, verify_axioms
from .bracket import (
    BracketError,
    format_multiset,
    iter_brackets,
    make_bracket,
    parse_bracket,
    state_sums,
    verify_bracket,
)
from .diagram import DiagramError, parse_diagram
from .homset import enumerate_colorings
from .quiver import (
    QuiverError,
    arrow_polynomial,
    build_bracket_quiver,
    build_coloring_quiver,
    export_dot,
    export_json,
    in_degree_polynomial,
    vertex_polynomial,
)
from .ring import canonical_string


class UsageError(Exception):
    pass


class ValidationFailure(Exception):
    pass


def _read(arg: str) -> tuple[str, str]:
    if arg.startswith("builtin:"):
        from .fixtures import fixture_text

        name = arg[len("builtin:"):]
        try:
            return fixture_text(name), arg
        except (FileNotFoundError, OSError):
            raise UsageError(f"no bundled fixture named {name!r}") from None
    try:
        return Path(arg).read_text(), arg
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror or exc}") from None


def _biquandle(args):
    if not args.biquandle:
        raise UsageError("--biquandle is required")
    text, src = _read(args.biquandle)
    try:
        return parse_biquandle(text, source=src)
    except AxiomError as exc:
        raise ValidationFailure(f"{src}: {exc}") from None


def _diagram(args):
    if not args.diagram:
        raise UsageError("--diagram is required")
    text, src = _read(args.diagram)
    return parse_diagram(text, source=src)


def _bracket(args, b):
    if not args.bracket:
        raise UsageError("--bracket is required")
    text, src = _read(args.bracket)
    ring, A, B = parse_bracket(text, source=src)
    if args.modulus is not None and args.modulus != ring.modulus:
        raise UsageError(f"--modulus {args.modulus} disagrees with N={ring.modulus} in {src}")
    try:
        return make_bracket(b, ring, A, B)
    except BracketError as exc:
        raise ValidationFailure(f"{src}: {exc}") from None


def _endos(args, b):
    which = args.quiver or "full"
    if which.startswith("@"):
        text, src = _read(which[1:])
        tables = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                tables.append([int(t) for t in line.replace(",", " ").split()])
            except ValueError:
                raise FormatError(f"non-integer token in {line!r}", lineno, src) from None
        return tables
    if which not in ("full", "identity"):
        raise UsageError(f"--quiver must be full, identity or @FILE, not {which!r}")
    return which


def _emit(args, payload, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --- subcommands -----------------------------------------------------------


def cmd_check_biquandle(args):
    target = args.file or args.biquandle
    if not target:
        raise UsageError("a biquandle file is required")
    text, src = _read(target)
    b = parse_biquandle(text, source=src, validate=False)
    report = verify_axioms(b.under, b.over)
    payload = {
        "ok": report.ok,
        "size": b.size,
        "violations": [{"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail} for v in report.violations],
    }
    _emit(args, payload, "OK" if report.ok else report.render())
    return 0 if report.ok else 1


def cmd_check_bracket(args):
    b = _biquandle(args)
    if not args.bracket:
        raise UsageError("--bracket is required")
    text, src = _read(args.bracket)
    ring, A, B = parse_bracket(text, source=src)
    report = verify_bracket(b, ring, A, B)
    payload = {
        "ok": report.ok,
        "delta": None if report.delta is None else report.delta.value,
        "w": None if report.w is None else report.w.value,
        "violations": [{"condition": v.condition, "witness": list(v.witness), "detail": v.detail}
                       for v in report.violations],
    }
    _emit(args, payload, report.render())
    return 0 if report.ok else 1


def cmd_count(args):
    b, d = _biquandle(args), _diagram(args)
    n = len(enumerate_colorings(d, b))
    _emit(args, {"count": n}, str(n))
    return 0


def cmd_homset(args):
    b, d = _biquandle(args), _diagram(args)
    hs = enumerate_colorings(d, b)
    _emit(args, {"colorings": [list(c.colors) for c in hs]}, "".join(f"{c}\n" for c in hs) or "\n")
    return 0


def cmd_quiver(args):
    b, d = _biquandle(args), _diagram(args)
    q = build_coloring_quiver(d, b, _endos(args, b))
    sys.stdout.write(export_json(q) if args.format == "json" else export_dot(q))
    return 0


def cmd_bracket(args):
    b, d = _biquandle(args), _diagram(args)
    bb = _bracket(args, b)
    hs = enumerate_colorings(d, b)
    values = state_sums(d, hs.colorings, bb)
    payload = {"values": [{"colors": list(c.colors), "beta": v.value} for c, v in zip(hs, values)]}
    _emit(args, payload, "".join(f"{c} : {v}\n" for c, v in zip(hs, values)) or "\n")
    return 0


def cmd_bracket_multiset(args):
    b, d = _biquandle(args), _diagram(args)
    bb = _bracket(args, b)
    hs = enumerate_colorings(d, b)
    values = sorted(v.value for v in state_sums(d, hs.colorings, bb))
    _emit(args, {"multiset": values}, format_multiset(values))
    return 0


def _bracket_quiver(args):
    b, d = _biquandle(args), _diagram(args)
    bb = _bracket(args, b)
    return build_bracket_quiver(d, b, bb, _endos(args, b))


def cmd_bracket_quiver(args):
    bq = _bracket_quiver(args)
    sys.stdout.write(export_json(bq) if args.format == "json" else export_dot(bq))
    return 0


def _poly_payload(p):
    return {
        "polynomial": canonical_string(p),
        "variables": list(p.variables),
        "terms": [{"exponents": list(k), "coefficient": v} for k, v in sorted(p.terms.items())],
    }


def cmd_arrow_poly(args):
    p = arrow_polynomial(_bracket_quiver(args))
    _emit(args, _poly_payload(p), canonical_string(p))
    return 0


def cmd_vertex_poly(args):
    p = vertex_polynomial(_bracket_quiver(args))
    _emit(args, _poly_payload(p), canonical_string(p))
    return 0


def cmd_indeg_poly(args):
    b, d = _biquandle(args), _diagram(args)
    p = in_degree_polynomial(build_coloring_quiver(d, b, _endos(args, b)))
    _emit(args, _poly_payload(p), canonical_string(p))
    return 0


def cmd_search_brackets(args):
    b = _biquandle(args)
    if args.modulus is None:
        raise UsageError("--modulus is required")
    if args.modulus < 2:
        raise UsageError("--modulus must be at least 2")
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be nonnegative")

    def progress(done, total):
        print(f"[search] {done}/{total} chunks", file=sys.stderr, flush=True)

    count = 0
    for bb in iter_brackets(b, args.modulus, args.limit, progress if args.progress else None):
        count += 1
        if args.json:
            print(json.dumps({"A": [list(r) for r in bb.a], "B": [list(r) for r in bb.b],
                              "delta": bb.delta.value, "w": bb.w.value}, sort_keys=True), flush=True)
        else:
            a = ";".join(" ".join(map(str, r)) for r in bb.a)
            bt = ";".join(" ".join(map(str, r)) for r in bb.b)
            print(f"A={a} B={bt} delta={bb.delta} w={bb.w}", flush=True)
    if args.progress:
        print(f"[search] {count} brackets", file=sys.stderr)
    return 0


COMMANDS = {
    "check-biquandle": (cmd_check_biquandle, "verify the biquandle axioms"),
    "check-bracket": (cmd_check_bracket, "verify a bracket over a biquandle"),
    "count": (cmd_count, "number of colorings"),
    "homset": (cmd_homset, "list colorings"),
    "quiver": (cmd_quiver, "coloring quiver as DOT or JSON"),
    "bracket": (cmd_bracket, "state sum of each coloring"),
    "bracket-multiset": (cmd_bracket_multiset, "multiset of state sums"),
    "bracket-quiver": (cmd_bracket_quiver, "bracket-weighted quiver as DOT or JSON"),
    "arrow-poly": (cmd_arrow_poly, "arrow polynomial of the bracket quiver"),
    "vertex-poly": (cmd_vertex_poly, "vertex polynomial of the bracket quiver"),
    "indeg-poly": (cmd_indeg_poly, "in-degree polynomial of the coloring quiver"),
    "search-brackets": (cmd_search_brackets, "exhaustive bracket search"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--biquandle", metavar="FILE")
    common.add_argument("--diagram", metavar="FILE")
    common.add_argument("--bracket", metavar="FILE")
    common.add_argument("--quiver", metavar="full|identity|@FILE", default="full",
                        help="endomorphism set for quiver commands")
    common.add_argument("--format", choices=("dot", "json"), default="dot")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--modulus", type=int)
    common.add_argument("--limit", type=int)
    common.add_argument("--progress", action="store_true")
    common.add_argument("--seed", type=int, help="accepted for interface stability; all algorithms are deterministic")

    parser = argparse.ArgumentParser(prog="bbquiver", description="biquandle colorings, brackets and quivers")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "check-biquandle":
            p.add_argument("file", nargs="?")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fn = COMMANDS[args.command][0]
    try:
        return fn(args)
    except (UsageError, FormatError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValidationFailure, QuiverError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
